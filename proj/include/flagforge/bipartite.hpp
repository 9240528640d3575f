#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "flagforge/budget.hpp"
#include "flagforge/complex.hpp"
#include "flagforge/graph.hpp"

namespace flagforge {

/**
 * Matching-plus-transitivity labeling of a bipartite graph: x[i]y[i] is an
 * edge for every i, and x_i y_j, x_j y_k edges (i, j, k distinct) force
 * x_i y_k. z lists the isolated vertices, which are set aside.
 */
struct PureOrder {
    std::vector<int> x;
    std::vector<int> y;
    std::vector<int> z;

    friend bool operator==(const PureOrder&, const PureOrder&) = default;
};

/// Checks every PureOrder invariant against g (sides independent, matching, transitivity, z = isolated).
bool is_valid_pure_order(const Graph& g, const PureOrder& order);

/// Calls fn for every pure order, one per admissible perfect matching, with x
/// in ascending vertex order. Stops early when fn returns true. Disconnected
/// graphs use the sides chosen by bipartition(); flipping a component
/// transposes its relation, which preserves every property checked here.
void for_each_pure_order(const Graph& g, const std::function<bool(const PureOrder&)>& fn);

/// First pure order, or nullopt when none exists. DomainError if g is not bipartite.
std::optional<PureOrder> find_pure_order(const Graph& g);

/// Some i != j with x_i y_j and x_j y_i both edges.
bool has_cross(const Graph& g, const PureOrder& order);

/// Cross-freeness of g, judged on one pure order; nullopt when g has no pure order.
std::optional<bool> is_cross_free(const Graph& g);

/// x_i y_j an edge implies i <= j.
bool is_triangular(const Graph& g, const PureOrder& order);

/// Pure order satisfying the triangularity condition, searched over all
/// admissible matchings and topological orderings of their relation.
std::optional<PureOrder> find_triangular_order(const Graph& g);

/// Three independently computed verdicts that must agree.
struct CmBipartiteReport {
    bool cohen_macaulay = false;
    std::optional<PureOrder> certificate;  // triangular order when Cohen-Macaulay
    bool by_triangular_order = false;
    bool by_cross_free = false;
    bool by_homology = false;
};

/// DomainError on non-bipartite input; std::logic_error if the three routes disagree.
CmBipartiteReport is_cm_bipartite(const Graph& g);

/// Structural check for K_{n,n}: two equal sides, all cross edges present, no other vertices.
bool is_balanced_complete_bipartite(const Graph& g);

/// K_{n,n} or Cohen-Macaulay. DomainError on non-bipartite input.
bool is_buchsbaum_bipartite(const Graph& g);

struct Compression {
    Graph graph;      // vertex i stands for the pair x_i y_i of order
    PureOrder order;  // triangular order used
};

/// Contracts every x_i y_i and drops Z: x_i x_j (i < j) is an edge iff x_i y_j is.
/// Afterwards asserts h(Ind g) = f(Ind compressed), padded. DomainError unless g is CM.
Compression compress(const Graph& g);

/// Bipartite double of a base graph: x_i = i, y_i = n + i.
struct Extrusion {
    Graph base;
    /// Bit k belongs to the k-th base edge (i, j), i < j, in lexicographic order:
    /// 0 gives x_i y_j, 1 gives x_j y_i.
    std::uint64_t orientation = 0;
    Graph result;
};

/// The extrusion selected by an orientation word. DomainError if the base is
/// too large or has more than 64 edges.
Extrusion make_extrusion(const Graph& base, std::uint64_t orientation);

struct ExtrusionSearch {
    std::optional<Extrusion> found;
    std::uint64_t candidates_tried = 0;
    std::vector<std::uint64_t> pure_words;  // filled when every candidate is scanned
};

/**
 * Scans orientation words 0, 1, ..., 2^|E| - 1 and reports the first
 * extrusion with a pure independence complex (pure extrusions are cross-free,
 * hence Cohen-Macaulay). With exhaustive set, continues to the end and lists
 * every pure word. BudgetExceeded when 2^|E| exceeds the budget. jobs > 1
 * splits the words across threads; the reported result is the same as with
 * one thread.
 */
ExtrusionSearch search_cm_extrusion(const Graph& g, const Budget& budget, bool exhaustive = false, int jobs = 1);

/// Extrusion orienting every edge from the first side of bipartition() to the second.
Extrusion whisker_extrusion(const Graph& g);

enum class OddHoleVerdict { Confirmed, Inapplicable };

/// Inapplicable without an odd hole; otherwise exhausts the extrusions and
/// confirms none is pure. std::logic_error if one is.
OddHoleVerdict odd_hole_obstruction(const Graph& g, const Budget& budget, int jobs = 1);

}  // namespace flagforge
