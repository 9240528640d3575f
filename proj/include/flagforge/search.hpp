#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "flagforge/budget.hpp"
#include "flagforge/complex.hpp"
#include "flagforge/graph.hpp"

namespace flagforge {

struct CanonicalForm {
    std::vector<VertexSet> rows;  // adjacency rows of the relabeled graph
    std::vector<int> labeling;    // labeling[k] = input vertex placed at position k
};

/// Isomorphism-invariant form by individualization-refinement: the
/// lexicographically least row sequence over the leaves of the search tree.
/// Two graphs are isomorphic iff their forms have equal rows.
CanonicalForm canonical_form(const Graph& g);

/// The input relabeled by its canonical labeling (labels dropped).
Graph canonical_graph(const Graph& g);

/// graph6 text of a graph (no header, at most 62 vertices).
std::string to_graph6(const Graph& g);
/// ParseError on malformed text.
Graph from_graph6(const std::string& text);

/// One representative per isomorphism class on n vertices, in canonical form,
/// sorted by rows. Cached. BudgetExceeded above budget.dedup_vertices.
const std::vector<Graph>& graph_classes(int n, const Budget& budget = Budget{});

/// Same for bipartite graphs, capped by budget.bipartite_vertices.
const std::vector<Graph>& bipartite_classes(int n, const Budget& budget = Budget{});

/// Streams graphs on n vertices: isomorphism classes when dedup is set,
/// otherwise all 2^C(n,2) labeled graphs in order of their edge bitmask
/// (bit k = k-th pair in lexicographic order). fn returns true to stop.
void for_each_graph(int n, bool dedup, const std::function<bool(const Graph&)>& fn, const Budget& budget = Budget{});

/// Vector form of for_each_graph.
std::vector<Graph> enumerate_graphs(int n, bool dedup, const Budget& budget = Budget{});

/// A graph on f[1] vertices with C(f[1], 2) - f[2] edges whose independence
/// complex has f-vector f (trailing zeros ignored). DomainError unless f[0] = 1.
std::optional<Graph> realize_f_as_flag(const IntVector& f, int n_max, const Budget& budget = Budget{});

struct ScanRecord {
    Graph graph;
    IntVector h;                    // trailing zeros stripped
    std::optional<Graph> realizer;  // none marks a counterexample candidate
    bool cohen_macaulay = false;    // homology oracle on Ind(graph)
};

struct ScanOptions {
    int n_max = 0;
    bool dedup = true;
    bool bipartite_only = false;
    int jobs = 1;
    std::uint64_t limit = 0;  // stop after this many graphs (0 = no limit)
};

/// Result of the h-is-f scan. position counts graphs enumerated so far, over
/// n = 0, 1, ..., n_max in enumeration order; last is the graph6 text of the
/// graph at position - 1.
struct ScanReport {
    ScanOptions options;
    std::uint64_t position = 0;
    std::string last;
    bool complete = false;
    std::uint64_t pure_vd = 0;
    std::vector<ScanRecord> records;           // one per pure vertex-decomposable Ind(G)
    std::vector<std::size_t> counterexamples;  // indices into records
};

/// Scans every graph on at most n_max vertices with pure vertex-decomposable
/// Ind(G), realizing the nonzero part of its h-vector as a flag f-vector.
/// Bipartite scans realize through compress(). Counterexamples are recorded,
/// never thrown. std::logic_error if a pure vertex-decomposable instance fails
/// the homology Cohen-Macaulay check.
ScanReport scan_conjecture(const ScanOptions& options, const Budget& budget = Budget{});

/// Continues a partial report from its position; DomainError if the stored
/// last graph does not match the enumeration.
ScanReport resume_scan(ScanReport partial, std::uint64_t limit = 0, int jobs = 1, const Budget& budget = Budget{});

struct H133Report {
    int n_max = 0;
    std::uint64_t graphs_checked = 0;
    std::optional<Graph> witness;  // a graph with h nonzero part (1,3,3), if any
};

/// Checks whether some graph on at most n_max vertices has h(Ind G) with nonzero part (1,3,3).
H133Report scan_h133(int n_max, const Budget& budget = Budget{});

}  // namespace flagforge
