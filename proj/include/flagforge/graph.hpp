#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flagforge/bits.hpp"

namespace flagforge {

using Edge = std::pair<int, int>;

/**
 * Finite simple graph on vertices 0..n-1, stored as adjacency bitsets.
 *
 * Instances are immutable once built. The vertex count is capped at
 * kMaxVertices so every vertex subset fits into a VertexSet. Labels are
 * display strings only; all arithmetic is on indices.
 */
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    /// Throws DomainError on self-loops, duplicate edges, or out-of-range endpoints.
    static Graph from_edges(int n, const std::vector<Edge>& edges, std::vector<std::string> labels = {});

    /// Builds from symmetric adjacency rows; throws DomainError if asymmetric or looped.
    static Graph from_adjacency(std::vector<VertexSet> rows, std::vector<std::string> labels = {});

    int order() const { return n_; }
    int size() const;  // edge count

    VertexSet vertices() const { return low_bits(n_); }
    VertexSet neighbors(int v) const;
    int degree(int v) const { return popcount(neighbors(v)); }
    bool adjacent(int u, int v) const;

    /// Sorted list of edges (u < v), lexicographic order.
    std::vector<Edge> edges() const;

    const std::vector<VertexSet>& adjacency() const { return adj_; }

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    /// Label of v, or its decimal index when the graph is unlabeled.
    std::string label(int v) const;

    bool is_independent(VertexSet s) const;
    bool is_clique(VertexSet s) const;

    /// Equality of vertex count and edge set; labels are ignored.
    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<std::string> labels_;
};

/// Induced subgraph together with the map back into the parent graph.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> original;  // original[new index] = parent index

    /// Lifts a vertex set of the subgraph back to parent indices.
    VertexSet lift(VertexSet s) const;
};

/// N_G(v). Throws DomainError for an out-of-range vertex.
VertexSet neighborhood(const Graph& g, int v);

/// Subgraph induced on V \ S, or on V \ (S ∪ N(S)) when closed is set.
InducedSubgraph delete_closed(const Graph& g, VertexSet s, bool closed);

/// Subgraph induced on exactly the vertices in keep.
InducedSubgraph induced_subgraph(const Graph& g, VertexSet keep);

/// Ordered list of disjoint cliques covering V; empty cliques are allowed.
struct CliquePartition {
    std::vector<VertexSet> cliques;

    int block_count() const { return static_cast<int>(cliques.size()); }
    friend bool operator==(const CliquePartition&, const CliquePartition&) = default;
};

/// The partition into singletons.
CliquePartition trivial_partition(const Graph& g);

struct PartitionViolation {
    enum class Kind { OutOfRange, Overlap, NotCovering, NotClique };
    Kind kind;
    std::vector<int> witness;
    std::string message;
};

/// Returns nullopt when the partition is valid, otherwise the first violated clause.
std::optional<PartitionViolation> validate_partition(const Graph& g, const CliquePartition& pi);

struct Bipartition {
    VertexSet first = 0;   // isolated vertices land here
    VertexSet second = 0;
};

/// Two-coloring, each component's lowest vertex colored first; nullopt iff there is an odd cycle.
std::optional<Bipartition> bipartition(const Graph& g);

inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

/// Vertex sets of the connected components, ordered by lowest vertex.
std::vector<VertexSet> connected_components(const Graph& g);

/// Some induced odd cycle of length >= 5, listed in cycle order; nullopt if none exists.
std::optional<std::vector<int>> find_odd_hole(const Graph& g);

inline bool has_odd_hole(const Graph& g) { return find_odd_hole(g).has_value(); }

/// Standard families used by fixtures and tests.
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);  // sides 0..a-1 and a..a+b-1
Graph path_graph(int n);

}  // namespace flagforge
