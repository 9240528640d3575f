#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "flagforge/complex.hpp"
#include "flagforge/graph.hpp"

namespace flagforge {

struct ShedTree;
using ShedTreePtr = std::shared_ptr<const ShedTree>;

/**
 * Witness of vertex-decomposability. A leaf certifies a simplex; an inner
 * node names a shedding vertex and the witnesses for its link and deletion.
 * Subtrees are shared when the same subcomplex is reached twice.
 */
struct ShedTree {
    int vertex = -1;  // -1 marks a simplex leaf
    ShedTreePtr link;
    ShedTreePtr deletion;

    bool is_simplex() const { return vertex < 0; }
};

/// Witness tree when Δ is vertex-decomposable, nullptr otherwise.
/// Vertices are tried in ascending order. DomainError on void or non-pure input.
ShedTreePtr vertex_decomposition(const SimplicialComplex& c);

inline bool is_vertex_decomposable(const SimplicialComplex& c) { return vertex_decomposition(c) != nullptr; }

/// True when link and deletion of v are both pure and vertex-decomposable.
bool is_shedding_vertex(const SimplicialComplex& c, int v);

/// Replays the tree against Δ: every intermediate complex pure, every leaf a simplex.
bool verify_shed_tree(const SimplicialComplex& c, const ShedTree& tree);

struct Interval {
    VertexSet lower = 0;
    VertexSet upper = 0;
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Faces of a complex written as a disjoint union of intervals [lower, upper] with facet uppers.
struct IntervalPartitioning {
    int ground_size = 0;
    std::vector<Interval> intervals;
};

/// Intervals [I, Î] over the independent sets I of g, where Î adds the whisker
/// vertex of every block of π missed by I. Lives on the vertex set of g^π
/// (whisker i has index g.order() + i). DomainError on an invalid partition.
IntervalPartitioning whisker_partitioning(const Graph& g, const CliquePartition& pi);

/// nullopt when p partitions the faces of Δ into intervals topped by facets; otherwise the reason.
std::optional<std::string> validate_partitioning(const SimplicialComplex& c, const IntervalPartitioning& p);

/// h_i = number of intervals whose lower end has i vertices. Every upper end must have d vertices.
IntVector h_from_partitioning(const IntervalPartitioning& p, int d);

}  // namespace flagforge
