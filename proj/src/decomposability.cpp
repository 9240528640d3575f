#include "flagforge/decomposability.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "flagforge/errors.hpp"

namespace flagforge {

namespace {

struct FacetKeyHash {
    std::size_t operator()(const std::vector<VertexSet>& key) const noexcept {
        std::size_t h = key.size();
        for (VertexSet f : key) h ^= std::hash<VertexSet>{}(f) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

// Per-call memo: facet list -> witness (nullptr records a known failure).
using Memo = std::unordered_map<std::vector<VertexSet>, ShedTreePtr, FacetKeyHash>;

ShedTreePtr decompose(const SimplicialComplex& c, Memo& memo);

ShedTreePtr try_shedding(const SimplicialComplex& c, int v, Memo& memo) {
    const SimplicialComplex lk = link(c, bit(v));
    if (!is_pure(lk)) return nullptr;
    const SimplicialComplex del = deletion(c, bit(v));
    if (!is_pure(del)) return nullptr;
    ShedTreePtr lk_tree = decompose(lk, memo);
    if (!lk_tree) return nullptr;
    ShedTreePtr del_tree = decompose(del, memo);
    if (!del_tree) return nullptr;
    return std::make_shared<const ShedTree>(ShedTree{v, std::move(lk_tree), std::move(del_tree)});
}

ShedTreePtr decompose(const SimplicialComplex& c, Memo& memo) {
    if (c.is_simplex()) {
        static const ShedTreePtr leaf = std::make_shared<const ShedTree>();
        return leaf;
    }
    if (auto it = memo.find(c.facets()); it != memo.end()) return it->second;

    ShedTreePtr found;
    const VertexSet verts = c.vertices();
    for (int v = 0; v < c.ground_size() && !found; ++v) {
        if (contains(verts, v)) found = try_shedding(c, v, memo);
    }
    memo.emplace(c.facets(), found);
    return found;
}

}  // namespace

ShedTreePtr vertex_decomposition(const SimplicialComplex& c) {
    if (c.is_void()) throw DomainError("vertex-decomposability of the void complex is undefined");
    if (!is_pure(c)) throw DomainError("vertex-decomposability is defined for pure complexes only");
    Memo memo;
    return decompose(c, memo);
}

bool is_shedding_vertex(const SimplicialComplex& c, int v) {
    if (c.is_void() || !is_pure(c)) throw DomainError("shedding vertices are defined for pure complexes only");
    if (v < 0 || v >= c.ground_size() || !contains(c.vertices(), v)) return false;
    Memo memo;
    return try_shedding(c, v, memo) != nullptr;
}

bool verify_shed_tree(const SimplicialComplex& c, const ShedTree& tree) {
    if (c.is_void() || !is_pure(c)) return false;
    if (tree.is_simplex()) return c.is_simplex();
    if (tree.vertex >= c.ground_size() || !contains(c.vertices(), tree.vertex)) return false;
    if (!tree.link || !tree.deletion) return false;
    return verify_shed_tree(link(c, bit(tree.vertex)), *tree.link) &&
           verify_shed_tree(deletion(c, bit(tree.vertex)), *tree.deletion);
}

IntervalPartitioning whisker_partitioning(const Graph& g, const CliquePartition& pi) {
    if (auto bad = validate_partition(g, pi)) throw DomainError("invalid clique partition: " + bad->message);
    const int n = g.order();
    const int t = pi.block_count();
    if (n + t > kMaxVertices) throw DomainError("whiskered graph exceeds the vertex cap");

    IntervalPartitioning out;
    out.ground_size = n + t;
    for (const auto& level : independence_complex(g).faces_by_size()) {
        for (VertexSet independent : level) {
            VertexSet completion = independent;
            for (int i = 0; i < t; ++i)
                if ((pi.cliques[i] & independent) == 0) completion |= bit(n + i);
            out.intervals.push_back({independent, completion});
        }
    }
    return out;
}

std::optional<std::string> validate_partitioning(const SimplicialComplex& c, const IntervalPartitioning& p) {
    if (c.is_void()) return "the void complex has no faces to partition";
    if (p.ground_size != c.ground_size()) return "ground sets differ";
    const auto& facets = c.facets();
    std::map<VertexSet, int> hits;
    for (const auto& level : c.faces_by_size())
        for (VertexSet f : level) hits[f] = 0;

    for (const Interval& iv : p.intervals) {
        if (!is_subset(iv.lower, iv.upper)) return "interval lower end is not contained in its upper end";
        if (!std::binary_search(facets.begin(), facets.end(), iv.upper)) return "interval upper end is not a facet";
        std::optional<std::string> problem;
        for_each_subset(iv.upper & ~iv.lower, [&](VertexSet extra) {
            if (problem) return;
            auto it = hits.find(iv.lower | extra);
            if (it == hits.end()) {
                problem = "interval contains a non-face";
            } else if (++it->second > 1) {
                problem = "intervals overlap";
            }
        });
        if (problem) return problem;
    }
    for (const auto& [face, count] : hits)
        if (count == 0) return "some face lies in no interval";
    return std::nullopt;
}

IntVector h_from_partitioning(const IntervalPartitioning& p, int d) {
    if (d < 0) throw DomainError("negative facet size");
    IntVector h(static_cast<std::size_t>(d) + 1, 0);
    for (const Interval& iv : p.intervals) {
        if (popcount(iv.upper) != d) throw DomainError("partitioning of an impure complex");
        ++h[popcount(iv.lower)];
    }
    return h;
}

}  // namespace flagforge
