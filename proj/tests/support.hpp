#pragma once

// Shared fixtures and brute-force oracles for the test binaries. The oracles
// deliberately avoid the library's algorithms: they enumerate subsets and
// permutations directly.

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "flagforge/bipartite.hpp"
#include "flagforge/complex.hpp"
#include "flagforge/graph.hpp"
#include "flagforge/whiskering.hpp"

namespace testing {

using namespace flagforge;

// u, v, w = 0, 1, 2
inline Graph c3() { return Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}}, {"u", "v", "w"}); }

// G^τ of the triangle: u, v, w and their whiskers x, y, z = 3, 4, 5
inline Graph c3_tau() {
    return Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}}, {"u", "v", "w", "x", "y", "z"});
}

// x1..x3 = 0..2, y1..y3 = 3..5
inline Graph ferrers() {
    return Graph::from_edges(6, {{0, 3}, {0, 4}, {0, 5}, {1, 4}, {1, 5}, {2, 5}}, {"x1", "x2", "x3", "y1", "y2", "y3"});
}

// u, v, w, x, y, z = 0..5
inline Graph graph_h() {
    return Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {0, 4}, {1, 5}},
                             {"u", "v", "w", "x", "y", "z"});
}

inline Graph with_edge(const Graph& g, int u, int v) {
    auto edges = g.edges();
    edges.emplace_back(std::min(u, v), std::max(u, v));
    return Graph::from_edges(g.order(), edges);
}

// ---- complexes ----------------------------------------------------------

inline SimplicialComplex complex_of(int n, std::vector<std::vector<int>> facets) {
    std::vector<VertexSet> sets;
    for (auto& f : facets) {
        VertexSet s = 0;
        for (int v : f) s |= bit(v);
        sets.push_back(s);
    }
    return SimplicialComplex::from_facets(n, sets);
}

// Every subset of {0..n-1} that lies in some facet.
inline std::vector<VertexSet> brute_faces(const SimplicialComplex& c) {
    std::vector<VertexSet> out;
    const int n = c.ground_size();
    for (VertexSet s = 0; s < (VertexSet{1} << n); ++s)
        for (VertexSet f : c.facets())
            if ((s & ~f) == 0) {
                out.push_back(s);
                break;
            }
    return out;
}

inline IntVector brute_f(const SimplicialComplex& c) {
    IntVector f;
    for (VertexSet s : brute_faces(c)) {
        const std::size_t k = static_cast<std::size_t>(popcount(s));
        if (f.size() <= k) f.resize(k + 1, 0);
        ++f[k];
    }
    return f;
}

// f-vector of Ind(g) by testing every vertex subset for independence.
inline IntVector brute_ind_f(const Graph& g) {
    IntVector f;
    const int n = g.order();
    for (VertexSet s = 0; s < (VertexSet{1} << n); ++s) {
        bool independent = true;
        for (int v = 0; v < n && independent; ++v)
            if (contains(s, v) && (g.adjacency()[static_cast<std::size_t>(v)] & s)) independent = false;
        if (!independent) continue;
        const std::size_t k = static_cast<std::size_t>(popcount(s));
        if (f.size() <= k) f.resize(k + 1, 0);
        ++f[k];
    }
    return f;
}

// Evaluates sum_i f_{i-1} (t-1)^{d-i} and sum_k h_k t^{d-k} at t and compares.
inline bool h_matches_f_at(const IntVector& f, const IntVector& h, std::int64_t t) {
    const std::size_t d = f.size() - 1;
    if (h.size() != d + 1) return false;
    auto power = [](std::int64_t b, std::size_t e) {
        std::int64_t r = 1;
        while (e--) r *= b;
        return r;
    };
    std::int64_t lhs = 0, rhs = 0;
    for (std::size_t i = 0; i <= d; ++i) lhs += f[i] * power(t - 1, d - i);
    for (std::size_t k = 0; k <= d; ++k) rhs += h[k] * power(t, d - k);
    return lhs == rhs;
}

// All down-sets of the power set of {0..n-1}, n <= 5, including the void complex.
inline std::vector<SimplicialComplex> all_complexes(int n) {
    const int subsets = 1 << n;
    std::vector<SimplicialComplex> out;
    std::vector<bool> in(static_cast<std::size_t>(subsets), false);
    std::function<void(int)> rec = [&](int s) {
        if (s == subsets) {
            std::vector<VertexSet> faces;
            for (int t = 0; t < subsets; ++t)
                if (in[static_cast<std::size_t>(t)]) faces.push_back(static_cast<VertexSet>(t));
            out.push_back(SimplicialComplex::generated_by(n, faces));
            return;
        }
        rec(s + 1);
        bool allowed = true;
        for (int v = 0; v < n; ++v)
            if ((s >> v) & 1)
                allowed = allowed && in[static_cast<std::size_t>(s & ~(1 << v))];
        if (allowed) {
            in[static_cast<std::size_t>(s)] = true;
            rec(s + 1);
            in[static_cast<std::size_t>(s)] = false;
        }
    };
    rec(0);
    return out;
}

// ---- graphs -------------------------------------------------------------

inline std::vector<Graph> labeled_graphs(int n) {
    std::vector<Edge> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<Edge> edges;
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if ((mask >> k) & 1U) edges.push_back(pairs[k]);
        out.push_back(Graph::from_edges(n, edges));
    }
    return out;
}

// Lexicographically least adjacency-row sequence over all n! relabelings.
inline std::vector<VertexSet> brute_canonical_rows(const Graph& g) {
    const int n = g.order();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<VertexSet> best;
    do {
        std::vector<int> pos(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) pos[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])] = k;
        std::vector<VertexSet> rows(static_cast<std::size_t>(n), 0);
        for (int k = 0; k < n; ++k)
            for (int u = 0; u < n; ++u)
                if (g.adjacent(perm[static_cast<std::size_t>(k)], u)) rows[static_cast<std::size_t>(k)] |= bit(pos[static_cast<std::size_t>(u)]);
        if (best.empty() || rows < best) best = rows;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Set partitions of {0..n-1} into cliques, by restricted growth strings.
inline std::vector<CliquePartition> brute_clique_partitions(const Graph& g) {
    const int n = g.order();
    std::vector<CliquePartition> out;
    std::vector<int> block(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int v, int used) {
        if (v == n) {
            std::vector<VertexSet> cliques(static_cast<std::size_t>(used), 0);
            for (int u = 0; u < n; ++u) cliques[static_cast<std::size_t>(block[static_cast<std::size_t>(u)])] |= bit(u);
            for (VertexSet c : cliques)
                if (!g.is_clique(c)) return;
            out.push_back(CliquePartition{cliques});
            return;
        }
        for (int b = 0; b <= used; ++b) {
            block[static_cast<std::size_t>(v)] = b;
            rec(v + 1, std::max(used, b + 1));
        }
    };
    rec(0, 0);
    return out;
}

// ---- vertex-decomposability --------------------------------------------

// Plain recursion, no memo. With dimension_preserving, the deletion must keep
// the dimension of the complex (the other convention in the literature).
inline bool brute_vd(const SimplicialComplex& c, bool dimension_preserving) {
    if (c.facets().size() == 1) return true;
    const auto facets = c.facets();
    const int d = popcount(facets[0]);
    for (VertexSet f : facets)
        if (popcount(f) != d) return false;
    for (int v = 0; v < c.ground_size(); ++v) {
        if (!contains(c.vertices(), v)) continue;
        std::vector<VertexSet> lk, del;
        for (VertexSet f : facets) {
            if (contains(f, v))
                lk.push_back(f & ~bit(v));
            else
                del.push_back(f);
        }
        if (del.empty()) {
            // v is a cone point; the deletion is the link
            del = lk;
        } else {
            // deletion keeps facets avoiding v plus the maximal faces F \ v not below them
            for (VertexSet g : lk) {
                bool covered = false;
                for (VertexSet f : del) covered = covered || (g & ~f) == 0;
                if (!covered) del.push_back(g);
            }
        }
        const auto lk_c = SimplicialComplex::generated_by(c.ground_size(), lk);
        const auto del_c = SimplicialComplex::generated_by(c.ground_size(), del);
        auto pure = [](const SimplicialComplex& x) {
            const int k = popcount(x.facets()[0]);
            return std::all_of(x.facets().begin(), x.facets().end(), [&](VertexSet f) { return popcount(f) == k; });
        };
        if (!pure(lk_c) || !pure(del_c)) continue;
        if (dimension_preserving && popcount(del_c.facets()[0]) != d) continue;
        if (brute_vd(lk_c, dimension_preserving) && brute_vd(del_c, dimension_preserving)) return true;
    }
    return false;
}

// ---- bipartite ----------------------------------------------------------

// Tries every bijection between the sides and every simultaneous ordering.
struct BrutePureOrders {
    bool pure = false;
    bool triangular = false;
    bool some_cross = false;
    bool some_cross_free = false;
};

inline BrutePureOrders brute_pure_orders(const Graph& g) {
    BrutePureOrders out;
    auto bp = bipartition(g);
    VertexSet z = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.neighbors(v) == 0) z |= bit(v);
    std::vector<int> xs = to_indices(bp->first & ~z), ys = to_indices(bp->second & ~z);
    if (xs.size() != ys.size()) return out;
    const std::size_t n = xs.size();
    std::vector<int> match = ys;
    std::sort(match.begin(), match.end());
    do {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) ok = g.adjacent(xs[i], match[i]);
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j)
                for (std::size_t k = 0; k < n && ok; ++k)
                    if (i != j && j != k && i != k && g.adjacent(xs[i], match[j]) && g.adjacent(xs[j], match[k]))
                        ok = g.adjacent(xs[i], match[k]);
        if (!ok) continue;
        out.pure = true;
        bool cross = false;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && g.adjacent(xs[i], match[j]) && g.adjacent(xs[j], match[i])) cross = true;
        (cross ? out.some_cross : out.some_cross_free) = true;
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        do {
            bool tri = true;
            for (std::size_t a = 0; a < n && tri; ++a)
                for (std::size_t b = 0; b < a && tri; ++b)
                    if (g.adjacent(xs[order[a]], match[order[b]])) tri = false;
            out.triangular = out.triangular || tri;
        } while (!out.triangular && std::next_permutation(order.begin(), order.end()));
    } while (std::next_permutation(match.begin(), match.end()));
    return out;
}

}  // namespace testing
