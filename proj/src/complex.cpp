#include "flagforge/complex.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>
#include <unordered_set>

#include "checked.hpp"
#include "flagforge/errors.hpp"

namespace flagforge {

using detail::checked_add;
using detail::checked_mul;

IntVector strip_trailing_zeros(IntVector v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

IntVector pad_to(IntVector v, std::size_t length) {
    if (v.size() < length) v.resize(length, 0);
    return v;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        // r * (n - k + i) is divisible by i at every step.
        const __int128 next = static_cast<__int128>(r) * (n - k + i) / i;
        if (next > std::numeric_limits<std::int64_t>::max()) throw std::overflow_error("integer overflow in exact arithmetic");
        r = static_cast<std::int64_t>(next);
    }
    return r;
}

namespace {

std::vector<VertexSet> maximal_elements(std::vector<VertexSet> sets) {
    std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
        const int pa = popcount(a), pb = popcount(b);
        return pa != pb ? pa > pb : a < b;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VertexSet> kept;
    for (VertexSet s : sets) {
        const bool covered = std::any_of(kept.begin(), kept.end(), [s](VertexSet k) { return is_subset(s, k); });
        if (!covered) kept.push_back(s);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

void check_ground(int n) {
    if (n < 0 || n > kMaxVertices) throw DomainError("ground set size " + std::to_string(n) + " out of range");
}

}  // namespace

SimplicialComplex SimplicialComplex::void_complex(int n) {
    check_ground(n);
    return SimplicialComplex(n, {});
}

SimplicialComplex SimplicialComplex::empty_complex(int n) {
    check_ground(n);
    return SimplicialComplex(n, {VertexSet{0}});
}

SimplicialComplex SimplicialComplex::simplex(int n, VertexSet face) {
    check_ground(n);
    if (!is_subset(face, low_bits(n))) throw DomainError("simplex face outside ground set");
    return SimplicialComplex(n, {face});
}

SimplicialComplex SimplicialComplex::from_facets(int n, std::vector<VertexSet> facets) {
    check_ground(n);
    for (VertexSet f : facets) {
        if (!is_subset(f, low_bits(n))) throw DomainError("facet outside ground set");
    }
    std::sort(facets.begin(), facets.end());
    if (std::adjacent_find(facets.begin(), facets.end()) != facets.end()) {
        throw DomainError("duplicate facet");
    }
    for (VertexSet a : facets)
        for (VertexSet b : facets)
            if (a != b && is_subset(a, b)) throw DomainError("facets do not form an antichain");
    return SimplicialComplex(n, std::move(facets));
}

SimplicialComplex SimplicialComplex::generated_by(int n, std::vector<VertexSet> faces) {
    check_ground(n);
    for (VertexSet f : faces) {
        if (!is_subset(f, low_bits(n))) throw DomainError("face outside ground set");
    }
    return SimplicialComplex(n, maximal_elements(std::move(faces)));
}

VertexSet SimplicialComplex::vertices() const {
    VertexSet all = 0;
    for (VertexSet f : facets_) all |= f;
    return all;
}

int SimplicialComplex::facet_dimension_count() const {
    if (is_void()) throw DomainError("the void complex has no dimension");
    int d = 0;
    for (VertexSet f : facets_) d = std::max(d, popcount(f));
    return d;
}

bool SimplicialComplex::contains_face(VertexSet s) const {
    return std::any_of(facets_.begin(), facets_.end(), [s](VertexSet f) { return is_subset(s, f); });
}

std::vector<std::vector<VertexSet>> SimplicialComplex::faces_by_size() const {
    if (is_void()) return {};
    std::vector<VertexSet> all;
    for (VertexSet f : facets_) for_each_subset(f, [&](VertexSet s) { all.push_back(s); });
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());

    std::vector<std::vector<VertexSet>> out(static_cast<std::size_t>(facet_dimension_count()) + 1);
    for (VertexSet s : all) out[popcount(s)].push_back(s);
    return out;
}

SimplicialComplex SimplicialComplex::relabeled(int n, const std::vector<int>& map) const {
    std::vector<VertexSet> mapped;
    for (VertexSet f : facets_) {
        VertexSet g = 0;
        for_each_vertex(f, [&](int v) {
            if (v >= static_cast<int>(map.size()) || map[v] < 0 || map[v] >= n) {
                throw DomainError("relabeling does not cover a vertex in use");
            }
            g |= bit(map[v]);
        });
        mapped.push_back(g);
    }
    return generated_by(n, std::move(mapped));
}

SimplicialComplex independence_complex(const Graph& g) {
    const int n = g.order();
    const VertexSet all = g.vertices();
    std::vector<VertexSet> non_adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) non_adj[v] = all & ~g.neighbors(v) & ~bit(v);

    // Bron-Kerbosch with pivoting on the complement graph: maximal cliques
    // there are maximal independent sets here.
    std::vector<VertexSet> facets;
    auto expand = [&](auto&& self, VertexSet r, VertexSet p, VertexSet x) -> void {
        if (p == 0) {
            if (x == 0) facets.push_back(r);
            return;
        }
        int pivot = -1, best = -1;
        for_each_vertex(p | x, [&](int u) {
            const int c = popcount(p & non_adj[u]);
            if (c > best) best = c, pivot = u;
        });
        for_each_vertex(p & ~non_adj[pivot], [&](int v) {
            self(self, r | bit(v), p & non_adj[v], x & non_adj[v]);
            p &= ~bit(v);
            x |= bit(v);
        });
    };
    expand(expand, 0, all, 0);
    return SimplicialComplex::from_facets(n, std::move(facets));
}

IntVector f_vector(const SimplicialComplex& c) {
    if (c.is_void()) throw DomainError("f-vector of the void complex is undefined");
    if (c.is_simplex()) {
        const int d = popcount(c.facets().front());
        IntVector f;
        for (int k = 0; k <= d; ++k) f.push_back(binomial(d, k));
        return f;
    }
    IntVector f;
    for (const auto& level : c.faces_by_size()) f.push_back(static_cast<std::int64_t>(level.size()));
    return f;
}

IntVector h_from_f(const IntVector& f) {
    if (f.empty()) throw DomainError("empty f-vector");
    const auto d = static_cast<std::int64_t>(f.size()) - 1;
    IntVector h(f.size(), 0);
    for (std::int64_t j = 0; j <= d; ++j) {
        std::int64_t acc = 0;
        for (std::int64_t i = 0; i <= j; ++i) {
            const std::int64_t term = checked_mul(binomial(d - i, j - i), f[i]);
            acc = ((j - i) % 2 == 0) ? checked_add(acc, term) : checked_add(acc, -term);
        }
        h[j] = acc;
    }
    return h;
}

IntVector h_vector(const SimplicialComplex& c) { return h_from_f(f_vector(c)); }

IntVector f_from_h(const IntVector& h) {
    if (h.empty()) throw DomainError("empty h-vector");
    const auto d = static_cast<std::int64_t>(h.size()) - 1;
    IntVector f(h.size(), 0);
    for (std::int64_t j = 0; j <= d; ++j) {
        std::int64_t acc = 0;
        for (std::int64_t i = 0; i <= j; ++i) acc = checked_add(acc, checked_mul(binomial(d - i, j - i), h[i]));
        f[j] = acc;
    }
    return f;
}

SimplicialComplex link(const SimplicialComplex& c, VertexSet sigma) {
    if (!c.contains_face(sigma)) throw DomainError("link of a set that is not a face");
    std::vector<VertexSet> out;
    for (VertexSet f : c.facets())
        if (is_subset(sigma, f)) out.push_back(f & ~sigma);
    return SimplicialComplex::from_facets(c.ground_size(), std::move(out));
}

SimplicialComplex deletion(const SimplicialComplex& c, VertexSet sigma) {
    if (sigma == 0) throw DomainError("deletion of the empty face");
    if (!is_subset(sigma, low_bits(c.ground_size()))) throw DomainError("deletion of a set outside the ground set");
    std::vector<VertexSet> gens;
    for (VertexSet f : c.facets()) {
        if (!is_subset(sigma, f)) {
            gens.push_back(f);
        } else {
            for_each_vertex(sigma, [&](int v) { gens.push_back(f & ~bit(v)); });
        }
    }
    return SimplicialComplex::generated_by(c.ground_size(), std::move(gens));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    const int n = a.ground_size() + b.ground_size();
    if (n > kMaxVertices) throw DomainError("join exceeds the vertex cap");
    if (a.is_void() || b.is_void()) return SimplicialComplex::void_complex(n);
    std::vector<VertexSet> facets;
    for (VertexSet f : a.facets())
        for (VertexSet g : b.facets()) facets.push_back(f | (g << a.ground_size()));
    return SimplicialComplex::from_facets(n, std::move(facets));
}

bool is_pure(const SimplicialComplex& c) {
    if (c.is_void()) throw DomainError("purity of the void complex is undefined");
    const int d = popcount(c.facets().front());
    return std::all_of(c.facets().begin(), c.facets().end(), [d](VertexSet f) { return popcount(f) == d; });
}

std::vector<VertexSet> stanley_reisner_generators(const SimplicialComplex& c) {
    if (c.is_void()) throw DomainError("Stanley-Reisner ideal of the void complex is the unit ideal");
    const VertexSet ground = low_bits(c.ground_size());
    std::unordered_set<VertexSet> faces;
    for (const auto& level : c.faces_by_size()) faces.insert(level.begin(), level.end());

    // Every minimal non-face is τ ∪ {v} for some face τ.
    std::set<VertexSet> minimal;
    for (VertexSet tau : faces) {
        for_each_vertex(ground & ~tau, [&](int v) {
            const VertexSet sigma = tau | bit(v);
            if (faces.contains(sigma)) return;
            bool all_facets_present = true;
            for_each_vertex(sigma, [&](int u) { all_facets_present = all_facets_present && faces.contains(sigma & ~bit(u)); });
            if (all_facets_present) minimal.insert(sigma);
        });
    }
    std::vector<VertexSet> out(minimal.begin(), minimal.end());
    std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
        const int pa = popcount(a), pb = popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    return out;
}

bool is_flag(const SimplicialComplex& c) {
    const auto gens = stanley_reisner_generators(c);
    return std::all_of(gens.begin(), gens.end(), [](VertexSet s) { return popcount(s) == 2; });
}

IntVector polynomial_product(const IntVector& a, const IntVector& b) {
    if (a.empty() || b.empty()) return {};
    IntVector out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = checked_add(out[i + j], checked_mul(a[i], b[j]));
    return out;
}

IntVector hilbert_numerator(const SimplicialComplex& c) {
    const IntVector f = f_vector(c);
    const int d = static_cast<int>(f.size()) - 1;
    IntVector numerator(static_cast<std::size_t>(d) + 1, 0);
    for (int k = 0; k <= d; ++k) {
        // f_{k-1} t^k (1 - t)^(d - k)
        IntVector term(static_cast<std::size_t>(k) + 1, 0);
        term[k] = f[k];
        IntVector one_minus_t_power;
        for (int i = 0; i <= d - k; ++i) one_minus_t_power.push_back((i % 2 == 0 ? 1 : -1) * binomial(d - k, i));
        const IntVector product = polynomial_product(term, one_minus_t_power);
        for (std::size_t i = 0; i < product.size(); ++i) numerator[i] = checked_add(numerator[i], product[i]);
    }
    return numerator;
}

Graph graph_of_flag_complex(const SimplicialComplex& c) {
    std::vector<Edge> edges;
    for (VertexSet s : stanley_reisner_generators(c)) {
        if (popcount(s) == 2) {
            const auto v = to_indices(s);
            edges.emplace_back(v[0], v[1]);
        }
    }
    return Graph::from_edges(c.ground_size(), edges);
}

}  // namespace flagforge
