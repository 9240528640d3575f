#include "flagforge/bipartite.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "flagforge/errors.hpp"
#include "flagforge/homology.hpp"

namespace flagforge {

Budget Budget::from_env() {
    Budget b;
    if (const char* env = std::getenv("FLAGFORGE_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0') b.extrusion_candidates = v;
    }
    return b;
}

namespace {

VertexSet isolated_vertices(const Graph& g) {
    VertexSet z = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.neighbors(v) == 0) z |= bit(v);
    return z;
}

Bipartition require_bipartition(const Graph& g) {
    auto bp = bipartition(g);
    if (!bp) throw DomainError("graph is not bipartite");
    return *bp;
}

// rel[i] = { j : x_i y_j is an edge }, over order indices.
std::vector<std::uint64_t> relation(const Graph& g, const PureOrder& o) {
    const std::size_t n = o.x.size();
    std::vector<std::uint64_t> rel(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (g.adjacent(o.x[i], o.y[j])) rel[i] |= std::uint64_t{1} << j;
    return rel;
}

// x_i y_j, x_j y_k => x_i y_k for distinct i, j, k, restricted to indices in scope.
bool transitive(const std::vector<std::uint64_t>& rel, std::uint64_t scope) {
    for (std::size_t i = 0; i < rel.size(); ++i) {
        if (!((scope >> i) & 1U)) continue;
        const std::uint64_t self = std::uint64_t{1} << i;
        std::uint64_t out = rel[i] & scope & ~self;
        while (out) {
            const int j = std::countr_zero(out);
            out &= out - 1;
            if ((rel[j] & scope & ~self) & ~rel[i]) return false;
        }
    }
    return true;
}

}  // namespace

bool is_valid_pure_order(const Graph& g, const PureOrder& o) {
    if (o.x.size() != o.y.size()) return false;
    VertexSet seen = 0;
    VertexSet xs = 0, ys = 0;
    auto take = [&](int v, VertexSet& side) {
        if (v < 0 || v >= g.order() || contains(seen, v)) return false;
        seen |= bit(v);
        side |= bit(v);
        return true;
    };
    VertexSet zs = 0;
    for (int v : o.x) if (!take(v, xs)) return false;
    for (int v : o.y) if (!take(v, ys)) return false;
    for (int v : o.z) if (!take(v, zs)) return false;
    if (seen != low_bits(g.order())) return false;
    if (zs != isolated_vertices(g)) return false;
    if (!g.is_independent(xs) || !g.is_independent(ys)) return false;
    for (std::size_t i = 0; i < o.x.size(); ++i)
        if (!g.adjacent(o.x[i], o.y[i])) return false;
    return transitive(relation(g, o), o.x.size() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << o.x.size()) - 1);
}

void for_each_pure_order(const Graph& g, const std::function<bool(const PureOrder&)>& fn) {
    const Bipartition bp = require_bipartition(g);
    const VertexSet z = isolated_vertices(g);
    const std::vector<int> xs = to_indices(bp.first & ~z);
    const VertexSet ys = bp.second & ~z;
    if (static_cast<int>(xs.size()) != popcount(ys)) return;
    const std::size_t n = xs.size();

    PureOrder order;
    order.x = xs;
    order.y.assign(n, -1);
    order.z = to_indices(z);
    std::vector<std::uint64_t> rel(n, 0);

    // Assign y partners index by index, keeping the relation on assigned indices transitive.
    std::function<bool(std::size_t, VertexSet)> extend = [&](std::size_t i, VertexSet used) -> bool {
        if (i == n) return fn(order);
        VertexSet options = g.neighbors(xs[i]) & ~used;
        while (options) {
            const int y = std::countr_zero(options);
            options &= options - 1;
            order.y[i] = y;
            for (std::size_t a = 0; a <= i; ++a) {
                rel[a] &= ~(std::uint64_t{1} << i);
                if (g.adjacent(xs[a], y)) rel[a] |= std::uint64_t{1} << i;
                rel[i] &= ~(std::uint64_t{1} << a);
                if (g.adjacent(xs[i], order.y[a])) rel[i] |= std::uint64_t{1} << a;
            }
            const std::uint64_t scope = i + 1 >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << (i + 1)) - 1;
            if (transitive(rel, scope) && extend(i + 1, used | bit(y))) return true;
        }
        order.y[i] = -1;
        return false;
    };
    extend(0, 0);
}

std::optional<PureOrder> find_pure_order(const Graph& g) {
    std::optional<PureOrder> out;
    for_each_pure_order(g, [&](const PureOrder& o) {
        out = o;
        return true;
    });
    return out;
}

bool has_cross(const Graph& g, const PureOrder& o) {
    for (std::size_t i = 0; i < o.x.size(); ++i)
        for (std::size_t j = i + 1; j < o.x.size(); ++j)
            if (g.adjacent(o.x[i], o.y[j]) && g.adjacent(o.x[j], o.y[i])) return true;
    return false;
}

std::optional<bool> is_cross_free(const Graph& g) {
    auto o = find_pure_order(g);
    if (!o) return std::nullopt;
    return !has_cross(g, *o);
}

bool is_triangular(const Graph& g, const PureOrder& o) {
    for (std::size_t i = 0; i < o.x.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (g.adjacent(o.x[i], o.y[j])) return false;
    return true;
}

std::optional<PureOrder> find_triangular_order(const Graph& g) {
    std::optional<PureOrder> out;
    for_each_pure_order(g, [&](const PureOrder& o) {
        // Kahn's algorithm on i -> j iff x_i y_j (i != j); smallest ready index first.
        const std::size_t n = o.x.size();
        const auto rel = relation(g, o);
        std::vector<int> indegree(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && ((rel[i] >> j) & 1U)) ++indegree[j];
        std::vector<std::size_t> sequence;
        std::vector<bool> placed(n, false);
        while (sequence.size() < n) {
            std::size_t next = n;
            for (std::size_t i = 0; i < n; ++i)
                if (!placed[i] && indegree[i] == 0) {
                    next = i;
                    break;
                }
            if (next == n) return false;  // cycle
            placed[next] = true;
            sequence.push_back(next);
            for (std::size_t j = 0; j < n; ++j)
                if (j != next && ((rel[next] >> j) & 1U)) --indegree[j];
        }
        PureOrder t;
        t.z = o.z;
        for (std::size_t i : sequence) {
            t.x.push_back(o.x[i]);
            t.y.push_back(o.y[i]);
        }
        out = std::move(t);
        return true;
    });
    return out;
}

CmBipartiteReport is_cm_bipartite(const Graph& g) {
    require_bipartition(g);
    CmBipartiteReport r;
    r.certificate = find_triangular_order(g);
    r.by_triangular_order = r.certificate.has_value();
    r.by_cross_free = is_cross_free(g).value_or(false);
    r.by_homology = is_cm(independence_complex(g));
    if (r.by_triangular_order != r.by_cross_free || r.by_cross_free != r.by_homology)
        throw std::logic_error("bipartite Cohen-Macaulay verdicts disagree");
    r.cohen_macaulay = r.by_homology;
    return r;
}

bool is_balanced_complete_bipartite(const Graph& g) {
    const Bipartition bp = require_bipartition(g);
    if (g.order() == 0) return true;
    if (isolated_vertices(g)) return false;
    if (popcount(bp.first) != popcount(bp.second)) return false;
    bool complete = true;
    for_each_vertex(bp.first, [&](int v) { complete = complete && g.neighbors(v) == bp.second; });
    return complete;
}

bool is_buchsbaum_bipartite(const Graph& g) {
    return is_balanced_complete_bipartite(g) || is_cm_bipartite(g).cohen_macaulay;
}

Compression compress(const Graph& g) {
    const CmBipartiteReport r = is_cm_bipartite(g);
    if (!r.cohen_macaulay) throw DomainError("compression needs a Cohen-Macaulay bipartite graph");
    const PureOrder& o = *r.certificate;
    const int n = static_cast<int>(o.x.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.adjacent(o.x[i], o.y[j])) edges.emplace_back(i, j);
    std::vector<std::string> labels;
    if (g.has_labels())
        for (int v : o.x) labels.push_back(g.label(v));
    Compression out{Graph::from_edges(n, edges, labels), o};

    const SimplicialComplex ind = independence_complex(g);
    const IntVector h = h_vector(ind);
    if (h != pad_to(f_vector(independence_complex(out.graph)), h.size()))
        throw std::logic_error("compression does not reproduce the h-vector");
    return out;
}

Extrusion make_extrusion(const Graph& base, std::uint64_t orientation) {
    const int n = base.order();
    if (2 * n > kMaxVertices) throw DomainError("extrusion exceeds the vertex cap");
    const auto edges = base.edges();
    if (edges.size() > 64) throw DomainError("extrusion orientation words hold at most 64 edges");
    if (edges.size() < 64 && (orientation >> edges.size()) != 0)
        throw DomainError("orientation word has bits beyond the edge count");
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i) out.emplace_back(i, n + i);
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const auto [i, j] = edges[k];
        if ((orientation >> k) & 1U)
            out.emplace_back(j, n + i);
        else
            out.emplace_back(i, n + j);
    }
    std::vector<std::string> labels;
    if (base.has_labels()) {
        for (int i = 0; i < n; ++i) labels.push_back("x_" + base.label(i));
        for (int i = 0; i < n; ++i) labels.push_back("y_" + base.label(i));
    }
    return Extrusion{base, orientation, Graph::from_edges(2 * n, out, labels)};
}

ExtrusionSearch search_cm_extrusion(const Graph& g, const Budget& budget, bool exhaustive, int jobs) {
    const std::size_t m = g.edges().size();
    if (m >= 64 || (std::uint64_t{1} << m) > budget.extrusion_candidates)
        throw BudgetExceeded("extrusion search needs 2^" + std::to_string(m) + " candidates, budget is " +
                             std::to_string(budget.extrusion_candidates));
    if (2 * g.order() > kMaxVertices) throw DomainError("extrusion exceeds the vertex cap");
    const std::uint64_t total = std::uint64_t{1} << m;
    jobs = std::max(1, jobs);

    constexpr std::uint64_t none = std::numeric_limits<std::uint64_t>::max();
    std::atomic<std::uint64_t> best{none};
    std::vector<std::vector<std::uint64_t>> pure(static_cast<std::size_t>(jobs));

    auto worker = [&](int w) {
        for (std::uint64_t word = static_cast<std::uint64_t>(w); word < total; word += static_cast<std::uint64_t>(jobs)) {
            if (!exhaustive && word > best.load(std::memory_order_relaxed)) return;
            if (!is_pure(independence_complex(make_extrusion(g, word).result))) continue;
            if (exhaustive) pure[static_cast<std::size_t>(w)].push_back(word);
            std::uint64_t current = best.load();
            while (word < current && !best.compare_exchange_weak(current, word)) {
            }
            if (!exhaustive) return;
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
        for (auto& t : threads) t.join();
    }

    ExtrusionSearch out;
    const std::uint64_t first = best.load();
    if (first != none) out.found = make_extrusion(g, first);
    out.candidates_tried = (exhaustive || first == none) ? total : first + 1;
    if (exhaustive) {
        for (auto& part : pure) out.pure_words.insert(out.pure_words.end(), part.begin(), part.end());
        std::sort(out.pure_words.begin(), out.pure_words.end());
    }
    return out;
}

Extrusion whisker_extrusion(const Graph& g) {
    const Bipartition bp = require_bipartition(g);
    const auto edges = g.edges();
    std::uint64_t word = 0;
    if (edges.size() > 64) throw DomainError("extrusion orientation words hold at most 64 edges");
    for (std::size_t k = 0; k < edges.size(); ++k) {
        // Edge (i, j) with i < j: bit 1 points from j to i.
        if (contains(bp.first, edges[k].second)) word |= std::uint64_t{1} << k;
    }
    return make_extrusion(g, word);
}

OddHoleVerdict odd_hole_obstruction(const Graph& g, const Budget& budget, int jobs) {
    if (!has_odd_hole(g)) return OddHoleVerdict::Inapplicable;
    if (search_cm_extrusion(g, budget, false, jobs).found)
        throw std::logic_error("graph with an odd hole has a Cohen-Macaulay extrusion");
    return OddHoleVerdict::Confirmed;
}

}  // namespace flagforge
