#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "flagforge/errors.hpp"
#include "flagforge/search.hpp"

namespace flagforge {

namespace {

using Predicate = bool (*)(const Graph&);

// Every graph on n vertices is some graph on n - 1 vertices plus one vertex,
// so extending each class representative by every neighborhood reaches all
// classes of a hereditary family.
std::vector<Graph> extend_classes(const std::vector<Graph>& previous, int n, Predicate keep) {
    std::map<std::vector<VertexSet>, Graph> seen;
    for (const Graph& base : previous) {
        const VertexSet all = low_bits(n - 1);
        for_each_subset(all, [&](VertexSet nbrs) {
            std::vector<VertexSet> rows(base.adjacency());
            rows.push_back(nbrs);
            for_each_vertex(nbrs, [&](int u) { rows[static_cast<std::size_t>(u)] |= bit(n - 1); });
            const Graph g = Graph::from_adjacency(std::move(rows));
            if (keep && !keep(g)) return;
            CanonicalForm form = canonical_form(g);
            if (seen.count(form.rows)) return;
            seen.emplace(form.rows, Graph::from_adjacency(form.rows));
        });
    }
    std::vector<Graph> out;
    out.reserve(seen.size());
    for (auto& [rows, g] : seen) out.push_back(std::move(g));
    return out;
}

struct ClassCache {
    std::mutex mutex;
    std::vector<std::unique_ptr<const std::vector<Graph>>> levels;
};

const std::vector<Graph>& cached_classes(ClassCache& cache, int n, Predicate keep) {
    std::lock_guard<std::mutex> lock(cache.mutex);
    while (static_cast<int>(cache.levels.size()) <= n) {
        const int m = static_cast<int>(cache.levels.size());
        if (m == 0)
            cache.levels.push_back(std::make_unique<const std::vector<Graph>>(std::vector<Graph>{Graph(0)}));
        else
            cache.levels.push_back(std::make_unique<const std::vector<Graph>>(extend_classes(*cache.levels.back(), m, keep)));
    }
    return *cache.levels[static_cast<std::size_t>(n)];
}

void check_order(int n, int cap, const char* what) {
    if (n < 0) throw DomainError("negative vertex count");
    if (n > cap)
        throw BudgetExceeded(std::string(what) + " enumeration on " + std::to_string(n) + " vertices exceeds the cap of " +
                             std::to_string(cap));
}

}  // namespace

const std::vector<Graph>& graph_classes(int n, const Budget& budget) {
    check_order(n, budget.dedup_vertices, "isomorphism-class");
    static ClassCache cache;
    return cached_classes(cache, n, nullptr);
}

const std::vector<Graph>& bipartite_classes(int n, const Budget& budget) {
    check_order(n, budget.bipartite_vertices, "bipartite");
    static ClassCache cache;
    return cached_classes(cache, n, [](const Graph& g) { return is_bipartite(g); });
}

void for_each_graph(int n, bool dedup, const std::function<bool(const Graph&)>& fn, const Budget& budget) {
    if (dedup) {
        for (const Graph& g : graph_classes(n, budget))
            if (fn(g)) return;
        return;
    }
    check_order(n, budget.labeled_vertices, "labeled graph");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<VertexSet> rows(static_cast<std::size_t>(n), 0);
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            if ((mask >> k) & 1U) {
                rows[static_cast<std::size_t>(pairs[k].first)] |= bit(pairs[k].second);
                rows[static_cast<std::size_t>(pairs[k].second)] |= bit(pairs[k].first);
            }
        }
        if (fn(Graph::from_adjacency(std::move(rows)))) return;
    }
}

std::vector<Graph> enumerate_graphs(int n, bool dedup, const Budget& budget) {
    if (dedup) return graph_classes(n, budget);
    std::vector<Graph> out;
    for_each_graph(n, false, [&](const Graph& g) {
        out.push_back(g);
        return false;
    }, budget);
    return out;
}

}  // namespace flagforge
