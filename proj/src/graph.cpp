#include "flagforge/graph.hpp"

#include <algorithm>
#include <string>

#include "flagforge/errors.hpp"

namespace flagforge {

namespace {

void check_order(int n) {
    if (n < 0 || n > kMaxVertices) {
        throw DomainError("vertex count " + std::to_string(n) + " outside [0, " +
                          std::to_string(kMaxVertices) + "]");
    }
}

void check_labels(int n, const std::vector<std::string>& labels) {
    if (!labels.empty() && static_cast<int>(labels.size()) != n) {
        throw DomainError("label count does not match vertex count");
    }
}

}  // namespace

Graph::Graph(int n) : n_(n) {
    check_order(n);
    adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges, std::vector<std::string> labels) {
    Graph g(n);
    check_labels(n, labels);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw DomainError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range");
        }
        if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
        if (contains(g.adj_[u], v)) {
            throw DomainError("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        }
        g.adj_[u] |= bit(v);
        g.adj_[v] |= bit(u);
    }
    g.labels_ = std::move(labels);
    return g;
}

Graph Graph::from_adjacency(std::vector<VertexSet> rows, std::vector<std::string> labels) {
    const int n = static_cast<int>(rows.size());
    Graph g(n);
    check_labels(n, labels);
    const VertexSet all = low_bits(n);
    for (int u = 0; u < n; ++u) {
        if (!is_subset(rows[u], all)) throw DomainError("adjacency row out of range");
        if (contains(rows[u], u)) throw DomainError("self-loop at vertex " + std::to_string(u));
        for_each_vertex(rows[u], [&](int v) {
            if (!contains(rows[v], u)) throw DomainError("adjacency is not symmetric");
        });
    }
    g.adj_ = std::move(rows);
    g.labels_ = std::move(labels);
    return g;
}

int Graph::size() const {
    int twice = 0;
    for (VertexSet row : adj_) twice += popcount(row);
    return twice / 2;
}

VertexSet Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw DomainError("vertex " + std::to_string(v) + " out of range");
    return adj_[v];
}

bool Graph::adjacent(int u, int v) const { return contains(neighbors(u), v); }

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u) {
        for_each_vertex(adj_[u] & ~low_bits(u + 1), [&](int v) { out.emplace_back(u, v); });
    }
    return out;
}

std::string Graph::label(int v) const {
    if (v < 0 || v >= n_) throw DomainError("vertex " + std::to_string(v) + " out of range");
    return labels_.empty() ? std::to_string(v) : labels_[v];
}

bool Graph::is_independent(VertexSet s) const {
    bool ok = true;
    for_each_vertex(s, [&](int v) { ok = ok && (adj_[v] & s) == 0; });
    return ok;
}

bool Graph::is_clique(VertexSet s) const {
    bool ok = true;
    for_each_vertex(s, [&](int v) { ok = ok && is_subset(s & ~bit(v), adj_[v]); });
    return ok;
}

VertexSet InducedSubgraph::lift(VertexSet s) const {
    VertexSet out = 0;
    for_each_vertex(s, [&](int v) { out |= bit(original[v]); });
    return out;
}

VertexSet neighborhood(const Graph& g, int v) { return g.neighbors(v); }

InducedSubgraph induced_subgraph(const Graph& g, VertexSet keep) {
    if (!is_subset(keep, g.vertices())) throw DomainError("vertex set out of range");
    InducedSubgraph out;
    out.original = to_indices(keep);
    std::vector<int> position(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < out.original.size(); ++i) position[out.original[i]] = static_cast<int>(i);

    std::vector<VertexSet> rows(out.original.size(), 0);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < out.original.size(); ++i) {
        const int u = out.original[i];
        for_each_vertex(g.neighbors(u) & keep, [&](int v) { rows[i] |= bit(position[v]); });
        if (g.has_labels()) labels.push_back(g.labels()[u]);
    }
    out.graph = Graph::from_adjacency(std::move(rows), std::move(labels));
    return out;
}

InducedSubgraph delete_closed(const Graph& g, VertexSet s, bool closed) {
    if (!is_subset(s, g.vertices())) throw DomainError("vertex set out of range");
    VertexSet removed = s;
    if (closed) for_each_vertex(s, [&](int v) { removed |= g.neighbors(v); });
    return induced_subgraph(g, g.vertices() & ~removed);
}

CliquePartition trivial_partition(const Graph& g) {
    CliquePartition pi;
    for (int v = 0; v < g.order(); ++v) pi.cliques.push_back(bit(v));
    return pi;
}

std::optional<PartitionViolation> validate_partition(const Graph& g, const CliquePartition& pi) {
    using Kind = PartitionViolation::Kind;
    VertexSet seen = 0;
    for (VertexSet w : pi.cliques) {
        if (!is_subset(w, g.vertices())) {
            return PartitionViolation{Kind::OutOfRange, to_indices(w & ~g.vertices()), "clique contains a vertex outside the graph"};
        }
        if ((seen & w) != 0) {
            return PartitionViolation{Kind::Overlap, to_indices(seen & w), "cliques are not disjoint"};
        }
        seen |= w;
    }
    if (seen != g.vertices()) {
        return PartitionViolation{Kind::NotCovering, to_indices(g.vertices() & ~seen), "cliques do not cover the vertex set"};
    }
    for (VertexSet w : pi.cliques) {
        std::optional<PartitionViolation> bad;
        for_each_vertex(w, [&](int u) {
            if (bad) return;
            const VertexSet missing = w & ~bit(u) & ~g.neighbors(u);
            if (missing != 0) {
                const int v = std::countr_zero(missing);
                bad = PartitionViolation{Kind::NotClique, {std::min(u, v), std::max(u, v)}, "block contains non-adjacent vertices"};
            }
        });
        if (bad) return bad;
    }
    return std::nullopt;
}

std::optional<Bipartition> bipartition(const Graph& g) {
    Bipartition out;
    for (VertexSet comp : connected_components(g)) {
        // BFS layering from the lowest vertex; parity decides the side.
        VertexSet even = bit(std::countr_zero(comp));
        VertexSet odd = 0;
        VertexSet frontier = even;
        VertexSet visited = even;
        bool parity_odd = false;
        while (frontier != 0) {
            VertexSet next = 0;
            for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
            next &= ~visited;
            parity_odd = !parity_odd;
            (parity_odd ? odd : even) |= next;
            visited |= next;
            frontier = next;
        }
        bool clash = false;
        for_each_vertex(even, [&](int v) { clash = clash || (g.neighbors(v) & even) != 0; });
        for_each_vertex(odd, [&](int v) { clash = clash || (g.neighbors(v) & odd) != 0; });
        if (clash) return std::nullopt;
        out.first |= even;
        out.second |= odd;
    }
    return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    VertexSet unseen = g.vertices();
    while (unseen != 0) {
        VertexSet comp = bit(std::countr_zero(unseen));
        VertexSet frontier = comp;
        while (frontier != 0) {
            VertexSet next = 0;
            for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
            frontier = next & ~comp;
            comp |= next;
        }
        comps.push_back(comp);
        unseen &= ~comp;
    }
    return comps;
}

namespace {

// Orders the vertices of an induced subgraph that is a single cycle; nullopt otherwise.
std::optional<std::vector<int>> as_induced_cycle(const Graph& g, VertexSet s) {
    bool two_regular = true;
    for_each_vertex(s, [&](int v) { two_regular = two_regular && popcount(g.neighbors(v) & s) == 2; });
    if (!two_regular) return std::nullopt;

    std::vector<int> cycle;
    int prev = -1;
    int cur = std::countr_zero(s);
    const int start = cur;
    do {
        cycle.push_back(cur);
        const VertexSet nb = g.neighbors(cur) & s & ~(prev >= 0 ? bit(prev) : VertexSet{0});
        prev = cur;
        cur = std::countr_zero(nb);
    } while (cur != start && static_cast<int>(cycle.size()) <= popcount(s));
    if (static_cast<int>(cycle.size()) != popcount(s)) return std::nullopt;  // several disjoint cycles
    return cycle;
}

}  // namespace

std::optional<std::vector<int>> find_odd_hole(const Graph& g) {
    const int n = g.order();
    if (n > 30) throw DomainError("odd-hole search is exhaustive and limited to 30 vertices");
    for (int len = 5; len <= n; len += 2) {
        // Gosper's hack over all subsets of the given size.
        VertexSet s = low_bits(len);
        const VertexSet limit = bit(n);
        while (s < limit) {
            if (auto cycle = as_induced_cycle(g, s)) return cycle;
            const VertexSet c = s & (~s + 1);
            const VertexSet r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    return std::nullopt;
}

Graph cycle_graph(int n) {
    if (n < 3) throw DomainError("a cycle needs at least three vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph complete_bipartite_graph(int a, int b) {
    std::vector<Edge> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return Graph::from_edges(a + b, edges);
}

Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

}  // namespace flagforge
