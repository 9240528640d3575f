#include <algorithm>
#include <string>

#include "flagforge/errors.hpp"
#include "flagforge/search.hpp"

namespace flagforge {

namespace {

using Cells = std::vector<std::vector<int>>;

class Canonizer {
public:
    explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {}

    CanonicalForm run() {
        Cells cells;
        if (n_ > 0) {
            std::vector<int> all(static_cast<std::size_t>(n_));
            for (int v = 0; v < n_; ++v) all[static_cast<std::size_t>(v)] = v;
            cells.push_back(std::move(all));
        }
        search(std::move(cells));
        return best_;
    }

private:
    // Splits cells by neighbor counts into every cell until the partition is equitable.
    void refine(Cells& cells) const {
        std::vector<int> cell_of(static_cast<std::size_t>(n_));
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t c = 0; c < cells.size(); ++c)
                for (int v : cells[c]) cell_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
            Cells next;
            next.reserve(cells.size());
            for (const auto& cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                std::vector<std::pair<std::vector<int>, int>> keyed;
                keyed.reserve(cell.size());
                for (int v : cell) {
                    std::vector<int> counts(cells.size(), 0);
                    for_each_vertex(g_.neighbors(v), [&](int u) { ++counts[static_cast<std::size_t>(cell_of[static_cast<std::size_t>(u)])]; });
                    keyed.emplace_back(std::move(counts), v);
                }
                std::sort(keyed.begin(), keyed.end());
                std::vector<int> group{keyed[0].second};
                for (std::size_t i = 1; i < keyed.size(); ++i) {
                    if (keyed[i].first != keyed[i - 1].first) {
                        next.push_back(std::move(group));
                        group.clear();
                        changed = true;
                    }
                    group.push_back(keyed[i].second);
                }
                next.push_back(std::move(group));
            }
            cells = std::move(next);
        }
    }

    bool twins(int u, int v) const {
        return (g_.neighbors(u) & ~bit(v)) == (g_.neighbors(v) & ~bit(u));
    }

    void search(Cells cells) {
        refine(cells);
        std::size_t target = cells.size();
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (cells[c].size() > 1 && (target == cells.size() || cells[c].size() < cells[target].size())) target = c;
        }
        if (target == cells.size()) {
            leaf(cells);
            return;
        }
        std::vector<int> tried;
        for (int v : cells[target]) {
            if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(u, v); })) continue;
            tried.push_back(v);
            Cells branch;
            branch.reserve(cells.size() + 1);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (c != target) {
                    branch.push_back(cells[c]);
                    continue;
                }
                branch.push_back({v});
                std::vector<int> rest;
                for (int u : cells[c])
                    if (u != v) rest.push_back(u);
                branch.push_back(std::move(rest));
            }
            search(std::move(branch));
        }
    }

    void leaf(const Cells& cells) {
        std::vector<int> labeling;
        std::vector<int> position(static_cast<std::size_t>(n_));
        for (const auto& cell : cells) {
            position[static_cast<std::size_t>(cell[0])] = static_cast<int>(labeling.size());
            labeling.push_back(cell[0]);
        }
        std::vector<VertexSet> rows(static_cast<std::size_t>(n_), 0);
        for (int k = 0; k < n_; ++k)
            for_each_vertex(g_.neighbors(labeling[static_cast<std::size_t>(k)]),
                            [&](int u) { rows[static_cast<std::size_t>(k)] |= bit(position[static_cast<std::size_t>(u)]); });
        if (!found_ || rows < best_.rows) {
            best_.rows = std::move(rows);
            best_.labeling = std::move(labeling);
            found_ = true;
        }
    }

    const Graph& g_;
    int n_;
    bool found_ = false;
    CanonicalForm best_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) { return Canonizer(g).run(); }

Graph canonical_graph(const Graph& g) { return Graph::from_adjacency(canonical_form(g).rows); }

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    if (n > 62) throw DomainError("graph6 output supports at most 62 vertices");
    std::string out(1, static_cast<char>(63 + n));
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out += static_cast<char>(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled) out += static_cast<char>(63 + (acc << (6 - filled)));
    return out;
}

Graph from_graph6(const std::string& text) {
    if (text.empty()) throw ParseError("empty graph6 string");
    for (char ch : text)
        if (ch < 63 || ch > 126) throw ParseError("invalid graph6 character");
    const int n = text[0] - 63;
    if (n > 62) throw ParseError("graph6 strings with more than 62 vertices are not supported");
    const std::size_t pairs = static_cast<std::size_t>(n) * static_cast<std::size_t>(std::max(n - 1, 0)) / 2;
    if (text.size() != 1 + (pairs + 5) / 6) throw ParseError("graph6 string has the wrong length");
    std::vector<std::pair<int, int>> edges;
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = text[1 + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    if (pairs % 6) {
        const int byte = text.back() - 63;
        if (byte & ((1 << (6 - pairs % 6)) - 1)) throw ParseError("graph6 padding bits are set");
    }
    return Graph::from_edges(n, edges);
}

}  // namespace flagforge
