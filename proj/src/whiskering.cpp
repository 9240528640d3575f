#include "flagforge/whiskering.hpp"

#include <bit>
#include <sstream>
#include <string>

#include "flagforge/errors.hpp"

namespace flagforge {

WhiskeredGraph clique_whisker(const Graph& g, const CliquePartition& pi) {
    if (auto bad = validate_partition(g, pi)) throw DomainError("invalid clique partition: " + bad->message);
    const int n = g.order();
    const int t = pi.block_count();
    if (n + t > kMaxVertices) throw DomainError("whiskered graph exceeds the vertex cap");

    std::vector<VertexSet> rows(g.adjacency());
    rows.resize(static_cast<std::size_t>(n + t), 0);
    WhiskeredGraph out;
    out.base_order = n;
    for (int i = 0; i < t; ++i) {
        const int w = n + i;
        out.whisker.push_back(w);
        rows[w] = pi.cliques[i];
        for_each_vertex(pi.cliques[i], [&](int v) { rows[v] |= bit(w); });
    }
    std::vector<std::string> labels;
    if (g.has_labels()) {
        labels = g.labels();
        for (int i = 0; i < t; ++i) labels.push_back("w" + std::to_string(i + 1));
    }
    out.graph = Graph::from_adjacency(std::move(rows), std::move(labels));
    return out;
}

namespace {

// Assigns vertices in ascending order to blocks; each block stays a clique.
// Calls fn for every complete assignment with exactly `blocks` blocks (any count when blocks < 0).
// fn returns true to stop the search.
bool assign_blocks(const Graph& g, int v, std::vector<VertexSet>& current, int blocks,
                   const std::function<bool(const std::vector<VertexSet>&)>& fn) {
    if (v == g.order()) {
        if (blocks >= 0 && static_cast<int>(current.size()) != blocks) return false;
        return fn(current);
    }
    const int remaining = g.order() - v;
    for (std::size_t i = 0; i < current.size(); ++i) {
        if (is_subset(current[i], g.neighbors(v))) {
            current[i] |= bit(v);
            const bool stop = assign_blocks(g, v + 1, current, blocks, fn);
            current[i] &= ~bit(v);
            if (stop) return true;
        }
    }
    if (blocks < 0 || static_cast<int>(current.size()) < blocks) {
        // Not enough vertices left to open the missing blocks: prune.
        if (blocks < 0 || blocks - static_cast<int>(current.size()) <= remaining) {
            current.push_back(bit(v));
            const bool stop = assign_blocks(g, v + 1, current, blocks, fn);
            current.pop_back();
            if (stop) return true;
        }
    }
    return false;
}

}  // namespace

void for_each_clique_partition(const Graph& g, const std::function<void(const CliquePartition&)>& fn) {
    std::vector<VertexSet> current;
    assign_blocks(g, 0, current, -1, [&](const std::vector<VertexSet>& blocks) {
        fn(CliquePartition{blocks});
        return false;
    });
}

std::vector<CliquePartition> clique_partitions(const Graph& g) {
    std::vector<CliquePartition> out;
    for_each_clique_partition(g, [&](const CliquePartition& pi) { out.push_back(pi); });
    return out;
}

std::optional<WhiskeringWitness> is_full_clique_whiskering(const Graph& g) {
    const int n = g.order();
    if (n == 0) return WhiskeringWitness{induced_subgraph(g, 0), CliquePartition{}, {}};

    std::optional<std::vector<int>> whiskers;
    std::vector<VertexSet> chosen;
    for (int k = 1; k <= n && !whiskers; ++k) {
        std::vector<VertexSet> current;
        assign_blocks(g, 0, current, k, [&](const std::vector<VertexSet>& blocks) {
            std::vector<int> picks;
            for (VertexSet block : blocks) {
                int pick = -1;
                for_each_vertex(block, [&](int v) {
                    if (is_subset(g.neighbors(v), block)) pick = v;  // keeps the largest
                });
                if (pick < 0) return false;
                picks.push_back(pick);
            }
            whiskers = std::move(picks);
            chosen = blocks;
            return true;
        });
    }
    if (!whiskers) return std::nullopt;

    VertexSet whisker_set = 0;
    for (int w : *whiskers) whisker_set |= bit(w);
    WhiskeringWitness out;
    out.base = delete_closed(g, whisker_set, false);
    out.whisker_vertices = *whiskers;
    std::vector<int> position(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < out.base.original.size(); ++i) position[out.base.original[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < chosen.size(); ++i) {
        VertexSet block = 0;
        for_each_vertex(chosen[i] & ~bit((*whiskers)[i]), [&](int v) { block |= bit(position[v]); });
        out.partition.cliques.push_back(block);
    }
    return out;
}

CliquePartition parse_partition(const std::string& text) {
    CliquePartition pi;
    std::stringstream blocks(text);
    std::string block;
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t");
        const auto e = s.find_last_not_of(" \t");
        return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    if (text.empty() || text.back() == '|') throw ParseError("empty block in partition (use ~)");
    while (std::getline(blocks, block, '|')) {
        block = trim(block);
        if (block.empty() || block.back() == ',') throw ParseError("empty item in partition block '" + block + "'");
        VertexSet w = 0;
        if (block != "~") {
            std::stringstream items(block);
            std::string item;
            while (std::getline(items, item, ',')) {
                item = trim(item);
                std::size_t used = 0;
                int v = -1;
                try {
                    v = std::stoi(item, &used);
                } catch (const std::exception&) {
                    throw ParseError("bad vertex '" + item + "' in partition");
                }
                if (used != item.size() || v < 0 || v >= kMaxVertices) throw ParseError("bad vertex '" + item + "' in partition");
                if (contains(w, v)) throw ParseError("vertex repeated inside a block");
                w |= bit(v);
            }
        }
        pi.cliques.push_back(w);
    }
    return pi;
}

std::string format_partition(const CliquePartition& pi) {
    std::string out;
    for (std::size_t i = 0; i < pi.cliques.size(); ++i) {
        if (i) out += '|';
        if (pi.cliques[i] == 0) {
            out += '~';
            continue;
        }
        bool first = true;
        for_each_vertex(pi.cliques[i], [&](int v) {
            if (!first) out += ',';
            out += std::to_string(v);
            first = false;
        });
    }
    return out;
}

}  // namespace flagforge
