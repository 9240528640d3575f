#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "flagforge/graph.hpp"

namespace flagforge {

/// g^π: one new vertex per block of π, adjacent to exactly that block.
struct WhiskeredGraph {
    Graph graph;
    int base_order = 0;
    std::vector<int> whisker;  // whisker[i] = index of the vertex added for block i
};

/// Whisker vertices are appended after the base vertices, in block order.
/// Empty blocks give isolated whiskers. DomainError if π is not a clique partition.
WhiskeredGraph clique_whisker(const Graph& g, const CliquePartition& pi);

/// Witness that a graph is a full clique-whiskering of some base graph.
struct WhiskeringWitness {
    InducedSubgraph base;              // g with the whisker vertices removed
    CliquePartition partition;         // blocks in base indices (possibly empty)
    std::vector<int> whisker_vertices; // in g's indices, one per block
};

/// Searches clique partitions of g (fewest blocks first) for one where every
/// block holds a vertex whose neighborhood lies inside the block.
std::optional<WhiskeringWitness> is_full_clique_whiskering(const Graph& g);

/// Every clique partition without empty blocks; blocks ordered by lowest vertex.
void for_each_clique_partition(const Graph& g, const std::function<void(const CliquePartition&)>& fn);
std::vector<CliquePartition> clique_partitions(const Graph& g);

/// Parses "0,1|2", "~" for an empty block.
CliquePartition parse_partition(const std::string& text);
std::string format_partition(const CliquePartition& pi);

}  // namespace flagforge
