#pragma once

#include <utility>
#include <vector>

namespace antikit {

/// Maximum-cardinality matching in a general undirected graph (Edmonds'
/// blossom algorithm, O(V^3)). Returns mate[v] or -1.
///
/// Vertices are scanned for augmenting paths in ascending order and their
/// neighbour lists in the order given, so the result is deterministic.
std::vector<int> maximum_matching(int n, const std::vector<std::vector<int>>& adjacency);

}  // namespace antikit
