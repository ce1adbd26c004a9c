#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "antikit/digraph.hpp"

namespace antikit {

/// Pair codes: pairs (i, j), i < j, in lexicographic order, one base-3 digit
/// each: 0 no edge, 1 i -> j, 2 j -> i.
int pair_count(int n);

/// 3^(n(n-1)/2). Throws Error(TooLarge) above n = 6.
long long oriented_count(int n);

/// Labeled oriented graph number `index`; the first pair is the least
/// significant digit.
OrientedGraph oriented_from_index(int n, long long index);

/// Calls `visit` for every labeled oriented graph on n <= 6 vertices, in
/// index order. Throws Error(TooLarge) above n = 6.
void enumerate_oriented(int n, const std::function<void(const OrientedGraph&)>& visit);

/// Minimum pair code (first pair most significant) over the vertex orderings
/// that sort vertices by (out-degree, in-degree). Isomorphic graphs share the
/// code. Throws Error(TooLarge) above n = 9.
std::uint64_t canonical_code(const OrientedGraph& g);
OrientedGraph graph_from_code(int n, std::uint64_t code);

/// One canonical representative per isomorphism class, sorted by code.
/// Classes on n vertices come from attaching a new vertex to every class on
/// n - 1 vertices in all 3^(n-1) ways. Cached; thread-safe.
const std::vector<OrientedGraph>& oriented_classes(int n);

/// Each pair independently: no edge with probability 1 - p, otherwise one of
/// the two directions with equal odds.
OrientedGraph random_oriented(int n, double p, std::mt19937_64& rng);

/// Each ordered pair independently with probability p; 2-cycles allowed.
Digraph random_digraph(int n, double p, std::mt19937_64& rng);

/// Uniform random labeled tree (Prüfer sequence), as an edge list.
std::vector<std::pair<int, int>> random_tree_edges(int n, std::mt19937_64& rng);

/// Antidirected trees with k edges, one per isomorphism class, optionally
/// only the balanced ones. Throws Error(TooLarge) above k = 8.
std::vector<OrientedGraph> antidirected_trees(int k, bool balanced_only);

/// Weakly connected antidirected graphs on n vertices with at least one
/// edge, one per isomorphism class.
std::vector<OrientedGraph> connected_antidirected(int n);

}  // namespace antikit
