#pragma once

// One representative per isomorphism class: all graphs up to 9 vertices, free
// trees up to 20.

#include "indstab/graph.hpp"

#include <functional>
#include <vector>

namespace indstab {

inline constexpr int max_enumerated_graph_order = 9;
inline constexpr int max_enumerated_tree_order = 20;

// Canonical representatives sorted by canonical code. workers <= 0 picks the
// default worker count.
auto enumerate_graphs(int n, int workers = 0) -> std::vector<Graph>;

// Free trees, in generation order. The callback form streams without storing.
auto enumerate_trees(int n) -> std::vector<Graph>;
void for_each_tree(int n, const std::function<void(const Graph&)>& visit);

} // namespace indstab
