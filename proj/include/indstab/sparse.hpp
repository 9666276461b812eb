#pragma once

// Adjacency-list graphs with no vertex cap, for constructions that outgrow
// the 64-vertex bitset graphs (corona trees with hundreds of vertices).

#include "indstab/graph.hpp"
#include "indstab/poly.hpp"

#include <vector>

namespace indstab {

struct SparseGraph
{
  std::vector<std::vector<int>> adj;

  static auto from(const Graph& g) -> SparseGraph;
  auto order() const -> int { return static_cast<int>(adj.size()); }
  auto edge_count() const -> long;
  void add_edge(int u, int v);
};

auto sparse_star(int leaves) -> SparseGraph;
auto sparse_empty(int n) -> SparseGraph;
// Same layout as corona(): G first, then the copy of H for vertex v.
auto sparse_corona(const SparseGraph& g, const SparseGraph& h) -> SparseGraph;

auto is_tree(const SparseGraph& g) -> bool;

// Independence polynomial of a forest by the leaf-up recurrence. Throws
// std::invalid_argument on a cycle.
auto forest_indpoly(const SparseGraph& g) -> IntPoly;

} // namespace indstab
