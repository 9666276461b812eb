#pragma once

// Simple undirected graphs on at most 64 vertices. Each vertex's
// neighbourhood is one 64-bit word, so vertex subsets are plain bitmasks.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace indstab {

using VertexSet = std::uint64_t;

inline constexpr int max_vertices = 64;

class GraphError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

inline auto bit(int v) -> VertexSet { return VertexSet{ 1 } << v; }
inline auto popcount(VertexSet s) -> int { return std::popcount(s); }
inline auto lowest(VertexSet s) -> int { return std::countr_zero(s); }
inline auto first_n(int n) -> VertexSet { return n >= 64 ? ~VertexSet{ 0 } : bit(n) - 1; }

class Graph
{
public:
  // build_graph: duplicates collapse; loops and out-of-range endpoints throw.
  static auto from_edges(int n, const std::vector<std::pair<int, int>>& edges) -> Graph;
  static auto from_rows(std::vector<VertexSet> rows) -> Graph;

  auto order() const -> int { return static_cast<int>(adj_.size()); }
  auto neighbours(int v) const -> VertexSet { return adj_[v]; }
  auto rows() const -> const std::vector<VertexSet>& { return adj_; }
  auto adjacent(int u, int v) const -> bool { return (adj_[u] >> v) & 1U; }
  auto degree(int v) const -> int { return popcount(adj_[v]); }
  auto vertices() const -> VertexSet { return first_n(order()); }
  auto edge_count() const -> int;
  auto edges() const -> std::vector<std::pair<int, int>>;
  auto degree_sequence() const -> std::vector<int>;

  // Subgraph induced by the vertices of s, relabelled in increasing order.
  auto induced(VertexSet s) const -> Graph;
  // Vertex v of the result is vertex perm[v] of this graph.
  auto relabelled(const std::vector<int>& perm) const -> Graph;
  auto complement() const -> Graph;

  friend auto operator==(const Graph&, const Graph&) -> bool = default;

private:
  explicit Graph(std::vector<VertexSet> rows) : adj_(std::move(rows)) {}
  std::vector<VertexSet> adj_;
};

enum class FamilyKind
{
  complete,
  empty,
  path,
  cycle,
  star,
  complete_multipartite,
  triangular_multipartite,
};

struct FamilySpec
{
  FamilyKind kind;
  // complete/empty/path/cycle/star/triangular: one size; multipartite: part sizes.
  std::vector<int> params;

  // "star:5", "complete_multipartite:3,3", "triangular_multipartite:4"
  static auto parse(std::string_view text) -> FamilySpec;
  auto to_string() const -> std::string;
  // Vertex count of the explicit graph (may exceed 64).
  auto order() const -> long long;
};

auto family(const FamilySpec& spec) -> Graph;

auto complete_graph(int n) -> Graph;
auto empty_graph(int n) -> Graph;
auto path_graph(int n) -> Graph;
auto cycle_graph(int n) -> Graph;
auto star_graph(int leaves) -> Graph;
auto complete_multipartite(const std::vector<int>& parts) -> Graph;

auto join(const Graph& g, const Graph& h) -> Graph;
auto disjoint_union(const Graph& g, const Graph& h) -> Graph;
auto corona(const Graph& g, const Graph& h) -> Graph;
auto lex_product(const Graph& g, const Graph& h) -> Graph;
auto graph_star(const Graph& g, int k = 1) -> Graph;

auto independence_number(const Graph& g) -> int;
auto independence_number(const Graph& g, VertexSet within) -> int;
auto is_independent(const Graph& g, VertexSet s) -> bool;
auto is_claw_free(const Graph& g) -> bool;
auto is_connected(const Graph& g) -> bool;
auto is_tree(const Graph& g) -> bool;
// Connected components of the subgraph induced by s, lowest vertex first.
auto components(const Graph& g, VertexSet s) -> std::vector<VertexSet>;

// graph6, without header or newline.
auto to_graph6(const Graph& g) -> std::string;
// Accepts an optional ">>graph6<<" header and trailing whitespace.
auto from_graph6(std::string_view text) -> Graph;
// "n" on the first line, "u v" pairs after.
auto from_edge_list(std::string_view text) -> Graph;

} // namespace indstab
