#include "indstab/sparse.hpp"

#include <stdexcept>

namespace indstab {

auto SparseGraph::from(const Graph& g) -> SparseGraph
{
  SparseGraph s;
  s.adj.resize(static_cast<std::size_t>(g.order()));
  for (auto [u, v] : g.edges())
    s.add_edge(u, v);
  return s;
}

auto SparseGraph::edge_count() const -> long
{
  long twice = 0;
  for (const auto& a : adj)
    twice += static_cast<long>(a.size());
  return twice / 2;
}

void SparseGraph::add_edge(int u, int v)
{
  if (u == v || u < 0 || v < 0 || u >= order() || v >= order())
    throw std::invalid_argument("bad edge");
  adj[u].push_back(v);
  adj[v].push_back(u);
}

auto sparse_empty(int n) -> SparseGraph
{
  if (n < 1)
    throw std::invalid_argument("graph needs at least one vertex");
  SparseGraph s;
  s.adj.resize(static_cast<std::size_t>(n));
  return s;
}

auto sparse_star(int leaves) -> SparseGraph
{
  auto s = sparse_empty(leaves + 1);
  for (int i = 1; i <= leaves; ++i)
    s.add_edge(0, i);
  return s;
}

auto sparse_corona(const SparseGraph& g, const SparseGraph& h) -> SparseGraph
{
  const int n = g.order(), m = h.order();
  auto out = sparse_empty(n + n * m);
  for (int u = 0; u < n; ++u)
    for (int v : g.adj[u])
      if (u < v)
        out.add_edge(u, v);
  for (int v = 0; v < n; ++v) {
    const int base = n + v * m;
    for (int a = 0; a < m; ++a) {
      out.add_edge(v, base + a);
      for (int b : h.adj[a])
        if (a < b)
          out.add_edge(base + a, base + b);
    }
  }
  return out;
}

auto is_tree(const SparseGraph& g) -> bool
{
  const int n = g.order();
  if (n == 0 || g.edge_count() != n - 1)
    return false;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{ 0 };
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : g.adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n;
}

auto forest_indpoly(const SparseGraph& g) -> IntPoly
{
  const int n = g.order();
  // without[v]: sets of v's subtree avoiding v; with[v]: sets containing v.
  std::vector<IntPoly> without(n), with(n);
  std::vector<int> parent(n, -2), order;
  order.reserve(static_cast<std::size_t>(n));
  IntPoly total = ipoly({ 1 });
  for (int root = 0; root < n; ++root) {
    if (parent[root] != -2)
      continue;
    parent[root] = -1;
    std::vector<int> stack{ root };
    const std::size_t start = order.size();
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (int w : g.adj[v]) {
        if (w == parent[v])
          continue;
        if (parent[w] != -2)
          throw std::invalid_argument("graph has a cycle");
        parent[w] = v;
        stack.push_back(w);
      }
    }
    for (std::size_t i = order.size(); i-- > start;) {
      const int v = order[i];
      IntPoly a = ipoly({ 1 }), b = ipoly({ 0, 1 });
      for (int w : g.adj[v])
        if (w != parent[v]) {
          a = a * (without[w] + with[w]);
          b = b * without[w];
        }
      without[v] = std::move(a);
      with[v] = std::move(b);
    }
    total = total * (without[root] + with[root]);
  }
  return total;
}

} // namespace indstab
