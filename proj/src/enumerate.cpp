#include "indstab/enumerate.hpp"

#include "indstab/canonical.hpp"
#include "indstab/parallel.hpp"

#include <algorithm>
#include <string>

namespace indstab {

auto enumerate_graphs(int n, int workers) -> std::vector<Graph>
{
  if (n < 1 || n > max_enumerated_graph_order)
    throw std::invalid_argument("graph enumeration supports 1 to " + std::to_string(max_enumerated_graph_order) +
                                " vertices");
  workers = resolve_workers(workers);
  // Every graph on k vertices arises from one on k - 1 vertices by adding a
  // vertex with some neighbourhood; canonical codes collapse the duplicates.
  std::vector<std::string> codes{ canonical_code(empty_graph(1)) };
  for (int k = 2; k <= n; ++k) {
    const VertexSet subsets = VertexSet{ 1 } << (k - 1);
    std::vector<std::vector<std::string>> found(codes.size());
    parallel_for(
        codes.size(), workers,
        [&](std::size_t i) {
          const Graph parent = graph_from_code(codes[i]);
          std::vector<VertexSet> rows(parent.rows());
          rows.push_back(0);
          auto& out = found[i];
          out.reserve(static_cast<std::size_t>(subsets));
          for (VertexSet s = 0; s < subsets; ++s) {
            auto r = rows;
            r.back() = s;
            for (int v = 0; v < k - 1; ++v)
              if ((s >> v) & 1U)
                r[v] |= VertexSet{ 1 } << (k - 1);
            out.push_back(canonical_code(Graph::from_rows(std::move(r))));
          }
          std::sort(out.begin(), out.end());
          out.erase(std::unique(out.begin(), out.end()), out.end());
        },
        8);
    std::vector<std::string> next;
    for (auto& f : found)
      next.insert(next.end(), std::make_move_iterator(f.begin()), std::make_move_iterator(f.end()));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    codes = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(codes.size());
  for (const auto& c : codes)
    out.push_back(graph_from_code(c));
  return out;
}

namespace {

struct RootedTree
{
  std::vector<int> parent;
  std::vector<std::vector<int>> children;
};

auto tree_from_levels(const std::vector<int>& level) -> RootedTree
{
  const int n = static_cast<int>(level.size());
  RootedTree t{ std::vector<int>(n, -1), std::vector<std::vector<int>>(n) };
  std::vector<int> last(n, -1);
  for (int i = 0; i < n; ++i) {
    if (level[i] > 0) {
      t.parent[i] = last[level[i] - 1];
      t.children[t.parent[i]].push_back(i);
    }
    last[level[i]] = i;
  }
  return t;
}

// Canonical level sequence of the tree rooted at v: subtrees in decreasing
// lexicographic order.
auto encode(const std::vector<std::vector<int>>& adj, int v, int from, int depth) -> std::vector<int>
{
  std::vector<std::vector<int>> parts;
  for (int w : adj[v])
    if (w != from)
      parts.push_back(encode(adj, w, v, depth + 1));
  std::sort(parts.begin(), parts.end(), std::greater<>());
  std::vector<int> out{ depth };
  for (auto& p : parts)
    out.insert(out.end(), p.begin(), p.end());
  return out;
}

// Keep a rooted canonical sequence only when its root is the centre, or the
// larger-coded of the two centres.
auto is_free_canonical(const std::vector<int>& level) -> bool
{
  const int n = static_cast<int>(level.size());
  if (n <= 1)
    return true;
  auto t = tree_from_levels(level);
  std::vector<int> height(n, 0);
  for (int i = n - 1; i > 0; --i)
    height[t.parent[i]] = std::max(height[t.parent[i]], height[i] + 1);
  int a = 0, b = 0, top = -1;
  for (int c : t.children[0]) {
    const int h = height[c] + 1;
    if (h > a) {
      b = a;
      a = h;
      top = c;
    } else if (h > b) {
      b = h;
    }
  }
  if (a == b)
    return true;
  if (a != b + 1)
    return false;
  std::vector<std::vector<int>> adj(n);
  for (int i = 1; i < n; ++i) {
    adj[i].push_back(t.parent[i]);
    adj[t.parent[i]].push_back(i);
  }
  return level >= encode(adj, top, -1, 0);
}

auto tree_graph(const std::vector<int>& level) -> Graph
{
  auto t = tree_from_levels(level);
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < static_cast<int>(level.size()); ++i)
    edges.emplace_back(t.parent[i], i);
  return Graph::from_edges(static_cast<int>(level.size()), edges);
}

} // namespace

void for_each_tree(int n, const std::function<void(const Graph&)>& visit)
{
  if (n < 1 || n > max_enumerated_tree_order)
    throw std::invalid_argument("tree enumeration supports 1 to " + std::to_string(max_enumerated_tree_order) +
                                " vertices");
  // Rooted trees as canonical level sequences, from the path down to the
  // star, by the successor rule of Beyer and Hedetniemi.
  std::vector<int> level(n);
  for (int i = 0; i < n; ++i)
    level[i] = i;
  for (;;) {
    if (is_free_canonical(level))
      visit(tree_graph(level));
    int p = n - 1;
    while (p > 0 && level[p] <= 1)
      --p;
    if (p == 0)
      return;
    int q = p - 1;
    while (level[q] != level[p] - 1)
      --q;
    for (int i = p; i < n; ++i)
      level[i] = level[i - (p - q)];
  }
}

auto enumerate_trees(int n) -> std::vector<Graph>
{
  std::vector<Graph> out;
  for_each_tree(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

} // namespace indstab
