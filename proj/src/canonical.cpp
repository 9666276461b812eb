#include "indstab/canonical.hpp"

#include <algorithm>
#include <array>

namespace indstab {

namespace {

using Cell = std::uint16_t;

struct Partition
{
  std::array<Cell, canonical_max_vertices> cells{};
  int size = 0;

  auto discrete(int n) const -> bool { return size == n; }
};

struct Search
{
  int n = 0;
  std::array<Cell, canonical_max_vertices> adj{};
  std::array<Cell, canonical_max_vertices> twins{};
  std::array<Cell, canonical_max_vertices> best_rows{};
  std::array<int, canonical_max_vertices> best_perm{};
  bool have_best = false;

  // Split cell x by neighbour counts into w; fragments in increasing count order.
  auto split(Partition& p, int x, Cell w) const -> bool
  {
    const Cell cell = p.cells[x];
    std::array<Cell, canonical_max_vertices + 1> by_count{};
    int distinct = 0;
    for (Cell s = cell; s; s &= s - 1) {
      const int v = std::countr_zero(s);
      const int c = std::popcount(static_cast<Cell>(adj[v] & w));
      if (!by_count[c])
        ++distinct;
      by_count[c] |= static_cast<Cell>(1U << v);
    }
    if (distinct == 1)
      return false;
    for (int i = p.size - 1; i > x; --i)
      p.cells[i + distinct - 1] = p.cells[i];
    int at = x;
    for (int c = 0; c <= n; ++c)
      if (by_count[c])
        p.cells[at++] = by_count[c];
    p.size += distinct - 1;
    return true;
  }

  void refine(Partition& p) const
  {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int s = 0; s < p.size && !changed; ++s) {
        const Cell w = p.cells[s];
        for (int x = 0; x < p.size; ++x) {
          if (std::has_single_bit(p.cells[x]))
            continue;
          if (split(p, x, w)) {
            changed = true;
            break;
          }
        }
      }
    }
  }

  void leaf(const Partition& p)
  {
    std::array<int, canonical_max_vertices> perm{};
    std::array<int, canonical_max_vertices> pos{};
    for (int i = 0; i < n; ++i) {
      perm[i] = std::countr_zero(p.cells[i]);
      pos[perm[i]] = i;
    }
    std::array<Cell, canonical_max_vertices> rows{};
    for (int i = 0; i < n; ++i) {
      Cell r = 0;
      for (Cell s = adj[perm[i]]; s; s &= s - 1)
        r |= static_cast<Cell>(1U << pos[std::countr_zero(s)]);
      rows[i] = r;
    }
    if (!have_best ||
        std::lexicographical_compare(best_rows.begin(), best_rows.begin() + n, rows.begin(), rows.begin() + n)) {
      best_rows = rows;
      best_perm = perm;
      have_best = true;
    }
  }

  void descend(Partition p)
  {
    refine(p);
    if (p.discrete(n)) {
      leaf(p);
      return;
    }
    int target = 0;
    while (std::has_single_bit(p.cells[target]))
      ++target;
    const Cell cell = p.cells[target];
    Cell tried = 0;
    for (Cell s = cell; s; s &= s - 1) {
      const int v = std::countr_zero(s);
      // Swapping twins is an automorphism fixing everything already individualized.
      if (twins[v] & tried)
        continue;
      tried |= static_cast<Cell>(1U << v);
      Partition q = p;
      for (int i = q.size - 1; i > target; --i)
        q.cells[i + 1] = q.cells[i];
      q.cells[target] = static_cast<Cell>(1U << v);
      q.cells[target + 1] = static_cast<Cell>(cell & ~(1U << v));
      ++q.size;
      descend(q);
    }
  }
};

} // namespace

auto canonical_form(const Graph& g) -> CanonicalForm
{
  const int n = g.order();
  if (n > canonical_max_vertices)
    throw GraphError("canonical labelling is capped at " + std::to_string(canonical_max_vertices) + " vertices");
  Search s;
  s.n = n;
  for (int v = 0; v < n; ++v)
    s.adj[v] = static_cast<Cell>(g.neighbours(v));
  for (int u = 0; u < n; ++u)
    for (int w = 0; w < n; ++w) {
      const Cell mask = static_cast<Cell>(~((1U << u) | (1U << w)));
      if ((s.adj[u] & mask) == (s.adj[w] & mask))
        s.twins[u] |= static_cast<Cell>(1U << w);
    }
  Partition p;
  p.cells[0] = static_cast<Cell>(first_n(n));
  p.size = 1;
  s.descend(p);

  CanonicalForm out;
  out.code.push_back(static_cast<char>(n));
  for (int i = 0; i < n; ++i) {
    out.code.push_back(static_cast<char>(s.best_rows[i] & 0xff));
    out.code.push_back(static_cast<char>(s.best_rows[i] >> 8));
  }
  out.labelling.assign(s.best_perm.begin(), s.best_perm.begin() + n);
  return out;
}

auto canonical_code(const Graph& g) -> std::string
{
  return canonical_form(g).code;
}

auto canonical_graph(const Graph& g) -> Graph
{
  return g.relabelled(canonical_form(g).labelling);
}

auto graph_from_code(std::string_view code) -> Graph
{
  if (code.empty())
    throw GraphError("empty canonical code");
  const int n = static_cast<unsigned char>(code[0]);
  if (n < 1 || n > canonical_max_vertices || code.size() != 1 + 2 * static_cast<std::size_t>(n))
    throw GraphError("malformed canonical code");
  std::vector<VertexSet> rows(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    rows[i] = static_cast<unsigned char>(code[1 + 2 * i]) | (VertexSet{ static_cast<unsigned char>(code[2 + 2 * i]) } << 8);
  return Graph::from_rows(std::move(rows));
}

} // namespace indstab
