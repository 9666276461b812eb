#include "indstab/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace indstab {

namespace {

void check_order(long long n)
{
  if (n < 1)
    throw GraphError("graph must have at least one vertex");
  if (n > max_vertices)
    throw GraphError("graph order " + std::to_string(n) + " exceeds the 64-vertex cap");
}

auto parse_int(std::string_view s) -> int
{
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw GraphError("expected an integer, got '" + std::string(s) + "'");
  return v;
}

} // namespace

auto Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) -> Graph
{
  check_order(n);
  std::vector<VertexSet> rows(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint outside [0," +
                       std::to_string(n) + ")");
    if (u == v)
      throw GraphError("loop at vertex " + std::to_string(u));
    rows[u] |= bit(v);
    rows[v] |= bit(u);
  }
  return Graph(std::move(rows));
}

auto Graph::from_rows(std::vector<VertexSet> rows) -> Graph
{
  check_order(static_cast<long long>(rows.size()));
  const int n = static_cast<int>(rows.size());
  for (int v = 0; v < n; ++v) {
    if (rows[v] & ~first_n(n))
      throw GraphError("adjacency row references a vertex outside the graph");
    if (rows[v] & bit(v))
      throw GraphError("loop at vertex " + std::to_string(v));
    for (VertexSet s = rows[v]; s; s &= s - 1)
      if (!((rows[lowest(s)] >> v) & 1U))
        throw GraphError("adjacency is not symmetric");
  }
  return Graph(std::move(rows));
}

auto Graph::edge_count() const -> int
{
  int twice = 0;
  for (auto r : adj_)
    twice += popcount(r);
  return twice / 2;
}

auto Graph::edges() const -> std::vector<std::pair<int, int>>
{
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < order(); ++u)
    for (VertexSet s = adj_[u] & ~first_n(u + 1); s; s &= s - 1)
      out.emplace_back(u, lowest(s));
  return out;
}

auto Graph::degree_sequence() const -> std::vector<int>
{
  std::vector<int> d;
  for (int v = 0; v < order(); ++v)
    d.push_back(degree(v));
  return d;
}

auto Graph::induced(VertexSet s) const -> Graph
{
  std::vector<int> keep;
  for (VertexSet t = s; t; t &= t - 1)
    keep.push_back(lowest(t));
  return relabelled(keep);
}

auto Graph::relabelled(const std::vector<int>& perm) const -> Graph
{
  const int m = static_cast<int>(perm.size());
  check_order(m);
  std::vector<int> where(static_cast<std::size_t>(order()), -1);
  for (int i = 0; i < m; ++i)
    where[perm[i]] = i;
  std::vector<VertexSet> rows(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i)
    for (VertexSet s = adj_[perm[i]]; s; s &= s - 1)
      if (int w = where[lowest(s)]; w >= 0)
        rows[i] |= bit(w);
  return Graph(std::move(rows));
}

auto Graph::complement() const -> Graph
{
  std::vector<VertexSet> rows(adj_.size());
  for (int v = 0; v < order(); ++v)
    rows[v] = ~adj_[v] & vertices() & ~bit(v);
  return Graph(std::move(rows));
}

auto complete_graph(int n) -> Graph
{
  check_order(n);
  std::vector<VertexSet> rows(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    rows[v] = first_n(n) & ~bit(v);
  return Graph::from_rows(std::move(rows));
}

auto empty_graph(int n) -> Graph
{
  return Graph::from_edges(n, {});
}

auto path_graph(int n) -> Graph
{
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v + 1 < n; ++v)
    e.emplace_back(v, v + 1);
  return Graph::from_edges(n, e);
}

auto cycle_graph(int n) -> Graph
{
  if (n < 3)
    throw GraphError("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < n; ++v)
    e.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, e);
}

auto star_graph(int leaves) -> Graph
{
  if (leaves < 1)
    throw GraphError("star needs at least one leaf");
  return join(empty_graph(1), empty_graph(leaves));
}

auto complete_multipartite(const std::vector<int>& parts) -> Graph
{
  if (parts.empty())
    throw GraphError("multipartite graph needs at least one part");
  long long total = 0;
  for (int p : parts) {
    if (p < 1)
      throw GraphError("part sizes must be positive");
    total += p;
  }
  check_order(total);
  std::vector<VertexSet> rows(static_cast<std::size_t>(total));
  int start = 0;
  for (int p : parts) {
    VertexSet part = first_n(start + p) & ~first_n(start);
    for (int v = start; v < start + p; ++v)
      rows[v] = first_n(static_cast<int>(total)) & ~part;
    start += p;
  }
  return Graph::from_rows(std::move(rows));
}

auto FamilySpec::parse(std::string_view text) -> FamilySpec
{
  auto colon = text.find(':');
  std::string_view name = text.substr(0, colon);
  FamilySpec spec{};
  if (name == "complete")
    spec.kind = FamilyKind::complete;
  else if (name == "empty")
    spec.kind = FamilyKind::empty;
  else if (name == "path")
    spec.kind = FamilyKind::path;
  else if (name == "cycle")
    spec.kind = FamilyKind::cycle;
  else if (name == "star")
    spec.kind = FamilyKind::star;
  else if (name == "complete_multipartite")
    spec.kind = FamilyKind::complete_multipartite;
  else if (name == "triangular_multipartite")
    spec.kind = FamilyKind::triangular_multipartite;
  else
    throw GraphError("unknown family '" + std::string(name) + "'");
  if (colon == std::string_view::npos)
    throw GraphError("family '" + std::string(name) + "' needs parameters, e.g. " + std::string(name) + ":3");
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    auto comma = rest.find(',');
    spec.params.push_back(parse_int(rest.substr(0, comma)));
    if (comma == std::string_view::npos)
      break;
    rest.remove_prefix(comma + 1);
  }
  if (spec.params.empty())
    throw GraphError("family needs parameters");
  for (int p : spec.params)
    if (p < 1)
      throw GraphError("family parameters must be positive");
  if (spec.kind != FamilyKind::complete_multipartite && spec.params.size() != 1)
    throw GraphError("family '" + std::string(name) + "' takes exactly one parameter");
  return spec;
}

auto FamilySpec::to_string() const -> std::string
{
  static const char* names[] = { "complete", "empty", "path", "cycle", "star", "complete_multipartite",
                                 "triangular_multipartite" };
  std::string s = names[static_cast<int>(kind)];
  s += ':';
  for (std::size_t i = 0; i < params.size(); ++i)
    s += (i ? "," : "") + std::to_string(params[i]);
  return s;
}

auto FamilySpec::order() const -> long long
{
  switch (kind) {
  case FamilyKind::star:
    return params.at(0) + 1LL;
  case FamilyKind::complete_multipartite: {
    long long t = 0;
    for (int p : params)
      t += p;
    return t;
  }
  case FamilyKind::triangular_multipartite: {
    long long n = params.at(0);
    return n * (n + 1) / 2;
  }
  default:
    return params.at(0);
  }
}

auto family(const FamilySpec& spec) -> Graph
{
  if (spec.params.empty())
    throw GraphError("family needs parameters");
  check_order(spec.order());
  const int n = spec.params[0];
  switch (spec.kind) {
  case FamilyKind::complete:
    return complete_graph(n);
  case FamilyKind::empty:
    return empty_graph(n);
  case FamilyKind::path:
    return path_graph(n);
  case FamilyKind::cycle:
    return cycle_graph(n);
  case FamilyKind::star:
    return star_graph(n);
  case FamilyKind::complete_multipartite:
    return complete_multipartite(spec.params);
  case FamilyKind::triangular_multipartite: {
    std::vector<int> parts;
    for (int k = 1; k <= n; ++k)
      parts.push_back(k);
    return complete_multipartite(parts);
  }
  }
  throw GraphError("unknown family");
}

auto join(const Graph& g, const Graph& h) -> Graph
{
  const int a = g.order();
  const int b = h.order();
  check_order(a + b);
  std::vector<VertexSet> rows(static_cast<std::size_t>(a + b));
  const VertexSet hs = first_n(a + b) & ~first_n(a);
  for (int v = 0; v < a; ++v)
    rows[v] = g.neighbours(v) | hs;
  for (int v = 0; v < b; ++v)
    rows[a + v] = (h.neighbours(v) << a) | first_n(a);
  return Graph::from_rows(std::move(rows));
}

auto disjoint_union(const Graph& g, const Graph& h) -> Graph
{
  const int a = g.order();
  const int b = h.order();
  check_order(a + b);
  std::vector<VertexSet> rows(static_cast<std::size_t>(a + b));
  for (int v = 0; v < a; ++v)
    rows[v] = g.neighbours(v);
  for (int v = 0; v < b; ++v)
    rows[a + v] = h.neighbours(v) << a;
  return Graph::from_rows(std::move(rows));
}

// Vertex layout: G occupies 0..n-1; the copy of H hung on v occupies
// n + v*|H| .. n + (v+1)*|H| - 1.
auto corona(const Graph& g, const Graph& h) -> Graph
{
  const long long n = g.order();
  const long long m = h.order();
  check_order(n * (1 + m));
  const int total = static_cast<int>(n * (1 + m));
  std::vector<VertexSet> rows(static_cast<std::size_t>(total), 0);
  for (int v = 0; v < n; ++v) {
    const int base = static_cast<int>(n + v * m);
    const VertexSet copy = first_n(base + static_cast<int>(m)) & ~first_n(base);
    rows[v] = g.neighbours(v) | copy;
    for (int u = 0; u < m; ++u)
      rows[base + u] = (h.neighbours(u) << base) | bit(v);
  }
  return Graph::from_rows(std::move(rows));
}

// (g_i, h_l) has index i*|H| + l.
auto lex_product(const Graph& g, const Graph& h) -> Graph
{
  const int n = g.order();
  const int m = h.order();
  check_order(static_cast<long long>(n) * m);
  std::vector<VertexSet> rows(static_cast<std::size_t>(n * m), 0);
  for (int i = 0; i < n; ++i) {
    VertexSet blocks = 0;
    for (VertexSet s = g.neighbours(i); s; s &= s - 1)
      blocks |= first_n(m) << (lowest(s) * m);
    for (int l = 0; l < m; ++l)
      rows[i * m + l] = blocks | (h.neighbours(l) << (i * m));
  }
  return Graph::from_rows(std::move(rows));
}

auto graph_star(const Graph& g, int k) -> Graph
{
  if (k < 1)
    throw GraphError("graph star iteration count must be positive");
  long long order = g.order();
  for (int i = 0; i < k; ++i) {
    order *= 2;
    check_order(order);
  }
  Graph result = g;
  const Graph pendant = empty_graph(1);
  for (int i = 0; i < k; ++i)
    result = corona(result, pendant);
  return result;
}

auto is_independent(const Graph& g, VertexSet s) -> bool
{
  for (VertexSet t = s; t; t &= t - 1)
    if (g.neighbours(lowest(t)) & s)
      return false;
  return true;
}

namespace {

// Greedy clique partition of p: its size bounds the independence number of G[p].
auto clique_cover_bound(const Graph& g, VertexSet p) -> int
{
  int cliques = 0;
  while (p) {
    const int v = lowest(p);
    VertexSet clique = bit(v);
    VertexSet cand = p & g.neighbours(v);
    while (cand) {
      const int u = lowest(cand);
      clique |= bit(u);
      cand &= g.neighbours(u);
    }
    p &= ~clique;
    ++cliques;
  }
  return cliques;
}

void max_independent(const Graph& g, VertexSet p, int size, int& best)
{
  for (;;) {
    if (!p) {
      best = std::max(best, size);
      return;
    }
    if (size + popcount(p) <= best)
      return;
    // A vertex of degree <= 1 in G[p] lies in some maximum independent set.
    bool reduced = false;
    for (VertexSet s = p; s; s &= s - 1) {
      const int v = lowest(s);
      if (popcount(g.neighbours(v) & p) <= 1) {
        p &= ~(g.neighbours(v) | bit(v));
        ++size;
        reduced = true;
        break;
      }
    }
    if (!reduced)
      break;
  }
  if (!p) {
    best = std::max(best, size);
    return;
  }
  if (size + clique_cover_bound(g, p) <= best)
    return;
  int pivot = -1;
  int pivot_degree = -1;
  for (VertexSet s = p; s; s &= s - 1) {
    const int v = lowest(s);
    const int d = popcount(g.neighbours(v) & p);
    if (d > pivot_degree) {
      pivot = v;
      pivot_degree = d;
    }
  }
  max_independent(g, p & ~(g.neighbours(pivot) | bit(pivot)), size + 1, best);
  max_independent(g, p & ~bit(pivot), size, best);
}

} // namespace

auto independence_number(const Graph& g, VertexSet within) -> int
{
  int best = 0;
  max_independent(g, within & g.vertices(), 0, best);
  return best;
}

auto independence_number(const Graph& g) -> int
{
  return independence_number(g, g.vertices());
}

auto is_claw_free(const Graph& g) -> bool
{
  for (int v = 0; v < g.order(); ++v) {
    const VertexSet nb = g.neighbours(v);
    for (VertexSet s = nb; s; s &= s - 1) {
      const int a = lowest(s);
      for (VertexSet t = nb & ~g.neighbours(a) & ~first_n(a + 1); t; t &= t - 1) {
        const int b = lowest(t);
        if (nb & ~g.neighbours(a) & ~g.neighbours(b) & ~bit(a) & ~bit(b))
          return false;
      }
    }
  }
  return true;
}

auto components(const Graph& g, VertexSet s) -> std::vector<VertexSet>
{
  std::vector<VertexSet> out;
  while (s) {
    VertexSet comp = bit(lowest(s));
    VertexSet frontier = comp;
    while (frontier) {
      VertexSet next = 0;
      for (VertexSet f = frontier; f; f &= f - 1)
        next |= g.neighbours(lowest(f));
      next &= s & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    s &= ~comp;
  }
  return out;
}

auto is_connected(const Graph& g) -> bool
{
  return components(g, g.vertices()).size() == 1;
}

auto is_tree(const Graph& g) -> bool
{
  return g.edge_count() == g.order() - 1 && is_connected(g);
}

auto to_graph6(const Graph& g) -> std::string
{
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift : { 12, 6, 0 })
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0)
    out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

auto from_graph6(std::string_view text) -> Graph
{
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header))
    text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
    text.remove_suffix(1);
  if (text.empty())
    throw GraphError("empty graph6 string");
  for (char c : text)
    if (c < 63 || c > 126)
      throw GraphError("graph6 character out of range");
  std::size_t pos = 0;
  int n = text[pos++] - 63;
  if (n == 63) {
    if (text.size() < 4)
      throw GraphError("truncated graph6 order");
    n = 0;
    for (int k = 0; k < 3; ++k)
      n = (n << 6) | (text[pos++] - 63);
  }
  check_order(n);
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes)
    throw GraphError("graph6 length does not match order " + std::to_string(n));
  std::vector<VertexSet> rows(static_cast<std::size_t>(n), 0);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - static_cast<int>(k % 6))) & 1) {
        rows[i] |= bit(j);
        rows[j] |= bit(i);
      }
    }
  return Graph::from_rows(std::move(rows));
}

auto from_edge_list(std::string_view text) -> Graph
{
  std::istringstream in{ std::string(text) };
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    if (n < 0) {
      n = parse_int(line);
      continue;
    }
    std::istringstream ls(line);
    int u = 0, v = 0;
    std::string extra;
    if (!(ls >> u >> v) || (ls >> extra))
      throw GraphError("bad edge line '" + line + "'");
    edges.emplace_back(u, v);
  }
  if (n < 0)
    throw GraphError("edge list has no vertex count");
  return Graph::from_edges(n, edges);
}

} // namespace indstab
