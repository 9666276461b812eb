#include "indstab/indpoly.hpp"

#include <cstdint>
#include <list>
#include <unordered_map>

namespace indstab {

auto to_string(IndPolySource s) -> std::string
{
  switch (s) {
  case IndPolySource::recurrence:
    return "recurrence";
  case IndPolySource::closed_form:
    return "closed_form";
  case IndPolySource::join_identity:
    return "join_identity";
  case IndPolySource::corona_identity:
    return "corona_identity";
  case IndPolySource::lex_identity:
    return "lex_identity";
  case IndPolySource::kstar_identity:
    return "kstar_identity";
  }
  return "unknown";
}

namespace {

// Counts of independent sets in a 64-vertex graph are at most C(64,32) < 2^64.
using Counts = std::vector<std::uint64_t>;

auto multiply(const Counts& a, const Counts& b) -> Counts
{
  Counts r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] += a[i] * b[j];
  return r;
}

class Recurrence
{
public:
  Recurrence(const Graph& g, std::size_t cap) : g_(g), cap_(cap) {}

  auto run(VertexSet s) -> Counts
  {
    if (!s)
      return { 1 };
    if (auto it = memo_.find(s); it != memo_.end()) {
      order_.splice(order_.begin(), order_, it->second.second);
      return it->second.first;
    }
    Counts result = solve(s);
    if (cap_ > 0) {
      if (memo_.size() >= cap_) {
        memo_.erase(order_.back());
        order_.pop_back();
      }
      order_.push_front(s);
      memo_.emplace(s, std::make_pair(result, order_.begin()));
    }
    return result;
  }

private:
  auto solve(VertexSet s) -> Counts
  {
    auto parts = components(g_, s);
    if (parts.size() > 1) {
      Counts r{ 1 };
      for (VertexSet c : parts)
        r = multiply(r, run(c));
      return r;
    }
    int pivot = -1;
    int best = -1;
    for (VertexSet t = s; t; t &= t - 1) {
      const int v = lowest(t);
      const int d = popcount(g_.neighbours(v) & s);
      if (d > best) {
        best = d;
        pivot = v;
      }
    }
    const int size = popcount(s);
    if (best == size - 1) {
      // Pivot adjacent to everything left: G[s] minus the pivot, plus x.
      Counts r = run(s & ~bit(pivot));
      if (r.size() < 2)
        r.resize(2, 0);
      r[1] += 1;
      return r;
    }
    Counts without = run(s & ~bit(pivot));
    Counts with = run(s & ~(g_.neighbours(pivot) | bit(pivot)));
    if (without.size() < with.size() + 1)
      without.resize(with.size() + 1, 0);
    for (std::size_t k = 0; k < with.size(); ++k)
      without[k + 1] += with[k];
    return without;
  }

  const Graph& g_;
  std::size_t cap_;
  std::list<VertexSet> order_;
  std::unordered_map<VertexSet, std::pair<Counts, std::list<VertexSet>::iterator>> memo_;
};

auto one_plus_x() -> IntPoly
{
  return ipoly({ 1, 1 });
}

void require_unit_constant(const IntPoly& p, const char* what)
{
  if (p.is_zero() || p[0] != 1)
    throw std::invalid_argument(std::string(what) + " must have constant term 1");
}

auto binomial(long n, long k) -> BigInt
{
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

} // namespace

auto indpoly(const Graph& g, std::size_t memo_entries) -> IndPolyResult
{
  Recurrence rec(g, memo_entries);
  Counts c = rec.run(g.vertices());
  std::vector<BigInt> coeffs;
  coeffs.reserve(c.size());
  for (auto v : c)
    coeffs.emplace_back(static_cast<unsigned long>(v));
  IntPoly p(std::move(coeffs));
  const int alpha = p.degree();
  return { std::move(p), alpha, IndPolySource::recurrence };
}

auto star_indpoly(long leaves) -> IntPoly
{
  if (leaves < 1)
    throw std::invalid_argument("star needs at least one leaf");
  return pow(one_plus_x(), leaves) + poly_x<BigInt>();
}

auto triangular_indpoly(long n) -> IntPoly
{
  if (n < 1)
    throw std::invalid_argument("triangular multipartite needs n >= 1");
  std::vector<BigInt> c;
  c.emplace_back(1);
  for (long j = 1; j <= n; ++j)
    c.push_back(binomial(n + 1, j + 1));
  return IntPoly(std::move(c));
}

auto multipartite_indpoly(const std::vector<long>& parts) -> IntPoly
{
  if (parts.empty())
    throw std::invalid_argument("multipartite graph needs at least one part");
  IntPoly r = IntPoly::constant(BigInt(1 - static_cast<long>(parts.size())));
  for (long a : parts) {
    if (a < 1)
      throw std::invalid_argument("part sizes must be positive");
    r += pow(one_plus_x(), a);
  }
  return r;
}

auto indpoly_closed(const FamilySpec& spec) -> IndPolyResult
{
  if (spec.params.empty())
    throw std::invalid_argument("family needs parameters");
  const long n = spec.params[0];
  IntPoly p;
  switch (spec.kind) {
  case FamilyKind::complete:
    p = ipoly({ 1, n });
    break;
  case FamilyKind::empty:
    p = pow(one_plus_x(), n);
    break;
  case FamilyKind::path: {
    IntPoly prev = IntPoly::constant(1);
    IntPoly cur = one_plus_x();
    for (long i = 1; i < n; ++i) {
      IntPoly next = cur + poly_x<BigInt>() * prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    p = cur;
    break;
  }
  case FamilyKind::star:
    p = star_indpoly(n);
    break;
  case FamilyKind::complete_multipartite:
    p = multipartite_indpoly(std::vector<long>(spec.params.begin(), spec.params.end()));
    break;
  case FamilyKind::triangular_multipartite:
    p = triangular_indpoly(n);
    break;
  case FamilyKind::cycle:
    throw std::invalid_argument("family '" + spec.to_string() + "' lacks a closed form");
  }
  const int alpha = p.degree();
  return { std::move(p), alpha, IndPolySource::closed_form };
}

auto indpoly_join(const IntPoly& pg, const IntPoly& ph) -> IntPoly
{
  require_unit_constant(pg, "join operand");
  require_unit_constant(ph, "join operand");
  return pg + ph - IntPoly::constant(1);
}

auto indpoly_corona(const IntPoly& pg, const IntPoly& ph, int n) -> IntPoly
{
  require_unit_constant(pg, "corona base");
  require_unit_constant(ph, "corona fibre");
  if (pg.degree() > n)
    throw std::invalid_argument("corona base degree exceeds its order");
  // Horner in the ratio x / i(H): sum_j g_j x^j i(H)^(n-j).
  IntPoly r;
  IntPoly hpow = IntPoly::constant(1);
  for (int j = n; j >= 0; --j) {
    if (j <= pg.degree() && pg[j] != 0)
      r += IntPoly::monomial(pg[j], static_cast<std::size_t>(j)) * hpow;
    if (j > 0)
      hpow = hpow * ph;
  }
  return r;
}

auto indpoly_lex(const IntPoly& pg, const IntPoly& ph) -> IntPoly
{
  require_unit_constant(pg, "lexicographic base");
  require_unit_constant(ph, "lexicographic fibre");
  return compose(pg, ph - IntPoly::constant(1));
}

auto indpoly_kstar(const IntPoly& pg, int n, int k) -> IntPoly
{
  if (k < 1)
    throw std::invalid_argument("graph star iteration count must be positive");
  if (k > 30)
    throw std::invalid_argument("graph star iteration count too large");
  require_unit_constant(pg, "graph star base");
  if (pg.degree() > n)
    throw std::invalid_argument("graph star base degree exceeds its order");
  IntPoly r = indpoly_corona(pg, ipoly({ 1, k }), n);
  for (int l = 1; l < k; ++l)
    r = r * pow(ipoly({ 1, l }), static_cast<long>(n) << (k - l - 1));
  return r;
}

auto to_json(const IndPolyResult& r, const std::string& graph_id, long long n) -> nlohmann::json
{
  return { { "graph_id", graph_id },
           { "n", n },
           { "alpha", r.alpha },
           { "coefficients", to_json(r.poly) },
           { "source", to_string(r.source) } };
}

} // namespace indstab
