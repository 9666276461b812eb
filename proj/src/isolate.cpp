#include "indstab/isolate.hpp"

#include "indstab/roots.hpp"
#include "indstab/sturm.hpp"

#include <algorithm>
#include <cmath>

namespace indstab {

auto root_bound(const IntPoly& p) -> BigInt
{
  if (p.degree() < 1)
    return BigInt(1);
  // Cauchy: |z| < 1 + max |a_i / a_d|; rounded up to a power of two.
  BigInt top = 0;
  for (int i = 0; i < p.degree(); ++i)
    if (abs(p[i]) > top)
      top = abs(p[i]);
  BigInt lead = abs(p.leading());
  BigInt q = (top + lead - 1) / lead + 1;
  BigInt b = 1;
  while (b < q)
    b *= 2;
  return b;
}

namespace {

auto mid(const Rational& a, const Rational& b) -> Rational
{
  Rational m = (a + b) / 2;
  m.canonicalize();
  return m;
}

} // namespace

namespace {

// Numeric guides are only trusted after exact sign checks.
constexpr unsigned guide_bits[] = { 512 };

// Sorted real parts of the numeric roots when all of them look real.
auto numeric_real_roots(const IntPoly& q, unsigned max_bits) -> std::optional<std::vector<double>>
{
  ComplexRootSet rs;
  try {
    RootOptions opt;
    opt.max_bits = max_bits;
    rs = all_roots(q, opt);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  std::vector<double> xs;
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    const Complex z = rs.roots[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      return std::nullopt;
    if (std::fabs(z.imag()) > 1e-6 * std::max(1.0, std::fabs(z.real())) + rs.radii[i])
      return std::nullopt;
    xs.push_back(z.real());
  }
  std::sort(xs.begin(), xs.end());
  return xs;
}

// -B, midpoints of consecutive values, +B. Nothing if two values coincide.
auto separators(const std::vector<double>& xs, const BigInt& bound) -> std::optional<std::vector<Rational>>
{
  std::vector<Rational> points;
  points.emplace_back(-bound);
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    double m = xs[i] + (xs[i + 1] - xs[i]) / 2;
    if (!(xs[i] < m && m < xs[i + 1]))
      return std::nullopt;
    points.push_back(to_rational(m));
  }
  points.emplace_back(bound);
  return points;
}

// q must change sign across exactly the gaps flagged in expect, and never
// vanish at a point. With deg q flagged gaps this pins one simple root to
// each flagged gap and none elsewhere.
auto signs_match(const IntPoly& q, const std::vector<Rational>& points, const std::vector<bool>& expect) -> bool
{
  int last = sign_at(q, points[0]);
  if (last == 0)
    return false;
  for (std::size_t i = 1; i < points.size(); ++i) {
    const int s = sign_at(q, points[i]);
    if (s == 0 || (s != last) != expect[i - 1])
      return false;
    last = s;
  }
  return true;
}

} // namespace

auto certify_distinct_real_roots(const IntPoly& q) -> std::optional<std::vector<RootInterval>>
{
  const int d = q.degree();
  std::vector<RootInterval> out;
  if (d < 1)
    return out;
  if (d == 1) {
    Rational r(-q[0], q[1]);
    r.canonicalize();
    out.push_back({ r, r, 1 });
    return out;
  }
  std::optional<std::vector<Rational>> points;
  for (unsigned bits : guide_bits) {
    auto xs = numeric_real_roots(q, bits);
    if (!xs || static_cast<int>(xs->size()) != d)
      continue;
    points = separators(*xs, root_bound(q));
    if (points && signs_match(q, *points, std::vector<bool>(points->size() - 1, true)))
      break;
    points.reset();
  }
  if (!points)
    return std::nullopt;
  for (std::size_t i = 0; i + 1 < points->size(); ++i)
    out.push_back({ (*points)[i], (*points)[i + 1], 1 });
  return out;
}

namespace {

// Sturm bisection on a squarefree polynomial.
auto sturm_isolate(const IntPoly& q) -> std::vector<RootInterval>
{
  std::vector<RootInterval> out;
  if (q.degree() < 1)
    return out;
  auto seq = sturm_sequence(q);
  auto var = [&](const Rational& x) { return sign_variations(seq, Extended::at(x)); };
  const BigInt b = root_bound(q);
  struct Job
  {
    Rational lo, hi;
    int vlo, vhi;
  };
  std::vector<Job> jobs;
  jobs.push_back({ Rational(-b), Rational(b), var(Rational(-b)), var(Rational(b)) });
  while (!jobs.empty()) {
    Job j = jobs.back();
    jobs.pop_back();
    const int count = j.vlo - j.vhi;
    if (count <= 0)
      continue;
    if (count == 1) {
      out.push_back({ j.lo, j.hi, 1 });
      continue;
    }
    Rational m = mid(j.lo, j.hi);
    if (sign_at(q, m) != 0) {
      const int vm = var(m);
      jobs.push_back({ j.lo, m, j.vlo, vm });
      jobs.push_back({ m, j.hi, vm, j.vhi });
      continue;
    }
    out.push_back({ m, m, 1 });
    Rational delta = (j.hi - j.lo) / 4;
    for (;;) {
      Rational a = m - delta, c = m + delta;
      if (sign_at(q, a) != 0 && sign_at(q, c) != 0) {
        const int va = var(a), vc = var(c);
        if (va - vc == 1) {
          jobs.push_back({ j.lo, a, j.vlo, va });
          jobs.push_back({ c, j.hi, vc, j.vhi });
          break;
        }
      }
      delta /= 2;
    }
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
  return out;
}

auto contains_root(const IntPoly& factor, const RootInterval& r) -> bool
{
  if (r.exact())
    return sign_at(factor, r.lo) == 0;
  return sign_at(factor, r.lo) * sign_at(factor, r.hi) < 0;
}

auto isolate_squarefree(const IntPoly& q) -> std::vector<RootInterval>
{
  if (auto fast = certify_distinct_real_roots(q))
    return *fast;
  return sturm_isolate(q);
}

} // namespace

auto isolate_real_roots(const IntPoly& f) -> RootIsolation
{
  if (f.is_zero())
    throw std::domain_error("root isolation of the zero polynomial");
  RootIsolation iso;
  if (auto fast = certify_distinct_real_roots(f)) {
    iso.squarefree = primitive_part(f);
    iso.roots = std::move(*fast);
    return iso;
  }
  iso.squarefree = squarefree_part(f);
  iso.roots = sturm_isolate(iso.squarefree);
  auto factors = squarefree_factorization(f);
  if (factors.size() > 1)
    for (auto& r : iso.roots)
      for (std::size_t i = 0; i < factors.size(); ++i)
        if (factors[i].degree() > 0 && contains_root(factors[i], r)) {
          r.multiplicity = static_cast<int>(i) + 1;
          break;
        }
  return iso;
}

auto isolate_real_roots(const RatPoly& f) -> RootIsolation
{
  if (f.is_zero())
    throw std::domain_error("root isolation of the zero polynomial");
  return isolate_real_roots(primitive_integer(f).poly);
}

void bisect(const IntPoly& q, RootInterval& r)
{
  if (r.exact())
    return;
  Rational m = mid(r.lo, r.hi);
  const int s = sign_at(q, m);
  if (s == 0)
    r.lo = r.hi = m;
  else if (s == sign_at(q, r.lo))
    r.lo = m;
  else
    r.hi = m;
}

void refine(RootIsolation& iso, const Rational& width)
{
  for (auto& r : iso.roots)
    while (!r.exact() && r.hi - r.lo > width)
      bisect(iso.squarefree, r);
}

namespace {

// Both polynomials squarefree with all roots real and no root in common:
// one set of separators between the merged numeric roots certifies both and
// their relative order at once.
auto certify_pair(const IntPoly& f, const IntPoly& g, unsigned bits) -> std::optional<MergedRoots>
{
  if (f.degree() < 1 || g.degree() < 1)
    return std::nullopt;
  auto xf = numeric_real_roots(f, bits);
  if (!xf || static_cast<int>(xf->size()) != f.degree())
    return std::nullopt;
  auto xg = numeric_real_roots(g, bits);
  if (!xg || static_cast<int>(xg->size()) != g.degree())
    return std::nullopt;
  std::vector<std::pair<double, bool>> all;
  for (double x : *xf)
    all.emplace_back(x, true);
  for (double x : *xg)
    all.emplace_back(x, false);
  std::sort(all.begin(), all.end());
  std::vector<double> xs;
  std::vector<bool> in_f, in_g;
  for (const auto& [x, from_f] : all) {
    xs.push_back(x);
    in_f.push_back(from_f);
    in_g.push_back(!from_f);
  }
  const BigInt bf = root_bound(f), bg = root_bound(g);
  auto points = separators(xs, bf > bg ? bf : bg);
  if (!points || !signs_match(f, *points, in_f) || !signs_match(g, *points, in_g))
    return std::nullopt;
  MergedRoots out;
  out.squarefree = primitive_part(f * g);
  for (std::size_t i = 0; i < xs.size(); ++i)
    out.roots.push_back({ (*points)[i], (*points)[i + 1], in_f[i] ? 1 : 0, in_g[i] ? 1 : 0 });
  return out;
}

auto multiplicity(const std::vector<IntPoly>& factors, const RootInterval& r) -> int
{
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (factors[i].degree() > 0 && contains_root(factors[i], r))
      return static_cast<int>(i) + 1;
  return 0;
}

} // namespace

auto merge_real_roots(const IntPoly& f, const IntPoly& g) -> MergedRoots
{
  if (f.is_zero() || g.is_zero())
    throw std::domain_error("merging roots of the zero polynomial");
  for (unsigned bits : guide_bits)
    if (auto m = certify_pair(f, g, bits))
      return *m;
  MergedRoots out;
  out.squarefree = squarefree_part(f * g);
  auto yf = squarefree_factorization(f);
  auto yg = squarefree_factorization(g);
  for (const auto& r : isolate_squarefree(out.squarefree))
    out.roots.push_back({ r.lo, r.hi, multiplicity(yf, r), multiplicity(yg, r) });
  return out;
}

auto to_string(Interlacing i) -> std::string
{
  switch (i) {
  case Interlacing::interlaces:
    return "interlaces";
  case Interlacing::alternates_left:
    return "alternates_left";
  case Interlacing::neither:
    return "neither";
  }
  return "unknown";
}

auto interlacing_order(const std::vector<int>& s, const std::vector<int>& t) -> InterlacingResult
{
  const std::size_t n = s.size(), m = t.size();
  InterlacingResult out;
  auto fail = [&](const std::string& lhs, std::size_t i, const std::string& rhs, std::size_t j) {
    out.relation = Interlacing::neither;
    out.violation = lhs + "_" + std::to_string(i + 1) + " <= " + rhs + "_" + std::to_string(j + 1);
    return out;
  };
  if (m == n + 1) {
    for (std::size_t i = 0; i < n; ++i) {
      if (t[i] > s[i])
        return fail("t", i, "s", i);
      if (s[i] > t[i + 1])
        return fail("s", i, "t", i + 1);
    }
    out.relation = Interlacing::interlaces;
    return out;
  }
  if (m == n) {
    for (std::size_t i = 0; i < n; ++i) {
      if (s[i] > t[i])
        return fail("s", i, "t", i);
      if (i + 1 < n && t[i] > s[i + 1])
        return fail("t", i, "s", i + 1);
    }
    out.relation = Interlacing::alternates_left;
    return out;
  }
  throw std::invalid_argument("root counts fit neither interlacing pattern");
}

auto interlaces(const IntPoly& f, const IntPoly& g) -> InterlacingResult
{
  const int n = f.degree(), m = g.degree();
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("interlacing needs nonzero polynomials");
  if (m != n + 1 && m != n)
    throw std::invalid_argument("degrees " + std::to_string(n) + " and " + std::to_string(m) +
                                " fit neither interlacing pattern");
  auto merged = merge_real_roots(f, g);
  std::vector<int> s, t;
  for (std::size_t i = 0; i < merged.roots.size(); ++i) {
    for (int k = 0; k < merged.roots[i].mult_f; ++k)
      s.push_back(static_cast<int>(i));
    for (int k = 0; k < merged.roots[i].mult_g; ++k)
      t.push_back(static_cast<int>(i));
  }
  if (static_cast<int>(s.size()) != n)
    throw std::invalid_argument("first polynomial is not real-rooted");
  if (static_cast<int>(t.size()) != m)
    throw std::invalid_argument("second polynomial is not real-rooted");
  return interlacing_order(s, t);
}

auto interlaces(const RatPoly& f, const RatPoly& g) -> InterlacingResult
{
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("interlacing needs nonzero polynomials");
  return interlaces(primitive_integer(f).poly, primitive_integer(g).poly);
}

} // namespace indstab
