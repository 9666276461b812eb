#include "indstab/stability.hpp"

#include "indstab/isolate.hpp"
#include "indstab/sturm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace indstab {

using nlohmann::json;

auto to_string(StabilityStatus s) -> std::string
{
  return s == StabilityStatus::stable ? "Stable" : "Nonstable";
}

auto to_string(VerdictMode m) -> std::string
{
  return m == VerdictMode::exact ? "exact" : "numeric";
}

namespace {

auto rational_json(const Rational& q) -> json { return q.get_str(); }

auto rational_from(const json& j) -> Rational
{
  Rational q;
  if (!j.is_string() || q.set_str(j.get<std::string>(), 10) != 0)
    throw std::invalid_argument("bad rational in certificate");
  q.canonicalize();
  return q;
}

auto nonnegative_coefficients(const IntPoly& p) -> bool
{
  for (const auto& c : p.coeffs())
    if (sgn(c) < 0)
      return false;
  return true;
}

auto stable(const IntPoly& p, json certificate) -> StabilityVerdict
{
  StabilityVerdict v;
  v.status = StabilityStatus::stable;
  v.certificate = std::move(certificate);
  v.polynomial = p;
  return v;
}

auto nonstable(const IntPoly& p, json witness) -> StabilityVerdict
{
  StabilityVerdict v;
  v.status = StabilityStatus::nonstable;
  v.witness = std::move(witness);
  v.polynomial = p;
  return v;
}

auto defect_json(const char* part, const RealRootedness& r) -> json
{
  return { { "kind", "not_real_rooted" },
           { "part", part },
           { "defect", to_string(r.defect) },
           { "chain_index", r.index },
           { "reason", r.reason() },
           { "degrees", r.degrees },
           { "leading_signs", r.leading_signs } };
}

auto interval_json(const Rational& lo, const Rational& hi) -> json
{
  return json::array({ rational_json(lo), rational_json(hi) });
}

auto merged_json(const MergedRoots& m) -> json
{
  json rows = json::array();
  for (const auto& r : m.roots)
    rows.push_back({ { "interval", interval_json(r.lo, r.hi) }, { "odd", r.mult_f }, { "even", r.mult_g } });
  return rows;
}

// The even part alone, when the odd part vanishes: p(x) = E(x^2) is stable
// iff E has only real negative roots.
auto even_only(const IntPoly& p, const IntPoly& reduced, int zeros, const IntPoly& e) -> StabilityVerdict
{
  auto rr = is_real_rooted(e);
  if (!rr.real_rooted)
    return nonstable(p, defect_json("even", rr));
  auto iso = isolate_real_roots(e);
  json rows = json::array();
  for (const auto& r : iso.roots) {
    if (r.hi > 0 || (r.exact() && r.lo == 0))
      return nonstable(p, { { "kind", "positive_root" }, { "part", "even" }, { "interval", interval_json(r.lo, r.hi) } });
    rows.push_back({ { "interval", interval_json(r.lo, r.hi) }, { "even", r.multiplicity }, { "odd", 0 } });
  }
  return stable(p, { { "route", "hermite_biehler" },
                     { "pattern", "even_only" },
                     { "zero_roots", zeros },
                     { "reduced", to_json(reduced) },
                     { "even", to_json(e) },
                     { "odd", to_json(IntPoly{}) },
                     { "squarefree", to_json(iso.squarefree) },
                     { "roots", rows } });
}

} // namespace

auto hb_stable(const IntPoly& p) -> StabilityVerdict
{
  if (p.is_zero())
    throw std::domain_error("stability of the zero polynomial");
  if (p.leading_sign() < 0)
    throw std::invalid_argument("stability needs a positive leading coefficient");
  auto [zeros, q] = strip_zero_roots(p);
  if (q.degree() == 0)
    return stable(p, { { "route", "hermite_biehler" }, { "pattern", "constant" }, { "zero_roots", zeros },
                       { "reduced", to_json(q) } });
  auto [e, o] = even_odd_split(q);
  if (o.is_zero())
    return even_only(p, q, zeros, e);
  for (auto [name, part] : { std::pair{ "even", &e }, std::pair{ "odd", &o } })
    if (part->leading_sign() < 0)
      return nonstable(p, { { "kind", "nonstandard_part" }, { "part", name }, { "leading", part->leading().get_str() } });
  // Stable and not even forces deg E = deg O + 1 (deg q even) or
  // deg E = deg O (deg q odd).
  const int d = q.degree();
  const bool interlace = d % 2 == 0;
  if (e.degree() != (interlace ? o.degree() + 1 : o.degree()))
    return nonstable(p, { { "kind", "degree_pattern" }, { "even_degree", e.degree() }, { "odd_degree", o.degree() } });

  MergedRoots merged;
  bool have = false;
  {
    auto m = merge_real_roots(o, e);
    int so = 0, se = 0;
    for (const auto& r : m.roots) {
      so += r.mult_f;
      se += r.mult_g;
    }
    if (so == o.degree() && se == e.degree()) {
      merged = std::move(m);
      have = true;
    }
  }
  if (!have) {
    for (auto [name, part] : { std::pair{ "even", &e }, std::pair{ "odd", &o } }) {
      auto rr = is_real_rooted(*part);
      if (!rr.real_rooted)
        return nonstable(p, defect_json(name, rr));
    }
    throw std::logic_error("real-rooted parts lost roots in the merge");
  }
  const bool separated = merged.squarefree.degree() == e.degree() + o.degree();

  for (auto [name, part] : { std::pair{ "even", &e }, std::pair{ "odd", &o } }) {
    // Nonnegative coefficients and a nonzero constant leave no root in [0, inf).
    if (nonnegative_coefficients(*part) && sign_at(*part, Rational(0)) != 0)
      continue;
    const int count = count_real_roots(*part, Extended::at(Rational(0)), Extended::plus_infinity()) +
                      (sign_at(*part, Rational(0)) == 0 ? 1 : 0);
    if (count > 0)
      return nonstable(p, { { "kind", "positive_root" }, { "part", name }, { "count", count } });
  }

  std::vector<int> s, t;
  for (std::size_t i = 0; i < merged.roots.size(); ++i) {
    for (int k = 0; k < merged.roots[i].mult_f; ++k)
      s.push_back(static_cast<int>(i));
    for (int k = 0; k < merged.roots[i].mult_g; ++k)
      t.push_back(static_cast<int>(i));
  }
  auto order = interlacing_order(s, t);
  if (order.relation == Interlacing::neither)
    return nonstable(p, { { "kind", "interlacing" },
                          { "expected", interlace ? "interlaces" : "alternates_left" },
                          { "violation", order.violation },
                          { "roots", merged_json(merged) } });
  return stable(p, { { "route", "hermite_biehler" },
                     { "pattern", to_string(order.relation) },
                     { "method", separated ? "separated" : "merged" },
                     { "zero_roots", zeros },
                     { "reduced", to_json(q) },
                     { "even", to_json(e) },
                     { "odd", to_json(o) },
                     { "squarefree", to_json(merged.squarefree) },
                     { "roots", merged_json(merged) } });
}

namespace {

auto real_rooted_certificate(const IntPoly& p) -> std::optional<json>
{
  auto rr = is_real_rooted(p);
  if (!rr.real_rooted)
    return std::nullopt;
  return json{ { "route", "real_rooted" },
               { "method", "sturm_chain" },
               { "degrees", rr.degrees },
               { "leading_signs", rr.leading_signs } };
}

} // namespace

auto stability_verdict(const IntPoly& p) -> StabilityVerdict
{
  if (p.is_zero() || p[0] != 1)
    throw std::invalid_argument("independence polynomial must have constant term 1");
  for (const auto& c : p.coeffs())
    if (sgn(c) <= 0)
      throw std::invalid_argument("independence polynomial must have positive coefficients");
  // Positive coefficients leave no root in [0, inf), so real-rooted means
  // every root is negative.
  if (auto cert = real_rooted_certificate(p))
    return stable(p, std::move(*cert));
  return hb_stable(p);
}

auto numeric_verdict(const ComplexRootSet& rs, const IntPoly& p, double margin) -> StabilityVerdict
{
  StabilityVerdict v;
  v.mode = VerdictMode::numeric;
  v.polynomial = p;
  if (rs.roots.empty()) {
    v.status = StabilityStatus::stable;
    v.certificate = { { "route", "numeric" }, { "max_re", nullptr } };
    return v;
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < rs.roots.size(); ++i)
    if (rs.roots[i].real() > rs.roots[best].real())
      best = i;
  const Complex z = rs.roots[best];
  json root = { { "re", z.real() },
                { "im", z.imag() },
                { "residual", rs.residuals[best] },
                { "radius", rs.radii[best] },
                { "precision_bits", rs.precision_bits } };
  if (z.real() > margin) {
    v.status = StabilityStatus::nonstable;
    v.witness = { { "kind", "numeric_root" }, { "root", root }, { "margin", margin } };
  } else {
    v.status = StabilityStatus::stable;
    v.certificate = { { "route", "numeric" }, { "max_re", root }, { "margin", margin } };
  }
  return v;
}

void cross_check(const StabilityVerdict& exact, const ComplexRootSet& rs, double margin)
{
  if (rs.roots.empty())
    return;
  const auto top = max_real_part(rs);
  const bool agree = exact.stable() ? top.value <= margin : top.value > -margin;
  if (agree)
    return;
  json diag = { { "polynomial", to_json(exact.polynomial) },
                { "exact", to_string(exact.status) },
                { "max_re", top.value },
                { "root", { top.root.real(), top.root.imag() } },
                { "radius", top.radius },
                { "precision_bits", rs.precision_bits },
                { "margin", margin } };
  throw VerdictDisagreement("exact verdict " + to_string(exact.status) + " contradicts numeric max Re " +
                                std::to_string(top.value),
                            diag);
}

auto checked_verdict(const IntPoly& p, double margin) -> StabilityVerdict
{
  auto v = stability_verdict(p);
  if (p.degree() >= 1)
    cross_check(v, all_roots(p), margin);
  return v;
}

auto to_json(const StabilityVerdict& v, const std::optional<std::string>& graph_id) -> json
{
  json j = { { "status", to_string(v.status) }, { "mode", to_string(v.mode) }, { "polynomial", to_json(v.polynomial) } };
  if (v.stable())
    j["certificate"] = v.certificate;
  else
    j["witness"] = v.witness;
  if (graph_id)
    j["graph_id"] = *graph_id;
  return j;
}

namespace {

struct Checker
{
  VerifyReport& report;

  void expect(bool cond, const std::string& what)
  {
    ++report.checks;
    if (!cond) {
      report.ok = false;
      report.failures.push_back(what);
    }
  }
};

// The part has a root of multiplicity exactly k in the interval.
auto has_root_of_multiplicity(const std::vector<IntPoly>& yun, int k, const Rational& lo, const Rational& hi) -> bool
{
  if (k < 1 || k > static_cast<int>(yun.size()))
    return false;
  const IntPoly& f = yun[k - 1];
  if (f.degree() < 1)
    return false;
  if (lo == hi)
    return sign_at(f, lo) == 0;
  return sign_at(f, lo) * sign_at(f, hi) < 0;
}

void verify_real_rooted(const IntPoly& p, const json& cert, Checker& c)
{
  c.expect(p[0] > 0 || p.degree() < 1, "constant term positive");
  c.expect(nonnegative_coefficients(p), "coefficients nonnegative");
  const std::string method = cert.at("method");
  if (method == "sturm_chain") {
    auto rr = is_real_rooted(p);
    c.expect(rr.real_rooted, "Sturm chain has no gaps and no negative leading coefficients");
    c.expect(json(rr.degrees) == cert.at("degrees"), "chain degrees match");
    c.expect(json(rr.leading_signs) == cert.at("leading_signs"), "chain leading signs match");
    return;
  }
  c.expect(false, "unknown real-rooted method " + method);
}

void verify_hb(const IntPoly& p, const json& cert, Checker& c)
{
  auto [zeros, q] = strip_zero_roots(p);
  c.expect(zeros == cert.at("zero_roots").get<int>(), "zero root count");
  c.expect(q == int_poly_from_json(cert.at("reduced")), "reduced polynomial");
  const std::string pattern = cert.at("pattern");
  if (pattern == "constant") {
    c.expect(q.degree() == 0, "reduced polynomial is constant");
    return;
  }
  auto [e, o] = even_odd_split(q);
  c.expect(e == int_poly_from_json(cert.at("even")), "even part");
  c.expect(o == int_poly_from_json(cert.at("odd")), "odd part");
  const IntPoly u = int_poly_from_json(cert.at("squarefree"));
  const IntPoly prod = o.is_zero() ? e : e * o;
  c.expect(u.degree() >= 0 && !u.is_zero(), "squarefree polynomial nonzero");
  if (!u.is_zero() && u.degree() > 0) {
    auto qr = divmod(to_rational(prod), to_rational(u));
    c.expect(qr.remainder.is_zero(), "squarefree polynomial divides the product of the parts");
  }
  const bool separated = cert.value("method", "") == "separated";
  const auto ye = separated ? std::vector<IntPoly>{ e } : squarefree_factorization(e);
  const auto yo = o.is_zero() ? std::vector<IntPoly>{} : separated ? std::vector<IntPoly>{ o } : squarefree_factorization(o);
  if (separated)
    c.expect(primitive_part(prod) == primitive_part(u), "separated method: squarefree polynomial is the product");

  std::vector<int> s, t;
  int se = 0, so = 0;
  Rational prev_hi;
  const auto& rows = cert.at("roots");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    Rational lo = rational_from(row.at("interval").at(0)), hi = rational_from(row.at("interval").at(1));
    const int me = row.at("even"), mo = row.at("odd");
    const std::string where = "(" + lo.get_str() + ", " + hi.get_str() + ")";
    if (lo == hi)
      c.expect(sign_at(u, lo) == 0, "exact root " + lo.get_str() + " of the squarefree polynomial");
    else
      c.expect(lo < hi && sign_at(u, lo) * sign_at(u, hi) < 0, "squarefree polynomial changes sign on " + where);
    if (i > 0)
      c.expect(prev_hi < lo || (prev_hi == lo && lo != hi), "intervals ordered and disjoint at " + where);
    prev_hi = hi;
    c.expect(me > 0 || mo > 0, "interval carries a root of some part");
    if (me > 0)
      c.expect(has_root_of_multiplicity(ye, me, lo, hi), "even part root of multiplicity " + std::to_string(me) + " on " + where);
    if (mo > 0)
      c.expect(has_root_of_multiplicity(yo, mo, lo, hi), "odd part root of multiplicity " + std::to_string(mo) + " on " + where);
    const bool nonpositive = lo == hi ? lo < 0 : hi <= 0;
    if (!nonpositive) {
      // The interval may straddle 0; a part with nonnegative coefficients and a
      // nonzero constant term still has no root in [0, hi).
      if (me > 0)
        c.expect(nonnegative_coefficients(e) && sign_at(e, Rational(0)) != 0, "even part root nonpositive on " + where);
      if (mo > 0)
        c.expect(nonnegative_coefficients(o) && sign_at(o, Rational(0)) != 0, "odd part root nonpositive on " + where);
    }
    se += me;
    so += mo;
    for (int k = 0; k < mo; ++k)
      s.push_back(static_cast<int>(i));
    for (int k = 0; k < me; ++k)
      t.push_back(static_cast<int>(i));
  }
  c.expect(se == std::max(e.degree(), 0), "even part fully accounted for");
  c.expect(so == (o.is_zero() ? 0 : o.degree()), "odd part fully accounted for");
  if (pattern == "even_only") {
    c.expect(o.is_zero(), "odd part vanishes");
    return;
  }
  try {
    auto order = interlacing_order(s, t);
    c.expect(to_string(order.relation) == pattern, "root order is " + pattern);
    c.expect(pattern == (q.degree() % 2 == 0 ? "interlaces" : "alternates_left"), "pattern fits the degree parity");
  } catch (const std::invalid_argument& ex) {
    c.expect(false, ex.what());
  }
}

} // namespace

auto verify(const json& verdict) -> VerifyReport
{
  VerifyReport report;
  Checker c{ report };
  try {
    const IntPoly p = int_poly_from_json(verdict.at("polynomial"));
    const std::string status = verdict.at("status");
    const std::string mode = verdict.value("mode", "exact");
    c.expect(mode == "exact", "only exact verdicts replay");
    if (status == "Stable") {
      const auto& cert = verdict.at("certificate");
      const std::string route = cert.at("route");
      c.expect(p.leading_sign() > 0, "positive leading coefficient");
      if (route == "real_rooted")
        verify_real_rooted(p, cert, c);
      else if (route == "hermite_biehler")
        verify_hb(p, cert, c);
      else
        c.expect(false, "unknown route " + route);
    } else if (status == "Nonstable") {
      auto again = hb_stable(p);
      c.expect(!again.stable(), "recomputed verdict is Nonstable");
      const auto& w = verdict.at("witness");
      if (!again.stable())
        c.expect(again.witness.at("kind") == w.at("kind"), "witness kind matches recomputation");
    } else {
      c.expect(false, "unknown status " + status);
    }
  } catch (const std::exception& ex) {
    report.ok = false;
    report.failures.push_back(std::string("malformed verdict: ") + ex.what());
  }
  return report;
}

} // namespace indstab
