#include "indstab/scan.hpp"

#include "indstab/enumerate.hpp"
#include "indstab/indpoly.hpp"
#include "indstab/parallel.hpp"
#include "indstab/sturm.hpp"

#include <chrono>
#include <cmath>
#include <optional>

namespace indstab {

using nlohmann::json;

auto InvariantCounts::total() const -> long
{
  return coefficient_identities + pair_triple_bound + turan_alpha2 + small_alpha_stable + claw_free_real +
         real_rooted_stable + smallest_modulus_real + disagreements;
}

namespace {

struct Outcome
{
  std::string graph6;
  int order = 0;
  bool stable = false;
  json verdict;
  std::optional<double> max_re;
  InvariantCounts violations;
  std::optional<json> disagreement;
  std::vector<RootRow> roots;
};

auto binomial2(long n) -> long
{
  return n * (n - 1) / 2;
}

auto examine(const Graph& g, const ScanOptions& opt) -> Outcome
{
  Outcome out;
  out.graph6 = to_graph6(g);
  out.order = g.order();
  const auto r = indpoly(g);
  const IntPoly& p = r.poly;
  const long n = g.order();
  auto coeff = [&](int i) -> BigInt { return i <= p.degree() ? p[i] : BigInt(0); };
  InvariantCounts& bad = out.violations;

  if (coeff(0) != 1 || coeff(1) != n || coeff(2) != binomial2(n) - g.edge_count())
    ++bad.coefficient_identities;
  if (n * coeff(2) < coeff(3))
    ++bad.pair_triple_bound;
  if (r.alpha == 2 && 4 * coeff(2) > n * n)
    ++bad.turan_alpha2;

  const auto v = stability_verdict(p);
  out.stable = v.stable();
  out.verdict = to_json(v, out.graph6);

  if (r.alpha <= 3 && !v.stable())
    ++bad.small_alpha_stable;
  const bool real = is_real_rooted(p).real_rooted;
  if (is_claw_free(g) && !real)
    ++bad.claw_free_real;
  if (real && !v.stable())
    ++bad.real_rooted_stable;

  if (opt.numeric && p.degree() >= 1) {
    const auto rs = all_roots(p);
    out.max_re = max_real_part(rs).value;
    try {
      cross_check(v, rs, opt.margin);
    } catch (const VerdictDisagreement& e) {
      ++bad.disagreements;
      json d = e.diagnostic();
      d["graph_id"] = out.graph6;
      out.disagreement = d;
    }
    const auto cl = clusters(rs);
    std::size_t nearest = 0;
    for (std::size_t i = 1; i < cl.size(); ++i)
      if (std::abs(cl[i].centre) < std::abs(cl[nearest].centre))
        nearest = i;
    // Ties in modulus between a real root and a conjugate pair are allowed.
    bool real_nearest = false;
    const double m = std::abs(cl[nearest].centre);
    for (const auto& c : cl)
      if (std::abs(c.centre) <= m + c.radius + 1e-9 && std::fabs(c.centre.imag()) <= c.radius + 1e-9)
        real_nearest = true;
    if (!real_nearest)
      ++bad.smallest_modulus_real;
    if (opt.keep_roots)
      for (std::size_t i = 0; i < rs.roots.size(); ++i)
        out.roots.push_back({ out.graph6, rs.roots[i], rs.residuals[i] });
  }
  return out;
}

void add(InvariantCounts& a, const InvariantCounts& b)
{
  a.coefficient_identities += b.coefficient_identities;
  a.pair_triple_bound += b.pair_triple_bound;
  a.turan_alpha2 += b.turan_alpha2;
  a.small_alpha_stable += b.small_alpha_stable;
  a.claw_free_real += b.claw_free_real;
  a.real_rooted_stable += b.real_rooted_stable;
  a.smallest_modulus_real += b.smallest_modulus_real;
  a.disagreements += b.disagreements;
}

void merge(ScanReport& into, ScanReport&& part)
{
  into.scanned += part.scanned;
  into.stable += part.stable;
  into.nonstable += part.nonstable;
  for (auto& j : part.nonstable_list)
    into.nonstable_list.push_back(std::move(j));
  for (auto& j : part.disagreement_list)
    into.disagreement_list.push_back(std::move(j));
  for (const auto& [order, e] : part.by_order) {
    auto& mine = into.by_order[order];
    if (mine.graphs == 0 || e.max_re > mine.max_re) {
      mine.max_re = e.max_re;
      mine.graph_id = e.graph_id;
    }
    mine.graphs += e.graphs;
  }
  add(into.invariants, part.invariants);
  for (auto& r : part.roots)
    into.roots.push_back(std::move(r));
}

auto scan_body(const std::vector<Graph>& corpus, const ScanOptions& options) -> ScanReport
{
  std::vector<std::optional<Outcome>> outcomes(corpus.size());
  parallel_for(
      corpus.size(), resolve_workers(options.workers),
      [&](std::size_t i) {
        const Graph& g = corpus[i];
        if (options.max_alpha > 0 && independence_number(g) > options.max_alpha)
          return;
        try {
          outcomes[i] = examine(g, options);
        } catch (const std::exception& e) {
          throw ScanError("graph " + to_graph6(g) + ": " + e.what());
        }
      },
      16);
  ScanReport report;
  for (auto& o : outcomes) {
    if (!o)
      continue;
    ++report.scanned;
    if (o->stable)
      ++report.stable;
    else {
      ++report.nonstable;
      report.nonstable_list.push_back(std::move(o->verdict));
    }
    if (o->disagreement)
      report.disagreement_list.push_back(std::move(*o->disagreement));
    auto& e = report.by_order[o->order];
    if (o->max_re && (e.graph_id.empty() || *o->max_re > e.max_re)) {
      e.max_re = *o->max_re;
      e.graph_id = o->graph6;
    }
    ++e.graphs;
    add(report.invariants, o->violations);
    for (auto& r : o->roots)
      report.roots.push_back(std::move(r));
  }
  return report;
}

auto seconds_since(std::chrono::steady_clock::time_point t0) -> double
{
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

auto scan(const std::vector<Graph>& corpus, const std::string& descriptor, const ScanOptions& options) -> ScanReport
{
  const auto t0 = std::chrono::steady_clock::now();
  ScanReport report = scan_body(corpus, options);
  report.corpus = descriptor;
  report.seconds = seconds_since(t0);
  return report;
}

auto scan_graphs(int max_n, const ScanOptions& options) -> ScanReport
{
  const auto t0 = std::chrono::steady_clock::now();
  ScanReport report;
  report.corpus = "graphs:1.." + std::to_string(max_n);
  for (int n = 1; n <= max_n; ++n)
    merge(report, scan_body(enumerate_graphs(n, options.workers), options));
  report.seconds = seconds_since(t0);
  return report;
}

auto scan_trees(int max_n, const ScanOptions& options) -> ScanReport
{
  const auto t0 = std::chrono::steady_clock::now();
  ScanReport report;
  report.corpus = "trees:1.." + std::to_string(max_n);
  constexpr std::size_t batch = 1 << 16;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<Graph> pending;
    for_each_tree(n, [&](const Graph& g) {
      pending.push_back(g);
      if (pending.size() == batch) {
        merge(report, scan_body(pending, options));
        pending.clear();
      }
    });
    merge(report, scan_body(pending, options));
  }
  report.seconds = seconds_since(t0);
  return report;
}

auto to_json(const ScanReport& r) -> json
{
  json orders = json::object();
  for (const auto& [n, e] : r.by_order)
    orders[std::to_string(n)] = { { "graphs", e.graphs },
                                  { "max_re", e.graph_id.empty() ? json(nullptr) : json(e.max_re) },
                                  { "graph_id", e.graph_id } };
  const auto& v = r.invariants;
  return { { "corpus", r.corpus },
           { "scanned", r.scanned },
           { "stable", r.stable },
           { "nonstable", r.nonstable },
           { "nonstable_list", r.nonstable_list },
           { "disagreements", r.disagreement_list },
           { "by_order", orders },
           { "invariant_violations",
             { { "coefficient_identities", v.coefficient_identities },
               { "pair_triple_bound", v.pair_triple_bound },
               { "turan_alpha2", v.turan_alpha2 },
               { "small_alpha_stable", v.small_alpha_stable },
               { "claw_free_real", v.claw_free_real },
               { "real_rooted_stable", v.real_rooted_stable },
               { "smallest_modulus_real", v.smallest_modulus_real },
               { "disagreements", v.disagreements } } },
           { "seconds", r.seconds } };
}

} // namespace indstab
