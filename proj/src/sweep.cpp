#include "indstab/sweep.hpp"

#include "indstab/constructions.hpp"
#include "indstab/enumerate.hpp"
#include "indstab/indpoly.hpp"
#include "indstab/sparse.hpp"

#include <chrono>
#include <climits>
#include <functional>

namespace indstab {

using nlohmann::json;

namespace {

struct FamilyInfo
{
  SweepFamily family;
  const char* name;
  long max_parameter;
  bool needs_size;
  bool needs_base;
};

constexpr FamilyInfo families[] = {
  { SweepFamily::triangular_multipartite, "triangular_multipartite", 500, false, false },
  { SweepFamily::star, "star", 5000, false, false },
  { SweepFamily::balanced_multipartite, "balanced_multipartite", 1000, true, false },
  { SweepFamily::join_clique, "join_clique", 1000000, false, true },
  { SweepFamily::corona_star_tree, "corona_star_tree", 2000, true, false },
  { SweepFamily::lex_path, "lex_path", 400, false, true },
  { SweepFamily::kstar, "kstar", 16, false, true },
};

auto info(SweepFamily f) -> const FamilyInfo&
{
  for (const auto& i : families)
    if (i.family == f)
      return i;
  throw SweepError("unknown family");
}

// Exact verdicts above this degree are reported as a cap hit.
constexpr int exact_max_degree = 4000;

auto parse_long(const std::string& s, const std::string& what) -> long
{
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used == s.size())
      return v;
  } catch (const std::exception&) {
  }
  throw SweepError("bad " + what + " '" + s + "'");
}

auto seconds_since(std::chrono::steady_clock::time_point t0) -> double
{
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Instance
{
  IntPoly poly;
  long long order = 0;
  std::function<Graph()> build;
};

auto one_plus_x_pow(int m) -> IntPoly
{
  return pow(ipoly({ 1, 1 }), m);
}

auto instance(const SweepSpec& s, const std::optional<GraphArg>& base, long t) -> Instance
{
  Instance in;
  switch (s.family) {
  case SweepFamily::triangular_multipartite: {
    in.poly = triangular_indpoly(t);
    in.order = static_cast<long long>(t) * (t + 1) / 2;
    in.build = [t] {
      std::vector<int> parts;
      for (int i = 1; i <= t; ++i)
        parts.push_back(i);
      return complete_multipartite(parts);
    };
    break;
  }
  case SweepFamily::star:
    in.poly = star_indpoly(t);
    in.order = t + 1;
    in.build = [t] { return star_graph(static_cast<int>(t)); };
    break;
  case SweepFamily::balanced_multipartite:
    in.poly = multipartite_indpoly(std::vector<long>(static_cast<std::size_t>(s.size), t));
    in.order = static_cast<long long>(s.size) * t;
    in.build = [k = s.size, t] { return complete_multipartite(std::vector<int>(k, static_cast<int>(t))); };
    break;
  case SweepFamily::join_clique:
    in.poly = indpoly_join(base->poly, ipoly({ 1, t }));
    in.order = base->order + t;
    if (base->graph)
      in.build = [g = *base->graph, t] { return join(g, complete_graph(static_cast<int>(t))); };
    break;
  case SweepFamily::corona_star_tree:
    in.poly = indpoly_corona(star_indpoly(t), one_plus_x_pow(s.size), static_cast<int>(t + 1));
    in.order = static_cast<long long>(t + 1) * (s.size + 1);
    in.build = [t, m = s.size] { return corona(star_graph(static_cast<int>(t)), empty_graph(m)); };
    break;
  case SweepFamily::lex_path: {
    const auto path = indpoly_closed(FamilySpec::parse("path:" + std::to_string(t))).poly;
    in.poly = indpoly_lex(path, base->poly);
    in.order = static_cast<long long>(t) * base->order;
    if (base->graph)
      in.build = [g = *base->graph, t] { return lex_product(path_graph(static_cast<int>(t)), g); };
    break;
  }
  case SweepFamily::kstar:
    in.poly = indpoly_kstar(base->poly, static_cast<int>(base->order), static_cast<int>(t));
    in.order = base->order << t;
    if (base->graph)
      in.build = [g = *base->graph, t] { return graph_star(g, static_cast<int>(t)); };
    break;
  }
  return in;
}

void record(ScanReport& summary, long long order, double max_re, const std::string& id)
{
  if (order > INT_MAX)
    return;
  auto& e = summary.by_order[static_cast<int>(order)];
  ++e.graphs;
  if (e.graph_id.empty() || max_re > e.max_re) {
    e.max_re = max_re;
    e.graph_id = id;
  }
}

} // namespace

auto to_string(SweepFamily f) -> std::string
{
  return info(f).name;
}

auto SweepSpec::parse(const std::string& family, const std::string& range) -> SweepSpec
{
  SweepSpec s;
  const auto colon = family.find(':');
  const std::string name = family.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : family.substr(colon + 1);
  const FamilyInfo* found = nullptr;
  for (const auto& i : families)
    if (name == i.name)
      found = &i;
  if (!found)
    throw SweepError("unknown sweep family '" + name + "'");
  s.family = found->family;
  if ((found->needs_size || found->needs_base) && arg.empty())
    throw SweepError("family '" + name + "' needs an argument, e.g. " + name +
                     (found->needs_size ? ":4" : ":empty:4"));
  if (!found->needs_size && !found->needs_base && !arg.empty())
    throw SweepError("family '" + name + "' takes no argument");
  if (found->needs_size) {
    const long v = parse_long(arg, "size");
    if (v < 1 || v > 64)
      throw SweepError("size must be in 1..64");
    s.size = static_cast<int>(v);
  }
  if (found->needs_base)
    s.base = arg;

  const auto dots = range.find("..");
  if (dots == std::string::npos) {
    s.from = s.to = parse_long(range, "range");
  } else {
    s.from = parse_long(range.substr(0, dots), "range start");
    s.to = parse_long(range.substr(dots + 2), "range end");
  }
  if (s.from < 1 || s.from > s.to)
    throw SweepError("range must be A..B with 1 <= A <= B");
  if (s.to > found->max_parameter)
    throw SweepError("family '" + name + "' parameter cap is " + std::to_string(found->max_parameter));
  return s;
}

auto SweepSpec::label() const -> std::string
{
  std::string out = to_string(family);
  if (info(family).needs_size)
    out += ":" + std::to_string(size);
  if (info(family).needs_base)
    out += ":" + base;
  return out + " " + std::to_string(from) + ".." + std::to_string(to);
}

auto SweepSpec::label(long t) const -> std::string
{
  const std::string n = std::to_string(t);
  switch (family) {
  case SweepFamily::triangular_multipartite: return "K_{1..." + n + "}";
  case SweepFamily::star: return "K_{1," + n + "}";
  case SweepFamily::balanced_multipartite: return "K_{" + n + " x" + std::to_string(size) + "}";
  case SweepFamily::join_clique: return base + " + K_" + n;
  case SweepFamily::corona_star_tree: return "K_{1," + n + "} o empty:" + std::to_string(size);
  case SweepFamily::lex_path: return "P_" + n + "[" + base + "]";
  case SweepFamily::kstar: return base + " star^" + n;
  }
  return n;
}

auto SweepReport::first_nonstable() const -> const SweepRow*
{
  for (const auto& r : rows)
    if (r.status == StabilityStatus::nonstable)
      return &r;
  return nullptr;
}

auto sweep_family(const SweepSpec& spec) -> SweepReport
{
  const auto t0 = std::chrono::steady_clock::now();
  if (spec.from < 1 || spec.from > spec.to)
    throw SweepError("empty sweep range");
  if (spec.to > info(spec.family).max_parameter)
    throw SweepError("parameter cap exceeded");
  SweepReport report;
  report.spec = spec;
  report.summary.corpus = spec.label();
  std::optional<GraphArg> base;
  if (info(spec.family).needs_base)
    base = parse_graph_arg(spec.base);

  for (long t = spec.from; t <= spec.to; ++t) {
    SweepRow row;
    row.parameter = t;
    const std::string id = spec.label(t);
    try {
      const Instance in = instance(spec, base, t);
      row.order = in.order;
      row.degree = in.poly.degree();
      if (row.degree > exact_max_degree)
        throw SweepError("degree " + std::to_string(row.degree) + " above the exact cap " +
                         std::to_string(exact_max_degree));
      const auto v = stability_verdict(in.poly);
      row.status = v.status;
      ++report.summary.scanned;
      if (v.stable())
        ++report.summary.stable;
      else {
        ++report.summary.nonstable;
        report.summary.nonstable_list.push_back(to_json(v, id));
      }

      if (in.build && in.order <= spec.explicit_max_order) {
        const Graph g = in.build();
        const IntPoly direct = indpoly(g).poly;
        row.explicit_match = direct == in.poly && stability_verdict(direct).status == v.status;
        if (!*row.explicit_match)
          ++report.explicit_mismatches;
      }

      if (row.degree >= 1 && row.degree <= spec.numeric_max_degree) {
        const auto rs = all_roots(in.poly);
        const auto top = max_real_part(rs);
        row.max_re = top.value;
        row.witness = top.root;
        record(report.summary, in.order, top.value, id);
        try {
          cross_check(v, rs, spec.margin);
        } catch (const VerdictDisagreement& e) {
          ++report.summary.invariants.disagreements;
          json d = e.diagnostic();
          d["graph_id"] = id;
          report.summary.disagreement_list.push_back(d);
        }
        if (spec.keep_roots)
          for (auto& r : root_rows(id, rs))
            report.summary.roots.push_back(std::move(r));
      }

      if (spec.family == SweepFamily::corona_star_tree && !v.stable()) {
        const auto tree = sparse_corona(sparse_star(static_cast<int>(t)), sparse_empty(spec.size));
        row.tree_checked = is_tree(tree) && forest_indpoly(tree) == in.poly;
      }
    } catch (const std::exception& e) {
      row.error = e.what();
      ++report.errors;
    }
    report.rows.push_back(std::move(row));
  }
  report.summary.seconds = seconds_since(t0);
  return report;
}

auto to_json(const SweepReport& r) -> json
{
  json rows = json::array();
  for (const auto& row : r.rows) {
    json j = { { "parameter", row.parameter }, { "order", row.order }, { "degree", row.degree } };
    j["status"] = row.status ? json(to_string(*row.status)) : json(nullptr);
    j["max_re"] = row.max_re ? json(*row.max_re) : json(nullptr);
    if (row.witness)
      j["witness"] = { row.witness->real(), row.witness->imag() };
    if (row.explicit_match)
      j["explicit_match"] = *row.explicit_match;
    if (row.tree_checked)
      j["tree_checked"] = *row.tree_checked;
    if (!row.error.empty())
      j["error"] = row.error;
    rows.push_back(std::move(j));
  }
  json out = to_json(r.summary);
  out["family"] = to_string(r.spec.family);
  out["range"] = { r.spec.from, r.spec.to };
  out["rows"] = std::move(rows);
  out["explicit_mismatches"] = r.explicit_mismatches;
  out["errors"] = r.errors;
  if (const auto* f = r.first_nonstable())
    out["first_nonstable"] = f->parameter;
  return out;
}

auto SearchBudget::level(int budget) -> SearchBudget
{
  SearchBudget b;
  if (budget <= 0)
    return b;
  b.graph_order = std::min(budget, max_enumerated_graph_order);
  b.tree_order = std::min(2 * budget, 16);
  b.join_base_order = std::min(budget, 8);
  b.corona_m = budget >= 4 ? 4 : 0;
  return b;
}

auto SearchBudget::empty() const -> bool
{
  return graph_order <= 0 && tree_order <= 0 && join_base_order <= 0 && corona_m <= 0;
}

namespace {

void offer(SmallestNonstableReport& r, BoundWitness w)
{
  if (!r.upper || w.order < r.upper->order)
    r.upper = w;
  r.candidates.push_back(std::move(w));
}

} // namespace

auto smallest_nonstable_search(const SearchBudget& budget) -> SmallestNonstableReport
{
  const auto t0 = std::chrono::steady_clock::now();
  SmallestNonstableReport out;
  out.budget = budget;
  ScanOptions opts;
  opts.workers = budget.workers;
  opts.numeric = false;

  for (int n = 1; n <= std::min(budget.graph_order, max_enumerated_graph_order); ++n) {
    const auto rep = scan(enumerate_graphs(n, budget.workers), "graphs:" + std::to_string(n), opts);
    if (rep.nonstable > 0) {
      offer(out, { n, "exhaustive graph scan", rep.nonstable_list.front() });
      out.lower_bound = n;
      out.lower_source = "first nonstable graph found at order " + std::to_string(n);
      break;
    }
    out.lower_bound = n + 1;
    out.lower_source = "all graphs on at most " + std::to_string(n) + " vertices are Stable";
  }

  if (budget.tree_order > 0) {
    const auto rep = scan_trees(std::min(budget.tree_order, max_enumerated_tree_order), opts);
    if (rep.nonstable > 0) {
      const auto& first = rep.nonstable_list.front();
      const long long order = from_graph6(first.at("graph_id").get<std::string>()).order();
      offer(out, { order, "exhaustive tree scan", first });
    }
  }

  if (budget.join_base_order > 0) {
    for (int n = 1; n <= std::min(budget.join_base_order, max_enumerated_graph_order); ++n)
      for (const Graph& g : enumerate_graphs(n, budget.workers)) {
        const IntPoly pg = indpoly(g).poly;
        // Only joins smaller than the best bound so far are worth checking.
        const long cap = out.upper ? out.upper->order - n - 1 : 200;
        for (long m = 1; m <= cap; ++m) {
          const IntPoly p = indpoly_join(pg, ipoly({ 1, m }));
          auto v = hb_stable(p);
          if (!v.stable()) {
            const std::string id = to_graph6(g) + " + K_" + std::to_string(m);
            offer(out, { n + m, "join of " + to_graph6(g) + " with K_" + std::to_string(m), to_json(v, id) });
            break;
          }
        }
      }
  }

  if (budget.corona_m > 0) {
    const auto c = find_corona_star_tree(budget.corona_m);
    if (c.found && c.witness_is_tree && c.polynomial_matches)
      offer(out, { c.vertices,
                   "tree K_{1," + std::to_string(c.n) + "} o empty:" + std::to_string(budget.corona_m),
                   to_json(c.verdict) });
  }
  out.seconds = seconds_since(t0);
  return out;
}

auto to_json(const SmallestNonstableReport& r) -> json
{
  json cands = json::array();
  for (const auto& c : r.candidates)
    cands.push_back({ { "order", c.order }, { "construction", c.construction }, { "verdict", c.verdict } });
  json out = { { "budget",
                 { { "graph_order", r.budget.graph_order },
                   { "tree_order", r.budget.tree_order },
                   { "join_base_order", r.budget.join_base_order },
                   { "corona_m", r.budget.corona_m } } },
               { "lower_bound", r.lower_bound ? json(*r.lower_bound) : json("unknown") },
               { "lower_source", r.lower_source },
               { "upper_bound", r.upper ? json(r.upper->order) : json("unknown") },
               { "candidates", cands },
               { "optimal", false },
               { "seconds", r.seconds } };
  if (r.upper)
    out["upper_witness"] = { { "order", r.upper->order },
                             { "construction", r.upper->construction },
                             { "verdict", r.upper->verdict } };
  return out;
}

} // namespace indstab
