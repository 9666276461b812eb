// Command-line front end: polynomials, verdicts, roots, corpus scans, family
// sweeps, bound search, certificate replay and plots.

#include "indstab/enumerate.hpp"
#include "indstab/indpoly.hpp"
#include "indstab/io.hpp"
#include "indstab/roots.hpp"
#include "indstab/scan.hpp"
#include "indstab/stability.hpp"
#include "indstab/sweep.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace indstab;
using nlohmann::json;

namespace {

struct Common
{
  int workers = 0;
  unsigned precision = 1024;
  int indent = 2;
};

// A polynomial argument: an existing file holds coefficients, anything else
// is a graph (graph6 or family spec).
struct Target
{
  std::string id;
  IntPoly poly;
  std::optional<GraphArg> graph;
};

auto resolve_target(const std::string& arg) -> Target
{
  if (std::filesystem::is_regular_file(arg))
    return { std::filesystem::path(arg).filename().string(), read_poly_file(arg), std::nullopt };
  auto g = parse_graph_arg(arg);
  return { arg, g.poly, g };
}

void emit(const json& j, const std::string& path, int indent)
{
  const std::string text = j.dump(indent) + "\n";
  if (path.empty() || path == "-")
    std::cout << text;
  else
    write_text_file(path, text);
}

void write_csv(const std::string& path, const std::vector<RootRow>& rows)
{
  if (path == "-") {
    write_roots_csv(std::cout, rows);
    return;
  }
  std::ofstream out(path);
  if (!out)
    throw IoError("cannot write " + path);
  write_roots_csv(out, rows);
}

auto root_options(const Common& c) -> RootOptions
{
  RootOptions o;
  o.max_bits = std::max(64U, c.precision);
  return o;
}

// Exit status for scans: 0 clean, 2 when any invariant fails.
auto scan_status(const ScanReport& r) -> int
{
  return r.invariants.total() == 0 && r.disagreement_list.empty() ? 0 : 2;
}

struct ScanArgs
{
  int max_n = 7;
  int max_alpha = 0;
  bool no_numeric = false;
  double margin = 1e-8;
  std::string json_out, csv_out, svg_out;
};

void add_scan_options(CLI::App* cmd, ScanArgs& a)
{
  cmd->add_option("--alpha-max", a.max_alpha, "only graphs with independence number at most this");
  cmd->add_flag("--no-numeric", a.no_numeric, "skip the numeric cross-check");
  cmd->add_option("--margin", a.margin, "numeric agreement margin");
  cmd->add_option("--json", a.json_out, "report file (default stdout)");
  cmd->add_option("--roots-csv", a.csv_out, "write every root to this CSV");
  cmd->add_option("--svg", a.svg_out, "scatter plot of every root");
}

auto finish_scan(const ScanReport& r, const ScanArgs& a, const Common& c, const std::string& title) -> int
{
  emit(to_json(r), a.json_out, c.indent);
  if (!a.csv_out.empty())
    write_csv(a.csv_out, r.roots);
  if (!a.svg_out.empty()) {
    PlotOptions p;
    p.title = title;
    write_text_file(a.svg_out, svg_plot(r.roots, p));
  }
  return scan_status(r);
}

auto scan_options(const ScanArgs& a, const Common& c) -> ScanOptions
{
  ScanOptions o;
  o.workers = c.workers;
  o.numeric = !a.no_numeric;
  o.margin = a.margin;
  o.max_alpha = a.max_alpha;
  o.keep_roots = !a.csv_out.empty() || !a.svg_out.empty();
  if (o.keep_roots && !o.numeric)
    throw CLI::ValidationError("--roots-csv/--svg need numeric roots; drop --no-numeric");
  return o;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{ "Independence polynomials and their stability" };
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "TOML-style config file (key = value, [subcommand] sections)");
  Common common;
  app.add_option("--workers", common.workers, "worker threads (0 = all cores)")->envname("INDSTAB_WORKERS");
  app.add_option("--precision", common.precision, "largest MPFR precision for root finding, in bits")
      ->envname("INDSTAB_PRECISION")
      ->check(CLI::Range(64U, 1U << 16));
  app.add_option("--indent", common.indent, "JSON indentation (-1 for one line)");

  std::function<int()> run;

  // indpoly
  std::string ip_graph, ip_out;
  auto* ip = app.add_subcommand("indpoly", "independence polynomial of a graph");
  ip->add_option("graph", ip_graph, "graph6 string or family spec such as star:5")->required();
  ip->add_option("-o,--output", ip_out, "output file");
  ip->callback([&] {
    run = [&] {
      const auto arg = parse_graph_arg(ip_graph);
      IndPolyResult r;
      if (arg.graph)
        r = indpoly(*arg.graph);
      else
        r = indpoly_closed(*arg.spec);
      emit(to_json(r, ip_graph, arg.order), ip_out, common.indent);
      return 0;
    };
  });

  // stability
  std::string st_target, st_out;
  bool st_numeric = false;
  double st_margin = 1e-8;
  auto* st = app.add_subcommand("stability", "exact stability verdict with certificate or witness");
  st->add_option("target", st_target, "graph6, family spec, or a polynomial file")->required();
  st->add_flag("--numeric-check", st_numeric, "cross-check against numeric roots");
  st->add_option("--margin", st_margin, "numeric agreement margin");
  st->add_option("-o,--output", st_out, "verdict JSON file");
  st->callback([&] {
    run = [&] {
      const auto t = resolve_target(st_target);
      auto v = stability_verdict(t.poly);
      if (st_numeric)
        cross_check(v, all_roots(t.poly, root_options(common)), st_margin);
      emit(to_json(v, t.id), st_out, common.indent);
      return v.stable() ? 0 : 1;
    };
  });

  // roots
  std::string rt_target, rt_csv = "-", rt_svg;
  auto* rt = app.add_subcommand("roots", "numeric roots as CSV");
  rt->add_option("target", rt_target, "graph6, family spec, or a polynomial file")->required();
  rt->add_option("-o,--output", rt_csv, "CSV file (default stdout)");
  rt->add_option("--svg", rt_svg, "also plot the roots");
  rt->callback([&] {
    run = [&] {
      const auto t = resolve_target(rt_target);
      const auto rs = all_roots(t.poly, root_options(common));
      const auto rows = root_rows(t.id, rs);
      write_csv(rt_csv, rows);
      if (!rt_svg.empty()) {
        PlotOptions p;
        p.title = t.id;
        write_text_file(rt_svg, svg_plot(rows, p));
      }
      if (!rs.converged) {
        std::cerr << "warning: root finder did not converge\n";
        return 3;
      }
      return 0;
    };
  });

  // scan-graphs / scan-trees / scan-file
  ScanArgs sg;
  auto* scg = app.add_subcommand("scan-graphs", "every graph up to an order");
  scg->add_option("--max-n", sg.max_n, "largest order")->check(CLI::Range(1, max_enumerated_graph_order));
  add_scan_options(scg, sg);
  scg->callback([&] {
    run = [&] {
      const auto r = scan_graphs(sg.max_n, scan_options(sg, common));
      return finish_scan(r, sg, common, "graphs on at most " + std::to_string(sg.max_n) + " vertices");
    };
  });

  ScanArgs tr;
  tr.max_n = 14;
  auto* sct = app.add_subcommand("scan-trees", "every free tree up to an order");
  sct->add_option("--max-n", tr.max_n, "largest order")->check(CLI::Range(1, max_enumerated_tree_order));
  add_scan_options(sct, tr);
  sct->callback([&] {
    run = [&] {
      const auto r = scan_trees(tr.max_n, scan_options(tr, common));
      return finish_scan(r, tr, common, "trees on at most " + std::to_string(tr.max_n) + " vertices");
    };
  });

  ScanArgs sf;
  std::string sf_path, sf_format = "graph6";
  auto* scf = app.add_subcommand("scan-file", "graphs read from a graph6 or edge-list file");
  scf->add_option("path", sf_path, "input file")->required()->check(CLI::ExistingFile);
  scf->add_option("--format", sf_format, "graph6 or edgelist");
  add_scan_options(scf, sf);
  scf->callback([&] {
    run = [&] {
      const auto in = ingest_file(sf_path, parse_graph_format(sf_format));
      for (const auto& e : in.errors)
        std::cerr << sf_path << ":" << e.line << ": " << e.message << "\n";
      const auto r = scan(in.graphs, sf_path, scan_options(sf, common));
      const int status = finish_scan(r, sf, common, sf_path);
      return in.errors.empty() ? status : std::max(status, 4);
    };
  });

  // sweep
  std::string sw_family, sw_range, sw_json, sw_csv, sw_svg;
  int sw_degree = 300, sw_explicit = 64;
  auto* sw = app.add_subcommand("sweep", "verdicts along a family parameter");
  sw->add_option("--family", sw_family,
                 "triangular_multipartite, star, balanced_multipartite:K, join_clique:G, "
                 "corona_star_tree:M, lex_path:H, kstar:G")
      ->required();
  sw->add_option("--range", sw_range, "A..B")->required();
  sw->add_option("--numeric-max-degree", sw_degree, "numeric roots only up to this degree");
  sw->add_option("--explicit-max-order", sw_explicit, "cross-check explicit graphs up to this order");
  sw->add_option("--json", sw_json, "report file (default stdout)");
  sw->add_option("--roots-csv", sw_csv, "roots of every member");
  sw->add_option("--svg", sw_svg, "scatter plot of every member's roots");
  sw->callback([&] {
    run = [&] {
      auto spec = SweepSpec::parse(sw_family, sw_range);
      spec.numeric_max_degree = sw_degree;
      spec.explicit_max_order = sw_explicit;
      spec.keep_roots = !sw_csv.empty() || !sw_svg.empty();
      const auto r = sweep_family(spec);
      emit(to_json(r), sw_json, common.indent);
      if (!sw_csv.empty())
        write_csv(sw_csv, r.summary.roots);
      if (!sw_svg.empty()) {
        PlotOptions p;
        p.title = spec.label();
        write_text_file(sw_svg, svg_plot(r.summary.roots, p));
      }
      return r.explicit_mismatches == 0 && r.summary.disagreement_list.empty() ? 0 : 2;
    };
  });

  // search-smallest
  int ss_budget = 0;
  SearchBudget ss_over{ -1, -1, -1, -1, 0 };
  std::string ss_out;
  auto* ss = app.add_subcommand("search-smallest", "bounds on the order of the smallest nonstable graph");
  ss->add_option("--budget", ss_budget, "effort level; 0 runs nothing");
  ss->add_option("--graph-order", ss_over.graph_order, "exhaustive graph scan up to this order");
  ss->add_option("--tree-order", ss_over.tree_order, "exhaustive tree scan up to this order");
  ss->add_option("--join-base-order", ss_over.join_base_order, "try every G up to this order in G + K_m");
  ss->add_option("--corona-m", ss_over.corona_m, "corona star trees with this m");
  ss->add_option("-o,--output", ss_out, "report file");
  ss->callback([&] {
    run = [&] {
      auto b = SearchBudget::level(ss_budget);
      if (ss_over.graph_order >= 0)
        b.graph_order = ss_over.graph_order;
      if (ss_over.tree_order >= 0)
        b.tree_order = ss_over.tree_order;
      if (ss_over.join_base_order >= 0)
        b.join_base_order = ss_over.join_base_order;
      if (ss_over.corona_m >= 0)
        b.corona_m = ss_over.corona_m;
      b.workers = common.workers;
      emit(to_json(smallest_nonstable_search(b)), ss_out, common.indent);
      return 0;
    };
  });

  // verify
  std::string vf_path;
  auto* vf = app.add_subcommand("verify", "replay a verdict certificate");
  vf->add_option("certificate", vf_path, "verdict JSON")->required()->check(CLI::ExistingFile);
  vf->callback([&] {
    run = [&] {
      const auto r = verify(json::parse(read_text_file(vf_path)));
      json out = { { "ok", r.ok }, { "checks", r.checks }, { "failures", r.failures } };
      emit(out, "", common.indent);
      return r.ok ? 0 : 1;
    };
  });

  // plot
  std::string pl_csv, pl_svg, pl_title;
  PlotOptions pl;
  auto* plt = app.add_subcommand("plot", "SVG scatter plot from a roots CSV");
  plt->add_option("csv", pl_csv, "roots CSV")->required()->check(CLI::ExistingFile);
  plt->add_option("-o,--output", pl_svg, "SVG file")->required();
  plt->add_option("--title", pl.title, "plot title");
  plt->add_option("--re-min", pl.re_min);
  plt->add_option("--re-max", pl.re_max);
  plt->add_option("--im-min", pl.im_min);
  plt->add_option("--im-max", pl.im_max);
  plt->callback([&] {
    run = [&] {
      std::ifstream in(pl_csv);
      write_text_file(pl_svg, svg_plot(read_roots_csv(in), pl));
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  try {
    return run();
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 64;
  } catch (const VerdictDisagreement& e) {
    std::cerr << "error: " << e.what() << "\n" << e.diagnostic().dump(2) << "\n";
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
