#pragma once

// Parameter sweeps over polynomial families and the bound search for the
// smallest nonstable graph.

#include "indstab/io.hpp"
#include "indstab/scan.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace indstab {

enum class SweepFamily
{
  triangular_multipartite,  // K_{1,2,...,n}
  star,                     // K_{1,n}
  balanced_multipartite,    // k parts of size n
  join_clique,              // G + K_n
  corona_star_tree,         // K_{1,n} o empty(m)
  lex_path,                 // P_n[H]
  kstar,                    // G^{n*}
};

auto to_string(SweepFamily f) -> std::string;

class SweepError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

struct SweepSpec
{
  SweepFamily family = SweepFamily::star;
  // balanced_multipartite: part count; corona_star_tree: m.
  int size = 0;
  // join_clique / kstar: G; lex_path: H. Graph6 or family spec.
  std::string base;
  long from = 1, to = 1;
  // Numeric roots only up to this degree.
  int numeric_max_degree = 300;
  // Explicit graphs are built and cross-checked up to this many vertices.
  int explicit_max_order = 64;
  bool keep_roots = false;
  double margin = 1e-8;

  // "star", "balanced_multipartite:3", "join_clique:empty:4", "lex_path:A_", ...
  // Range "A..B" or a single value.
  static auto parse(const std::string& family, const std::string& range) -> SweepSpec;
  auto label() const -> std::string;
  auto label(long parameter) const -> std::string;
};

struct SweepRow
{
  long parameter = 0;
  long long order = 0;
  int degree = 0;
  std::optional<StabilityStatus> status;
  std::optional<double> max_re;
  std::optional<Complex> witness;
  // Explicit graph built and its recurrence polynomial and verdict agree.
  std::optional<bool> explicit_match;
  // corona_star_tree: the witness graph is a tree with the same polynomial.
  std::optional<bool> tree_checked;
  std::string error;
};

struct SweepReport
{
  SweepSpec spec;
  ScanReport summary;
  std::vector<SweepRow> rows;
  long explicit_mismatches = 0;
  long errors = 0;

  auto first_nonstable() const -> const SweepRow*;
};

auto sweep_family(const SweepSpec& spec) -> SweepReport;
auto to_json(const SweepReport& r) -> nlohmann::json;

struct SearchBudget
{
  // Exhaustive scans of all graphs / trees up to these orders (0 skips).
  int graph_order = 0;
  int tree_order = 0;
  // Every graph up to this order is tried as G in G + K_m.
  int join_base_order = 0;
  // corona_star_tree with this m (0 skips).
  int corona_m = 0;
  int workers = 0;

  // Level 0 is empty; higher levels widen every part, capped at desk scale.
  static auto level(int budget) -> SearchBudget;
  auto empty() const -> bool;
};

struct BoundWitness
{
  long long order = 0;
  std::string construction;
  nlohmann::json verdict;
};

struct SmallestNonstableReport
{
  SearchBudget budget;
  // Every graph with fewer than lower_bound vertices is Stable, as verified here.
  std::optional<long long> lower_bound;
  std::string lower_source;
  std::optional<BoundWitness> upper;
  std::vector<BoundWitness> candidates;
  double seconds = 0;
};

auto smallest_nonstable_search(const SearchBudget& budget) -> SmallestNonstableReport;
auto to_json(const SmallestNonstableReport& r) -> nlohmann::json;

} // namespace indstab
