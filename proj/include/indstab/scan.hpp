#pragma once

// Corpus scans: exact verdict per graph, numeric cross-check, and the
// structural invariants counted as violations.

#include "indstab/graph.hpp"
#include "indstab/roots.hpp"
#include "indstab/stability.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace indstab {

struct ScanOptions
{
  int workers = 0;
  bool numeric = true;
  double margin = 1e-8;
  bool keep_roots = false;
  // Only graphs with independence number at most this are scanned; 0 keeps all.
  int max_alpha = 0;
};

struct RootRow
{
  std::string graph_id;
  Complex root;
  double residual = 0;
};

struct OrderExtreme
{
  double max_re = -1e300;
  std::string graph_id;
  long graphs = 0;
};

// Violation counters; every entry should stay zero.
struct InvariantCounts
{
  long coefficient_identities = 0;  // i0 = 1, i1 = n, i2 = C(n,2) - |E|
  long pair_triple_bound = 0;       // n i2 >= i3
  long turan_alpha2 = 0;            // alpha = 2 implies i2 <= n^2/4
  long small_alpha_stable = 0;      // alpha <= 3 implies Stable
  long claw_free_real = 0;          // claw-free implies real-rooted
  long real_rooted_stable = 0;      // real-rooted implies Stable
  long smallest_modulus_real = 0;   // numeric smallest-modulus root is real
  long disagreements = 0;           // exact verdict vs numeric max Re

  auto total() const -> long;
};

struct ScanReport
{
  std::string corpus;
  long scanned = 0;
  long stable = 0;
  long nonstable = 0;
  // Nonstable graphs with their verdict JSON (replayable).
  std::vector<nlohmann::json> nonstable_list;
  std::vector<nlohmann::json> disagreement_list;
  std::map<int, OrderExtreme> by_order;
  InvariantCounts invariants;
  std::vector<RootRow> roots;
  double seconds = 0;
};

class ScanError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// Deterministic whatever the worker count. A failure on any graph throws
// ScanError naming its graph6 string.
auto scan(const std::vector<Graph>& corpus, const std::string& descriptor, const ScanOptions& options = {})
    -> ScanReport;

// All graphs (trees) with 1..max_n vertices.
auto scan_graphs(int max_n, const ScanOptions& options = {}) -> ScanReport;
auto scan_trees(int max_n, const ScanOptions& options = {}) -> ScanReport;

auto to_json(const ScanReport& r) -> nlohmann::json;

} // namespace indstab
