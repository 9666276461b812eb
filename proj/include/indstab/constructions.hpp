#pragma once

// Searches for nonstable graphs built from stable pieces: cliques joined to a
// fixed graph, coronas of stars with empty graphs, and iterated graph stars.

#include "indstab/poly.hpp"
#include "indstab/roots.hpp"
#include "indstab/stability.hpp"

#include <utility>
#include <vector>

namespace indstab {

struct JoinCliqueSearch
{
  bool found = false;
  long m = 0;
  StabilityVerdict verdict;
  // Numeric root of largest real part for the returned m.
  Complex witness;
  double witness_radius = 0;
  // (m, max Re) for every m examined.
  std::vector<std::pair<long, double>> trend;
};

// Smallest m <= cap for which i(G + K_m) = pG + m x is Nonstable by exact
// verdict and has a numeric root with Re > target_re.
auto find_min_join_clique_m(const IntPoly& pg, double target_re, long cap = 100000) -> JoinCliqueSearch;

struct CoronaTreeSearch
{
  bool found = false;
  long n = 0;
  long vertices = 0;
  bool witness_is_tree = false;
  // The witness tree's polynomial by the forest recurrence equals the corona
  // identity.
  bool polynomial_matches = false;
  StabilityVerdict verdict;
  Complex witness;
  std::vector<std::pair<long, double>> trend;
};

// Smallest n <= cap with K_{1,n} o empty(m) Nonstable.
auto find_corona_star_tree(int m, long cap = 200) -> CoronaTreeSearch;

struct KStarStep
{
  int k = 0;
  StabilityStatus status = StabilityStatus::nonstable;
  long degree = 0;
  double max_re = 0;
};

struct KStarStabilization
{
  // Threshold from the numeric roots of i(G).
  int k_min = 0;
  StabilityVerdict verdict;
  // Verdicts for k = 1..k_min (the last one is the threshold itself).
  std::vector<KStarStep> steps;
  // Smallest k observed Stable.
  int first_stable = 0;
};

// i(G^{k*}) for k up to the threshold k_min, each with an exact verdict.
// Numeric max Re is filled in for degrees up to numeric_max_degree.
auto kstar_stabilize(const IntPoly& pg, int n, int numeric_max_degree = 400) -> KStarStabilization;

} // namespace indstab
