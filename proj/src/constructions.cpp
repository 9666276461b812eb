#include "indstab/constructions.hpp"

#include "indstab/indpoly.hpp"
#include "indstab/sparse.hpp"

namespace indstab {

auto find_min_join_clique_m(const IntPoly& pg, double target_re, long cap) -> JoinCliqueSearch
{
  if (pg.is_zero() || pg[0] != 1)
    throw std::invalid_argument("base polynomial must be an independence polynomial");
  JoinCliqueSearch out;
  for (long m = 1; m <= cap; ++m) {
    // i(G + K_m) = i(G) + i(K_m) - 1.
    const IntPoly p = pg + ipoly({ 0, m });
    auto verdict = hb_stable(p);
    const auto rs = all_roots(p);
    const auto top = max_real_part(rs);
    out.trend.emplace_back(m, top.value);
    if (!verdict.stable() && top.value > target_re) {
      out.found = true;
      out.m = m;
      out.verdict = std::move(verdict);
      out.witness = top.root;
      out.witness_radius = top.radius;
      return out;
    }
  }
  return out;
}

auto find_corona_star_tree(int m, long cap) -> CoronaTreeSearch
{
  if (m < 1)
    throw std::invalid_argument("corona part must have at least one vertex");
  CoronaTreeSearch out;
  const IntPoly ph = pow(ipoly({ 1, 1 }), m);
  for (long n = 1; n <= cap; ++n) {
    const IntPoly p = indpoly_corona(star_indpoly(n), ph, static_cast<int>(n + 1));
    auto verdict = stability_verdict(p);
    if (verdict.stable()) {
      out.trend.emplace_back(n, std::nan(""));
      continue;
    }
    const auto top = max_real_part(all_roots(p));
    out.trend.emplace_back(n, top.value);
    const auto tree = sparse_corona(sparse_star(static_cast<int>(n)), sparse_empty(m));
    out.found = true;
    out.n = n;
    out.vertices = tree.order();
    out.witness_is_tree = is_tree(tree);
    out.polynomial_matches = forest_indpoly(tree) == p;
    out.verdict = std::move(verdict);
    out.witness = top.root;
    return out;
  }
  return out;
}

auto kstar_stabilize(const IntPoly& pg, int n, int numeric_max_degree) -> KStarStabilization
{
  KStarStabilization out;
  out.k_min = kstar_threshold(all_roots(pg));
  for (int k = 1; k <= out.k_min; ++k) {
    const IntPoly p = indpoly_kstar(pg, n, k);
    auto v = stability_verdict(p);
    KStarStep step{ k, v.status, p.degree(), std::nan("") };
    if (p.degree() <= numeric_max_degree)
      step.max_re = max_real_part(all_roots(p)).value;
    out.steps.push_back(step);
    if (v.stable() && out.first_stable == 0)
      out.first_stable = k;
    if (k == out.k_min)
      out.verdict = std::move(v);
  }
  return out;
}

} // namespace indstab
