#pragma once

// Independence polynomials: the vertex recurrence on explicit graphs, plus the
// closed forms and product identities, each usable as a check on the others.

#include "indstab/graph.hpp"
#include "indstab/poly.hpp"

#include <cstddef>
#include <string>

namespace indstab {

enum class IndPolySource
{
  recurrence,
  closed_form,
  join_identity,
  corona_identity,
  lex_identity,
  kstar_identity,
};

auto to_string(IndPolySource s) -> std::string;

struct IndPolyResult
{
  IntPoly poly;
  int alpha = 0;
  IndPolySource source = IndPolySource::recurrence;
};

inline constexpr std::size_t default_memo_entries = std::size_t{ 1 } << 18;

// i(G) = i(G - v) + x i(G - N[v]) on a maximum-degree pivot, components
// multiplied, induced subgraphs memoized by vertex mask with LRU eviction.
auto indpoly(const Graph& g, std::size_t memo_entries = default_memo_entries) -> IndPolyResult;

// Closed forms; no vertex cap. Cycles have no closed form here and throw.
auto indpoly_closed(const FamilySpec& spec) -> IndPolyResult;
auto star_indpoly(long leaves) -> IntPoly;
auto triangular_indpoly(long n) -> IntPoly;
auto multipartite_indpoly(const std::vector<long>& parts) -> IntPoly;

// i(G + H) = i(G) + i(H) - 1
auto indpoly_join(const IntPoly& pg, const IntPoly& ph) -> IntPoly;
// i(G o H) = sum_j g_j x^j i(H)^(n - j), n = |G|
auto indpoly_corona(const IntPoly& pg, const IntPoly& ph, int n) -> IntPoly;
// i(G[H]) = i(G, i(H) - 1)
auto indpoly_lex(const IntPoly& pg, const IntPoly& ph) -> IntPoly;
// i(G^{k*}) = [sum_j g_j x^j (kx+1)^(n-j)] prod_{l<k} (lx+1)^(n 2^(k-l-1))
auto indpoly_kstar(const IntPoly& pg, int n, int k) -> IntPoly;

auto to_json(const IndPolyResult& r, const std::string& graph_id, long long n) -> nlohmann::json;

} // namespace indstab
