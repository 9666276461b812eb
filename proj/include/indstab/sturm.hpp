#pragma once

// Sturm chains over the integers. Each stored term is a primitive integer
// polynomial equal to a positive rational multiple of the textbook term
// f_0 = f, f_1 = f', f_i = -rem(f_{i-2}, f_{i-1}), so every sign evaluation
// agrees with the unnormalized chain.

#include "indstab/poly.hpp"

#include <string>
#include <vector>

namespace indstab {

// A rational point or one of the two infinities.
struct Extended
{
  int infinity = 0;  // -1, 0 or +1
  Rational value;

  static auto minus_infinity() -> Extended { return { -1, Rational(0) }; }
  static auto plus_infinity() -> Extended { return { 1, Rational(0) }; }
  static auto at(const Rational& x) -> Extended { return { 0, x }; }
};

auto sign_at(const IntPoly& p, const Extended& x) -> int;

struct SturmSequence
{
  std::vector<IntPoly> chain;
  // chain[i] = scalars[i] * f_i with scalars[i] > 0.
  std::vector<Rational> scalars;

  auto size() const -> std::size_t { return chain.size(); }
  // The unnormalized f_i, recovered exactly.
  auto definitional_term(std::size_t i) const -> RatPoly;
};

enum class ChainStop
{
  full,
  first_defect,
};

auto sturm_sequence(const RatPoly& f, ChainStop stop = ChainStop::full) -> SturmSequence;
auto sturm_sequence(const IntPoly& f, ChainStop stop = ChainStop::full) -> SturmSequence;

// Sign changes along the chain at c, zeros skipped.
auto sign_variations(const SturmSequence& seq, const Extended& c) -> int;

// Distinct real roots in the open interval (a, b). Endpoints may be roots.
auto count_real_roots(const RatPoly& f, const Extended& a, const Extended& b) -> int;
auto count_real_roots(const IntPoly& f, const Extended& a, const Extended& b) -> int;

enum class ChainDefect
{
  none,
  degree_gap,
  negative_leading,
};

auto to_string(ChainDefect d) -> std::string;

struct RealRootedness
{
  bool real_rooted = false;
  ChainDefect defect = ChainDefect::none;
  // Chain index of the first defect, -1 when clean.
  int index = -1;
  // Degrees and leading-coefficient signs of the chain as far as it was built.
  std::vector<int> degrees;
  std::vector<int> leading_signs;

  auto reason() const -> std::string;
};

// Real-rootedness by the chain criterion: every root is real iff the chain has
// consecutive degrees and positive leading coefficients. Requires a positive
// leading coefficient; the zero polynomial and constants count as real-rooted.
auto is_real_rooted(const RatPoly& f) -> RealRootedness;
auto is_real_rooted(const IntPoly& f) -> RealRootedness;

} // namespace indstab
