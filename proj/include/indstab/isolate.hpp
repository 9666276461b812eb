#pragma once

// Exact real-root isolation. Numeric approximations propose separating
// rational points; exact sign evaluation certifies them. When that fails the
// Sturm chain of the squarefree part drives a bisection.

#include "indstab/poly.hpp"

#include <optional>
#include <vector>

namespace indstab {

struct RootInterval
{
  // Open interval (lo, hi) holding exactly one distinct root, or the exact
  // rational root lo when lo == hi.
  Rational lo;
  Rational hi;
  int multiplicity = 1;

  auto exact() const -> bool { return lo == hi; }
};

struct RootIsolation
{
  std::vector<RootInterval> roots;
  // Primitive squarefree part with positive leading coefficient.
  IntPoly squarefree;
};

// Proves that q has deg q distinct real roots by sign alternation at
// numerically chosen rational points. Returns the isolating intervals, or
// nothing when the attempt does not certify.
auto certify_distinct_real_roots(const IntPoly& q) -> std::optional<std::vector<RootInterval>>;

auto isolate_real_roots(const IntPoly& f) -> RootIsolation;
auto isolate_real_roots(const RatPoly& f) -> RootIsolation;

// Bisect every open interval until it is narrower than width.
void refine(RootIsolation& iso, const Rational& width);
// One bisection step on an interval of the squarefree polynomial q.
void bisect(const IntPoly& q, RootInterval& r);

// A simple upper bound on the absolute value of every root, a power of two.
auto root_bound(const IntPoly& p) -> BigInt;

// Distinct real roots of two polynomials merged into one increasing list;
// multiplicity in each polynomial recorded per root.
struct SharedRoot
{
  Rational lo;
  Rational hi;
  int mult_f = 0;
  int mult_g = 0;
};

struct MergedRoots
{
  std::vector<SharedRoot> roots;
  // Squarefree part of f g, whose roots the intervals isolate.
  IntPoly squarefree;
};

auto merge_real_roots(const IntPoly& f, const IntPoly& g) -> MergedRoots;

enum class Interlacing
{
  interlaces,
  alternates_left,
  neither,
};

auto to_string(Interlacing i) -> std::string;

struct InterlacingResult
{
  Interlacing relation = Interlacing::neither;
  // First violated inequality when relation is neither, e.g. "t_1 <= s_1".
  std::string violation;
};

// f < g in the sense of interlacing (deg g = deg f + 1: t_1 <= s_1 <= t_2 ...)
// or alternating left (deg g = deg f: s_1 <= t_1 <= s_2 ...), s the roots of
// f and t the roots of g. Throws if either is not real-rooted or the degrees
// fit neither pattern.
auto interlaces(const IntPoly& f, const IntPoly& g) -> InterlacingResult;
auto interlaces(const RatPoly& f, const RatPoly& g) -> InterlacingResult;

// Order check on sorted root lists given as indices into a common sorted list
// of distinct roots (equal index, equal root).
auto interlacing_order(const std::vector<int>& s, const std::vector<int>& t) -> InterlacingResult;

} // namespace indstab
