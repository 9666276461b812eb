#pragma once

// Dense univariate polynomials over exact coefficient rings.
//
// Coefficients are stored in ascending order with no trailing zeros; the zero
// polynomial has no coefficients and degree -1.

#include <gmpxx.h>

#include "indstab/bigfloat.hpp"

#include <algorithm>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace indstab {

using BigInt = mpz_class;
using Rational = mpq_class;

template <typename T>
class Poly
{
public:
  Poly() = default;
  Poly(std::initializer_list<T> c) : c_(c) { trim(); }
  explicit Poly(std::vector<T> c) : c_(std::move(c)) { trim(); }

  static auto constant(const T& v) -> Poly { return Poly(std::vector<T>{ v }); }

  static auto monomial(const T& v, std::size_t k) -> Poly
  {
    std::vector<T> c(k + 1, T(0));
    c[k] = v;
    return Poly(std::move(c));
  }

  auto degree() const -> int { return static_cast<int>(c_.size()) - 1; }
  auto is_zero() const -> bool { return c_.empty(); }
  auto size() const -> std::size_t { return c_.size(); }
  auto coeffs() const -> std::span<const T> { return c_; }

  auto coeff(std::size_t i) const -> T { return i < c_.size() ? c_[i] : T(0); }
  auto operator[](std::size_t i) const -> const T& { return c_.at(i); }

  auto leading() const -> const T&
  {
    if (c_.empty())
      throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
  }

  auto leading_sign() const -> int { return c_.empty() ? 0 : sgn(c_.back()); }

  auto operator+=(const Poly& o) -> Poly&
  {
    if (o.c_.size() > c_.size())
      c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
      c_[i] += o.c_[i];
    trim();
    return *this;
  }

  auto operator-=(const Poly& o) -> Poly&
  {
    if (o.c_.size() > c_.size())
      c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
      c_[i] -= o.c_[i];
    trim();
    return *this;
  }

  auto operator*=(const T& s) -> Poly&
  {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& v : c_)
      v *= s;
    return *this;
  }

  auto operator*=(const Poly& o) -> Poly&
  {
    *this = *this * o;
    return *this;
  }

  friend auto operator+(Poly a, const Poly& b) -> Poly { return a += b; }
  friend auto operator-(Poly a, const Poly& b) -> Poly { return a -= b; }
  friend auto operator*(Poly a, const T& s) -> Poly { return a *= s; }
  friend auto operator*(const T& s, Poly a) -> Poly { return a *= s; }
  friend auto operator-(Poly a) -> Poly
  {
    for (auto& v : a.c_)
      v = -v;
    return a;
  }

  friend auto operator*(const Poly& a, const Poly& b) -> Poly
  {
    if (a.is_zero() || b.is_zero())
      return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0)
        continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }

  friend auto operator==(const Poly& a, const Poly& b) -> bool { return a.c_ == b.c_; }

  // Mutable access for algorithms that build coefficient vectors in place.
  auto release() && -> std::vector<T> { return std::move(c_); }

private:
  void trim()
  {
    while (!c_.empty() && c_.back() == 0)
      c_.pop_back();
  }

  std::vector<T> c_;
};

using IntPoly = Poly<BigInt>;
using RatPoly = Poly<Rational>;

// x
template <typename T>
auto poly_x() -> Poly<T>
{
  return Poly<T>::monomial(T(1), 1);
}

// (a + b x)
template <typename T>
auto linear(const T& a, const T& b) -> Poly<T>
{
  return Poly<T>({ a, b });
}

template <typename T>
auto pow(const Poly<T>& p, long e) -> Poly<T>
{
  if (e < 0)
    throw std::invalid_argument("polynomial power with negative exponent");
  Poly<T> result = Poly<T>::constant(T(1));
  Poly<T> base = p;
  while (e > 0) {
    if (e & 1)
      result = result * base;
    e >>= 1;
    if (e > 0)
      base = base * base;
  }
  return result;
}

template <typename T>
auto derivative(const Poly<T>& p, int order = 1) -> Poly<T>
{
  if (order < 0)
    throw std::invalid_argument("negative derivative order");
  std::vector<T> c(p.coeffs().begin(), p.coeffs().end());
  for (int k = 0; k < order && !c.empty(); ++k) {
    for (std::size_t i = 1; i < c.size(); ++i)
      c[i - 1] = c[i] * static_cast<unsigned long>(i);
    c.pop_back();
  }
  return Poly<T>(std::move(c));
}

// p(q(x)) by Horner's scheme.
template <typename T>
auto compose(const Poly<T>& p, const Poly<T>& q) -> Poly<T>
{
  Poly<T> r;
  for (int i = p.degree(); i >= 0; --i)
    r = r * q + Poly<T>::constant(p[i]);
  return r;
}

template <typename T>
struct EvenOdd
{
  Poly<T> even;
  Poly<T> odd;
};

// P(x) = even(x^2) + x odd(x^2)
template <typename T>
auto even_odd_split(const Poly<T>& p) -> EvenOdd<T>
{
  std::vector<T> e, o;
  for (std::size_t i = 0; i < p.size(); ++i)
    (i % 2 == 0 ? e : o).push_back(p[i]);
  return { Poly<T>(std::move(e)), Poly<T>(std::move(o)) };
}

template <typename T>
struct Reversed
{
  Poly<T> poly;
  // Set when p(0) = 0: the reciprocal-root correspondence loses the zero roots.
  bool zero_constant = false;
};

template <typename T>
auto reversal(const Poly<T>& p) -> Reversed<T>
{
  std::vector<T> c(p.coeffs().rbegin(), p.coeffs().rend());
  bool flagged = !p.is_zero() && p[0] == 0;
  return { Poly<T>(std::move(c)), flagged };
}

// Horner evaluation; the point type decides the arithmetic.
inline auto evaluate(const RatPoly& p, const Rational& x) -> Rational
{
  Rational r = 0;
  for (int i = p.degree(); i >= 0; --i)
    r = r * x + p[i];
  return r;
}

inline auto evaluate(const IntPoly& p, const Rational& x) -> Rational
{
  Rational r = 0;
  for (int i = p.degree(); i >= 0; --i)
    r = r * x + p[i];
  return r;
}

// Sign of p at a rational point, computed with integers only:
// sign(p(a/b)) = sign(sum c_i a^i b^(d-i)) for b > 0.
auto sign_at(const IntPoly& p, const Rational& x) -> int;

auto evaluate(const IntPoly& p, double x) -> double;
auto evaluate(const IntPoly& p, std::complex<double> z) -> std::complex<double>;
auto evaluate(const IntPoly& p, const BigFloat& x) -> BigFloat;

auto to_rational(double v) -> Rational;

auto to_rational(const IntPoly& p) -> RatPoly;

// Positive content (gcd of coefficients); zero for the zero polynomial.
auto content(const IntPoly& p) -> BigInt;
auto primitive_part(const IntPoly& p) -> IntPoly;

struct ScaledIntPoly
{
  IntPoly poly;  // primitive integer polynomial
  Rational scale;  // poly = scale * source, scale > 0
};

// Clears denominators and content with a positive factor.
auto primitive_integer(const RatPoly& p) -> ScaledIntPoly;

struct DivMod
{
  RatPoly quotient;
  RatPoly remainder;
};

auto divmod(const RatPoly& a, const RatPoly& b) -> DivMod;
auto exact_remainder(const RatPoly& a, const RatPoly& b) -> RatPoly;
auto exact_quotient(const IntPoly& a, const IntPoly& b) -> IntPoly;

// Monic gcd over the rationals; gcd(0, 0) = 0.
auto poly_gcd(const RatPoly& a, const RatPoly& b) -> RatPoly;
// Primitive gcd with positive leading coefficient.
auto poly_gcd(const IntPoly& a, const IntPoly& b) -> IntPoly;

// lc(b)^(deg a - deg b + 1) a = q b + prem
auto pseudo_remainder(const IntPoly& a, const IntPoly& b) -> IntPoly;

// Product of the distinct irreducible factors, primitive, positive leading coefficient.
auto squarefree_part(const IntPoly& p) -> IntPoly;
// True when gcd(p, p') is constant modulo one of a few word-size primes, which
// proves p squarefree. False means "probably not"; confirm exactly.
auto squarefree_modular(const IntPoly& p) -> bool;

// Yun's algorithm: p = c * a_1 a_2^2 ... a_k^k with squarefree, pairwise coprime a_i.
// Entry i holds a_{i+1}; trailing entries are non-constant.
auto squarefree_factorization(const IntPoly& p) -> std::vector<IntPoly>;

// Multiply out x^k p -> returns k and p with p(0) != 0.
auto strip_zero_roots(const IntPoly& p) -> std::pair<int, IntPoly>;

auto to_string(const IntPoly& p) -> std::string;
auto to_string(const RatPoly& p) -> std::string;

auto to_json(const IntPoly& p) -> nlohmann::json;
auto to_json(const RatPoly& p) -> nlohmann::json;
auto int_poly_from_json(const nlohmann::json& j) -> IntPoly;
auto rat_poly_from_json(const nlohmann::json& j) -> RatPoly;

inline auto ipoly(std::initializer_list<long> c) -> IntPoly
{
  std::vector<BigInt> v;
  for (long x : c)
    v.emplace_back(x);
  return IntPoly(std::move(v));
}

inline auto rpoly(std::initializer_list<Rational> c) -> RatPoly
{
  return RatPoly(std::vector<Rational>(c));
}

} // namespace indstab
