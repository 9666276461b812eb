#pragma once

// RAII wrapper over an MPFR value. Every value carries its own precision;
// binary operations produce the larger precision of their operands, so
// concurrent callers never share precision state.

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace indstab {

class BigFloat
{
public:
  static constexpr unsigned default_bits = 256;

  explicit BigFloat(unsigned bits = default_bits)
  {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
  }

  BigFloat(double d, unsigned bits)
  {
    mpfr_init2(v_, bits);
    mpfr_set_d(v_, d, MPFR_RNDN);
  }

  BigFloat(const mpz_class& z, unsigned bits)
  {
    mpfr_init2(v_, bits);
    mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
  }

  BigFloat(const mpq_class& q, unsigned bits)
  {
    mpfr_init2(v_, bits);
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }

  BigFloat(const BigFloat& o)
  {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }

  BigFloat(BigFloat&& o) noexcept
  {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }

  auto operator=(const BigFloat& o) -> BigFloat&
  {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }

  auto operator=(BigFloat&& o) noexcept -> BigFloat&
  {
    mpfr_swap(v_, o.v_);
    return *this;
  }

  ~BigFloat() { mpfr_clear(v_); }

  auto precision() const -> unsigned { return static_cast<unsigned>(mpfr_get_prec(v_)); }
  auto get() -> mpfr_ptr { return v_; }
  auto get() const -> mpfr_srcptr { return v_; }

  auto to_double() const -> double { return mpfr_get_d(v_, MPFR_RNDN); }
  auto sign() const -> int { return mpfr_sgn(v_); }
  auto is_zero() const -> bool { return mpfr_zero_p(v_) != 0; }

  auto to_string(int digits = 20) const -> std::string;

  auto operator+=(const BigFloat& o) -> BigFloat& { return apply(o, mpfr_add); }
  auto operator-=(const BigFloat& o) -> BigFloat& { return apply(o, mpfr_sub); }
  auto operator*=(const BigFloat& o) -> BigFloat& { return apply(o, mpfr_mul); }
  auto operator/=(const BigFloat& o) -> BigFloat& { return apply(o, mpfr_div); }

  friend auto operator+(BigFloat a, const BigFloat& b) -> BigFloat { return a += b; }
  friend auto operator-(BigFloat a, const BigFloat& b) -> BigFloat { return a -= b; }
  friend auto operator*(BigFloat a, const BigFloat& b) -> BigFloat { return a *= b; }
  friend auto operator/(BigFloat a, const BigFloat& b) -> BigFloat { return a /= b; }

  friend auto operator-(BigFloat a) -> BigFloat
  {
    mpfr_neg(a.v_, a.v_, MPFR_RNDN);
    return a;
  }

  friend auto operator<(const BigFloat& a, const BigFloat& b) -> bool { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend auto operator>(const BigFloat& a, const BigFloat& b) -> bool { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend auto operator<=(const BigFloat& a, const BigFloat& b) -> bool { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend auto operator>=(const BigFloat& a, const BigFloat& b) -> bool { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

  friend auto abs(BigFloat a) -> BigFloat
  {
    mpfr_abs(a.v_, a.v_, MPFR_RNDN);
    return a;
  }

  friend auto sqrt(BigFloat a) -> BigFloat
  {
    mpfr_sqrt(a.v_, a.v_, MPFR_RNDN);
    return a;
  }

private:
  template <typename Op>
  auto apply(const BigFloat& o, Op op) -> BigFloat&
  {
    if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_))
      mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
    op(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }

  mpfr_t v_;
};

// Exact value of a finite binary float.
auto to_rational(const BigFloat& v) -> mpq_class;

} // namespace indstab
