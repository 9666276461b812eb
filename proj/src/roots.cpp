#include "indstab/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace indstab {

namespace {

constexpr double two_pi = 6.283185307179586476925286766559;

struct DoubleArith
{
  using R = double;
  unsigned bits = 53;

  auto make(double v) const -> R { return v; }
  // z * 2^-shift
  auto make(const BigInt& z, long shift) const -> R
  {
    long e = 0;
    const double m = mpz_get_d_2exp(&e, z.get_mpz_t());
    return std::ldexp(m, static_cast<int>(e - shift));
  }
  auto to_double(const R& v) const -> double { return v; }
  auto eps() const -> double { return std::ldexp(1.0, -52); }
};

struct MpfrArith
{
  using R = BigFloat;
  unsigned bits = 256;

  auto make(double v) const -> R { return BigFloat(v, bits); }
  auto make(const BigInt& z, long shift) const -> R
  {
    BigFloat r(z, bits);
    mpfr_div_2si(r.get(), r.get(), shift, MPFR_RNDN);
    return r;
  }
  auto to_double(const R& v) const -> double { return v.to_double(); }
  auto eps() const -> double { return std::ldexp(1.0, 1 - static_cast<int>(bits)); }
};

template <typename R>
struct Cx
{
  R re;
  R im;
};

template <typename R>
auto operator+(const Cx<R>& a, const Cx<R>& b) -> Cx<R>
{
  return { a.re + b.re, a.im + b.im };
}

template <typename R>
auto operator-(const Cx<R>& a, const Cx<R>& b) -> Cx<R>
{
  return { a.re - b.re, a.im - b.im };
}

template <typename R>
auto operator*(const Cx<R>& a, const Cx<R>& b) -> Cx<R>
{
  return { a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re };
}

template <typename R>
auto norm(const Cx<R>& a) -> R
{
  return a.re * a.re + a.im * a.im;
}

template <typename R>
auto operator/(const Cx<R>& a, const Cx<R>& b) -> Cx<R>
{
  R d = norm(b);
  return { (a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d };
}

template <typename R>
auto magnitude(const Cx<R>& a) -> R
{
  using std::sqrt;
  return sqrt(norm(a));
}

auto is_zero(double v) -> bool { return v == 0.0; }
auto finite(double v) -> bool { return std::isfinite(v); }
auto finite(const BigFloat& v) -> bool { return mpfr_number_p(v.get()) != 0; }

template <typename A>
struct Evaluation
{
  Cx<typename A::R> ratio;  // p / p'
  bool small = false;        // backward error at rounding level
  bool ok = true;
};

// Coefficients ascending and their absolute values, already scaled.
template <typename A>
struct Kernel
{
  using R = typename A::R;
  A arith;
  std::vector<R> a;
  std::vector<R> abs_a;

  auto evaluate(const Cx<R>& z) const -> Evaluation<A>
  {
    const int d = static_cast<int>(a.size()) - 1;
    const R zero = arith.make(0.0);
    Evaluation<A> ev;
    R nz = norm(z);
    const bool inside = !(nz > arith.make(1.0));
    Cx<R> p{ zero, zero }, dp{ zero, zero };
    R bound = zero;
    if (inside) {
      R mz = magnitude(z);
      for (int i = d; i >= 0; --i) {
        dp = dp * z + p;
        p = p * z;
        p.re += a[i];
        bound = bound * mz + abs_a[i];
      }
      if (is_zero(dp.re) && is_zero(dp.im)) {
        ev.ok = false;
        return ev;
      }
      ev.ratio = p / dp;
    } else {
      // p(z) = z^d q(1/z); p/p' = z q / (d q - w q').
      Cx<R> w = Cx<R>{ arith.make(1.0), zero } / z;
      R mw = magnitude(w);
      for (int i = 0; i <= d; ++i) {
        dp = dp * w + p;
        p = p * w;
        p.re += a[i];
        bound = bound * mw + abs_a[i];
      }
      Cx<R> den = Cx<R>{ arith.make(static_cast<double>(d)), zero } * p - w * dp;
      if (is_zero(den.re) && is_zero(den.im)) {
        ev.ok = false;
        return ev;
      }
      ev.ratio = z * p / den;
    }
    const double pm = arith.to_double(magnitude(p));
    const double bm = arith.to_double(bound);
    ev.small = pm <= 4.0 * d * arith.eps() * bm;
    if (!finite(ev.ratio.re) || !finite(ev.ratio.im))
      ev.ok = false;
    return ev;
  }

  // One Aberth run at this arithmetic; returns whether every root settled.
  auto iterate(std::vector<Cx<R>>& z, int max_sweeps, double tol) const -> bool
  {
    const std::size_t d = z.size();
    std::vector<char> done(d, 0);
    const R zero = arith.make(0.0);
    const R one = arith.make(1.0);
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
      bool all = true;
      for (std::size_t i = 0; i < d; ++i) {
        if (done[i])
          continue;
        auto ev = evaluate(z[i]);
        if (!ev.ok)
          return false;
        if (ev.small) {
          done[i] = 1;
          continue;
        }
        all = false;
        Cx<R> s{ zero, zero };
        for (std::size_t j = 0; j < d; ++j) {
          if (j == i)
            continue;
          Cx<R> diff = z[i] - z[j];
          if (is_zero(diff.re) && is_zero(diff.im))
            continue;
          s = s + Cx<R>{ one, zero } / diff;
        }
        Cx<R> den = Cx<R>{ one, zero } - ev.ratio * s;
        Cx<R> step = (is_zero(den.re) && is_zero(den.im)) ? ev.ratio : ev.ratio / den;
        z[i] = z[i] - step;
        if (!finite(z[i].re) || !finite(z[i].im))
          return false;
        if (arith.to_double(magnitude(step)) <= tol * arith.to_double(magnitude(z[i])))
          done[i] = 1;
      }
      if (all)
        return true;
    }
    return std::all_of(done.begin(), done.end(), [](char c) { return c != 0; });
  }
};

auto log_abs(const BigInt& v) -> double
{
  long e = 0;
  const double m = mpz_get_d_2exp(&e, v.get_mpz_t());
  return std::log(std::fabs(m)) + static_cast<double>(e) * std::log(2.0);
}

auto exponent(const BigInt& v) -> long
{
  return static_cast<long>(mpz_sizeinbase(v.get_mpz_t(), 2));
}

// Starting points on circles read off the upper convex hull of (i, log|a_i|).
auto initial_guesses(const IntPoly& p) -> std::vector<Complex>
{
  const int d = p.degree();
  std::vector<int> idx;
  std::vector<double> lg;
  for (int i = 0; i <= d; ++i)
    if (p[i] != 0) {
      idx.push_back(i);
      lg.push_back(log_abs(p[i]));
    }
  std::vector<int> hull;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    while (hull.size() >= 2) {
      const int a = hull[hull.size() - 2], b = hull.back();
      const double cross = (idx[b] - idx[a]) * (lg[k] - lg[a]) - (lg[b] - lg[a]) * (idx[k] - idx[a]);
      if (cross >= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(static_cast<int>(k));
  }
  // Each hull edge contributes the roots of its two-term polynomial
  // a_i x^i + a_j x^j, turned slightly so real inputs can leave the real axis.
  std::vector<Complex> z;
  const double sigma = 0.05;
  for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
    const int i = idx[hull[h]], j = idx[hull[h + 1]];
    const int count = j - i;
    const double radius = std::exp((lg[hull[h]] - lg[hull[h + 1]]) / count);
    const double base = (sgn(p[i]) == sgn(p[j]) ? two_pi / 2 : 0.0) / count;
    for (int m = 0; m < count; ++m) {
      const double theta = base + two_pi * m / count + sigma * (1 + static_cast<double>(h % 7) / 7);
      z.push_back(std::polar(radius, theta));
    }
  }
  return z;
}

template <typename A>
auto make_kernel(const IntPoly& p, A arith) -> Kernel<A>
{
  long top = 0;
  for (const auto& c : p.coeffs())
    if (c != 0)
      top = std::max(top, exponent(c));
  Kernel<A> k{ arith, {}, {} };
  for (const auto& c : p.coeffs()) {
    k.a.push_back(arith.make(c, top));
    BigInt m = abs(c);
    k.abs_a.push_back(arith.make(m, top));
  }
  return k;
}

struct Diagnostics
{
  std::vector<double> residuals;
  std::vector<double> radii;
};

// Residuals and inclusion radii, with p evaluated in MPFR at the given precision.
auto log_of(mpfr_srcptr v) -> double
{
  long e = 0;
  const double m = mpfr_get_d_2exp(&e, v, MPFR_RNDN);
  return std::log(std::fabs(m)) + static_cast<double>(e) * std::log(2.0);
}

// log |x + iy| from full-precision components without leaving double range.
auto log_hypot(mpfr_srcptr x, mpfr_srcptr y) -> double
{
  if (mpfr_zero_p(x) && mpfr_zero_p(y))
    return -std::numeric_limits<double>::infinity();
  long ex = 0, ey = 0;
  const double mx = mpfr_zero_p(x) ? 0.0 : mpfr_get_d_2exp(&ex, x, MPFR_RNDN);
  const double my = mpfr_zero_p(y) ? 0.0 : mpfr_get_d_2exp(&ey, y, MPFR_RNDN);
  if (mx == 0.0)
    ex = ey;
  if (my == 0.0)
    ey = ex;
  const long top = std::max(ex, ey);
  const double h = std::hypot(std::ldexp(mx, static_cast<int>(ex - top)), std::ldexp(my, static_cast<int>(ey - top)));
  return std::log(h) + static_cast<double>(top) * std::log(2.0);
}

auto diagnose(const IntPoly& p, const std::vector<Cx<BigFloat>>& z, unsigned bits) -> Diagnostics
{
  const int d = p.degree();
  std::vector<BigFloat> a, abs_a;
  for (const auto& c : p.coeffs()) {
    a.emplace_back(c, bits);
    BigInt m = abs(c);
    abs_a.emplace_back(m, bits);
  }
  const double log_lead = log_abs(p.leading());
  Diagnostics out;
  const std::size_t n = z.size();

  // Sum of log |z_i - z_j| over j, each unordered pair once.
  std::vector<double> log_den(n, log_lead);
  std::vector<char> coincide(n, 0);
  BigFloat dx(bits), dy(bits);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      mpfr_sub(dx.get(), z[i].re.get(), z[j].re.get(), MPFR_RNDN);
      mpfr_sub(dy.get(), z[i].im.get(), z[j].im.get(), MPFR_RNDN);
      const double l = log_hypot(dx.get(), dy.get());
      if (std::isinf(l)) {
        coincide[i] = coincide[j] = 1;
        continue;
      }
      log_den[i] += l;
      log_den[j] += l;
    }

  BigFloat vr(bits), vi(bits), bound(bits), mz(bits), t1(bits), t2(bits), t3(bits);
  for (std::size_t i = 0; i < n; ++i) {
    mpfr_srcptr xr = z[i].re.get(), xi = z[i].im.get();
    mpfr_set_zero(vr.get(), 1);
    mpfr_set_zero(vi.get(), 1);
    mpfr_set_zero(bound.get(), 1);
    mpfr_hypot(mz.get(), xr, xi, MPFR_RNDN);
    for (int k = d; k >= 0; --k) {
      // v = v z + a_k
      mpfr_mul(t1.get(), vr.get(), xr, MPFR_RNDN);
      mpfr_mul(t2.get(), vi.get(), xi, MPFR_RNDN);
      mpfr_sub(t1.get(), t1.get(), t2.get(), MPFR_RNDN);
      mpfr_mul(t2.get(), vr.get(), xi, MPFR_RNDN);
      mpfr_mul(t3.get(), vi.get(), xr, MPFR_RNDN);
      mpfr_add(vi.get(), t2.get(), t3.get(), MPFR_RNDN);
      mpfr_add(vr.get(), t1.get(), a[k].get(), MPFR_RNDN);
      mpfr_fma(bound.get(), bound.get(), mz.get(), abs_a[k].get(), MPFR_RNDN);
    }
    mpfr_hypot(t1.get(), vr.get(), vi.get(), MPFR_RNDN);
    mpfr_div(t2.get(), t1.get(), bound.get(), MPFR_RNDN);
    out.residuals.push_back(mpfr_get_d(t2.get(), MPFR_RNDN));
    const double log_num = mpfr_zero_p(t1.get()) ? -std::numeric_limits<double>::infinity() : log_of(t1.get());
    if (coincide[i])
      out.radii.push_back(std::numeric_limits<double>::infinity());
    else
      out.radii.push_back(std::exp(std::log(static_cast<double>(d)) + log_num - log_den[i]));
  }
  return out;
}

auto to_big(const std::vector<Cx<double>>& z, unsigned bits) -> std::vector<Cx<BigFloat>>
{
  std::vector<Cx<BigFloat>> out;
  out.reserve(z.size());
  for (const auto& v : z)
    out.push_back({ BigFloat(v.re, bits), BigFloat(v.im, bits) });
  return out;
}

auto rebits(const std::vector<Cx<BigFloat>>& z, unsigned bits) -> std::vector<Cx<BigFloat>>
{
  std::vector<Cx<BigFloat>> out;
  for (const auto& v : z) {
    Cx<BigFloat> w{ BigFloat(bits), BigFloat(bits) };
    mpfr_set(w.re.get(), v.re.get(), MPFR_RNDN);
    mpfr_set(w.im.get(), v.im.get(), MPFR_RNDN);
    out.push_back(std::move(w));
  }
  return out;
}

auto finite_all(const std::vector<Cx<double>>& z) -> bool
{
  return std::all_of(z.begin(), z.end(), [](const auto& v) { return std::isfinite(v.re) && std::isfinite(v.im); });
}

} // namespace

namespace {

// Aberth sweeps in MPFR on preallocated scratch values.
class MpfrKernel
{
public:
  MpfrKernel(const IntPoly& p, unsigned bits) : bits_(bits), d_(p.degree())
  {
    long top = 0;
    for (const auto& c : p.coeffs())
      if (c != 0)
        top = std::max(top, exponent(c));
    for (const auto& c : p.coeffs()) {
      BigFloat v(c, bits);
      mpfr_div_2si(v.get(), v.get(), top, MPFR_RNDN);
      BigFloat m = abs(v);
      a_.push_back(std::move(v));
      abs_a_.push_back(std::move(m));
    }
    for (auto* t : { &pr, &pi, &dr, &di, &bound, &mz, &t1, &t2, &t3, &wr, &wi, &sr, &si, &nr, &ni, &qr, &qi })
      *t = BigFloat(bits);
  }

  auto iterate(std::vector<Cx<BigFloat>>& z, int max_sweeps, double tol) -> bool
  {
    const std::size_t n = z.size();
    std::vector<char> done(n, 0);
    const double eps = std::ldexp(1.0, 1 - static_cast<int>(bits_));
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
      bool all = true;
      for (std::size_t i = 0; i < n; ++i) {
        if (done[i])
          continue;
        int state = newton_ratio(z[i], eps);
        if (state < 0)
          return false;
        if (state == 1) {
          done[i] = 1;
          continue;
        }
        all = false;
        // s = sum 1/(z_i - z_j). Only the convergence rate depends on s, so
        // the differences are taken in full precision and summed in double;
        // differences outside double range fall back to MPFR.
        mpfr_set_zero(sr.get(), 1);
        mpfr_set_zero(si.get(), 1);
        double fr = 0, fi = 0;
        for (std::size_t j = 0; j < n; ++j) {
          if (j == i)
            continue;
          mpfr_sub(t1.get(), z[i].re.get(), z[j].re.get(), MPFR_RNDN);
          mpfr_sub(t2.get(), z[i].im.get(), z[j].im.get(), MPFR_RNDN);
          const double dx = mpfr_get_d(t1.get(), MPFR_RNDN), dy = mpfr_get_d(t2.get(), MPFR_RNDN);
          const double m2 = dx * dx + dy * dy;
          if (std::isnormal(m2) && m2 < 1e300 && m2 > 1e-300) {
            fr += dx / m2;
            fi -= dy / m2;
            continue;
          }
          mpfr_sqr(t3.get(), t1.get(), MPFR_RNDN);
          mpfr_fma(t3.get(), t2.get(), t2.get(), t3.get(), MPFR_RNDN);
          if (mpfr_zero_p(t3.get()))
            continue;
          mpfr_div(t1.get(), t1.get(), t3.get(), MPFR_RNDN);
          mpfr_div(t2.get(), t2.get(), t3.get(), MPFR_RNDN);
          mpfr_add(sr.get(), sr.get(), t1.get(), MPFR_RNDN);
          mpfr_sub(si.get(), si.get(), t2.get(), MPFR_RNDN);
        }
        mpfr_add_d(sr.get(), sr.get(), fr, MPFR_RNDN);
        mpfr_add_d(si.get(), si.get(), fi, MPFR_RNDN);
        // step = N / (1 - N s)
        mpfr_mul(t1.get(), nr.get(), sr.get(), MPFR_RNDN);
        mpfr_mul(t2.get(), ni.get(), si.get(), MPFR_RNDN);
        mpfr_sub(wr.get(), t1.get(), t2.get(), MPFR_RNDN);
        mpfr_ui_sub(wr.get(), 1, wr.get(), MPFR_RNDN);
        mpfr_mul(t1.get(), nr.get(), si.get(), MPFR_RNDN);
        mpfr_mul(t2.get(), ni.get(), sr.get(), MPFR_RNDN);
        mpfr_add(wi.get(), t1.get(), t2.get(), MPFR_RNDN);
        mpfr_neg(wi.get(), wi.get(), MPFR_RNDN);
        divide(nr, ni, wr, wi);  // result in qr, qi
        mpfr_sub(z[i].re.get(), z[i].re.get(), qr.get(), MPFR_RNDN);
        mpfr_sub(z[i].im.get(), z[i].im.get(), qi.get(), MPFR_RNDN);
        if (!mpfr_number_p(z[i].re.get()) || !mpfr_number_p(z[i].im.get()))
          return false;
        mpfr_hypot(t1.get(), qr.get(), qi.get(), MPFR_RNDN);
        mpfr_hypot(t2.get(), z[i].re.get(), z[i].im.get(), MPFR_RNDN);
        if (mpfr_get_d(t1.get(), MPFR_RNDN) <= tol * mpfr_get_d(t2.get(), MPFR_RNDN))
          done[i] = 1;
      }
      if (all)
        return true;
    }
    return std::all_of(done.begin(), done.end(), [](char c) { return c != 0; });
  }

private:
  // (qr, qi) = (ar + i ai) / (br + i bi)
  void divide(const BigFloat& ar, const BigFloat& ai, const BigFloat& br, const BigFloat& bi)
  {
    mpfr_sqr(t3.get(), br.get(), MPFR_RNDN);
    mpfr_fma(t3.get(), bi.get(), bi.get(), t3.get(), MPFR_RNDN);
    mpfr_mul(t1.get(), ar.get(), br.get(), MPFR_RNDN);
    mpfr_fma(t1.get(), ai.get(), bi.get(), t1.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), ai.get(), br.get(), MPFR_RNDN);
    mpfr_mul(qi.get(), ar.get(), bi.get(), MPFR_RNDN);
    mpfr_sub(t2.get(), t2.get(), qi.get(), MPFR_RNDN);
    mpfr_div(qr.get(), t1.get(), t3.get(), MPFR_RNDN);
    mpfr_div(qi.get(), t2.get(), t3.get(), MPFR_RNDN);
  }

  // (x, y) <- (x, y) * (u, v) + (cr, ci)
  void mul_add(BigFloat& x, BigFloat& y, const BigFloat& u, const BigFloat& v, mpfr_srcptr cr, mpfr_srcptr ci)
  {
    mpfr_mul(t1.get(), x.get(), u.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), y.get(), v.get(), MPFR_RNDN);
    mpfr_sub(t1.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), x.get(), v.get(), MPFR_RNDN);
    mpfr_mul(t3.get(), y.get(), u.get(), MPFR_RNDN);
    mpfr_add(y.get(), t2.get(), t3.get(), MPFR_RNDN);
    mpfr_set(x.get(), t1.get(), MPFR_RNDN);
    if (cr)
      mpfr_add(x.get(), x.get(), cr, MPFR_RNDN);
    if (ci)
      mpfr_add(y.get(), y.get(), ci, MPFR_RNDN);
  }

  // Newton ratio p/p' into (nr, ni). Returns 1 when the backward error is at
  // rounding level, 0 for a usable ratio, -1 on breakdown.
  auto newton_ratio(const Cx<BigFloat>& z, double eps) -> int
  {
    for (auto* t : { &pr, &pi, &dr, &di, &bound })
      mpfr_set_zero(t->get(), 1);
    mpfr_hypot(mz.get(), z.re.get(), z.im.get(), MPFR_RNDN);
    const bool inside = mpfr_cmp_ui(mz.get(), 1) <= 0;
    if (inside) {
      for (int i = d_; i >= 0; --i) {
        mul_add(dr, di, z.re, z.im, pr.get(), pi.get());
        mul_add(pr, pi, z.re, z.im, a_[i].get(), nullptr);
        mpfr_fma(bound.get(), bound.get(), mz.get(), abs_a_[i].get(), MPFR_RNDN);
      }
      if (mpfr_zero_p(dr.get()) && mpfr_zero_p(di.get()))
        return -1;
      divide(pr, pi, dr, di);
    } else {
      // w = 1/z; p/p' = z q / (d q - w q')
      mpfr_sqr(t3.get(), mz.get(), MPFR_RNDN);
      mpfr_div(wr.get(), z.re.get(), t3.get(), MPFR_RNDN);
      mpfr_div(wi.get(), z.im.get(), t3.get(), MPFR_RNDN);
      mpfr_neg(wi.get(), wi.get(), MPFR_RNDN);
      mpfr_ui_div(sr.get(), 1, mz.get(), MPFR_RNDN);
      for (int i = 0; i <= d_; ++i) {
        mul_add(dr, di, wr, wi, pr.get(), pi.get());
        mul_add(pr, pi, wr, wi, a_[i].get(), nullptr);
        mpfr_fma(bound.get(), bound.get(), sr.get(), abs_a_[i].get(), MPFR_RNDN);
      }
      // numerator z q -> (sr, si); denominator d q - w q' -> (dr, di)
      mpfr_set(sr.get(), pr.get(), MPFR_RNDN);
      mpfr_set(si.get(), pi.get(), MPFR_RNDN);
      mul_add(sr, si, z.re, z.im, nullptr, nullptr);
      mul_add(dr, di, wr, wi, nullptr, nullptr);
      mpfr_mul_si(t3.get(), pr.get(), d_, MPFR_RNDN);
      mpfr_sub(dr.get(), t3.get(), dr.get(), MPFR_RNDN);
      mpfr_mul_si(t3.get(), pi.get(), d_, MPFR_RNDN);
      mpfr_sub(di.get(), t3.get(), di.get(), MPFR_RNDN);
      if (mpfr_zero_p(dr.get()) && mpfr_zero_p(di.get()))
        return -1;
      divide(sr, si, dr, di);
    }
    mpfr_set(nr.get(), qr.get(), MPFR_RNDN);
    mpfr_set(ni.get(), qi.get(), MPFR_RNDN);
    if (!mpfr_number_p(nr.get()) || !mpfr_number_p(ni.get()))
      return -1;
    mpfr_hypot(t1.get(), pr.get(), pi.get(), MPFR_RNDN);
    mpfr_mul_d(t2.get(), bound.get(), 4.0 * d_ * eps, MPFR_RNDN);
    return mpfr_lessequal_p(t1.get(), t2.get()) ? 1 : 0;
  }

  unsigned bits_;
  int d_;
  std::vector<BigFloat> a_, abs_a_;
  BigFloat pr, pi, dr, di, bound, mz, t1, t2, t3, wr, wi, sr, si, nr, ni, qr, qi;
};

} // namespace

namespace {

auto localized(const std::vector<Cx<BigFloat>>& z, const Diagnostics& diag, double tol) -> bool
{
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double scale = std::max(1.0, std::hypot(z[i].re.to_double(), z[i].im.to_double()));
    if (!(diag.radii[i] <= tol * scale))
      return false;
  }
  return true;
}

auto worst_radius(const Diagnostics& diag) -> double
{
  double w = 0.0;
  for (double r : diag.radii)
    w = std::max(w, std::isnan(r) ? std::numeric_limits<double>::infinity() : r);
  return w;
}

} // namespace

namespace {

// Roots of p with p(0) != 0 and degree >= 1. A polynomial whose double run
// does not localize and which has repeated roots is split into its squarefree
// factors, each solved on its own; repeated roots never shrink their
// inclusion disks however much precision is spent.
auto solve(const IntPoly& p, const RootOptions& options, bool may_split) -> ComplexRootSet
{
  ComplexRootSet out;
  const int d = p.degree();
  out.degree = d;
  std::vector<Complex> guesses = initial_guesses(p);
  long lo = std::numeric_limits<long>::max(), hi = 0;
  for (const auto& c : p.coeffs())
    if (c != 0) {
      lo = std::min(lo, exponent(c));
      hi = std::max(hi, exponent(c));
    }
  std::vector<unsigned> levels;
  if (options.start_bits <= 53 && hi - lo < 900)
    levels.push_back(53);
  for (unsigned b = std::max(64U, options.start_bits > 53 ? options.start_bits : options.extended_bits);
       b <= options.max_bits; b *= 2)
    levels.push_back(b);
  if (levels.empty())
    levels.push_back(std::max(64U, options.start_bits));

  std::vector<Cx<BigFloat>> z;
  for (auto g : guesses)
    z.push_back({ BigFloat(g.real(), 64), BigFloat(g.imag(), 64) });

  // Keep the best localized answer; escalate while roots are poorly separated
  // from their inclusion radii (ill-conditioned coefficients) or unconverged.
  std::vector<Cx<BigFloat>> best;
  Diagnostics best_diag;
  bool best_converged = false;
  unsigned best_bits = 0;
  bool checked_split = !may_split;
  for (unsigned bits : levels) {
    if (bits > 53 && !checked_split) {
      checked_split = true;
      if (!squarefree_modular(p)) {
        auto factors = squarefree_factorization(p);
        if (factors.size() > 1 || (factors.size() == 1 && factors[0].degree() < d)) {
          ComplexRootSet merged;
          merged.degree = d;
          merged.precision_bits = 53;
          for (std::size_t k = 0; k < factors.size(); ++k) {
            if (factors[k].degree() < 1)
              continue;
            auto part = solve(factors[k], options, false);
            merged.converged = merged.converged && part.converged;
            merged.precision_bits = std::max(merged.precision_bits, part.precision_bits);
            for (std::size_t i = 0; i < part.roots.size(); ++i)
              for (std::size_t m = 0; m <= k; ++m) {
                merged.roots.push_back(part.roots[i]);
                merged.residuals.push_back(part.residuals[i]);
                merged.radii.push_back(part.radii[i]);
              }
          }
          return merged;
        }
      }
    }
    bool converged = false;
    if (bits == 53) {
      std::vector<Cx<double>> zd;
      for (const auto& v : z)
        zd.push_back({ v.re.to_double(), v.im.to_double() });
      converged = make_kernel(p, DoubleArith{}).iterate(zd, options.max_sweeps, options.tolerance);
      if (finite_all(zd))
        z = to_big(zd, 64);
    } else {
      z = rebits(z, bits);
      converged = MpfrKernel(p, bits).iterate(z, options.max_sweeps, options.tolerance);
    }
    bool sane = std::all_of(z.begin(), z.end(), [](const auto& v) { return finite(v.re) && finite(v.im); });
    if (!sane) {
      z.clear();
      for (auto g : guesses)
        z.push_back({ BigFloat(g.real(), 64), BigFloat(g.imag(), 64) });
      continue;
    }
    auto diag = diagnose(p, z, std::max(128U, bits + 64));
    const bool better = best.empty() || (converged && !best_converged) ||
                        (converged == best_converged && worst_radius(diag) <= worst_radius(best_diag));
    if (better) {
      best = z;
      best_diag = diag;
      best_converged = converged;
      best_bits = bits;
    }
    if (converged && localized(z, diag, 1e-10))
      break;
  }
  out.converged = best_converged;
  out.precision_bits = best_bits;
  if (best.empty()) {
    out.converged = false;
    for (int i = 0; i < d; ++i) {
      out.roots.emplace_back(std::nan(""), std::nan(""));
      out.residuals.push_back(std::numeric_limits<double>::infinity());
      out.radii.push_back(std::numeric_limits<double>::infinity());
    }
  } else {
    for (std::size_t i = 0; i < best.size(); ++i) {
      out.roots.emplace_back(best[i].re.to_double(), best[i].im.to_double());
      out.residuals.push_back(best_diag.residuals[i]);
      out.radii.push_back(best_diag.radii[i]);
    }
  }
  return out;
}

} // namespace

auto all_roots(const IntPoly& poly, const RootOptions& options) -> ComplexRootSet
{
  if (poly.degree() < 1)
    throw std::invalid_argument("root finding needs a polynomial of degree at least 1");
  if (poly.degree() > options.max_degree)
    throw RootsError("degree " + std::to_string(poly.degree()) + " exceeds the numeric degree cap");
  auto [zeros, p] = strip_zero_roots(poly);
  ComplexRootSet out;
  if (p.degree() > 0)
    out = solve(p, options, true);
  out.degree = poly.degree();
  for (int i = 0; i < zeros; ++i) {
    out.roots.emplace_back(0.0, 0.0);
    out.residuals.push_back(0.0);
    out.radii.push_back(0.0);
  }
  return out;
}

auto clusters(const ComplexRootSet& rs, double tol) -> std::vector<RootCluster>
{
  const std::size_t n = rs.roots.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dist = std::abs(rs.roots[i] - rs.roots[j]);
      if (dist <= tol || dist <= rs.radii[i] + rs.radii[j])
        parent[find(i)] = find(j);
    }
  std::vector<RootCluster> out;
  std::vector<std::vector<std::size_t>> groups(n);
  for (std::size_t i = 0; i < n; ++i)
    groups[find(i)].push_back(i);
  for (const auto& g : groups) {
    if (g.empty())
      continue;
    Complex c = 0.0;
    for (auto i : g)
      c += rs.roots[i];
    c /= static_cast<double>(g.size());
    double r = 0.0;
    for (auto i : g)
      r = std::max(r, std::abs(rs.roots[i] - c) + rs.radii[i]);
    out.push_back({ c, static_cast<int>(g.size()), r });
  }
  std::sort(out.begin(), out.end(), [](const RootCluster& a, const RootCluster& b) {
    if (a.centre.real() != b.centre.real())
      return a.centre.real() < b.centre.real();
    return a.centre.imag() < b.centre.imag();
  });
  return out;
}

auto max_real_part(const ComplexRootSet& rs) -> MaxRealPart
{
  if (!rs.converged)
    throw RootsError("root set did not converge");
  if (rs.roots.empty())
    throw RootsError("empty root set");
  std::size_t best = 0;
  for (std::size_t i = 1; i < rs.roots.size(); ++i)
    if (rs.roots[i].real() > rs.roots[best].real())
      best = i;
  return { rs.roots[best].real(), rs.roots[best], rs.radii[best] };
}

auto to_string(Membership m) -> std::string
{
  switch (m) {
  case Membership::inside:
    return "inside";
  case Membership::outside:
    return "outside";
  case Membership::indeterminate:
    return "indeterminate";
  }
  return "unknown";
}

auto RegionSpec::rectangle(double re_min, double re_max, double im_min, double im_max) -> RegionSpec
{
  if (!(re_min <= re_max) || !(im_min <= im_max))
    throw std::invalid_argument("rectangle bounds are inverted");
  RegionSpec r;
  r.kind = Kind::rectangle;
  r.re_min = re_min;
  r.re_max = re_max;
  r.im_min = im_min;
  r.im_max = im_max;
  return r;
}

auto RegionSpec::disk(Complex centre, double radius) -> RegionSpec
{
  if (!(radius >= 0))
    throw std::invalid_argument("disk radius must be nonnegative");
  RegionSpec r;
  r.kind = Kind::disk;
  r.centre = centre;
  r.radius = radius;
  return r;
}

auto RegionSpec::halfplane(double re_max) -> RegionSpec
{
  RegionSpec r;
  r.kind = Kind::halfplane;
  r.re_max = re_max;
  return r;
}

auto in_region(const ComplexRootSet& rs, const RegionSpec& region, double margin) -> RegionCheck
{
  if (!rs.converged)
    throw RootsError("root set did not converge");
  RegionCheck out;
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    const Complex z = rs.roots[i];
    const double m = rs.radii[i] + margin;
    Membership s = Membership::indeterminate;
    switch (region.kind) {
    case RegionSpec::Kind::rectangle:
      if (z.real() - m >= region.re_min && z.real() + m <= region.re_max && z.imag() - m >= region.im_min &&
          z.imag() + m <= region.im_max)
        s = Membership::inside;
      else if (z.real() + m < region.re_min || z.real() - m > region.re_max || z.imag() + m < region.im_min ||
               z.imag() - m > region.im_max)
        s = Membership::outside;
      break;
    case RegionSpec::Kind::disk: {
      const double dist = std::abs(z - region.centre);
      if (dist + m <= region.radius)
        s = Membership::inside;
      else if (dist - m > region.radius)
        s = Membership::outside;
      break;
    }
    case RegionSpec::Kind::halfplane:
      if (z.real() + m <= region.re_max)
        s = Membership::inside;
      else if (z.real() - m > region.re_max)
        s = Membership::outside;
      break;
    }
    out.members.push_back(s);
    (s == Membership::inside ? out.inside : s == Membership::outside ? out.outside : out.indeterminate)++;
  }
  return out;
}

auto star_root_transfer(const ComplexRootSet& rs, int k, int n) -> ComplexRootSet
{
  if (k < 1)
    throw std::invalid_argument("graph star iteration count must be positive");
  if (n < rs.degree)
    throw std::invalid_argument("order is smaller than the number of roots");
  if (k > 30)
    throw std::invalid_argument("graph star iteration count too large");
  ComplexRootSet out;
  out.precision_bits = rs.precision_bits;
  out.converged = rs.converged;
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    const Complex r = rs.roots[i];
    const Complex den = 1.0 - static_cast<double>(k) * r;
    if (std::abs(den) < 1e-300)
      throw RootsError("root maps to the pole 1/k");
    out.roots.push_back(r / den);
    out.residuals.push_back(rs.residuals[i]);
    out.radii.push_back(rs.radii[i] / std::norm(den));
  }
  auto append = [&](double value, long long count) {
    for (long long c = 0; c < count; ++c) {
      out.roots.emplace_back(value, 0.0);
      out.residuals.push_back(0.0);
      out.radii.push_back(0.0);
    }
  };
  append(-1.0 / k, n - rs.degree);
  for (int l = 1; l < k; ++l)
    append(-1.0 / l, static_cast<long long>(n) << (k - l - 1));
  out.degree = static_cast<int>(out.roots.size());
  return out;
}

auto kstar_threshold(const ComplexRootSet& rs) -> int
{
  if (!rs.converged)
    throw RootsError("root set did not converge");
  double worst = -std::numeric_limits<double>::infinity();
  for (const auto& r : rs.roots) {
    if (std::norm(r) == 0.0)
      continue;
    worst = std::max(worst, r.real() / std::norm(r));
  }
  if (worst < 1.0)
    return 1;
  return static_cast<int>(std::floor(worst)) + 1;
}

auto star_small_root_check(long n, const Rational& epsilon) -> SmallRootCertificate
{
  if (n < 2)
    throw std::invalid_argument("star order must be at least 2");
  if (epsilon <= 0)
    throw std::invalid_argument("epsilon must be positive");
  SmallRootCertificate cert;
  cert.n = n;
  cert.epsilon = epsilon;
  for (unsigned bits = 64; bits <= 4096; bits *= 2) {
    BigFloat ln_lo(bits), ln_hi(bits), inv_eps(bits);
    BigInt nz(n);
    BigFloat nn(nz, bits);
    mpfr_log(ln_lo.get(), nn.get(), MPFR_RNDD);
    mpfr_log(ln_hi.get(), nn.get(), MPFR_RNDU);
    Rational inv = 1 / epsilon;
    mpfr_set_q(inv_eps.get(), inv.get_mpq_t(), MPFR_RNDU);
    // n > e^(1/eps) iff ln n > 1/eps; undecided at this precision means retry.
    if (ln_lo > inv_eps) {
      // q <= 1/ln_hi < 1/ln n, so s = -q lies strictly inside (-1/ln n, 0).
      BigFloat q(bits);
      BigFloat one(1.0, bits);
      mpfr_div(q.get(), one.get(), ln_hi.get(), MPFR_RNDD);
      BigFloat s = -q;
      BigFloat t(bits), pw(bits), sum(bits);
      mpfr_add(t.get(), one.get(), s.get(), MPFR_RNDU);
      mpfr_pow_ui(pw.get(), t.get(), static_cast<unsigned long>(n), MPFR_RNDU);
      mpfr_add(sum.get(), s.get(), pw.get(), MPFR_RNDU);
      cert.point = to_rational(s);
      cert.upper_bound = sum.to_string(30);
      cert.precision_bits = bits;
      if (sum.sign() < 0) {
        cert.certified = true;
        return cert;
      }
    } else if (ln_hi <= inv_eps) {
      throw std::invalid_argument("star_small_root_check requires n > e^(1/epsilon)");
    }
  }
  return cert;
}

auto mobius_disk_check(const ComplexRootSet& rs) -> DiskCheck
{
  auto check = in_region(rs, RegionSpec::disk({ 0.5, 0.0 }, 0.5));
  DiskCheck out;
  out.inside = check.inside;
  out.indeterminate = check.indeterminate;
  if (check.inside > 0)
    out.status = Membership::inside;
  else if (check.indeterminate > 0)
    out.status = Membership::indeterminate;
  return out;
}

} // namespace indstab
