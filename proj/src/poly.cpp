#include "indstab/poly.hpp"

#include <cstdint>
#include <sstream>

namespace indstab {

auto BigFloat::to_string(int digits) const -> std::string
{
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

auto to_rational(const BigFloat& v) -> mpq_class
{
  mpz_class m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v.get());
  mpq_class r(m);
  if (e > 0)
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  else if (e < 0)
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  r.canonicalize();
  return r;
}

auto to_rational(double v) -> Rational
{
  Rational r(v);
  r.canonicalize();
  return r;
}

auto sign_at(const IntPoly& p, const Rational& x) -> int
{
  if (p.is_zero())
    return 0;
  const BigInt& a = x.get_num();
  const BigInt& b = x.get_den();
  BigInt r = p.leading();
  BigInt bp = b;
  for (int i = p.degree() - 1; i >= 0; --i) {
    r *= a;
    if (p[i] != 0)
      r += p[i] * bp;
    bp *= b;
  }
  return sgn(r);
}

auto evaluate(const IntPoly& p, double x) -> double
{
  double r = 0.0;
  for (int i = p.degree(); i >= 0; --i)
    r = r * x + p[i].get_d();
  return r;
}

auto evaluate(const IntPoly& p, std::complex<double> z) -> std::complex<double>
{
  std::complex<double> r = 0.0;
  for (int i = p.degree(); i >= 0; --i)
    r = r * z + p[i].get_d();
  return r;
}

auto evaluate(const IntPoly& p, const BigFloat& x) -> BigFloat
{
  const unsigned bits = x.precision();
  BigFloat r(bits);
  for (int i = p.degree(); i >= 0; --i) {
    r *= x;
    r += BigFloat(p[i], bits);
  }
  return r;
}

auto to_rational(const IntPoly& p) -> RatPoly
{
  std::vector<Rational> c;
  c.reserve(p.size());
  for (const auto& v : p.coeffs())
    c.emplace_back(v);
  return RatPoly(std::move(c));
}

auto content(const IntPoly& p) -> BigInt
{
  BigInt g = 0;
  for (const auto& v : p.coeffs()) {
    if (v == 0)
      continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1)
      break;
  }
  return g;
}

auto primitive_part(const IntPoly& p) -> IntPoly
{
  if (p.is_zero())
    return p;
  BigInt g = content(p);
  if (p.leading() < 0)
    g = -g;
  if (g == 1)
    return p;
  std::vector<BigInt> c(p.coeffs().begin(), p.coeffs().end());
  for (auto& v : c)
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(c));
}

auto primitive_integer(const RatPoly& p) -> ScaledIntPoly
{
  if (p.is_zero())
    return { IntPoly{}, Rational(1) };
  BigInt den = 1;
  for (const auto& v : p.coeffs())
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  std::vector<BigInt> c;
  c.reserve(p.size());
  for (const auto& v : p.coeffs()) {
    BigInt t = v.get_num() * (den / v.get_den());
    c.push_back(t);
  }
  IntPoly ip(std::move(c));
  BigInt g = content(ip);
  std::vector<BigInt> d(ip.coeffs().begin(), ip.coeffs().end());
  for (auto& v : d)
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  Rational scale(den, g);
  scale.canonicalize();
  return { IntPoly(std::move(d)), scale };
}

auto divmod(const RatPoly& a, const RatPoly& b) -> DivMod
{
  if (b.is_zero())
    throw std::domain_error("polynomial division by zero");
  std::vector<Rational> r(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  const int da = a.degree();
  if (da < db)
    return { RatPoly{}, a };
  std::vector<Rational> q(static_cast<std::size_t>(da - db + 1), Rational(0));
  const Rational& lb = b.leading();
  for (int k = da; k >= db; --k) {
    if (r[k] == 0)
      continue;
    Rational t = r[k] / lb;
    q[k - db] = t;
    for (int j = 0; j <= db; ++j)
      r[k - db + j] -= t * b[j];
  }
  r.resize(static_cast<std::size_t>(db));
  return { RatPoly(std::move(q)), RatPoly(std::move(r)) };
}

auto exact_remainder(const RatPoly& a, const RatPoly& b) -> RatPoly
{
  return divmod(a, b).remainder;
}

auto exact_quotient(const IntPoly& a, const IntPoly& b) -> IntPoly
{
  auto [q, r] = divmod(to_rational(a), to_rational(b));
  if (!r.is_zero())
    throw std::domain_error("polynomial division is not exact");
  std::vector<BigInt> c;
  for (const auto& v : q.coeffs()) {
    if (v.get_den() != 1)
      throw std::domain_error("polynomial quotient is not integral");
    c.push_back(v.get_num());
  }
  return IntPoly(std::move(c));
}

auto poly_gcd(const RatPoly& a, const RatPoly& b) -> RatPoly
{
  if (a.is_zero() && b.is_zero())
    return {};
  auto ia = primitive_integer(a).poly;
  auto ib = primitive_integer(b).poly;
  IntPoly g = poly_gcd(ia, ib);
  RatPoly r = to_rational(g);
  Rational inv = 1 / r.leading();
  return r * inv;
}

auto pseudo_remainder(const IntPoly& a, const IntPoly& b) -> IntPoly
{
  if (b.is_zero())
    throw std::domain_error("pseudo-remainder by zero polynomial");
  const int db = b.degree();
  if (a.degree() < db)
    return a;
  std::vector<BigInt> r(a.coeffs().begin(), a.coeffs().end());
  const BigInt& lb = b.leading();
  int e = a.degree() - db + 1;
  int dr = a.degree();
  BigInt t;
  while (dr >= db) {
    t = r[dr];
    const int shift = dr - db;
    for (int i = 0; i < dr; ++i)
      r[i] *= lb;
    for (int j = 0; j < db; ++j)
      r[shift + j] -= t * b[j];
    r[dr] = 0;
    --e;
    --dr;
    while (dr >= 0 && r[dr] == 0)
      --dr;
  }
  r.resize(static_cast<std::size_t>(std::max(dr + 1, 0)));
  if (e > 0) {
    BigInt f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
    for (auto& v : r)
      v *= f;
  }
  return IntPoly(std::move(r));
}

auto poly_gcd(const IntPoly& a, const IntPoly& b) -> IntPoly
{
  IntPoly x = primitive_part(a);
  IntPoly y = primitive_part(b);
  if (x.is_zero())
    return y;
  if (y.is_zero())
    return x;
  if (x.degree() < y.degree())
    std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = primitive_part(pseudo_remainder(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  return primitive_part(x);
}

namespace {

using Word = std::uint64_t;

auto pow_mod(Word b, Word e, Word m) -> Word
{
  Word r = 1;
  b %= m;
  while (e) {
    if (e & 1U)
      r = r * b % m;
    b = b * b % m;
    e >>= 1U;
  }
  return r;
}

// Monic-free Euclid over GF(m), polynomials as ascending coefficient vectors
// with no trailing zeros.
auto gcd_degree_mod(std::vector<Word> a, std::vector<Word> b, Word m) -> int
{
  auto trim = [](std::vector<Word>& v) {
    while (!v.empty() && v.back() == 0)
      v.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    const Word inv = pow_mod(b.back(), m - 2, m);
    while (a.size() >= b.size()) {
      const Word f = a.back() * inv % m;
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i)
        a[shift + i] = (a[shift + i] + (m - f) * b[i]) % m;
      trim(a);
      if (a.empty())
        break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

} // namespace

auto squarefree_modular(const IntPoly& p) -> bool
{
  if (p.degree() < 2)
    return true;
  const Word primes[] = { 2147483647ULL, 2147483629ULL, 2147483587ULL, 1000000007ULL };
  for (Word m : primes) {
    std::vector<Word> a;
    BigInt r;
    for (const auto& c : p.coeffs()) {
      mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), m);
      a.push_back(r.get_ui());
    }
    if (a.back() == 0 || static_cast<Word>(p.degree()) % m == 0)
      continue;
    std::vector<Word> da;
    for (std::size_t i = 1; i < a.size(); ++i)
      da.push_back(a[i] * (i % m) % m);
    if (gcd_degree_mod(a, da, m) == 0)
      return true;
  }
  return false;
}

auto squarefree_part(const IntPoly& p) -> IntPoly
{
  if (p.degree() <= 0)
    return primitive_part(p);
  IntPoly g = poly_gcd(p, derivative(p));
  return primitive_part(exact_quotient(primitive_part(p), g));
}

auto squarefree_factorization(const IntPoly& p) -> std::vector<IntPoly>
{
  std::vector<IntPoly> out;
  if (p.degree() <= 0)
    return out;
  IntPoly a = primitive_part(p);
  IntPoly da = derivative(a);
  IntPoly c = poly_gcd(a, da);
  RatPoly w = to_rational(exact_quotient(a, c));
  RatPoly y = divmod(to_rational(da), to_rational(c)).quotient;
  RatPoly z = y - derivative(w);
  while (w.degree() > 0) {
    RatPoly g = poly_gcd(w, z);
    out.push_back(primitive_integer(g).poly);
    w = divmod(w, g).quotient;
    y = divmod(z, g).quotient;
    z = y - derivative(w);
  }
  while (!out.empty() && out.back().degree() == 0)
    out.pop_back();
  return out;
}

auto strip_zero_roots(const IntPoly& p) -> std::pair<int, IntPoly>
{
  int k = 0;
  while (k < static_cast<int>(p.size()) && p[k] == 0)
    ++k;
  if (k == 0 || p.is_zero())
    return { 0, p };
  std::vector<BigInt> c(p.coeffs().begin() + k, p.coeffs().end());
  return { k, IntPoly(std::move(c)) };
}

namespace {

template <typename T>
auto render(const Poly<T>& p) -> std::string
{
  if (p.is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0)
      continue;
    T v = p[i];
    if (!first)
      os << (v < 0 ? " - " : " + ");
    else if (v < 0)
      os << "-";
    if (v < 0)
      v = -v;
    if (i == 0 || v != 1)
      os << v;
    if (i > 0)
      os << "x";
    if (i > 1)
      os << "^" << i;
    first = false;
  }
  return os.str();
}

} // namespace

auto to_string(const IntPoly& p) -> std::string { return render(p); }
auto to_string(const RatPoly& p) -> std::string { return render(p); }

auto to_json(const IntPoly& p) -> nlohmann::json
{
  auto j = nlohmann::json::array();
  for (const auto& v : p.coeffs())
    j.push_back(v.get_str());
  if (p.is_zero())
    j.push_back("0");
  return j;
}

auto to_json(const RatPoly& p) -> nlohmann::json
{
  auto j = nlohmann::json::array();
  for (const auto& v : p.coeffs())
    j.push_back(v.get_str());
  if (p.is_zero())
    j.push_back("0");
  return j;
}

auto int_poly_from_json(const nlohmann::json& j) -> IntPoly
{
  if (!j.is_array())
    throw std::invalid_argument("polynomial JSON must be an array of decimal strings");
  std::vector<BigInt> c;
  for (const auto& e : j) {
    if (e.is_number_integer()) {
      c.emplace_back(e.dump());
      continue;
    }
    if (!e.is_string())
      throw std::invalid_argument("polynomial coefficient must be an integer or decimal string");
    BigInt v;
    if (v.set_str(e.get<std::string>(), 10) != 0)
      throw std::invalid_argument("bad integer coefficient: " + e.get<std::string>());
    c.push_back(v);
  }
  return IntPoly(std::move(c));
}

auto rat_poly_from_json(const nlohmann::json& j) -> RatPoly
{
  if (!j.is_array())
    throw std::invalid_argument("polynomial JSON must be an array of decimal strings");
  std::vector<Rational> c;
  for (const auto& e : j) {
    if (!e.is_string())
      throw std::invalid_argument("polynomial coefficient must be a decimal string");
    Rational v;
    if (v.set_str(e.get<std::string>(), 10) != 0)
      throw std::invalid_argument("bad rational coefficient: " + e.get<std::string>());
    v.canonicalize();
    c.push_back(v);
  }
  return RatPoly(std::move(c));
}

} // namespace indstab
