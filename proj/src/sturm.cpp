#include "indstab/sturm.hpp"

namespace indstab {

namespace {

struct Split
{
  IntPoly poly;
  BigInt content;
};

// p = content * poly with content > 0; signs untouched.
auto split_content(const IntPoly& p) -> Split
{
  BigInt g = content(p);
  if (g <= 1)
    return { p, BigInt(1) };
  std::vector<BigInt> c(p.coeffs().begin(), p.coeffs().end());
  for (auto& v : c)
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return { IntPoly(std::move(c)), g };
}

auto defective(const SturmSequence& s) -> bool
{
  const std::size_t i = s.chain.size() - 1;
  if (i == 0)
    return false;
  return s.chain[i].degree() != s.chain[i - 1].degree() - 1 || s.chain[i].leading_sign() < 0;
}

auto build(IntPoly p0, Rational c0, ChainStop stop) -> SturmSequence
{
  SturmSequence s;
  s.chain.push_back(std::move(p0));
  s.scalars.push_back(c0);
  if (s.chain[0].degree() < 1)
    return s;
  {
    auto [p1, g] = split_content(derivative(s.chain[0]));
    s.chain.push_back(std::move(p1));
    Rational c1 = c0 / Rational(g);
    c1.canonicalize();
    s.scalars.push_back(c1);
  }
  if (stop == ChainStop::first_defect && defective(s))
    return s;
  while (s.chain.back().degree() > 0) {
    const std::size_t i = s.chain.size();
    const IntPoly& a = s.chain[i - 2];
    const IntPoly& b = s.chain[i - 1];
    const int e = a.degree() - b.degree() + 1;
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero())
      break;
    // prem = L a - q b with L = lc(b)^e, so -sign(L) prem = |L| c_{i-2} f_i.
    const bool negative_l = b.leading() < 0 && e % 2 == 1;
    if (!negative_l)
      r = -r;
    auto [pi, g] = split_content(r);
    BigInt l;
    BigInt lb = abs(b.leading());
    mpz_pow_ui(l.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
    Rational ci = s.scalars[i - 2] * Rational(l) / Rational(g);
    ci.canonicalize();
    s.chain.push_back(std::move(pi));
    s.scalars.push_back(ci);
    if (stop == ChainStop::first_defect && defective(s))
      break;
  }
  return s;
}

} // namespace

auto sign_at(const IntPoly& p, const Extended& x) -> int
{
  if (p.is_zero())
    return 0;
  if (x.infinity == 0)
    return sign_at(p, x.value);
  const int lead = p.leading_sign();
  if (x.infinity > 0 || p.degree() % 2 == 0)
    return lead;
  return -lead;
}

auto SturmSequence::definitional_term(std::size_t i) const -> RatPoly
{
  Rational inv = 1 / scalars.at(i);
  return to_rational(chain.at(i)) * inv;
}

auto sturm_sequence(const RatPoly& f, ChainStop stop) -> SturmSequence
{
  if (f.is_zero())
    throw std::domain_error("Sturm sequence of the zero polynomial");
  auto scaled = primitive_integer(f);
  return build(std::move(scaled.poly), scaled.scale, stop);
}

auto sturm_sequence(const IntPoly& f, ChainStop stop) -> SturmSequence
{
  if (f.is_zero())
    throw std::domain_error("Sturm sequence of the zero polynomial");
  auto [p, g] = split_content(f);
  Rational c0(1, g);
  c0.canonicalize();
  return build(std::move(p), c0, stop);
}

auto sign_variations(const SturmSequence& seq, const Extended& c) -> int
{
  int changes = 0;
  int last = 0;
  for (const auto& term : seq.chain) {
    const int s = sign_at(term, c);
    if (s == 0)
      continue;
    if (last != 0 && s != last)
      ++changes;
    last = s;
  }
  return changes;
}

namespace {

auto less(const Extended& a, const Extended& b) -> bool
{
  if (a.infinity != b.infinity)
    return a.infinity < b.infinity;
  return a.infinity == 0 && a.value < b.value;
}

} // namespace

auto count_real_roots(const IntPoly& f, const Extended& a, const Extended& b) -> int
{
  if (f.is_zero())
    throw std::domain_error("root count of the zero polynomial");
  if (!less(a, b) || f.degree() < 1)
    return 0;
  // On a squarefree polynomial V(a) - V(b) counts the roots in (a, b].
  IntPoly q = squarefree_part(f);
  auto seq = sturm_sequence(q);
  int count = sign_variations(seq, a) - sign_variations(seq, b);
  if (b.infinity == 0 && sign_at(q, b.value) == 0)
    --count;
  return count;
}

auto count_real_roots(const RatPoly& f, const Extended& a, const Extended& b) -> int
{
  if (f.is_zero())
    throw std::domain_error("root count of the zero polynomial");
  return count_real_roots(primitive_integer(f).poly, a, b);
}

auto to_string(ChainDefect d) -> std::string
{
  switch (d) {
  case ChainDefect::none:
    return "none";
  case ChainDefect::degree_gap:
    return "degree_gap";
  case ChainDefect::negative_leading:
    return "negative_leading";
  }
  return "unknown";
}

auto RealRootedness::reason() const -> std::string
{
  switch (defect) {
  case ChainDefect::none:
    return "full chain clean";
  case ChainDefect::degree_gap:
    return "gap in degree at chain index " + std::to_string(index);
  case ChainDefect::negative_leading:
    return "negative leading coefficient at chain index " + std::to_string(index);
  }
  return "unknown";
}

auto is_real_rooted(const IntPoly& f) -> RealRootedness
{
  RealRootedness out;
  if (f.degree() < 1) {
    out.real_rooted = true;
    return out;
  }
  const IntPoly g = f.leading() < 0 ? -f : f;
  auto seq = sturm_sequence(g, ChainStop::first_defect);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    out.degrees.push_back(seq.chain[i].degree());
    out.leading_signs.push_back(seq.chain[i].leading_sign());
  }
  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (out.degrees[i] != out.degrees[i - 1] - 1) {
      out.defect = ChainDefect::degree_gap;
      out.index = static_cast<int>(i);
      return out;
    }
    if (out.leading_signs[i] < 0) {
      out.defect = ChainDefect::negative_leading;
      out.index = static_cast<int>(i);
      return out;
    }
  }
  out.real_rooted = true;
  return out;
}

auto is_real_rooted(const RatPoly& f) -> RealRootedness
{
  if (f.is_zero())
    return is_real_rooted(IntPoly{});
  return is_real_rooted(primitive_integer(f).poly);
}

} // namespace indstab
