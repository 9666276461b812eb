#include <doctest.h>

#include "indstab/indpoly.hpp"
#include "indstab/isolate.hpp"
#include "indstab/roots.hpp"
#include "indstab/stability.hpp"
#include "indstab/sturm.hpp"
#include "oracles.hpp"

#include <random>

using namespace indstab;

namespace {

auto at(long v) -> Extended
{
  return Extended::at(Rational(v));
}

auto random_poly(std::mt19937_64& rng, int max_degree, long max_coeff) -> IntPoly
{
  std::uniform_int_distribution<int> deg(1, max_degree);
  std::uniform_int_distribution<long> coeff(-max_coeff, max_coeff);
  const int d = deg(rng);
  std::vector<BigInt> c;
  for (int i = 0; i <= d; ++i)
    c.emplace_back(coeff(rng));
  while (c.back() == 0)
    c.back() = coeff(rng);
  return IntPoly(std::move(c));
}

auto random_positive_poly(std::mt19937_64& rng, int max_degree, long max_coeff) -> IntPoly
{
  std::uniform_int_distribution<int> deg(1, max_degree);
  std::uniform_int_distribution<long> coeff(1, max_coeff);
  const int d = deg(rng);
  std::vector<BigInt> c;
  for (int i = 0; i <= d; ++i)
    c.emplace_back(coeff(rng));
  return IntPoly(std::move(c));
}

auto triangular(long n) -> IntPoly
{
  std::vector<long> parts;
  for (long i = 1; i <= n; ++i)
    parts.push_back(i);
  return multipartite_indpoly(parts);
}

} // namespace

TEST_SUITE("sturm")
{
  TEST_CASE("chain of x^2 - 1")
  {
    auto seq = sturm_sequence(ipoly({ -1, 0, 1 }));
    REQUIRE(seq.size() == 3);
    CHECK(seq.definitional_term(0) == rpoly({ -1, 0, 1 }));
    CHECK(seq.definitional_term(1) == rpoly({ 0, 2 }));
    CHECK(seq.definitional_term(2) == rpoly({ 1 }));
    CHECK(sign_variations(seq, at(-2)) == 2);
    CHECK(sign_variations(seq, at(2)) == 0);
    CHECK(sign_variations(seq, Extended::minus_infinity()) == 2);
    CHECK(sign_variations(seq, Extended::plus_infinity()) == 0);
  }

  TEST_CASE("chain stops at a repeated root")
  {
    auto seq = sturm_sequence(ipoly({ 0, 0, 1 }));
    CHECK(seq.size() == 2);
    auto lin = sturm_sequence(ipoly({ 1, 6 }));
    REQUIRE(lin.size() == 2);
    CHECK(lin.definitional_term(1) == rpoly({ 6 }));
    CHECK(sign_variations(lin, at(0)) == 0);
    CHECK_THROWS_AS(sturm_sequence(IntPoly{}), std::domain_error);
  }

  TEST_CASE("zeros inside a sign sequence are skipped")
  {
    // x^2 - 1 chain at 0 reads (-1, 0, 1).
    auto seq = sturm_sequence(ipoly({ -1, 0, 1 }));
    CHECK(sign_variations(seq, at(0)) == 1);
  }

  TEST_CASE("root counts")
  {
    CHECK(count_real_roots(ipoly({ -1, 0, 1 }), at(-2), at(2)) == 2);
    CHECK(count_real_roots(ipoly({ 1, 0, 1 }), Extended::minus_infinity(), Extended::plus_infinity()) == 0);
    CHECK(count_real_roots(ipoly({ 1, 6, 1 }), Extended::minus_infinity(), at(0)) == 2);
    // Endpoints that are roots are excluded from the open interval.
    CHECK(count_real_roots(ipoly({ -1, 0, 1 }), at(-1), at(1)) == 0);
    CHECK(count_real_roots(ipoly({ -1, 0, 1 }), at(-1), at(2)) == 1);
    CHECK(count_real_roots(pow(ipoly({ 1, 1 }), 5), at(-2), at(0)) == 1);
    CHECK(count_real_roots(rpoly({ Rational(1, 2), Rational(-3, 2), 1 }), at(0), at(2)) == 2);
  }

  TEST_CASE("real-rootedness by chain defects")
  {
    CHECK(is_real_rooted(pow(ipoly({ 1, 1 }), 3)).real_rooted);
    CHECK(is_real_rooted(pow(ipoly({ 1, 1 }), 3)).reason() == "full chain clean");
    auto r = is_real_rooted(ipoly({ 1, 0, 1 }));
    CHECK_FALSE(r.real_rooted);
    CHECK(r.defect == ChainDefect::negative_leading);
    CHECK(r.index == 2);
    auto gap = is_real_rooted(ipoly({ 1, 0, 0, 1 }));
    CHECK_FALSE(gap.real_rooted);
    CHECK(gap.defect == ChainDefect::degree_gap);
    CHECK(is_real_rooted(ipoly({ 2, -3, 1 })).real_rooted);
    CHECK(is_real_rooted(ipoly({ -2, 3, -1 })).real_rooted);
    CHECK(is_real_rooted(pow(ipoly({ 1, 0, 1 }), 2) * ipoly({ 1, 1 })).real_rooted == false);
    CHECK(is_real_rooted(pow(ipoly({ 2, 1 }), 3) * pow(ipoly({ -1, 1 }), 2)).real_rooted);
  }

  TEST_CASE("odd part of (1+x)^17 - 16x - 1")
  {
    // The nonzero roots of i(K_{1,...,16}) are those of g = (1+x)^17 - 16x - 1.
    const IntPoly g = pow(ipoly({ 1, 1 }), 17) - ipoly({ 1, 16 });
    CHECK(exact_quotient(g, ipoly({ 0, 1 })) == triangular(16));
    const IntPoly godd = even_odd_split(g).odd;
    REQUIRE(godd.degree() == 8);
    CHECK(godd == even_odd_split(triangular(16)).even);
    auto seq = sturm_sequence(godd);
    REQUIRE(seq.size() == 9);
    Rational f8("-1577448937796744128202619637524087852027658290220375925735260560/"
                "79627136162551065499783779429209235652424929298356031742670249");
    f8.canonicalize();
    CHECK(seq.definitional_term(8) == RatPoly({ f8 }));
    CHECK_FALSE(is_real_rooted(godd).real_rooted);

    const IntPoly rev = reversal(godd).poly;
    auto rr = is_real_rooted(rev);
    CHECK_FALSE(rr.real_rooted);
    CHECK(rr.defect == ChainDefect::negative_leading);
    auto full = sturm_sequence(rev);
    REQUIRE(full.size() == 9);
    CHECK(full.chain[8].leading_sign() < 0);
  }

  TEST_CASE("normalization never changes sign variations")
  {
    // Textbook chain in rational arithmetic with plain remainders.
    auto raw_chain = [](const RatPoly& f) {
      std::vector<RatPoly> chain{ f, derivative(f) };
      while (chain.back().degree() > 0) {
        auto r = divmod(chain[chain.size() - 2], chain.back()).remainder;
        if (r.is_zero())
          break;
        chain.push_back(-r);
      }
      return chain;
    };
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> point(-40, 40);
    for (int trial = 0; trial < 300; ++trial) {
      const IntPoly p = random_poly(rng, 8, 20);
      const auto raw = raw_chain(to_rational(p));
      const auto seq = sturm_sequence(p);
      REQUIRE(raw.size() == seq.size());
      for (std::size_t i = 0; i < raw.size(); ++i)
        CHECK(seq.definitional_term(i) == raw[i]);
      for (int k = 0; k < 10; ++k) {
        Rational x(point(rng), 7);
        x.canonicalize();
        int v = 0, last = 0;
        for (const auto& t : raw) {
          Rational y = 0;
          for (int j = t.degree(); j >= 0; --j)
            y = y * x + t[j];
          const int s = sgn(y);
          if (s != 0) {
            if (last != 0 && s != last)
              ++v;
            last = s;
          }
        }
        CHECK(sign_variations(seq, Extended::at(x)) == v);
      }
    }
  }

  TEST_CASE("Sturm count equals numeric count on random polynomials")
  {
    std::mt19937_64 rng(2024);
    int mismatches = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      const IntPoly p = random_poly(rng, 12, 1000);
      const int exact = count_real_roots(p, Extended::minus_infinity(), Extended::plus_infinity());
      const auto rs = all_roots(p);
      int numeric = 0;
      for (const auto& c : clusters(rs))
        if (std::fabs(c.centre.imag()) <= std::max(c.radius, 1e-9))
          ++numeric;
      if (exact != numeric)
        ++mismatches;
      CHECK(is_real_rooted(p.leading_sign() < 0 ? -p : p).real_rooted ==
            (exact == squarefree_part(p).degree()));
    }
    CHECK(mismatches == 0);
  }
}

TEST_SUITE("isolate")
{
  TEST_CASE("isolating intervals")
  {
    auto lin = isolate_real_roots(ipoly({ 1, 6 }));
    REQUIRE(lin.roots.size() == 1);
    CHECK(lin.roots[0].lo <= Rational(-1, 6));
    CHECK(lin.roots[0].hi >= Rational(-1, 6));

    auto quad = isolate_real_roots(ipoly({ 1, 6, 1 }));
    REQUIRE(quad.roots.size() == 2);
    // -3 - 2 sqrt 2 ~ -5.83, -3 + 2 sqrt 2 ~ -0.17
    CHECK(quad.roots[0].hi <= quad.roots[1].lo);
    refine(quad, Rational(1, 1000000));
    CHECK(quad.roots[0].lo > Rational(-5829, 1000));
    CHECK(quad.roots[0].hi < Rational(-5827, 1000));
    CHECK(quad.roots[1].lo > Rational(-172, 1000));
    CHECK(quad.roots[1].hi < Rational(-171, 1000));

    auto dbl = isolate_real_roots(pow(ipoly({ 1, 1 }), 2));
    REQUIRE(dbl.roots.size() == 1);
    CHECK(dbl.roots[0].multiplicity == 2);
    CHECK(dbl.squarefree == ipoly({ 1, 1 }));

    auto none = isolate_real_roots(ipoly({ 1, 0, 1 }));
    CHECK(none.roots.empty());
  }

  TEST_CASE("rational roots and multiplicities")
  {
    // (2x+1)^3 (x-3)^2 x (x^2+1)
    IntPoly p = pow(ipoly({ 1, 2 }), 3) * pow(ipoly({ -3, 1 }), 2) * ipoly({ 0, 1 }) * ipoly({ 1, 0, 1 });
    auto iso = isolate_real_roots(p);
    REQUIRE(iso.roots.size() == 3);
    const Rational roots[] = { Rational(-1, 2), Rational(0), Rational(3) };
    const int mult[] = { 3, 1, 2 };
    refine(iso, Rational(1, 1 << 20));
    for (int i = 0; i < 3; ++i) {
      CHECK(iso.roots[i].multiplicity == mult[i]);
      CHECK(iso.roots[i].lo <= roots[i]);
      CHECK(iso.roots[i].hi >= roots[i]);
    }
  }

  TEST_CASE("isolation on random polynomials matches Sturm counts")
  {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
      IntPoly p = random_poly(rng, 7, 30);
      if (trial % 3 == 0)
        p = p * random_poly(rng, 3, 5);
      auto iso = isolate_real_roots(p);
      CHECK(static_cast<int>(iso.roots.size()) ==
            count_real_roots(p, Extended::minus_infinity(), Extended::plus_infinity()));
      for (std::size_t i = 0; i < iso.roots.size(); ++i) {
        const auto& r = iso.roots[i];
        if (!r.exact())
          CHECK(count_real_roots(iso.squarefree, Extended::at(r.lo), Extended::at(r.hi)) == 1);
        if (i > 0)
          CHECK(iso.roots[i - 1].hi <= r.lo);
      }
    }
  }

  TEST_CASE("interlacing examples")
  {
    CHECK(interlaces(ipoly({ 6, 2 }), ipoly({ 1, 6 })).relation == Interlacing::alternates_left);
    auto bad = interlaces(ipoly({ 24, 4 }), ipoly({ 1, 6, 1 }));
    CHECK(bad.relation == Interlacing::neither);
    CHECK(bad.violation == "t_1 <= s_1");
    CHECK(interlaces(ipoly({ 0, 1 }), ipoly({ -1, 0, 1 })).relation == Interlacing::interlaces);
    // Shared roots are legal under weak inequalities.
    CHECK(interlaces(ipoly({ 1, 1 }), ipoly({ 1, 1 })).relation == Interlacing::alternates_left);
    CHECK(interlaces(ipoly({ 1, 1 }), ipoly({ 1, 1 }) * ipoly({ 2, 1 })).relation == Interlacing::interlaces);
    CHECK_THROWS_AS(interlaces(ipoly({ 1, 0, 1 }), ipoly({ 1, 6, 1 })), std::invalid_argument);
    CHECK_THROWS_AS(interlaces(ipoly({ 1, 1 }), ipoly({ 1, 6, 1, 1 })), std::invalid_argument);
    CHECK(interlaces(rpoly({ 3, 1 }), rpoly({ Rational(1, 2), 3 })).relation == Interlacing::alternates_left);
  }

  TEST_CASE("interlacing agrees with sorted numeric roots")
  {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> root(-30, 30), size(1, 6), shape(0, 1);
    for (int trial = 0; trial < 300; ++trial) {
      const int n = size(rng);
      const int m = n + shape(rng);
      std::vector<int> s, t;
      IntPoly f = ipoly({ 1 }), g = ipoly({ 1 });
      for (int i = 0; i < n; ++i) {
        s.push_back(root(rng));
        f = f * ipoly({ -s.back(), 1 });
      }
      for (int i = 0; i < m; ++i) {
        t.push_back(root(rng));
        g = g * ipoly({ -t.back(), 1 });
      }
      std::sort(s.begin(), s.end());
      std::sort(t.begin(), t.end());
      bool ok = true;
      for (int i = 0; i < n; ++i) {
        if (m == n + 1)
          ok = ok && t[i] <= s[i] && s[i] <= t[i + 1];
        else
          ok = ok && s[i] <= t[i] && (i + 1 == n || t[i] <= s[i + 1]);
      }
      auto r = interlaces(f, g);
      CHECK((r.relation != Interlacing::neither) == ok);
    }
  }
}

TEST_SUITE("stability")
{
  TEST_CASE("worked examples")
  {
    auto k33 = hb_stable(ipoly({ 1, 6, 6, 2 }));
    CHECK(k33.stable());
    CHECK(k33.certificate["pattern"] == "alternates_left");
    auto m20 = hb_stable(pow(ipoly({ 1, 1 }), 4) + ipoly({ 0, 20 }));
    CHECK_FALSE(m20.stable());
    CHECK(m20.witness["kind"] == "interlacing");
    CHECK(hb_stable(ipoly({ 1, 2 })).stable());
    CHECK_THROWS_AS(hb_stable(IntPoly{}), std::domain_error);
  }

  TEST_CASE("real-rooted shortcut")
  {
    auto c5 = stability_verdict(ipoly({ 1, 5, 5 }));
    CHECK(c5.stable());
    CHECK(c5.certificate["route"] == "real_rooted");
    CHECK_THROWS_AS(stability_verdict(ipoly({ 2, 5, 5 })), std::invalid_argument);
    CHECK_THROWS_AS(stability_verdict(ipoly({ 1, -5, 5 })), std::invalid_argument);
  }

  TEST_CASE("triangular multipartite threshold")
  {
    CHECK(stability_verdict(triangular(14)).stable());
    CHECK_FALSE(stability_verdict(triangular(15)).stable());
    CHECK_FALSE(stability_verdict(triangular(16)).stable());
  }

  TEST_CASE("closed half-plane and degenerate inputs")
  {
    // Roots on the imaginary axis and at 0 are allowed.
    CHECK(hb_stable(ipoly({ 1, 0, 1 })).stable());
    CHECK(hb_stable(ipoly({ 0, 1, 0, 1 })).stable());
    CHECK(hb_stable(ipoly({ 1, 1, 1, 1 })).stable());
    CHECK(hb_stable(ipoly({ 3 })).stable());
    CHECK(hb_stable(ipoly({ 0, 0, 5 })).stable());
    CHECK(hb_stable(pow(ipoly({ 1, 1 }), 6)).stable());
    CHECK(hb_stable(pow(ipoly({ 1, 0, 1 }), 2) * ipoly({ 1, 1 })).stable());
    CHECK_FALSE(hb_stable(ipoly({ -1, 1 })).stable());
    CHECK_FALSE(hb_stable(ipoly({ 1, 0, 0, 1 })).stable());
    CHECK_FALSE(hb_stable(ipoly({ -1, 0, 1 })).stable());
    CHECK_FALSE(hb_stable(ipoly({ 1, 0, 2, 0, 1 }) * ipoly({ -1, 1 })).stable());
    CHECK_THROWS_AS(hb_stable(ipoly({ 1, -1 })), std::invalid_argument);
  }

  TEST_CASE("certificates replay")
  {
    std::vector<IntPoly> polys = { ipoly({ 1, 6, 6, 2 }),          pow(ipoly({ 1, 1 }), 4) + ipoly({ 0, 20 }),
                                   ipoly({ 1, 2 }),                ipoly({ 1, 5, 5 }),
                                   triangular(14),                 triangular(15),
                                   triangular(16),                 star_indpoly(40),
                                   pow(ipoly({ 1, 1 }), 7),        ipoly({ 1, 0, 1 }),
                                   ipoly({ 0, 1, 0, 1 }) };
    for (const auto& p : polys) {
      auto v = p[0] == 1 && p.degree() >= 1 && p[1] > 0 ? stability_verdict(p) : hb_stable(p);
      auto j = to_json(v, std::string("g"));
      CHECK(j["graph_id"] == "g");
      auto report = verify(j);
      CHECK(report.ok);
      CHECK(report.checks > 0);
    }
  }

  TEST_CASE("tampered certificates fail")
  {
    auto v = stability_verdict(ipoly({ 1, 6, 6, 2 }));
    auto j = to_json(v);
    auto bad = j;
    bad["polynomial"] = to_json(pow(ipoly({ 1, 1 }), 4) + ipoly({ 0, 20 }));
    CHECK_FALSE(verify(bad).ok);
    auto swapped = j;
    swapped["certificate"]["pattern"] = "interlaces";
    CHECK_FALSE(verify(swapped).ok);
    auto moved = j;
    moved["certificate"]["roots"][0]["interval"][0] = "0";
    CHECK_FALSE(verify(moved).ok);
    auto lie = to_json(stability_verdict(triangular(15)));
    lie["status"] = "Stable";
    CHECK_FALSE(verify(lie).ok);
    auto flip = j;
    flip["status"] = "Nonstable";
    flip["witness"] = { { "kind", "interlacing" } };
    CHECK_FALSE(verify(flip).ok);
  }

  TEST_CASE("Hermite-Biehler agrees with numeric roots")
  {
    std::mt19937_64 rng(77);
    int disagreements = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      IntPoly p = random_positive_poly(rng, 10, trial % 2 == 0 ? 10 : 1000);
      auto v = hb_stable(p);
      try {
        cross_check(v, all_roots(p));
      } catch (const VerdictDisagreement&) {
        ++disagreements;
      }
      CHECK(numeric_verdict(all_roots(p), p).stable() == v.stable());
    }
    CHECK(disagreements == 0);
  }

  TEST_CASE("small independence numbers give stable polynomials")
  {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
      auto g = oracle::random_graph(rng, 4 + trial % 9, 0.8);
      auto r = indpoly(g);
      if (r.alpha <= 3)
        CHECK(stability_verdict(r.poly).stable());
    }
  }

  TEST_CASE("checked verdicts")
  {
    CHECK(checked_verdict(star_indpoly(30)).stable());
    CHECK_FALSE(checked_verdict(triangular(15)).stable());
    StabilityVerdict fake = stability_verdict(ipoly({ 1, 6, 6, 2 }));
    fake.polynomial = triangular(15);
    CHECK_THROWS_AS(cross_check(fake, all_roots(triangular(15))), VerdictDisagreement);
  }
}
