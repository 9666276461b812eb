#include <doctest.h>

#include "indstab/indpoly.hpp"
#include "oracles.hpp"

using namespace indstab;

namespace {

auto ip(const Graph& g) -> IntPoly
{
  return indpoly(g).poly;
}

} // namespace

TEST_SUITE("indpoly")
{
  TEST_CASE("named graphs")
  {
    auto r = indpoly(complete_multipartite({ 3, 3 }));
    CHECK(r.poly == ipoly({ 1, 6, 6, 2 }));
    CHECK(r.alpha == 3);
    CHECK(r.source == IndPolySource::recurrence);
    for (int n = 1; n <= 10; ++n)
      CHECK(ip(complete_graph(n)) == ipoly({ 1, n }));
    CHECK(ip(cycle_graph(5)) == ipoly({ 1, 5, 5 }));
    CHECK(ip(empty_graph(64)) == pow(ipoly({ 1, 1 }), 64));
    CHECK(ip(complete_graph(64)) == ipoly({ 1, 64 }));
  }

  TEST_CASE("closed forms")
  {
    CHECK(indpoly_closed(FamilySpec::parse("star:3")).poly == ipoly({ 1, 4, 3, 1 }));
    CHECK(indpoly_closed(FamilySpec::parse("complete_multipartite:1,2,3")).poly == ipoly({ 1, 6, 4, 1 }));
    CHECK(ip(complete_multipartite({ 1, 2, 3 })) == ipoly({ 1, 6, 4, 1 }));
    CHECK(multipartite_indpoly({ 1, 1 }) == ipoly({ 1, 2 }));
  }

  TEST_CASE("cycles have no closed form")
  {
    CHECK_THROWS_AS(indpoly_closed(FamilySpec::parse("cycle:5")), std::invalid_argument);
  }

  TEST_CASE("closed forms agree with the recurrence")
  {
    for (int n = 1; n <= 40; ++n) {
      CHECK(indpoly_closed(FamilySpec::parse("star:" + std::to_string(n))).poly == ip(star_graph(n)));
      CHECK(indpoly_closed(FamilySpec::parse("path:" + std::to_string(n))).poly == ip(path_graph(n)));
      CHECK(indpoly_closed(FamilySpec::parse("empty:" + std::to_string(n))).poly == ip(empty_graph(n)));
    }
    for (int n = 1; n <= 10; ++n) {
      auto spec = FamilySpec::parse("triangular_multipartite:" + std::to_string(n));
      CHECK(indpoly_closed(spec).poly == ip(family(spec)));
    }
    for (int k = 1; k <= 5; ++k)
      for (int n = 1; n <= 10 && n * k <= 64; ++n) {
        auto p = ip(complete_multipartite(std::vector<int>(static_cast<std::size_t>(k), n)));
        CHECK(p == BigInt(k) * pow(ipoly({ 1, 1 }), n) - ipoly({ k - 1 }));
      }
  }

  TEST_CASE("triangular coefficients are shifted binomials")
  {
    auto p = triangular_indpoly(15);
    CHECK(p.degree() == 15);
    CHECK(p[0] == 1);
    for (int j = 1; j <= 15; ++j)
      CHECK(p[j] == oracle::binomial(16, j + 1));
  }

  TEST_CASE("identities")
  {
    CHECK(indpoly_join(ipoly({ 1, 1 }), pow(ipoly({ 1, 1 }), 3)) == ip(star_graph(3)));
    CHECK(indpoly_join(ipoly({ 1, 5, 5 }), ipoly({ 1, 1 })) == ipoly({ 1, 6, 5 }));
    CHECK(indpoly_join(pow(ipoly({ 1, 1 }), 4), ipoly({ 1, 20 })) == pow(ipoly({ 1, 1 }), 4) + ipoly({ 0, 20 }));
    CHECK_THROWS(indpoly_join(ipoly({ 2, 1 }), ipoly({ 1 })));

    auto k3c = indpoly_corona(ipoly({ 1, 3 }), pow(ipoly({ 1, 1 }), 2), 3);
    CHECK(k3c == pow(ipoly({ 1, 1 }), 6) + ipoly({ 0, 3 }) * pow(ipoly({ 1, 1 }), 4));
    CHECK(k3c == ip(corona(complete_graph(3), empty_graph(2))));
    CHECK(indpoly_corona(ipoly({ 1, 1 }), pow(ipoly({ 1, 1 }), 7), 1) == star_indpoly(7));
    CHECK(indpoly_corona(ipoly({ 1, 2 }), ipoly({ 1, 1 }), 2) == ipoly({ 1, 4, 3 }));
    CHECK_THROWS(indpoly_corona(ipoly({ 1, 3, 1 }), ipoly({ 1, 1 }), 1));

    CHECK(indpoly_lex(ipoly({ 1, 3, 1 }), ipoly({ 1, 2 })) == ipoly({ 1, 6, 4 }));
    CHECK(ip(lex_product(path_graph(3), complete_graph(2))) == ipoly({ 1, 6, 4 }));
    CHECK(indpoly_lex(ipoly({ 1, 3, 1 }), ipoly({ 1, 1 })) == ipoly({ 1, 3, 1 }));
    CHECK(indpoly_lex(ipoly({ 1, 1 }), ipoly({ 1, 5, 5 })) == ipoly({ 1, 5, 5 }));

    CHECK(indpoly_kstar(ipoly({ 1, 1 }), 1, 1) == ipoly({ 1, 2 }));
    CHECK(indpoly_kstar(ipoly({ 1, 5, 5 }), 5, 1) == indpoly_corona(ipoly({ 1, 5, 5 }), ipoly({ 1, 1 }), 5));
    auto k2 = indpoly_kstar(ipoly({ 1, 2 }), 2, 2);
    CHECK(k2 == ip(graph_star(complete_graph(2), 2)));
    CHECK(k2.degree() == 4);
    CHECK_THROWS(indpoly_kstar(ipoly({ 1, 2 }), 2, 0));
  }

  TEST_CASE("k-star degree is half the order")
  {
    auto p = ip(cycle_graph(5));
    for (int k = 1; k <= 6; ++k)
      CHECK(indpoly_kstar(p, 5, k).degree() == 5 * (1 << (k - 1)));
  }

  TEST_CASE("recurrence matches subset enumeration")
  {
    std::mt19937_64 rng(101);
    for (int t = 0; t < 400; ++t) {
      const int n = 1 + static_cast<int>(rng() % 10);
      auto g = oracle::random_graph(rng, n, (t % 9 + 1) / 10.0);
      REQUIRE(ip(g) == oracle::subset_indpoly(g));
    }
  }

  TEST_CASE("memo cap does not change results")
  {
    std::mt19937_64 rng(103);
    for (int t = 0; t < 30; ++t) {
      auto g = oracle::random_graph(rng, 30, 0.2);
      auto a = indpoly(g).poly;
      CHECK(indpoly(g, 0).poly == a);
      CHECK(indpoly(g, 16).poly == a);
      CHECK(indpoly(g.relabelled(oracle::random_permutation(rng, 30))).poly == a);
    }
  }

  TEST_CASE("coefficient identities")
  {
    std::mt19937_64 rng(107);
    for (int t = 0; t < 300; ++t) {
      const int n = 1 + static_cast<int>(rng() % 20);
      auto g = oracle::random_graph(rng, n, (t % 9 + 1) / 10.0);
      auto r = indpoly(g);
      CHECK(r.poly[0] == 1);
      CHECK(r.poly.coeff(1) == n);
      CHECK(r.poly.coeff(2) == oracle::binomial(n, 2) - g.edge_count());
      CHECK(r.alpha == independence_number(g));
      for (int k = 0; k <= r.alpha; ++k)
        CHECK(r.poly[k] > 0);
      if (r.alpha == 2)
        CHECK(r.poly[2] <= (n / 2) * ((n + 1) / 2));
      if (r.alpha >= 3)
        CHECK(BigInt(n) * r.poly[2] >= r.poly[3]);
      CHECK(ip(disjoint_union(g, path_graph(3))) == r.poly * ipoly({ 1, 3, 1 }));
    }
  }

  TEST_CASE("JSON shape")
  {
    auto j = to_json(indpoly(cycle_graph(5)), "c5", 5);
    CHECK(j["alpha"] == 2);
    CHECK(j["coefficients"] == nlohmann::json::array({ "1", "5", "5" }));
    CHECK(j["source"] == "recurrence");
  }
}
