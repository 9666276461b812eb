#include <doctest.h>

#include "indstab/canonical.hpp"
#include "indstab/graph.hpp"
#include "oracles.hpp"

#include <set>

using namespace indstab;

TEST_SUITE("graph")
{
  TEST_CASE("construction and validation")
  {
    auto k2 = Graph::from_edges(2, { { 0, 1 } });
    CHECK(k2 == complete_graph(2));
    CHECK(Graph::from_edges(3, {}).edge_count() == 0);
    auto p4 = Graph::from_edges(4, { { 0, 1 }, { 1, 2 }, { 2, 3 }, { 1, 0 } });
    CHECK(p4.degree_sequence() == std::vector<int>{ 1, 2, 2, 1 });
    CHECK(p4.edge_count() == 3);
    CHECK_THROWS_AS(Graph::from_edges(3, { { 1, 1 } }), GraphError);
    CHECK_THROWS_AS(Graph::from_edges(3, { { 0, 3 } }), GraphError);
    CHECK_THROWS_AS(Graph::from_edges(65, {}), GraphError);
    CHECK_THROWS_AS(Graph::from_edges(0, {}), GraphError);
    CHECK_THROWS_AS(Graph::from_rows({ 0b10, 0b00 }), GraphError);
    CHECK(Graph::from_edges(64, { { 0, 63 } }).edge_count() == 1);
  }

  TEST_CASE("families")
  {
    auto claw = family(FamilySpec::parse("star:3"));
    CHECK(claw.order() == 4);
    CHECK(claw.degree_sequence() == std::vector<int>{ 3, 1, 1, 1 });
    CHECK(family(FamilySpec::parse("complete_multipartite:3,3")).edge_count() == 9);
    auto t2 = family(FamilySpec::parse("triangular_multipartite:2"));
    CHECK(canonical_code(t2) == canonical_code(path_graph(3)));
    CHECK(FamilySpec::parse("complete_multipartite:1,2,3").to_string() == "complete_multipartite:1,2,3");
    CHECK(FamilySpec::parse("triangular_multipartite:25").order() == 325);
    CHECK_THROWS_AS(family(FamilySpec::parse("triangular_multipartite:11")), GraphError);
    CHECK_THROWS_AS(FamilySpec::parse("hypercube:3"), GraphError);
    CHECK_THROWS_AS(FamilySpec::parse("star:0"), GraphError);
    CHECK_THROWS_AS(FamilySpec::parse("star"), GraphError);
    CHECK(cycle_graph(5).edge_count() == 5);
  }

  TEST_CASE("join")
  {
    CHECK(join(empty_graph(1), empty_graph(1)) == complete_graph(2));
    auto g = join(empty_graph(4), complete_graph(2));
    CHECK(independence_number(g) == 4);
    CHECK(g.edge_count() == 9);
    CHECK(canonical_code(join(empty_graph(1), empty_graph(3))) == canonical_code(star_graph(3)));
    CHECK_THROWS_AS(join(empty_graph(40), empty_graph(30)), GraphError);
  }

  TEST_CASE("disjoint union")
  {
    CHECK(disjoint_union(empty_graph(1), empty_graph(1)) == empty_graph(2));
    CHECK(independence_number(disjoint_union(path_graph(2), path_graph(2))) == 2);
    auto g = disjoint_union(cycle_graph(5), empty_graph(1));
    CHECK(g.order() == 6);
    CHECK(independence_number(g) == 3);
  }

  TEST_CASE("corona")
  {
    auto g = corona(complete_graph(3), empty_graph(2));
    CHECK(g.order() == 9);
    CHECK(g.edge_count() == 3 + 3 * 0 + 3 * 2);
    CHECK(canonical_code(corona(empty_graph(1), empty_graph(5))) == canonical_code(star_graph(5)));
    auto p4 = corona(path_graph(2), empty_graph(1));
    CHECK(canonical_code(p4) == canonical_code(path_graph(4)));
    CHECK(is_tree(corona(star_graph(6), empty_graph(4))));
  }

  TEST_CASE("lexicographic product")
  {
    auto g = lex_product(path_graph(3), complete_graph(2));
    CHECK(g.order() == 6);
    CHECK(g.edge_count() == 11);
    auto h = cycle_graph(5);
    CHECK(lex_product(h, empty_graph(1)) == h);
    CHECK(lex_product(empty_graph(1), h) == h);
  }

  TEST_CASE("graph star")
  {
    CHECK(graph_star(empty_graph(1)) == complete_graph(2));
    CHECK(canonical_code(graph_star(complete_graph(2))) == canonical_code(path_graph(4)));
    auto t = graph_star(empty_graph(1), 2);
    CHECK(t.order() == 4);
    CHECK(is_tree(t));
    CHECK_THROWS_AS(graph_star(empty_graph(5), 4), GraphError);
  }

  TEST_CASE("independence number, claws and trees")
  {
    CHECK(independence_number(complete_graph(5)) == 1);
    CHECK(independence_number(empty_graph(7)) == 7);
    CHECK(independence_number(cycle_graph(5)) == 2);
    CHECK(independence_number(empty_graph(64)) == 64);
    CHECK(independence_number(complete_graph(64)) == 1);
    CHECK_FALSE(is_claw_free(star_graph(3)));
    CHECK(is_tree(star_graph(3)));
    CHECK(is_claw_free(cycle_graph(6)));
    CHECK_FALSE(is_tree(cycle_graph(6)));
    CHECK_FALSE(is_tree(disjoint_union(path_graph(2), path_graph(2))));
    CHECK(is_tree(empty_graph(1)));
  }

  TEST_CASE("claw detection agrees with a four-subset search")
  {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 300; ++t) {
      auto g = oracle::random_graph(rng, 7, 0.45);
      bool claw = false;
      for (int c = 0; c < 7; ++c)
        for (int a = 0; a < 7; ++a)
          for (int b = a + 1; b < 7; ++b)
            for (int d = b + 1; d < 7; ++d)
              if (c != a && c != b && c != d && g.adjacent(c, a) && g.adjacent(c, b) && g.adjacent(c, d) &&
                  !g.adjacent(a, b) && !g.adjacent(a, d) && !g.adjacent(b, d))
                claw = true;
      CHECK(is_claw_free(g) == !claw);
    }
  }

  TEST_CASE("independence number agrees with subset enumeration")
  {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 300; ++t) {
      const int n = 1 + static_cast<int>(rng() % 12);
      auto g = oracle::random_graph(rng, n, 0.1 + 0.8 * (t % 10) / 10.0);
      CHECK(independence_number(g) == oracle::subset_alpha(g));
    }
  }

  TEST_CASE("operation invariants on random pairs")
  {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 200; ++t) {
      auto g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 7), 0.4);
      auto h = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 7), 0.4);
      const int ag = independence_number(g), ah = independence_number(h);
      CHECK(independence_number(disjoint_union(g, h)) == ag + ah);
      CHECK(independence_number(join(g, h)) == std::max(ag, ah));
      CHECK(independence_number(join(g, complete_graph(1 + static_cast<int>(rng() % 5)))) == ag);
      auto c = corona(g, h);
      CHECK(c.order() == g.order() * (1 + h.order()));
      CHECK(c.edge_count() == g.edge_count() + g.order() * h.edge_count() + g.order() * h.order());
      if (g.order() <= 8)
        CHECK(graph_star(g, 3) == graph_star(graph_star(g, 2), 1));
    }
  }

  TEST_CASE("graph6 round trip")
  {
    CHECK(to_graph6(complete_graph(2)) == "A_");
    CHECK(from_graph6("A_") == complete_graph(2));
    CHECK(from_graph6(">>graph6<<A_\n") == complete_graph(2));
    CHECK(to_graph6(empty_graph(1)) == "@");
    CHECK(to_graph6(cycle_graph(5)) == "Dhc");
    std::mt19937_64 rng(31);
    for (int n : { 1, 2, 5, 13, 40, 62, 63, 64 }) {
      auto g = oracle::random_graph(rng, n, 0.3);
      CHECK(from_graph6(to_graph6(g)) == g);
    }
    CHECK(to_graph6(empty_graph(63)).substr(0, 4) == "~??~");
    CHECK_THROWS_AS(from_graph6("A"), GraphError);
    CHECK_THROWS_AS(from_graph6("A_x"), GraphError);
    CHECK_THROWS_AS(from_graph6("?"), GraphError);
    CHECK_THROWS_AS(from_graph6("A "), GraphError);
  }

  TEST_CASE("edge list")
  {
    CHECK(from_edge_list("3\n0 1\n1 2\n") == path_graph(3));
    CHECK(from_edge_list("4\n") == empty_graph(4));
    CHECK_THROWS_AS(from_edge_list("3\n0 1 2\n"), GraphError);
    CHECK_THROWS_AS(from_edge_list("3\n0 5\n"), GraphError);
    CHECK_THROWS_AS(from_edge_list(""), GraphError);
  }
}

TEST_SUITE("canonical")
{
  TEST_CASE("small cases")
  {
    auto p3 = path_graph(3);
    CHECK(canonical_code(p3) == canonical_code(p3.relabelled({ 1, 0, 2 })));
    CHECK(canonical_code(p3) != canonical_code(complete_graph(3)));
    CHECK(canonical_code(empty_graph(2)) != canonical_code(complete_graph(2)));
    CHECK_THROWS_AS(canonical_code(empty_graph(17)), GraphError);
    auto g = cycle_graph(6);
    CHECK(canonical_graph(g) == canonical_graph(g.relabelled({ 3, 1, 4, 0, 5, 2 })));
  }

  TEST_CASE("labelled graphs collapse to the known class counts")
  {
    const int expected[] = { 1, 2, 4, 11, 34, 156 };
    for (int n = 1; n <= 6; ++n) {
      std::set<std::string> codes;
      const int m = n * (n - 1) / 2;
      for (long mask = 0; mask < (1L << m); ++mask) {
        std::vector<std::pair<int, int>> e;
        int b = 0;
        for (int j = 1; j < n; ++j)
          for (int i = 0; i < j; ++i, ++b)
            if ((mask >> b) & 1)
              e.emplace_back(i, j);
        codes.insert(canonical_code(Graph::from_edges(n, e)));
      }
      CHECK(static_cast<int>(codes.size()) == expected[n - 1]);
    }
  }

  TEST_CASE("code is invariant under random relabelling")
  {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 60; ++t) {
      const int n = 2 + static_cast<int>(rng() % 15);
      auto g = oracle::random_graph(rng, n, 0.15 + 0.7 * (t % 5) / 5.0);
      if (t % 6 == 0)
        g = corona(oracle::random_graph(rng, 3, 0.5), empty_graph(std::max(1, n / 4)));
      const auto code = canonical_code(g);
      for (int r = 0; r < 100; ++r) {
        auto h = g.relabelled(oracle::random_permutation(rng, g.order()));
        REQUIRE(canonical_code(h) == code);
      }
      auto form = canonical_form(g);
      CHECK(canonical_code(g.relabelled(form.labelling)) == code);
    }
  }

  TEST_CASE("symmetric graphs")
  {
    std::mt19937_64 rng(43);
    for (const auto& g : { cycle_graph(16), complete_graph(16), empty_graph(16),
                           complete_multipartite({ 4, 4, 4, 4 }), lex_product(cycle_graph(4), empty_graph(4)),
                           disjoint_union(cycle_graph(8), cycle_graph(8)), graph_star(cycle_graph(8)) }) {
      const auto code = canonical_code(g);
      for (int r = 0; r < 100; ++r)
        REQUIRE(canonical_code(g.relabelled(oracle::random_permutation(rng, g.order()))) == code);
    }
    CHECK(canonical_code(cycle_graph(16)) != canonical_code(disjoint_union(cycle_graph(8), cycle_graph(8))));
  }
}
