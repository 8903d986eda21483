#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "core/errors.hpp"
#include "core/family.hpp"
#include "core/graph.hpp"
#include "core/iso.hpp"
#include "core/residue.hpp"

using namespace paley;

TEST_CASE("paley graph preconditions and valency") {
  Graph p9 = paley_graph(FiniteField(3, 2));
  CHECK(p9.vertex_count() == 9);
  for (int v = 0; v < 9; ++v) CHECK(p9.out_degree(v) == 4);
  Graph p13 = paley_graph(FiniteField(13, 1));
  for (int v = 0; v < 13; ++v) CHECK(p13.out_degree(v) == 6);
  CHECK(p13.is_connected());
  CHECK_THROWS_AS(paley_graph(FiniteField(7, 1)), InvalidArgument);
}

TEST_CASE("paley tournament preconditions and out-degrees") {
  Graph t7 = paley_tournament(FiniteField(7, 1));
  CHECK(t7.is_tournament());
  for (int v = 0; v < 7; ++v) CHECK(t7.out_degree(v) == 3);
  Graph t11 = paley_tournament(FiniteField(11, 1));
  for (int v = 0; v < 11; ++v) CHECK(t11.out_degree(v) == 5);
  CHECK_THROWS_AS(paley_tournament(FiniteField(13, 1)), InvalidArgument);
}

TEST_CASE("generalized paley recovers the paley graph") {
  FiniteField f(13, 1);
  GeneralizedPaley gp = generalized_paley(f, 6);
  CHECK(gp.info.d == 2);
  CHECK(gp.graph.to_adjacency_text() == paley_graph(f).to_adjacency_text());
  CHECK(gp.info.large_condition);
}

TEST_CASE("generalized paley validation") {
  FiniteField f13(13, 1);
  CHECK_THROWS_AS(generalized_paley(f13, 5), InvalidArgument);   // 5 does not divide 12
  CHECK_THROWS_AS(generalized_paley(f13, 3), InvalidArgument);   // odd m with odd q
  FiniteField f9(3, 2);
  CHECK_THROWS_AS(generalized_paley(f9, 2), NotConnected);  // D = {1,-1} spans one line only
}

TEST_CASE("generalized paley with full connection set is complete") {
  FiniteField f(13, 1);
  GeneralizedPaley gp = generalized_paley(f, 12);
  CHECK(gp.graph.is_complete());
}

TEST_CASE("hamming example on nine vertices") {
  FiniteField f9(3, 2);
  GeneralizedPaley gp = generalized_paley(f9, 4);
  CHECK(gp.info.d == 2);
  CHECK(gp.info.connection.size() == 4);
  // rook's graph on a 3x3 grid: same parameters as P(9)
  SrgResult r = srg_params(gp.graph);
  REQUIRE(r.is_srg);
  CHECK(r.params == SrgParams{9, 4, 1, 2});
}

TEST_CASE("peisert graph on nine vertices") {
  FiniteField f9(3, 2);
  Graph g = peisert_graph(f9);
  CHECK_FALSE(g.directed());
  for (int v = 0; v < 9; ++v) CHECK(g.out_degree(v) == 4);
  SrgResult r = srg_params(g);
  REQUIRE(r.is_srg);
  CHECK(r.params == SrgParams{9, 4, 1, 2});
}

TEST_CASE("peisert preconditions") {
  CHECK_THROWS_AS(peisert_graph(FiniteField(5, 2)), InvalidArgument);  // p = 1 mod 4
  CHECK_THROWS_AS(peisert_graph(FiniteField(7, 1)), InvalidArgument);  // odd power
}

TEST_CASE("peisert graph is independent of the primitive root choice") {
  FiniteField f9(3, 2);
  Graph reference = peisert_graph(f9);
  // every generator of the multiplicative group gives an isomorphic graph
  for (int64_t enc = 1; enc < 9; ++enc) {
    FieldElement w(enc);
    if (f9.multiplicative_order(w) != 8) continue;
    std::vector<FieldElement> connection;
    FieldElement power = f9.one();
    for (int j = 0; j < 8; ++j) {
      if (j % 4 == 0 || j % 4 == 1) connection.push_back(power);
      power = f9.mul(power, w);
    }
    Graph candidate = Graph::cayley(f9, connection);
    CHECK(find_isomorphism(reference, candidate).has_value());
  }
}

TEST_CASE("peisert graph of order 49") {
  FiniteField f49(7, 2);
  Graph g = peisert_graph(f49);
  SrgResult r = srg_params(g);
  REQUIRE(r.is_srg);
  CHECK(r.params == SrgParams{49, 24, 11, 12});
  CHECK(self_complementarity_witness(g).has_value());
}
