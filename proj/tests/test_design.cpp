#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "core/design.hpp"
#include "core/errors.hpp"
#include "core/hadamard.hpp"

using namespace paley;

namespace {

void check_parameters(const IncidenceDesign& d) {
  int64_t n = d.n();
  CHECK(d.points() == 4 * n - 1);
  CHECK(static_cast<int64_t>(d.blocks().size()) == 4 * n - 1);
  for (const auto& block : d.blocks()) {
    CHECK(static_cast<int64_t>(block.size()) == 2 * n - 1);
  }
  for (size_t i = 0; i < d.blocks().size(); ++i) {
    for (size_t j = i + 1; j < d.blocks().size(); ++j) {
      std::vector<int> meet;
      std::set_intersection(d.blocks()[i].begin(), d.blocks()[i].end(), d.blocks()[j].begin(),
                            d.blocks()[j].end(), std::back_inserter(meet));
      CHECK(static_cast<int64_t>(meet.size()) == n - 1);
    }
  }
}

}  // namespace

TEST_CASE("residue designs") {
  for (int64_t q : {3, 7, 11, 19, 23}) {
    IncidenceDesign d = qr_design(q);
    CHECK(d.n() == (q + 1) / 4);
    check_parameters(d);
  }
  CHECK_THROWS_AS(qr_design(13), InvalidArgument);
  CHECK_THROWS_AS(qr_design(15), InvalidArgument);
}

TEST_CASE("projective geometry designs") {
  IncidenceDesign fano = pg_design(3);
  CHECK(fano.points() == 7);
  CHECK(fano.n() == 2);
  check_parameters(fano);
  check_parameters(pg_design(2));
  check_parameters(pg_design(4));
  CHECK(pg_design(4).points() == 15);
  CHECK_THROWS_AS(pg_design(1), InvalidArgument);
}

TEST_CASE("matrix to design") {
  IncidenceDesign from_sylvester = matrix_to_design(sylvester(3));
  CHECK(from_sylvester.points() == 7);
  check_parameters(from_sylvester);
  // the order-8 matrix design is the Fano plane: same parameters as pg_design(3)
  CHECK(from_sylvester.n() == pg_design(3).n());

  IncidenceDesign d11 = matrix_to_design(paley_type_i(11));
  CHECK(d11.points() == 11);
  CHECK(d11.n() == 3);
  check_parameters(d11);

  IncidenceDesign tiny = matrix_to_design(paley_type_i(3));
  CHECK(tiny.points() == 3);
  CHECK(tiny.n() == 1);

  CHECK_THROWS_AS(matrix_to_design(sylvester(1)), InvalidArgument);
}

TEST_CASE("matrix designs agree with translate designs") {
  for (int64_t q : {3, 7, 11, 19, 23}) {
    CHECK(matrix_to_design(paley_type_i(q)) == qr_design(q));
  }
}

TEST_CASE("design to matrix and round trips") {
  SignMatrix fano_matrix = design_to_matrix(pg_design(3));
  CHECK(fano_matrix.order() == 8);
  CHECK(is_hadamard(fano_matrix).ok);
  CHECK(is_hadamard(design_to_matrix(qr_design(7))).ok);
  for (int64_t q : {7, 11, 19}) {
    IncidenceDesign d = qr_design(q);
    CHECK(matrix_to_design(design_to_matrix(d)) == d);
  }
}

TEST_CASE("design validation") {
  CHECK_THROWS_AS(IncidenceDesign(6, {}), InvalidArgument);               // not 4n-1 points
  CHECK_THROWS_AS(IncidenceDesign(7, {{0, 1, 2}}), InvalidArgument);      // wrong block count
  std::vector<std::vector<int>> bad_blocks(7, std::vector<int>{0, 1, 2});
  CHECK_THROWS_AS(IncidenceDesign(7, bad_blocks), InvalidArgument);       // intersections wrong
}

TEST_CASE("design text round trip") {
  IncidenceDesign d = qr_design(7);
  IncidenceDesign back = IncidenceDesign::parse(d.to_text());
  CHECK(back == d);
  CHECK(d.to_text().starts_with("points 7 blocks 7\n"));
  CHECK_THROWS_AS(IncidenceDesign::parse("nope"), ParseError);
}
