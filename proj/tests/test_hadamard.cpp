#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "core/errors.hpp"
#include "core/hadamard.hpp"
#include "core/numeric.hpp"
#include "core/residue.hpp"

using namespace paley;

TEST_CASE("jacobsthal matrix symmetry classes") {
  FiniteField f5(5, 1);
  SignMatrix q5 = jacobsthal_matrix(f5);
  CHECK(q5.is_symmetric());
  for (int i = 0; i < 5; ++i) CHECK(q5.entry(i, i) == 0);

  FiniteField f7(7, 1);
  SignMatrix q7 = jacobsthal_matrix(f7);
  CHECK_FALSE(q7.is_symmetric());
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) {
      if (i != j) CHECK(q7.entry(j, i) == -q7.entry(i, j));
    }
  }
}

TEST_CASE("jacobsthal matrix satisfies Q Q^T = qI - J") {
  for (int64_t q : {5, 7, 9, 11, 13, 25, 27, 49}) {
    auto pe = prime_power_decompose(q);
    FiniteField f(pe->first, pe->second);
    SignMatrix qm = jacobsthal_matrix(f);
    for (int i = 0; i < qm.order(); ++i) {
      int64_t row_sum = 0;
      for (int j = 0; j < qm.order(); ++j) row_sum += qm.entry(i, j);
      CHECK(row_sum == 0);
      for (int j = 0; j < qm.order(); ++j) {
        int64_t dot = 0;
        for (int w = 0; w < qm.order(); ++w) dot += qm.entry(i, w) * qm.entry(j, w);
        CHECK(dot == (i == j ? q - 1 : -1));
      }
    }
  }
}

TEST_CASE("sylvester doubling") {
  SignMatrix h0 = sylvester(0);
  CHECK(h0.order() == 1);
  CHECK(h0.entry(0, 0) == 1);
  SignMatrix h1 = sylvester(1);
  CHECK(h1.order() == 2);
  CHECK(h1.entry(0, 0) == 1);
  CHECK(h1.entry(0, 1) == 1);
  CHECK(h1.entry(1, 0) == 1);
  CHECK(h1.entry(1, 1) == -1);
  for (int k = 0; k <= 10; ++k) CHECK(is_hadamard(sylvester(k)).ok);
  CHECK(sylvester(5).order() == 32);
}

TEST_CASE("is_hadamard rejects and reports") {
  SignMatrix ones(2, 1);
  HadamardCheck check = is_hadamard(ones);
  CHECK_FALSE(check.ok);
  CHECK(check.row_i == 0);
  CHECK(check.row_j == 1);
  SignMatrix with_zero(2, 0);
  CHECK_THROWS_AS(is_hadamard(with_zero), InvalidArgument);
}

TEST_CASE("paley type I") {
  for (int64_t q : {3, 7, 11, 19, 23, 27, 31, 43, 47, 59, 67, 71, 79, 83, 103}) {
    SignMatrix h = paley_type_i(q);
    CHECK(h.order() == q + 1);
    CHECK(is_hadamard(h).ok);
  }
  CHECK_THROWS_AS(paley_type_i(13), InvalidArgument);
  CHECK_THROWS_AS(paley_type_i(15), InvalidArgument);
}

TEST_CASE("paley type II") {
  for (int64_t q : {5, 9, 13, 17, 25, 29, 37, 41, 49, 53, 61, 73, 81, 89, 97, 101}) {
    SignMatrix h = paley_type_ii(q);
    CHECK(h.order() == 2 * (q + 1));
    CHECK(is_hadamard(h).ok);
    CHECK(h.is_symmetric());
  }
  CHECK_THROWS_AS(paley_type_ii(7), InvalidArgument);
}

TEST_CASE("kronecker products") {
  SignMatrix h4 = kronecker(sylvester(1), sylvester(1));
  CHECK(h4.order() == 4);
  CHECK(is_hadamard(h4).ok);
  SignMatrix h8 = kronecker(sylvester(1), paley_type_i(3));
  CHECK(h8.order() == 8);
  CHECK(is_hadamard(h8).ok);
  CHECK(kronecker(paley_type_i(7), sylvester(0)) == paley_type_i(7));
  SignMatrix ones(2, 1);
  CHECK_THROWS_AS(kronecker(ones, sylvester(1)), InvalidArgument);
}

TEST_CASE("row partition of all sign vectors") {
  for (int k : {2, 3}) {
    int64_t m = int64_t{1} << k;
    auto matrices = paley_partition(k);
    CHECK(static_cast<int64_t>(matrices.size()) == (int64_t{1} << m) / m);
    std::set<std::vector<int8_t>> rows;
    for (const SignMatrix& h : matrices) {
      CHECK(is_hadamard(h).ok);
      for (int i = 0; i < h.order(); ++i) {
        std::vector<int8_t> row;
        for (int j = 0; j < h.order(); ++j) row.push_back(static_cast<int8_t>(h.entry(i, j)));
        bool inserted = rows.insert(row).second;
        CHECK(inserted);  // pairwise disjoint row sets
      }
    }
    CHECK(static_cast<int64_t>(rows.size()) == int64_t{1} << m);  // union is everything
  }
  CHECK(paley_partition(4).size() == 4096);
  CHECK_THROWS_AS(paley_partition(5), ResourceLimit);
  CHECK_THROWS_AS(paley_partition(1), InvalidArgument);
}

TEST_CASE("normalization") {
  CHECK(normalize(sylvester(3)) == sylvester(3));
  SignMatrix negated = sylvester(2);
  for (int i = 0; i < 4; ++i) negated = negated.negated_row(i);
  SignMatrix renorm = normalize(negated);
  CHECK(is_normalized(renorm));
  CHECK(is_hadamard(renorm).ok);
  CHECK(is_normalized(paley_type_i(7)));
  CHECK(is_hadamard(normalize(paley_type_ii(5))).ok);
  SignMatrix ones(2, 1);
  CHECK_THROWS_AS(normalize(ones), InvalidArgument);
}

TEST_CASE("simplex vertices from normalized matrices") {
  for (const SignMatrix& h : {normalize(sylvester(2)), normalize(paley_type_i(7)),
                              normalize(paley_type_i(11)), normalize(sylvester(4))}) {
    auto vertices = simplex_vertices(h);
    CHECK(static_cast<int>(vertices.size()) == h.order());
    for (size_t a = 0; a < vertices.size(); ++a) {
      int64_t self_dot = 0;
      for (int8_t coordinate : vertices[a]) self_dot += coordinate * coordinate;
      CHECK(self_dot == h.order() - 1);
      for (size_t b = a + 1; b < vertices.size(); ++b) {
        int64_t dot = 0;
        for (size_t i = 0; i < vertices[a].size(); ++i) dot += vertices[a][i] * vertices[b][i];
        CHECK(dot == -1);
      }
    }
  }
  // a Hadamard matrix that is not normalized is rejected
  SignMatrix h = sylvester(2).negated_row(2);
  CHECK_THROWS_AS(simplex_vertices(h), InvalidArgument);
}

TEST_CASE("compound counts") {
  CompoundCount c = compound_counts(2, 168);
  CHECK(c.d1 == 30);
  CHECK(c.compounds == 480);
  CompoundCount c3 = compound_counts(3, 660);
  CHECK(c3.d1 == 60480);
  CHECK(c3.compounds == 10321920);
  CompoundCount trivial = compound_counts(2, 5040);
  CHECK(trivial.d1 == 1);
  CHECK(trivial.compounds == 16);
  CHECK_THROWS_AS(compound_counts(2, 167), InvalidArgument);
}

TEST_CASE("coverage of orders up to 200") {
  // 91 = 7*13, 115 = 5*23, 155 = 5*31, 171 = 9*19, 183 = 3*61 and 187 = 11*17
  // are not prime powers, and none of the six orders splits into smaller
  // constructible factors either (each is 4 times an odd non-prime-power
  // or has no usable even factorization).
  CoverageResult cov = paley_coverage(200);
  CHECK(cov.exceptions == std::vector<int64_t>{92, 116, 156, 172, 184, 188});
  CoverageResult small = paley_coverage(12);
  CHECK(small.achievable == std::vector<int64_t>{4, 8, 12});
  CHECK(small.exceptions.empty());
  CoverageResult tiny = paley_coverage(4);
  CHECK(tiny.achievable == std::vector<int64_t>{4});
  CHECK(tiny.exceptions.empty());
  CHECK_THROWS_AS(paley_coverage(3), InvalidArgument);
}

TEST_CASE("hadamard matrix automorphism pairs") {
  SignMatrix h = paley_type_i(7);
  int m = h.order();
  SignedPermutation id{std::vector<int>(m), std::vector<int8_t>(m, 1)};
  for (int i = 0; i < m; ++i) id.images[i] = i;
  SignedPermutation minus = id;
  for (int i = 0; i < m; ++i) minus.signs[i] = -1;
  CHECK(is_hadamard_automorphism(h, id, id));
  CHECK(is_hadamard_automorphism(h, minus, minus));
  CHECK_FALSE(is_hadamard_automorphism(h, minus, id));

  SignMatrix s1 = sylvester(1);
  SignedPermutation swap{{1, 0}, {1, 1}};
  SignedPermutation id2{{0, 1}, {1, 1}};
  CHECK_FALSE(is_hadamard_automorphism(s1, swap, id2));
  SignedPermutation bad{{0, 0}, {1, 1}};
  CHECK_THROWS_AS(is_hadamard_automorphism(s1, bad, id2), InvalidArgument);
}

TEST_CASE("matrix text round trip") {
  SignMatrix h = paley_type_i(7);
  SignMatrix back = SignMatrix::parse(h.to_text());
  CHECK(back == h);
  CHECK(h.to_text().starts_with("order 8\n"));
  CHECK_THROWS_AS(SignMatrix::parse("order 2\n++\n"), ParseError);
  CHECK_THROWS_AS(SignMatrix::parse("bogus"), ParseError);
  SignMatrix zero(2, 0);
  CHECK_THROWS_AS(zero.to_text(), InvalidArgument);
}
