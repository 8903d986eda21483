#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "design.hpp"
#include "field.hpp"

namespace paley {

// Square matrix with entries in {-1, 0, +1}.
class SignMatrix {
 public:
  explicit SignMatrix(int order, int fill = 0);

  int order() const { return order_; }
  int entry(int i, int j) const { return entries_[static_cast<size_t>(i) * order_ + j]; }
  void set(int i, int j, int value);

  bool has_zero_entry() const;
  bool is_symmetric() const;
  SignMatrix negated_row(int i) const;
  SignMatrix negated_column(int j) const;

  // "order m" header, then rows of +/- characters. Zero entries are not
  // representable and raise an error.
  std::string to_text() const;
  static SignMatrix parse(const std::string& text);

  friend bool operator==(const SignMatrix&, const SignMatrix&) = default;

 private:
  int order_;
  std::vector<int8_t> entries_;
};

// Jacobsthal matrix: (u, v) entry chi(v - u). Requires odd q.
SignMatrix jacobsthal_matrix(const FiniteField& f);

struct HadamardCheck {
  bool ok = false;
  int row_i = -1, row_j = -1;  // first failing row pair when not ok
};

// Exact integer check of H H^T = mI; throws on zero entries.
HadamardCheck is_hadamard(const SignMatrix& h);

// Doubling construction: order 2^k, built recursively from (1).
SignMatrix sylvester(int k);

// Kronecker product of two Hadamard matrices.
SignMatrix kronecker(const SignMatrix& a, const SignMatrix& b);

// Type I: order q+1 for a prime power q = 3 mod 4; rows and columns are
// indexed infinity, 0, ..., q-1.
SignMatrix paley_type_i(int64_t q);

// Type II: symmetric, order 2(q+1), for a prime power q = 1 mod 4.
SignMatrix paley_type_ii(int64_t q);

// Partition of all 2^m sign vectors of length m = 2^k into 2^m/m row sets,
// each forming a Hadamard matrix: the coset decomposition of {+-1}^m by
// the row group of sylvester(k). k in {2..4}; k = 5 exceeds the memory
// budget and is rejected.
std::vector<SignMatrix> paley_partition(int k);

// First row and column made all +1 (rows negated first, then columns).
SignMatrix normalize(const SignMatrix& h);
bool is_normalized(const SignMatrix& h);

// Normalised Hadamard matrix of order 4n <-> Hadamard design on 4n-1
// points: columns are points, rows are blocks, +1 means incident.
IncidenceDesign matrix_to_design(const SignMatrix& h);
SignMatrix design_to_matrix(const IncidenceDesign& d);

// Rows of a normalised Hadamard matrix with the first column removed:
// m vectors in {+-1}^(m-1) with all pairwise dot products -1.
std::vector<std::vector<int8_t>> simplex_vertices(const SignMatrix& h);

// Counts for the compound polytopes obtained from a design with
// automorphism group order N: d1 = (4n-1)!/N distinct designs and
// D = 2^(4n-3) d1 / n compound components.
struct CompoundCount {
  int64_t n = 0;
  uint64_t group_order = 0;
  int64_t d1 = 0;
  int64_t compounds = 0;
};
CompoundCount compound_counts(int64_t n, uint64_t group_order);

// Orders m <= limit reachable as 2^a, 2^a (q+1) with prime power
// q = 3 mod 4, or 2^a 2(q+1) with prime power q = 1 mod 4, plus the
// multiples of 4 that are not reached.
struct CoverageResult {
  std::vector<int64_t> achievable;
  std::vector<int64_t> exceptions;
};
CoverageResult paley_coverage(int64_t limit);

// Monomial matrix with non-zero entries +-1: row i has sign[i] in
// column image[i].
struct SignedPermutation {
  std::vector<int> images;
  std::vector<int8_t> signs;
};

// Whether P H Q^T = H for the monomial matrices P, Q.
bool is_hadamard_automorphism(const SignMatrix& h, const SignedPermutation& p,
                              const SignedPermutation& q);

}  // namespace paley
