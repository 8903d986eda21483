#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "field.hpp"

namespace paley {

// Quadratic residue character: 0 for x = 0, +1 for non-zero squares,
// -1 otherwise. Evaluated both by square-set membership and by the
// x^((q-1)/2) criterion; the two routes must agree. Requires odd q.
int chi(const FiniteField& f, FieldElement x);

// The set S of non-zero squares, or S0 = S + {0} when with_zero is set.
// Members come back sorted by encoding.
struct ResidueSet {
  bool with_zero;
  std::vector<FieldElement> members;
};
ResidueSet residue_set(const FiniteField& f, bool with_zero);

// sum over w in F of chi(w-u) * chi(w-v), by direct summation.
int64_t char_pair_sum(const FiniteField& f, FieldElement u, FieldElement v);

// Jacobsthal's phi(e) = sum over m in F_p of chi(m) * chi(m^2 + e).
// Defined for prime fields of odd order only.
int64_t jacobsthal_phi(const FiniteField& f, FieldElement e_arg);

// sum over x in F of chi(x^2 + c), by direct summation.
int64_t jacobsthal_identity_sum(const FiniteField& f, FieldElement c);

// Constructive two-squares decompositions of a prime p = 1 mod 4.
// Values are returned exactly as the formulas produce them, signs included.
std::pair<int64_t, int64_t> two_squares_jacobsthal(int64_t p);
std::pair<int64_t, int64_t> two_squares_gauss(int64_t p);

// Display form: both entries positive, smaller first.
std::pair<int64_t, int64_t> canonical_two_squares(std::pair<int64_t, int64_t> ab);

// |(T + a) intersect T| where T = S0 when with_zero else S; a must be non-zero.
int64_t perron_count(const FiniteField& f, FieldElement a, bool with_zero);

// sum over w in F_p of w^k reduced mod p (k >= 1); always 0 or p-1.
int64_t power_sum(int64_t p, int64_t k);

}  // namespace paley
