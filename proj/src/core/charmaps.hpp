#pragma once

#include <cstdint>
#include <vector>

#include "field.hpp"
#include "perm.hpp"

namespace paley {

// All permutations of F fixing 0 and 1 with chi(f(u) - f(v)) = chi(u - v)
// for every pair, by exhaustive backtracking over images in encoding
// order with character-constraint propagation. Odd q <= 49.
std::vector<Permutation> carlitz_permutations(const FiniteField& f);

// Same search for the power character phi(x) = x^((q-1)/d): all functions
// with f(0) = 0, f(1) = 1 and phi(f(u) - f(v)) = phi(u - v). The character
// values force injectivity, so results are permutations. q <= 27.
std::vector<Permutation> mcconnel_permutations(const FiniteField& f, int64_t d);

// The predicted answer set {x -> x^(p^j) : 0 <= j < e, d | p^j - 1}.
// With d = 2 and odd q this is the full Frobenius set {x -> x^(p^i)}.
std::vector<Permutation> predicted_frobenius_maps(const FiniteField& f, int64_t d);

// All f for which some permutation kappa of the order-d value group E
// satisfies phi(f(u) - f(v)) = kappa(phi(u - v)) for all u != v, plus the
// structural checks that the member set forms a group, contains the
// subgroup G(d) of translations/D-multiplications/admissible Frobenius
// maps, and normalises it. q <= 13.
struct LenstraReport {
  std::vector<Permutation> members;
  bool closed_under_composition = false;
  bool contains_gd = false;
  bool normalizes_gd = false;
  uint64_t gd_order = 0;
};
LenstraReport lenstra_normalizer_members(const FiniteField& f, int64_t d);

}  // namespace paley
