#include "residue.hpp"

#include <cassert>
#include <string>

#include "errors.hpp"
#include "numeric.hpp"

namespace paley {

int chi(const FiniteField& f, FieldElement x) {
  if (f.q() % 2 == 0) throw InvalidArgument("chi requires a field of odd order");
  if (x == f.zero()) return 0;
  int by_membership = f.is_square(x) ? 1 : -1;
  // Euler's criterion: x^((q-1)/2) is 1 for squares and -1 otherwise.
  FieldElement y = f.pow(x, (f.q() - 1) / 2);
  int by_power = (y == f.one()) ? 1 : -1;
  assert(by_membership == by_power);
  return by_membership == by_power ? by_membership
                                   : throw InvalidArgument("chi routes disagree (corrupt field)");
}

ResidueSet residue_set(const FiniteField& f, bool with_zero) {
  if (f.q() % 2 == 0) throw InvalidArgument("residue set requires a field of odd order");
  ResidueSet out;
  out.with_zero = with_zero;
  if (with_zero) out.members.push_back(f.zero());
  for (int64_t enc = 1; enc < f.q(); ++enc) {
    FieldElement x(enc);
    if (f.is_square(x)) out.members.push_back(x);
  }
  return out;
}

int64_t char_pair_sum(const FiniteField& f, FieldElement u, FieldElement v) {
  if (f.q() % 2 == 0) throw InvalidArgument("char_pair_sum requires odd q");
  int64_t sum = 0;
  for (int64_t enc = 0; enc < f.q(); ++enc) {
    FieldElement w(enc);
    sum += chi(f, f.sub(w, u)) * chi(f, f.sub(w, v));
  }
  return sum;
}

int64_t jacobsthal_phi(const FiniteField& f, FieldElement e_arg) {
  if (f.e() != 1) throw InvalidArgument("jacobsthal phi is defined over prime fields only");
  if (f.p() == 2) throw InvalidArgument("jacobsthal phi requires odd p");
  int64_t sum = 0;
  for (int64_t enc = 0; enc < f.q(); ++enc) {
    FieldElement m(enc);
    sum += chi(f, m) * chi(f, f.add(f.mul(m, m), e_arg));
  }
  return sum;
}

int64_t jacobsthal_identity_sum(const FiniteField& f, FieldElement c) {
  if (f.q() % 2 == 0) throw InvalidArgument("jacobsthal identity sum requires odd q");
  int64_t sum = 0;
  for (int64_t enc = 0; enc < f.q(); ++enc) {
    FieldElement x(enc);
    sum += chi(f, f.add(f.mul(x, x), c));
  }
  return sum;
}

std::pair<int64_t, int64_t> two_squares_jacobsthal(int64_t p) {
  if (!is_prime(p) || p % 4 != 1) {
    throw InvalidArgument("two-squares decomposition needs a prime p = 1 mod 4");
  }
  FiniteField f(p, 1);
  // 1 is always the smallest residue; scan upward for the smallest non-residue.
  FieldElement r = f.one();
  FieldElement n = f.zero();
  for (int64_t enc = 2; enc < p; ++enc) {
    if (!f.is_square(FieldElement(enc))) {
      n = FieldElement(enc);
      break;
    }
  }
  return {jacobsthal_phi(f, r) / 2, jacobsthal_phi(f, n) / 2};
}

std::pair<int64_t, int64_t> two_squares_gauss(int64_t p) {
  if (!is_prime(p) || p % 4 != 1) {
    throw InvalidArgument("two-squares decomposition needs a prime p = 1 mod 4");
  }
  int64_t k = (p - 1) / 4;
  // C(2k, k) and (2k)! by running products mod p; all factors below p are invertible.
  int64_t binom = 1;
  for (int64_t i = 1; i <= k; ++i) {
    binom = binom * ((k + i) % p) % p;
    binom = binom * pow_mod(i, p - 2, p) % p;
  }
  int64_t half = pow_mod(2, p - 2, p);
  int64_t a = centered_residue(binom * half % p, p);
  int64_t fact = 1;
  for (int64_t i = 2; i <= 2 * k; ++i) fact = fact * (i % p) % p;
  int64_t b = centered_residue(fact % p * ((a % p + p) % p) % p, p);
  return {a, b};
}

std::pair<int64_t, int64_t> canonical_two_squares(std::pair<int64_t, int64_t> ab) {
  int64_t a = ab.first < 0 ? -ab.first : ab.first;
  int64_t b = ab.second < 0 ? -ab.second : ab.second;
  if (a > b) std::swap(a, b);
  return {a, b};
}

int64_t perron_count(const FiniteField& f, FieldElement a, bool with_zero) {
  if (f.q() % 2 == 0) throw InvalidArgument("perron count requires odd q");
  if (a == f.zero()) throw InvalidArgument("perron count requires a != 0");
  std::vector<uint8_t> in_set(static_cast<size_t>(f.q()), 0);
  for (FieldElement x : residue_set(f, with_zero).members) {
    in_set[static_cast<size_t>(x.encoding())] = 1;
  }
  int64_t count = 0;
  for (int64_t enc = 0; enc < f.q(); ++enc) {
    if (!in_set[static_cast<size_t>(enc)]) continue;
    FieldElement shifted = f.add(FieldElement(enc), a);
    if (in_set[static_cast<size_t>(shifted.encoding())]) ++count;
  }
  return count;
}

int64_t power_sum(int64_t p, int64_t k) {
  if (!is_prime(p)) throw InvalidArgument("power_sum requires prime p");
  if (k < 1) throw InvalidArgument("power_sum requires k >= 1");
  int64_t sum = 0;
  for (int64_t w = 0; w < p; ++w) sum = (sum + pow_mod(w, k, p)) % p;
  return sum;
}

}  // namespace paley
