#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace paley {

// Element of a finite field, identified by its encoding in {0..q-1}.
// The encoding is the base-p value of the coefficient vector of the
// canonical polynomial representative, least-significant digit first,
// so encoding 0 is the additive and encoding 1 the multiplicative
// identity, and elements double as vertex indices.
class FieldElement {
 public:
  constexpr FieldElement() : enc_(0) {}
  constexpr explicit FieldElement(int64_t enc) : enc_(enc) {}
  constexpr int64_t encoding() const { return enc_; }
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;

 private:
  int64_t enc_;
};

// The finite field F_q, q = p^e. Immutable after construction; all
// operations are pure, so instances may be shared freely across threads.
//
// Construction is deterministic: the modulus is the lexicographically
// smallest monic irreducible of degree e over F_p (coefficients compared
// high-degree-first) and omega is the smallest-encoding primitive root.
class FiniteField {
 public:
  // Supported range: q <= 2^20.
  FiniteField(int64_t p, int e);

  int64_t p() const { return p_; }
  int e() const { return e_; }
  int64_t q() const { return q_; }

  // Monic modulus, coefficients constant-term first (size e+1, top = 1).
  // For e = 1 this is the polynomial x.
  const std::vector<int64_t>& modulus() const { return modulus_; }

  FieldElement omega() const { return omega_; }
  FieldElement zero() const { return FieldElement(0); }
  FieldElement one() const { return FieldElement(1); }

  FieldElement element(int64_t enc) const;  // bounds-checked
  std::vector<FieldElement> elements() const;

  FieldElement add(FieldElement x, FieldElement y) const;
  FieldElement sub(FieldElement x, FieldElement y) const;
  FieldElement neg(FieldElement x) const;
  FieldElement mul(FieldElement x, FieldElement y) const;
  FieldElement inv(FieldElement x) const;
  // k = 0 gives 1; negative k means the inverse power.
  FieldElement pow(FieldElement x, int64_t k) const;
  // x ^ (p^j), 0 <= j < e.
  FieldElement frobenius(FieldElement x, int j) const;

  // Order of x in the multiplicative group; x must be non-zero.
  int64_t multiplicative_order(FieldElement x) const;

  // True iff x is a non-zero square.
  bool is_square(FieldElement x) const;

  // "p=..\ne=..\nq=..\nmodulus=<high-to-low>\nomega=.." (one value per line).
  std::string info_text() const;

 private:
  int64_t p_;
  int e_;
  int64_t q_;
  std::vector<int64_t> modulus_;
  FieldElement omega_;
  std::vector<uint8_t> square_;  // for odd q: square_[enc] = 1 iff enc is a non-zero square

  std::vector<int64_t> decode(int64_t enc) const;
  int64_t encode(const std::vector<int64_t>& digits) const;
  void check(FieldElement x) const;
};

}  // namespace paley
