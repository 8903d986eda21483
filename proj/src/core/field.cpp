#include "field.hpp"

#include <algorithm>
#include <sstream>

#include "errors.hpp"
#include "numeric.hpp"

namespace paley {
namespace {

constexpr int64_t kMaxQ = int64_t{1} << 20;

// Dense polynomials over F_p, coefficients constant-term first, no
// trailing-zero guarantee; degree() treats the zero polynomial as -1.
using Poly = std::vector<int64_t>;

int degree(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
    if (f[i] != 0) return i;
  }
  return -1;
}

// Remainder of f modulo the monic polynomial g.
Poly poly_rem(Poly f, const Poly& g, int64_t p) {
  int dg = degree(g);
  for (int i = degree(f); i >= dg; --i) {
    int64_t c = f[i] % p;
    if (c == 0) continue;
    for (int j = 0; j <= dg; ++j) {
      f[i - dg + j] = ((f[i - dg + j] - c * g[j]) % p + p) % p;
    }
  }
  f.resize(dg);
  return f;
}

bool divides(const Poly& g, const Poly& f, int64_t p) {
  return degree(poly_rem(f, g, p)) < 0;
}

// Trial division by every monic polynomial of degree 1..deg(f)/2.
bool is_irreducible(const Poly& f, int64_t p) {
  int df = degree(f);
  if (df <= 1) return df == 1;
  for (int dd = 1; 2 * dd <= df; ++dd) {
    // enumerate monic divisor candidates of degree dd by their p^dd lower coefficients
    int64_t count = 1;
    for (int i = 0; i < dd; ++i) count *= p;
    for (int64_t code = 0; code < count; ++code) {
      Poly g(dd + 1, 0);
      int64_t c = code;
      for (int i = 0; i < dd; ++i) {
        g[i] = c % p;
        c /= p;
      }
      g[dd] = 1;
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

// Smallest monic irreducible of degree e, coefficients compared
// high-degree-first. Enumerating the below-leading coefficients as a
// base-p counter whose most significant digit is the x^(e-1) coefficient
// walks the candidates in exactly that order.
Poly smallest_irreducible(int64_t p, int e) {
  if (e == 1) return Poly{0, 1};  // x
  int64_t count = 1;
  for (int i = 0; i < e; ++i) count *= p;
  for (int64_t code = 0; code < count; ++code) {
    Poly f(e + 1, 0);
    int64_t c = code;
    for (int i = 0; i < e; ++i) {
      f[i] = c % p;
      c /= p;
    }
    f[e] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw InvalidArgument("no irreducible polynomial found (unreachable for prime p)");
}

}  // namespace

FiniteField::FiniteField(int64_t p, int e) : p_(p), e_(e) {
  if (!is_prime(p)) throw InvalidArgument("p must be prime, got " + std::to_string(p));
  if (e < 1) throw InvalidArgument("extension degree must be >= 1, got " + std::to_string(e));
  q_ = 1;
  for (int i = 0; i < e; ++i) {
    q_ *= p;
    if (q_ > kMaxQ) throw InvalidArgument("q = p^e exceeds the supported range 2^20");
  }
  modulus_ = smallest_irreducible(p, e);

  // Smallest-encoding primitive root, by order test against the prime
  // factorization of q-1.
  auto factors = prime_factors(q_ - 1);
  omega_ = FieldElement(0);
  for (int64_t enc = 1; enc < q_; ++enc) {
    FieldElement x(enc);
    bool primitive = true;
    for (int64_t f : factors) {
      if (pow(x, (q_ - 1) / f) == one()) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      omega_ = x;
      break;
    }
  }

  if (p_ != 2) {
    square_.assign(static_cast<size_t>(q_), 0);
    for (int64_t enc = 1; enc < q_; ++enc) {
      FieldElement s = mul(FieldElement(enc), FieldElement(enc));
      square_[static_cast<size_t>(s.encoding())] = 1;
    }
  }
}

std::vector<int64_t> FiniteField::decode(int64_t enc) const {
  std::vector<int64_t> digits(static_cast<size_t>(e_));
  for (int i = 0; i < e_; ++i) {
    digits[i] = enc % p_;
    enc /= p_;
  }
  return digits;
}

int64_t FiniteField::encode(const std::vector<int64_t>& digits) const {
  int64_t enc = 0;
  for (int i = e_ - 1; i >= 0; --i) enc = enc * p_ + digits[i];
  return enc;
}

void FiniteField::check(FieldElement x) const {
  if (x.encoding() < 0 || x.encoding() >= q_) {
    throw InvalidArgument("element encoding " + std::to_string(x.encoding()) +
                          " outside field of order " + std::to_string(q_));
  }
}

FieldElement FiniteField::element(int64_t enc) const {
  FieldElement x(enc);
  check(x);
  return x;
}

std::vector<FieldElement> FiniteField::elements() const {
  std::vector<FieldElement> out;
  out.reserve(static_cast<size_t>(q_));
  for (int64_t enc = 0; enc < q_; ++enc) out.emplace_back(enc);
  return out;
}

FieldElement FiniteField::add(FieldElement x, FieldElement y) const {
  check(x);
  check(y);
  if (e_ == 1) return FieldElement((x.encoding() + y.encoding()) % p_);
  auto a = decode(x.encoding());
  auto b = decode(y.encoding());
  for (int i = 0; i < e_; ++i) a[i] = (a[i] + b[i]) % p_;
  return FieldElement(encode(a));
}

FieldElement FiniteField::neg(FieldElement x) const {
  check(x);
  if (e_ == 1) return FieldElement((p_ - x.encoding()) % p_);
  auto a = decode(x.encoding());
  for (int i = 0; i < e_; ++i) a[i] = (p_ - a[i]) % p_;
  return FieldElement(encode(a));
}

FieldElement FiniteField::sub(FieldElement x, FieldElement y) const { return add(x, neg(y)); }

FieldElement FiniteField::mul(FieldElement x, FieldElement y) const {
  check(x);
  check(y);
  if (e_ == 1) return FieldElement(x.encoding() * y.encoding() % p_);
  auto a = decode(x.encoding());
  auto b = decode(y.encoding());
  std::vector<int64_t> prod(static_cast<size_t>(2 * e_ - 1), 0);
  for (int i = 0; i < e_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
  }
  // reduce by the monic modulus
  for (int i = 2 * e_ - 2; i >= e_; --i) {
    int64_t c = prod[i];
    if (c == 0) continue;
    for (int j = 0; j <= e_; ++j) {
      prod[i - e_ + j] = ((prod[i - e_ + j] - c * modulus_[j]) % p_ + p_) % p_;
    }
  }
  prod.resize(static_cast<size_t>(e_));
  return FieldElement(encode(prod));
}

FieldElement FiniteField::pow(FieldElement x, int64_t k) const {
  check(x);
  if (k < 0) return pow(inv(x), -k);
  FieldElement r = one();
  FieldElement base = x;
  while (k > 0) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

FieldElement FiniteField::inv(FieldElement x) const {
  check(x);
  if (x == zero()) throw DivisionByZero("inverse of zero");
  return pow(x, q_ - 2);
}

FieldElement FiniteField::frobenius(FieldElement x, int j) const {
  check(x);
  if (j < 0 || j >= e_) {
    throw InvalidArgument("frobenius power must satisfy 0 <= j < e, got " + std::to_string(j));
  }
  int64_t exp = 1;
  for (int i = 0; i < j; ++i) exp *= p_;
  return pow(x, exp);
}

int64_t FiniteField::multiplicative_order(FieldElement x) const {
  check(x);
  if (x == zero()) throw InvalidArgument("zero has no multiplicative order");
  int64_t order = q_ - 1;
  for (int64_t f : prime_factors(q_ - 1)) {
    while (order % f == 0 && pow(x, order / f) == one()) order /= f;
  }
  return order;
}

bool FiniteField::is_square(FieldElement x) const {
  check(x);
  if (p_ == 2) return x != zero();  // squaring is bijective in characteristic 2
  return square_[static_cast<size_t>(x.encoding())] != 0;
}

std::string FiniteField::info_text() const {
  std::ostringstream os;
  os << "p=" << p_ << "\n";
  os << "e=" << e_ << "\n";
  os << "q=" << q_ << "\n";
  os << "modulus=";
  for (int i = e_; i >= 0; --i) {
    os << modulus_[i];
    if (i > 0) os << ' ';
  }
  os << "\n";
  os << "omega=" << omega_.encoding() << "\n";
  return os.str();
}

}  // namespace paley
