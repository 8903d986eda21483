#include "numeric.hpp"

namespace paley {

bool is_prime(int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<int64_t> prime_factors(int64_t n) {
  std::vector<int64_t> out;
  for (int64_t d = 2; d * d <= n; d == 2 ? d = 3 : d += 2) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::optional<std::pair<int64_t, int>> prime_power_decompose(int64_t q) {
  if (q < 2) return std::nullopt;
  auto factors = prime_factors(q);
  if (factors.size() != 1) return std::nullopt;
  int64_t p = factors[0];
  int e = 0;
  while (q > 1) {
    q /= p;
    ++e;
  }
  return std::make_pair(p, e);
}

int64_t pow_mod(int64_t a, int64_t k, int64_t m) {
  a %= m;
  if (a < 0) a += m;
  int64_t r = 1 % m;
  while (k > 0) {
    if (k & 1) r = r * a % m;
    a = a * a % m;
    k >>= 1;
  }
  return r;
}

int64_t centered_residue(int64_t n, int64_t p) {
  int64_t r = n % p;
  if (r < 0) r += p;
  if (2 * r > p) r -= p;
  return r;
}

}  // namespace paley
