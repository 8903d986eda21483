#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace paley {

bool is_prime(int64_t n);

// Distinct prime factors of n, ascending.
std::vector<int64_t> prime_factors(int64_t n);

// If q = p^e for a prime p and e >= 1, returns (p, e).
std::optional<std::pair<int64_t, int>> prime_power_decompose(int64_t q);

// a^k mod m without overflow for m < 2^31.
int64_t pow_mod(int64_t a, int64_t k, int64_t m);

// Representative of n mod p in (-p/2, p/2); p odd so there is no tie.
int64_t centered_residue(int64_t n, int64_t p);

}  // namespace paley
