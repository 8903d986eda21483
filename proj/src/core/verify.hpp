#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "field.hpp"

namespace paley {

// One verified claim: a named check with its literature source, the
// expected value, the computed value, and the outcome.
struct ClaimResult {
  std::string module;
  std::string claim;
  std::string citation;
  std::string expected;
  std::string computed;
  bool pass = false;
};

// "PASS <module>/<claim> | <citation> | expected=<..> | computed=<..>"
std::string format_report(const std::vector<ClaimResult>& results);
int count_failures(const std::vector<ClaimResult>& results);

// Character-sum claims over a field, with the character function exposed
// so tests can inject a corrupted one.
using ChiFn = std::function<int(const FiniteField&, FieldElement)>;
std::vector<ClaimResult> verify_char_pair_claims(const std::vector<int64_t>& prime_powers,
                                                 const ChiFn& chi_fn = {});

std::vector<ClaimResult> verify_carlitz_claims(int64_t p, int e);
std::vector<ClaimResult> verify_theorem41_claims(int64_t q);
std::vector<ClaimResult> verify_mcconnel_claims(int64_t p, int e, int64_t d);
std::vector<ClaimResult> verify_table1_claims();

// The full claims-to-checks matrix; only_module filters by module name
// (field, residue, graph, family, hadamard, design, groups).
std::vector<ClaimResult> verify_all(const std::string& only_module = "");

}  // namespace paley
