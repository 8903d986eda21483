#pragma once

#include <cstdint>
#include <vector>

#include "field.hpp"
#include "graph.hpp"

namespace paley {

// Paley graph P(q): Cayley graph on the non-zero squares, q = 1 mod 4.
Graph paley_graph(const FiniteField& f);

// Paley tournament: arc u -> v iff v - u is a non-zero square, q = 3 mod 4.
Graph paley_tournament(const FiniteField& f);

// Connection data of a generalised Paley graph: D is the unique
// multiplicative subgroup of order m, d its index in F*.
struct GeneralizedPaleyInfo {
  int64_t m = 0;
  int64_t d = 0;
  std::vector<FieldElement> connection;  // the subgroup D, sorted
  // Whether the index d divides p - 1 ("large" connection set); recorded
  // as metadata only, never enforced.
  bool large_condition = false;
};

struct GeneralizedPaley {
  Graph graph;
  GeneralizedPaleyInfo info;
};

// Cayley graph with the order-m subgroup D as connection set. Requires
// m | q-1, m even when q is odd, and D additively generating F.
GeneralizedPaley generalized_paley(const FiniteField& f, int64_t m);

// Peisert graph: Cayley graph on {omega^j : j = 0 or 1 mod 4}, for
// q an even power of a prime p = 3 mod 4.
Graph peisert_graph(const FiniteField& f);

}  // namespace paley
