#pragma once

#include <cstdint>
#include <vector>

#include "design.hpp"
#include "field.hpp"
#include "graph.hpp"
#include "iso.hpp"
#include "perm.hpp"

namespace paley {

// The group {v -> a v^gamma + b : a a non-zero square, b in F, gamma a
// field automorphism}, acting on element encodings; order q(q-1)e/2.
PermutationGroup a_delta_l1(const FiniteField& f);

// Full automorphism group of a graph or digraph, by refinement
// backtracking; every generator is verified to preserve adjacency.
PermutationGroup graph_automorphisms(const Graph& g, int vertex_limit = kIsoVertexLimit);

// Automorphism group of a tournament; the order of any such group is odd.
PermutationGroup tournament_automorphisms(const Graph& g, int vertex_limit = kIsoVertexLimit);

// Automorphism group of a design: the largest group of point permutations
// carrying blocks to blocks, found by backtracking on the point-block
// incidence structure.
PermutationGroup design_automorphisms(const IncidenceDesign& d);

// True iff the ordered-edge set of g is a single orbit of the group.
// Every group generator must be an automorphism of g.
bool is_arc_transitive(const Graph& g, const PermutationGroup& group);

// The group generated by translations, multiplications by the order-m
// subgroup D (m = (q-1)/d), and the Frobenius powers x -> x^(p^j) with
// d | p^j - 1, together with the two order formulas it is measured
// against. Disagreements are reported, not reconciled.
struct McconnelGroupReport {
  PermutationGroup group;
  uint64_t closure_order = 0;     // the enumerated truth
  uint64_t mqh_formula = 0;       // m * q * gcd(m, e)
  uint64_t admissible_j = 0;      // #{j in [0, e) : d | p^j - 1}
  uint64_t frobenius_formula = 0; // m * q * admissible_j
};
McconnelGroupReport mcconnel_group(const FiniteField& f, int64_t d);

struct Theorem41Report {
  uint64_t aut_order = 0;
  uint64_t adl_order = 0;
  uint64_t expected_order = 0;  // q(q-1)e/2
  bool orders_equal = false;
  bool aut_generators_in_adl = false;
  bool adl_generators_in_aut = false;
  bool verified() const { return orders_equal && aut_generators_in_adl && adl_generators_in_aut; }
};

// Computes Aut P(q) by search and the semilinear group by construction,
// and checks order equality plus two-sided generator containment.
Theorem41Report verify_theorem_4_1(int64_t q);

}  // namespace paley
