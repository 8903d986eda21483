#include "groups.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "errors.hpp"
#include "family.hpp"
#include "numeric.hpp"
#include "residue.hpp"

namespace paley {
namespace {

Permutation field_map(const FiniteField& f, auto&& fn) {
  std::vector<int> images(static_cast<size_t>(f.q()));
  for (int64_t enc = 0; enc < f.q(); ++enc) {
    images[static_cast<size_t>(enc)] = static_cast<int>(fn(FieldElement(enc)).encoding());
  }
  return Permutation(std::move(images));
}

bool preserves_adjacency(const Graph& g, const Permutation& perm) {
  int n = g.vertex_count();
  if (perm.degree() != n) return false;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      if (g.has_edge(u, v) != g.has_edge(perm.apply(u), perm.apply(v))) return false;
    }
  }
  return true;
}

PermutationGroup group_from_automorphism_maps(int degree, std::vector<std::vector<int>> maps) {
  std::vector<Permutation> elements;
  elements.reserve(maps.size());
  for (auto& images : maps) elements.emplace_back(std::move(images));
  return PermutationGroup::from_elements(degree, std::move(elements));
}

}  // namespace

PermutationGroup a_delta_l1(const FiniteField& f) {
  if (f.q() % 2 == 0) throw InvalidArgument("semilinear square group needs odd q");
  std::vector<Permutation> gens;
  gens.push_back(field_map(f, [&](FieldElement v) { return f.add(v, f.one()); }));
  if (f.e() > 1) {
    gens.push_back(field_map(f, [&](FieldElement v) { return f.add(v, f.omega()); }));
  }
  // omega^2 generates the subgroup of non-zero squares
  FieldElement square_gen = f.mul(f.omega(), f.omega());
  gens.push_back(field_map(f, [&](FieldElement v) { return f.mul(square_gen, v); }));
  if (f.e() > 1) {
    gens.push_back(field_map(f, [&](FieldElement v) { return f.frobenius(v, 1); }));
  }
  return PermutationGroup::from_generators(static_cast<int>(f.q()), std::move(gens));
}

PermutationGroup graph_automorphisms(const Graph& g, int vertex_limit) {
  auto maps = all_automorphisms(g, {}, vertex_limit);
  PermutationGroup group = group_from_automorphism_maps(g.vertex_count(), std::move(maps));
  for (const Permutation& gen : group.generators()) {
    if (!preserves_adjacency(g, gen)) {
      throw InvalidArgument("automorphism search produced a non-automorphism");
    }
  }
  return group;
}

PermutationGroup tournament_automorphisms(const Graph& g, int vertex_limit) {
  if (!g.is_tournament()) throw InvalidArgument("input is not a tournament");
  return graph_automorphisms(g, vertex_limit);
}

PermutationGroup design_automorphisms(const IncidenceDesign& d) {
  if (d.points() > 23) {
    throw ResourceLimit("design automorphism search limited to 23 points");
  }
  // Point permutations permuting the block list = colour-preserving
  // automorphisms of the point/block incidence graph. Distinct blocks have
  // distinct neighbourhoods, so restriction to points is faithful.
  int points = d.points();
  int blocks = static_cast<int>(d.blocks().size());
  Graph incidence(points + blocks, false);
  for (int b = 0; b < blocks; ++b) {
    for (int p : d.blocks()[static_cast<size_t>(b)]) incidence.add_edge(p, points + b);
  }
  std::vector<int> colors(static_cast<size_t>(points + blocks), 0);
  for (int b = 0; b < blocks; ++b) colors[static_cast<size_t>(points + b)] = 1;
  auto maps = all_automorphisms(incidence, colors, points + blocks);
  std::vector<Permutation> restricted;
  restricted.reserve(maps.size());
  for (const auto& images : maps) {
    restricted.emplace_back(std::vector<int>(images.begin(), images.begin() + points));
  }
  std::sort(restricted.begin(), restricted.end());
  if (std::adjacent_find(restricted.begin(), restricted.end()) != restricted.end()) {
    throw InvalidArgument("design automorphisms do not act faithfully on points");
  }
  return PermutationGroup::from_elements(points, std::move(restricted));
}

bool is_arc_transitive(const Graph& g, const PermutationGroup& group) {
  if (group.degree() != g.vertex_count()) throw InvalidArgument("group degree mismatch");
  for (const Permutation& gen : group.generators()) {
    if (!preserves_adjacency(g, gen)) {
      throw InvalidArgument("group contains a non-automorphism of the graph");
    }
  }
  int n = g.vertex_count();
  std::vector<std::pair<int, int>> arcs;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && g.has_edge(u, v)) arcs.push_back({u, v});
    }
  }
  if (arcs.empty()) return false;
  auto orbit = group.pair_orbit(arcs.front().first, arcs.front().second);
  return orbit.size() == arcs.size();
}

McconnelGroupReport mcconnel_group(const FiniteField& f, int64_t d) {
  int64_t q = f.q();
  if (d <= 1 || d >= q - 1 || (q - 1) % d != 0) {
    throw InvalidArgument("d must be a proper divisor of q - 1 with 1 < d < q - 1");
  }
  int64_t m = (q - 1) / d;
  std::vector<Permutation> gens;
  // translations by a basis: 1, omega, ..., omega^(e-1)
  FieldElement basis = f.one();
  for (int i = 0; i < f.e(); ++i) {
    gens.push_back(field_map(f, [&](FieldElement v) { return f.add(v, basis); }));
    basis = f.mul(basis, f.omega());
  }
  // multiplications by the subgroup D of order m, generated by omega^d
  FieldElement d_gen = f.pow(f.omega(), d);
  gens.push_back(field_map(f, [&](FieldElement v) { return f.mul(d_gen, v); }));
  // admissible Frobenius powers
  uint64_t admissible = 0;
  for (int j = 0; j < f.e(); ++j) {
    int64_t pj = 1;
    for (int i = 0; i < j; ++i) pj *= f.p();
    if ((pj - 1) % d == 0) {
      ++admissible;
      if (j > 0) {
        gens.push_back(field_map(f, [&](FieldElement v) { return f.frobenius(v, j); }));
      }
    }
  }
  McconnelGroupReport report{PermutationGroup::trivial(static_cast<int>(q))};
  report.group = PermutationGroup::from_generators(static_cast<int>(q), std::move(gens));
  report.closure_order = report.group.order();
  uint64_t h = static_cast<uint64_t>(std::gcd(m, static_cast<int64_t>(f.e())));
  report.mqh_formula = static_cast<uint64_t>(m) * static_cast<uint64_t>(q) * h;
  report.admissible_j = admissible;
  report.frobenius_formula = static_cast<uint64_t>(m) * static_cast<uint64_t>(q) * admissible;
  return report;
}

Theorem41Report verify_theorem_4_1(int64_t q) {
  auto pe = prime_power_decompose(q);
  if (!pe || q % 4 != 1) throw InvalidArgument("theorem needs a prime power q = 1 mod 4");
  if (q > 49) throw ResourceLimit("theorem verification bounded at q <= 49");
  FiniteField f(pe->first, pe->second);
  Graph graph = paley_graph(f);
  PermutationGroup aut = graph_automorphisms(graph);
  PermutationGroup adl = a_delta_l1(f);
  Theorem41Report report;
  report.aut_order = aut.order();
  report.adl_order = adl.order();
  report.expected_order =
      static_cast<uint64_t>(q) * static_cast<uint64_t>(q - 1) * static_cast<uint64_t>(f.e()) / 2;
  report.orders_equal = report.aut_order == report.adl_order;
  report.aut_generators_in_adl = true;
  for (const Permutation& gen : aut.generators()) {
    if (!adl.contains(gen)) report.aut_generators_in_adl = false;
  }
  report.adl_generators_in_aut = true;
  for (const Permutation& gen : adl.generators()) {
    if (!aut.contains(gen)) report.adl_generators_in_aut = false;
  }
  return report;
}

}  // namespace paley
