#pragma once

#include <optional>
#include <vector>

#include "graph.hpp"

namespace paley {

// Desk-scale vertex bound for the isomorphism and automorphism searches;
// callers may override it explicitly.
inline constexpr int kIsoVertexLimit = 64;

// Backtracking over an equitable-partition refinement (degree, then
// iterated neighbour-class counts). Returns a vertex bijection g -> h
// mapping arcs to arcs, verified edge-by-edge before being returned.
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h,
                                                 int vertex_limit = kIsoVertexLimit);

// Isomorphism onto the complement, if one exists.
std::optional<std::vector<int>> self_complementarity_witness(const Graph& g,
                                                             int vertex_limit = kIsoVertexLimit);

// Every automorphism of g that respects the optional initial colouring
// (same-colour vertices may only map to same-colour vertices). Each map
// is verified before inclusion; the identity is always present.
std::vector<std::vector<int>> all_automorphisms(const Graph& g,
                                                const std::vector<int>& initial_colors = {},
                                                int vertex_limit = kIsoVertexLimit);

}  // namespace paley
