#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace paley {

// Bijection on {0..n-1}.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);  // validates bijectivity
  static Permutation identity(int n);

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  // compose(a, b) applies b first: (a*b)(x) = a(b(x)).
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;
  bool is_identity() const;
  // Smallest point moved, or -1 for the identity.
  int smallest_moved() const;

  std::string cycle_notation() const;  // "(0 1 4)(2 3)", identity prints "()"

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& a);

// Deterministic Schreier-Sims stabilizer chain; the backend route for
// order and membership, cross-checked against closure enumeration.
class StabilizerChain {
 public:
  StabilizerChain(int degree, const std::vector<Permutation>& generators);
  uint64_t order() const;
  bool contains(const Permutation& g) const;
  int base_length() const { return static_cast<int>(levels_.size()); }

 private:
  struct Level {
    int base_point;
    std::vector<Permutation> gens;
    std::vector<int> orbit;                   // discovery order
    std::vector<Permutation> transversal_of;  // indexed like orbit_index_
    std::vector<int> orbit_index_of_point;    // -1 if outside orbit
  };
  int degree_;
  std::vector<Level> levels_;

  void recompute_orbit(Level& level);
  std::pair<Permutation, size_t> strip(Permutation g, size_t from) const;
  bool process_level(size_t i, size_t* restart);
};

// Finitely generated permutation group with exact order and membership.
// Order and membership come from breadth-first product closure (bounded);
// a stabilizer chain is built alongside and must agree.
class PermutationGroup {
 public:
  static constexpr uint64_t kDefaultClosureLimit = 1'000'000;

  static PermutationGroup from_generators(int degree, std::vector<Permutation> gens,
                                          uint64_t closure_limit = kDefaultClosureLimit);
  // Builds a group from an explicit element list, choosing a small
  // generating set greedily (deterministic).
  static PermutationGroup from_elements(int degree, std::vector<Permutation> elements);
  static PermutationGroup trivial(int degree);

  int degree() const { return degree_; }
  uint64_t order() const { return static_cast<uint64_t>(elements_.size()); }
  uint64_t stabilizer_chain_order() const;  // the independent route
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  bool contains(const Permutation& g) const;

  std::vector<int> point_orbit(int point) const;
  std::vector<std::pair<int, int>> pair_orbit(int u, int v) const;  // ordered pairs

 private:
  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;  // sorted
};

}  // namespace paley
