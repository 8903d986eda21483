#include "perm.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "errors.hpp"

namespace paley {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<uint8_t> seen(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || x >= static_cast<int>(images_.size()) || seen[x]) {
      throw InvalidArgument("image list is not a bijection");
    }
    seen[x] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) images[i] = i;
  return Permutation(std::move(images));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (degree() != other.degree()) throw InvalidArgument("degree mismatch in composition");
  std::vector<int> images(images_.size());
  for (int x = 0; x < degree(); ++x) images[x] = images_[other.images_[x]];
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> images(images_.size());
  for (int x = 0; x < degree(); ++x) images[images_[x]] = x;
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int x = 0; x < degree(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

int Permutation::smallest_moved() const {
  for (int x = 0; x < degree(); ++x) {
    if (images_[x] != x) return x;
  }
  return -1;
}

std::string Permutation::cycle_notation() const {
  std::ostringstream os;
  std::vector<uint8_t> seen(images_.size(), 0);
  bool any = false;
  for (int start = 0; start < degree(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    any = true;
    os << '(';
    int x = start;
    bool first = true;
    do {
      if (!first) os << ' ';
      os << x;
      seen[x] = 1;
      x = images_[x];
      first = false;
    } while (x != start);
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

Permutation compose(const Permutation& a, const Permutation& b) { return a.compose(b); }
Permutation inverse(const Permutation& a) { return a.inverse(); }

StabilizerChain::StabilizerChain(int degree, const std::vector<Permutation>& generators)
    : degree_(degree) {
  for (const Permutation& g : generators) {
    if (g.degree() != degree) throw InvalidArgument("generator degree mismatch");
    if (g.is_identity()) continue;
    size_t l = 0;
    while (l < levels_.size() && g.apply(levels_[l].base_point) == levels_[l].base_point) ++l;
    if (l == levels_.size()) {
      levels_.push_back(Level{g.smallest_moved(), {}, {}, {}, {}});
    }
    for (size_t m = 0; m <= l; ++m) {
      if (std::find(levels_[m].gens.begin(), levels_[m].gens.end(), g) == levels_[m].gens.end()) {
        levels_[m].gens.push_back(g);
      }
    }
  }
  if (levels_.empty()) return;
  size_t i = levels_.size() - 1;
  for (;;) {
    size_t restart = 0;
    if (process_level(i, &restart)) {
      i = restart;
    } else {
      if (i == 0) break;
      --i;
    }
  }
}

void StabilizerChain::recompute_orbit(Level& level) {
  level.orbit.clear();
  level.transversal_of.clear();
  level.orbit_index_of_point.assign(static_cast<size_t>(degree_), -1);
  level.orbit.push_back(level.base_point);
  level.transversal_of.push_back(Permutation::identity(degree_));
  level.orbit_index_of_point[level.base_point] = 0;
  for (size_t head = 0; head < level.orbit.size(); ++head) {
    int point = level.orbit[head];
    for (const Permutation& s : level.gens) {
      int image = s.apply(point);
      if (level.orbit_index_of_point[image] < 0) {
        level.orbit_index_of_point[image] = static_cast<int>(level.orbit.size());
        level.orbit.push_back(image);
        level.transversal_of.push_back(s.compose(level.transversal_of[head]));
      }
    }
  }
}

std::pair<Permutation, size_t> StabilizerChain::strip(Permutation g, size_t from) const {
  size_t l = from;
  while (l < levels_.size()) {
    int image = g.apply(levels_[l].base_point);
    int idx = levels_[l].orbit_index_of_point.empty() ? -1 : levels_[l].orbit_index_of_point[image];
    if (idx < 0) return {g, l};
    g = levels_[l].transversal_of[static_cast<size_t>(idx)].inverse().compose(g);
    ++l;
  }
  return {g, l};
}

bool StabilizerChain::process_level(size_t i, size_t* restart) {
  recompute_orbit(levels_[i]);
  for (size_t head = 0; head < levels_[i].orbit.size(); ++head) {
    const Permutation& rep = levels_[i].transversal_of[head];
    int point = levels_[i].orbit[head];
    for (const Permutation& s : levels_[i].gens) {
      int image = s.apply(point);
      const Permutation& rep_image =
          levels_[i].transversal_of[static_cast<size_t>(levels_[i].orbit_index_of_point[image])];
      Permutation schreier = rep_image.inverse().compose(s.compose(rep));
      if (schreier.is_identity()) continue;
      auto [h, j] = strip(schreier, i + 1);
      if (h.is_identity()) continue;
      if (j == levels_.size()) {
        levels_.push_back(Level{h.smallest_moved(), {}, {}, {}, {}});
      }
      for (size_t m = i + 1; m <= j; ++m) {
        if (std::find(levels_[m].gens.begin(), levels_[m].gens.end(), h) ==
            levels_[m].gens.end()) {
          levels_[m].gens.push_back(h);
        }
      }
      *restart = j;
      return true;
    }
  }
  return false;
}

uint64_t StabilizerChain::order() const {
  uint64_t n = 1;
  for (const Level& level : levels_) n *= static_cast<uint64_t>(level.orbit.size());
  return n;
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  auto [residue, level] = strip(g, 0);
  return level == levels_.size() && residue.is_identity();
}

PermutationGroup PermutationGroup::trivial(int degree) {
  PermutationGroup g;
  g.degree_ = degree;
  g.elements_.push_back(Permutation::identity(degree));
  return g;
}

PermutationGroup PermutationGroup::from_generators(int degree, std::vector<Permutation> gens,
                                                   uint64_t closure_limit) {
  for (const Permutation& g : gens) {
    if (g.degree() != degree) throw InvalidArgument("generator degree mismatch");
  }
  PermutationGroup group;
  group.degree_ = degree;
  group.generators_ = gens;

  // breadth-first product closure
  std::set<Permutation> closure;
  std::deque<Permutation> frontier;
  closure.insert(Permutation::identity(degree));
  frontier.push_back(Permutation::identity(degree));
  while (!frontier.empty()) {
    Permutation cur = frontier.front();
    frontier.pop_front();
    for (const Permutation& g : gens) {
      Permutation next = g.compose(cur);
      if (closure.insert(next).second) {
        if (closure.size() > closure_limit) {
          throw ResourceLimit("group closure exceeds the resource bound of " +
                              std::to_string(closure_limit) + " elements");
        }
        frontier.push_back(std::move(next));
      }
    }
  }
  group.elements_.assign(closure.begin(), closure.end());
  return group;
}

PermutationGroup PermutationGroup::from_elements(int degree, std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  PermutationGroup group = trivial(degree);
  std::vector<Permutation> gens;
  for (const Permutation& el : elements) {
    if (!group.contains(el)) {
      gens.push_back(el);
      group = from_generators(degree, gens);
      if (group.order() == elements.size()) break;
    }
  }
  if (group.order() != elements.size()) {
    throw InvalidArgument("element list is not closed under composition");
  }
  return group;
}

uint64_t PermutationGroup::stabilizer_chain_order() const {
  return StabilizerChain(degree_, generators_).order();
}

bool PermutationGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  return std::binary_search(elements_.begin(), elements_.end(), g);
}

std::vector<int> PermutationGroup::point_orbit(int point) const {
  std::vector<uint8_t> seen(static_cast<size_t>(degree_), 0);
  std::vector<int> orbit{point};
  seen[point] = 1;
  for (size_t head = 0; head < orbit.size(); ++head) {
    for (const Permutation& g : generators_) {
      int image = g.apply(orbit[head]);
      if (!seen[image]) {
        seen[image] = 1;
        orbit.push_back(image);
      }
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

std::vector<std::pair<int, int>> PermutationGroup::pair_orbit(int u, int v) const {
  std::set<std::pair<int, int>> seen;
  std::deque<std::pair<int, int>> frontier;
  seen.insert({u, v});
  frontier.push_back({u, v});
  while (!frontier.empty()) {
    auto [a, b] = frontier.front();
    frontier.pop_front();
    for (const Permutation& g : generators_) {
      std::pair<int, int> image{g.apply(a), g.apply(b)};
      if (seen.insert(image).second) frontier.push_back(image);
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace paley
