#include "charmaps.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "errors.hpp"
#include "groups.hpp"
#include "residue.hpp"

namespace paley {
namespace {

// Backtracking over images f(0), f(1), ... in encoding order. The running
// constraint is value_class(f(u) - f(v)) == kappa[value_class(u - v)] for
// all assigned ordered pairs; candidate sets are kept as bitmasks and cut
// after every assignment, so contradictions surface immediately.
struct PairClassSearch {
  int n;                                     // q <= 64
  int classes;                               // d distinct non-zero values
  std::vector<int> pair_class;               // [a*n+b] for a != b
  std::vector<uint64_t> match_fwd;           // [y*classes+c]: {w : class(w-y)==c}
  std::vector<uint64_t> match_bwd;           // [y*classes+c]: {w : class(y-w)==c}
  std::vector<int> kappa;

  std::vector<int> assignment;
  std::vector<uint64_t> candidates;
  std::vector<std::vector<int>> results;

  void run(const std::vector<std::pair<int, int>>& pinned) {
    assignment.assign(static_cast<size_t>(n), -1);
    uint64_t full = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
    candidates.assign(static_cast<size_t>(n), full);
    for (auto [var, value] : pinned) candidates[static_cast<size_t>(var)] = uint64_t{1} << value;
    descend(0);
  }

  void descend(int var) {
    if (var == n) {
      results.push_back(assignment);
      return;
    }
    uint64_t options = candidates[static_cast<size_t>(var)];
    while (options) {
      int value = std::countr_zero(options);
      options &= options - 1;
      std::vector<uint64_t> saved = candidates;
      assignment[static_cast<size_t>(var)] = value;
      if (propagate(var, value)) descend(var + 1);
      assignment[static_cast<size_t>(var)] = -1;
      candidates = std::move(saved);
    }
  }

  bool propagate(int var, int value) {
    candidates[static_cast<size_t>(var)] = uint64_t{1} << value;
    for (int other = var + 1; other < n; ++other) {
      int cf = kappa[static_cast<size_t>(pair_class[static_cast<size_t>(other) * n + var])];
      int cb = kappa[static_cast<size_t>(pair_class[static_cast<size_t>(var) * n + other])];
      uint64_t mask = match_fwd[static_cast<size_t>(value) * classes + cf] &
                      match_bwd[static_cast<size_t>(value) * classes + cb];
      candidates[static_cast<size_t>(other)] &= mask;
      if (candidates[static_cast<size_t>(other)] == 0) return false;
    }
    return true;
  }
};

PairClassSearch make_search(const FiniteField& f, int64_t d) {
  int64_t q = f.q();
  if (q > 64) throw ResourceLimit("character search bounded at q <= 64");
  int64_t m = (q - 1) / d;
  // classes indexed by position of phi(x) = x^m inside the value group E
  std::map<int64_t, int> class_of_value;
  for (int64_t enc = 1; enc < q; ++enc) {
    int64_t value = f.pow(FieldElement(enc), m).encoding();
    class_of_value.emplace(value, 0);
  }
  int next = 0;
  for (auto& [value, id] : class_of_value) id = next++;
  if (next != static_cast<int>(d)) {
    throw InvalidArgument("value group has unexpected order (d must divide q - 1)");
  }
  PairClassSearch search;
  search.n = static_cast<int>(q);
  search.classes = next;
  search.pair_class.assign(static_cast<size_t>(q) * q, -1);
  for (int64_t a = 0; a < q; ++a) {
    for (int64_t b = 0; b < q; ++b) {
      if (a == b) continue;
      FieldElement diff = f.sub(FieldElement(a), FieldElement(b));
      int64_t value = f.pow(diff, m).encoding();
      search.pair_class[static_cast<size_t>(a) * q + b] = class_of_value.at(value);
    }
  }
  search.match_fwd.assign(static_cast<size_t>(q) * next, 0);
  search.match_bwd.assign(static_cast<size_t>(q) * next, 0);
  for (int64_t y = 0; y < q; ++y) {
    for (int64_t w = 0; w < q; ++w) {
      if (w == y) continue;
      int cf = search.pair_class[static_cast<size_t>(w) * q + y];
      int cb = search.pair_class[static_cast<size_t>(y) * q + w];
      search.match_fwd[static_cast<size_t>(y) * next + cf] |= uint64_t{1} << w;
      search.match_bwd[static_cast<size_t>(y) * next + cb] |= uint64_t{1} << w;
    }
  }
  search.kappa.resize(static_cast<size_t>(next));
  std::iota(search.kappa.begin(), search.kappa.end(), 0);
  return search;
}

std::vector<Permutation> as_permutations(std::vector<std::vector<int>> maps) {
  std::vector<Permutation> out;
  out.reserve(maps.size());
  for (auto& images : maps) out.emplace_back(std::move(images));
  std::sort(out.begin(), out.end());
  return out;
}

void check_charmap(const FiniteField& f, int64_t d, const Permutation& perm) {
  int64_t m = (f.q() - 1) / d;
  for (int64_t u = 0; u < f.q(); ++u) {
    for (int64_t v = 0; v < f.q(); ++v) {
      if (u == v) continue;
      FieldElement lhs = f.pow(f.sub(FieldElement(perm.apply(static_cast<int>(u))),
                                     FieldElement(perm.apply(static_cast<int>(v)))),
                               m);
      FieldElement rhs = f.pow(f.sub(FieldElement(u), FieldElement(v)), m);
      if (lhs != rhs) throw InvalidArgument("search returned a non-solution");
    }
  }
}

}  // namespace

std::vector<Permutation> carlitz_permutations(const FiniteField& f) {
  if (f.q() % 2 == 0) throw InvalidArgument("character search needs odd q");
  if (f.q() > 49) throw ResourceLimit("exhaustive search bounded at q <= 49");
  PairClassSearch search = make_search(f, 2);
  search.run({{0, 0}, {1, 1}});
  auto out = as_permutations(std::move(search.results));
  for (const Permutation& perm : out) check_charmap(f, 2, perm);
  return out;
}

std::vector<Permutation> mcconnel_permutations(const FiniteField& f, int64_t d) {
  int64_t q = f.q();
  if (d <= 1 || d >= q - 1 || (q - 1) % d != 0) {
    throw InvalidArgument("d must be a proper divisor of q - 1 with 1 < d < q - 1");
  }
  if (q > 27) throw ResourceLimit("exhaustive search bounded at q <= 27");
  PairClassSearch search = make_search(f, d);
  search.run({{0, 0}, {1, 1}});
  auto out = as_permutations(std::move(search.results));
  for (const Permutation& perm : out) check_charmap(f, d, perm);
  return out;
}

std::vector<Permutation> predicted_frobenius_maps(const FiniteField& f, int64_t d) {
  std::set<Permutation> maps;
  for (int j = 0; j < f.e(); ++j) {
    int64_t pj = 1;
    for (int i = 0; i < j; ++i) pj *= f.p();
    if ((pj - 1) % d != 0) continue;
    std::vector<int> images(static_cast<size_t>(f.q()));
    for (int64_t enc = 0; enc < f.q(); ++enc) {
      images[static_cast<size_t>(enc)] =
          static_cast<int>(f.frobenius(FieldElement(enc), j).encoding());
    }
    maps.insert(Permutation(std::move(images)));
  }
  return {maps.begin(), maps.end()};
}

LenstraReport lenstra_normalizer_members(const FiniteField& f, int64_t d) {
  int64_t q = f.q();
  if (d <= 1 || d >= q - 1 || (q - 1) % d != 0) {
    throw InvalidArgument("d must be a proper divisor of q - 1 with 1 < d < q - 1");
  }
  if (q > 13) throw ResourceLimit("normaliser search bounded at q <= 13");
  PairClassSearch base = make_search(f, d);
  std::vector<int> kappa(static_cast<size_t>(d));
  std::iota(kappa.begin(), kappa.end(), 0);
  std::vector<std::vector<int>> all;
  // A solution determines its kappa (phi is onto E), so the union over
  // kappa is duplicate-free.
  std::sort(kappa.begin(), kappa.end());
  do {
    PairClassSearch search = base;
    search.kappa = kappa;
    search.run({});
    for (auto& images : search.results) all.push_back(std::move(images));
  } while (std::next_permutation(kappa.begin(), kappa.end()));

  LenstraReport report;
  report.members = as_permutations(std::move(all));

  std::set<Permutation> member_set(report.members.begin(), report.members.end());
  report.closed_under_composition = true;
  for (const Permutation& a : report.members) {
    for (const Permutation& b : report.members) {
      if (!member_set.count(a.compose(b))) {
        report.closed_under_composition = false;
        break;
      }
    }
    if (!report.closed_under_composition) break;
  }

  McconnelGroupReport gd = mcconnel_group(f, d);
  report.gd_order = gd.closure_order;
  report.contains_gd = true;
  for (const Permutation& el : gd.group.elements()) {
    if (!member_set.count(el)) {
      report.contains_gd = false;
      break;
    }
  }
  report.normalizes_gd = true;
  for (const Permutation& member : report.members) {
    Permutation member_inv = member.inverse();
    for (const Permutation& gen : gd.group.generators()) {
      if (!gd.group.contains(member.compose(gen).compose(member_inv))) {
        report.normalizes_gd = false;
        break;
      }
    }
    if (!report.normalizes_gd) break;
  }
  return report;
}

}  // namespace paley
