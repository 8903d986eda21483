#include "family.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "errors.hpp"
#include "residue.hpp"

namespace paley {

Graph paley_graph(const FiniteField& f) {
  if (f.q() % 4 != 1) {
    throw InvalidArgument("Paley graph needs q = 1 mod 4 (for q = 3 mod 4 use the tournament)");
  }
  return Graph::cayley(f, residue_set(f, false).members);
}

Graph paley_tournament(const FiniteField& f) {
  if (f.q() % 4 != 3) throw InvalidArgument("Paley tournament needs q = 3 mod 4");
  return Graph::cayley(f, residue_set(f, false).members);
}

GeneralizedPaley generalized_paley(const FiniteField& f, int64_t m) {
  if (m < 1 || (f.q() - 1) % m != 0) {
    throw InvalidArgument("m must divide q - 1");
  }
  if (f.q() % 2 == 1 && m % 2 == 1) {
    throw InvalidArgument("odd q needs even m for an undirected graph");
  }
  GeneralizedPaley out{Graph(0, false), {}};
  out.info.m = m;
  out.info.d = (f.q() - 1) / m;
  out.info.large_condition = (f.p() - 1) % out.info.d == 0;

  // D as the image of x -> x^((q-1)/m) over F*, deduplicated.
  std::set<FieldElement> subgroup;
  for (int64_t enc = 1; enc < f.q(); ++enc) {
    subgroup.insert(f.pow(FieldElement(enc), out.info.d));
  }
  out.info.connection.assign(subgroup.begin(), subgroup.end());
  if (static_cast<int64_t>(out.info.connection.size()) != m) {
    throw InvalidArgument("subgroup of order m not realised (m does not divide q - 1)");
  }

  // connectivity: additive span of D must reach every element
  std::set<int64_t> span{0};
  std::vector<int64_t> frontier{0};
  while (!frontier.empty()) {
    int64_t cur = frontier.back();
    frontier.pop_back();
    for (FieldElement dconn : out.info.connection) {
      int64_t next = f.add(FieldElement(cur), dconn).encoding();
      if (span.insert(next).second) frontier.push_back(next);
    }
  }
  if (static_cast<int64_t>(span.size()) != f.q()) {
    throw NotConnected("connection set does not generate the additive group");
  }
  out.graph = Graph::cayley(f, out.info.connection);
  return out;
}

Graph peisert_graph(const FiniteField& f) {
  if (f.p() % 4 != 3 || f.e() % 2 != 0) {
    throw InvalidArgument("Peisert graph needs q an even power of a prime p = 3 mod 4");
  }
  std::vector<FieldElement> connection;
  FieldElement power = f.one();  // omega^0
  for (int64_t j = 0; j < f.q() - 1; ++j) {
    if (j % 4 == 0 || j % 4 == 1) connection.push_back(power);
    power = f.mul(power, f.omega());
  }
  std::sort(connection.begin(), connection.end());
  return Graph::cayley(f, connection);
}

}  // namespace paley
