#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "field.hpp"

namespace paley {

// Fixed-width bitset used for adjacency rows.
class BitVec {
 public:
  BitVec() : bits_(0) {}
  explicit BitVec(int bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  int size() const { return bits_; }
  void set(int i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  int count() const;
  // popcount of this & other
  int and_count(const BitVec& other) const;
  // popcount of (this ^ other) & ~mask_bits
  int xor_count_excluding(const BitVec& other, int i, int j) const;

  friend bool operator==(const BitVec&, const BitVec&) = default;

 private:
  int bits_;
  std::vector<uint64_t> words_;
};

// Loop-free graph or digraph on vertices {0..n-1} with bitset adjacency
// rows. Row u holds the out-neighbours of u; undirected graphs keep the
// matrix symmetric. Immutable by convention once built.
class Graph {
 public:
  Graph(int n, bool directed);

  // Cayley graph for the additive group of f: arc u -> v iff v - u lies in
  // the connection set. Undirected exactly when the set is symmetric
  // (detected automatically). Zero must not appear in the connection set.
  static Graph cayley(const FiniteField& f, const std::vector<FieldElement>& connection);

  int vertex_count() const { return n_; }
  bool directed() const { return directed_; }

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;  // arc u -> v
  const BitVec& out_row(int u) const { return out_[u]; }
  const BitVec& in_row(int u) const { return in_[u]; }
  int out_degree(int u) const { return out_[u].count(); }
  int in_degree(int u) const { return in_[u].count(); }
  int64_t edge_count() const;

  bool is_tournament() const;
  bool is_connected() const;  // weak connectivity for digraphs
  bool is_complete() const;

  Graph complement() const;  // undirected input only
  Graph relabelled(const std::vector<int>& images) const;

  // Deterministic exports: DOT, sorted edge list, 0/1 adjacency rows.
  std::string to_dot() const;
  std::string to_edge_list() const;
  std::string to_adjacency_text() const;
  // Parses 0/1 adjacency rows; directedness inferred from symmetry.
  static Graph parse_adjacency_text(const std::string& text);

 private:
  int n_;
  bool directed_;
  std::vector<BitVec> out_;
  std::vector<BitVec> in_;
};

struct SrgParams {
  int64_t v = 0, k = 0, lambda = 0, mu = 0;
  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

// Outcome of the strong-regularity scan. Disqualifying structure is
// reported here with a witness, not thrown.
struct SrgResult {
  bool is_srg = false;
  SrgParams params;
  int witness_u = -1, witness_v = -1;
  std::string reason;
};

// Exhaustive pair scan for constant valency, lambda and mu. Input must be
// undirected; connectivity, completeness and emptiness failures are
// reported in the result.
SrgResult srg_params(const Graph& g);

// Number of common out-neighbours of distinct u, v.
int64_t common_neighbours(const Graph& g, int u, int v);

// Number of vertices w != u, v adjacent to exactly one of u, v.
int64_t delta_uv(const Graph& g, int u, int v);
int64_t min_delta(const Graph& g);
// True iff min over pairs of delta equals floor((n-1)/2).
bool is_delta_graph(const Graph& g);

}  // namespace paley
