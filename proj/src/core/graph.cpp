#include "graph.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "errors.hpp"

namespace paley {

int BitVec::count() const {
  int c = 0;
  for (uint64_t w : words_) c += std::popcount(w);
  return c;
}

int BitVec::and_count(const BitVec& other) const {
  int c = 0;
  for (size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & other.words_[i]);
  return c;
}

int BitVec::xor_count_excluding(const BitVec& other, int i, int j) const {
  int c = 0;
  for (size_t w = 0; w < words_.size(); ++w) c += std::popcount(words_[w] ^ other.words_[w]);
  auto differs = [&](int b) { return test(b) != other.test(b); };
  if (differs(i)) --c;
  if (j != i && differs(j)) --c;
  return c;
}

Graph::Graph(int n, bool directed) : n_(n), directed_(directed) {
  if (n < 0) throw InvalidArgument("negative vertex count");
  out_.assign(static_cast<size_t>(n), BitVec(n));
  in_.assign(static_cast<size_t>(n), BitVec(n));
}

Graph Graph::cayley(const FiniteField& f, const std::vector<FieldElement>& connection) {
  std::set<int64_t> conn;
  for (FieldElement c : connection) {
    if (c == f.zero()) throw InvalidArgument("connection set must not contain 0");
    conn.insert(f.element(c.encoding()).encoding());
  }
  bool symmetric = true;
  for (int64_t enc : conn) {
    if (!conn.count(f.neg(FieldElement(enc)).encoding())) {
      symmetric = false;
      break;
    }
  }
  Graph g(static_cast<int>(f.q()), !symmetric);
  for (int64_t u = 0; u < f.q(); ++u) {
    for (int64_t c : conn) {
      int64_t v = f.add(FieldElement(u), FieldElement(c)).encoding();
      g.out_[u].set(static_cast<int>(v));
      g.in_[v].set(static_cast<int>(u));
    }
  }
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw InvalidArgument("vertex out of range");
  if (u == v) throw InvalidArgument("loops are not allowed");
  out_[u].set(v);
  in_[v].set(u);
  if (!directed_) {
    out_[v].set(u);
    in_[u].set(v);
  }
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw InvalidArgument("vertex out of range");
  return out_[u].test(v);
}

int64_t Graph::edge_count() const {
  int64_t arcs = 0;
  for (int u = 0; u < n_; ++u) arcs += out_[u].count();
  return directed_ ? arcs : arcs / 2;
}

bool Graph::is_tournament() const {
  if (!directed_) return false;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (out_[u].test(v) == out_[v].test(u)) return false;
    }
  }
  return true;
}

bool Graph::is_connected() const {
  if (n_ == 0) return false;
  std::vector<uint8_t> seen(static_cast<size_t>(n_), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < n_; ++v) {
      if (!seen[v] && (out_[u].test(v) || in_[u].test(v))) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n_;
}

bool Graph::is_complete() const {
  for (int u = 0; u < n_; ++u) {
    if (out_[u].count() != n_ - 1) return false;
  }
  return true;
}

Graph Graph::complement() const {
  if (directed_) throw InvalidArgument("complement requires an undirected graph");
  Graph g(n_, false);
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (!out_[u].test(v)) g.add_edge(u, v);
    }
  }
  return g;
}

Graph Graph::relabelled(const std::vector<int>& images) const {
  if (static_cast<int>(images.size()) != n_) throw InvalidArgument("relabelling size mismatch");
  Graph g(n_, directed_);
  for (int u = 0; u < n_; ++u) {
    for (int v = 0; v < n_; ++v) {
      if (u != v && out_[u].test(v)) {
        g.out_[images[u]].set(images[v]);
        g.in_[images[v]].set(images[u]);
      }
    }
  }
  return g;
}

std::string Graph::to_dot() const {
  std::ostringstream os;
  os << (directed_ ? "digraph {\n" : "graph {\n");
  for (int u = 0; u < n_; ++u) os << "  " << u << ";\n";
  for (int u = 0; u < n_; ++u) {
    for (int v = 0; v < n_; ++v) {
      if (!out_[u].test(v)) continue;
      if (!directed_ && v < u) continue;
      os << "  " << u << (directed_ ? " -> " : " -- ") << v << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string Graph::to_edge_list() const {
  std::ostringstream os;
  for (int u = 0; u < n_; ++u) {
    for (int v = 0; v < n_; ++v) {
      if (!out_[u].test(v)) continue;
      if (!directed_ && v < u) continue;
      os << u << ' ' << v << "\n";
    }
  }
  return os.str();
}

std::string Graph::to_adjacency_text() const {
  std::ostringstream os;
  for (int u = 0; u < n_; ++u) {
    for (int v = 0; v < n_; ++v) os << (out_[u].test(v) ? '1' : '0');
    os << "\n";
  }
  return os.str();
}

Graph Graph::parse_adjacency_text(const std::string& text) {
  std::vector<std::string> rows;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    rows.push_back(line);
  }
  int n = static_cast<int>(rows.size());
  if (n == 0) throw ParseError("empty adjacency matrix");
  for (const std::string& r : rows) {
    if (static_cast<int>(r.size()) != n) throw ParseError("adjacency matrix is not square");
    for (char c : r) {
      if (c != '0' && c != '1') throw ParseError("adjacency entries must be 0 or 1");
    }
  }
  bool symmetric = true;
  for (int u = 0; u < n && symmetric; ++u) {
    if (rows[u][u] == '1') throw ParseError("adjacency matrix has a loop");
    for (int v = 0; v < n; ++v) {
      if (rows[u][v] != rows[v][u]) {
        symmetric = false;
        break;
      }
    }
  }
  Graph g(n, !symmetric);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (rows[u][v] == '1') {
        g.out_[u].set(v);
        g.in_[v].set(u);
      }
    }
  }
  return g;
}

SrgResult srg_params(const Graph& g) {
  if (g.directed()) throw InvalidArgument("srg_params requires an undirected graph");
  SrgResult r;
  int n = g.vertex_count();
  if (n == 0) {
    r.reason = "empty graph";
    return r;
  }
  if (!g.is_connected()) {
    r.reason = "not connected";
    return r;
  }
  if (g.is_complete()) {
    r.reason = "complete graph";
    return r;
  }
  if (g.edge_count() == 0) {
    r.reason = "no edges";
    return r;
  }
  int k = g.out_degree(0);
  for (int u = 1; u < n; ++u) {
    if (g.out_degree(u) != k) {
      r.reason = "valency not constant";
      r.witness_u = 0;
      r.witness_v = u;
      return r;
    }
  }
  int64_t lambda = -1, mu = -1;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      int64_t c = g.out_row(u).and_count(g.out_row(v));
      if (g.has_edge(u, v)) {
        if (lambda < 0) lambda = c;
        if (c != lambda) {
          r.reason = "lambda not constant";
          r.witness_u = u;
          r.witness_v = v;
          return r;
        }
      } else {
        if (mu < 0) mu = c;
        if (c != mu) {
          r.reason = "mu not constant";
          r.witness_u = u;
          r.witness_v = v;
          return r;
        }
      }
    }
  }
  if (mu < 0) mu = 0;  // complete multipartite edge case never reached: non-complete and connected
  r.is_srg = true;
  r.params = SrgParams{n, k, lambda, mu};
  return r;
}

int64_t common_neighbours(const Graph& g, int u, int v) {
  if (u == v) throw InvalidArgument("common_neighbours requires u != v");
  return g.out_row(u).and_count(g.out_row(v));
}

int64_t delta_uv(const Graph& g, int u, int v) {
  if (g.directed()) throw InvalidArgument("delta requires an undirected graph");
  if (u == v) throw InvalidArgument("delta requires u != v");
  return g.out_row(u).xor_count_excluding(g.out_row(v), u, v);
}

int64_t min_delta(const Graph& g) {
  if (g.vertex_count() < 2) throw InvalidArgument("min_delta requires at least two vertices");
  int64_t best = -1;
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (int v = u + 1; v < g.vertex_count(); ++v) {
      int64_t d = delta_uv(g, u, v);
      if (best < 0 || d < best) best = d;
    }
  }
  return best;
}

bool is_delta_graph(const Graph& g) {
  return min_delta(g) == (g.vertex_count() - 1) / 2;
}

}  // namespace paley
