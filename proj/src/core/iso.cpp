#include "iso.hpp"

#include <algorithm>
#include <map>

#include "errors.hpp"

namespace paley {
namespace {

// Paired colour refinement for two graphs searched simultaneously.
// Signatures are (old colour, per-colour out-counts, per-colour in-counts
// for digraphs); fresh colour ids are assigned from the merged signature
// order so that equal signatures get equal ids in both graphs.
struct IsoSearch {
  const Graph& g;
  const Graph& h;
  int n;
  bool directed;
  bool enumerate_all = false;
  std::vector<std::vector<int>> found;  // verified mappings (enumeration mode)
  std::optional<std::vector<int>> first;

  IsoSearch(const Graph& g_in, const Graph& h_in)
      : g(g_in), h(h_in), n(g_in.vertex_count()), directed(g_in.directed()) {}

  using Coloring = std::vector<int>;

  // Refines both colorings to a joint equitable fixed point. Returns false
  // when the colour-class profiles of g and h diverge.
  bool refine(Coloring& cg, Coloring& ch) const {
    int color_count = 1 + *std::max_element(cg.begin(), cg.end());
    for (;;) {
      std::vector<BitVec> masks_g(color_count, BitVec(n));
      std::vector<BitVec> masks_h(color_count, BitVec(n));
      for (int v = 0; v < n; ++v) {
        masks_g[cg[v]].set(v);
        masks_h[ch[v]].set(v);
      }
      for (int c = 0; c < color_count; ++c) {
        if (masks_g[c].count() != masks_h[c].count()) return false;
      }
      auto signature = [&](const Graph& graph, const std::vector<BitVec>& masks,
                           const Coloring& colors, int v) {
        std::vector<int> sig;
        sig.reserve(1 + (directed ? 2 : 1) * color_count);
        sig.push_back(colors[v]);
        for (int c = 0; c < color_count; ++c) {
          sig.push_back(graph.out_row(v).and_count(masks[c]));
        }
        if (directed) {
          for (int c = 0; c < color_count; ++c) {
            sig.push_back(graph.in_row(v).and_count(masks[c]));
          }
        }
        return sig;
      };
      std::map<std::vector<int>, std::pair<int, int>> counts;  // sig -> (#g, #h)
      std::vector<std::vector<int>> sig_g(n), sig_h(n);
      for (int v = 0; v < n; ++v) {
        sig_g[v] = signature(g, masks_g, cg, v);
        sig_h[v] = signature(h, masks_h, ch, v);
        counts[sig_g[v]].first++;
        counts[sig_h[v]].second++;
      }
      int next_id = 0;
      std::map<std::vector<int>, int> ids;
      for (auto& [sig, cnt] : counts) {
        if (cnt.first != cnt.second) return false;
        ids[sig] = next_id++;
      }
      if (next_id == color_count) return true;  // stable
      for (int v = 0; v < n; ++v) {
        cg[v] = ids[sig_g[v]];
        ch[v] = ids[sig_h[v]];
      }
      color_count = next_id;
    }
  }

  bool mapping_valid(const std::vector<int>& map) const {
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u == v) continue;
        if (g.has_edge(u, v) != h.has_edge(map[u], map[v])) return false;
      }
    }
    return true;
  }

  // Returns true to abort the search (first hit found in single-match mode).
  bool search(Coloring cg, Coloring ch) {
    if (!refine(cg, ch)) return false;
    int color_count = 1 + *std::max_element(cg.begin(), cg.end());
    if (color_count == n) {
      std::vector<int> map(n);
      std::vector<int> h_of_color(n, -1);
      for (int v = 0; v < n; ++v) h_of_color[ch[v]] = v;
      for (int v = 0; v < n; ++v) map[v] = h_of_color[cg[v]];
      if (!mapping_valid(map)) return false;
      if (enumerate_all) {
        found.push_back(map);
        return false;
      }
      first = map;
      return true;
    }
    // smallest non-singleton class, ties by colour id
    std::vector<int> class_size(color_count, 0);
    for (int v = 0; v < n; ++v) class_size[cg[v]]++;
    int target = -1;
    for (int c = 0; c < color_count; ++c) {
      if (class_size[c] < 2) continue;
      if (target < 0 || class_size[c] < class_size[target]) target = c;
    }
    int u = -1;
    for (int v = 0; v < n; ++v) {
      if (cg[v] == target) {
        u = v;
        break;
      }
    }
    for (int w = 0; w < n; ++w) {
      if (ch[w] != target) continue;
      Coloring next_g = cg, next_h = ch;
      next_g[u] = color_count;
      next_h[w] = color_count;
      if (search(std::move(next_g), std::move(next_h))) return true;
    }
    return false;
  }
};

void check_compatible(const Graph& g, const Graph& h, int vertex_limit) {
  if (g.vertex_count() > vertex_limit || h.vertex_count() > vertex_limit) {
    throw ResourceLimit("graph exceeds the isomorphism vertex bound of " +
                        std::to_string(vertex_limit));
  }
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h,
                                                 int vertex_limit) {
  check_compatible(g, h, vertex_limit);
  if (g.vertex_count() != h.vertex_count() || g.directed() != h.directed()) return std::nullopt;
  if (g.vertex_count() == 0) return std::vector<int>{};
  IsoSearch search(g, h);
  search.search(std::vector<int>(g.vertex_count(), 0), std::vector<int>(h.vertex_count(), 0));
  return search.first;
}

std::optional<std::vector<int>> self_complementarity_witness(const Graph& g, int vertex_limit) {
  return find_isomorphism(g, g.complement(), vertex_limit);
}

std::vector<std::vector<int>> all_automorphisms(const Graph& g,
                                                const std::vector<int>& initial_colors,
                                                int vertex_limit) {
  check_compatible(g, g, vertex_limit);
  int n = g.vertex_count();
  if (n == 0) return {std::vector<int>{}};
  std::vector<int> colors = initial_colors;
  if (colors.empty()) colors.assign(static_cast<size_t>(n), 0);
  if (static_cast<int>(colors.size()) != n) throw InvalidArgument("colour list size mismatch");
  {  // renumber colours contiguously, preserving value order
    std::map<int, int> ids;
    for (int c : colors) ids.emplace(c, 0);
    int next = 0;
    for (auto& [value, id] : ids) id = next++;
    for (int& c : colors) c = ids[c];
  }
  IsoSearch search(g, g);
  search.enumerate_all = true;
  search.search(colors, colors);
  std::sort(search.found.begin(), search.found.end());
  return search.found;
}

}  // namespace paley
