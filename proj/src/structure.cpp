#include "mcg/structure.hpp"

#include <algorithm>

namespace mcg {

namespace {

// BFS over simple adjacency, honoring a removal mask; returns component of
// `start` and marks it visited.
std::vector<int> sweep(const MultiGraph& g, int start, std::vector<char>& visited,
                       const std::vector<char>* removed) {
  std::vector<int> comp{start};
  visited[start] = 1;
  for (std::size_t i = 0; i < comp.size(); ++i) {
    for (int w : g.neighbors(comp[i])) {
      if (visited[w] || (removed && (*removed)[w])) continue;
      visited[w] = 1;
      comp.push_back(w);
    }
  }
  std::sort(comp.begin(), comp.end());
  return comp;
}

}  // namespace

bool is_connected(const MultiGraph& g) {
  int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<char> visited(n, 0);
  auto comp = sweep(g, 0, visited, nullptr);
  return static_cast<int>(comp.size()) == n;
}

bool is_bipartite(const MultiGraph& g) {
  int n = g.vertex_count();
  std::vector<int> color(n, -1);
  for (int s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<int> queue{s};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int v = queue[i];
      for (int w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_simple(const MultiGraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != g.simple_degree(v)) return false;
  return true;
}

bool is_regular(const MultiGraph& g, int k) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != k) return false;
  return true;
}

bool is_cubic(const MultiGraph& g) { return is_regular(g, 3); }

bool is_even_cycle(const MultiGraph& g) {
  int n = g.vertex_count();
  return n >= 4 && n % 2 == 0 && is_simple(g) && is_regular(g, 2) && is_connected(g);
}

bool is_k_connected(const MultiGraph& g, int k) {
  int n = g.vertex_count();
  if (k <= 0) return true;
  if (n <= k) return false;
  if (!is_connected(g)) return false;
  if (k == 1) return true;
  // remove every (k-1)-subset and check connectivity of the rest
  std::vector<int> pick(k - 1);
  std::vector<char> removed(n, 0);
  auto rec = [&](auto&& self, int idx, int from) -> bool {
    if (idx == k - 1) {
      std::vector<char> visited(removed);
      int start = 0;
      while (removed[start]) ++start;
      auto comp = sweep(g, start, visited, nullptr);
      // visited doubles as "removed or reached"
      return static_cast<int>(comp.size()) == n - (k - 1);
    }
    for (int v = from; v < n; ++v) {
      removed[v] = 1;
      bool ok = self(self, idx + 1, v + 1);
      removed[v] = 0;
      if (!ok) return false;
    }
    return true;
  };
  return rec(rec, 0, 0);
}

std::vector<std::vector<int>> components(const MultiGraph& g) {
  std::vector<char> none;
  return components_after_removal(g, none);
}

std::vector<std::vector<int>> components_after_removal(const MultiGraph& g,
                                                       const std::vector<char>& removed) {
  int n = g.vertex_count();
  std::vector<char> visited(n, 0);
  const std::vector<char>* mask = removed.empty() ? nullptr : &removed;
  std::vector<std::vector<int>> comps;
  for (int v = 0; v < n; ++v) {
    if (visited[v] || (mask && removed[v])) continue;
    comps.push_back(sweep(g, v, visited, mask));
  }
  return comps;
}

int odd_components_after_removal(const MultiGraph& g, const std::vector<char>& removed) {
  int n = g.vertex_count();
  std::vector<char> visited(n, 0);
  int odd = 0;
  for (int v = 0; v < n; ++v) {
    if (visited[v] || removed[v]) continue;
    visited[v] = 1;
    std::vector<int> queue{v};
    int size = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      ++size;
      for (int w : g.neighbors(queue[i])) {
        if (visited[w] || removed[w]) continue;
        visited[w] = 1;
        queue.push_back(w);
      }
    }
    if (size % 2 == 1) ++odd;
  }
  return odd;
}

std::optional<std::array<int, 4>> find_claw(const MultiGraph& g) {
  for (int c = 0; c < g.vertex_count(); ++c) {
    const auto& nbrs = g.neighbors(c);
    int d = static_cast<int>(nbrs.size());
    if (d < 3) continue;
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        if (g.adjacent(nbrs[i], nbrs[j])) continue;
        for (int k = j + 1; k < d; ++k) {
          if (g.adjacent(nbrs[i], nbrs[k]) || g.adjacent(nbrs[j], nbrs[k])) continue;
          return std::array<int, 4>{c, nbrs[i], nbrs[j], nbrs[k]};
        }
      }
  }
  return std::nullopt;
}

bool is_claw_free(const MultiGraph& g) { return !find_claw(g).has_value(); }

bool simple_is_k4(const MultiGraph& g) {
  if (g.vertex_count() != 4) return false;
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v)
      if (!g.adjacent(u, v)) return false;
  return true;
}

std::vector<EdgeId> ridges(const MultiGraph& g) {
  std::vector<EdgeId> out;
  if (simple_is_k4(g)) {
    out.resize(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) out[e] = e;
    return out;
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    const auto& a = g.neighbors(ed.u);
    bool common = std::any_of(a.begin(), a.end(),
                              [&](int w) { return w != ed.v && g.adjacent(ed.v, w); });
    if (!common) out.push_back(e);
  }
  return out;
}

std::vector<EdgeId> triangle_edges(const MultiGraph& g) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    const auto& a = g.neighbors(ed.u);
    bool common = std::any_of(a.begin(), a.end(),
                              [&](int w) { return w != ed.v && g.adjacent(ed.v, w); });
    if (common) out.push_back(e);
  }
  return out;
}

}  // namespace mcg
