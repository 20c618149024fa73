#include "mcg/named.hpp"

#include <algorithm>
#include <stdexcept>

namespace mcg {

namespace {

std::vector<std::pair<int, int>> complete_edges(int k) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) edges.emplace_back(u, v);
  return edges;
}

std::vector<std::pair<int, int>> c6bar_edges() {
  // complement of 0-1-2-3-4-5-0, lexicographic
  std::vector<std::pair<int, int>> edges;
  auto on_cycle = [](int u, int v) {
    int d = std::abs(u - v);
    return d == 1 || d == 5;
  };
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      if (!on_cycle(u, v)) edges.emplace_back(u, v);
  return edges;
}

std::vector<std::pair<int, int>> without(std::vector<std::pair<int, int>> edges,
                                         std::pair<int, int> gone) {
  edges.erase(std::remove(edges.begin(), edges.end(), gone), edges.end());
  return edges;
}

MultiGraph h1_graph() {
  // blow each vertex v of K4 up to the triangle {3v, 3v+1, 3v+2}; the cross
  // edge for a K4 edge (u,w) attaches at port 3u + rank of w among u's
  // neighbours (and symmetrically)
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < 4; ++v) {
    edges.emplace_back(3 * v, 3 * v + 1);
    edges.emplace_back(3 * v, 3 * v + 2);
    edges.emplace_back(3 * v + 1, 3 * v + 2);
  }
  auto port = [](int v, int w) {
    int rank = 0;
    for (int x = 0; x < 4; ++x) {
      if (x == v) continue;
      if (x == w) break;
      ++rank;
    }
    return 3 * v + rank;
  };
  for (const auto& [u, w] : complete_edges(4)) edges.emplace_back(port(u, w), port(w, u));
  return MultiGraph(12, edges);
}

}  // namespace

NamedGraph named(NamedTag tag) {
  switch (tag) {
    case NamedTag::K2:
      return {tag, "k2", MultiGraph(2, {{0, 1}}), {}};
    case NamedTag::K4:
      return {tag, "k4", MultiGraph(4, complete_edges(4)), {}};
    case NamedTag::C6bar:
      return {tag, "c6bar", MultiGraph(6, c6bar_edges()), {}};
    case NamedTag::K4minus:
      return {tag, "k4minus", MultiGraph(4, without(complete_edges(4), {0, 1})), {0, 1}};
    case NamedTag::C6barStar:
      return {tag, "c6barstar", MultiGraph(6, without(c6bar_edges(), {0, 3})), {0, 3}};
    case NamedTag::K33:
      return {tag, "k33", complete_bipartite(3, 3), {}};
    case NamedTag::H1:
      return {tag, "h1", h1_graph(), {}};
    case NamedTag::Cycle:
      break;  // cycles need a length; use named("c<k>") or cycle(k)
  }
  throw std::invalid_argument("unknown named graph tag");
}

NamedGraph named(const std::string& tag) {
  if (tag == "k2") return named(NamedTag::K2);
  if (tag == "k4") return named(NamedTag::K4);
  if (tag == "c6bar") return named(NamedTag::C6bar);
  if (tag == "k4minus") return named(NamedTag::K4minus);
  if (tag == "c6barstar") return named(NamedTag::C6barStar);
  if (tag == "k33") return named(NamedTag::K33);
  if (tag == "h1") return named(NamedTag::H1);
  if (tag.size() > 1 && tag[0] == 'c' &&
      std::all_of(tag.begin() + 1, tag.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    int k = std::stoi(tag.substr(1));
    return {NamedTag::Cycle, tag, cycle(k), {}};
  }
  throw std::invalid_argument("unknown named graph tag '" + tag + "'");
}

MultiGraph cycle(int k) {
  if (k < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < k; ++v) edges.emplace_back(v, (v + 1) % k);
  return MultiGraph(k, edges);
}

MultiGraph path_graph(int k) {
  if (k < 1) throw std::invalid_argument("path needs at least 1 vertex");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < k; ++v) edges.emplace_back(v, v + 1);
  return MultiGraph(k, edges);
}

MultiGraph complete(int k) { return MultiGraph(k, complete_edges(k)); }

MultiGraph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return MultiGraph(a + b, edges);
}

MultiGraph prism() { return circular_ladder(3); }

MultiGraph circular_ladder(int k) {
  if (k < 3) throw std::invalid_argument("circular ladder needs k >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < k; ++v) edges.emplace_back(v, (v + 1) % k);
  for (int v = 0; v < k; ++v) edges.emplace_back(k + v, k + (v + 1) % k);
  for (int v = 0; v < k; ++v) edges.emplace_back(v, k + v);
  return MultiGraph(2 * k, edges);
}

MultiGraph moebius_ladder(int k) {
  if (k < 2) throw std::invalid_argument("moebius ladder needs k >= 2");
  int n = 2 * k;
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  for (int v = 0; v < k; ++v) edges.emplace_back(v, v + k);
  return MultiGraph(n, edges);
}

MultiGraph cube_graph() {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < 8; ++v)
    for (int bit = 0; bit < 3; ++bit) {
      int w = v ^ (1 << bit);
      if (v < w) edges.emplace_back(v, w);
    }
  return MultiGraph(8, edges);
}

MultiGraph petersen() {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < 5; ++v) edges.emplace_back(v, (v + 1) % 5);
  for (int v = 0; v < 5; ++v) edges.emplace_back(5 + v, 5 + (v + 2) % 5);
  for (int v = 0; v < 5; ++v) edges.emplace_back(v, 5 + v);
  return MultiGraph(10, edges);
}

}  // namespace mcg
