#include "mcg/family.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mcg/canonical.hpp"
#include "mcg/named.hpp"
#include "mcg/structure.hpp"

namespace mcg {

namespace {

bool is_clique(const MultiGraph& g, const std::vector<int>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adjacent(vs[i], vs[j])) return false;
  return true;
}

std::vector<int> sorted_without(const std::vector<int>& vs, int gone) {
  std::vector<int> out;
  out.reserve(vs.size());
  for (int v : vs)
    if (v != gone) out.push_back(v);
  return out;
}

}  // namespace

std::optional<BisimplicialWitness> bisimplicial_vertex_at(const MultiGraph& g, int u) {
  const auto& nbrs = g.neighbors(u);
  if (nbrs.size() < 4) return std::nullopt;
  // components of the induced neighbourhood
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(nbrs.size(), 0);
  for (std::size_t s = 0; s < nbrs.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{static_cast<int>(s)};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t t = 0; t < nbrs.size(); ++t)
        if (!seen[t] && g.adjacent(nbrs[comp[i]], nbrs[t])) {
          seen[t] = 1;
          comp.push_back(static_cast<int>(t));
        }
    std::vector<int> verts;
    for (int idx : comp) verts.push_back(nbrs[idx]);
    std::sort(verts.begin(), verts.end());
    comps.push_back(std::move(verts));
  }
  if (comps.size() != 2) return std::nullopt;
  if (comps[0].size() < 2 || comps[1].size() < 2) return std::nullopt;
  if (!is_clique(g, comps[0]) || !is_clique(g, comps[1])) return std::nullopt;
  BisimplicialWitness w;
  w.kind = BisimplicialWitness::Kind::Vertex;
  w.vertex = u;
  if (comps[1] < comps[0]) std::swap(comps[0], comps[1]);
  w.clique_a = std::move(comps[0]);
  w.clique_b = std::move(comps[1]);
  return w;
}

std::optional<BisimplicialWitness> bisimplicial_edge_at(const MultiGraph& g, EdgeId e) {
  const Edge& ed = g.edge(e);
  BisimplicialWitness w;
  w.kind = BisimplicialWitness::Kind::Edge;
  w.edge = e;
  if (simple_is_k4(g)) {
    w.k4_convention = true;
    w.clique_a = sorted_without(g.neighbors(ed.u), ed.v);
    w.clique_b = sorted_without(g.neighbors(ed.v), ed.u);
    return w;
  }
  // clique_a belongs to the smaller endpoint
  std::vector<int> a = sorted_without(g.neighbors(ed.u), ed.v);
  std::vector<int> b = sorted_without(g.neighbors(ed.v), ed.u);
  if (a.size() < 2 || b.size() < 2) return std::nullopt;
  std::vector<int> inter;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
  if (!inter.empty()) return std::nullopt;
  if (!is_clique(g, a) || !is_clique(g, b)) return std::nullopt;
  w.clique_a = std::move(a);
  w.clique_b = std::move(b);
  return w;
}

std::vector<BisimplicialWitness> bisimplicial_vertices(const MultiGraph& g) {
  std::vector<BisimplicialWitness> out;
  for (int u = 0; u < g.vertex_count(); ++u)
    if (auto w = bisimplicial_vertex_at(g, u)) out.push_back(std::move(*w));
  return out;
}

std::vector<BisimplicialWitness> bisimplicial_edges(const MultiGraph& g) {
  std::vector<BisimplicialWitness> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (auto w = bisimplicial_edge_at(g, e)) out.push_back(std::move(*w));
  return out;
}

namespace {

BisimplicialWitness require_bis_vertex(const MultiGraph& g, int u, const char* op) {
  auto w = bisimplicial_vertex_at(g, u);
  if (!w)
    throw std::invalid_argument(std::string(op) + ": vertex " + std::to_string(u) +
                                " is not bisimplicial");
  return *w;
}

BisimplicialWitness require_bis_edge(const MultiGraph& g, EdgeId e, const char* op) {
  auto w = bisimplicial_edge_at(g, e);
  if (!w)
    throw std::invalid_argument(std::string(op) + ": edge " + std::to_string(e) +
                                " is not bisimplicial");
  return *w;
}

void require_even_order(const MultiGraph& g, const char* op) {
  if (g.vertex_count() % 2 != 0)
    throw std::invalid_argument(std::string(op) + ": operand order must be even");
}

bool contains(const std::vector<int>& sorted, int v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

}  // namespace

Construction replace_ridge(const MultiGraph& g, EdgeId e, Gadget gadget, int orient) {
  auto ridge_set = ridges(g);
  if (!std::binary_search(ridge_set.begin(), ridge_set.end(), e))
    throw std::invalid_argument("replace_ridge: edge is not a ridge");
  NamedGraph ng = named(gadget == Gadget::K4minus ? NamedTag::K4minus : NamedTag::C6barStar);
  const MultiGraph& gd = ng.graph;
  int d1 = ng.degree2_vertices[0], d2 = ng.degree2_vertices[1];
  int u1 = g.edge(e).u, u2 = g.edge(e).v;
  if (orient) std::swap(d1, d2);

  Construction res;
  res.vertex_map.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) res.vertex_map[v] = v;
  // gadget vertices other than the two attachment points become fresh indices
  std::vector<int> gmap(gd.vertex_count(), -1);
  gmap[d1] = u1;
  gmap[d2] = u2;
  int next = g.vertex_count();
  for (int v = 0; v < gd.vertex_count(); ++v)
    if (gmap[v] == -1) {
      gmap[v] = next++;
      res.new_vertices.push_back(gmap[v]);
    }

  std::vector<std::pair<int, int>> edges;
  res.edge_map.assign(g.edge_count(), -1);
  for (EdgeId f = 0; f < g.edge_count(); ++f) {
    if (f == e) continue;
    res.edge_map[f] = static_cast<EdgeId>(edges.size());
    edges.emplace_back(g.edge(f).u, g.edge(f).v);
  }
  for (const Edge& f : gd.edges()) {
    res.new_edges.push_back(static_cast<EdgeId>(edges.size()));
    edges.emplace_back(gmap[f.u], gmap[f.v]);
  }
  res.graph = MultiGraph(next, edges);
  return res;
}

Construction bisubdivide(const MultiGraph& g, EdgeId e, int path_len) {
  if (path_len < 3 || path_len % 2 == 0)
    throw std::invalid_argument("bisubdivide: path length must be odd and at least 3");
  int a = g.edge(e).u, b = g.edge(e).v;
  Construction res;
  res.vertex_map.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) res.vertex_map[v] = v;
  int n = g.vertex_count();
  for (int i = 0; i < path_len - 1; ++i) res.new_vertices.push_back(n + i);

  std::vector<std::pair<int, int>> edges;
  res.edge_map.assign(g.edge_count(), -1);
  for (EdgeId f = 0; f < g.edge_count(); ++f) {
    if (f == e) continue;
    res.edge_map[f] = static_cast<EdgeId>(edges.size());
    edges.emplace_back(g.edge(f).u, g.edge(f).v);
  }
  int prev = a;
  for (int i = 0; i < path_len - 1; ++i) {
    res.new_edges.push_back(static_cast<EdgeId>(edges.size()));
    edges.emplace_back(prev, n + i);
    prev = n + i;
  }
  res.new_edges.push_back(static_cast<EdgeId>(edges.size()));
  edges.emplace_back(prev, b);
  res.graph = MultiGraph(n + path_len - 1, edges);
  return res;
}

Construction expand_vertex(const MultiGraph& g, int u, int orient, int path_len) {
  if (path_len < 2 || path_len % 2 == 1)
    throw std::invalid_argument("expand_vertex: path length must be even and at least 2");
  auto w = require_bis_vertex(g, u, "expand_vertex");
  const auto& keep = orient == 0 ? w.clique_a : w.clique_b;  // stays with u'
  int n = g.vertex_count();
  int second = n + path_len - 1;  // u''; interior vertices are n .. n+path_len-2

  Construction res;
  res.vertex_map.resize(n);
  for (int v = 0; v < n; ++v) res.vertex_map[v] = v;  // u doubles as u'
  for (int i = 0; i < path_len; ++i) res.new_vertices.push_back(n + i);

  std::vector<std::pair<int, int>> edges;
  res.edge_map.assign(g.edge_count(), -1);
  for (EdgeId f = 0; f < g.edge_count(); ++f) {
    const Edge& ed = g.edge(f);
    res.edge_map[f] = static_cast<EdgeId>(edges.size());
    if (ed.u == u && !contains(keep, ed.v))
      edges.emplace_back(second, ed.v);
    else if (ed.v == u && !contains(keep, ed.u))
      edges.emplace_back(ed.u, second);
    else
      edges.emplace_back(ed.u, ed.v);
  }
  int prev = u;
  for (int i = 0; i < path_len - 1; ++i) {
    res.new_edges.push_back(static_cast<EdgeId>(edges.size()));
    edges.emplace_back(prev, n + i);
    prev = n + i;
  }
  res.new_edges.push_back(static_cast<EdgeId>(edges.size()));
  edges.emplace_back(prev, second);
  res.graph = MultiGraph(n + path_len, edges);
  return res;
}

Compound v_join(const MultiGraph& g1, int u1, const MultiGraph& g2, int u2, int orient) {
  require_even_order(g1, "v_join");
  require_even_order(g2, "v_join");
  auto w1 = require_bis_vertex(g1, u1, "v_join");
  auto w2 = require_bis_vertex(g2, u2, "v_join");
  int n1 = g1.vertex_count(), n2 = g2.vertex_count();
  int prime1 = u1, prime2 = n1 + u2;
  int second1 = n1 + n2, second2 = n1 + n2 + 1;
  const auto& keep1 = w1.clique_a;
  const auto& keep2 = orient == 0 ? w2.clique_a : w2.clique_b;

  Compound res;
  res.vertex_map1.resize(n1);
  for (int v = 0; v < n1; ++v) res.vertex_map1[v] = v;
  res.vertex_map2.resize(n2);
  for (int v = 0; v < n2; ++v) res.vertex_map2[v] = n1 + v;

  std::vector<std::pair<int, int>> edges;
  res.edge_map1.resize(g1.edge_count());
  for (EdgeId f = 0; f < g1.edge_count(); ++f) {
    const Edge& ed = g1.edge(f);
    int x = ed.u, y = ed.v;
    if (x == u1 && !contains(keep1, y)) x = second1;
    if (y == u1 && !contains(keep1, x)) y = second1;
    res.edge_map1[f] = static_cast<EdgeId>(edges.size());
    edges.emplace_back(x, y);
  }
  res.edge_map2.resize(g2.edge_count());
  for (EdgeId f = 0; f < g2.edge_count(); ++f) {
    const Edge& ed = g2.edge(f);
    int x = ed.u, y = ed.v;
    int nx = n1 + x, ny = n1 + y;
    if (x == u2) nx = contains(keep2, y) ? prime2 : second2;
    if (y == u2) ny = contains(keep2, x) ? prime2 : second2;
    res.edge_map2[f] = static_cast<EdgeId>(edges.size());
    edges.emplace_back(nx, ny);
  }
  res.new_edges.push_back(static_cast<EdgeId>(edges.size()));
  edges.emplace_back(prime1, prime2);
  res.new_edges.push_back(static_cast<EdgeId>(edges.size()));
  edges.emplace_back(second1, second2);
  res.graph = MultiGraph(n1 + n2 + 2, edges);
  return res;
}

Compound v_attach(const MultiGraph& g1, int u1, const MultiGraph& g2, int u2, int orient) {
  require_even_order(g1, "v_attach");
  require_even_order(g2, "v_attach");
  auto w1 = require_bis_vertex(g1, u1, "v_attach");
  auto w2 = require_bis_vertex(g2, u2, "v_attach");
  int n1 = g1.vertex_count(), n2 = g2.vertex_count();
  int prime = u1;              // u1' identified with u2'
  int second = n1 + n2 - 1;    // u1'' identified with u2''
  const auto& keep1 = w1.clique_a;
  const auto& keep2 = orient == 0 ? w2.clique_a : w2.clique_b;

  Compound res;
  res.vertex_map1.resize(n1);
  for (int v = 0; v < n1; ++v) res.vertex_map1[v] = v;
  res.vertex_map2.resize(n2);
  for (int v = 0; v < n2; ++v)
    res.vertex_map2[v] = v == u2 ? prime : n1 + (v < u2 ? v : v - 1);

  std::vector<std::pair<int, int>> edges;
  res.edge_map1.resize(g1.edge_count());
  for (EdgeId f = 0; f < g1.edge_count(); ++f) {
    const Edge& ed = g1.edge(f);
    int x = ed.u, y = ed.v;
    if (x == u1 && !contains(keep1, y)) x = second;
    if (y == u1 && !contains(keep1, x)) y = second;
    res.edge_map1[f] = static_cast<EdgeId>(edges.size());
    edges.emplace_back(x, y);
  }
  res.edge_map2.resize(g2.edge_count());
  for (EdgeId f = 0; f < g2.edge_count(); ++f) {
    const Edge& ed = g2.edge(f);
    int nx, ny;
    if (ed.u == u2)
      nx = contains(keep2, ed.v) ? prime : second;
    else
      nx = n1 + (ed.u < u2 ? ed.u : ed.u - 1);
    if (ed.v == u2)
      ny = contains(keep2, ed.u) ? prime : second;
    else
      ny = n1 + (ed.v < u2 ? ed.v : ed.v - 1);
    res.edge_map2[f] = static_cast<EdgeId>(edges.size());
    edges.emplace_back(nx, ny);
  }
  res.graph = MultiGraph(n1 + n2, edges);
  return res;
}

Compound e_join(const MultiGraph& g1, EdgeId e1, const MultiGraph& g2, EdgeId e2, int orient) {
  require_even_order(g1, "e_join");
  require_even_order(g2, "e_join");
  require_bis_edge(g1, e1, "e_join");
  require_bis_edge(g2, e2, "e_join");
  int n1 = g1.vertex_count();
  int a1 = g1.edge(e1).u, b1 = g1.edge(e1).v;
  int a2 = g2.edge(e2).u, b2 = g2.edge(e2).v;
  if (orient) std::swap(a2, b2);

  Compound res;
  res.vertex_map1.resize(n1);
  for (int v = 0; v < n1; ++v) res.vertex_map1[v] = v;
  res.vertex_map2.resize(g2.vertex_count());
  for (int v = 0; v < g2.vertex_count(); ++v) res.vertex_map2[v] = n1 + v;

  std::vector<std::pair<int, int>> edges;
  res.edge_map1.assign(g1.edge_count(), -1);
  for (EdgeId f = 0; f < g1.edge_count(); ++f) {
    if (f == e1) continue;
    res.edge_map1[f] = static_cast<EdgeId>(edges.size());
    edges.emplace_back(g1.edge(f).u, g1.edge(f).v);
  }
  res.edge_map2.assign(g2.edge_count(), -1);
  for (EdgeId f = 0; f < g2.edge_count(); ++f) {
    if (f == e2) continue;
    res.edge_map2[f] = static_cast<EdgeId>(edges.size());
    edges.emplace_back(n1 + g2.edge(f).u, n1 + g2.edge(f).v);
  }
  res.new_edges.push_back(static_cast<EdgeId>(edges.size()));
  edges.emplace_back(a1, n1 + a2);
  res.new_edges.push_back(static_cast<EdgeId>(edges.size()));
  edges.emplace_back(b1, n1 + b2);
  res.graph = MultiGraph(n1 + g2.vertex_count(), edges);
  return res;
}

Compound ev_attach(const MultiGraph& g1, EdgeId e1, const MultiGraph& g2, int u2, int orient) {
  require_even_order(g1, "ev_attach");
  require_even_order(g2, "ev_attach");
  require_bis_edge(g1, e1, "ev_attach");
  auto w2 = require_bis_vertex(g2, u2, "ev_attach");
  int n1 = g1.vertex_count(), n2 = g2.vertex_count();
  int a1 = g1.edge(e1).u, b1 = g1.edge(e1).v;
  if (orient & 1) std::swap(a1, b1);
  const auto& keep2 = (orient & 2) == 0 ? w2.clique_a : w2.clique_b;  // identified side
  int second = n1 + n2 - 1;  // u2''

  Compound res;
  res.vertex_map1.resize(n1);
  for (int v = 0; v < n1; ++v) res.vertex_map1[v] = v;
  res.vertex_map2.resize(n2);
  for (int v = 0; v < n2; ++v)
    res.vertex_map2[v] = v == u2 ? a1 : n1 + (v < u2 ? v : v - 1);

  std::vector<std::pair<int, int>> edges;
  res.edge_map1.assign(g1.edge_count(), -1);
  for (EdgeId f = 0; f < g1.edge_count(); ++f) {
    if (f == e1) continue;
    res.edge_map1[f] = static_cast<EdgeId>(edges.size());
    edges.emplace_back(g1.edge(f).u, g1.edge(f).v);
  }
  res.edge_map2.resize(g2.edge_count());
  for (EdgeId f = 0; f < g2.edge_count(); ++f) {
    const Edge& ed = g2.edge(f);
    int nx, ny;
    if (ed.u == u2)
      nx = contains(keep2, ed.v) ? a1 : second;
    else
      nx = n1 + (ed.u < u2 ? ed.u : ed.u - 1);
    if (ed.v == u2)
      ny = contains(keep2, ed.u) ? a1 : second;
    else
      ny = n1 + (ed.v < u2 ? ed.v : ed.v - 1);
    res.edge_map2[f] = static_cast<EdgeId>(edges.size());
    edges.emplace_back(nx, ny);
  }
  res.new_edges.push_back(static_cast<EdgeId>(edges.size()));
  edges.emplace_back(b1, second);
  res.graph = MultiGraph(n1 + n2, edges);
  return res;
}

MultiGraph splice(const MultiGraph& g1, int u1, const MultiGraph& g2, int u2,
                  const std::vector<int>& perm) {
  int d = g1.degree(u1);
  if (g2.degree(u2) != d)
    throw std::invalid_argument("splice: anchor degrees differ");
  if (static_cast<int>(perm.size()) != d)
    throw std::invalid_argument("splice: bijection size mismatch");
  std::vector<char> hit(d, 0);
  for (int p : perm) {
    if (p < 0 || p >= d || hit[p]) throw std::invalid_argument("splice: not a bijection");
    hit[p] = 1;
  }
  int n1 = g1.vertex_count(), n2 = g2.vertex_count();
  auto map1 = [&](int v) { return v < u1 ? v : v - 1; };
  auto map2 = [&](int v) { return (n1 - 1) + (v < u2 ? v : v - 1); };
  std::vector<std::pair<int, int>> edges;
  for (const Edge& e : g1.edges()) {
    if (e.u == u1 || e.v == u1) continue;
    edges.emplace_back(map1(e.u), map1(e.v));
  }
  for (const Edge& e : g2.edges()) {
    if (e.u == u2 || e.v == u2) continue;
    edges.emplace_back(map2(e.u), map2(e.v));
  }
  const auto& inc1 = g1.incident(u1);
  const auto& inc2 = g2.incident(u2);
  for (int i = 0; i < d; ++i)
    edges.emplace_back(map1(inc1[i].first), map2(inc2[perm[i]].first));
  return MultiGraph(n1 + n2 - 2, edges);
}

MultiGraph triangle_replace(const MultiGraph& g) {
  if (!is_simple(g) || !is_cubic(g))
    throw std::invalid_argument("triangle_replace needs a simple cubic graph");
  int n = g.vertex_count();
  auto port = [&](int v, int w) {
    const auto& nbrs = g.neighbors(v);
    int rank = static_cast<int>(std::lower_bound(nbrs.begin(), nbrs.end(), w) - nbrs.begin());
    return 3 * v + rank;
  };
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) {
    edges.emplace_back(3 * v, 3 * v + 1);
    edges.emplace_back(3 * v, 3 * v + 2);
    edges.emplace_back(3 * v + 1, 3 * v + 2);
  }
  for (const Edge& e : g.edges()) edges.emplace_back(port(e.u, e.v), port(e.v, e.u));
  return MultiGraph(3 * n, edges);
}

namespace {

EdgeId resolve_edge(const MultiGraph& g, int u, int v, const char* where) {
  auto e = g.find_edge(u, v);
  if (!e)
    throw std::invalid_argument(std::string(where) + ": no edge " + std::to_string(u) + "-" +
                                std::to_string(v) + " in the evaluated child");
  return *e;
}

}  // namespace

MultiGraph evaluate(const Recipe& r) {
  switch (r.kind) {
    case Recipe::Kind::K4:
      return named(NamedTag::K4).graph;
    case Recipe::Kind::C6bar:
      return named(NamedTag::C6bar).graph;
    case Recipe::Kind::ReplaceRidge: {
      MultiGraph child = evaluate(r.children.at(0));
      EdgeId e = resolve_edge(child, r.eu, r.ev, "replace");
      return replace_ridge(child, e, r.gadget, r.orient).graph;
    }
    case Recipe::Kind::Bisubdivide: {
      MultiGraph child = evaluate(r.children.at(0));
      EdgeId e = resolve_edge(child, r.eu, r.ev, "bisub");
      auto rs = ridges(child);
      if (!std::binary_search(rs.begin(), rs.end(), e))
        throw std::invalid_argument("bisub: recipe edge is not a ridge");
      return bisubdivide(child, e, r.path_len).graph;
    }
    case Recipe::Kind::ExpandVertex: {
      MultiGraph child = evaluate(r.children.at(0));
      return expand_vertex(child, r.va, r.orient, r.path_len).graph;
    }
    case Recipe::Kind::VJoin: {
      MultiGraph c1 = evaluate(r.children.at(0));
      MultiGraph c2 = evaluate(r.children.at(1));
      return v_join(c1, r.va, c2, r.vb, r.orient).graph;
    }
    case Recipe::Kind::VAttach: {
      MultiGraph c1 = evaluate(r.children.at(0));
      MultiGraph c2 = evaluate(r.children.at(1));
      return v_attach(c1, r.va, c2, r.vb, r.orient).graph;
    }
    case Recipe::Kind::EJoin: {
      MultiGraph c1 = evaluate(r.children.at(0));
      MultiGraph c2 = evaluate(r.children.at(1));
      EdgeId e1 = resolve_edge(c1, r.eu, r.ev, "ejoin");
      EdgeId e2 = resolve_edge(c2, r.eu2, r.ev2, "ejoin");
      return e_join(c1, e1, c2, e2, r.orient).graph;
    }
    case Recipe::Kind::EVAttach: {
      MultiGraph c1 = evaluate(r.children.at(0));
      MultiGraph c2 = evaluate(r.children.at(1));
      EdgeId e1 = resolve_edge(c1, r.eu, r.ev, "evattach");
      return ev_attach(c1, e1, c2, r.vb, r.orient).graph;
    }
  }
  throw std::logic_error("unknown recipe kind");
}

namespace {

void print_recipe(const Recipe& r, std::ostringstream& out) {
  switch (r.kind) {
    case Recipe::Kind::K4:
      out << "(k4)";
      return;
    case Recipe::Kind::C6bar:
      out << "(c6bar)";
      return;
    case Recipe::Kind::ReplaceRidge:
      out << "(replace ";
      print_recipe(r.children[0], out);
      out << " ridge=" << r.eu << "-" << r.ev
          << " gadget=" << (r.gadget == Gadget::K4minus ? "k4minus" : "c6barstar")
          << " orient=" << r.orient << ")";
      return;
    case Recipe::Kind::Bisubdivide:
      out << "(bisub ";
      print_recipe(r.children[0], out);
      out << " edge=" << r.eu << "-" << r.ev << " len=" << r.path_len << ")";
      return;
    case Recipe::Kind::ExpandVertex:
      out << "(expand ";
      print_recipe(r.children[0], out);
      out << " v=" << r.va << " len=" << r.path_len << " orient=" << r.orient << ")";
      return;
    case Recipe::Kind::VJoin:
    case Recipe::Kind::VAttach:
      out << (r.kind == Recipe::Kind::VJoin ? "(vjoin " : "(vattach ");
      print_recipe(r.children[0], out);
      out << " ";
      print_recipe(r.children[1], out);
      out << " v1=" << r.va << " v2=" << r.vb << " orient=" << r.orient << ")";
      return;
    case Recipe::Kind::EJoin:
      out << "(ejoin ";
      print_recipe(r.children[0], out);
      out << " ";
      print_recipe(r.children[1], out);
      out << " e1=" << r.eu << "-" << r.ev << " e2=" << r.eu2 << "-" << r.ev2
          << " orient=" << r.orient << ")";
      return;
    case Recipe::Kind::EVAttach:
      out << "(evattach ";
      print_recipe(r.children[0], out);
      out << " ";
      print_recipe(r.children[1], out);
      out << " e1=" << r.eu << "-" << r.ev << " v2=" << r.vb << " orient=" << r.orient << ")";
      return;
  }
}

struct Tokenizer {
  std::vector<std::string> tokens;
  std::size_t pos = 0;

  explicit Tokenizer(const std::string& text) {
    std::string cur;
    for (char c : text) {
      if (c == '(' || c == ')') {
        if (!cur.empty()) {
          tokens.push_back(cur);
          cur.clear();
        }
        tokens.push_back(std::string(1, c));
      } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        if (!cur.empty()) {
          tokens.push_back(cur);
          cur.clear();
        }
      } else {
        cur.push_back(c);
      }
    }
    if (!cur.empty()) tokens.push_back(cur);
  }

  const std::string& peek() const {
    if (pos >= tokens.size()) throw std::invalid_argument("recipe parse: unexpected end");
    return tokens[pos];
  }
  std::string next() {
    auto t = peek();
    ++pos;
    return t;
  }
  void expect(const std::string& t) {
    if (next() != t) throw std::invalid_argument("recipe parse: expected '" + t + "'");
  }
  bool done() const { return pos >= tokens.size(); }
};

std::pair<std::string, std::string> split_kv(const std::string& tok) {
  auto eq = tok.find('=');
  if (eq == std::string::npos)
    throw std::invalid_argument("recipe parse: expected key=value, got '" + tok + "'");
  return {tok.substr(0, eq), tok.substr(eq + 1)};
}

std::pair<int, int> parse_endpoints(const std::string& val) {
  auto dash = val.find('-');
  if (dash == std::string::npos)
    throw std::invalid_argument("recipe parse: expectedated u-v edge, got '" + val + "'");
  return {std::stoi(val.substr(0, dash)), std::stoi(val.substr(dash + 1))};
}

Recipe parse_node(Tokenizer& tz) {
  tz.expect("(");
  std::string head = tz.next();
  Recipe r;
  auto read_params = [&](int n_children) {
    for (int i = 0; i < n_children; ++i) r.children.push_back(parse_node(tz));
    while (tz.peek() != ")") {
      auto [key, val] = split_kv(tz.next());
      if (key == "ridge" || key == "edge" || key == "e1") {
        auto [u, v] = parse_endpoints(val);
        r.eu = u;
        r.ev = v;
      } else if (key == "e2") {
        auto [u, v] = parse_endpoints(val);
        r.eu2 = u;
        r.ev2 = v;
      } else if (key == "v" || key == "v1") {
        r.va = std::stoi(val);
      } else if (key == "v2") {
        r.vb = std::stoi(val);
      } else if (key == "gadget") {
        if (val == "k4minus")
          r.gadget = Gadget::K4minus;
        else if (val == "c6barstar")
          r.gadget = Gadget::C6barStar;
        else
          throw std::invalid_argument("recipe parse: unknown gadget '" + val + "'");
      } else if (key == "orient") {
        r.orient = std::stoi(val);
      } else if (key == "len") {
        r.path_len = std::stoi(val);
      } else {
        throw std::invalid_argument("recipe parse: unknown key '" + key + "'");
      }
    }
    tz.expect(")");
  };
  if (head == "k4") {
    r.kind = Recipe::Kind::K4;
    read_params(0);
  } else if (head == "c6bar") {
    r.kind = Recipe::Kind::C6bar;
    read_params(0);
  } else if (head == "replace") {
    r.kind = Recipe::Kind::ReplaceRidge;
    read_params(1);
  } else if (head == "bisub") {
    r.kind = Recipe::Kind::Bisubdivide;
    read_params(1);
  } else if (head == "expand") {
    r.kind = Recipe::Kind::ExpandVertex;
    read_params(1);
  } else if (head == "vjoin") {
    r.kind = Recipe::Kind::VJoin;
    read_params(2);
  } else if (head == "vattach") {
    r.kind = Recipe::Kind::VAttach;
    read_params(2);
  } else if (head == "ejoin") {
    r.kind = Recipe::Kind::EJoin;
    read_params(2);
  } else if (head == "evattach") {
    r.kind = Recipe::Kind::EVAttach;
    read_params(2);
  } else {
    throw std::invalid_argument("recipe parse: unknown operation '" + head + "'");
  }
  return r;
}

}  // namespace

std::string to_sexpr(const Recipe& r) {
  std::ostringstream out;
  print_recipe(r, out);
  return out.str();
}

Recipe parse_recipe(const std::string& text) {
  Tokenizer tz(text);
  Recipe r = parse_node(tz);
  if (!tz.done()) throw std::invalid_argument("recipe parse: trailing tokens");
  return r;
}

// ---------------------------------------------------------------------------
// family generation

namespace {

struct Pool {
  std::vector<std::pair<Recipe, MultiGraph>> members;
  std::set<std::string> seen;

  bool add(Recipe r, MultiGraph g) {
    if (!seen.insert(canonical_form(g)).second) return false;
    members.emplace_back(std::move(r), std::move(g));
    return true;
  }
};

Recipe leaf_recipe(Recipe::Kind kind) {
  Recipe r;
  r.kind = kind;
  return r;
}

Recipe wrap_replace(const Recipe& child, const MultiGraph& child_graph, EdgeId e, Gadget gadget,
                    int orient) {
  Recipe r;
  r.kind = Recipe::Kind::ReplaceRidge;
  r.children = {child};
  r.eu = child_graph.edge(e).u;
  r.ev = child_graph.edge(e).v;
  r.gadget = gadget;
  r.orient = orient;
  return r;
}

void close_under_replacement(Pool& pool, int max_n) {
  for (std::size_t i = 0; i < pool.members.size(); ++i) {
    Recipe rec = pool.members[i].first;
    MultiGraph g = pool.members[i].second;  // copies: the vector may reallocate
    for (EdgeId e : ridges(g)) {
      for (Gadget gad : {Gadget::K4minus, Gadget::C6barStar}) {
        int grow = gad == Gadget::K4minus ? 2 : 4;
        if (g.vertex_count() + grow > max_n) continue;
        auto out = replace_ridge(g, e, gad, 0);
        pool.add(wrap_replace(rec, g, e, gad, 0), std::move(out.graph));
      }
    }
  }
}

void close_under_compounds(Pool& pool, int max_n) {
  for (std::size_t i = 0; i < pool.members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      // copies again: pool.members grows inside the loop
      auto [rec1, h1] = pool.members[i];
      auto [rec2, h2] = pool.members[j];
      int n1 = h1.vertex_count(), n2 = h2.vertex_count();
      auto verts1 = bisimplicial_vertices(h1);
      auto verts2 = bisimplicial_vertices(h2);
      auto edges1 = bisimplicial_edges(h1);
      auto edges2 = bisimplicial_edges(h2);

      if (n1 + n2 + 2 <= max_n) {
        for (const auto& wa : verts1)
          for (const auto& wb : verts2)
            for (int orient : {0, 1}) {
              Recipe r;
              r.kind = Recipe::Kind::VJoin;
              r.children = {rec1, rec2};
              r.va = wa.vertex;
              r.vb = wb.vertex;
              r.orient = orient;
              pool.add(std::move(r), v_join(h1, wa.vertex, h2, wb.vertex, orient).graph);
            }
      }
      if (n1 + n2 <= max_n) {
        for (const auto& wa : verts1)
          for (const auto& wb : verts2)
            for (int orient : {0, 1}) {
              Recipe r;
              r.kind = Recipe::Kind::VAttach;
              r.children = {rec1, rec2};
              r.va = wa.vertex;
              r.vb = wb.vertex;
              r.orient = orient;
              pool.add(std::move(r), v_attach(h1, wa.vertex, h2, wb.vertex, orient).graph);
            }
        for (const auto& wa : edges1)
          for (const auto& wb : edges2)
            for (int orient : {0, 1}) {
              Recipe r;
              r.kind = Recipe::Kind::EJoin;
              r.children = {rec1, rec2};
              r.eu = h1.edge(wa.edge).u;
              r.ev = h1.edge(wa.edge).v;
              r.eu2 = h2.edge(wb.edge).u;
              r.ev2 = h2.edge(wb.edge).v;
              r.orient = orient;
              pool.add(std::move(r), e_join(h1, wa.edge, h2, wb.edge, orient).graph);
            }
        // ev_attach is asymmetric; try both argument orders
        for (int flip = 0; flip < 2; ++flip) {
          if (flip == 1 && i == j) break;
          const auto& ea = flip == 0 ? edges1 : edges2;
          const auto& vb = flip == 0 ? verts2 : verts1;
          const auto& ga = flip == 0 ? h1 : h2;
          const auto& gb = flip == 0 ? h2 : h1;
          const auto& ra = flip == 0 ? rec1 : rec2;
          const auto& rb = flip == 0 ? rec2 : rec1;
          for (const auto& wa : ea)
            for (const auto& wb : vb)
              for (int orient : {0, 1, 2, 3}) {
                Recipe r;
                r.kind = Recipe::Kind::EVAttach;
                r.children = {ra, rb};
                r.eu = ga.edge(wa.edge).u;
                r.ev = ga.edge(wa.edge).v;
                r.vb = wb.vertex;
                r.orient = orient;
                pool.add(std::move(r), ev_attach(ga, wa.edge, gb, wb.vertex, orient).graph);
              }
        }
      }
    }
  }
}

void close_under_expansions(Pool& pool, int max_n) {
  for (std::size_t i = 0; i < pool.members.size(); ++i) {
    Recipe rec = pool.members[i].first;
    MultiGraph g = pool.members[i].second;
    if (g.vertex_count() + 2 > max_n) continue;
    for (EdgeId e : ridges(g)) {
      Recipe r;
      r.kind = Recipe::Kind::Bisubdivide;
      r.children = {rec};
      r.eu = g.edge(e).u;
      r.ev = g.edge(e).v;
      r.path_len = 3;
      pool.add(std::move(r), bisubdivide(g, e, 3).graph);
    }
    for (const auto& w : bisimplicial_vertices(g)) {
      Recipe r;
      r.kind = Recipe::Kind::ExpandVertex;
      r.children = {rec};
      r.va = w.vertex;
      r.path_len = 2;
      pool.add(std::move(r), expand_vertex(g, w.vertex, 0, 2).graph);
    }
  }
}

struct Sampler {
  std::mt19937_64 rng;
  explicit Sampler(std::uint64_t seed) : rng(seed) {}

  int pick(int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); }
  bool coin() { return (rng() & 1) != 0; }

  std::optional<std::pair<Recipe, MultiGraph>> random_g_member(int budget) {
    std::pair<Recipe, MultiGraph> cur;
    if (budget >= 6 && coin())
      cur = {leaf_recipe(Recipe::Kind::C6bar), named(NamedTag::C6bar).graph};
    else if (budget >= 4)
      cur = {leaf_recipe(Recipe::Kind::K4), named(NamedTag::K4).graph};
    else
      return std::nullopt;
    while (coin()) {
      auto rs = ridges(cur.second);
      if (rs.empty()) break;
      Gadget gad = coin() ? Gadget::C6barStar : Gadget::K4minus;
      int grow = gad == Gadget::K4minus ? 2 : 4;
      if (cur.second.vertex_count() + grow > budget) {
        gad = Gadget::K4minus;
        grow = 2;
        if (cur.second.vertex_count() + grow > budget) break;
      }
      EdgeId e = rs[pick(static_cast<int>(rs.size()))];
      auto out = replace_ridge(cur.second, e, gad, 0);
      cur = {wrap_replace(cur.first, cur.second, e, gad, 0), std::move(out.graph)};
    }
    return cur;
  }

  std::optional<std::pair<Recipe, MultiGraph>> random_f_member(int budget, int depth = 0) {
    if (budget < 8 || depth > 4 || coin()) return random_g_member(budget);
    int b1 = 4 + pick(std::max(1, budget - 8));
    int b2 = budget - b1;
    auto c1 = random_f_member(std::max(4, b1), depth + 1);
    auto c2 = random_f_member(std::max(4, b2), depth + 1);
    if (!c1 || !c2) return std::nullopt;
    const auto& [r1, h1] = *c1;
    const auto& [r2, h2] = *c2;
    int n1 = h1.vertex_count(), n2 = h2.vertex_count();
    auto verts1 = bisimplicial_vertices(h1);
    auto verts2 = bisimplicial_vertices(h2);
    auto edges1 = bisimplicial_edges(h1);
    auto edges2 = bisimplicial_edges(h2);
    // candidate ops under the vertex budget
    std::vector<int> ops;
    if (n1 + n2 + 2 <= budget && !verts1.empty() && !verts2.empty()) ops.push_back(0);
    if (n1 + n2 <= budget && !verts1.empty() && !verts2.empty()) ops.push_back(1);
    if (n1 + n2 <= budget && !edges1.empty() && !edges2.empty()) ops.push_back(2);
    if (n1 + n2 <= budget && !edges1.empty() && !verts2.empty()) ops.push_back(3);
    if (ops.empty()) return std::nullopt;
    int op = ops[pick(static_cast<int>(ops.size()))];
    Recipe r;
    r.children = {r1, r2};
    switch (op) {
      case 0: {
        r.kind = Recipe::Kind::VJoin;
        r.va = verts1[pick(static_cast<int>(verts1.size()))].vertex;
        r.vb = verts2[pick(static_cast<int>(verts2.size()))].vertex;
        r.orient = pick(2);
        return {{r, v_join(h1, r.va, h2, r.vb, r.orient).graph}};
      }
      case 1: {
        r.kind = Recipe::Kind::VAttach;
        r.va = verts1[pick(static_cast<int>(verts1.size()))].vertex;
        r.vb = verts2[pick(static_cast<int>(verts2.size()))].vertex;
        r.orient = pick(2);
        return {{r, v_attach(h1, r.va, h2, r.vb, r.orient).graph}};
      }
      case 2: {
        r.kind = Recipe::Kind::EJoin;
        EdgeId e1 = edges1[pick(static_cast<int>(edges1.size()))].edge;
        EdgeId e2 = edges2[pick(static_cast<int>(edges2.size()))].edge;
        r.eu = h1.edge(e1).u;
        r.ev = h1.edge(e1).v;
        r.eu2 = h2.edge(e2).u;
        r.ev2 = h2.edge(e2).v;
        r.orient = pick(2);
        return {{r, e_join(h1, e1, h2, e2, r.orient).graph}};
      }
      default: {
        r.kind = Recipe::Kind::EVAttach;
        EdgeId e1 = edges1[pick(static_cast<int>(edges1.size()))].edge;
        r.eu = h1.edge(e1).u;
        r.ev = h1.edge(e1).v;
        r.vb = verts2[pick(static_cast<int>(verts2.size()))].vertex;
        r.orient = pick(4);
        return {{r, ev_attach(h1, e1, h2, r.vb, r.orient).graph}};
      }
    }
  }

  std::optional<std::pair<Recipe, MultiGraph>> random_expansion(int budget) {
    auto base = random_f_member(budget);
    if (!base) return std::nullopt;
    auto cur = *base;
    int steps = pick(4);
    for (int s = 0; s < steps; ++s) {
      bool subdivide = coin();
      if (subdivide) {
        auto rs = ridges(cur.second);
        if (rs.empty()) continue;
        int len = coin() ? 3 : 5;
        if (cur.second.vertex_count() + len - 1 > budget) len = 3;
        if (cur.second.vertex_count() + len - 1 > budget) continue;
        EdgeId e = rs[pick(static_cast<int>(rs.size()))];
        Recipe r;
        r.kind = Recipe::Kind::Bisubdivide;
        r.children = {cur.first};
        r.eu = cur.second.edge(e).u;
        r.ev = cur.second.edge(e).v;
        r.path_len = len;
        cur = {r, bisubdivide(cur.second, e, len).graph};
      } else {
        auto ws = bisimplicial_vertices(cur.second);
        if (ws.empty()) continue;
        int len = coin() ? 2 : 4;
        if (cur.second.vertex_count() + len > budget) len = 2;
        if (cur.second.vertex_count() + len > budget) continue;
        const auto& w = ws[pick(static_cast<int>(ws.size()))];
        Recipe r;
        r.kind = Recipe::Kind::ExpandVertex;
        r.children = {cur.first};
        r.va = w.vertex;
        r.path_len = len;
        cur = {r, expand_vertex(cur.second, w.vertex, 0, len).graph};
      }
    }
    return cur;
  }
};

}  // namespace

std::vector<std::pair<Recipe, MultiGraph>> generate_family(Family family, int max_n,
                                                           std::uint64_t seed,
                                                           const FamilyOptions& opts) {
  if (max_n < 4) throw std::invalid_argument("generate_family needs max_n >= 4");
  Pool pool;
  int exhaustive_to = std::min(max_n, opts.exhaustive_threshold);
  if (exhaustive_to >= 4)
    pool.add(leaf_recipe(Recipe::Kind::K4), named(NamedTag::K4).graph);
  if (exhaustive_to >= 6)
    pool.add(leaf_recipe(Recipe::Kind::C6bar), named(NamedTag::C6bar).graph);
  close_under_replacement(pool, exhaustive_to);
  if (family != Family::G) close_under_compounds(pool, exhaustive_to);
  if (family == Family::ExpansionsOfF) close_under_expansions(pool, exhaustive_to);

  if (max_n > opts.exhaustive_threshold) {
    Sampler sampler(seed == 0 ? 0x9e3779b97f4a7c15ull : seed);
    int added = 0;
    for (int attempt = 0; attempt < opts.sample_attempts && added < opts.sample_count;
         ++attempt) {
      std::optional<std::pair<Recipe, MultiGraph>> got;
      switch (family) {
        case Family::G:
          got = sampler.random_g_member(max_n);
          break;
        case Family::F:
          got = sampler.random_f_member(max_n);
          break;
        case Family::ExpansionsOfF:
          got = sampler.random_expansion(max_n);
          break;
      }
      if (!got || got->second.vertex_count() > max_n) continue;
      if (pool.add(std::move(got->first), std::move(got->second))) ++added;
    }
  }
  return pool.members;
}

std::vector<std::pair<Recipe, MultiGraph>> sample_family_recipes(Family family, int max_n,
                                                                 std::uint64_t seed,
                                                                 int count) {
  if (max_n < 4) throw std::invalid_argument("sample_family_recipes needs max_n >= 4");
  Sampler sampler(seed == 0 ? 0x9e3779b97f4a7c15ull : seed);
  std::vector<std::pair<Recipe, MultiGraph>> out;
  int attempts = 0, budget = count * 200;
  while (static_cast<int>(out.size()) < count && attempts++ < budget) {
    std::optional<std::pair<Recipe, MultiGraph>> got;
    switch (family) {
      case Family::G:
        got = sampler.random_g_member(max_n);
        break;
      case Family::F:
        got = sampler.random_f_member(max_n);
        break;
      case Family::ExpansionsOfF:
        got = sampler.random_expansion(max_n);
        break;
    }
    if (got && got->second.vertex_count() <= max_n) out.push_back(std::move(*got));
  }
  return out;
}

}  // namespace mcg
