#include "mcg/recognize.hpp"

#include <algorithm>
#include <stdexcept>

#include "mcg/barrier.hpp"
#include "mcg/canonical.hpp"
#include "mcg/matching.hpp"
#include "mcg/named.hpp"
#include "mcg/structure.hpp"
#include "mcg/tightcut.hpp"

namespace mcg {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::MinimalSpecial:
      return "minimal_special";
    case Verdict::MinimalWithCertificate:
      return "minimal_with_certificate";
    case Verdict::NotMinimal:
      return "not_minimal";
    case Verdict::NotApplicable:
      return "not_applicable";
  }
  return "unknown";
}

namespace {

// recipe + its evaluated graph + isomorphism from the parsed graph to it
struct Parsed {
  Recipe recipe;
  MultiGraph eval;
  std::vector<int> iso;
};

std::optional<Parsed> parse_minimal(const MultiGraph& g);

bool minimal_claw_free_mc(const MultiGraph& g) {
  return is_simple(g) && is_connected(g) && is_claw_free(g) && is_matching_covered(g) &&
         removable_edges(g).empty();
}

std::optional<Parsed> match_leaf(const MultiGraph& g) {
  for (auto [kind, tag] :
       {std::pair{Recipe::Kind::K4, NamedTag::K4}, {Recipe::Kind::C6bar, NamedTag::C6bar}}) {
    NamedGraph ng = named(tag);
    if (g.vertex_count() != ng.graph.vertex_count() ||
        g.edge_count() != ng.graph.edge_count())
      continue;
    if (auto iso = find_isomorphism(g, ng.graph)) {
      Recipe r;
      r.kind = kind;
      return Parsed{std::move(r), std::move(ng.graph), std::move(*iso)};
    }
  }
  return std::nullopt;
}

// --- degree-2 path reduction ------------------------------------------------

std::vector<int> degree2_path_through(const MultiGraph& g, int v) {
  auto walk = [&](int first) {
    std::vector<int> seq;
    int prev = v, cur = first;
    int guard = g.vertex_count() + 1;
    while (g.degree(cur) == 2 && guard-- > 0) {
      seq.push_back(cur);
      const auto& nbrs = g.neighbors(cur);
      int next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
      prev = cur;
      cur = next;
    }
    seq.push_back(cur);
    return seq;
  };
  auto left = walk(g.neighbors(v)[0]);
  auto right = walk(g.neighbors(v)[1]);
  std::vector<int> seq(left.rbegin(), left.rend());
  seq.push_back(v);
  seq.insert(seq.end(), right.begin(), right.end());
  if (seq.front() > seq.back()) std::reverse(seq.begin(), seq.end());
  return seq;
}

std::optional<Parsed> parse_degree2(const MultiGraph& g, int v) {
  auto seq = degree2_path_through(g, v);
  int u1 = seq.front(), uk = seq.back();
  if (u1 == uk || g.degree(u1) < 3 || g.degree(uk) < 3) return std::nullopt;
  if (g.adjacent(u1, uk)) return std::nullopt;
  std::vector<int> internals(seq.begin() + 1, seq.end() - 1);
  int path_len = static_cast<int>(seq.size()) - 1;

  if (path_len % 2 == 0) {
    // even path: the endpoints merge into one bisimplicial vertex
    auto del = delete_vertices(g, internals);
    Identification ident;
    try {
      ident = identify_vertices(del.graph, del.vertex_map[u1], del.vertex_map[uk]);
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
    const MultiGraph& h = ident.graph;
    int xstar = ident.vertex_map[del.vertex_map[u1]];
    if (!minimal_claw_free_mc(h)) return std::nullopt;
    if (!bisimplicial_vertex_at(h, xstar)) return std::nullopt;
    auto sub = parse_minimal(h);
    if (!sub) return std::nullopt;
    int anchor = sub->iso[xstar];
    for (int orient : {0, 1}) {
      auto built = expand_vertex(sub->eval, anchor, orient, path_len);
      if (auto iso = find_isomorphism(g, built.graph)) {
        Recipe r;
        r.kind = Recipe::Kind::ExpandVertex;
        r.children = {sub->recipe};
        r.va = anchor;
        r.path_len = path_len;
        r.orient = orient;
        return Parsed{std::move(r), std::move(built.graph), std::move(*iso)};
      }
    }
    return std::nullopt;
  }

  // odd path: the path contracts back to a single ridge
  auto del = delete_vertices(g, internals);
  MultiGraph h = with_edge(del.graph, del.vertex_map[u1], del.vertex_map[uk]);
  EdgeId estar = h.edge_count() - 1;
  if (!minimal_claw_free_mc(h)) return std::nullopt;
  auto rs = ridges(h);
  if (!std::binary_search(rs.begin(), rs.end(), estar)) return std::nullopt;
  auto sub = parse_minimal(h);
  if (!sub) return std::nullopt;
  int ea = sub->iso[del.vertex_map[u1]];
  int eb = sub->iso[del.vertex_map[uk]];
  auto eid = sub->eval.find_edge(ea, eb);
  if (!eid) return std::nullopt;
  auto built = bisubdivide(sub->eval, *eid, path_len);
  if (auto iso = find_isomorphism(g, built.graph)) {
    Recipe r;
    r.kind = Recipe::Kind::Bisubdivide;
    r.children = {sub->recipe};
    r.eu = ea;
    r.ev = eb;
    r.path_len = path_len;
    return Parsed{std::move(r), std::move(built.graph), std::move(*iso)};
  }
  return std::nullopt;
}

// --- bicritical base: un-replace an embedded gadget --------------------------

std::optional<Parsed> parse_g_member(const MultiGraph& g);

std::optional<Parsed> try_unreplace(const MultiGraph& g, const std::vector<int>& internals,
                                    int a, int b, Gadget gadget) {
  auto del = delete_vertices(g, internals);
  MultiGraph h = with_edge(del.graph, del.vertex_map[a], del.vertex_map[b]);
  EdgeId estar = h.edge_count() - 1;
  if (!minimal_claw_free_mc(h)) return std::nullopt;
  auto rs = ridges(h);
  if (!std::binary_search(rs.begin(), rs.end(), estar)) return std::nullopt;
  auto sub = parse_g_member(h);
  if (!sub) return std::nullopt;
  int ea = sub->iso[del.vertex_map[a]];
  int eb = sub->iso[del.vertex_map[b]];
  auto eid = sub->eval.find_edge(ea, eb);
  if (!eid) return std::nullopt;
  for (int orient : {0, 1}) {
    auto built = replace_ridge(sub->eval, *eid, gadget, orient);
    if (auto iso = find_isomorphism(g, built.graph)) {
      Recipe r;
      r.kind = Recipe::Kind::ReplaceRidge;
      r.children = {sub->recipe};
      r.eu = ea;
      r.ev = eb;
      r.gadget = gadget;
      r.orient = orient;
      return Parsed{std::move(r), std::move(built.graph), std::move(*iso)};
    }
  }
  return std::nullopt;
}

std::optional<Parsed> parse_g_member(const MultiGraph& g) {
  if (auto leaf = match_leaf(g)) return leaf;
  int n = g.vertex_count();

  // embedded K4minus: two adjacent internal degree-3 vertices sharing both
  // outer neighbours
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    int s1 = g.edge(e).u, s2 = g.edge(e).v;
    if (g.degree(s1) != 3 || g.degree(s2) != 3) continue;
    std::vector<int> a_side, b_side;
    for (int w : g.neighbors(s1))
      if (w != s2) a_side.push_back(w);
    for (int w : g.neighbors(s2))
      if (w != s1) b_side.push_back(w);
    if (a_side != b_side || a_side.size() != 2) continue;
    int a = a_side[0], b = a_side[1];
    if (g.adjacent(a, b)) continue;
    if (auto p = try_unreplace(g, {s1, s2}, a, b, Gadget::K4minus)) return p;
  }

  // embedded C6barStar: four internal degree-3 vertices with exactly two
  // outer attachment vertices, matching the gadget up to isomorphism
  const MultiGraph gadget = named(NamedTag::C6barStar).graph;
  std::vector<int> pick;
  auto scan = [&](auto&& self) -> std::optional<Parsed> {
    if (pick.size() == 4) {
      std::vector<char> in_s(n, 0);
      for (int s : pick) in_s[s] = 1;
      std::vector<int> outside;
      for (int s : pick) {
        if (g.degree(s) != 3) return std::nullopt;
        for (int w : g.neighbors(s))
          if (!in_s[w]) outside.push_back(w);
      }
      std::sort(outside.begin(), outside.end());
      outside.erase(std::unique(outside.begin(), outside.end()), outside.end());
      if (outside.size() != 2) return std::nullopt;
      int a = outside[0], b = outside[1];
      if (g.adjacent(a, b)) return std::nullopt;
      std::vector<int> occupied(pick);
      occupied.push_back(a);
      occupied.push_back(b);
      std::sort(occupied.begin(), occupied.end());
      std::vector<int> rest;
      for (int v = 0; v < n; ++v)
        if (!std::binary_search(occupied.begin(), occupied.end(), v)) rest.push_back(v);
      auto induced = delete_vertices(g, rest);
      if (induced.graph.edge_count() != gadget.edge_count()) return std::nullopt;
      if (induced.graph.degree(induced.vertex_map[a]) != 2 ||
          induced.graph.degree(induced.vertex_map[b]) != 2)
        return std::nullopt;
      if (!is_isomorphic(induced.graph, gadget)) return std::nullopt;
      return try_unreplace(g, pick, a, b, Gadget::C6barStar);
    }
    int start = pick.empty() ? 0 : pick.back() + 1;
    for (int s = start; s < n; ++s) {
      if (g.degree(s) != 3) continue;
      pick.push_back(s);
      if (auto p = self(self)) return p;
      pick.pop_back();
    }
    return std::nullopt;
  };
  return scan(scan);
}

// --- 2-barrier split ----------------------------------------------------------

int edges_into(const MultiGraph& g, int v, const std::vector<char>& side) {
  int count = 0;
  for (const auto& [w, id] : g.incident(v))
    if (side[w]) ++count;
  return count;
}

int single_neighbor_in(const MultiGraph& g, int v, const std::vector<char>& side) {
  for (const auto& [w, id] : g.incident(v))
    if (side[w]) return w;
  return -1;
}

struct SplitSide {
  std::vector<int> vertices;
  std::vector<char> mask;
  Contraction contraction;  // of the side itself (rest shrinks to w)
  int w = -1;               // shrunk vertex in the contraction
};

std::optional<Parsed> parse_with_barrier_at(const MultiGraph& g, int u, int v) {
  int n = g.vertex_count();
  std::vector<char> removed(n, 0);
  removed[u] = removed[v] = 1;
  auto comps = components_after_removal(g, removed);
  if (comps.size() != 2) return std::nullopt;
  if (comps[0].size() % 2 == 0 || comps[1].size() % 2 == 0) return std::nullopt;
  if (g.adjacent(u, v)) return std::nullopt;

  SplitSide sides[2];
  for (int i = 0; i < 2; ++i) {
    sides[i].vertices = comps[i];
    sides[i].mask.assign(n, 0);
    for (int x : comps[i]) sides[i].mask[x] = 1;
  }
  int nu[2], nv[2];
  for (int i = 0; i < 2; ++i) {
    nu[i] = edges_into(g, u, sides[i].mask);
    nv[i] = edges_into(g, v, sides[i].mask);
    // 2-connectivity puts a neighbour of each barrier vertex in each side
    if (nu[i] < 1 || nv[i] < 1) return std::nullopt;
  }

  int boundary[2] = {nu[0] + nv[0], nu[1] + nv[1]};

  // case 1: one side is attached by just two edges; un-do a v_join
  if (boundary[0] == 2 || boundary[1] == 2) {
    int small = boundary[0] == 2 ? 0 : 1;
    int big = 1 - small;
    if (boundary[big] < 3) return std::nullopt;
    if (nu[small] != 1 || nv[small] != 1) return std::nullopt;
    int x1 = single_neighbor_in(g, u, sides[small].mask);
    int y1 = single_neighbor_in(g, v, sides[small].mask);
    if (x1 < 0 || y1 < 0 || x1 == y1) return std::nullopt;
    if (sides[small].vertices.size() < 3) return std::nullopt;
    std::vector<int> inner;
    for (int x : sides[small].vertices)
      if (x != x1 && x != y1) inner.push_back(x);
    auto c1 = contract(g, inner);
    auto c2 = contract(g, sides[big].vertices);
    if (!minimal_claw_free_mc(c1.graph) || !minimal_claw_free_mc(c2.graph))
      return std::nullopt;
    if (!bisimplicial_vertex_at(c1.graph, c1.shrunk) ||
        !bisimplicial_vertex_at(c2.graph, c2.shrunk))
      return std::nullopt;
    auto sub1 = parse_minimal(c1.graph);
    if (!sub1) return std::nullopt;
    auto sub2 = parse_minimal(c2.graph);
    if (!sub2) return std::nullopt;
    int a1 = sub1->iso[c1.shrunk];
    int a2 = sub2->iso[c2.shrunk];
    for (int orient : {0, 1}) {
      auto built = v_join(sub1->eval, a1, sub2->eval, a2, orient);
      if (auto iso = find_isomorphism(g, built.graph)) {
        Recipe r;
        r.kind = Recipe::Kind::VJoin;
        r.children = {sub1->recipe, sub2->recipe};
        r.va = a1;
        r.vb = a2;
        r.orient = orient;
        return Parsed{std::move(r), std::move(built.graph), std::move(*iso)};
      }
    }
    return std::nullopt;
  }

  // case 2: both sides attached by >= 3 edges; contract both
  for (int i = 0; i < 2; ++i) {
    if (nu[i] < 1 || nu[i] > 2 || nv[i] < 1 || nv[i] > 2) return std::nullopt;
    sides[i].contraction = contract(g, sides[i].vertices);
    sides[i].w = sides[i].contraction.shrunk;
    if (!minimal_claw_free_mc(sides[i].contraction.graph)) return std::nullopt;
  }

  int ones = (nu[0] == 1) + (nu[1] == 1) + (nv[0] == 1) + (nv[1] == 1);

  if (ones == 0) {
    // v_attach at the two contraction vertices
    for (int i = 0; i < 2; ++i)
      if (!bisimplicial_vertex_at(sides[i].contraction.graph, sides[i].w))
        return std::nullopt;
    auto sub1 = parse_minimal(sides[0].contraction.graph);
    if (!sub1) return std::nullopt;
    auto sub2 = parse_minimal(sides[1].contraction.graph);
    if (!sub2) return std::nullopt;
    int a1 = sub1->iso[sides[0].w];
    int a2 = sub2->iso[sides[1].w];
    for (int orient : {0, 1}) {
      auto built = v_attach(sub1->eval, a1, sub2->eval, a2, orient);
      if (auto iso = find_isomorphism(g, built.graph)) {
        Recipe r;
        r.kind = Recipe::Kind::VAttach;
        r.children = {sub1->recipe, sub2->recipe};
        r.va = a1;
        r.vb = a2;
        r.orient = orient;
        return Parsed{std::move(r), std::move(built.graph), std::move(*iso)};
      }
    }
    return std::nullopt;
  }

  if (ones == 1) {
    // ev_attach: the side holding the single-edge attachment carries the
    // bisimplicial edge, the other side the bisimplicial vertex
    int i, z;
    if (nu[0] == 1) {
      i = 0;
      z = u;
    } else if (nv[0] == 1) {
      i = 0;
      z = v;
    } else if (nu[1] == 1) {
      i = 1;
      z = u;
    } else {
      i = 1;
      z = v;
    }
    int j = 1 - i;
    int x = single_neighbor_in(g, z, sides[i].mask);
    if (x < 0) return std::nullopt;
    const auto& ci = sides[i].contraction;
    const auto& cj = sides[j].contraction;
    auto e1 = ci.graph.find_edge(ci.shrunk, ci.vertex_map[x]);
    if (!e1) return std::nullopt;
    if (!bisimplicial_edge_at(ci.graph, *e1)) return std::nullopt;
    if (!bisimplicial_vertex_at(cj.graph, cj.shrunk)) return std::nullopt;
    auto sub1 = parse_minimal(ci.graph);
    if (!sub1) return std::nullopt;
    auto sub2 = parse_minimal(cj.graph);
    if (!sub2) return std::nullopt;
    int ea = sub1->iso[ci.shrunk];
    int eb = sub1->iso[ci.vertex_map[x]];
    auto eid = sub1->eval.find_edge(ea, eb);
    if (!eid) return std::nullopt;
    int a2 = sub2->iso[cj.shrunk];
    for (int orient : {0, 1, 2, 3}) {
      auto built = ev_attach(sub1->eval, *eid, sub2->eval, a2, orient);
      if (auto iso = find_isomorphism(g, built.graph)) {
        Recipe r;
        r.kind = Recipe::Kind::EVAttach;
        r.children = {sub1->recipe, sub2->recipe};
        r.eu = ea;
        r.ev = eb;
        r.vb = a2;
        r.orient = orient;
        return Parsed{std::move(r), std::move(built.graph), std::move(*iso)};
      }
    }
    return std::nullopt;
  }

  if (ones == 2) {
    // e_join: one single-edge attachment per side, by different vertices
    int z1, z2;
    if (nu[0] == 1 && nv[1] == 1) {
      z1 = u;
      z2 = v;
    } else if (nv[0] == 1 && nu[1] == 1) {
      z1 = v;
      z2 = u;
    } else {
      return std::nullopt;
    }
    int x1 = single_neighbor_in(g, z1, sides[0].mask);
    int x2 = single_neighbor_in(g, z2, sides[1].mask);
    if (x1 < 0 || x2 < 0) return std::nullopt;
    const auto& c1 = sides[0].contraction;
    const auto& c2 = sides[1].contraction;
    auto e1 = c1.graph.find_edge(c1.shrunk, c1.vertex_map[x1]);
    auto e2 = c2.graph.find_edge(c2.shrunk, c2.vertex_map[x2]);
    if (!e1 || !e2) return std::nullopt;
    if (!bisimplicial_edge_at(c1.graph, *e1) || !bisimplicial_edge_at(c2.graph, *e2))
      return std::nullopt;
    auto sub1 = parse_minimal(c1.graph);
    if (!sub1) return std::nullopt;
    auto sub2 = parse_minimal(c2.graph);
    if (!sub2) return std::nullopt;
    int e1a = sub1->iso[c1.shrunk], e1b = sub1->iso[c1.vertex_map[x1]];
    int e2a = sub2->iso[c2.shrunk], e2b = sub2->iso[c2.vertex_map[x2]];
    auto id1 = sub1->eval.find_edge(e1a, e1b);
    auto id2 = sub2->eval.find_edge(e2a, e2b);
    if (!id1 || !id2) return std::nullopt;
    for (int orient : {0, 1}) {
      auto built = e_join(sub1->eval, *id1, sub2->eval, *id2, orient);
      if (auto iso = find_isomorphism(g, built.graph)) {
        Recipe r;
        r.kind = Recipe::Kind::EJoin;
        r.children = {sub1->recipe, sub2->recipe};
        r.eu = e1a;
        r.ev = e1b;
        r.eu2 = e2a;
        r.ev2 = e2b;
        r.orient = orient;
        return Parsed{std::move(r), std::move(built.graph), std::move(*iso)};
      }
    }
    return std::nullopt;
  }

  return std::nullopt;
}

std::optional<Parsed> parse_with_barrier(const MultiGraph& g) {
  int n = g.vertex_count();
  std::vector<char> removed(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      removed[u] = removed[v] = 1;
      int odd = odd_components_after_removal(g, removed);
      removed[u] = removed[v] = 0;
      if (odd != 2) continue;
      if (auto p = parse_with_barrier_at(g, u, v)) return p;
    }
  return std::nullopt;
}

std::optional<Parsed> parse_minimal(const MultiGraph& g) {
  if (g.vertex_count() < 2 || !is_simple(g) || is_even_cycle(g)) return std::nullopt;
  if (auto leaf = match_leaf(g)) return leaf;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) < 2) return std::nullopt;
    if (g.degree(v) == 2) return parse_degree2(g, v);
  }
  if (g.vertex_count() < 4) return std::nullopt;
  if (!is_bicritical(g)) return parse_with_barrier(g);
  return parse_g_member(g);
}

}  // namespace

RecognitionResult recognize(const MultiGraph& g) {
  RecognitionResult res;
  if (g.vertex_count() < 2 || g.edge_count() == 0 || !is_connected(g)) {
    res.verdict = Verdict::NotApplicable;
    res.failure_witness = FailureWitness{"disconnected", {}, -1};
    res.diagnostic = "not a connected nontrivial graph";
    return res;
  }
  if (auto claw = find_claw(g)) {
    res.verdict = Verdict::NotApplicable;
    res.failure_witness =
        FailureWitness{"claw", {(*claw)[0], (*claw)[1], (*claw)[2], (*claw)[3]}, -1};
    return res;
  }
  if (g.vertex_count() % 2 != 0 || !has_perfect_matching(g)) {
    res.verdict = Verdict::NotApplicable;
    res.failure_witness = FailureWitness{"no_perfect_matching", {}, -1};
    return res;
  }
  if (auto bad = first_inadmissible(g)) {
    res.verdict = Verdict::NotApplicable;
    res.failure_witness = FailureWitness{"inadmissible_edge", {}, *bad};
    return res;
  }
  res.oracle_removable = removable_edges(g);
  if (!res.oracle_removable.empty()) {
    res.verdict = Verdict::NotMinimal;
    res.failure_witness = FailureWitness{"removable_edge", {}, res.oracle_removable.front()};
    return res;
  }
  if (g.vertex_count() == 2 || is_even_cycle(g)) {
    res.verdict = Verdict::MinimalSpecial;
    return res;
  }
  res.verdict = Verdict::MinimalWithCertificate;
  if (auto parsed = parse_minimal(g)) {
    res.certificate = std::move(parsed->recipe);
  } else {
    res.diagnostic =
        "structural parse failed; minimality is certified by the removability oracle only";
  }
  return res;
}

bool is_minimal_oracle(const MultiGraph& g) { return removable_edges(g).empty(); }

Thm13Report verify_thm13(const MultiGraph& g) {
  if (!is_simple(g)) throw std::invalid_argument("verify_thm13: graph must be simple");
  if (!is_cubic(g)) throw std::invalid_argument("verify_thm13: graph must be cubic");
  if (!is_claw_free(g)) throw std::invalid_argument("verify_thm13: graph must be claw-free");
  if (!is_matching_covered(g))
    throw std::invalid_argument("verify_thm13: graph must be matching covered");
  Thm13Report rep;
  rep.re_count = static_cast<int>(removable_edges(g).size());
  rep.minimal = rep.re_count == 0;
  auto tree = decompose(g);
  rep.b_star = tree.b_star;
  rep.leaf_orders = tree.leaf_orders;
  for (int ni : rep.leaf_orders) rep.sum_ni += ni;
  rep.equality_ok = rep.re_count == rep.sum_ni;
  rep.bound_ok = rep.minimal || rep.re_count >= 12;
  return rep;
}

int cubic_brick_re_count(const MultiGraph& g) {
  if (!is_simple(g) || !is_cubic(g))
    throw std::invalid_argument("cubic_brick_re_count: graph must be simple and cubic");
  if (!is_claw_free(g))
    throw std::invalid_argument("cubic_brick_re_count: graph must be claw-free");
  if (!is_k_connected(g, 3))
    throw std::invalid_argument("cubic_brick_re_count: graph must be 3-connected");
  if (is_isomorphic(g, named(NamedTag::K4).graph) ||
      is_isomorphic(g, named(NamedTag::C6bar).graph))
    throw std::invalid_argument("cubic_brick_re_count: K4 and C6bar are excluded");
  if (!is_matching_covered(g))
    throw std::invalid_argument("cubic_brick_re_count: graph must be matching covered");
  auto re = removable_edges(g);
  auto tri = triangle_edges(g);
  if (re != tri)
    throw std::runtime_error(
        "cubic_brick_re_count: removable set differs from the triangle edge set");
  return g.vertex_count();
}

}  // namespace mcg
