#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "mcg/canonical.hpp"
#include "mcg/multigraph.hpp"
#include "mcg/named.hpp"
#include "mcg/structure.hpp"
#include "test_support.hpp"

using namespace mcg;
using mcgtest::make;

TEST_CASE("multigraph construction rejects bad input") {
  CHECK_THROWS_AS(MultiGraph(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(MultiGraph(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(MultiGraph(2, {{-1, 0}}), std::invalid_argument);
  MultiGraph g(3, {{0, 1}, {0, 1}, {1, 2}});
  CHECK(g.edge_count() == 3);
  CHECK(g.multiplicity(0, 1) == 2);
  CHECK(g.degree(1) == 3);
  CHECK(g.simple_degree(1) == 2);
}

TEST_CASE("mg format round trip and rejection") {
  auto g = named(NamedTag::C6bar).graph;
  std::string text = write_mg(g);
  std::istringstream in(text);
  CHECK(read_mg(in) == g);

  auto fails = [](const std::string& body) {
    std::istringstream s(body);
    CHECK_THROWS(read_mg(s));
  };
  fails("n 2\ne 0 1\n");                    // missing header
  fails("mg 2\nn 2\ne 0 1\n");              // bad version
  fails("mg 1\nn 2\ne 0 0\n");              // loop
  fails("mg 1\nn 2\ne 0 5\n");              // out of range
  fails("mg 1\nn 2\nedge 0 1\n");           // unknown directive
  fails("mg 1\nn 2\ne 0 1 7\n");            // trailing tokens

  std::istringstream ok("# comment\nmg 1\nn 2\n\ne 0 1\n");
  CHECK(read_mg(ok).edge_count() == 1);
}

TEST_CASE("edge cut basics") {
  auto k4 = named(NamedTag::K4).graph;
  auto cut = edge_cut(k4, {0});
  CHECK(cut.boundary.size() == 3);
  CHECK(cut.trivial);

  auto c6bar = named(NamedTag::C6bar).graph;
  auto tri = edge_cut(c6bar, {0, 2, 4});
  CHECK(tri.boundary.size() == 3);
  CHECK_FALSE(tri.trivial);

  auto c6 = cycle(6);
  auto half = edge_cut(c6, {0, 1, 2});
  CHECK(half.boundary == std::vector<EdgeId>{2, 5});

  CHECK_THROWS_AS(edge_cut(k4, {}), std::invalid_argument);
  CHECK_THROWS_AS(edge_cut(k4, {0, 1, 2, 3}), std::invalid_argument);
}

TEST_CASE("cut boundary is side symmetric") {
  std::mt19937 rng(7);
  for (const auto& [name, g] : mcgtest::corpus(12)) {
    int n = g.vertex_count();
    if (n < 2) continue;
    for (int rep = 0; rep < 20; ++rep) {
      std::vector<int> x, y;
      for (int v = 0; v < n; ++v) (rng() & 1 ? x : y).push_back(v);
      if (x.empty() || y.empty()) continue;
      CHECK(edge_cut(g, x).boundary == edge_cut(g, y).boundary);
    }
  }
}

TEST_CASE("contraction") {
  auto c6 = cycle(6);
  auto c = contract(c6, {0, 1, 2});
  CHECK(c.graph.vertex_count() == 4);
  CHECK(c.shrunk == 3);
  CHECK(is_isomorphic(c.graph, cycle(4)));

  auto k4 = named(NamedTag::K4).graph;
  auto ck4 = contract(k4, {0, 1, 2});
  CHECK(is_isomorphic(ck4.graph, k4));

  // parallel boundary edges survive as parallels at the shrunk vertex
  MultiGraph twin(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 2}});
  auto ct = contract(twin, {0, 1});
  CHECK(ct.graph.multiplicity(0, ct.shrunk) == 3);  // 0-2 x2 and 0-3
}

TEST_CASE("contraction edge count identity") {
  std::mt19937 rng(3);
  for (const auto& [name, g] : mcgtest::corpus(12)) {
    int n = g.vertex_count();
    if (n < 3) continue;
    for (int rep = 0; rep < 10; ++rep) {
      std::vector<int> x;
      for (int v = 0; v < n; ++v)
        if (rng() & 1) x.push_back(v);
      if (x.empty() || static_cast<int>(x.size()) == n) continue;
      auto inside = delete_vertices(g, [&] {
                      std::vector<int> rest;
                      std::vector<char> in(n, 0);
                      for (int v : x) in[v] = 1;
                      for (int v = 0; v < n; ++v)
                        if (!in[v]) rest.push_back(v);
                      return rest;
                    }());
      auto cut = edge_cut(g, x);
      auto c = contract(g, x);
      CHECK(c.graph.edge_count() ==
            inside.graph.edge_count() + static_cast<int>(cut.boundary.size()));
    }
  }
}

TEST_CASE("claw freeness") {
  CHECK(is_claw_free(named(NamedTag::K4).graph));
  CHECK_FALSE(is_claw_free(complete_bipartite(1, 3)));
  CHECK(is_claw_free(named(NamedTag::C6bar).graph));
  CHECK_FALSE(is_claw_free(named(NamedTag::K33).graph));
  CHECK(is_claw_free(named(NamedTag::H1).graph));
}

TEST_CASE("claw freeness matches the 4-subset oracle") {
  for (const auto& [name, g] : mcgtest::corpus(10)) {
    INFO(name);
    CHECK(is_claw_free(g) == mcgtest::oracle_claw_free(g));
  }
}

TEST_CASE("ridges") {
  auto k4 = named(NamedTag::K4).graph;
  CHECK(ridges(k4) == std::vector<EdgeId>{0, 1, 2, 3, 4, 5});

  auto c6bar = named(NamedTag::C6bar).graph;
  std::vector<EdgeId> expected;
  for (EdgeId e = 0; e < c6bar.edge_count(); ++e) {
    auto ed = c6bar.edge(e);
    if (ed.v - ed.u == 3) expected.push_back(e);  // the three joining edges
  }
  CHECK(ridges(c6bar) == expected);
  CHECK(expected.size() == 3);

  CHECK(ridges(cycle(3)).empty());
  CHECK(triangle_edges(cycle(3)).size() == 3);

  // the K4 convention applies to the simple projection, parallels included
  auto doubled = with_edge(k4, 0, 1);
  CHECK(ridges(doubled) == std::vector<EdgeId>{0, 1, 2, 3, 4, 5, 6});
}

TEST_CASE("connectivity helpers") {
  CHECK(is_connected(named(NamedTag::K4).graph));
  CHECK_FALSE(is_connected(make(4, {{0, 1}, {2, 3}})));
  CHECK(is_bipartite(named(NamedTag::K33).graph));
  CHECK_FALSE(is_bipartite(named(NamedTag::C6bar).graph));
  CHECK(is_k_connected(named(NamedTag::K4).graph, 3));
  CHECK(is_k_connected(named(NamedTag::H1).graph, 3));
  CHECK_FALSE(is_k_connected(cycle(6), 3));
  CHECK(is_even_cycle(cycle(6)));
  CHECK_FALSE(is_even_cycle(cycle(5)));
  CHECK_FALSE(is_even_cycle(with_edge(cycle(6), 0, 3)));
  CHECK(is_cubic(named(NamedTag::C6bar).graph));
}

TEST_CASE("canonical form is relabeling invariant") {
  std::mt19937 rng(99);
  for (const auto& [name, g] : mcgtest::corpus(12)) {
    INFO(name);
    int n = g.vertex_count();
    if (n < 2) continue;
    std::string form = canonical_form(g);
    int reps = n <= 8 ? 1000 : 100;
    for (int rep = 0; rep < reps; ++rep) {
      std::vector<int> perm(n);
      for (int i = 0; i < n; ++i) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      auto h = relabel(g, perm);
      // also shuffle the edge list: ids must not matter
      std::vector<std::pair<int, int>> edges;
      for (const Edge& e : h.edges()) edges.emplace_back(e.u, e.v);
      std::shuffle(edges.begin(), edges.end(), rng);
      CHECK(canonical_form(MultiGraph(n, edges)) == form);
    }
  }
}

TEST_CASE("canonical form separates non-isomorphic graphs") {
  auto k4 = named(NamedTag::K4).graph;
  auto doubled = with_edge(k4, 0, 1);
  CHECK(canonical_form(k4) != canonical_form(doubled));
  CHECK(simple_canonical_form(k4) == simple_canonical_form(doubled));
  CHECK(canonical_form(cycle(6)) !=
        canonical_form(make(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
  CHECK(is_isomorphic(mcg::prism(), named(NamedTag::C6bar).graph));
  CHECK_FALSE(is_isomorphic(named(NamedTag::K33).graph, mcg::prism()));
}

TEST_CASE("find_isomorphism produces a valid vertex map") {
  std::mt19937 rng(5);
  auto g = named(NamedTag::H1).graph;
  std::vector<int> perm(g.vertex_count());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::shuffle(perm.begin(), perm.end(), rng);
  auto h = relabel(g, perm);
  auto iso = find_isomorphism(g, h);
  REQUIRE(iso.has_value());
  for (const Edge& e : g.edges()) CHECK(h.adjacent((*iso)[e.u], (*iso)[e.v]));
  CHECK_FALSE(find_isomorphism(g, cycle(12)).has_value());
}

TEST_CASE("named catalog") {
  CHECK(named(NamedTag::K4).graph.edge_count() == 6);
  auto c6bar = named(NamedTag::C6bar).graph;
  CHECK(c6bar.vertex_count() == 6);
  CHECK(c6bar.edge_count() == 9);

  auto k4m = named(NamedTag::K4minus);
  CHECK(k4m.graph.edge_count() == 5);
  CHECK(k4m.degree2_vertices == std::vector<int>{0, 1});
  for (int v : k4m.degree2_vertices) CHECK(k4m.graph.degree(v) == 2);

  auto c6s = named(NamedTag::C6barStar);
  CHECK(c6s.graph.edge_count() == 8);
  for (int v : c6s.degree2_vertices) CHECK(c6s.graph.degree(v) == 2);

  auto h1 = named(NamedTag::H1).graph;
  CHECK(h1.vertex_count() == 12);
  CHECK(h1.edge_count() == 18);
  CHECK(is_cubic(h1));
  CHECK(is_claw_free(h1));
  CHECK(is_k_connected(h1, 3));

  CHECK(named("c6").graph == cycle(6));
  CHECK_THROWS_AS(named("nonsense"), std::invalid_argument);
}

TEST_CASE("identify and with_edge") {
  auto p4 = path_graph(4);
  auto ident = identify_vertices(p4, 0, 3);
  CHECK(ident.graph.vertex_count() == 3);
  CHECK(is_isomorphic(ident.graph, cycle(3)));
  CHECK_THROWS_AS(identify_vertices(p4, 0, 1), std::invalid_argument);
  auto g = with_edge(p4, 0, 3);
  CHECK(is_isomorphic(g, cycle(4)));
}
