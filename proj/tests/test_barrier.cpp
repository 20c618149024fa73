#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "mcg/barrier.hpp"
#include "mcg/matching.hpp"
#include "mcg/named.hpp"
#include "mcg/structure.hpp"
#include "test_support.hpp"

using namespace mcg;
using mcgtest::make;

namespace {

bool is_stable_set(const MultiGraph& g, const std::vector<int>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.adjacent(vs[i], vs[j])) return false;
  return true;
}

bool has_even_component(const MultiGraph& g, const std::vector<int>& barrier) {
  std::vector<char> removed(g.vertex_count(), 0);
  for (int v : barrier) removed[v] = 1;
  for (const auto& comp : components_after_removal(g, removed))
    if (comp.size() % 2 == 0) return true;
  return false;
}

}  // namespace

TEST_CASE("barrier checks") {
  auto c4 = cycle(4);
  auto b = is_barrier(c4, {0, 2});
  REQUIRE(b.has_value());
  CHECK(b->odd_components == std::vector<std::vector<int>>{{1}, {3}});

  auto k4 = named(NamedTag::K4).graph;
  CHECK_FALSE(is_barrier(k4, {0, 1}).has_value());
  CHECK_FALSE(is_barrier(k4, {0, 2}).has_value());

  auto c6 = cycle(6);
  auto b6 = is_barrier(c6, {0, 2, 4});
  REQUIRE(b6.has_value());
  CHECK(b6->odd_components.size() == 3);

  CHECK_THROWS_AS(is_barrier(cycle(3), {0}), std::invalid_argument);  // no PM
  CHECK_THROWS_AS(is_barrier(c4, {}), std::invalid_argument);
}

TEST_CASE("barrier enumeration matches the serial reference") {
  for (const auto& [name, g] : mcgtest::corpus(10)) {
    if (!has_perfect_matching(g)) continue;
    INFO(name);
    auto par = all_barriers(g, g.vertex_count());
    auto ser = all_barriers_serial(g, g.vertex_count());
    REQUIRE(par.size() == ser.size());
    for (std::size_t i = 0; i < par.size(); ++i) {
      CHECK(par[i].vertices == ser[i].vertices);
      CHECK(par[i].odd_components == ser[i].odd_components);
      CHECK(par[i].maximal == ser[i].maximal);
    }
  }
}

TEST_CASE("barrier enumeration refuses big graphs") {
  auto big = mcg::triangle_replace(named(NamedTag::K33).graph);  // 18 vertices
  CHECK_THROWS_AS(all_barriers(big, 2), std::runtime_error);
  BarrierScanOptions wide;
  wide.vertex_ceiling = 18;
  CHECK_NOTHROW(all_barriers(big, 1, wide));
}

TEST_CASE("two-barriers") {
  CHECK_FALSE(find_2_barrier(named(NamedTag::K4).graph).has_value());
  auto b = find_2_barrier(cycle(6));
  REQUIRE(b.has_value());
  CHECK(b->vertices == std::vector<int>{0, 2});

  auto k4 = named(NamedTag::K4).graph;
  auto h = e_join(k4, 0, k4, 0, 0).graph;
  CHECK(find_2_barrier(h).has_value());
}

TEST_CASE("maximal barrier growth") {
  auto c6 = cycle(6);
  auto grown = maximal_barrier_containing(c6, {0});
  CHECK(grown.vertices == std::vector<int>{0, 2, 4});
  CHECK(grown.maximal == true);

  auto k4 = named(NamedTag::K4).graph;
  CHECK(maximal_barrier_containing(k4, {0}).vertices == std::vector<int>{0});

  auto c4 = cycle(4);
  CHECK(maximal_barrier_containing(c4, {0}).vertices == std::vector<int>{0, 2});

  CHECK_THROWS_AS(maximal_barrier_containing(k4, {0, 1}), std::invalid_argument);
}

TEST_CASE("maximal barriers verified by superset scan") {
  for (const auto& [name, g] : mcgtest::corpus(8)) {
    if (!has_perfect_matching(g) || g.vertex_count() < 2) continue;
    INFO(name);
    auto all = all_barriers(g, g.vertex_count());
    for (const auto& b : all) {
      if (b.vertices.size() > 2) continue;  // keep the scan small
      auto grown = maximal_barrier_containing(g, b.vertices);
      CHECK(std::includes(grown.vertices.begin(), grown.vertices.end(),
                          b.vertices.begin(), b.vertices.end()));
      for (const auto& other : all)
        if (other.vertices.size() > grown.vertices.size())
          CHECK_FALSE(std::includes(other.vertices.begin(), other.vertices.end(),
                                    grown.vertices.begin(), grown.vertices.end()));
    }
    // components of a maximal barrier's complement are factor-critical
    for (const auto& b : all) {
      if (!b.maximal.value_or(false)) continue;
      std::vector<char> removed(g.vertex_count(), 0);
      for (int v : b.vertices) removed[v] = 1;
      for (const auto& comp : components_after_removal(g, removed)) {
        auto sub = delete_vertices(g, [&] {
          std::vector<int> rest;
          std::vector<char> keep(g.vertex_count(), 0);
          for (int v : comp) keep[v] = 1;
          for (int v = 0; v < g.vertex_count(); ++v)
            if (!keep[v]) rest.push_back(v);
          return rest;
        }());
        CHECK(is_factor_critical(sub.graph));
      }
    }
  }
}

TEST_CASE("factor critical and bicritical") {
  CHECK(is_factor_critical(cycle(5)));
  CHECK_FALSE(is_factor_critical(cycle(4)));
  CHECK(is_factor_critical(MultiGraph(1, {})));
  CHECK(is_bicritical(named(NamedTag::K4).graph));
  CHECK(is_bicritical(named(NamedTag::C6bar).graph));
  CHECK_FALSE(is_bicritical(cycle(6)));
  CHECK_THROWS_AS(is_bicritical(named(NamedTag::K2).graph), std::invalid_argument);
}

TEST_CASE("2-vertex cuts with an odd piece are barriers") {
  for (const auto& [name, g] : mcgtest::corpus(10)) {
    if (!has_perfect_matching(g) || !is_connected(g)) continue;
    INFO(name);
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        std::vector<char> removed(n, 0);
        removed[u] = removed[v] = 1;
        auto comps = components_after_removal(g, removed);
        if (comps.size() < 2) continue;
        bool odd = std::any_of(comps.begin(), comps.end(),
                               [](const auto& c) { return c.size() % 2 == 1; });
        if (odd) CHECK(is_barrier(g, {u, v}).has_value());
      }
  }
}

TEST_CASE("matching covered equals the barrier characterization") {
  for (const auto& [name, g] : mcgtest::corpus(8)) {
    if (!has_perfect_matching(g) || !is_connected(g) || g.edge_count() == 0) continue;
    INFO(name);
    bool chars = true;
    for (const auto& b : all_barriers(g, g.vertex_count()))
      if (has_even_component(g, b.vertices) || !is_stable_set(g, b.vertices)) {
        chars = false;
        break;
      }
    CHECK(is_matching_covered(g) == chars);
  }
}

TEST_CASE("bicritical equals barrier triviality for matching covered graphs") {
  for (const auto& [name, g] : mcgtest::corpus(8)) {
    if (!is_matching_covered(g) || g.vertex_count() < 4) continue;
    INFO(name);
    bool no_nontrivial = true;
    for (const auto& b : all_barriers(g, g.vertex_count()))
      if (b.vertices.size() >= 2) no_nontrivial = false;
    CHECK(is_bicritical(g) == no_nontrivial);
  }
}

TEST_CASE("claw-free matching covered graphs: bicritical equals 2-barrier-free") {
  for (const auto& [name, g] : mcgtest::corpus(10)) {
    if (!is_matching_covered(g) || g.vertex_count() < 4) continue;
    if (!is_claw_free(g)) continue;
    INFO(name);
    CHECK(is_bicritical(g) == !find_2_barrier(g).has_value());
  }
}
