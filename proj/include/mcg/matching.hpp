#pragma once

#include <optional>
#include <vector>

#include "mcg/multigraph.hpp"

namespace mcg {

struct PerfectMatching {
  std::vector<EdgeId> edge_ids;  // sorted; pairwise nonadjacent; covers V
};

// Maximum matching size via augmenting paths with blossom shrinking.
int maximum_matching_size(const MultiGraph& g);

bool has_perfect_matching(const MultiGraph& g);

// Every perfect matching as a distinct EdgeId set (parallel edges give
// distinct matchings), ordered lexicographically by sorted ids. Exponential;
// this is the test oracle for tightness, dependence and admissibility.
std::vector<PerfectMatching> enumerate_perfect_matchings(const MultiGraph& g);

// e lies in some perfect matching, decided as PM existence on g minus the
// two endpoints of e.
bool is_admissible(const MultiGraph& g, EdgeId e);

// Connected, nontrivial, every edge admissible.
bool is_matching_covered(const MultiGraph& g);

// Lowest inadmissible edge id of a connected nontrivial graph, if any.
std::optional<EdgeId> first_inadmissible(const MultiGraph& g);

bool is_removable(const MultiGraph& g, EdgeId e);

// RE(g), sorted. Requires g matching covered. The default entry point runs
// the per-edge checks in parallel; the _serial variant is the reference
// implementation and always produces the same result.
std::vector<EdgeId> removable_edges(const MultiGraph& g);
std::vector<EdgeId> removable_edges_serial(const MultiGraph& g);

// Every perfect matching containing e also contains f (e != f), i.e. e is
// inadmissible in g - f.
bool depends_on(const MultiGraph& g, EdgeId e, EdgeId f);

// Equivalence classes of mutual dependence, each sorted, ordered by first id.
std::vector<std::vector<EdgeId>> dependence_classes(const MultiGraph& g);

struct EdgeClassification {
  std::vector<bool> admissible;
  // present only when the graph is matching covered
  std::optional<std::vector<bool>> removable;
};

EdgeClassification classify_edges(const MultiGraph& g);

}  // namespace mcg
