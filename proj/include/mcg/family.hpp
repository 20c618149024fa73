#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcg/multigraph.hpp"

namespace mcg {

// A vertex is bisimplicial when its neighbourhood induces exactly two
// disjoint cliques, each with at least two vertices. An edge ab is
// bisimplicial when N(a)\{b} and N(b)\{a} are disjoint cliques of size >= 2;
// by convention every edge of K4 (simple projection) is bisimplicial.
struct BisimplicialWitness {
  enum class Kind { Vertex, Edge };
  Kind kind = Kind::Vertex;
  int vertex = -1;  // vertex case
  EdgeId edge = -1; // edge case
  std::vector<int> clique_a, clique_b;  // sorted; clique_a lexicographically first
  bool k4_convention = false;
};

std::vector<BisimplicialWitness> bisimplicial_vertices(const MultiGraph& g);
std::vector<BisimplicialWitness> bisimplicial_edges(const MultiGraph& g);
std::optional<BisimplicialWitness> bisimplicial_vertex_at(const MultiGraph& g, int u);
std::optional<BisimplicialWitness> bisimplicial_edge_at(const MultiGraph& g, EdgeId e);

enum class Gadget { K4minus, C6barStar };

// Result of a unary rewrite, with id maps back into the argument.
struct Construction {
  MultiGraph graph;
  std::vector<int> vertex_map;   // old -> new
  std::vector<EdgeId> edge_map;  // old -> new, -1 for consumed edges
  std::vector<int> new_vertices;
  std::vector<EdgeId> new_edges;
};

// Result of a binary operation, with id maps from both arguments.
struct Compound {
  MultiGraph graph;
  std::vector<int> vertex_map1, vertex_map2;   // -1 for split/consumed vertices
  std::vector<EdgeId> edge_map1, edge_map2;    // -1 for deleted anchor edges
  std::vector<EdgeId> new_edges;
};

// Delete the ridge e = u1u2 and identify the gadget's two degree-2 vertices
// with u1 and u2 (orient swaps the pairing). Grows the order by |gadget|-2.
Construction replace_ridge(const MultiGraph& g, EdgeId e, Gadget gadget, int orient);

// Replace edge e by an odd path of the given length (>= 3); interior
// vertices are appended as fresh highest indices in path order.
Construction bisubdivide(const MultiGraph& g, EdgeId e, int path_len);

// Split the bisimplicial vertex u into u' (keeps u's index, joined to one
// clique) and u'' (fresh), and connect them by an even path of the given
// length (>= 2). orient selects which clique u' keeps.
Construction expand_vertex(const MultiGraph& g, int u, int orient, int path_len);

// The four compound operations on even-order graphs. Orientation selects the
// clique/endpoint pairing:
//   v_join:    split both anchors, add edges u1'u2' and u1''u2''
//   v_attach:  split both anchors, identify u1' with u2' and u1'' with u2''
//   e_join:    delete both anchor edges, add a1a2 and b1b2
//   ev_attach: delete a1b1, identify a1 with u2', add b1u2''
//              (orient bit 0 swaps a1/b1, bit 1 swaps u2's cliques)
Compound v_join(const MultiGraph& g1, int u1, const MultiGraph& g2, int u2, int orient);
Compound v_attach(const MultiGraph& g1, int u1, const MultiGraph& g2, int u2, int orient);
Compound e_join(const MultiGraph& g1, EdgeId e1, const MultiGraph& g2, EdgeId e2, int orient);
Compound ev_attach(const MultiGraph& g1, EdgeId e1, const MultiGraph& g2, int u2, int orient);

// Splice at u1/u2 (equal degrees): delete both vertices and reconnect their
// incidences through the bijection perm (incidence index of u1 -> incidence
// index of u2, in edge id order).
MultiGraph splice(const MultiGraph& g1, int u1, const MultiGraph& g2, int u2,
                  const std::vector<int>& perm);

// Blow every vertex of a simple cubic graph up to a triangle, attaching the
// three former neighbours by neighbour rank. Result is cubic on 3n vertices.
MultiGraph triangle_replace(const MultiGraph& g);

// Construction certificate: a term over the two base graphs and the rewrite
// operations above. Serialized form (single spaces, lowercase, bit-exact):
//   (k4) | (c6bar)
//   (replace <recipe> ridge=<u>-<v> gadget=<k4minus|c6barstar> orient=<0|1>)
//   (bisub <recipe> edge=<u>-<v> len=<odd>=3>)
//   (expand <recipe> v=<u> len=<even>=2> orient=<0|1>)
//   (vjoin <recipe> <recipe> v1=<u> v2=<u> orient=<0|1>)
//   (vattach <recipe> <recipe> v1=<u> v2=<u> orient=<0|1>)
//   (ejoin <recipe> <recipe> e1=<u>-<v> e2=<u>-<v> orient=<0|1>)
//   (evattach <recipe> <recipe> e1=<u>-<v> v2=<u> orient=<0|1|2|3>)
// Vertex/edge references address the evaluated child graph; edges are given
// by endpoints and resolve to the lowest matching id.
struct Recipe {
  enum class Kind {
    K4,
    C6bar,
    ReplaceRidge,
    Bisubdivide,
    ExpandVertex,
    VJoin,
    VAttach,
    EJoin,
    EVAttach
  };
  Kind kind = Kind::K4;
  std::vector<Recipe> children;
  int eu = -1, ev = -1;    // first edge anchor endpoints
  int eu2 = -1, ev2 = -1;  // second edge anchor endpoints (ejoin)
  int va = -1;             // vertex anchor in child 0 (expand, vjoin, vattach)
  int vb = -1;             // vertex anchor in child 1 (vjoin, vattach, evattach)
  Gadget gadget = Gadget::K4minus;
  int orient = 0;
  int path_len = 0;
};

// Deterministic evaluation; node preconditions (ridge, bisimplicial anchors,
// parities) are validated and violations throw.
MultiGraph evaluate(const Recipe& r);

std::string to_sexpr(const Recipe& r);
Recipe parse_recipe(const std::string& text);

enum class Family { G, F, ExpansionsOfF };

struct FamilyOptions {
  int exhaustive_threshold = 12;  // exhaustive closure up to this order
  int sample_count = 200;         // extra sampled members above the threshold
  int sample_attempts = 40000;    // retry budget for the sampler
};

// Distinct-up-to-isomorphism members of the family with at most max_n
// vertices, each paired with a recipe that evaluates to it. Exhaustive up to
// the threshold; beyond it, seeded random recipes are sampled and
// deduplicated. Deterministic for a fixed (family, max_n, seed, options).
std::vector<std::pair<Recipe, MultiGraph>> generate_family(Family family, int max_n,
                                                           std::uint64_t seed,
                                                           const FamilyOptions& opts = {});

// Raw seeded recipe samples without isomorphism deduplication: `count`
// constructions of family members with at most max_n vertices. Distinct
// recipes may evaluate to isomorphic graphs.
std::vector<std::pair<Recipe, MultiGraph>> sample_family_recipes(Family family, int max_n,
                                                                 std::uint64_t seed, int count);

}  // namespace mcg
