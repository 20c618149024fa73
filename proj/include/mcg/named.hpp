#pragma once

#include <string>
#include <vector>

#include "mcg/multigraph.hpp"

namespace mcg {

enum class NamedTag { K2, K4, C6bar, K4minus, C6barStar, K33, H1, Cycle };

struct NamedGraph {
  NamedTag tag;
  std::string name;
  MultiGraph graph;
  // role markers: the two degree-2 attachment vertices of the gadgets
  // K4minus / C6barStar; empty for the other tags
  std::vector<int> degree2_vertices;
};

// Fixed, documented numbering per tag:
//   k2        0-1
//   k4        complete on {0,1,2,3}, edges in lexicographic order
//   c6bar     complement of the cycle 0-1-2-3-4-5-0, edges lexicographic;
//             triangles {0,2,4} and {1,3,5}, ridges (0,3),(1,4),(2,5)
//   k4minus   k4 with edge (0,1) deleted; degree-2 vertices 0,1
//   c6barstar c6bar with ridge (0,3) deleted; degree-2 vertices 0,3
//   k33       parts {0,1,2} / {3,4,5}, edges lexicographic
//   h1        each vertex v of k4 blown up to the triangle {3v,3v+1,3v+2},
//             cross edges wired by neighbour rank; 12 vertices, cubic
NamedGraph named(NamedTag tag);

// Accepts the tag names above plus "c<k>" for the k-cycle. Throws on unknown
// tags.
NamedGraph named(const std::string& tag);

MultiGraph cycle(int k);
MultiGraph path_graph(int k);
MultiGraph complete(int k);
MultiGraph complete_bipartite(int a, int b);

// Small cubic bases used by the verification tooling.
MultiGraph prism();                 // C3 x K2
MultiGraph circular_ladder(int k);  // Ck x K2, cubic for k >= 3
MultiGraph moebius_ladder(int k);   // C_{2k} plus antipodal chords
MultiGraph cube_graph();            // Q3
MultiGraph petersen();

}  // namespace mcg
