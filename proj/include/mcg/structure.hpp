#pragma once

#include <array>
#include <optional>
#include <vector>

#include "mcg/multigraph.hpp"

namespace mcg {

bool is_connected(const MultiGraph& g);
bool is_bipartite(const MultiGraph& g);
bool is_simple(const MultiGraph& g);
bool is_cubic(const MultiGraph& g);
bool is_regular(const MultiGraph& g, int k);

// Simple + connected + 2-regular + even order.
bool is_even_cycle(const MultiGraph& g);

// Vertex connectivity >= k, decided by removing all (k-1)-subsets.
bool is_k_connected(const MultiGraph& g, int k);

// Connected components as sorted vertex lists, ordered by first vertex.
std::vector<std::vector<int>> components(const MultiGraph& g);

// Components of g - removed (removed is an indicator mask over vertices).
std::vector<std::vector<int>> components_after_removal(const MultiGraph& g,
                                                       const std::vector<char>& removed);
int odd_components_after_removal(const MultiGraph& g, const std::vector<char>& removed);

// K_{1,3}-freeness of the underlying simple graph. Claw centres can only be
// vertices of simple degree >= 3.
bool is_claw_free(const MultiGraph& g);
// A claw as {centre, leaf, leaf, leaf} if one exists.
std::optional<std::array<int, 4>> find_claw(const MultiGraph& g);

// Edges whose endpoints have no common neighbour in the underlying simple
// graph. Convention: if the underlying simple graph is K4, every edge
// (including parallels) is a ridge.
std::vector<EdgeId> ridges(const MultiGraph& g);

// Edges that lie in a triangle of the underlying simple graph (no K4
// convention here; on K4 this is also every edge).
std::vector<EdgeId> triangle_edges(const MultiGraph& g);

// Underlying simple graph is complete on 4 vertices.
bool simple_is_k4(const MultiGraph& g);

}  // namespace mcg
