#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcg/multigraph.hpp"

namespace mcg {

// Canonical byte string: invariant under vertex relabeling and edge
// reordering; equal strings exactly when the multigraphs are isomorphic
// (multiplicities included). Degree refinement plus individualization
// backtracking; intended for desk-scale graphs (n <= ~40).
std::string canonical_form(const MultiGraph& g);

// Same, ignoring edge multiplicities.
std::string simple_canonical_form(const MultiGraph& g);

// A labeling old vertex -> canonical position achieving canonical_form.
std::vector<int> canonical_labeling(const MultiGraph& g);

bool is_isomorphic(const MultiGraph& a, const MultiGraph& b);

// Vertex map a -> b preserving multiplicities, if one exists.
std::optional<std::vector<int>> find_isomorphism(const MultiGraph& a, const MultiGraph& b);

// FNV-1a of the canonical form; stable across runs and platforms.
std::uint64_t digest64(const MultiGraph& g);
std::string digest_hex(const MultiGraph& g);

}  // namespace mcg
