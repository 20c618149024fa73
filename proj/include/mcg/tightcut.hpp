#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mcg/barrier.hpp"
#include "mcg/multigraph.hpp"

namespace mcg {

// Every perfect matching meets the cut exactly once. Validates that g is
// matching covered (enumeration oracle underneath).
bool is_tight_cut(const MultiGraph& g, const Cut& c);

// \partial(V(L)) for the barrier's component_index'th odd component. Tight
// for matching covered graphs.
Cut barrier_cut(const MultiGraph& g, const Barrier& b, int component_index);

struct TightCutOptions {
  // exhaustive barrier scans run for graphs up to this many vertices ...
  int barrier_ceiling = 16;
  // ... and only up to this barrier size on larger graphs
  int bounded_barrier_size = 4;
  // the last-resort subset scan refuses graphs above this
  int exhaustive_threshold = 16;
};

// Lexicographically least validated nontrivial tight cut, or absent. Search
// order: 3-connected + bicritical graphs are tight-cut-free and answered
// immediately; then barrier cuts, then 2-separation cuts of bicritical
// graphs, then an exhaustive validated subset scan. Cut sides are normalized
// to contain vertex 0 and compared lexicographically.
std::optional<Cut> find_nontrivial_tight_cut(const MultiGraph& g,
                                             const TightCutOptions& opts = {});

enum class LeafClass { Brick, Brace };
enum class GraphClass { Brick, Brace, Neither };

struct DecompositionNode {
  MultiGraph graph;
  std::optional<Cut> cut;  // internal nodes only
  std::unique_ptr<DecompositionNode> left;   // G{X}
  std::unique_ptr<DecompositionNode> right;  // G{X-bar}
  std::optional<LeafClass> leaf_class;       // leaves only
};

struct DecompositionTree {
  std::unique_ptr<DecompositionNode> root;
  int brick_count = 0;
  int brace_count = 0;
  // bricks whose underlying simple graph is neither K4 nor C6bar
  int b_star = 0;
  std::vector<int> leaf_orders;  // their vertex counts, descending
  // simple canonical forms of all leaves, sorted (for uniqueness checks)
  std::vector<std::string> leaf_simple_forms;
};

// Recursive tight cut decomposition. Every internal node's children are the
// two contractions of its cut and are asserted matching covered; leaves are
// classified brick/brace. seed != 0 relabels the input by a seeded
// permutation before decomposing (tie-breaking exercise; leaf forms are
// label-invariant).
DecompositionTree decompose(const MultiGraph& g, unsigned seed = 0,
                            const TightCutOptions& opts = {});

// Brick / brace / neither, with the brick verdict cross-checked against the
// 3-connected + bicritical criterion.
GraphClass classify(const MultiGraph& g, const TightCutOptions& opts = {});

std::string decomposition_text(const DecompositionTree& tree);
std::string decomposition_json(const DecompositionTree& tree);

}  // namespace mcg
