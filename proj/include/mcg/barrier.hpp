#pragma once

#include <optional>
#include <vector>

#include "mcg/multigraph.hpp"

namespace mcg {

// B with o(G-B) = |B|, witnessed by the odd components. Barriers are
// nonempty by convention.
struct Barrier {
  std::vector<int> vertices;                    // sorted
  std::vector<std::vector<int>> odd_components; // each sorted, ordered by first vertex
  std::optional<bool> maximal;                  // set when it has been decided
};

struct BarrierScanOptions {
  int vertex_ceiling = 16;  // exhaustive scans refuse larger graphs
};

// Requires g to have a perfect matching; b nonempty.
std::optional<Barrier> is_barrier(const MultiGraph& g, const std::vector<int>& b);

// All barriers of size <= max_size, ordered by (size, lexicographic vertex
// set). Exhaustive by design, so it refuses graphs above the vertex ceiling.
// When max_size covers every size, the maximal flag is filled in. The default
// entry point scans subset ranks in parallel; the _serial variant is the
// reference and produces the same list.
std::vector<Barrier> all_barriers(const MultiGraph& g, int max_size,
                                  const BarrierScanOptions& opts = {});
std::vector<Barrier> all_barriers_serial(const MultiGraph& g, int max_size,
                                         const BarrierScanOptions& opts = {});

// Lexicographically least 2-barrier, if any (parallel min-reduce over pair
// ranks).
std::optional<Barrier> find_2_barrier(const MultiGraph& g);

// A barrier containing b with no barrier as a proper superset: the
// lexicographically least superset barrier of maximum size (any maximum-size
// superset barrier is maximal, since its supersets also contain b).
Barrier maximal_barrier_containing(const MultiGraph& g, const std::vector<int>& b,
                                   const BarrierScanOptions& opts = {});

// G - u has a perfect matching for every u.
bool is_factor_critical(const MultiGraph& g);

// G - {u,v} has a perfect matching for every distinct pair; requires n >= 4.
bool is_bicritical(const MultiGraph& g);

}  // namespace mcg
