#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mcg {

using EdgeId = int;

struct Edge {
  int u, v;  // endpoints, stored with u < v; loops are rejected at construction
  bool operator==(const Edge&) const = default;
};

// Loopless undirected multigraph. Vertices are 0..n-1, edges are an ordered
// list of unordered pairs; an edge's id is its position in that list and is
// stable for the lifetime of the graph. Derived graphs (deletions,
// contractions, ...) are new objects carrying old->new id maps. Instances are
// immutable after construction, so they are safe to share across threads.
class MultiGraph {
 public:
  MultiGraph() = default;
  MultiGraph(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const;
  const std::vector<Edge>& edges() const { return edges_; }

  int degree(int v) const;         // counts parallel edges
  int simple_degree(int v) const;  // counts distinct neighbours

  // Distinct neighbours of v, sorted ascending.
  const std::vector<int>& neighbors(int v) const;
  // All incidences of v as (other endpoint, edge id), in edge id order.
  const std::vector<std::pair<int, EdgeId>>& incident(int v) const;

  int multiplicity(int u, int v) const;
  bool adjacent(int u, int v) const;
  std::optional<EdgeId> find_edge(int u, int v) const;  // lowest id, if any

  bool operator==(const MultiGraph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, EdgeId>>> incident_;
  std::vector<std::vector<int>> simple_adj_;
};

// A cut \partial(X): the vertex side X and its edge boundary.
struct Cut {
  std::vector<int> x_side;          // sorted
  std::vector<EdgeId> boundary;     // sorted
  bool trivial = false;             // |X| == 1 or |V \ X| == 1
};

struct EdgeDeletion {
  MultiGraph graph;
  std::vector<EdgeId> edge_map;  // old id -> new id, -1 if deleted
};

struct VertexDeletion {
  MultiGraph graph;
  std::vector<int> vertex_map;   // old vertex -> new vertex, -1 if deleted
  std::vector<EdgeId> edge_map;  // old id -> new id, -1 if dropped
};

struct Contraction {
  MultiGraph graph;
  std::vector<int> vertex_map;   // old vertex -> new vertex (complement -> shrunk)
  std::vector<EdgeId> edge_map;  // old id -> new id, -1 if inside the complement
  int shrunk = -1;               // the vertex the complement collapsed to
};

struct Identification {
  MultiGraph graph;
  std::vector<int> vertex_map;
  std::vector<EdgeId> edge_map;
  int merged = -1;  // image of both identified vertices
};

// \partial(x): every edge with exactly one end in x. Rejects empty or full x.
Cut edge_cut(const MultiGraph& g, const std::vector<int>& x);

// G{x}: keep x, shrink the complement to one new vertex (the highest index of
// the result). Edges inside the complement vanish; boundary edges are
// redirected, preserving multiplicity.
Contraction contract(const MultiGraph& g, const std::vector<int>& x);

EdgeDeletion delete_edge(const MultiGraph& g, EdgeId e);
EdgeDeletion delete_edges(const MultiGraph& g, const std::vector<EdgeId>& es);
VertexDeletion delete_vertices(const MultiGraph& g, const std::vector<int>& vs);

// New graph with one extra edge appended (id = old edge count).
MultiGraph with_edge(const MultiGraph& g, int u, int v);

// Merge `merge` into `keep`. The two vertices must be non-adjacent (no loops).
Identification identify_vertices(const MultiGraph& g, int keep, int merge);

// Simple projection: one edge per adjacent pair (lowest ids survive).
MultiGraph underlying_simple(const MultiGraph& g);

// perm[old] = new vertex label; edge list order (= ids) is preserved.
MultiGraph relabel(const MultiGraph& g, const std::vector<int>& perm);

// ".mg" text format: optional '#' comments, "mg 1" header, "n <count>",
// then one "e <u> <v>" line per edge. Loops, bad indices and unknown
// directives are rejected.
MultiGraph read_mg(std::istream& in);
MultiGraph read_mg_file(const std::string& path);
std::string write_mg(const MultiGraph& g);
void write_mg_file(const MultiGraph& g, const std::string& path);

}  // namespace mcg
