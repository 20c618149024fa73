#include "mcg/multigraph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace mcg {

MultiGraph::MultiGraph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  edges_.reserve(edges.size());
  incident_.resize(n_);
  simple_adj_.resize(n_);
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= n_ || b < 0 || b >= n_)
      throw std::invalid_argument("edge endpoint out of range");
    if (a == b) throw std::invalid_argument("loops are not allowed");
    EdgeId id = static_cast<EdgeId>(edges_.size());
    edges_.push_back({std::min(a, b), std::max(a, b)});
    incident_[a].emplace_back(b, id);
    incident_[b].emplace_back(a, id);
  }
  for (int v = 0; v < n_; ++v) {
    auto& adj = simple_adj_[v];
    for (const auto& [w, id] : incident_[v]) adj.push_back(w);
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }
}

const Edge& MultiGraph::edge(EdgeId e) const {
  if (e < 0 || e >= edge_count()) throw std::invalid_argument("invalid edge id");
  return edges_[e];
}

void MultiGraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
}

int MultiGraph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(incident_[v].size());
}

int MultiGraph::simple_degree(int v) const {
  check_vertex(v);
  return static_cast<int>(simple_adj_[v].size());
}

const std::vector<int>& MultiGraph::neighbors(int v) const {
  check_vertex(v);
  return simple_adj_[v];
}

const std::vector<std::pair<int, EdgeId>>& MultiGraph::incident(int v) const {
  check_vertex(v);
  return incident_[v];
}

int MultiGraph::multiplicity(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  int count = 0;
  for (const auto& [w, id] : incident_[u])
    if (w == v) ++count;
  return count;
}

bool MultiGraph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& adj = simple_adj_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::optional<EdgeId> MultiGraph::find_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  std::optional<EdgeId> best;
  for (const auto& [w, id] : incident_[u])
    if (w == v && (!best || id < *best)) best = id;
  return best;
}

namespace {

std::vector<char> side_mask(const MultiGraph& g, const std::vector<int>& x) {
  std::vector<char> in(g.vertex_count(), 0);
  for (int v : x) {
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
    if (in[v]) throw std::invalid_argument("duplicate vertex in set");
    in[v] = 1;
  }
  return in;
}

}  // namespace

Cut edge_cut(const MultiGraph& g, const std::vector<int>& x) {
  auto in = side_mask(g, x);
  int k = static_cast<int>(x.size());
  if (k == 0 || k == g.vertex_count())
    throw std::invalid_argument("cut side must be a nonempty proper subset");
  Cut c;
  c.x_side = x;
  std::sort(c.x_side.begin(), c.x_side.end());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (in[ed.u] != in[ed.v]) c.boundary.push_back(e);
  }
  c.trivial = (k == 1 || k == g.vertex_count() - 1);
  return c;
}

Contraction contract(const MultiGraph& g, const std::vector<int>& x) {
  auto in = side_mask(g, x);
  int k = static_cast<int>(x.size());
  if (k == 0 || k == g.vertex_count())
    throw std::invalid_argument("contraction side must be a nonempty proper subset");
  std::vector<int> side(x);
  std::sort(side.begin(), side.end());
  Contraction res;
  res.vertex_map.assign(g.vertex_count(), k);  // complement -> shrunk vertex
  for (int i = 0; i < k; ++i) res.vertex_map[side[i]] = i;
  res.shrunk = k;
  res.edge_map.assign(g.edge_count(), -1);
  std::vector<std::pair<int, int>> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (!in[ed.u] && !in[ed.v]) continue;  // inside the complement: vanishes
    res.edge_map[e] = static_cast<EdgeId>(edges.size());
    edges.emplace_back(res.vertex_map[ed.u], res.vertex_map[ed.v]);
  }
  res.graph = MultiGraph(k + 1, edges);
  return res;
}

EdgeDeletion delete_edge(const MultiGraph& g, EdgeId e) {
  return delete_edges(g, {e});
}

EdgeDeletion delete_edges(const MultiGraph& g, const std::vector<EdgeId>& es) {
  std::vector<char> drop(g.edge_count(), 0);
  for (EdgeId e : es) {
    if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("invalid edge id");
    drop[e] = 1;
  }
  EdgeDeletion res;
  res.edge_map.assign(g.edge_count(), -1);
  std::vector<std::pair<int, int>> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (drop[e]) continue;
    res.edge_map[e] = static_cast<EdgeId>(edges.size());
    edges.emplace_back(g.edge(e).u, g.edge(e).v);
  }
  res.graph = MultiGraph(g.vertex_count(), edges);
  return res;
}

VertexDeletion delete_vertices(const MultiGraph& g, const std::vector<int>& vs) {
  std::vector<char> drop(g.vertex_count(), 0);
  for (int v : vs) {
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
    drop[v] = 1;
  }
  VertexDeletion res;
  res.vertex_map.assign(g.vertex_count(), -1);
  int next = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!drop[v]) res.vertex_map[v] = next++;
  res.edge_map.assign(g.edge_count(), -1);
  std::vector<std::pair<int, int>> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (drop[ed.u] || drop[ed.v]) continue;
    res.edge_map[e] = static_cast<EdgeId>(edges.size());
    edges.emplace_back(res.vertex_map[ed.u], res.vertex_map[ed.v]);
  }
  res.graph = MultiGraph(next, edges);
  return res;
}

MultiGraph with_edge(const MultiGraph& g, int u, int v) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edge_count() + 1);
  for (const Edge& e : g.edges()) edges.emplace_back(e.u, e.v);
  edges.emplace_back(u, v);
  return MultiGraph(g.vertex_count(), edges);
}

Identification identify_vertices(const MultiGraph& g, int keep, int merge) {
  if (keep < 0 || keep >= g.vertex_count() || merge < 0 || merge >= g.vertex_count())
    throw std::invalid_argument("vertex out of range");
  if (keep == merge) throw std::invalid_argument("cannot identify a vertex with itself");
  if (g.adjacent(keep, merge))
    throw std::invalid_argument("identifying adjacent vertices would create a loop");
  Identification res;
  res.vertex_map.assign(g.vertex_count(), -1);
  int next = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (v != merge) res.vertex_map[v] = next++;
  res.vertex_map[merge] = res.vertex_map[keep];
  res.merged = res.vertex_map[keep];
  res.edge_map.assign(g.edge_count(), -1);
  std::vector<std::pair<int, int>> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    res.edge_map[e] = static_cast<EdgeId>(edges.size());
    edges.emplace_back(res.vertex_map[ed.u], res.vertex_map[ed.v]);
  }
  res.graph = MultiGraph(g.vertex_count() - 1, edges);
  return res;
}

MultiGraph underlying_simple(const MultiGraph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int w : g.neighbors(u))
      if (u < w) edges.emplace_back(u, w);
  return MultiGraph(g.vertex_count(), edges);
}

MultiGraph relabel(const MultiGraph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.vertex_count())
    throw std::invalid_argument("permutation size mismatch");
  std::vector<char> hit(g.vertex_count(), 0);
  for (int p : perm) {
    if (p < 0 || p >= g.vertex_count() || hit[p])
      throw std::invalid_argument("not a permutation");
    hit[p] = 1;
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return MultiGraph(g.vertex_count(), edges);
}

MultiGraph read_mg(std::istream& in) {
  std::string line;
  int lineno = 0;
  bool saw_header = false;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    // strip trailing CR and surrounding whitespace
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    std::istringstream ls(line.substr(start));
    std::string tok;
    ls >> tok;
    auto fail = [&](const std::string& msg) {
      throw std::runtime_error("mg parse error, line " + std::to_string(lineno) + ": " + msg);
    };
    if (tok == "mg") {
      int version = -1;
      if (!(ls >> version) || version != 1) fail("unsupported format version");
      saw_header = true;
    } else if (tok == "n") {
      if (!saw_header) fail("missing 'mg 1' header");
      if (n >= 0) fail("duplicate vertex count");
      if (!(ls >> n) || n < 0) fail("bad vertex count");
    } else if (tok == "e") {
      if (n < 0) fail("edge before vertex count");
      int u = -1, v = -1;
      if (!(ls >> u >> v)) fail("bad edge line");
      if (u < 0 || u >= n || v < 0 || v >= n) fail("edge endpoint out of range");
      if (u == v) fail("loops are not allowed");
      edges.emplace_back(u, v);
    } else {
      fail("unknown directive '" + tok + "'");
    }
    std::string rest;
    if (ls >> rest) fail("trailing tokens");
  }
  if (!saw_header) throw std::runtime_error("mg parse error: missing 'mg 1' header");
  if (n < 0) throw std::runtime_error("mg parse error: missing vertex count");
  return MultiGraph(n, edges);
}

MultiGraph read_mg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_mg(in);
}

std::string write_mg(const MultiGraph& g) {
  std::ostringstream out;
  out << "mg 1\n";
  out << "n " << g.vertex_count() << "\n";
  for (const Edge& e : g.edges()) out << "e " << e.u << " " << e.v << "\n";
  return out.str();
}

void write_mg_file(const MultiGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << write_mg(g);
}

}  // namespace mcg
