#include "mcg/matching.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "mcg/structure.hpp"

namespace mcg {

namespace {

// Classic augmenting-path maximum matching with blossom contraction,
// O(V^3); parallel edges are irrelevant here so it runs on the simple
// adjacency.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const MultiGraph& g) : n_(g.vertex_count()), adj_(n_) {
    for (int v = 0; v < n_; ++v) adj_[v] = g.neighbors(v);
    match_.assign(n_, -1);
  }

  int run() {
    for (int v = 0; v < n_; ++v)
      if (match_[v] == -1)
        for (int u : adj_[v])
          if (match_[u] == -1) {
            match_[v] = u;
            match_[u] = v;
            break;
          }
    for (int v = 0; v < n_; ++v)
      if (match_[v] == -1) {
        int leaf = find_augmenting_path(v);
        if (leaf != -1) augment(leaf);
      }
    int matched = 0;
    for (int v = 0; v < n_; ++v)
      if (match_[v] != -1) ++matched;
    return matched / 2;
  }

 private:
  int lca(int a, int b) const {
    std::vector<char> seen(n_, 0);
    for (;;) {
      a = base_[a];
      seen[a] = 1;
      if (match_[a] == -1) break;
      a = p_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = p_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = 1;
      blossom_[base_[match_[v]]] = 1;
      p_[v] = child;
      child = match_[v];
      v = p_[match_[v]];
    }
  }

  int find_augmenting_path(int root) {
    used_.assign(n_, 0);
    p_.assign(n_, -1);
    base_.resize(n_);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = 1;
    queue_.clear();
    queue_.push_back(root);
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      int v = queue_[qi];
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && p_[match_[to]] != -1)) {
          int curbase = lca(v, to);
          blossom_.assign(n_, 0);
          mark_path(v, curbase, to);
          mark_path(to, curbase, v);
          for (int i = 0; i < n_; ++i)
            if (blossom_[base_[i]]) {
              base_[i] = curbase;
              if (!used_[i]) {
                used_[i] = 1;
                queue_.push_back(i);
              }
            }
        } else if (p_[to] == -1) {
          p_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = 1;
          queue_.push_back(match_[to]);
        }
      }
    }
    return -1;
  }

  void augment(int v) {
    while (v != -1) {
      int pv = p_[v], next = match_[pv];
      match_[v] = pv;
      match_[pv] = v;
      v = next;
    }
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_, p_, base_, queue_;
  std::vector<char> used_, blossom_;
};

void enumerate_rec(const MultiGraph& g, std::vector<char>& covered, int covered_count,
                   std::vector<EdgeId>& current, std::vector<PerfectMatching>& out) {
  int n = g.vertex_count();
  if (covered_count == n) {
    PerfectMatching pm;
    pm.edge_ids = current;
    std::sort(pm.edge_ids.begin(), pm.edge_ids.end());
    out.push_back(std::move(pm));
    return;
  }
  int v = 0;
  while (covered[v]) ++v;
  covered[v] = 1;
  for (const auto& [w, id] : g.incident(v)) {
    if (covered[w]) continue;
    covered[w] = 1;
    current.push_back(id);
    enumerate_rec(g, covered, covered_count + 2, current, out);
    current.pop_back();
    covered[w] = 0;
  }
  covered[v] = 0;
}

}  // namespace

int maximum_matching_size(const MultiGraph& g) { return BlossomMatcher(g).run(); }

bool has_perfect_matching(const MultiGraph& g) {
  int n = g.vertex_count();
  if (n % 2 != 0) return false;
  if (n == 0) return true;
  return maximum_matching_size(g) == n / 2;
}

std::vector<PerfectMatching> enumerate_perfect_matchings(const MultiGraph& g) {
  std::vector<PerfectMatching> out;
  if (g.vertex_count() % 2 != 0) return out;
  std::vector<char> covered(g.vertex_count(), 0);
  std::vector<EdgeId> current;
  enumerate_rec(g, covered, 0, current, out);
  std::sort(out.begin(), out.end(),
            [](const PerfectMatching& a, const PerfectMatching& b) {
              return a.edge_ids < b.edge_ids;
            });
  return out;
}

bool is_admissible(const MultiGraph& g, EdgeId e) {
  const Edge& ed = g.edge(e);
  return has_perfect_matching(delete_vertices(g, {ed.u, ed.v}).graph);
}

std::optional<EdgeId> first_inadmissible(const MultiGraph& g) {
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (!is_admissible(g, e)) return e;
  return std::nullopt;
}

bool is_matching_covered(const MultiGraph& g) {
  if (g.vertex_count() < 2 || g.edge_count() == 0) return false;
  if (g.vertex_count() % 2 != 0) return false;
  if (!is_connected(g)) return false;
  return !first_inadmissible(g).has_value();
}

bool is_removable(const MultiGraph& g, EdgeId e) {
  return is_matching_covered(delete_edge(g, e).graph);
}

std::vector<EdgeId> removable_edges_serial(const MultiGraph& g) {
  if (!is_matching_covered(g)) throw std::invalid_argument("graph is not matching covered");
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (is_removable(g, e)) out.push_back(e);
  return out;
}

std::vector<EdgeId> removable_edges(const MultiGraph& g) {
  if (!is_matching_covered(g)) throw std::invalid_argument("graph is not matching covered");
  int m = g.edge_count();
  std::vector<char> flag(m, 0);
#pragma omp parallel for schedule(dynamic)
  for (EdgeId e = 0; e < m; ++e) flag[e] = is_removable(g, e) ? 1 : 0;
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < m; ++e)
    if (flag[e]) out.push_back(e);
  return out;
}

bool depends_on(const MultiGraph& g, EdgeId e, EdgeId f) {
  if (e == f) throw std::invalid_argument("dependence needs two distinct edges");
  auto del = delete_edge(g, f);
  return !is_admissible(del.graph, del.edge_map[e]);
}

std::vector<std::vector<EdgeId>> dependence_classes(const MultiGraph& g) {
  if (!is_matching_covered(g)) throw std::invalid_argument("graph is not matching covered");
  int m = g.edge_count();
  // mutual dependence; union-find over edge ids
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (EdgeId e = 0; e < m; ++e)
    for (EdgeId f = e + 1; f < m; ++f)
      if (depends_on(g, e, f) && depends_on(g, f, e)) parent[find(e)] = find(f);
  std::vector<std::vector<EdgeId>> classes(m);
  for (EdgeId e = 0; e < m; ++e) classes[find(e)].push_back(e);
  std::vector<std::vector<EdgeId>> out;
  for (auto& c : classes)
    if (!c.empty()) {
      std::sort(c.begin(), c.end());
      out.push_back(std::move(c));
    }
  std::sort(out.begin(), out.end());
  return out;
}

EdgeClassification classify_edges(const MultiGraph& g) {
  EdgeClassification res;
  res.admissible.resize(g.edge_count());
  bool all = true;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    res.admissible[e] = is_admissible(g, e);
    all = all && res.admissible[e];
  }
  if (all && is_matching_covered(g)) {
    std::vector<bool> rem(g.edge_count(), false);
    for (EdgeId e : removable_edges(g)) rem[e] = true;
    res.removable = std::move(rem);
  }
  return res;
}

}  // namespace mcg
