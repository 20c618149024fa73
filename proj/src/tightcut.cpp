#include "mcg/tightcut.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "mcg/canonical.hpp"
#include "mcg/matching.hpp"
#include "mcg/structure.hpp"

namespace mcg {

namespace {

bool meets_every_matching_once(const std::vector<PerfectMatching>& pms,
                               const std::vector<EdgeId>& boundary) {
  if (pms.empty()) return false;
  int max_id = 0;
  for (const auto& pm : pms)
    for (EdgeId e : pm.edge_ids) max_id = std::max(max_id, e);
  for (EdgeId e : boundary) max_id = std::max(max_id, e);
  std::vector<char> in_cut(max_id + 1, 0);
  for (EdgeId e : boundary) in_cut[e] = 1;
  for (const auto& pm : pms) {
    int hits = 0;
    for (EdgeId e : pm.edge_ids)
      if (in_cut[e] && ++hits > 1) return false;
    if (hits != 1) return false;
  }
  return true;
}

// side of the cut containing vertex 0, sorted
std::vector<int> normalize_side(int n, const std::vector<int>& x) {
  std::vector<char> in(n, 0);
  for (int v : x) in[v] = 1;
  std::vector<int> out;
  bool flip = !in[0];
  for (int v = 0; v < n; ++v)
    if (in[v] != flip) out.push_back(v);
  return out;
}

struct CandidateOrder {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const { return a < b; }
};

}  // namespace

bool is_tight_cut(const MultiGraph& g, const Cut& c) {
  if (!is_matching_covered(g)) throw std::invalid_argument("graph is not matching covered");
  return meets_every_matching_once(enumerate_perfect_matchings(g), c.boundary);
}

Cut barrier_cut(const MultiGraph& g, const Barrier& b, int component_index) {
  if (component_index < 0 ||
      component_index >= static_cast<int>(b.odd_components.size()))
    throw std::invalid_argument("barrier component index out of range");
  return edge_cut(g, b.odd_components[component_index]);
}

std::optional<Cut> find_nontrivial_tight_cut(const MultiGraph& g, const TightCutOptions& opts) {
  int n = g.vertex_count();
  if (n < 4) return std::nullopt;

  bool three_connected = is_k_connected(g, 3);
  bool bicritical = is_bicritical(g);
  // bricks have no nontrivial tight cut
  if (three_connected && bicritical) return std::nullopt;

  std::optional<std::vector<PerfectMatching>> pms;
  auto matchings = [&]() -> const std::vector<PerfectMatching>& {
    if (!pms) pms = enumerate_perfect_matchings(g);
    return *pms;
  };
  auto validate = [&](const std::vector<int>& side) -> std::optional<Cut> {
    Cut c = edge_cut(g, side);
    if (meets_every_matching_once(matchings(), c.boundary)) return c;
    return std::nullopt;
  };

  // stage 1: barrier cuts, preferring the smallest barrier size that yields any
  {
    int max_size = n <= opts.barrier_ceiling ? n : opts.bounded_barrier_size;
    BarrierScanOptions bopts;
    bopts.vertex_ceiling = std::max(opts.barrier_ceiling, n);
    auto barriers = all_barriers(g, max_size, bopts);
    for (int k = 2; k <= max_size; ++k) {
      std::set<std::vector<int>, CandidateOrder> candidates;
      for (const auto& b : barriers) {
        if (static_cast<int>(b.vertices.size()) != k) continue;
        for (const auto& comp : b.odd_components) {
          int size = static_cast<int>(comp.size());
          if (size < 2 || size > n - 2) continue;
          candidates.insert(normalize_side(n, comp));
        }
      }
      for (const auto& side : candidates)
        if (auto c = validate(side)) return c;
    }
  }

  // stage 2: 2-separation cuts of bicritical graphs
  if (bicritical && !three_connected) {
    std::set<std::vector<int>, CandidateOrder> candidates;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        std::vector<char> removed(n, 0);
        removed[u] = removed[v] = 1;
        auto comps = components_after_removal(g, removed);
        if (comps.size() < 2) continue;
        for (const auto& comp : comps) {
          for (int w : {u, v}) {
            std::vector<int> side(comp);
            side.push_back(w);
            std::sort(side.begin(), side.end());
            int size = static_cast<int>(side.size());
            if (size < 2 || size > n - 2) continue;
            candidates.insert(normalize_side(n, side));
          }
        }
      }
    for (const auto& side : candidates)
      if (auto c = validate(side)) return c;
  }

  // stage 3: exhaustive validated scan
  if (n > opts.exhaustive_threshold)
    throw std::runtime_error(
        "tight cut search: graph exceeds the exhaustive threshold and the structured "
        "searches found nothing");
  std::vector<int> side;
  // enumerate sides containing vertex 0 in lexicographic order
  auto rec = [&](auto&& self, int next) -> std::optional<Cut> {
    int size = static_cast<int>(side.size());
    if (size >= 2 && size <= n - 2 && size % 2 == 1)
      if (auto c = validate(side)) return c;
    if (next == n) return std::nullopt;
    for (int v = next; v < n; ++v) {
      side.push_back(v);
      if (auto c = self(self, v + 1)) return c;
      side.pop_back();
    }
    return std::nullopt;
  };
  side.push_back(0);
  return rec(rec, 1);
}

namespace {

void build_node(DecompositionNode& node, const TightCutOptions& opts) {
  const MultiGraph& h = node.graph;
  if (!is_matching_covered(h))
    throw std::logic_error("decomposition produced a non matching covered contraction");
  auto cut = find_nontrivial_tight_cut(h, opts);
  if (!cut) {
    node.leaf_class = is_bipartite(h) ? LeafClass::Brace : LeafClass::Brick;
    return;
  }
  node.cut = std::move(cut);
  std::vector<char> in(h.vertex_count(), 0);
  for (int v : node.cut->x_side) in[v] = 1;
  std::vector<int> comp;
  for (int v = 0; v < h.vertex_count(); ++v)
    if (!in[v]) comp.push_back(v);
  node.left = std::make_unique<DecompositionNode>();
  node.left->graph = contract(h, node.cut->x_side).graph;
  node.right = std::make_unique<DecompositionNode>();
  node.right->graph = contract(h, comp).graph;
  build_node(*node.left, opts);
  build_node(*node.right, opts);
}

void collect_leaves(const DecompositionNode& node, DecompositionTree& tree,
                    const std::string& k4_form, const std::string& c6bar_form) {
  if (node.leaf_class) {
    std::string form = simple_canonical_form(node.graph);
    tree.leaf_simple_forms.push_back(form);
    if (*node.leaf_class == LeafClass::Brick) {
      ++tree.brick_count;
      if (form != k4_form && form != c6bar_form) {
        ++tree.b_star;
        tree.leaf_orders.push_back(node.graph.vertex_count());
      }
    } else {
      ++tree.brace_count;
    }
    return;
  }
  collect_leaves(*node.left, tree, k4_form, c6bar_form);
  collect_leaves(*node.right, tree, k4_form, c6bar_form);
}

const std::string& k4_simple_form() {
  static const std::string form = simple_canonical_form(
      MultiGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
  return form;
}

const std::string& c6bar_simple_form() {
  static const std::string form = simple_canonical_form(MultiGraph(
      6, {{0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 5}}));
  return form;
}

}  // namespace

DecompositionTree decompose(const MultiGraph& g, unsigned seed, const TightCutOptions& opts) {
  MultiGraph root_graph = g;
  if (seed != 0) {
    std::vector<int> perm(g.vertex_count());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    std::mt19937 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    root_graph = relabel(g, perm);
  }
  if (!is_matching_covered(root_graph))
    throw std::invalid_argument("graph is not matching covered");
  DecompositionTree tree;
  tree.root = std::make_unique<DecompositionNode>();
  tree.root->graph = std::move(root_graph);
  build_node(*tree.root, opts);
  collect_leaves(*tree.root, tree, k4_simple_form(), c6bar_simple_form());
  std::sort(tree.leaf_simple_forms.begin(), tree.leaf_simple_forms.end());
  std::sort(tree.leaf_orders.begin(), tree.leaf_orders.end(), std::greater<int>());
  return tree;
}

GraphClass classify(const MultiGraph& g, const TightCutOptions& opts) {
  if (!is_matching_covered(g)) throw std::invalid_argument("graph is not matching covered");
  if (find_nontrivial_tight_cut(g, opts)) return GraphClass::Neither;
  if (is_bipartite(g)) return GraphClass::Brace;
  // cross-check the brick verdict
  bool elp = g.vertex_count() >= 4 && is_k_connected(g, 3) && is_bicritical(g);
  if (!elp)
    throw std::logic_error("brick verdict disagrees with the 3-connected bicritical criterion");
  return GraphClass::Brick;
}

namespace {

void text_node(const DecompositionNode& node, int depth, std::ostringstream& out) {
  std::string pad(2 * depth, ' ');
  out << pad << "node n=" << node.graph.vertex_count() << " m=" << node.graph.edge_count();
  if (node.leaf_class) {
    out << " leaf=" << (*node.leaf_class == LeafClass::Brick ? "brick" : "brace") << "\n";
    return;
  }
  out << "\n" << pad << "  cut x=[";
  for (std::size_t i = 0; i < node.cut->x_side.size(); ++i)
    out << (i ? " " : "") << node.cut->x_side[i];
  out << "] boundary=[";
  for (std::size_t i = 0; i < node.cut->boundary.size(); ++i)
    out << (i ? " " : "") << node.cut->boundary[i];
  out << "]\n";
  text_node(*node.left, depth + 1, out);
  text_node(*node.right, depth + 1, out);
}

nlohmann::json json_node(const DecompositionNode& node) {
  nlohmann::json j;
  j["n"] = node.graph.vertex_count();
  j["m"] = node.graph.edge_count();
  if (node.leaf_class) {
    j["leaf"] = *node.leaf_class == LeafClass::Brick ? "brick" : "brace";
    return j;
  }
  j["cut"] = {{"x", node.cut->x_side}, {"boundary", node.cut->boundary}};
  j["children"] = nlohmann::json::array({json_node(*node.left), json_node(*node.right)});
  return j;
}

}  // namespace

std::string decomposition_text(const DecompositionTree& tree) {
  std::ostringstream out;
  text_node(*tree.root, 0, out);
  out << "leaves bricks=" << tree.brick_count << " braces=" << tree.brace_count
      << " b_star=" << tree.b_star << " orders=[";
  for (std::size_t i = 0; i < tree.leaf_orders.size(); ++i)
    out << (i ? " " : "") << tree.leaf_orders[i];
  out << "]\n";
  return out.str();
}

std::string decomposition_json(const DecompositionTree& tree) {
  nlohmann::json j;
  j["schema"] = "mcg-decomposition/1";
  j["root"] = json_node(*tree.root);
  j["brick_count"] = tree.brick_count;
  j["brace_count"] = tree.brace_count;
  j["b_star"] = tree.b_star;
  j["leaf_orders"] = tree.leaf_orders;
  return j.dump(2);
}

}  // namespace mcg
