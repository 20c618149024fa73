#include "mcg/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mcg {

namespace {

struct CanonSearch {
  int n;
  std::vector<std::vector<std::uint8_t>> mult;  // symmetric multiplicity matrix
  std::vector<std::vector<int>> nbrs;           // simple adjacency, sorted

  std::string best;
  std::vector<int> best_perm;  // vertex -> canonical position
  bool have_best = false;

  explicit CanonSearch(const MultiGraph& g, bool clamp) : n(g.vertex_count()) {
    mult.assign(n, std::vector<std::uint8_t>(n, 0));
    nbrs.resize(n);
    for (const Edge& e : g.edges()) {
      if (mult[e.u][e.v] == 255) throw std::runtime_error("edge multiplicity over 255");
      ++mult[e.u][e.v];
      ++mult[e.v][e.u];
    }
    if (clamp)
      for (auto& row : mult)
        for (auto& m : row)
          if (m > 1) m = 1;
    for (int v = 0; v < n; ++v) nbrs[v] = g.neighbors(v);
  }

  // Iterated neighbourhood refinement; colors are dense ranks, and each pass
  // only splits classes (order-preserving), so a fixpoint is plain equality.
  std::vector<int> refine(std::vector<int> colors) const {
    for (;;) {
      std::vector<std::vector<int>> sig(n);
      for (int v = 0; v < n; ++v) {
        auto& s = sig[v];
        s.push_back(colors[v]);
        std::vector<std::pair<int, int>> around;
        around.reserve(nbrs[v].size());
        for (int w : nbrs[v]) around.emplace_back(colors[w], mult[v][w]);
        std::sort(around.begin(), around.end());
        for (auto& [c, m] : around) {
          s.push_back(c);
          s.push_back(m);
        }
      }
      std::vector<int> order(n);
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(),
                [&](int a, int b) { return sig[a] < sig[b]; });
      std::vector<int> next(n, 0);
      int rank = 0;
      for (int i = 1; i < n; ++i) {
        if (sig[order[i]] != sig[order[i - 1]]) ++rank;
        next[order[i]] = rank;
      }
      if (next == colors) return colors;
      colors = std::move(next);
    }
  }

  std::string encode(const std::vector<int>& perm) const {
    std::vector<int> inv(n);
    for (int v = 0; v < n; ++v) inv[perm[v]] = v;
    std::string out;
    out.reserve(1 + n * (n - 1) / 2);
    out.push_back(static_cast<char>(n));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        out.push_back(static_cast<char>(mult[inv[i]][inv[j]]));
    return out;
  }

  void search(std::vector<int> colors) {
    colors = refine(std::move(colors));
    // first smallest non-singleton class
    std::vector<int> class_size(n, 0);
    for (int c : colors) ++class_size[c];
    int target = -1;
    for (int c = 0; c < n; ++c) {
      if (class_size[c] < 2) continue;
      if (target == -1 || class_size[c] < class_size[target]) target = c;
    }
    if (target == -1) {
      std::string enc = encode(colors);
      if (!have_best || enc < best) {
        best = std::move(enc);
        best_perm = colors;
        have_best = true;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (colors[v] != target) continue;
      std::vector<int> branch(colors);
      branch[v] = n;  // individualize; refine renumbers densely
      search(std::move(branch));
    }
  }

  void run() {
    if (n == 0) {
      best = std::string(1, '\0');
      have_best = true;
      return;
    }
    search(std::vector<int>(n, 0));
  }
};

std::pair<std::string, std::vector<int>> canonical(const MultiGraph& g, bool clamp) {
  CanonSearch cs(g, clamp);
  cs.run();
  return {cs.best, cs.best_perm};
}

}  // namespace

std::string canonical_form(const MultiGraph& g) { return canonical(g, false).first; }

std::string simple_canonical_form(const MultiGraph& g) { return canonical(g, true).first; }

std::vector<int> canonical_labeling(const MultiGraph& g) { return canonical(g, false).second; }

bool is_isomorphic(const MultiGraph& a, const MultiGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::optional<std::vector<int>> find_isomorphism(const MultiGraph& a, const MultiGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return std::nullopt;
  auto [fa, pa] = canonical(a, false);
  auto [fb, pb] = canonical(b, false);
  if (fa != fb) return std::nullopt;
  int n = a.vertex_count();
  std::vector<int> inv_b(n);
  for (int v = 0; v < n; ++v) inv_b[pb[v]] = v;
  std::vector<int> iso(n);
  for (int v = 0; v < n; ++v) iso[v] = inv_b[pa[v]];
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (a.multiplicity(u, v) != b.multiplicity(iso[u], iso[v]))
        throw std::logic_error("canonical labelings disagree with isomorphism");
  return iso;
}

std::uint64_t digest64(const MultiGraph& g) {
  std::string form = canonical_form(g);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : form) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string digest_hex(const MultiGraph& g) {
  std::uint64_t h = digest64(g);
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace mcg
