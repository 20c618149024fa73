#include "mcg/barrier.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "mcg/matching.hpp"
#include "mcg/structure.hpp"

namespace mcg {

namespace {

std::uint64_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// rank'th k-subset of {0..n-1} in lexicographic order
std::vector<int> unrank_combination(int n, int k, std::uint64_t rank) {
  std::vector<int> out;
  out.reserve(k);
  int v = 0;
  for (int slot = k; slot > 0; --slot) {
    for (;;) {
      std::uint64_t with_v = choose(n - v - 1, slot - 1);
      if (rank < with_v) break;
      rank -= with_v;
      ++v;
    }
    out.push_back(v++);
  }
  return out;
}

std::optional<Barrier> barrier_from_mask(const MultiGraph& g, const std::vector<int>& b,
                                         const std::vector<char>& mask) {
  auto comps = components_after_removal(g, mask);
  std::vector<std::vector<int>> odd;
  for (auto& c : comps)
    if (c.size() % 2 == 1) odd.push_back(c);
  if (odd.size() != b.size()) return std::nullopt;
  Barrier out;
  out.vertices = b;
  std::sort(out.vertices.begin(), out.vertices.end());
  out.odd_components = std::move(odd);
  return out;
}

void require_pm(const MultiGraph& g) {
  if (!has_perfect_matching(g))
    throw std::invalid_argument("graph has no perfect matching");
}

bool quick_is_barrier(const MultiGraph& g, const std::vector<int>& b, std::vector<char>& mask) {
  for (int v : b) mask[v] = 1;
  bool ok = odd_components_after_removal(g, mask) == static_cast<int>(b.size());
  for (int v : b) mask[v] = 0;
  return ok;
}

}  // namespace

std::optional<Barrier> is_barrier(const MultiGraph& g, const std::vector<int>& b) {
  require_pm(g);
  if (b.empty()) throw std::invalid_argument("barriers are nonempty by convention");
  std::vector<char> mask(g.vertex_count(), 0);
  for (int v : b) {
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
    if (mask[v]) throw std::invalid_argument("duplicate vertex in set");
    mask[v] = 1;
  }
  return barrier_from_mask(g, b, mask);
}

std::vector<Barrier> all_barriers_serial(const MultiGraph& g, int max_size,
                                         const BarrierScanOptions& opts) {
  require_pm(g);
  int n = g.vertex_count();
  if (n > opts.vertex_ceiling)
    throw std::runtime_error("barrier enumeration refused: graph exceeds the vertex ceiling (" +
                             std::to_string(opts.vertex_ceiling) + ")");
  max_size = std::min(max_size, n);
  std::vector<Barrier> out;
  std::vector<char> mask(n, 0);
  for (int k = 1; k <= max_size; ++k) {
    std::uint64_t total = choose(n, k);
    for (std::uint64_t r = 0; r < total; ++r) {
      auto b = unrank_combination(n, k, r);
      if (!quick_is_barrier(g, b, mask)) continue;
      for (int v : b) mask[v] = 1;
      auto full = barrier_from_mask(g, b, mask);
      for (int v : b) mask[v] = 0;
      out.push_back(std::move(*full));
    }
  }
  if (max_size == n) {
    // enumeration is complete, so maximality is decidable by superset scan
    for (auto& b : out) {
      bool maximal = true;
      for (const auto& other : out) {
        if (other.vertices.size() <= b.vertices.size()) continue;
        if (std::includes(other.vertices.begin(), other.vertices.end(), b.vertices.begin(),
                          b.vertices.end())) {
          maximal = false;
          break;
        }
      }
      b.maximal = maximal;
    }
  }
  return out;
}

std::vector<Barrier> all_barriers(const MultiGraph& g, int max_size,
                                  const BarrierScanOptions& opts) {
  require_pm(g);
  int n = g.vertex_count();
  if (n > opts.vertex_ceiling)
    throw std::runtime_error("barrier enumeration refused: graph exceeds the vertex ceiling (" +
                             std::to_string(opts.vertex_ceiling) + ")");
  max_size = std::min(max_size, n);
  std::vector<Barrier> out;
  for (int k = 1; k <= max_size; ++k) {
    std::int64_t total = static_cast<std::int64_t>(choose(n, k));
    std::vector<char> hit(total, 0);
#pragma omp parallel
    {
      std::vector<char> mask(n, 0);
#pragma omp for schedule(static)
      for (std::int64_t r = 0; r < total; ++r) {
        auto b = unrank_combination(n, k, static_cast<std::uint64_t>(r));
        if (quick_is_barrier(g, b, mask)) hit[r] = 1;
      }
    }
    std::vector<char> mask(n, 0);
    for (std::int64_t r = 0; r < total; ++r) {
      if (!hit[r]) continue;
      auto b = unrank_combination(n, k, static_cast<std::uint64_t>(r));
      for (int v : b) mask[v] = 1;
      auto full = barrier_from_mask(g, b, mask);
      for (int v : b) mask[v] = 0;
      out.push_back(std::move(*full));
    }
  }
  if (max_size == n) {
    for (auto& b : out) {
      bool maximal = true;
      for (const auto& other : out) {
        if (other.vertices.size() <= b.vertices.size()) continue;
        if (std::includes(other.vertices.begin(), other.vertices.end(), b.vertices.begin(),
                          b.vertices.end())) {
          maximal = false;
          break;
        }
      }
      b.maximal = maximal;
    }
  }
  return out;
}

std::optional<Barrier> find_2_barrier(const MultiGraph& g) {
  require_pm(g);
  int n = g.vertex_count();
  std::int64_t total = static_cast<std::int64_t>(n) * (n - 1) / 2;
  std::int64_t best = total;
#pragma omp parallel
  {
    std::vector<char> mask(n, 0);
    std::int64_t local = total;
#pragma omp for schedule(static)
    for (std::int64_t r = 0; r < total; ++r) {
      if (r >= local) continue;
      auto b = unrank_combination(n, 2, static_cast<std::uint64_t>(r));
      if (quick_is_barrier(g, b, mask)) local = std::min(local, r);
    }
#pragma omp critical
    best = std::min(best, local);
  }
  if (best == total) return std::nullopt;
  auto b = unrank_combination(n, 2, static_cast<std::uint64_t>(best));
  return is_barrier(g, b);
}

Barrier maximal_barrier_containing(const MultiGraph& g, const std::vector<int>& b,
                                   const BarrierScanOptions& opts) {
  auto seed = is_barrier(g, b);
  if (!seed) throw std::invalid_argument("given set is not a barrier");
  int n = g.vertex_count();
  if (n > opts.vertex_ceiling)
    throw std::runtime_error("barrier superset scan refused: graph exceeds the vertex ceiling (" +
                             std::to_string(opts.vertex_ceiling) + ")");
  std::vector<int> rest;
  std::vector<char> in_b(n, 0);
  for (int v : seed->vertices) in_b[v] = 1;
  for (int v = 0; v < n; ++v)
    if (!in_b[v]) rest.push_back(v);
  int r = static_cast<int>(rest.size());
  std::vector<char> mask(n, 0);
  std::vector<int> best;
  bool have = false;
  for (std::uint64_t bits = 0; bits < (1ull << r); ++bits) {
    std::vector<int> cand(seed->vertices);
    for (int i = 0; i < r; ++i)
      if (bits & (1ull << i)) cand.push_back(rest[i]);
    std::sort(cand.begin(), cand.end());
    if (have && cand.size() < best.size()) continue;
    if (!quick_is_barrier(g, cand, mask)) continue;
    if (!have || cand.size() > best.size() || (cand.size() == best.size() && cand < best)) {
      best = cand;
      have = true;
    }
  }
  auto out = is_barrier(g, best);
  out->maximal = true;
  return *out;
}

bool is_factor_critical(const MultiGraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!has_perfect_matching(delete_vertices(g, {v}).graph)) return false;
  return true;
}

bool is_bicritical(const MultiGraph& g) {
  if (g.vertex_count() < 4)
    throw std::invalid_argument("bicriticality needs at least four vertices");
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (!has_perfect_matching(delete_vertices(g, {u, v}).graph)) return false;
  return true;
}

}  // namespace mcg
