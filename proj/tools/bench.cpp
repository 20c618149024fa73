// Times the parallel kernels against their serial reference implementations
// and checks that both produce identical results.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mcg/barrier.hpp"
#include "mcg/family.hpp"
#include "mcg/matching.hpp"
#include "mcg/named.hpp"
#include "mcg/structure.hpp"

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double time_ms(F&& f, int reps) {
  auto t0 = Clock::now();
  for (int i = 0; i < reps; ++i) f();
  auto t1 = Clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

void bench_removable(const std::string& name, const mcg::MultiGraph& g, int reps) {
  std::vector<mcg::EdgeId> serial, parallel;
  double ts = time_ms([&] { serial = mcg::removable_edges_serial(g); }, reps);
  double tp = time_ms([&] { parallel = mcg::removable_edges(g); }, reps);
  std::printf("removable_edges  %-18s n=%3d m=%3d  serial %8.2f ms  parallel %8.2f ms  x%.2f  %s\n",
              name.c_str(), g.vertex_count(), g.edge_count(), ts, tp, ts / tp,
              serial == parallel ? "match" : "MISMATCH");
}

void bench_barriers(const std::string& name, const mcg::MultiGraph& g, int reps) {
  std::vector<mcg::Barrier> serial, parallel;
  int max_size = g.vertex_count();
  double ts = time_ms([&] { serial = mcg::all_barriers_serial(g, max_size); }, reps);
  double tp = time_ms([&] { parallel = mcg::all_barriers(g, max_size); }, reps);
  bool match = serial.size() == parallel.size();
  for (std::size_t i = 0; match && i < serial.size(); ++i)
    match = serial[i].vertices == parallel[i].vertices;
  std::printf("all_barriers     %-18s n=%3d m=%3d  serial %8.2f ms  parallel %8.2f ms  x%.2f  %s\n",
              name.c_str(), g.vertex_count(), g.edge_count(), ts, tp, ts / tp,
              match ? "match" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("openmp: not enabled\n");
#endif

  auto h1 = mcg::named(mcg::NamedTag::H1).graph;
  auto k4 = mcg::named(mcg::NamedTag::K4).graph;
  auto sharp = mcg::e_join(h1, mcg::ridges(h1).front(), k4, 0, 0).graph;
  auto tk33 = mcg::triangle_replace(mcg::named(mcg::NamedTag::K33).graph);

  bench_removable("h1", h1, 5);
  bench_removable("ejoin(h1,k4)", sharp, 3);
  bench_removable("triangles(k33)", tk33, 3);

  bench_barriers("c6bar", mcg::named(mcg::NamedTag::C6bar).graph, 20);
  bench_barriers("h1", h1, 5);
  bench_barriers("cube", mcg::cube_graph(), 20);
  return 0;
}
