// Benchmark comparing the serial reference kernels against the OpenMP
// versions on representative workloads.

#include "chamberworks/convexity.hpp"
#include "chamberworks/json_io.hpp"
#include "chamberworks/kernels.hpp"
#include "chamberworks/prng.hpp"

#include <chrono>
#include <cstdio>

using namespace chamberworks;

namespace {

double seconds(std::chrono::steady_clock::time_point a,
               std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

template <typename F>
double timed(F&& f, int reps = 3) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, seconds(t0, t1));
  }
  return best;
}

} // namespace

int main() {
  std::printf("building F4 complex...\n");
  auto f4 = build_named_complex("F4", 0);
  std::printf("faces: %d, walls: %d\n", f4->num_faces(), f4->num_walls());

  std::vector<int> all_faces(f4->num_faces());
  for (int i = 0; i < f4->num_faces(); ++i) all_faces[i] = i;

  // a wide cone: two far chambers
  int c1 = f4->first_chamber();
  int c2 = f4->num_faces() - 7;
  std::vector<Vec> gens;
  for (std::int32_t v : f4->face_vertices(c1))
    gens.push_back(f4->vertex_ray(v));
  for (std::int32_t v : f4->face_vertices(c2))
    gens.push_back(f4->vertex_ray(v));
  std::vector<Vec> span;
  for (const Vec& g : gens) {
    std::vector<Vec> trial = span;
    trial.push_back(g);
    if (rank_of(trial) > (int)span.size()) span.push_back(g);
  }

  double ts = timed([&] {
    kernels::cone_membership_serial(*f4, all_faces, gens, span);
  });
  double tp = timed([&] {
    kernels::cone_membership_parallel(*f4, all_faces, gens, span);
  });
  std::printf("cone membership over %zu faces: serial %.3fs  parallel %.3fs  "
              "speedup %.2fx\n",
              all_faces.size(), ts, tp, ts / tp);

  // envelope mask on E6 (larger vertex/face set)
  std::printf("building E6 complex (this takes a little while)...\n");
  auto e6 = build_named_complex("E6", 0);
  std::printf("faces: %d, vertices: %d\n", e6->num_faces(),
              e6->num_vertices());
  std::vector<int> some_vertices;
  for (int v = 0; v < e6->num_vertices(); v += 7) some_vertices.push_back(v);
  auto constraints = kernels::envelope_constraints(*e6, some_vertices);
  double es = timed([&] {
    auto m = kernels::envelope_vertex_mask_serial(*e6, constraints);
    kernels::faces_within_mask_serial(*e6, m);
  });
  double ep = timed([&] {
    auto m = kernels::envelope_vertex_mask_parallel(*e6, constraints);
    kernels::faces_within_mask_parallel(*e6, m);
  });
  std::printf("envelope filter over %d faces: serial %.3fs  parallel %.3fs  "
              "speedup %.2fx\n",
              e6->num_faces(), es, ep, es / ep);

  // angle table sweep
  std::vector<int> a, b;
  for (int v = 0; v < e6->num_vertices(); v += 2) a.push_back(v);
  for (int v = 1; v < e6->num_vertices(); v += 2) b.push_back(v);
  double as = timed(
      [&] { kernels::angle_table_serial(*e6, a, b); }, 1);
  double ap = timed(
      [&] { kernels::angle_table_parallel(*e6, a, b); }, 1);
  std::printf("angle table %zux%zu: serial %.3fs  parallel %.3fs  speedup "
              "%.2fx\n",
              a.size(), b.size(), as, ap, as / ap);
  return 0;
}
