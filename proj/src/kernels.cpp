#include "chamberworks/kernels.hpp"

#include <atomic>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace chamberworks {
namespace kernels {

namespace {

int g_threads = 0;
bool g_force_serial = false;

int env_threads() {
  static int cached = [] {
    const char* s = std::getenv("CHAMBERWORKS_THREADS");
    if (!s) return 0;
    int v = std::atoi(s);
    return v > 0 ? v : 0;
  }();
  return cached;
}

} // namespace

void set_threads(int n) { g_threads = n; }

int max_threads() {
  int cap = g_threads > 0 ? g_threads : env_threads();
#ifdef _OPENMP
  int hw = omp_get_max_threads();
#else
  int hw = 1;
#endif
  return cap > 0 ? std::min(cap, hw) : hw;
}

void set_force_serial(bool on) { g_force_serial = on; }
bool force_serial() { return g_force_serial; }

namespace {

// true iff span(face rays) intersects the cone span nontrivially; faces
// failing this cannot meet the cone and skip the LP
bool span_prefilter(const ComplexLattice& cc, int face,
                    const std::vector<Vec>& cone_span, int span_rank,
                    int subspace_dim) {
  if (span_rank >= subspace_dim) return true;
  std::vector<Vec> cols = cone_span;
  int k = 0;
  for (std::int32_t v : cc.face_vertices(face)) {
    cols.push_back(cc.vertex_ray(v));
    ++k;
  }
  return rank_of(cols) < span_rank + k;
}

bool cone_test_one(const ComplexLattice& cc, int face,
                   const std::vector<Vec>& cone_gens,
                   const std::vector<Vec>& cone_span, int span_rank,
                   int subspace_dim) {
  if (!span_prefilter(cc, face, cone_span, span_rank, subspace_dim))
    return false;
  std::vector<Vec> rays;
  for (std::int32_t v : cc.face_vertices(face))
    rays.push_back(cc.vertex_ray(v));
  return relint_meets_cone(rays, RationalCone{cone_gens});
}

} // namespace

std::vector<char> cone_membership_serial(const ComplexLattice& cc,
                                         const std::vector<int>& candidates,
                                         const std::vector<Vec>& cone_gens,
                                         const std::vector<Vec>& cone_span) {
  int span_rank = (int)cone_span.size();
  int subspace_dim = (int)cc.subspace_basis().size();
  std::vector<char> out(candidates.size(), 0);
  for (std::size_t i = 0; i < candidates.size(); ++i)
    out[i] = cone_test_one(cc, candidates[i], cone_gens, cone_span, span_rank,
                           subspace_dim)
                 ? 1
                 : 0;
  return out;
}

std::vector<char> cone_membership_parallel(const ComplexLattice& cc,
                                           const std::vector<int>& candidates,
                                           const std::vector<Vec>& cone_gens,
                                           const std::vector<Vec>& cone_span) {
  int span_rank = (int)cone_span.size();
  int subspace_dim = (int)cc.subspace_basis().size();
  std::vector<char> out(candidates.size(), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) num_threads(max_threads())
#endif
  for (long long i = 0; i < (long long)candidates.size(); ++i)
    out[i] = cone_test_one(cc, candidates[i], cone_gens, cone_span, span_rank,
                           subspace_dim)
                 ? 1
                 : 0;
  return out;
}

std::vector<char> cone_membership(const ComplexLattice& cc,
                                  const std::vector<int>& candidates,
                                  const std::vector<Vec>& cone_gens,
                                  const std::vector<Vec>& cone_span) {
  if (g_force_serial || candidates.size() < 256)
    return cone_membership_serial(cc, candidates, cone_gens, cone_span);
  return cone_membership_parallel(cc, candidates, cone_gens, cone_span);
}

std::vector<std::pair<int, int>> envelope_constraints(
    const ComplexLattice& cc, const std::vector<int>& vertices) {
  std::vector<std::pair<int, int>> out;
  for (int w = 0; w < cc.num_walls(); ++w) {
    bool nonneg = true, nonpos = true;
    for (int v : vertices) {
      int s = cc.vertex_wall_sign(v, w);
      if (s > 0) nonpos = false;
      if (s < 0) nonneg = false;
      if (!nonneg && !nonpos) break;
    }
    if (nonneg) out.push_back({w, 1});
    if (nonpos) out.push_back({w, -1});
  }
  return out;
}

std::vector<char> envelope_vertex_mask_serial(
    const ComplexLattice& cc,
    const std::vector<std::pair<int, int>>& constraints) {
  std::vector<char> ok(cc.num_vertices(), 1);
  for (int v = 0; v < cc.num_vertices(); ++v)
    for (auto [w, s] : constraints)
      if (cc.vertex_wall_sign(v, w) * s < 0) {
        ok[v] = 0;
        break;
      }
  return ok;
}

std::vector<char> envelope_vertex_mask_parallel(
    const ComplexLattice& cc,
    const std::vector<std::pair<int, int>>& constraints) {
  std::vector<char> ok(cc.num_vertices(), 1);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(max_threads())
#endif
  for (long long v = 0; v < (long long)cc.num_vertices(); ++v)
    for (auto [w, s] : constraints)
      if (cc.vertex_wall_sign((int)v, w) * s < 0) {
        ok[v] = 0;
        break;
      }
  return ok;
}

std::vector<char> envelope_vertex_mask(
    const ComplexLattice& cc,
    const std::vector<std::pair<int, int>>& constraints) {
  if (g_force_serial || cc.num_vertices() < 512)
    return envelope_vertex_mask_serial(cc, constraints);
  return envelope_vertex_mask_parallel(cc, constraints);
}

std::vector<int> faces_within_mask_serial(const ComplexLattice& cc,
                                          const std::vector<char>& vertex_ok) {
  std::vector<int> out;
  for (int f = 0; f < cc.num_faces(); ++f) {
    bool all = true;
    for (std::int32_t v : cc.face_vertices(f))
      if (!vertex_ok[v]) {
        all = false;
        break;
      }
    if (all) out.push_back(f);
  }
  return out;
}

std::vector<int> faces_within_mask_parallel(const ComplexLattice& cc,
                                            const std::vector<char>& vertex_ok) {
  std::vector<char> keep(cc.num_faces(), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static, 4096) num_threads(max_threads())
#endif
  for (long long f = 0; f < (long long)cc.num_faces(); ++f) {
    bool all = true;
    for (std::int32_t v : cc.face_vertices((int)f))
      if (!vertex_ok[v]) {
        all = false;
        break;
      }
    keep[f] = all ? 1 : 0;
  }
  std::vector<int> out;
  for (int f = 0; f < cc.num_faces(); ++f)
    if (keep[f]) out.push_back(f);
  return out;
}

std::vector<int> faces_within_mask(const ComplexLattice& cc,
                                   const std::vector<char>& vertex_ok) {
  if (g_force_serial || cc.num_faces() < 4096)
    return faces_within_mask_serial(cc, vertex_ok);
  return faces_within_mask_parallel(cc, vertex_ok);
}

std::vector<ExactAngle> angle_table_serial(const ComplexLattice& cc,
                                           const std::vector<int>& a,
                                           const std::vector<int>& b) {
  std::vector<ExactAngle> out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i * b.size() + j] = angle(cc.vertex_ray(a[i]), cc.vertex_ray(b[j]));
  return out;
}

std::vector<ExactAngle> angle_table_parallel(const ComplexLattice& cc,
                                             const std::vector<int>& a,
                                             const std::vector<int>& b) {
  std::vector<ExactAngle> out(a.size() * b.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(max_threads())
#endif
  for (long long i = 0; i < (long long)a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i * b.size() + j] = angle(cc.vertex_ray(a[i]), cc.vertex_ray(b[j]));
  return out;
}

} // namespace kernels
} // namespace chamberworks
