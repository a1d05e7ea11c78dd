#include "chamberworks/json_io.hpp"
#include "chamberworks/kernels.hpp"
#include "chamberworks/prng.hpp"

#include "doctest.h"

using namespace chamberworks;

// the parallel kernels must agree exactly with their serial references

TEST_CASE("cone membership: parallel equals serial") {
  auto cc = build_named_complex("F4", 0);
  std::vector<int> candidates(cc->num_faces());
  for (int f = 0; f < cc->num_faces(); ++f) candidates[f] = f;
  PRNG rng(8080);
  for (int t = 0; t < 4; ++t) {
    int f1 = (int)(rng.next() % cc->num_faces());
    int f2 = (int)(rng.next() % cc->num_faces());
    std::vector<Vec> gens;
    for (std::int32_t v : cc->face_vertices(f1))
      gens.push_back(cc->vertex_ray(v));
    for (std::int32_t v : cc->face_vertices(f2))
      gens.push_back(cc->vertex_ray(v));
    std::vector<Vec> span;
    for (const Vec& g : gens) {
      std::vector<Vec> trial = span;
      trial.push_back(g);
      if (rank_of(trial) > (int)span.size()) span.push_back(g);
    }
    auto s = kernels::cone_membership_serial(*cc, candidates, gens, span);
    auto p = kernels::cone_membership_parallel(*cc, candidates, gens, span);
    CHECK(s == p);
  }
}

TEST_CASE("envelope kernels: parallel equals serial") {
  auto cc = build_named_complex("F4", 0);
  PRNG rng(9090);
  for (int t = 0; t < 5; ++t) {
    std::vector<int> vs;
    int n = 2 + (int)(rng.next() % 20);
    for (int i = 0; i < n; ++i)
      vs.push_back((int)(rng.next() % cc->num_vertices()));
    auto cons = kernels::envelope_constraints(*cc, vs);
    auto ms = kernels::envelope_vertex_mask_serial(*cc, cons);
    auto mp = kernels::envelope_vertex_mask_parallel(*cc, cons);
    CHECK(ms == mp);
    CHECK(kernels::faces_within_mask_serial(*cc, ms) ==
          kernels::faces_within_mask_parallel(*cc, ms));
  }
}

TEST_CASE("angle table: parallel equals serial") {
  auto cc = build_named_complex("B", 4);
  std::vector<int> a, b;
  for (int v = 0; v < cc->num_vertices(); v += 2) a.push_back(v);
  for (int v = 1; v < cc->num_vertices(); v += 2) b.push_back(v);
  CHECK(kernels::angle_table_serial(*cc, a, b) ==
        kernels::angle_table_parallel(*cc, a, b));
}

TEST_CASE("thread cap plumbing") {
  kernels::set_threads(1);
  CHECK(kernels::max_threads() == 1);
  kernels::set_threads(0);
  CHECK(kernels::max_threads() >= 1);
  kernels::set_force_serial(true);
  CHECK(kernels::force_serial());
  kernels::set_force_serial(false);
}
