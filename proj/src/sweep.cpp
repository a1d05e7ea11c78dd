#include "chamberworks/sweep.hpp"

#include "chamberworks/prng.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace chamberworks {

namespace {

struct SeedOutcome {
  VerdictKind kind;
  std::uint64_t weight;
  std::vector<int> seed_faces;
};

SeedOutcome run_seed(const ComplexLattice& cc, const std::vector<int>& seed,
                     std::uint64_t weight) {
  Subcomplex hull = simplicial_convex_hull(cc, seed);
  VerdictResult v = verdict(cc, hull, /*assume_convex=*/true);
  return {v.kind, weight, seed};
}

// orbit of a face under the simple reflections, as face ids
std::vector<int> face_orbit(const ComplexLattice& cc, int f) {
  auto act = [&](int g, std::int32_t face) {
    return (std::int32_t)cc.map_face(cc.gen_vertex_perms()[g], (int)face);
  };
  auto orb = orbit_closure<std::int32_t, std::hash<std::int32_t>>(
      (std::int32_t)f, cc.rs().rank, act);
  return std::vector<int>(orb.points.begin(), orb.points.end());
}

} // namespace

SweepSummary sweep(const ComplexLattice& cc, const SweepOptions& opt) {
  if (opt.max_seed_faces < 1)
    throw std::invalid_argument("sweep: max_seed_faces must be >= 1");
  SweepSummary sum;
  std::vector<std::vector<int>> seeds;
  std::vector<std::uint64_t> weights;

  if (opt.samples == 0) {
    if (opt.max_seed_faces > 2)
      throw std::invalid_argument(
          "exhaustive sweeps support at most two seed faces; use --samples");

    if (opt.orbit_reduction) {
      // The verdict is equivariant under W, so exhausting seeds up to the
      // W-action with orbit-size weights reproduces the full tally.
      const WeylEnumeration& we = cc.weyl();
      std::vector<std::vector<std::int32_t>> wperms;
      wperms.reserve(we.order());
      for (std::size_t i = 0; i < we.order(); ++i)
        wperms.push_back(cc.vertex_perm_of_matrix(we.matrix_of(i)));

      // singles: one representative per cotype (one W-orbit each)
      std::vector<int> fundamentals;
      for (int mask = 1; mask < (1 << cc.rs().rank); ++mask)
        fundamentals.push_back(cc.fundamental_face_of_mask((std::uint8_t)mask));
      for (int f0 : fundamentals) {
        seeds.push_back({f0});
        weights.push_back(face_orbit(cc, f0).size());
      }
      if (opt.max_seed_faces >= 2) {
        // pairs (f0, g): f0 fundamental, g up to Stab_W(f0), weighted by
        // |orbit of f0| x |Stab(f0)-orbit of g|
        for (int f0 : fundamentals) {
          std::uint64_t f0_orbit = face_orbit(cc, f0).size();
          std::vector<const std::vector<std::int32_t>*> stab;
          for (const auto& p : wperms)
            if (cc.map_face(p, f0) == f0) stab.push_back(&p);
          std::vector<char> used(cc.num_faces(), 0);
          for (int g = 0; g < cc.num_faces(); ++g) {
            if (g == f0 || used[g]) continue;
            std::uint64_t orbit_size = 0;
            for (const auto* p : stab) {
              int im = cc.map_face(*p, g);
              if (!used[im]) {
                used[im] = 1;
                ++orbit_size;
              }
            }
            seeds.push_back({f0, g});
            weights.push_back(f0_orbit * orbit_size);
          }
        }
      }
    } else {
      for (int f = 0; f < cc.num_faces(); ++f) {
        seeds.push_back({f});
        weights.push_back(1);
      }
      if (opt.max_seed_faces >= 2)
        for (int f = 0; f < cc.num_faces(); ++f)
          for (int g = f + 1; g < cc.num_faces(); ++g) {
            seeds.push_back({f, g});
            weights.push_back(1);
          }
    }
    if (seeds.size() > opt.exhaustive_cap)
      throw std::invalid_argument(
          "exhaustive sweep exceeds the seed budget; rerun with --samples");
  } else {
    for (std::uint64_t i = 0; i < opt.samples; ++i) {
      std::vector<int> seed;
      for (int k = 0; k < opt.max_seed_faces; ++k) {
        std::uint64_t r =
            PRNG::at(opt.seed, i * (std::uint64_t)opt.max_seed_faces + k);
        seed.push_back((int)(r % (std::uint64_t)cc.num_faces()));
      }
      std::sort(seed.begin(), seed.end());
      seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
      seeds.push_back(seed);
      weights.push_back(1);
    }
  }

  std::vector<SeedOutcome> outcomes(seeds.size(),
                                    {VerdictKind::Subbuilding, 0, {}});
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
  for (long long i = 0; i < (long long)seeds.size(); ++i)
    outcomes[i] = run_seed(cc, seeds[i], weights[i]);

  for (const SeedOutcome& o : outcomes) {
    ++sum.seeds_run;
    switch (o.kind) {
    case VerdictKind::Subbuilding: sum.subbuilding += o.weight; break;
    case VerdictKind::FixedFace: sum.fixed_face += o.weight; break;
    case VerdictKind::Counterexample: {
      sum.counterexample += o.weight;
      Subcomplex hull = simplicial_convex_hull(cc, o.seed_faces);
      ordered_json dump;
      dump["seed_faces"] = o.seed_faces;
      dump["hull"] = subcomplex_to_json(cc, hull);
      dump["verdict"] =
          verdict_to_json(cc, verdict(cc, hull, /*assume_convex=*/true));
      sum.counterexample_dumps.push_back(dump);
      break;
    }
    }
  }
  return sum;
}

ordered_json sweep_to_json(const ComplexLattice& cc, const SweepOptions& opt,
                           const SweepSummary& s) {
  ordered_json j;
  j["complex"] = cc.rs().family;
  j["rank"] = cc.rs().rank;
  j["max_seed_faces"] = opt.max_seed_faces;
  j["mode"] = opt.samples ? "sampled" : "exhaustive";
  if (opt.samples) {
    j["samples"] = opt.samples;
    j["seed"] = opt.seed;
  } else {
    j["orbit_reduction"] = opt.orbit_reduction;
    j["counts_weighted_by_orbit"] = opt.orbit_reduction;
  }
  j["seeds_run"] = s.seeds_run;
  j["subbuilding"] = s.subbuilding;
  j["fixed_face"] = s.fixed_face;
  j["counterexample"] = s.counterexample;
  if (!s.counterexample_dumps.empty())
    j["counterexamples"] = s.counterexample_dumps;
  return j;
}

} // namespace chamberworks
