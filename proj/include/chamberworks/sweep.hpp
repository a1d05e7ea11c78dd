#pragma once

#include "chamberworks/json_io.hpp"

#include <cstdint>
#include <string>

namespace chamberworks {

struct SweepOptions {
  int max_seed_faces = 2;
  std::uint64_t samples = 0; // 0 = exhaustive
  std::uint64_t seed = 0;
  bool orbit_reduction = true;
  // refuse exhaustive mode above this many seed evaluations
  std::uint64_t exhaustive_cap = 200000;
};

struct SweepSummary {
  std::uint64_t seeds_run = 0;
  // weighted by W-orbit size when orbit reduction is on
  std::uint64_t subbuilding = 0;
  std::uint64_t fixed_face = 0;
  std::uint64_t counterexample = 0;
  ordered_json counterexample_dumps = ordered_json::array();
};

/// Hull-and-verdict sweep.  Exhaustive mode enumerates all seeds of one
/// or two faces up to the W-action (verdicts are equivariant, counts are
/// weighted by orbit size); sampled mode draws seeds of max_seed_faces
/// faces from the counter PRNG.  Any counterexample is dumped in full.
SweepSummary sweep(const ComplexLattice& cc, const SweepOptions& opt);

ordered_json sweep_to_json(const ComplexLattice& cc, const SweepOptions& opt,
                           const SweepSummary& s);

} // namespace chamberworks
