#pragma once

#include "chamberworks/linalg.hpp"

#include <vector>

namespace chamberworks {

/// A polyhedral cone given by generating rays.
struct RationalCone {
  std::vector<Vec> generators;
};

/// True iff the only nonnegative combination of gens equal to zero is the
/// trivial one (no nonzero v with both v and -v in the cone).
bool cone_is_pointed(const std::vector<Vec>& gens);

/// True iff there exist lambda_i > 0 (strictly) and mu_j >= 0 with
///   sum lambda_i face_rays[i] = sum mu_j cone.generators[j]  (nonzero).
/// Decided by exact rational simplex feasibility (Bland's rule).
/// Preconditions: face_rays linearly independent, cone pointed.
bool relint_meets_cone(const std::vector<Vec>& face_rays,
                       const RationalCone& cone);

/// True iff some strictly positive combination of face_rays lies in the
/// linear span of subspace_gens.
bool relint_meets_subspace(const std::vector<Vec>& face_rays,
                           const std::vector<Vec>& subspace_gens);

namespace detail {

/// Phase-1 feasibility of  A x = b,  x >= 0  over the rationals.
/// A is given row-major (rows x cols).
bool lp_feasible(const std::vector<std::vector<Rat>>& A,
                 const std::vector<Rat>& b);

} // namespace detail

} // namespace chamberworks
