#pragma once

#include "chamberworks/complex.hpp"
#include "chamberworks/lp.hpp"

#include <vector>

namespace chamberworks {
namespace kernels {

/// Thread cap for the parallel kernels.  0 = library default; the
/// CHAMBERWORKS_THREADS environment variable is consulted once at startup.
void set_threads(int n);
int max_threads();

/// Force the serial reference implementations everywhere (used by tests
/// and the benchmark driver).
void set_force_serial(bool on);
bool force_serial();

/// For every candidate face, whether its relative interior meets the cone
/// spanned by cone_gens.  A span-intersection rank test prunes before the
/// exact LP runs.  cone_span is a basis of span(cone_gens).
std::vector<char> cone_membership_serial(const ComplexLattice& cc,
                                         const std::vector<int>& candidates,
                                         const std::vector<Vec>& cone_gens,
                                         const std::vector<Vec>& cone_span);
std::vector<char> cone_membership_parallel(const ComplexLattice& cc,
                                           const std::vector<int>& candidates,
                                           const std::vector<Vec>& cone_gens,
                                           const std::vector<Vec>& cone_span);
std::vector<char> cone_membership(const ComplexLattice& cc,
                                  const std::vector<int>& candidates,
                                  const std::vector<Vec>& cone_gens,
                                  const std::vector<Vec>& cone_span);

/// Wall-sign constraints (wall id, required sign) satisfied by every
/// vertex of the input set; the root envelope is the face set whose
/// vertices satisfy all of them.
std::vector<std::pair<int, int>> envelope_constraints(
    const ComplexLattice& cc, const std::vector<int>& vertices);

std::vector<char> envelope_vertex_mask_serial(
    const ComplexLattice& cc,
    const std::vector<std::pair<int, int>>& constraints);
std::vector<char> envelope_vertex_mask_parallel(
    const ComplexLattice& cc,
    const std::vector<std::pair<int, int>>& constraints);
std::vector<char> envelope_vertex_mask(
    const ComplexLattice& cc,
    const std::vector<std::pair<int, int>>& constraints);

/// Faces all of whose vertices pass the mask.
std::vector<int> faces_within_mask_serial(const ComplexLattice& cc,
                                          const std::vector<char>& vertex_ok);
std::vector<int> faces_within_mask_parallel(const ComplexLattice& cc,
                                            const std::vector<char>& vertex_ok);
std::vector<int> faces_within_mask(const ComplexLattice& cc,
                                   const std::vector<char>& vertex_ok);

/// Pairwise angle table between two vertex-id lists (batch sweep used by
/// the distance facts and the benchmark).
std::vector<ExactAngle> angle_table_serial(const ComplexLattice& cc,
                                           const std::vector<int>& a,
                                           const std::vector<int>& b);
std::vector<ExactAngle> angle_table_parallel(const ComplexLattice& cc,
                                             const std::vector<int>& a,
                                             const std::vector<int>& b);

} // namespace kernels
} // namespace chamberworks
