#pragma once

#include "chamberworks/angle.hpp"
#include "chamberworks/complex.hpp"

#include <optional>
#include <string>
#include <vector>

namespace chamberworks {

/// Exact trace of a geodesic segment through the face lattice.  The
/// spherical geodesic is the radial projection of the chord
/// (1-s)x + s y, so every wall crossing happens at a rational parameter.
struct SegmentTrace {
  Vec x, y;
  struct Crossing {
    Rat s;    // chordal parameter in (0,1), strictly increasing
    int face; // face crossed (spanned by the crossing point)
  };
  std::vector<Crossing> crossings;
  std::vector<int> interval_faces; // crossings.size() + 1 open subsegments
};

SegmentTrace segment_trace(const ComplexLattice& cc, const Vec& x, const Vec& y);

/// True iff every interior crossing is a vertex (the segment is singular
/// in the traced sense used by the type-string claims).
bool crossings_all_vertices(const ComplexLattice& cc, const SegmentTrace& t);

/// Endpoint and interior vertex types as a string like "121"; requires
/// vertex endpoints and vertex crossings.
std::string segment_type_string(const ComplexLattice& cc, const SegmentTrace& t);

/// Exact set of distances from one type-i vertex to all type-j vertices.
std::vector<ExactAngle> distance_set(const ComplexLattice& cc, int label_i,
                                     int label_j);

/// A Weyl element mapping the ordered pair (v1, v1') to (v2, v2'), if one
/// exists; found by transversal words to a common base point plus a
/// Schreier-generator orbit of the second coordinate.  Throws if the
/// pairs have mismatched types or distances.
std::optional<Mat> pairs_weyl_equivalent(const ComplexLattice& cc, int v1,
                                         int v1p, int v2, int v2p);

/// All vertices of the given distance class around v lie in one
/// Stab_W(v)-orbit (the transitivity statements are checked exhaustively
/// this way).
bool distance_class_transitive(const ComplexLattice& cc, int v,
                               const std::vector<int>& cls);

/// Rescale each vector by a positive rational so all squared norms agree;
/// false if impossible over the rationals.
bool rescale_to_common_norm(std::vector<Vec>& vs);

struct MidpointResult {
  Vec direction; // canonical ray of the midpoint
  int face;
  std::optional<int> vertex_label;
};

/// Midpoint of two equal-norm (after exact rescaling) non-antipodal points.
MidpointResult midpoint(const ComplexLattice& cc, const Vec& x, const Vec& y);

/// Antipode of the vertex inside the given vertex set, if present.
std::optional<int> antipode_in(const ComplexLattice& cc, int v,
                               const std::vector<int>& vertex_set);

struct CircumcenterResult {
  bool exact = false;
  Vec center;                  // valid when exact
  ExactAngle radius;           // valid when exact
  std::vector<double> center_numeric;
  double radius_numeric = 0.0;
};

/// Smallest enclosing spherical cap of finitely many rational points.
/// Exact candidates (the points, equal-norm pairwise midpoints and
/// subset sums, vertex-ray sums of the spanned faces) are tried first;
/// when the best candidate is optimal against a numeric active-set
/// solve the result is certified exact, otherwise numeric.
CircumcenterResult circumcenter(const ComplexLattice& cc,
                                const std::vector<Vec>& points);

/// Numeric minimax center on the unit sphere (active-set method).
void circumcenter_numeric(const std::vector<Vec>& points,
                          std::vector<double>& center, double& radius);

} // namespace chamberworks
