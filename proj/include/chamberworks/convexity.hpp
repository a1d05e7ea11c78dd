#pragma once

#include "chamberworks/complex.hpp"

#include <optional>
#include <vector>

namespace chamberworks {

/// A set of faces closed under the face relation.
struct Subcomplex {
  std::vector<int> faces;    // sorted face ids
  std::vector<int> vertices; // sorted vertex ids
  int dim = -1;

  bool contains_face(int f) const {
    return std::binary_search(faces.begin(), faces.end(), f);
  }
  bool contains_vertex(int v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
  }
  bool empty() const { return faces.empty(); }
  friend bool operator==(const Subcomplex& a, const Subcomplex& b) {
    return a.faces == b.faces;
  }
};

/// Close a seed face set under the face relation.
Subcomplex make_subcomplex(const ComplexLattice& cc,
                           const std::vector<int>& seed_faces);

Subcomplex whole_complex(const ComplexLattice& cc);

/// Thrown by hull_of_face_pair when the two faces carry an antipodal
/// vertex pair (non-pointed cone); the closure iteration skips such
/// pairs, whose geodesics are generated by nearby non-antipodal pairs.
struct AntipodalPairError : std::invalid_argument {
  AntipodalPairError() : std::invalid_argument("antipodal vertex pair") {}
};

/// Faces whose relative interior meets the cone over the two faces'
/// vertex rays, closed under the face relation.
Subcomplex hull_of_face_pair(const ComplexLattice& cc, int f1, int f2);

/// Least fixed point of hull_of_face_pair over all face pairs of the
/// current set (antipodal pairs skipped).  Two certified shortcuts keep
/// large hulls tractable: a pair of opposite chambers forces the whole
/// complex, and a set equal to its own root envelope is already convex.
Subcomplex simplicial_convex_hull(const ComplexLattice& cc,
                                  const std::vector<int>& seed_faces);

bool is_convex(const ComplexLattice& cc, const Subcomplex& k);

/// Every vertex of K has an antipode in K (K assumed convex).
bool is_subbuilding(const ComplexLattice& cc, const Subcomplex& k);

/// Whether the link of v inside K is a subbuilding of the vertex link.
bool is_interior_vertex(const ComplexLattice& cc, const Subcomplex& k, int v);

struct AntipodePropagation {
  bool ok = false;
  int antipode_x1 = -1;
  int antipode_x2 = -1;
};

/// Check that both endpoints of a segment through an interior point with
/// an antipode in K also have antipodes in K; returns the found antipodes.
AntipodePropagation antipode_propagation_check(const ComplexLattice& cc,
                                               const Subcomplex& k, int x1,
                                               int x2, const Vec& z);

/// The root envelope: the smallest intersection of closed half-apartments
/// containing K (a convex subcomplex bounding every hull).
Subcomplex root_envelope(const ComplexLattice& cc, const Subcomplex& k);

} // namespace chamberworks
