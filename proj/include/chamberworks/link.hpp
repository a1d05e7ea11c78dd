#pragma once

#include "chamberworks/complex.hpp"

#include <memory>
#include <vector>

namespace chamberworks {

/// The link of a face as a first-class Coxeter complex, realized inside
/// the orthogonal complement of the face's span.  Link vertex labels are
/// the surviving ambient labels, so the link's Coxeter graph is literally
/// the ambient graph with the face's labels deleted.
struct LinkComplex {
  std::shared_ptr<ComplexLattice> complex;
  int base_face = -1;              // fundamental representative in the ambient
  std::vector<int> deleted_labels; // sorted
};

/// Link of the fundamental face with the given vertex label set.  Built
/// geometrically from the perpendicular root subsystem and cross-checked
/// against diagram deletion; throws if the two constructions disagree.
LinkComplex link_of_fundamental(const ComplexLattice& cc,
                                const std::vector<int>& labels);

/// Link of an arbitrary face of codimension >= 1: the face is folded onto
/// the fundamental face of its cotype first.
LinkComplex link_of_face(const ComplexLattice& cc, int face);

/// Project an ambient face strictly containing the base face into the
/// link; ambient_face must contain every vertex of the base face.
int project_face_to_link(const ComplexLattice& cc, const LinkComplex& lk,
                         int ambient_face);

/// Link vertex id of the normal component of an ambient vertex adjacent
/// to the base face (-1 if the join is not a face).
int link_vertex_of_ambient(const ComplexLattice& cc, const LinkComplex& lk,
                           int ambient_vertex);

} // namespace chamberworks
