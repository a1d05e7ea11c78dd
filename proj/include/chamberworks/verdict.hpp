#pragma once

#include "chamberworks/aut.hpp"
#include "chamberworks/convexity.hpp"

#include <optional>
#include <string>
#include <vector>

namespace chamberworks {

/// Handle for the stabilizer of a subcomplex inside Aut.  For complexes
/// with a materialized automorphism group the elements are vertex
/// permutations; for E6 the group is iterated lazily as Weyl elements
/// optionally composed with the antipodal map (-id realizes the diagram
/// flip there), after a type-multiset prefilter on the outer class.
class StabilizerHandle {
public:
  std::size_t order() const { return order_; }
  std::size_t aut_order() const { return aut_order_; }

  /// Apply stabilizer element e to a vertex id.
  int apply_vertex(std::size_t e, int v) const;
  bool element_inner(std::size_t e) const;

  /// True if the face (by sorted vertex ids) is invariant under every
  /// stabilizer element.
  bool face_invariant(const ComplexLattice& cc, int face) const;

private:
  friend StabilizerHandle stabilizer(const ComplexLattice& cc,
                                     const Subcomplex& k);
  const ComplexLattice* cc_ = nullptr;
  std::size_t order_ = 0;
  std::size_t aut_order_ = 0;
  // materialized route
  std::vector<std::vector<std::int32_t>> perms_;
  std::vector<char> inner_;
  // lazy route: (weyl element index, composed with antipodal map)
  bool lazy_ = false;
  std::vector<std::pair<std::uint32_t, bool>> lazy_elems_;
  mutable std::vector<std::int32_t> scratch_;
};

StabilizerHandle stabilizer(const ComplexLattice& cc, const Subcomplex& k);

/// First face of K (dimension ascending, id ascending) setwise invariant
/// under the whole stabilizer; the orbit-sum of unit rays over its vertex
/// set is then a fixed point of the action inside the face.
std::optional<int> fixed_face_in(const ComplexLattice& cc, const Subcomplex& k,
                                 const StabilizerHandle& g);

enum class VerdictKind { Subbuilding, FixedFace, Counterexample };

struct VerdictResult {
  VerdictKind kind;
  int fixed_face = -1;
  std::size_t stabilizer_order = 0;
  std::vector<int> antipode_failures; // vertices of K with no antipode in K
};

/// The Center Conjecture verdict: Subbuilding if every vertex of K has an
/// antipode in K, else FixedFace on the first stabilizer-invariant face,
/// else Counterexample with diagnostics.
VerdictResult verdict(const ComplexLattice& cc, const Subcomplex& k,
                      bool assume_convex = false);

struct RadiusCheck {
  bool ok = false;
  Vec center;
  ExactAngle radius;
};

/// For a vertex set of diameter <= pi/2, exhibit a point with strictly
/// smaller covering radius (exact certificate from the circumcenter
/// candidates).
RadiusCheck invariant_set_radius_check(const ComplexLattice& cc,
                                       const std::vector<int>& vertices);

} // namespace chamberworks
