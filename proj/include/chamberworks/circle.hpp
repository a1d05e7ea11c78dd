#pragma once

#include "chamberworks/complex.hpp"

#include <optional>
#include <string>
#include <vector>

namespace chamberworks {

/// The full vertex set of a Coxeter complex (canonical rays with type
/// labels), available without building the face lattice.  For E7 the
/// lattice is far too large, but the 23k vertices are cheap.
struct VertexInventory {
  std::vector<Vec> rays;
  std::vector<int> types;
  std::unordered_map<Vec, std::int32_t, VecHash> index;

  static VertexInventory from_root_system(const RootSystem& rs);
  static VertexInventory view_of(const ComplexLattice& cc);

  int id_of(const Vec& ray) const {
    auto it = index.find(canonical_ray(ray));
    return it == index.end() ? -1 : it->second;
  }
};

/// A singular 1-sphere: the intersection of all walls through two rays,
/// when that intersection is exactly their 2-dimensional span.
struct SingularCircle {
  Vec a, b;                        // rational basis of the plane (b ⟂ a)
  std::vector<int> cycle_vertices; // vertex ids in circular order
  std::vector<std::pair<Rat, Rat>> cycle_coords; // (a,b)-plane coordinates
  std::string cycle_types;         // type labels in the same order

  /// The two arcs between two antipodal positions on the cycle, as type
  /// strings including both endpoints.
  std::vector<std::string> arcs_between(int vid_from, int vid_to) const;
};

std::optional<SingularCircle> singular_circle_through(const RootSystem& rs,
                                                      const VertexInventory& inv,
                                                      const Vec& x, const Vec& y);

/// All singular circles through a vertex, each plane reported once.
std::vector<SingularCircle> singular_circles_through_vertex(
    const RootSystem& rs, const VertexInventory& inv, int v);

/// Restriction of Stab_W(plane) to the circle: the finite group of 2x2
/// rational orthogonal matrices induced by Weyl elements preserving the
/// plane.  The induced Weyl group W_s is generated by the induced
/// reflections (det -1 elements); the stabilizer itself is found by
/// orbit-stabilizer over plane keys with Schreier generators, never by
/// full group enumeration.
struct InducedCircleGroup {
  std::size_t plane_orbit_size = 0;
  int image_order = 0;            // |image of Stab_W(plane) in O(2)|
  int reflection_count = 0;       // det -1 elements of the image
  int induced_weyl_order = 0;     // |W_s|
  bool contains_antipodal = false; // -id on the plane is induced
  /// Vertex-id cycles of the circle mapped transitively by the image
  /// group, per type label (label -> true if single orbit).
  std::vector<std::pair<int, bool>> type_transitive;
};

InducedCircleGroup induced_weyl_on_circle(const RootSystem& rs,
                                          const SingularCircle& circle);

} // namespace chamberworks
