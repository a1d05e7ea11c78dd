#pragma once

#include "chamberworks/root_system.hpp"
#include "chamberworks/weyl.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace chamberworks {

struct Face128Hash {
  std::size_t operator()(unsigned __int128 k) const {
    std::uint64_t lo = (std::uint64_t)k, hi = (std::uint64_t)(k >> 64);
    std::uint64_t h = lo * 0x9e3779b97f4a7c15ull;
    h ^= hi + 0x517cc1b727220a95ull + (h << 6) + (h >> 2);
    return (std::size_t)h;
  }
};

unsigned __int128 pack_face_key(std::span<const std::int32_t> sorted_ids);

/// The Coxeter complex of a root system as a finite face lattice.
///
/// Vertices are canonical primitive rays; faces are sorted vertex-id sets
/// generated as W-orbits of the fundamental faces, stored grouped by
/// dimension (chambers last).  Walls carry canonical normals with the
/// first nonzero coordinate positive, and a vertex x wall sign table is
/// precomputed for the convexity machinery.
class ComplexLattice {
public:
  static std::shared_ptr<ComplexLattice> build(RootSystem rs);

  const RootSystem& rs() const { return rs_; }
  const std::string& name() const { return name_; }
  int dim() const { return dim_; } // dimension of the sphere
  /// Process-unique build id (cache key; never recycled).
  std::uint64_t uid() const { return uid_; }

  // --- vertices
  int num_vertices() const { return (int)vertex_rays_.size(); }
  const Vec& vertex_ray(int v) const { return vertex_rays_[v]; }
  int vertex_label(int v) const { return vertex_type_[v]; }
  int antipode_of(int v) const { return vertex_antipode_[v]; }
  int vertex_id(const Vec& ray) const;
  /// Type of an arbitrary vertex ray (errors if not a vertex of the complex).
  int vertex_type(const Vec& ray) const;

  // --- faces
  int num_faces() const { return (int)face_off_.size() - 1; }
  int num_chambers() const { return num_chambers_; }
  int first_chamber() const { return num_faces() - num_chambers_; }
  bool is_chamber(int f) const { return f >= first_chamber(); }
  int face_dim(int f) const {
    return (int)(face_off_[f + 1] - face_off_[f]) - 1;
  }
  std::span<const std::int32_t> face_vertices(int f) const {
    return {face_flat_.data() + face_off_[f],
            face_flat_.data() + face_off_[f + 1]};
  }
  /// Face id of a sorted vertex id set, or -1.
  int face_id(std::span<const std::int32_t> sorted_vertices) const;
  /// Ambient labels of a face's vertices, sorted.
  std::vector<int> face_types(int f) const;
  std::uint8_t face_cotype_mask(int f) const { return face_cotype_[f]; }
  /// All nonempty subsets of the face's vertex set (they are all faces).
  void for_each_subface(int f, const std::function<void(int)>& cb) const;
  bool faces_have_antipodal_pair(int f1, int f2) const;
  /// Id of the antipodal face (vertex-wise antipodes).
  int opposite_face(int f) const;

  /// Fundamental face whose vertex labels are exactly the given set.
  int fundamental_face(const std::vector<int>& labels) const;
  int fundamental_face_of_mask(std::uint8_t mask) const {
    return fundamental_face_by_mask_[mask];
  }

  // --- geometry
  /// Fold an arbitrary nonzero subspace vector into the fundamental chamber.
  FoldResult fold(const Vec& x) const { return fold_to_chamber(rs_, x); }
  /// Face whose relative interior contains the ray through x.
  int face_spanned_by(const Vec& x) const;
  /// Interior point of a face (sum of its vertex rays).
  Vec face_interior_point(int f) const;

  // --- walls
  int num_walls() const { return (int)wall_normals_.size(); }
  const Vec& wall_normal(int w) const { return wall_normals_[w]; }
  /// Sign of <vertex ray, wall normal>: -1, 0, +1.
  int vertex_wall_sign(int v, int w) const {
    return sign_table_[(std::size_t)v * num_walls_ + w];
  }

  // --- group actions
  const WeylEnumeration& weyl() const;
  bool weyl_enumerable() const;
  /// Permutations of the vertex set by the simple reflections.
  const std::vector<std::vector<std::int32_t>>& gen_vertex_perms() const {
    return gen_vertex_perm_;
  }
  /// Apply a word in the simple reflections (entries may be negative,
  /// encoding inverses; the generators are involutions) to a vertex id.
  int apply_word_vertex(const std::vector<int>& word, int v) const;
  /// Image of a face under a vertex permutation; -1 if the image vertex
  /// set is not a face.
  int map_face(const std::vector<std::int32_t>& vperm, int f) const;
  /// Vertex permutation induced by an exact isometry (throws if it does
  /// not permute the vertex set).
  std::vector<std::int32_t> vertex_perm_of_matrix(const Mat& m) const;

  /// For each chamber, its neighbors as (panel id, other chamber id);
  /// thin complexes have exactly one neighbor per panel.  Built lazily.
  const std::vector<std::vector<std::pair<int, int>>>& chamber_adjacency() const;

  const CoxeterGraph& graph() const { return graph_; }
  const std::vector<Vec>& subspace_basis() const { return subspace_basis_; }

  /// Orbit of a vertex under the simple reflections, with transversal.
  Orbit<std::int32_t, std::hash<std::int32_t>> vertex_orbit(int v) const;

private:
  RootSystem rs_;
  std::string name_;
  std::uint64_t uid_ = 0;
  int dim_ = 0;
  int num_walls_ = 0;
  int num_chambers_ = 0;

  std::vector<Vec> vertex_rays_;
  std::unordered_map<Vec, std::int32_t, VecHash> vertex_index_;
  std::vector<int> vertex_type_;
  std::vector<std::int32_t> vertex_antipode_;

  std::vector<std::int32_t> face_flat_;
  std::vector<std::uint32_t> face_off_;
  std::vector<std::uint8_t> face_cotype_;
  std::unordered_map<unsigned __int128, std::int32_t, Face128Hash> face_index_;
  std::vector<int> fundamental_face_by_mask_;

  std::vector<Vec> wall_normals_;
  std::vector<std::int8_t> sign_table_;

  std::vector<std::vector<std::int32_t>> gen_vertex_perm_;
  mutable std::unique_ptr<WeylEnumeration> weyl_;
  mutable std::vector<std::vector<std::pair<int, int>>> chamber_adj_;

  CoxeterGraph graph_;
  std::vector<Vec> subspace_basis_;

  friend struct ComplexBuilder;
};

/// Faces of the complex at spherical distance pi/2 from every point of the
/// given face (decided on vertex rays).
std::vector<int> poles(const ComplexLattice& cc, int face);

} // namespace chamberworks
