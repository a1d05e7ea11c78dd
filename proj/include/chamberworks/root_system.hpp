#pragma once

#include "chamberworks/angle.hpp"
#include "chamberworks/linalg.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace chamberworks {

struct VecHash {
  std::size_t operator()(const Vec& v) const { return v.hash(); }
};

/// A finite root system realized in R^ambient, possibly restricted to the
/// orthogonal complement of some constraint vectors (A_n lives in the
/// sum-zero hyperplane, E6 in {x6=x7=x8}, E7 in the complement of a ray).
///
/// Roots are stored as canonical primitive integer rays.  simples[i]
/// carries the node label labels[i] of the Coxeter graph; fundamental
/// vertex rays are the dual rays of the simple roots, one per label.
struct RootSystem {
  std::string family; // "A","B","D","F4","E6","E7","E8","custom"
  int rank = 0;
  int ambient = 0;
  std::vector<Vec> constraints;
  std::vector<Vec> simples;
  std::vector<int> labels;
  std::vector<Vec> fundamental_vertices; // aligned with simples
  std::vector<Vec> roots;                // canonical rays; simples first
  std::unordered_map<Vec, int, VecHash> root_index;
  std::vector<int> neg_root; // id of -roots[i]

  std::string name() const {
    if (family.size() > 1 || family == "custom") return family;
    return family + std::to_string(rank);
  }

  int root_id(const Vec& r) const {
    auto it = root_index.find(canonical_ray(r));
    return it == root_index.end() ? -1 : it->second;
  }

  const Vec& fundamental_vertex(int label) const;
  int label_of_simple(int simple_idx) const { return labels[simple_idx]; }
  int simple_index_of_label(int label) const;

  /// Basis of the subspace the complex lives in.
  std::vector<Vec> subspace_basis() const;

  bool in_subspace(const Vec& v) const {
    for (const Vec& c : constraints)
      if (!dot(v, c).is_zero()) return false;
    return true;
  }
};

/// Construct the root system of the given family with the standard
/// coordinate models (A_n in the sum-zero hyperplane of R^{n+1}, B_n/D_n
/// in R^n, F4 in R^4, E6/E7/E8 from the R^8 model).
/// Legal ranks: A n>=1, B n>=2, D n>=4; F4/E6/E7/E8 fixed.
RootSystem build_root_system(const std::string& family, int rank = 0);

/// Root system from explicit simple roots (used for links and test joins).
/// Fundamental vertices are the dual rays inside the subspace orthogonal
/// to the constraints.
RootSystem build_custom_system(std::vector<Vec> simples,
                               std::vector<int> labels,
                               std::vector<Vec> constraints,
                               std::vector<Vec> fundamental = {});

/// One edge of a Coxeter graph: node labels a < b and order m in {3,4,6}.
struct CoxeterEdge {
  int a, b, m;
  friend bool operator==(const CoxeterEdge& x, const CoxeterEdge& y) {
    return x.a == y.a && x.b == y.b && x.m == y.m;
  }
  friend bool operator<(const CoxeterEdge& x, const CoxeterEdge& y) {
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    return x.m < y.m;
  }
};

struct CoxeterGraph {
  std::vector<int> nodes;        // sorted labels
  std::vector<CoxeterEdge> edges; // sorted

  friend bool operator==(const CoxeterGraph& x, const CoxeterGraph& y) {
    return x.nodes == y.nodes && x.edges == y.edges;
  }

  /// Classification of each connected component ("A3", "B2", "D5", ...),
  /// sorted descending by rank then alphabetically.
  std::vector<std::string> component_types() const;

  /// Components joined with "x", e.g. "A2xA1".
  std::string type_string() const;

  /// Graph with the given node labels removed (diagram deletion).
  CoxeterGraph without(const std::vector<int>& drop) const;
};

/// Coxeter graph of a root system, from the pairwise angles of its simple
/// roots (no edge at pi/2; m=3 at 2pi/3, m=4 at 3pi/4, m=6 at 5pi/6).
CoxeterGraph coxeter_graph(const RootSystem& rs);

/// Closed-form Weyl group order for the classical families and the
/// exceptional types; used as the enumeration oracle.
unsigned long long weyl_order_formula(const std::string& family, int rank);

} // namespace chamberworks
