#pragma once

#include "chamberworks/complex.hpp"

#include <optional>
#include <vector>

namespace chamberworks {

/// An automorphism of the complex as a vertex permutation (combinatorial
/// representation: the F4 outer isometry has irrational matrix entries,
/// so matrices are not available in general).
struct AutElement {
  std::vector<std::int32_t> vperm;
  bool inner = true;
  std::vector<int> label_perm; // induced permutation of vertex labels
};

/// Automorphism group with every element materialized; only offered for
/// complexes whose Weyl group is enumerable and of moderate size (the E6
/// verdict path iterates the group lazily instead).
struct AutGroup {
  std::vector<AutElement> elements;
  std::size_t inner_order = 0;
  std::size_t outer_classes = 1; // |Aut(graph)|
  std::size_t order() const { return elements.size(); }
};

/// Label permutations preserving the Coxeter graph (including identity).
std::vector<std::vector<int>> graph_automorphisms(const CoxeterGraph& g);

/// The unique automorphism fixing the fundamental chamber setwise and
/// permuting its vertices by the given label permutation, found by
/// deterministic gallery propagation across panels; nullopt only if the
/// propagation runs into an inconsistency (which would indicate that the
/// label permutation does not preserve the graph).
std::optional<std::vector<std::int32_t>> automorphism_from_label_perm(
    const ComplexLattice& cc, const std::vector<int>& label_perm);

AutGroup automorphism_group(const ComplexLattice& cc);

} // namespace chamberworks
