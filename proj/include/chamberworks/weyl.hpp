#pragma once

#include "chamberworks/root_system.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace chamberworks {

/// Result of folding a point into the closed fundamental chamber:
/// x0 = w * x with all <x0, simple root> >= 0; w is recorded both as a
/// matrix and as a word in the simple reflections (indices into simples).
struct FoldResult {
  Mat w;
  Vec x0;
  std::vector<int> word;
};

FoldResult fold_to_chamber(const RootSystem& rs, const Vec& x);

/// The label permutation induced on the model chamber by the antipodal
/// map: label -> type of the folded antipode of that fundamental vertex.
/// An involution; trivial exactly when -id lies in the Weyl group.
std::vector<std::pair<int, int>> canonical_involution(const RootSystem& rs);

/// Full enumeration of the Weyl group by breadth-first closure over the
/// simple reflections.  Elements are deduplicated by their action on the
/// simple roots (which determines them); the images are kept as root ids.
///
/// Refuses E8 (order 696,729,600); E7 is permitted only when
/// allow_large = true (memory budget documented in the README).
class WeylEnumeration {
public:
  static WeylEnumeration run(RootSystem rs, bool allow_large = false);

  std::size_t order() const { return elements_.size(); }
  const RootSystem& root_system() const { return rs_; }

  /// Root ids of the images of the simple roots under element idx.
  const std::vector<std::uint16_t>& simple_images(std::size_t idx) const {
    return elements_[idx];
  }

  /// Reconstructed matrix of element idx (images of the simple roots,
  /// identity on the orthogonal complement of their span).
  Mat matrix_of(std::size_t idx) const;

  /// Apply element idx to a vector without materializing the matrix.
  Vec apply(std::size_t idx, const Vec& v) const;

private:
  RootSystem rs_;
  std::vector<std::vector<std::uint16_t>> elements_;
  // decomposition basis: columns = simple roots then complement basis
  std::vector<Vec> comp_basis_;
  std::vector<std::vector<Rat>> binv_; // inverse of [simples | comp] as rows
};

/// Orbit of a canonicalized object under a set of generator actions, with
/// Schreier transversal words (generator index sequences).
template <typename Obj, typename Hash>
struct Orbit {
  std::vector<Obj> points;
  std::unordered_map<Obj, int, Hash> index;
  std::vector<int> parent;     // orbit index of predecessor (-1 for root)
  std::vector<int> parent_gen; // generator applied to reach this point

  /// Word mapping the orbit root to points[i].
  std::vector<int> word_to(int i) const {
    std::vector<int> w;
    while (parent[i] >= 0) {
      w.push_back(parent_gen[i]);
      i = parent[i];
    }
    std::reverse(w.begin(), w.end());
    return w;
  }
};

template <typename Obj, typename Hash, typename Act>
Orbit<Obj, Hash> orbit_closure(const Obj& seed, int num_gens, Act&& act) {
  Orbit<Obj, Hash> o;
  o.points.push_back(seed);
  o.index.emplace(seed, 0);
  o.parent.push_back(-1);
  o.parent_gen.push_back(-1);
  for (std::size_t head = 0; head < o.points.size(); ++head) {
    for (int g = 0; g < num_gens; ++g) {
      Obj im = act(g, o.points[head]);
      if (o.index.count(im)) continue;
      o.index.emplace(im, (int)o.points.size());
      o.points.push_back(im);
      o.parent.push_back((int)head);
      o.parent_gen.push_back(g);
    }
  }
  return o;
}

/// Schreier generators of the stabilizer of the orbit root, as words in
/// the original generators (negative entries encode inverse generators:
/// -g-1 stands for the inverse of generator g).
template <typename Obj, typename Hash, typename Act>
std::vector<std::vector<int>> schreier_generators(const Orbit<Obj, Hash>& o,
                                                  int num_gens, Act&& act) {
  std::vector<std::vector<int>> gens;
  for (std::size_t i = 0; i < o.points.size(); ++i) {
    std::vector<int> ti = o.word_to((int)i);
    for (int g = 0; g < num_gens; ++g) {
      Obj im = act(g, o.points[i]);
      int j = o.index.at(im);
      std::vector<int> tj = o.word_to(j);
      {
        // skip the tree edges themselves: their Schreier element is trivial
        std::vector<int> tig = ti;
        tig.push_back(g);
        if (tig == tj) continue;
      }
      std::vector<int> w = ti;
      w.push_back(g);
      for (auto it = tj.rbegin(); it != tj.rend(); ++it)
        w.push_back(-*it - 1);
      gens.push_back(w);
    }
  }
  return gens;
}

/// Streaming form of the above (no word list materialized).
template <typename Obj, typename Hash, typename Act, typename Cb>
void for_each_schreier_generator(const Orbit<Obj, Hash>& o, int num_gens,
                                 Act&& act, Cb&& cb) {
  std::vector<int> w;
  for (std::size_t i = 0; i < o.points.size(); ++i) {
    std::vector<int> ti = o.word_to((int)i);
    for (int g = 0; g < num_gens; ++g) {
      Obj im = act(g, o.points[i]);
      int j = o.index.at(im);
      std::vector<int> tj = o.word_to(j);
      {
        std::vector<int> tig = ti;
        tig.push_back(g);
        if (tig == tj) continue;
      }
      w = ti;
      w.push_back(g);
      for (auto it = tj.rbegin(); it != tj.rend(); ++it)
        w.push_back(-*it - 1);
      cb(w);
    }
  }
}

} // namespace chamberworks
