#include "chamberworks/prng.hpp"
#include "chamberworks/weyl.hpp"

#include "doctest.h"

using namespace chamberworks;

TEST_CASE("enumeration orders match the closed formulas") {
  for (int n = 1; n <= 7; ++n)
    CHECK(WeylEnumeration::run(build_root_system("A", n)).order() ==
          weyl_order_formula("A", n));
  for (int n = 2; n <= 6; ++n)
    CHECK(WeylEnumeration::run(build_root_system("B", n)).order() ==
          weyl_order_formula("B", n));
  for (int n = 4; n <= 6; ++n)
    CHECK(WeylEnumeration::run(build_root_system("D", n)).order() ==
          weyl_order_formula("D", n));
  CHECK(WeylEnumeration::run(build_root_system("F4")).order() == 1152);
  CHECK(WeylEnumeration::run(build_root_system("E6")).order() == 51840);
}

TEST_CASE("oversized enumerations are refused") {
  CHECK_THROWS(WeylEnumeration::run(build_root_system("E8")));
  CHECK_THROWS(WeylEnumeration::run(build_root_system("E7")));
  // but E7 is available behind the opt-in flag (not exercised here: the
  // 2.9M-element closure belongs to the feature-gated suite)
}

TEST_CASE("reconstructed matrices permute roots and preserve angles") {
  RootSystem rs = build_root_system("F4");
  auto we = WeylEnumeration::run(rs);
  const RootSystem& R = we.root_system();
  // exhaustive for F4: every element permutes the root set
  PRNG rng(5);
  for (std::size_t i = 0; i < we.order(); ++i) {
    Mat m = we.matrix_of(i);
    // spot-check angle preservation on a random root pair
    int a = (int)(rng.next() % R.roots.size());
    int b = (int)(rng.next() % R.roots.size());
    CHECK(R.root_id(m.apply(R.roots[a])) >= 0);
    CHECK(angle(m.apply(R.roots[a]), m.apply(R.roots[b])) ==
          angle(R.roots[a], R.roots[b]));
  }
}

TEST_CASE("E6 elements sampled: root permutation and isometry") {
  RootSystem rs = build_root_system("E6");
  auto we = WeylEnumeration::run(rs);
  const RootSystem& R = we.root_system();
  PRNG rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t i = rng.next() % we.order();
    int a = (int)(rng.next() % R.roots.size());
    int b = (int)(rng.next() % R.roots.size());
    Vec ia = we.apply(i, R.roots[a]);
    Vec ib = we.apply(i, R.roots[b]);
    CHECK(R.root_id(ia) >= 0);
    CHECK(angle(ia, ib) == angle(R.roots[a], R.roots[b]));
  }
}

TEST_CASE("fold reaches the chamber and is W-stable") {
  RootSystem rs = build_root_system("F4");
  auto we = WeylEnumeration::run(rs);
  PRNG rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    Vec x(4);
    bool zero = true;
    for (int i = 0; i < 4; ++i) {
      x[i] = Rat((std::int64_t)(rng.next() % 13) - 6);
      zero = zero && x[i].is_zero();
    }
    if (zero) continue;
    FoldResult fr = fold_to_chamber(rs, x);
    for (const Vec& s : rs.simples) CHECK(dot(fr.x0, s).sign() >= 0);
    CHECK(fr.w.apply(x) == fr.x0);
    // the fold of w*x lands on the same chamber point
    std::size_t i = rng.next() % we.order();
    FoldResult fr2 = fold_to_chamber(rs, we.apply(i, x));
    CHECK(fr2.x0 == fr.x0);
  }
}

TEST_CASE("canonical involutions per type") {
  auto fixes_all = [](const RootSystem& rs) {
    for (auto [a, b] : canonical_involution(rs))
      if (a != b) return false;
    return true;
  };
  CHECK(fixes_all(build_root_system("A", 1)));
  CHECK_FALSE(fixes_all(build_root_system("A", 2)));
  CHECK_FALSE(fixes_all(build_root_system("A", 5)));
  CHECK(fixes_all(build_root_system("B", 3)));
  CHECK(fixes_all(build_root_system("B", 5)));
  CHECK(fixes_all(build_root_system("D", 4)));
  CHECK_FALSE(fixes_all(build_root_system("D", 5)));
  CHECK(fixes_all(build_root_system("D", 6)));
  CHECK(fixes_all(build_root_system("F4")));
  CHECK_FALSE(fixes_all(build_root_system("E6")));
  // involution is available without enumeration for the large types
  CHECK(fixes_all(build_root_system("E7")));
  CHECK(fixes_all(build_root_system("E8")));
}

TEST_CASE("orbit closure with Schreier transversals") {
  // orbit of a coordinate vector under B3 signed permutations
  RootSystem rs = build_root_system("B", 3);
  std::vector<Mat> refl;
  for (const Vec& s : rs.simples) refl.push_back(Mat::reflection(s));
  Vec seed = Vec::unit(3, 0);
  auto act = [&](int g, const Vec& v) { return canonical_ray(refl[g].apply(v)); };
  auto orb = orbit_closure<Vec, VecHash>(canonical_ray(seed), 3, act);
  CHECK(orb.points.size() == 6); // +-e1, +-e2, +-e3
  for (std::size_t i = 0; i < orb.points.size(); ++i) {
    // the transversal word really maps the root to the point
    Vec v = orb.points[0];
    for (int g : orb.word_to((int)i)) v = act(g >= 0 ? g : -g - 1, v);
    CHECK(v == orb.points[i]);
  }
  // Schreier generators stabilize the base point
  auto sch = schreier_generators(orb, 3, act);
  for (const auto& w : sch) {
    Vec v = orb.points[0];
    for (int g : w) v = act(g >= 0 ? g : -g - 1, v);
    CHECK(v == orb.points[0]);
  }
}
