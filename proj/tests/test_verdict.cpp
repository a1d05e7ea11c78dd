#include "chamberworks/geodesy.hpp"
#include "chamberworks/json_io.hpp"
#include "chamberworks/link.hpp"
#include "chamberworks/prng.hpp"
#include "chamberworks/verdict.hpp"

#include "doctest.h"

using namespace chamberworks;

TEST_CASE("stabilizer of the whole complex is all of Aut") {
  auto cc = build_named_complex("B", 3);
  Subcomplex k = whole_complex(*cc);
  StabilizerHandle g = stabilizer(*cc, k);
  CHECK(g.order() == g.aut_order());
  CHECK(g.order() == 48);
}

TEST_CASE("stabilizer of a single chamber in F4 has order 2") {
  // the outer diagram flip fixes one chamber setwise; inner elements fix
  // only the identity chamber pointwise
  auto cc = build_named_complex("F4", 0);
  Subcomplex k = make_subcomplex(*cc, {cc->first_chamber()});
  StabilizerHandle g = stabilizer(*cc, k);
  CHECK(g.order() == 2);
  bool has_outer = false;
  for (std::size_t e = 0; e < g.order(); ++e)
    if (!g.element_inner(e)) has_outer = true;
  CHECK(has_outer);
}

TEST_CASE("stabilizer of a 2-vertex in E6 has no outer part") {
  auto cc = build_named_complex("E6", 0);
  int v = cc->vertex_id(cc->rs().fundamental_vertex(2));
  std::vector<std::int32_t> face{(std::int32_t)v};
  Subcomplex k = make_subcomplex(*cc, {cc->face_id(face)});
  StabilizerHandle g = stabilizer(*cc, k);
  // index = orbit size 27 inside the inner group, no outer elements
  CHECK(g.order() == 51840 / 27);
  for (std::size_t e = 0; e < g.order(); ++e) CHECK(g.element_inner(e));
}

TEST_CASE("fixed faces: trivial group fixes the first face") {
  auto cc = build_named_complex("A", 3);
  Subcomplex k = make_subcomplex(*cc, {cc->first_chamber()});
  StabilizerHandle g = stabilizer(*cc, k); // stabilizer of one chamber
  auto f = fixed_face_in(*cc, k, g);
  REQUIRE(f.has_value());
  CHECK(g.face_invariant(*cc, *f));
}

TEST_CASE("verdict: whole complex is a subbuilding") {
  auto cc = build_named_complex("B", 3);
  VerdictResult v = verdict(*cc, whole_complex(*cc));
  CHECK(v.kind == VerdictKind::Subbuilding);
}

TEST_CASE("verdict: single chamber in B3 yields a fixed face") {
  auto cc = build_named_complex("B", 3);
  Subcomplex k = make_subcomplex(*cc, {cc->first_chamber()});
  VerdictResult v = verdict(*cc, k);
  CHECK(v.kind == VerdictKind::FixedFace);
  CHECK(v.fixed_face >= 0);
  // the witness face is invariant under the whole stabilizer
  StabilizerHandle g = stabilizer(*cc, k);
  CHECK(g.face_invariant(*cc, v.fixed_face));
  CHECK(v.stabilizer_order == g.order());
}

TEST_CASE("verdict requires convexity unless waived") {
  auto cc = build_named_complex("A", 3);
  // two far chambers: not convex
  Subcomplex k = make_subcomplex(*cc, {cc->first_chamber(),
                                       cc->num_faces() - 1});
  if (!is_convex(*cc, k)) CHECK_THROWS(verdict(*cc, k));
}

TEST_CASE("verdict is equivariant under automorphisms") {
  auto cc = build_named_complex("B", 3);
  AutGroup aut = automorphism_group(*cc);
  PRNG rng(11011);
  for (int t = 0; t < 20; ++t) {
    std::vector<int> seed{(int)(rng.next() % cc->num_faces()),
                          (int)(rng.next() % cc->num_faces())};
    Subcomplex h = simplicial_convex_hull(*cc, seed);
    VerdictResult v1 = verdict(*cc, h, true);
    const auto& g = aut.elements[rng.next() % aut.order()].vperm;
    std::vector<int> gseed;
    for (int f : seed) gseed.push_back(cc->map_face(g, f));
    Subcomplex gh = simplicial_convex_hull(*cc, gseed);
    VerdictResult v2 = verdict(*cc, gh, true);
    CHECK(v1.kind == v2.kind);
    CHECK(v1.stabilizer_order == v2.stabilizer_order);
  }
}

TEST_CASE("fixed-point equivalence: orbit-sum witness is fixed") {
  auto cc = build_named_complex("F4", 0);
  PRNG rng(31337);
  for (int t = 0; t < 15; ++t) {
    std::vector<int> seed{(int)(rng.next() % cc->num_faces()),
                          (int)(rng.next() % cc->num_faces())};
    Subcomplex h = simplicial_convex_hull(*cc, seed);
    VerdictResult v = verdict(*cc, h, true);
    if (v.kind != VerdictKind::FixedFace) continue;
    // backward direction: the invariant face's vertex set is permuted by
    // every stabilizer element, so the sum of unit rays is fixed
    StabilizerHandle g = stabilizer(*cc, h);
    auto vs = cc->face_vertices(v.fixed_face);
    for (std::size_t e = 0; e < g.order(); ++e) {
      std::vector<std::int32_t> im;
      for (std::int32_t u : vs) im.push_back((std::int32_t)g.apply_vertex(e, u));
      std::sort(im.begin(), im.end());
      CHECK(std::equal(im.begin(), im.end(), vs.begin()));
    }
    // and the face lies in K
    CHECK(h.contains_face(v.fixed_face));
  }
}

TEST_CASE("invariant-set radius check on small vertex sets") {
  auto cc = build_named_complex("B", 3);
  // single vertex: radius 0
  RadiusCheck r1 = invariant_set_radius_check(*cc, {0});
  CHECK(r1.ok);
  CHECK(r1.radius.is_zero());
  // two vertices at pi/2 with equal norms: midpoint gives pi/4
  int a = cc->vertex_id(Vec::unit(3, 0));
  int b = cc->vertex_id(Vec::unit(3, 1));
  RadiusCheck r2 = invariant_set_radius_check(*cc, {a, b});
  CHECK(r2.ok);
  CHECK(r2.radius == ExactAngle(1, Rat(1, 2)));
  // diameter violation throws
  CHECK_THROWS(invariant_set_radius_check(*cc, {a, cc->antipode_of(a)}));
}

TEST_CASE("radius check on the orthonormal 6-vertex triple in the E6 "
          "2-vertex link") {
  auto e6 = build_named_complex("E6", 0);
  LinkComplex l2 = link_of_fundamental(*e6, {2});
  const ComplexLattice& lk = *l2.complex;
  std::vector<int> sixes;
  for (int v = 0; v < lk.num_vertices(); ++v)
    if (lk.vertex_label(v) == 6) sixes.push_back(v);
  std::vector<int> triple;
  for (int a : sixes)
    for (int b : sixes)
      for (int c : sixes) {
        if (!(a < b && b < c)) continue;
        if (angle(lk.vertex_ray(a), lk.vertex_ray(b)).is_right() &&
            angle(lk.vertex_ray(a), lk.vertex_ray(c)).is_right() &&
            angle(lk.vertex_ray(b), lk.vertex_ray(c)).is_right())
          triple = {a, b, c};
      }
  REQUIRE(triple.size() == 3);
  RadiusCheck r = invariant_set_radius_check(lk, triple);
  CHECK(r.ok);
  CHECK(r.radius == ExactAngle(1, Rat(1, 3))); // arccos(1/sqrt 3) < pi/2
  // the witness center is a 4-vertex
  CHECK(lk.vertex_type(r.center) == 4);
}
