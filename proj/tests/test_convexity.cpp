#include "chamberworks/convexity.hpp"
#include "chamberworks/geodesy.hpp"
#include "chamberworks/json_io.hpp"
#include "chamberworks/link.hpp"
#include "chamberworks/prng.hpp"

#include "doctest.h"

using namespace chamberworks;

namespace {

Vec iv(std::initializer_list<std::int64_t> xs) {
  Vec v((int)xs.size());
  int i = 0;
  for (auto x : xs) v[i++] = Rat(x);
  return v;
}

std::vector<int> random_seed_faces(const ComplexLattice& cc, PRNG& rng,
                                   int count) {
  std::vector<int> out;
  for (int i = 0; i < count; ++i)
    out.push_back((int)(rng.next() % cc.num_faces()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

} // namespace

TEST_CASE("subcomplex closure under the face relation") {
  auto cc = build_named_complex("B", 3);
  Subcomplex k = make_subcomplex(*cc, {cc->first_chamber()});
  CHECK(k.faces.size() == 7); // 3 vertices + 3 edges + the chamber
  for (int f : k.faces)
    cc->for_each_subface(f, [&](int s) { CHECK(k.contains_face(s)); });
}

TEST_CASE("hull of a face with itself is its closure") {
  auto cc = build_named_complex("F4", 0);
  int c = cc->first_chamber() + 13;
  Subcomplex h = hull_of_face_pair(*cc, c, c);
  CHECK(h == make_subcomplex(*cc, {c}));
}

TEST_CASE("hull_of_face_pair rejects antipodal vertex pairs") {
  auto cc = build_named_complex("B", 3);
  int v = 0;
  std::vector<std::int32_t> f1{(std::int32_t)v};
  std::vector<std::int32_t> f2{(std::int32_t)cc->antipode_of(v)};
  CHECK_THROWS_AS(
      hull_of_face_pair(*cc, cc->face_id(f1), cc->face_id(f2)),
      AntipodalPairError);
}

TEST_CASE("hull of two antipodal vertices via the closure: just the pair") {
  auto cc = build_named_complex("F4", 0);
  int v = cc->vertex_id(iv({1, 0, 0, 0}));
  int a = cc->antipode_of(v);
  std::vector<std::int32_t> f1{(std::int32_t)v}, f2{(std::int32_t)a};
  Subcomplex h = simplicial_convex_hull(
      *cc, {cc->face_id(f1), cc->face_id(f2)});
  CHECK(h.faces.size() == 2);
  CHECK(is_convex(*cc, h));
  CHECK(is_subbuilding(*cc, h)); // zero-dimensional, antipode-closed
}

TEST_CASE("whole complex is convex and a subbuilding") {
  auto cc = build_named_complex("B", 3);
  Subcomplex k = whole_complex(*cc);
  CHECK(is_convex(*cc, k));
  CHECK(is_subbuilding(*cc, k));
}

TEST_CASE("two disjoint chambers are not convex") {
  auto cc = build_named_complex("A", 3);
  // find two chambers sharing no vertex
  int c1 = cc->first_chamber(), c2 = -1;
  for (int c = c1 + 1; c < cc->num_faces() && c2 < 0; ++c) {
    auto a = cc->face_vertices(c1);
    auto b = cc->face_vertices(c);
    bool disjoint = true;
    for (std::int32_t v : b)
      if (std::binary_search(a.begin(), a.end(), v)) disjoint = false;
    if (disjoint) c2 = c;
  }
  REQUIRE(c2 >= 0);
  Subcomplex k = make_subcomplex(*cc, {c1, c2});
  CHECK_FALSE(is_convex(*cc, k));
  Subcomplex h = simplicial_convex_hull(*cc, {c1, c2});
  CHECK(h.faces.size() > k.faces.size());
}

TEST_CASE("F4 singular dodecagon of alternating 1- and 2-vertices is a "
          "subbuilding") {
  auto cc = build_named_complex("F4", 0);
  // the circle through two 1-vertices at pi/3: take its faces
  Vec x = iv({0, 0, 0, -1});
  Vec y = iv({1, 1, 1, -1});
  Subcomplex h = simplicial_convex_hull(
      *cc, {cc->face_spanned_by(x), cc->face_spanned_by(-x),
            cc->face_spanned_by(y), cc->face_spanned_by(-y)});
  CHECK(is_convex(*cc, h));
  CHECK(is_subbuilding(*cc, h));
  CHECK(h.dim == 1);
  // a single chamber is not a subbuilding
  Subcomplex ch = make_subcomplex(*cc, {cc->first_chamber()});
  CHECK_FALSE(is_subbuilding(*cc, ch));
}

TEST_CASE("closure operator axioms on random seeds") {
  // extensive, monotone, idempotent
  for (auto& [fam, rank] : std::vector<std::pair<std::string, int>>{
           {"A", 3}, {"B", 3}, {"F4", 0}}) {
    auto cc = build_named_complex(fam, rank);
    PRNG rng(fam == "F4" ? 1000 : (fam == "A" ? 2000 : 3000));
    int trials = fam == "F4" ? 12 : 40;
    for (int t = 0; t < trials; ++t) {
      std::vector<int> seed = random_seed_faces(*cc, rng, 2);
      Subcomplex h = simplicial_convex_hull(*cc, seed);
      // extensive
      for (int f : seed) CHECK(h.contains_face(f));
      // idempotent
      Subcomplex hh = simplicial_convex_hull(*cc, h.faces);
      CHECK(hh == h);
      // monotone: add a face
      std::vector<int> bigger = seed;
      bigger.push_back((int)(rng.next() % cc->num_faces()));
      Subcomplex h2 = simplicial_convex_hull(*cc, bigger);
      for (int f : h.faces) CHECK(h2.contains_face(f));
    }
  }
}

TEST_CASE("hulls are equivariant under random automorphisms") {
  auto cc = build_named_complex("B", 3);
  AutGroup aut = automorphism_group(*cc);
  PRNG rng(606);
  for (int t = 0; t < 25; ++t) {
    std::vector<int> seed = random_seed_faces(*cc, rng, 2);
    const auto& g = aut.elements[rng.next() % aut.order()].vperm;
    Subcomplex h = simplicial_convex_hull(*cc, seed);
    std::vector<int> gseed;
    for (int f : seed) gseed.push_back(cc->map_face(g, f));
    Subcomplex gh = simplicial_convex_hull(*cc, gseed);
    std::vector<int> hg;
    for (int f : h.faces) hg.push_back(cc->map_face(g, f));
    std::sort(hg.begin(), hg.end());
    CHECK(gh.faces == hg);
  }
}

TEST_CASE("subbuilding iff every vertex has an antipode inside") {
  auto cc = build_named_complex("B", 3);
  PRNG rng(909);
  int positive = 0, negative = 0;
  for (int t = 0; t < 100; ++t) {
    std::vector<int> seed = random_seed_faces(*cc, rng, 2);
    // sometimes force antipode-closure by seeding opposite faces
    if (t % 2 == 0)
      for (int f : std::vector<int>(seed))
        seed.push_back(cc->opposite_face(f));
    Subcomplex h = simplicial_convex_hull(*cc, seed);
    bool all_antipodes = true;
    for (int v : h.vertices)
      if (!h.contains_vertex(cc->antipode_of(v))) all_antipodes = false;
    CHECK(is_subbuilding(*cc, h) == all_antipodes);
    (all_antipodes ? positive : negative) += 1;
  }
  CHECK(positive > 10);
  CHECK(negative > 10);
}

TEST_CASE("interior vertices: whole complex vs single chamber") {
  auto cc = build_named_complex("B", 3);
  Subcomplex whole = whole_complex(*cc);
  Subcomplex ch = make_subcomplex(*cc, {cc->first_chamber()});
  for (std::int32_t v : cc->face_vertices(cc->first_chamber())) {
    CHECK(is_interior_vertex(*cc, whole, v));
    CHECK_FALSE(is_interior_vertex(*cc, ch, v));
  }
}

TEST_CASE("interior vertices of a B3 hemisphere") {
  auto cc = build_named_complex("B", 3);
  // hemisphere around the root-type vertex e3: all faces within pi/2
  Vec pole = iv({0, 0, 1});
  std::vector<int> seed;
  for (int f = 0; f < cc->num_faces(); ++f) {
    bool inside = true;
    for (std::int32_t v : cc->face_vertices(f))
      if (dot(cc->vertex_ray(v), pole).sign() < 0) inside = false;
    if (inside) seed.push_back(f);
  }
  Subcomplex h = simplicial_convex_hull(*cc, seed);
  CHECK(h.faces.size() == seed.size()); // the hemisphere is convex
  CHECK_FALSE(is_subbuilding(*cc, h));
  // the pole (ball center) sees the full direction sphere inside K, so it
  // is interior; equator vertices see only a half-circle of directions
  int pv = cc->vertex_id(pole);
  CHECK(is_interior_vertex(*cc, h, pv));
  int equator = 0;
  for (int v : h.vertices)
    if (dot(cc->vertex_ray(v), pole).is_zero()) {
      CHECK_FALSE(is_interior_vertex(*cc, h, v));
      ++equator;
    }
  CHECK(equator > 0);
  // inside the equator circle itself every vertex is interior (its link
  // trace is an antipodal direction pair)
  std::vector<int> circle_seed;
  for (int f = 0; f < cc->num_faces(); ++f) {
    bool on = true;
    for (std::int32_t v : cc->face_vertices(f))
      if (!dot(cc->vertex_ray(v), pole).is_zero()) on = false;
    if (on) circle_seed.push_back(f);
  }
  Subcomplex circle = simplicial_convex_hull(*cc, circle_seed);
  CHECK(is_subbuilding(*cc, circle));
  for (int v : circle.vertices) CHECK(is_interior_vertex(*cc, circle, v));
}

TEST_CASE("antipode propagation along segments") {
  auto cc = build_named_complex("F4", 0);
  // a 12121 segment: endpoints 1-vertices at 2pi/3, middle 1-vertex z
  Vec x1 = iv({0, 0, 0, -1});
  Vec x2 = iv({1, 1, 1, 1});
  REQUIRE(angle(x1, x2) == ExactAngle(-1, Rat(1, 4)));
  SegmentTrace t = segment_trace(*cc, x1, x2);
  std::string s = segment_type_string(*cc, t);
  REQUIRE(s == "12121");
  Vec z = (Rat(1) - t.crossings[1].s) * x1 + t.crossings[1].s * x2;
  // K = hull of the segment pieces plus the antipode of z
  std::vector<int> seed{cc->face_spanned_by(x1), cc->face_spanned_by(x2),
                        cc->face_spanned_by(-z)};
  for (const auto& c : t.crossings) seed.push_back(c.face);
  Subcomplex k = simplicial_convex_hull(*cc, seed);
  auto res = antipode_propagation_check(*cc, k, cc->vertex_id(x1),
                                        cc->vertex_id(x2), z);
  CHECK(res.ok);
  CHECK(res.antipode_x1 == cc->antipode_of(cc->vertex_id(x1)));
  CHECK(res.antipode_x2 == cc->antipode_of(cc->vertex_id(x2)));
  // precondition violations throw
  CHECK_THROWS(antipode_propagation_check(*cc, k, cc->vertex_id(x1),
                                          cc->vertex_id(x2), x1));
}

TEST_CASE("root envelope bounds hulls and certifies convexity") {
  auto cc = build_named_complex("B", 3);
  PRNG rng(515);
  for (int t = 0; t < 30; ++t) {
    std::vector<int> seed = random_seed_faces(*cc, rng, 2);
    Subcomplex h = simplicial_convex_hull(*cc, seed);
    Subcomplex env = root_envelope(*cc, h);
    for (int f : h.faces) CHECK(env.contains_face(f));
  }
}
