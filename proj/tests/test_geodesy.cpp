#include "chamberworks/geodesy.hpp"
#include "chamberworks/json_io.hpp"
#include "chamberworks/prng.hpp"

#include "doctest.h"

#include <cmath>

using namespace chamberworks;

namespace {

Vec iv(std::initializer_list<std::int64_t> xs) {
  Vec v((int)xs.size());
  int i = 0;
  for (auto x : xs) v[i++] = Rat(x);
  return v;
}

} // namespace

TEST_CASE("trace: in-chamber segment has no crossings") {
  auto cc = build_named_complex("F4", 0);
  // two points interior to the same chamber
  Vec a = cc->face_interior_point(cc->first_chamber());
  Vec b = a + cc->vertex_ray(cc->face_vertices(cc->first_chamber())[0]);
  SegmentTrace t = segment_trace(*cc, a, b);
  CHECK(t.crossings.empty());
  CHECK(t.interval_faces.size() == 1);
}

TEST_CASE("trace: F4 121 segment and exactness of crossings") {
  auto cc = build_named_complex("F4", 0);
  Vec x = iv({0, 0, 0, -1});
  Vec y = iv({1, 1, 1, -1});
  SegmentTrace t = segment_trace(*cc, x, y);
  CHECK(segment_type_string(*cc, t) == "121");
  // crossing parameters are exact rationals; re-evaluating each crossed
  // wall at its parameter gives exactly zero
  for (const auto& c : t.crossings) {
    Vec p = (Rat(1) - c.s) * x + c.s * y;
    bool some_wall_zero = false;
    for (int w = 0; w < cc->num_walls(); ++w)
      if (dot(p, cc->wall_normal(w)).is_zero()) some_wall_zero = true;
    CHECK(some_wall_zero);
    CHECK(c.s.sign() > 0);
    CHECK(c.s < Rat(1));
  }
}

TEST_CASE("trace reversal symmetry") {
  auto cc = build_named_complex("B", 3);
  PRNG rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    int a = (int)(rng.next() % cc->num_vertices());
    int b = (int)(rng.next() % cc->num_vertices());
    if (b == cc->antipode_of(a) || a == b) continue;
    SegmentTrace f = segment_trace(*cc, cc->vertex_ray(a), cc->vertex_ray(b));
    SegmentTrace r = segment_trace(*cc, cc->vertex_ray(b), cc->vertex_ray(a));
    REQUIRE(f.crossings.size() == r.crossings.size());
    std::size_t n = f.crossings.size();
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(f.crossings[i].face == r.crossings[n - 1 - i].face);
      CHECK(f.crossings[i].s == Rat(1) - r.crossings[n - 1 - i].s);
    }
    REQUIRE(f.interval_faces.size() == r.interval_faces.size());
    for (std::size_t i = 0; i < f.interval_faces.size(); ++i)
      CHECK(f.interval_faces[i] ==
            r.interval_faces[f.interval_faces.size() - 1 - i]);
  }
}

TEST_CASE("antipodal endpoints are rejected") {
  auto cc = build_named_complex("B", 3);
  Vec x = cc->vertex_ray(0);
  CHECK_THROWS(segment_trace(*cc, x, -x));
  CHECK_THROWS(midpoint(*cc, x, -x));
}

TEST_CASE("midpoint: equal norms required, rescale helper") {
  auto cc = build_named_complex("E6", 0);
  Vec v1 = iv({1, 1, 1, 1, 1, -1, -1, -1});
  Vec u = iv({0, 0, 0, 1, 1, 0, 0, 0});
  // |v1|^2 = 8, |u|^2 = 2: ratio 4 is a rational square, so the helper
  // rescales and the midpoint is v4
  MidpointResult m = midpoint(*cc, v1, u);
  CHECK(m.vertex_label.value_or(-1) == 4);
  CHECK(m.direction == canonical_ray(iv({1, 1, 1, 3, 3, -1, -1, -1})));
  // trivial case
  MidpointResult same = midpoint(*cc, v1, Rat(3) * v1);
  CHECK(same.direction == canonical_ray(v1));

  std::vector<Vec> bad{iv({1, 0, 0, 0, 0, 0, 0, 0}),
                       iv({1, 1, 0, 0, 0, 0, 0, 0})};
  CHECK_FALSE(rescale_to_common_norm(bad)); // ratio 2 is not a square
}

TEST_CASE("antipode_in on vertex sets") {
  auto cc = build_named_complex("B", 3);
  std::vector<int> all(cc->num_vertices());
  for (int v = 0; v < cc->num_vertices(); ++v) all[v] = v;
  for (int v = 0; v < cc->num_vertices(); ++v) {
    auto a = antipode_in(*cc, v, all);
    REQUIRE(a.has_value());
    CHECK(*a == cc->antipode_of(v));
    CHECK(angle(cc->vertex_ray(v), cc->vertex_ray(*a)).is_straight());
  }
  std::vector<int> just_v{0};
  CHECK_FALSE(antipode_in(*cc, 0, just_v).has_value());
}

TEST_CASE("pairs_weyl_equivalent: same-distance pairs of 1-vertices in F4") {
  auto cc = build_named_complex("F4", 0);
  std::vector<int> ones;
  for (int v = 0; v < cc->num_vertices(); ++v)
    if (cc->vertex_label(v) == 1) ones.push_back(v);
  PRNG rng(777);
  int found = 0;
  for (int trial = 0; trial < 40; ++trial) {
    int a = ones[rng.next() % ones.size()];
    int b = ones[rng.next() % ones.size()];
    int c = ones[rng.next() % ones.size()];
    if (a == b) continue;
    ExactAngle d = angle(cc->vertex_ray(a), cc->vertex_ray(b));
    // find a second pair with the same distance starting from c
    int e = -1;
    for (int cand : ones)
      if (cand != c && angle(cc->vertex_ray(c), cc->vertex_ray(cand)) == d)
        e = cand;
    if (e < 0) continue;
    auto w = pairs_weyl_equivalent(*cc, a, b, c, e);
    REQUIRE(w.has_value());
    CHECK(cc->vertex_id(w->apply(cc->vertex_ray(a))) == c);
    CHECK(cc->vertex_id(w->apply(cc->vertex_ray(b))) == e);
    ++found;
  }
  CHECK(found >= 20);
  // identical pairs: the identity works
  auto w = pairs_weyl_equivalent(*cc, ones[0], ones[1], ones[0], ones[1]);
  REQUIRE(w.has_value());
  // mismatched distances throw
  ExactAngle d01 = angle(cc->vertex_ray(ones[0]), cc->vertex_ray(ones[1]));
  int far = -1;
  for (int cand : ones)
    if (angle(cc->vertex_ray(ones[0]), cc->vertex_ray(cand)) != d01 &&
        cand != ones[0])
      far = cand;
  REQUIRE(far >= 0);
  CHECK_THROWS(pairs_weyl_equivalent(*cc, ones[0], ones[1], ones[0], far));
}

TEST_CASE("circumcenter: exact candidates and symmetry cases") {
  auto cc = build_named_complex("B", 3);
  // one point: itself
  Vec p = cc->vertex_ray(0);
  CircumcenterResult r1 = circumcenter(*cc, {p});
  CHECK(r1.exact);
  CHECK(r1.radius.is_zero());
  // two equal-norm points: the midpoint at half the distance
  Vec a = iv({1, 0, 0});
  Vec b = iv({0, 1, 0});
  CircumcenterResult r2 = circumcenter(*cc, {a, b});
  CHECK(r2.exact);
  CHECK(r2.center == canonical_ray(iv({1, 1, 0})));
  CHECK(std::abs(r2.radius.radians() - M_PI / 4) < 1e-12);
  // an orthonormal triple: center at the diagonal, radius arccos(1/sqrt 3)
  Vec c = iv({0, 0, 1});
  CircumcenterResult r3 = circumcenter(*cc, {a, b, c});
  CHECK(r3.exact);
  CHECK(r3.center == canonical_ray(iv({1, 1, 1})));
  CHECK(r3.radius == ExactAngle(1, Rat(1, 3)));
  CHECK_THROWS(circumcenter(*cc, {a, -a}));
}

TEST_CASE("circumcenter numeric descent agrees with exact centers") {
  // same-type vertex sets always admit the rescaled-sum and midpoint
  // candidates, so the exact certificate is usually available
  auto cc = build_named_complex("F4", 0);
  std::vector<std::vector<int>> by_type(5);
  for (int v = 0; v < cc->num_vertices(); ++v)
    by_type[cc->vertex_label(v)].push_back(v);
  PRNG rng(2024);
  int agreed = 0;
  for (int trial = 0; trial < 600 && agreed < 100; ++trial) {
    int label = 1 + (int)(rng.next() % 4);
    const auto& pool = by_type[label];
    std::vector<Vec> pts;
    int n = 2 + (int)(rng.next() % 2);
    for (int i = 0; i < n; ++i)
      pts.push_back(cc->vertex_ray(pool[rng.next() % pool.size()]));
    bool antip = false;
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        if (angle(pts[i], pts[j]).is_straight()) antip = true;
    if (antip) continue;
    CircumcenterResult r = circumcenter(*cc, pts);
    if (!r.exact || !(r.radius < ExactAngle::right())) continue;
    CHECK(std::abs(r.radius.radians() - r.radius_numeric) < 1e-8);
    ++agreed;
  }
  CHECK(agreed == 100);
}
