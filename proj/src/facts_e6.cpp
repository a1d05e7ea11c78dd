#include "chamberworks/circle.hpp"
#include "chamberworks/convexity.hpp"
#include "chamberworks/facts.hpp"
#include "chamberworks/geodesy.hpp"
#include "chamberworks/link.hpp"
#include "chamberworks/lp.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace chamberworks {

using namespace facts_detail;

namespace {

Vec iv8(std::initializer_list<std::int64_t> xs) {
  Vec v(8);
  int i = 0;
  for (auto x : xs) v[i++] = Rat(x);
  return v;
}

std::string reversal_normal(const std::string& s) {
  std::string r = s;
  std::reverse(r.begin(), r.end());
  return std::max(s, r);
}

// perpendicular in the sense of the rhombus/triangle facts: all endpoints
// of the face are equidistant from every listed point
bool equidistant_from_all(const ComplexLattice& cc, int face,
                          const std::vector<Vec>& pts) {
  auto vs = cc.face_vertices(face);
  for (std::int32_t v : vs) {
    ExactAngle first = angle(cc.vertex_ray(v), pts[0]);
    for (std::size_t i = 1; i < pts.size(); ++i)
      if (angle(cc.vertex_ray(v), pts[i]) != first) return false;
  }
  return true;
}

// center of an equal-norm family: the canonical ray of the rescaled sum
Vec equal_norm_center(std::vector<Vec> pts) {
  if (!rescale_to_common_norm(pts))
    throw std::logic_error("no common rational rescaling");
  Vec s(pts[0].dim());
  for (const Vec& p : pts) s = s + p;
  return canonical_ray(s);
}

// find n pairwise-equal-distance vertices of a type (first match)
std::vector<int> find_equilateral(const ComplexLattice& cc, int label, int n,
                                  const ExactAngle& d) {
  std::vector<int> verts = vertices_of_type(cc, label);
  std::vector<int> cur;
  std::function<bool(std::size_t)> grow = [&](std::size_t from) -> bool {
    if ((int)cur.size() == n) return true;
    for (std::size_t i = from; i < verts.size(); ++i) {
      bool ok = true;
      for (int c : cur)
        if (angle(cc.vertex_ray(c), cc.vertex_ray(verts[i])) != d) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(verts[i]);
      if (grow(i + 1)) return true;
      cur.pop_back();
    }
    return false;
  };
  if (!grow(0)) return {};
  return cur;
}

} // namespace

FactReport run_facts_e6() {
  FactSink sink("E6");
  auto ccp = ComplexLattice::build(build_root_system("E6"));
  const ComplexLattice& cc = *ccp;
  const RootSystem& rs = cc.rs();

  sink.check("e6.roots.count", "the E6 root system has 72 roots",
             std::to_string(rs.roots.size()), "72");
  sink.check("e6.weyl.order", "the E6 Weyl group has order 51840",
             std::to_string(cc.weyl().order()), "51840");

  sink.check("e6.involution",
             "the canonical involution fixes 1 and 4 and swaps 2<->6, 3<->5",
             involution_string(rs), "1->1 2->6 3->5 4->4 5->3 6->2");

  sink.check(
      "e6.dist.11",
      "mutual distances between 1-vertices are 0, pi/3, pi/2, 2pi/3, pi",
      angles_to_string(distance_set(cc, 1, 1)), "{0, pi/3, pi/2, 2pi/3, pi}");
  sink.check("e6.dist.22",
             "mutual distances between 2-vertices are 0, arccos 1/4, 2pi/3",
             angles_to_string(distance_set(cc, 2, 2)),
             "{0, arccos(sqrt(1/16)), 2pi/3}");
  sink.check("e6.dist.26",
             "distances between 2- and 6-vertices are pi/3, arccos(-1/4), pi",
             angles_to_string(distance_set(cc, 2, 6)),
             "{pi/3, arccos(-sqrt(1/16)), pi}");

  // vertex tables
  sink.check("e6.vertex.e4e5", "e4 + e5 represents a 1-vertex",
             std::to_string(cc.vertex_type(iv8({0, 0, 0, 1, 1, 0, 0, 0}))),
             "1");
  {
    bool reps_are_2 =
        cc.vertex_type(iv8({-3, 3, 3, 3, 3, -1, -1, -1})) == 2 &&
        cc.vertex_type(iv8({0, 0, 0, 0, 6, 2, 2, 2})) == 2 &&
        cc.vertex_type(iv8({0, 0, 0, 0, 0, -4, -4, -4})) == 2;
    sink.check_bool("e6.vertex.2reps",
                    "the three listed coordinate vectors represent 2-vertices",
                    reps_are_2);
    sink.check("e6.vertex.count2", "there are 27 2-vertices",
               std::to_string(vertices_of_type(cc, 2).size()), "27");
    bool antip6 = true;
    for (int v : vertices_of_type(cc, 2))
      if (cc.vertex_label(cc.antipode_of(v)) != 6) antip6 = false;
    sink.check_bool("e6.antipode.26",
                    "the 6-vertices are exactly the antipodes of the "
                    "2-vertices (and -v6 is a 2-vertex)",
                    antip6 && cc.vertex_type(-rs.fundamental_vertex(6)) == 2);
  }

  // 1-vertices are the root rays
  {
    bool all_roots = true;
    for (int v : vertices_of_type(cc, 1))
      if (rs.root_id(cc.vertex_ray(v)) < 0) all_roots = false;
    sink.check_bool("e6.roottype.1",
                    "the 1-vertices are represented by the root vectors",
                    all_roots &&
                        vertices_of_type(cc, 1).size() == rs.roots.size());
  }

  // segments
  const Vec v1 = rs.fundamental_vertex(1);
  const Vec v2 = rs.fundamental_vertex(2);
  const Vec v4 = rs.fundamental_vertex(4);
  const Vec v6 = rs.fundamental_vertex(6);
  sink.check("e6.seg.141", "1-vertices at pi/3 join by a type 141 segment",
             seg_string(cc, v1, iv8({0, 0, 0, 2, 2, 0, 0, 0})), "141");
  sink.check("e6.seg.14141",
             "1-vertices at 2pi/3 join by a type 14141 segment",
             seg_string(cc, v1, iv8({-1, -1, 0, 0, 0, 0, 0, 0})), "14141");
  sink.check("e6.seg.232",
             "2-vertices at arccos 1/4 join by a type 232 segment",
             seg_string(cc, v2, iv8({0, 0, 0, 0, 6, 2, 2, 2})), "232");
  sink.check("e6.seg.262", "2-vertices at 2pi/3 join by a type 262 segment",
             seg_string(cc, v2, -v6), "262");
  sink.check("e6.seg.216",
             "a 2-vertex and 6-vertex at arccos(-1/4) join by a 216 segment",
             seg_string(cc, v2, -iv8({0, 0, 0, 0, 6, 2, 2, 2})), "216");

  // midpoint identities
  {
    MidpointResult m = midpoint(cc, v1, iv8({0, 0, 0, 2, 2, 0, 0, 0}));
    sink.check_bool("e6.mid.v4",
                    "v4 is the midpoint of v1 and the 1-vertex e4+e5",
                    m.direction == canonical_ray(v4) &&
                        m.vertex_label.value_or(-1) == 4);
    MidpointResult m26 = midpoint(cc, v2, v6);
    MidpointResult m11 = midpoint(cc, v1, iv8({-1, 1, 1, 1, 1, 1, 1, 1}));
    sink.check_bool("e6.mid.v2v6",
                    "the midpoint of v2 v6 equals the midpoint of v1 and the "
                    "1-vertex (1/2)(-1,1,...,1)",
                    m26.direction == m11.direction &&
                        m26.direction == canonical_ray(iv8({0, 1, 1, 1, 1, 0,
                                                            0, 0})));
  }
  check_pair_transitivity(sink, cc, "e6", 1);
  check_pair_transitivity(sink, cc, "e6", 2);

  // rhombus spanned by two 1-vertices at pi/2
  {
    Vec u = iv8({1, -1, 0, 0, 0, 0, 0, 0});
    int fa = cc.face_spanned_by(v1), fb = cc.face_spanned_by(u);
    Subcomplex hull = simplicial_convex_hull(cc, {fa, fb});
    std::vector<int> edges26;
    for (int f : hull.faces)
      if (cc.face_dim(f) == 1 && cc.face_types(f) == std::vector<int>{2, 6})
        edges26.push_back(f);
    bool ok = edges26.size() == 1;
    if (ok) {
      auto evs = cc.face_vertices(edges26[0]);
      Vec diag_mid = equal_norm_center(
          {cc.vertex_ray(evs[0]), cc.vertex_ray(evs[1])});
      Vec seg_mid = equal_norm_center({v1, u});
      ok = diag_mid == seg_mid;
    }
    sink.check_bool("e6.rhombus.26edge",
                    "the hull of two 1-vertices at pi/2 is a rhombus whose "
                    "other diagonal is a 26-edge through the same midpoint",
                    ok);
  }

  // equilateral 141-triangle: center is the midpoint of a perpendicular
  // 35-edge contained in the hull
  {
    std::vector<int> tri = find_equilateral(cc, 1, 3, ExactAngle(1, Rat(1, 4)));
    bool ok = tri.size() == 3;
    if (ok) {
      std::vector<int> seeds;
      std::vector<Vec> pts;
      for (int v : tri) {
        pts.push_back(cc.vertex_ray(v));
        std::vector<std::int32_t> one{(std::int32_t)v};
        seeds.push_back(cc.face_id(one));
      }
      Subcomplex hull = simplicial_convex_hull(cc, seeds);
      Vec center = equal_norm_center(pts);
      int cf = cc.face_spanned_by(center);
      ok = hull.contains_face(cf) && cc.face_dim(cf) == 1 &&
           cc.face_types(cf) == std::vector<int>{3, 5} &&
           equidistant_from_all(cc, cf, pts);
      if (ok) {
        auto evs = cc.face_vertices(cf);
        ok = equal_norm_center({cc.vertex_ray(evs[0]),
                                cc.vertex_ray(evs[1])}) == center;
      }
    }
    sink.check_bool("e6.triangle.35edge",
                    "the center of an equilateral 141-triangle is the "
                    "midpoint of a 35-edge perpendicular to it, inside the "
                    "simplicial hull",
                    ok);
  }

  // 141-square: center is the midpoint of a perpendicular 26-edge
  {
    std::vector<int> ones = vertices_of_type(cc, 1);
    ExactAngle side(1, Rat(1, 4));
    std::vector<int> sq;
    int v0 = cc.vertex_id(v1);
    for (int b : ones) {
      if (angle(v1, cc.vertex_ray(b)) != side) continue;
      for (int c : ones) {
        if (angle(cc.vertex_ray(b), cc.vertex_ray(c)) != side ||
            !angle(v1, cc.vertex_ray(c)).is_right())
          continue;
        for (int d : ones) {
          if (angle(cc.vertex_ray(c), cc.vertex_ray(d)) == side &&
              angle(v1, cc.vertex_ray(d)) == side &&
              angle(cc.vertex_ray(b), cc.vertex_ray(d)).is_right()) {
            sq = {v0, b, c, d};
            break;
          }
        }
        if (!sq.empty()) break;
      }
      if (!sq.empty()) break;
    }
    bool ok = sq.size() == 4;
    if (ok) {
      std::vector<Vec> pts;
      std::vector<int> seeds;
      for (int v : sq) {
        pts.push_back(cc.vertex_ray(v));
        std::vector<std::int32_t> one{(std::int32_t)v};
        seeds.push_back(cc.face_id(one));
      }
      Subcomplex hull = simplicial_convex_hull(cc, seeds);
      Vec center = equal_norm_center(pts);
      int cf = cc.face_spanned_by(center);
      ok = hull.contains_face(cf) && cc.face_dim(cf) == 1 &&
           cc.face_types(cf) == std::vector<int>{2, 6} &&
           equidistant_from_all(cc, cf, pts);
      if (ok) {
        auto evs = cc.face_vertices(cf);
        ok = equal_norm_center({cc.vertex_ray(evs[0]),
                                cc.vertex_ray(evs[1])}) == center;
      }
    }
    sink.check_bool("e6.square.26edge",
                    "the center of a square with 141-sides is the midpoint "
                    "of a 26-edge perpendicular to it, inside the simplicial "
                    "hull",
                    ok);
  }

  // links
  {
    LinkComplex l1 = link_of_fundamental(cc, {1});
    sink.check("e6.link.1", "the link of a 1-vertex has type A5",
               coxeter_graph(l1.complex->rs()).type_string(), "A5");
    LinkComplex l2 = link_of_fundamental(cc, {2});
    sink.check("e6.link.2", "the link of a 2-vertex has type D5",
               coxeter_graph(l2.complex->rs()).type_string(), "D5");
    LinkComplex l6 = link_of_fundamental(cc, {6});
    sink.check("e6.link.6", "the link of a 6-vertex has type D5",
               coxeter_graph(l6.complex->rs()).type_string(), "D5");
    LinkComplex l26 = link_of_fundamental(cc, {2, 6});
    sink.check("e6.link.26", "the link of a 26-edge has type D4",
               coxeter_graph(l26.complex->rs()).type_string(), "D4");
    LinkComplex l35 = link_of_fundamental(cc, {3, 5});
    sink.check("e6.link.35", "the link of a 35-edge has type A2 * A1 * A1",
               coxeter_graph(l35.complex->rs()).type_string(), "A2xA1xA1");

    // Sigma_1: non-antipodal distinct 4-vertices sit at arccos(+-1/3)
    sink.check("e6.link1.dist44",
               "in the 1-vertex link, distinct non-antipodal 4-vertices have "
               "distance arccos(+-1/3)",
               angles_to_string(distance_set(*l1.complex, 4, 4)),
               "{0, arccos(sqrt(1/9)), arccos(-sqrt(1/9)), pi}");

    // Sigma_6: the pi-segments between antipodal 2-vertices
    {
      const ComplexLattice& lk = *l6.complex;
      VertexInventory inv = VertexInventory::view_of(lk);
      int u2 = lk.vertex_id(lk.rs().fundamental_vertex(2));
      int a2 = lk.antipode_of(u2);
      std::set<std::string> types;
      for (const SingularCircle& sc :
           singular_circles_through_vertex(lk.rs(), inv, u2)) {
        bool has_antipode = false;
        for (int v : sc.cycle_vertices)
          if (v == a2) has_antipode = true;
        if (!has_antipode) continue;
        for (const std::string& arc : sc.arcs_between(u2, a2))
          types.insert(reversal_normal(arc));
      }
      std::string got;
      for (const std::string& t : types) got += (got.empty() ? "" : " ") + t;
      sink.check("e6.sigma6.pisegments",
                 "singular pi-segments joining antipodal 2-vertices in the "
                 "6-vertex link have types 23232, 24342, 2512",
                 got, "23232 24342 2512");
    }

    // Sigma_2 geometry
    {
      const ComplexLattice& lk = *l2.complex;
      // distinct 6-vertices are at pi/2 or pi; midpoint at pi/2 is a
      // 5-vertex and the segment has type 656
      std::vector<int> sixes = vertices_of_type(lk, 6);
      bool dist_ok = true;
      std::set<std::string> segs;
      for (std::size_t i = 0; i < sixes.size(); ++i)
        for (std::size_t j = i + 1; j < sixes.size(); ++j) {
          ExactAngle d =
              angle(lk.vertex_ray(sixes[i]), lk.vertex_ray(sixes[j]));
          if (d.is_straight()) continue;
          if (!d.is_right()) {
            dist_ok = false;
            continue;
          }
          segs.insert(
              seg_string(lk, lk.vertex_ray(sixes[i]), lk.vertex_ray(sixes[j])));
        }
      sink.check_bool("e6.sigma2.66",
                      "distinct 6-vertices in the 2-vertex link are at pi/2 "
                      "or pi; at pi/2 the segment is 656",
                      dist_ok && segs == std::set<std::string>{"656"});

      // right-angled equilateral triple: B3 singular 2-sphere of 48
      // 654-triangles, centered at a 4-vertex with radius arccos(1/sqrt 3)
      std::vector<int> triple =
          find_equilateral(lk, 6, 3, ExactAngle::right());
      bool ok = triple.size() == 3;
      std::string detail;
      if (ok) {
        std::vector<Vec> pts;
        for (int v : triple) pts.push_back(lk.vertex_ray(v));
        // the singular 2-sphere through the triple
        std::vector<Vec> perp;
        for (const Vec& r : lk.rs().roots) {
          bool all = true;
          for (const Vec& p : pts)
            if (!dot(r, p).is_zero()) all = false;
          if (all) perp.push_back(r);
        }
        std::vector<Vec> cut = perp;
        for (const Vec& c : lk.rs().constraints) cut.push_back(c);
        std::vector<Vec> amb;
        for (int i = 0; i < lk.rs().ambient; ++i)
          amb.push_back(Vec::unit(lk.rs().ambient, i));
        std::vector<Vec> sphere = orthogonal_complement(cut, amb);
        ok = sphere.size() == 3;
        int tri_count = 0;
        bool types_ok = true;
        if (ok) {
          for (int f = 0; f < lk.num_faces(); ++f) {
            if (lk.face_dim(f) != 2) continue;
            bool inside = true;
            for (std::int32_t v : lk.face_vertices(f)) {
              std::vector<Rat> sol;
              if (!solve_linear(sphere, lk.vertex_ray(v), sol)) inside = false;
              if (!inside) break;
            }
            if (!inside) continue;
            ++tri_count;
            if (lk.face_types(f) != std::vector<int>{4, 5, 6}) types_ok = false;
          }
        }
        Vec center = equal_norm_center(pts);
        int cf = lk.face_spanned_by(center);
        bool center_ok = lk.face_dim(cf) == 0 &&
                         lk.vertex_label(lk.face_vertices(cf)[0]) == 4;
        ExactAngle rad = angle(center, pts[0]);
        bool rad_ok = rad == ExactAngle(1, Rat(1, 3));
        std::ostringstream os;
        os << "tri=" << tri_count << (types_ok ? " 654" : " badtypes")
           << (center_ok ? " center4" : " centerbad")
           << (rad_ok ? " rad=arccos(1/sqrt3)" : (" rad=" + angle_name(rad)));
        detail = os.str();
        ok = ok && tri_count == 48 && types_ok && center_ok && rad_ok;
      }
      sink.check("e6.sigma2.b3sphere",
                 "a pairwise-pi/2 triple of 6-vertices in the 2-vertex link "
                 "spans a B3 singular 2-sphere of 48 654-triangles centered "
                 "at a 4-vertex",
                 ok ? detail : (detail.empty() ? "no triple" : detail),
                 "tri=48 654 center4 rad=arccos(1/sqrt3)");

      // pairwise-pi/2 quadruple: the tetrahedron is not a simplicial
      // subcomplex (its center spans a 13-edge of which it is the
      // midpoint), and the geodesic 3-sphere containing it hulls to the
      // entire link complex
      std::vector<int> quad = find_equilateral(lk, 6, 4, ExactAngle::right());
      ok = quad.size() == 4;
      if (ok) {
        std::vector<Vec> pts;
        for (int v : quad) pts.push_back(lk.vertex_ray(v));
        Vec center = equal_norm_center(pts);
        int cf = lk.face_spanned_by(center);
        ok = lk.face_dim(cf) == 1 &&
             lk.face_types(cf) == std::vector<int>{1, 3};
        if (ok) {
          auto evs = lk.face_vertices(cf);
          ok = equal_norm_center({lk.vertex_ray(evs[0]),
                                  lk.vertex_ray(evs[1])}) == center;
        }
        if (ok) {
          // the geodesic 3-sphere spanned by the quadruple: seed with the
          // faces it meets and close
          std::vector<Vec> span(pts.begin(), pts.end());
          std::vector<int> all;
          for (int f = 0; f < lk.num_faces(); ++f) all.push_back(f);
          std::vector<int> sphere_seed;
          for (int f : all) {
            std::vector<Vec> rays;
            for (std::int32_t v : lk.face_vertices(f))
              rays.push_back(lk.vertex_ray(v));
            if (relint_meets_subspace(rays, span)) sphere_seed.push_back(f);
          }
          Subcomplex hull = simplicial_convex_hull(lk, sphere_seed);
          ok = (int)hull.faces.size() == lk.num_faces();
        }
      }
      sink.check_bool("e6.sigma2.tetrahedron",
                      "the pairwise-pi/2 tetrahedron of 6-vertices centers "
                      "on the midpoint of a 13-edge; the geodesic 3-sphere "
                      "containing it hulls to the whole link complex",
                      ok);
    }

    // Sigma_26 geometry (D4)
    {
      const ComplexLattice& lk = *l26.complex;
      // neighbors of a 4-vertex sit at pi/4
      int f4v = lk.vertex_id(lk.rs().fundamental_vertex(4));
      bool adj_ok = true;
      for (int f = 0; f < lk.num_faces(); ++f) {
        if (lk.face_dim(f) != 1) continue;
        auto vs = lk.face_vertices(f);
        if (vs[0] != f4v && vs[1] != f4v) continue;
        if (angle(lk.vertex_ray(vs[0]), lk.vertex_ray(vs[1])) !=
            ExactAngle(1, Rat(1, 2)))
          adj_ok = false;
      }
      sink.check_bool("e6.sigma26.pi4",
                      "every vertex adjacent to a 4-vertex in the 26-edge "
                      "link is at distance pi/4",
                      adj_ok);

      // same-type pairs (i != 4): distances pi/2 or pi; i4i at pi/2
      bool i4i_ok = true;
      for (int i : {1, 3, 5}) {
        std::vector<int> vs = vertices_of_type(lk, i);
        for (std::size_t a = 0; a < vs.size(); ++a)
          for (std::size_t b = a + 1; b < vs.size(); ++b) {
            ExactAngle d = angle(lk.vertex_ray(vs[a]), lk.vertex_ray(vs[b]));
            if (d.is_straight()) continue;
            if (!d.is_right()) {
              i4i_ok = false;
              continue;
            }
            std::string expect = std::to_string(i) + "4" + std::to_string(i);
            if (seg_string(lk, lk.vertex_ray(vs[a]), lk.vertex_ray(vs[b])) !=
                expect)
              i4i_ok = false;
          }
      }
      sink.check_bool("e6.sigma26.i4i",
                      "same-type vertices (type != 4) in the 26-edge link "
                      "are at pi/2 or pi, joined through a 4-vertex",
                      i4i_ok);

      // non-adjacent different types != 4: segment through the third
      // type, on a 135135 circle
      {
        VertexInventory inv = VertexInventory::view_of(lk);
        bool circ_ok = true;
        int checked = 0;
        std::vector<int> ones = vertices_of_type(lk, 1);
        std::vector<int> threes = vertices_of_type(lk, 3);
        for (int a : ones)
          for (int b : threes) {
            std::vector<std::int32_t> pairids{(std::int32_t)std::min(a, b),
                                              (std::int32_t)std::max(a, b)};
            if (lk.face_id(pairids) >= 0) continue; // adjacent
            std::string s =
                seg_string(lk, lk.vertex_ray(a), lk.vertex_ray(b));
            if (s != "153") circ_ok = false;
            auto sc = singular_circle_through(lk.rs(), inv, lk.vertex_ray(a),
                                              lk.vertex_ray(b));
            if (!sc || sc->cycle_types.size() != 6)
              circ_ok = false;
            else {
              std::string cyc = sc->cycle_types + sc->cycle_types;
              if (cyc.find("135135") == std::string::npos &&
                  cyc.find("153153") == std::string::npos)
                circ_ok = false;
            }
            ++checked;
          }
        sink.check_bool("e6.sigma26.1351351",
                        "non-adjacent 1- and 3-vertices in the 26-edge link "
                        "join through a 5-vertex and lie on a 1351351 "
                        "singular circle",
                        circ_ok && checked > 0);
      }

      // triple of 3-vertices pairwise pi/2: center is the midpoint of a
      // 15-edge; the geodesic 2-sphere containing the triple hulls to the
      // whole complex
      {
        std::vector<int> triple =
            find_equilateral(lk, 3, 3, ExactAngle::right());
        bool ok = triple.size() == 3;
        if (ok) {
          std::vector<Vec> pts;
          for (int v : triple) pts.push_back(lk.vertex_ray(v));
          Vec center = equal_norm_center(pts);
          int cf = lk.face_spanned_by(center);
          ok = lk.face_dim(cf) == 1 &&
               lk.face_types(cf) == std::vector<int>{1, 5};
          if (ok) {
            auto evs = lk.face_vertices(cf);
            ok = equal_norm_center({lk.vertex_ray(evs[0]),
                                    lk.vertex_ray(evs[1])}) == center;
          }
          if (ok) {
            std::vector<Vec> span(pts.begin(), pts.end());
            std::vector<int> sphere_seed;
            for (int f = 0; f < lk.num_faces(); ++f) {
              std::vector<Vec> rays;
              for (std::int32_t v : lk.face_vertices(f))
                rays.push_back(lk.vertex_ray(v));
              if (relint_meets_subspace(rays, span)) sphere_seed.push_back(f);
            }
            Subcomplex hull = simplicial_convex_hull(lk, sphere_seed);
            ok = (int)hull.faces.size() == lk.num_faces();
          }
        }
        sink.check_bool("e6.sigma26.triplehull",
                        "a pairwise-pi/2 triple of 3-vertices in the 26-edge "
                        "link centers on the midpoint of a 15-edge; the "
                        "geodesic 2-sphere containing it hulls to the whole "
                        "complex",
                        ok);
      }

      // the 1414 circle with edge pi/4
      {
        VertexInventory inv = VertexInventory::view_of(lk);
        int u1 = lk.vertex_id(lk.rs().fundamental_vertex(1));
        bool found = false;
        for (const SingularCircle& sc :
             singular_circles_through_vertex(lk.rs(), inv, u1)) {
          std::string doubled = sc.cycle_types + sc.cycle_types;
          if (sc.cycle_types.size() == 8 &&
              doubled.find("14141414") != std::string::npos)
            found = true;
        }
        sink.check_bool("e6.sigma26.1414",
                        "the 26-edge link contains a singular 1414-circle "
                        "with edge length pi/4",
                        found);
      }
    }

    // Sigma_35 contains a 1414 circle with edge pi/3 (hexagon)
    {
      const ComplexLattice& lk = *l35.complex;
      VertexInventory inv = VertexInventory::view_of(lk);
      int u1 = lk.vertex_id(lk.rs().fundamental_vertex(1));
      bool found = false;
      for (const SingularCircle& sc :
           singular_circles_through_vertex(lk.rs(), inv, u1)) {
        std::string doubled = sc.cycle_types + sc.cycle_types;
        if (sc.cycle_types.size() == 6 &&
            doubled.find("141414") != std::string::npos) {
          bool steps_ok = true;
          int n = (int)sc.cycle_vertices.size();
          for (int i = 0; i < n; ++i) {
            ExactAngle step =
                angle(inv.rays[sc.cycle_vertices[i]],
                      inv.rays[sc.cycle_vertices[(i + 1) % n]]);
            if (step != ExactAngle(1, Rat(1, 4))) steps_ok = false;
          }
          if (steps_ok) found = true;
        }
      }
      sink.check_bool("e6.poles.35edge",
                      "the 35-edge link contains a singular 1414-circle with "
                      "edge length pi/3",
                      found);
    }
  }

  return sink.take();
}

} // namespace chamberworks
