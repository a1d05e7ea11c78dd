#include "chamberworks/circle.hpp"
#include "chamberworks/facts.hpp"
#include "chamberworks/geodesy.hpp"
#include "chamberworks/link.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace chamberworks {

using namespace facts_detail;

namespace {

Vec iv(std::initializer_list<std::int64_t> xs) {
  Vec v((int)xs.size());
  int i = 0;
  for (auto x : xs) v[i++] = Rat(x);
  return v;
}

// normalized cyclic string (rotations and reflection, lexicographic max)
std::string cycle_normal_form(const std::string& s) {
  std::string best;
  std::string r = s;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::string rot = r.substr(i) + r.substr(0, i);
      if (rot > best) best = rot;
    }
    std::reverse(r.begin(), r.end());
  }
  return best;
}

std::string distset_str(const ComplexLattice& cc, int i, int j) {
  return angles_to_string(distance_set(cc, i, j));
}

} // namespace

FactReport run_facts_f4() {
  FactSink sink("F4");
  auto cc = ComplexLattice::build(build_root_system("F4"));
  const RootSystem& rs = cc->rs();

  // root inventory: 48 roots, 24 on 1-vertex rays and 24 on 4-vertex rays
  {
    sink.check("f4.roots.count", "the F4 root system has 48 roots",
               std::to_string(rs.roots.size()), "48");
    int ones = 0, fours = 0;
    bool forms = true;
    for (const Vec& r : rs.roots) {
      int t = cc->vertex_type(r);
      if (t == 1) {
        ++ones;
        // +-e_i or the ray of (1/2)(+-1,...): canonically +-1 entries or a unit
        int nz = 0;
        bool unit_entries = true;
        for (int k = 0; k < 4; ++k) {
          if (!r[k].is_zero()) ++nz;
          if (abs(r[k]) > Rat(1)) unit_entries = false;
        }
        forms = forms && unit_entries && (nz == 1 || nz == 4);
      } else if (t == 4) {
        ++fours;
        int nz = 0;
        bool unit_entries = true;
        for (int k = 0; k < 4; ++k) {
          if (!r[k].is_zero()) ++nz;
          if (abs(r[k]) != Rat(1) && !r[k].is_zero()) unit_entries = false;
        }
        forms = forms && unit_entries && nz == 2;
      } else {
        forms = false;
      }
    }
    sink.check("f4.roots.split",
               "24 roots lie on 1-vertex rays (+-e_i and half-sum vectors), "
               "24 on 4-vertex rays (+-e_i +- e_j)",
               std::to_string(ones) + "/" + std::to_string(fours) +
                   (forms ? " forms-ok" : " forms-bad"),
               "24/24 forms-ok");
  }

  sink.check("f4.weyl.order", "the F4 Weyl group has order 1152",
             std::to_string(cc->weyl().order()), "1152");
  {
    auto d4 = WeylEnumeration::run(build_root_system("D", 4));
    sink.check("f4.index.d4", "the D4 Weyl group has index 6 in W(F4)",
               std::to_string(cc->weyl().order() / d4.order()), "6");
  }

  sink.check("f4.dist.11",
             "mutual distances between 1-vertices are 0, pi/3, pi/2, 2pi/3, pi",
             distset_str(*cc, 1, 1), "{0, pi/3, pi/2, 2pi/3, pi}");
  sink.check("f4.dist.44",
             "mutual distances between 4-vertices are 0, pi/3, pi/2, 2pi/3, pi",
             distset_str(*cc, 4, 4), "{0, pi/3, pi/2, 2pi/3, pi}");

  // segment types from the fundamental 1-vertex, checked over the whole
  // distance class
  {
    const Vec v1 = rs.fundamental_vertex(1);
    std::map<std::string, std::set<std::string>> per_class;
    for (int v : vertices_of_type(*cc, 1)) {
      const Vec& u = cc->vertex_ray(v);
      ExactAngle d = angle(v1, u);
      if (d.is_zero() || d.is_straight()) continue;
      per_class[angle_name(d)].insert(seg_string(*cc, v1, u));
    }
    auto one = [&](const std::string& cls) {
      auto& s = per_class[cls];
      return s.size() == 1 ? *s.begin() : "(mixed)";
    };
    sink.check("f4.seg.121", "1-vertices at pi/3 join by a type 121 segment",
               one("pi/3"), "121");
    sink.check("f4.seg.141", "1-vertices at pi/2 join by a type 141 segment",
               one("pi/2"), "141");
    sink.check("f4.seg.12121",
               "1-vertices at 2pi/3 join by a type 12121 segment",
               one("2pi/3"), "12121");
  }

  // links by diagram deletion, cross-checked geometrically inside
  // link_of_fundamental
  {
    LinkComplex l1 = link_of_fundamental(*cc, {1});
    CoxeterGraph g1 = coxeter_graph(l1.complex->rs());
    CoxeterGraph expect1{{2, 3, 4}, {{2, 3, 4}, {3, 4, 3}}};
    sink.check_bool("f4.link.1",
                    "the link of a 1-vertex is a B3 complex labelled 2-3-4",
                    g1 == expect1 && g1.type_string() == "B3",
                    g1.type_string());

    LinkComplex l2 = link_of_fundamental(*cc, {2});
    CoxeterGraph g2 = coxeter_graph(l2.complex->rs());
    sink.check("f4.link.2", "the link of a 2-vertex has type A1 * A2",
               g2.type_string(), "A2xA1");

    // inside Sigma_1: 2-vertex pairs under pi/2 give 232, over pi/2 give 242
    const ComplexLattice& lk = *l1.complex;
    const Vec u2 = lk.rs().fundamental_vertex(2);
    std::set<std::string> under, over;
    for (int v : vertices_of_type(lk, 2)) {
      const Vec& u = lk.vertex_ray(v);
      ExactAngle d = angle(u2, u);
      if (d.is_zero() || d.is_straight()) continue;
      if (d < ExactAngle::right())
        under.insert(seg_string(lk, u2, u));
      else if (ExactAngle::right() < d)
        over.insert(seg_string(lk, u2, u));
    }
    sink.check_bool(
        "f4.sigma1.232",
        "in the 1-vertex link, 2-vertices closer than pi/2 join by 232",
        under == std::set<std::string>{"232"});
    sink.check_bool(
        "f4.sigma1.242",
        "in the 1-vertex link, non-antipodal 2-vertices beyond pi/2 join by 242",
        over == std::set<std::string>{"242"});
  }

  sink.check("f4.involution", "the canonical involution of F4 is trivial",
             involution_string(rs), "1->1 2->2 3->3 4->4");
  {
    Vec folded = fold_to_chamber(rs, -iv({0, 0, 0, -1})).x0;
    sink.check("f4.fold.antipode1",
               "the antipode of a 1-vertex is again a 1-vertex",
               std::to_string(cc->vertex_type(folded)), "1");
  }

  sink.check("f4.vertex.e1", "e1 is a 1-vertex",
             std::to_string(cc->vertex_type(iv({1, 0, 0, 0}))), "1");
  sink.check("f4.vertex.e1e2", "e1 + e2 is a 4-vertex",
             std::to_string(cc->vertex_type(iv({1, 1, 0, 0}))), "4");

  check_pair_transitivity(sink, *cc, "f4", 1);
  check_pair_transitivity(sink, *cc, "f4", 4);

  // every chamber carries one vertex of each type
  {
    bool full = true;
    for (int c = cc->first_chamber(); c < cc->num_faces(); ++c)
      if (cc->face_types(c) != std::vector<int>{1, 2, 3, 4}) full = false;
    sink.check_bool("f4.chambers.full_type",
                    "every chamber has one vertex of each type", full);
  }

  // the singular 1-sphere inventory is computed and published
  {
    VertexInventory inv = VertexInventory::view_of(*cc);
    std::set<std::string> all;
    for (int label : {1, 2, 3, 4}) {
      int v = cc->vertex_id(rs.fundamental_vertex(label));
      for (const SingularCircle& sc :
           singular_circles_through_vertex(rs, inv, v))
        all.insert(cycle_normal_form(sc.cycle_types));
    }
    std::string s;
    for (const std::string& t : all) s += (s.empty() ? "" : " ") + t;
    sink.publish("f4.circles",
                 "types of singular 1-spheres occurring in the F4 complex", s);
  }

  // poles of a 2-vertex realize the A1 * A2 link split: an antipodal
  // 1-vertex pair orthogonal to a singular circle carrying a dihedral
  // induced Weyl group of order 6
  {
    int f2 = cc->fundamental_face({2});
    std::vector<int> pf = poles(*cc, f2);
    std::vector<int> pole_vertices;
    for (int f : pf)
      if (cc->face_dim(f) == 0) pole_vertices.push_back(cc->face_vertices(f)[0]);
    std::vector<int> ones;
    for (int v : pole_vertices)
      if (cc->vertex_label(v) == 1) ones.push_back(v);
    bool split_ok = ones.size() == 2 && cc->antipode_of(ones[0]) == ones[1];
    // the A2 factor: pole vertices orthogonal to the S^0 pair
    std::vector<Vec> circle_rays;
    if (split_ok)
      for (int v : pole_vertices) {
        if (v == ones[0] || v == ones[1]) continue;
        if (dot(cc->vertex_ray(ones[0]), cc->vertex_ray(v)).is_zero())
          circle_rays.push_back(cc->vertex_ray(v));
      }
    split_ok = split_ok && circle_rays.size() >= 2 && rank_of(circle_rays) == 2;
    std::string detail = "split-bad";
    if (split_ok) {
      // the root subsystem perpendicular to the 2-vertex and the S^0 pair
      // is the A2 factor; its walls cut the equator circle
      std::vector<Vec> fixed{rs.fundamental_vertex(2), cc->vertex_ray(ones[0])};
      std::vector<Vec> sub;
      for (const Vec& r : rs.roots)
        if (dot(r, fixed[0]).is_zero() && dot(r, fixed[1]).is_zero())
          sub.push_back(r);
      VertexInventory inv = VertexInventory::view_of(*cc);
      auto sc = singular_circle_through(rs, inv, circle_rays[0], circle_rays[1]);
      if (sc) {
        std::ostringstream os;
        os << "v1pair A2roots=" << sub.size() << " circle="
           << sc->cycle_types.size() << "gon";
        detail = os.str();
      } else {
        detail = "circle-not-singular";
      }
    }
    sink.check("f4.poles.2vertex",
               "the pole set of a 2-vertex splits as the A1 * A2 link: an "
               "antipodal 1-vertex pair orthogonal to a singular circle cut "
               "by the perpendicular A2 subsystem",
               detail, "v1pair A2roots=6 circle=12gon");
  }

  return sink.take();
}

} // namespace chamberworks
