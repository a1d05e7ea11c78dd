#include "chamberworks/aut.hpp"
#include "chamberworks/circle.hpp"
#include "chamberworks/facts.hpp"
#include "chamberworks/geodesy.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace chamberworks {

using namespace facts_detail;

namespace {

// canonical vertex-ray set of all type-t vertices, as sorted strings
std::set<std::string> vertex_ray_set(const ComplexLattice& cc, int label) {
  std::set<std::string> out;
  for (int v = 0; v < cc.num_vertices(); ++v) {
    if (cc.vertex_label(v) != label) continue;
    std::string s;
    for (int i = 0; i < cc.rs().ambient; ++i)
      s += cc.vertex_ray(v)[i].str() + ",";
    out.insert(s);
  }
  return out;
}

std::string key_of(const Vec& v) {
  std::string s;
  for (int i = 0; i < v.dim(); ++i) s += v[i].str() + ",";
  return s;
}

// all +-e_i (as canonical strings) in dimension n
std::set<std::string> unit_rays(int n) {
  std::set<std::string> out;
  for (int i = 0; i < n; ++i) {
    out.insert(key_of(Vec::unit(n, i)));
    out.insert(key_of(-Vec::unit(n, i)));
  }
  return out;
}

std::set<std::string> pair_rays(int n) {
  std::set<std::string> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          Vec v(n);
          v[i] = Rat(si);
          v[j] = Rat(sj);
          out.insert(key_of(v));
        }
  return out;
}

// vertex permutations induced by the matrices of another Weyl group
// acting on this complex
std::set<std::vector<std::int32_t>> induced_perms(const ComplexLattice& cc,
                                                  const WeylEnumeration& we) {
  std::set<std::vector<std::int32_t>> out;
  for (std::size_t i = 0; i < we.order(); ++i)
    out.insert(cc.vertex_perm_of_matrix(we.matrix_of(i)));
  return out;
}

} // namespace

FactReport run_facts_classical(const std::string& family, int rank) {
  RootSystem rs = build_root_system(family, rank);
  FactSink sink(rs.name());
  auto ccp = ComplexLattice::build(std::move(rs));
  const ComplexLattice& cc = *ccp;
  const RootSystem& R = cc.rs();
  std::string p = R.name();
  for (char& ch : p) ch = (char)std::tolower(ch);

  // group order against the closed formula
  sink.check(p + ".weyl.order", "the Weyl group order matches the closed formula",
             std::to_string(cc.weyl().order()),
             std::to_string(weyl_order_formula(family, rank)));
  sink.check(p + ".chambers", "the chamber count equals the group order",
             std::to_string(cc.num_chambers()),
             std::to_string(cc.weyl().order()));

  // canonical involutions
  if (family == "A") {
    std::string expect;
    for (int i = 1; i <= rank; ++i) {
      if (!expect.empty()) expect += " ";
      expect += std::to_string(i) + "->" + std::to_string(rank + 1 - i);
    }
    sink.check(p + ".involution",
               "the antipode of an i-vertex is an (n+1-i)-vertex",
               involution_string(R), expect);
    sink.check(p + ".roots.count", "A_n has n(n+1) roots",
               std::to_string(R.roots.size()),
               std::to_string(rank * (rank + 1)));
  } else if (family == "B") {
    std::string expect;
    for (int i = 1; i <= rank; ++i) {
      if (!expect.empty()) expect += " ";
      expect += std::to_string(i) + "->" + std::to_string(i);
    }
    sink.check(p + ".involution", "the canonical involution of B_n is trivial",
               involution_string(R), expect);
    sink.check_bool(p + ".roottype",
                    "the root-type vertices are the n- and (n-1)-vertices, "
                    "on the rays +-e_i and +-e_i+-e_j",
                    vertex_ray_set(cc, rank) == unit_rays(rank) &&
                        vertex_ray_set(cc, rank - 1) == pair_rays(rank));
  } else if (family == "D") {
    std::string expect;
    for (int i = 1; i <= rank; ++i) {
      if (!expect.empty()) expect += " ";
      int img = i;
      if (rank % 2 == 1 && i == 1) img = 2;
      if (rank % 2 == 1 && i == 2) img = 1;
      expect += std::to_string(i) + "->" + std::to_string(img);
    }
    sink.check(p + ".involution",
               "the canonical involution is trivial for even n and swaps "
               "1<->2 for odd n",
               involution_string(R), expect);
    sink.check_bool(p + ".roottype",
                    "the root-type vertices are the (n-1)-vertices, on the "
                    "rays +-e_i+-e_j",
                    vertex_ray_set(cc, rank - 1) == pair_rays(rank));

    // the B_n complex subdivides each D_n chamber into two
    {
      auto bn = ComplexLattice::build(build_root_system("B", rank));
      int inside = 0;
      for (int c = bn->first_chamber(); c < bn->num_faces(); ++c) {
        Vec x = bn->face_interior_point(c);
        bool in = true;
        for (const Vec& s : R.simples)
          if (dot(x, s).sign() < 0) in = false;
        if (in) ++inside;
      }
      sink.check(p + ".bn_subdivision",
                 "cutting along the walls perpendicular to +-e_i splits each "
                 "D_n chamber into two B_n chambers",
                 std::to_string(inside), "2");
    }

    if (rank == 5) {
      auto b5 = WeylEnumeration::run(build_root_system("B", 5));
      AutGroup aut = automorphism_group(cc);
      std::set<std::vector<std::int32_t>> got;
      for (const AutElement& e : aut.elements) got.insert(e.vperm);
      sink.check_bool("d5.aut.b5",
                      "the automorphism group of the D5 complex is the W(B5) "
                      "action",
                      got == induced_perms(cc, b5) && aut.order() == 3840);
    }
    if (rank == 4) {
      auto f4 = WeylEnumeration::run(build_root_system("F4"));
      AutGroup aut = automorphism_group(cc);
      std::set<std::vector<std::int32_t>> got;
      for (const AutElement& e : aut.elements) got.insert(e.vperm);
      bool same = got == induced_perms(cc, f4);
      sink.check_bool("d4.aut.f4",
                      "the automorphism group of the D4 complex is the W(F4) "
                      "action, of order 1152",
                      same && aut.order() == 1152);
      // outer classes realize all six symmetries of the branching diagram
      std::set<std::vector<int>> label_perms;
      for (const AutElement& e : aut.elements) label_perms.insert(e.label_perm);
      sink.check("d4.out.s3",
                 "Out of the D4 complex is the symmetric group on the three "
                 "arm labels",
                 std::to_string(label_perms.size()), "6");

      // the D4 fundamental chamber decomposes into exactly six F4 chambers
      auto f4cc = ComplexLattice::build(build_root_system("F4"));
      int inside = 0;
      for (int c = f4cc->first_chamber(); c < f4cc->num_faces(); ++c) {
        Vec x = f4cc->face_interior_point(c);
        bool in = true;
        for (const Vec& s : R.simples)
          if (dot(x, s).sign() < 0) in = false;
        if (in) ++inside;
      }
      sink.check("d4.chamber.subdivision",
                 "the D4 fundamental chamber is a union of exactly six F4 "
                 "chambers",
                 std::to_string(inside), "6");
    }
  }

  return sink.take();
}

FactReport run_facts_e7_remark() {
  FactSink sink("E7");
  RootSystem rs = build_root_system("E7");
  sink.check("e7.roots.count", "the E7 root system has 126 roots",
             std::to_string(rs.roots.size()), "126");

  VertexInventory inv = VertexInventory::from_root_system(rs);
  sink.publish("e7.vertices", "total number of E7 vertices",
               std::to_string(inv.rays.size()));

  // search the singular circles through a fundamental 7-vertex for the
  // cyclic type 1375613756
  const std::string wanted = "1375613756";
  auto matches = [&](const std::string& cyc) {
    if (cyc.size() != wanted.size()) return false;
    std::string dd = cyc + cyc;
    std::string rev = cyc;
    std::reverse(rev.begin(), rev.end());
    std::string rr = rev + rev;
    return dd.find(wanted) != std::string::npos ||
           rr.find(wanted) != std::string::npos;
  };

  int v7 = inv.id_of(rs.fundamental_vertex(7));
  std::optional<SingularCircle> found;
  for (std::size_t u = 0; u < inv.rays.size() && !found; ++u) {
    if (inv.types[u] != 1) continue;
    auto sc = singular_circle_through(rs, inv, inv.rays[v7], inv.rays[u]);
    if (sc && matches(sc->cycle_types)) found = std::move(sc);
  }
  sink.check_bool("e7.remark.circle",
                  "a singular circle of cyclic type 1375613756 exists",
                  found.has_value(),
                  found ? found->cycle_types : "not found");
  if (found) {
    InducedCircleGroup g = induced_weyl_on_circle(rs, *found);
    sink.check("e7.remark.trivial",
               "the induced Weyl group of the circle is trivial",
               std::to_string(g.induced_weyl_order), "1");
    sink.check_bool("e7.remark.antipodal",
                    "an element of the plane stabilizer induces the "
                    "antipodal involution of the circle",
                    g.contains_antipodal);
    sink.publish("e7.remark.orbit",
                 "orbit size of the circle's plane under W(E7)",
                 std::to_string(g.plane_orbit_size));
  }
  return sink.take();
}

} // namespace chamberworks
