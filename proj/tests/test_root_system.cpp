#include "chamberworks/root_system.hpp"
#include "chamberworks/weyl.hpp"

#include "doctest.h"

#include <set>

using namespace chamberworks;

namespace {

Vec iv(std::initializer_list<std::int64_t> xs) {
  Vec v((int)xs.size());
  int i = 0;
  for (auto x : xs) v[i++] = Rat(x);
  return v;
}

} // namespace

TEST_CASE("root counts per family") {
  CHECK(build_root_system("A", 2).roots.size() == 6);
  CHECK(build_root_system("A", 4).roots.size() == 20);
  CHECK(build_root_system("B", 3).roots.size() == 18);
  CHECK(build_root_system("D", 4).roots.size() == 24);
  CHECK(build_root_system("F4").roots.size() == 48);
  CHECK(build_root_system("E6").roots.size() == 72);
  CHECK(build_root_system("E7").roots.size() == 126);
  CHECK(build_root_system("E8").roots.size() == 240);
}

TEST_CASE("illegal ranks are refused") {
  CHECK_THROWS(build_root_system("A", 0));
  CHECK_THROWS(build_root_system("B", 1));
  CHECK_THROWS(build_root_system("D", 3));
  CHECK_THROWS(build_root_system("Q", 3));
}

TEST_CASE("root systems are closed under negation and reflections") {
  for (auto& [fam, rank] : std::vector<std::pair<std::string, int>>{
           {"A", 3}, {"B", 3}, {"D", 4}, {"F4", 0}, {"E6", 0}}) {
    RootSystem rs = build_root_system(fam, rank);
    for (const Vec& r : rs.roots) CHECK(rs.root_id(-r) >= 0);
    for (const Vec& r : rs.roots) {
      Mat m = Mat::reflection(r);
      for (const Vec& s : rs.roots) CHECK(rs.root_id(m.apply(s)) >= 0);
    }
  }
}

TEST_CASE("F4 simple roots and fundamental vertices match the tables") {
  RootSystem rs = build_root_system("F4");
  CHECK(rs.simples[0] == Vec{Rat(-1, 2), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2)});
  CHECK(rs.simples[1] == iv({1, 0, 0, 0}));
  CHECK(rs.simples[2] == iv({-1, 1, 0, 0}));
  CHECK(rs.simples[3] == iv({0, -1, 1, 0}));
  CHECK(rs.fundamental_vertex(1) == iv({0, 0, 0, -1}));
  CHECK(rs.fundamental_vertex(2) == iv({1, 1, 1, -3}));
  CHECK(rs.fundamental_vertex(3) == iv({0, 1, 1, -2}));
  CHECK(rs.fundamental_vertex(4) == iv({0, 0, 1, -1}));

  // every fundamental vertex satisfies the chamber inequalities
  // x1+...+x4 <= 0 ; 0 <= x1 <= x2 <= x3
  for (int label = 1; label <= 4; ++label) {
    const Vec& v = rs.fundamental_vertex(label);
    CHECK((v[0] + v[1] + v[2] + v[3]).sign() <= 0);
    CHECK(v[0].sign() >= 0);
    CHECK(v[0] <= v[1]);
    CHECK(v[1] <= v[2]);
  }
}

TEST_CASE("E6 model: roots perpendicular to the two defining vectors") {
  RootSystem rs = build_root_system("E6");
  CHECK(rs.ambient == 8);
  Vec r = iv({0, 0, 0, 0, 0, 0, -1, 1});  // e8 - e7
  Vec rp = iv({0, 0, 0, 0, 0, -1, 1, 0}); // e7 - e6
  for (const Vec& root : rs.roots) {
    CHECK(dot(root, r).is_zero());
    CHECK(dot(root, rp).is_zero());
  }
  // fundamental vertices from the table, inside {x6 = x7 = x8}
  CHECK(rs.fundamental_vertex(1) == iv({1, 1, 1, 1, 1, -1, -1, -1}));
  CHECK(rs.fundamental_vertex(2) == iv({-3, 3, 3, 3, 3, -1, -1, -1}));
  CHECK(rs.fundamental_vertex(5) == iv({3, 3, 3, 3, 9, -1, -1, -1}));
  CHECK(rs.fundamental_vertex(6) == iv({3, 3, 3, 3, 3, 1, 1, 1}));
  // chamber inequalities: x4+...+x8 <= x1+x2+x3, x1 <= ... <= x5,
  // x5 <= x1+x2+x3+x4+x6+x7+x8
  for (int label = 1; label <= 6; ++label) {
    const Vec& v = rs.fundamental_vertex(label);
    CHECK((v[3] + v[4] + v[5] + v[6] + v[7] - v[0] - v[1] - v[2]).sign() <= 0);
    for (int i = 0; i < 4; ++i) CHECK(v[i] <= v[i + 1]);
    CHECK(v[4] <= v[0] + v[1] + v[2] + v[3] + v[5] + v[6] + v[7]);
  }
}

TEST_CASE("Coxeter graphs and classification") {
  CHECK(coxeter_graph(build_root_system("A", 5)).type_string() == "A5");
  CHECK(coxeter_graph(build_root_system("B", 2)).type_string() == "B2");
  CHECK(coxeter_graph(build_root_system("B", 6)).type_string() == "B6");
  CHECK(coxeter_graph(build_root_system("D", 6)).type_string() == "D6");
  CHECK(coxeter_graph(build_root_system("F4")).type_string() == "F4");
  CHECK(coxeter_graph(build_root_system("E6")).type_string() == "E6");
  CHECK(coxeter_graph(build_root_system("E7")).type_string() == "E7");
  CHECK(coxeter_graph(build_root_system("E8")).type_string() == "E8");

  CoxeterGraph g = coxeter_graph(build_root_system("E6"));
  CHECK(g.without({1}).type_string() == "A5");
  CHECK(g.without({2}).type_string() == "D5");
  CHECK(g.without({2, 6}).type_string() == "D4");
  CHECK(g.without({3, 5}).type_string() == "A2xA1xA1");
}

TEST_CASE("custom join system A1 x A1") {
  RootSystem rs = build_custom_system(
      {Vec::unit(2, 0), Vec::unit(2, 1)}, {1, 2}, {});
  CHECK(rs.roots.size() == 4);
  CHECK(coxeter_graph(rs).type_string() == "A1xA1");
  auto we = WeylEnumeration::run(rs);
  CHECK(we.order() == 4);
}
