#include "chamberworks/json_io.hpp"
#include "chamberworks/link.hpp"

#include "doctest.h"

using namespace chamberworks;

TEST_CASE("link graphs equal diagram deletion for every fundamental face") {
  // link_of_fundamental itself cross-checks the geometric subsystem
  // against diagram deletion and throws on any disagreement; exercising
  // every fundamental face of every built type is the full invariant
  for (auto& [fam, rank] : std::vector<std::pair<std::string, int>>{
           {"A", 3}, {"B", 3}, {"B", 4}, {"D", 4}, {"D", 5}, {"F4", 0}}) {
    auto cc = build_named_complex(fam, rank);
    int n = cc->rs().rank;
    for (int mask = 1; mask < (1 << n) - 1; ++mask) {
      std::vector<int> labels;
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) labels.push_back(cc->rs().labels[i]);
      LinkComplex lk = link_of_fundamental(*cc, labels);
      CHECK(coxeter_graph(lk.complex->rs()) == cc->graph().without(labels));
    }
  }
}

TEST_CASE("named link types") {
  auto f4 = build_named_complex("F4", 0);
  CHECK(coxeter_graph(link_of_fundamental(*f4, {1}).complex->rs())
            .type_string() == "B3");
  CHECK(coxeter_graph(link_of_fundamental(*f4, {2}).complex->rs())
            .type_string() == "A2xA1");
  auto e6 = build_named_complex("E6", 0);
  CHECK(coxeter_graph(link_of_fundamental(*e6, {1}).complex->rs())
            .type_string() == "A5");
  CHECK(coxeter_graph(link_of_fundamental(*e6, {2}).complex->rs())
            .type_string() == "D5");
  CHECK(coxeter_graph(link_of_fundamental(*e6, {2, 6}).complex->rs())
            .type_string() == "D4");
}

TEST_CASE("link of an arbitrary face folds to the fundamental cotype") {
  auto f4 = build_named_complex("F4", 0);
  // pick a non-fundamental 1-vertex
  int fund = f4->vertex_id(f4->rs().fundamental_vertex(1));
  int other = -1;
  for (int v = 0; v < f4->num_vertices(); ++v)
    if (f4->vertex_label(v) == 1 && v != fund) {
      other = v;
      break;
    }
  std::vector<std::int32_t> face{(std::int32_t)other};
  LinkComplex lk = link_of_face(*f4, f4->face_id(face));
  CHECK(coxeter_graph(lk.complex->rs()).type_string() == "B3");
}

TEST_CASE("link complex orders multiply to the ambient group order") {
  auto f4 = build_named_complex("F4", 0);
  // |Stab(v)| * |orbit(v)| = |W|: the link's Weyl group is the stabilizer
  LinkComplex l1 = link_of_fundamental(*f4, {1});
  CHECK(l1.complex->weyl().order() * 24 == 1152);
  LinkComplex l2 = link_of_fundamental(*f4, {2});
  CHECK(l2.complex->weyl().order() * 96 == 1152);
}

TEST_CASE("projecting ambient faces into the link") {
  auto f4 = build_named_complex("F4", 0);
  LinkComplex lk = link_of_fundamental(*f4, {1});
  int base = lk.base_face;
  // faces properly containing the base vertex project to link faces of
  // one dimension less
  int checked = 0;
  for (int f = 0; f < f4->num_faces() && checked < 50; ++f) {
    auto vs = f4->face_vertices(f);
    auto bs = f4->face_vertices(base);
    bool contains = std::includes(vs.begin(), vs.end(), bs.begin(), bs.end());
    if (!contains || f == base) continue;
    int lf = project_face_to_link(*f4, lk, f);
    CHECK(lk.complex->face_dim(lf) == f4->face_dim(f) - 1);
    ++checked;
  }
  CHECK(checked == 50);
}
