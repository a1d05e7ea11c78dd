#include "chamberworks/link.hpp"

#include <algorithm>
#include <stdexcept>

namespace chamberworks {

LinkComplex link_of_fundamental(const ComplexLattice& cc,
                                const std::vector<int>& labels) {
  const RootSystem& rs = cc.rs();
  if ((int)labels.size() >= rs.rank)
    throw std::invalid_argument("link of a chamber is empty");

  std::vector<Vec> base_rays;
  for (int l : labels) base_rays.push_back(rs.fundamental_vertex(l));

  // (a) geometric route: the root subsystem perpendicular to the face
  std::vector<Vec> sub_roots;
  for (const Vec& r : rs.roots) {
    bool perp = true;
    for (const Vec& v : base_rays)
      if (!dot(r, v).is_zero()) {
        perp = false;
        break;
      }
    if (perp) sub_roots.push_back(r);
  }

  // link fundamental vertices: normal components of the surviving
  // fundamental vertices
  std::vector<int> kept_labels;
  std::vector<Vec> link_fund;
  for (int i = 0; i < rs.rank; ++i) {
    if (std::find(labels.begin(), labels.end(), rs.labels[i]) != labels.end())
      continue;
    kept_labels.push_back(rs.labels[i]);
    Vec u = project_out(rs.fundamental_vertices[i], base_rays);
    if (u.is_zero())
      throw std::logic_error("fundamental vertex projects to zero");
    link_fund.push_back(canonical_ray(u));
  }

  // simple roots of the subsystem: positive side of an interior point of
  // the link chamber, supporting a facet of cone(link_fund)
  Vec interior(rs.ambient);
  for (const Vec& u : link_fund) interior = interior + u;
  int k = (int)link_fund.size();
  std::vector<Vec> simples;
  std::vector<int> simple_labels;
  for (const Vec& r : sub_roots) {
    Rat p = dot(r, interior);
    if (p.sign() <= 0) continue; // keep positive roots only
    std::vector<Vec> on_wall;
    int positive_at = -1;
    bool facet = true;
    for (int j = 0; j < k; ++j) {
      Rat d = dot(r, link_fund[j]);
      if (d.is_zero())
        on_wall.push_back(link_fund[j]);
      else if (d.sign() > 0)
        positive_at = positive_at < 0 ? j : -2;
      else
        facet = false;
    }
    if (!facet || positive_at < 0) continue;
    if (positive_at == -2) continue; // positive on more than one dual ray
    if (rank_of(on_wall) != k - 1) continue;
    simples.push_back(r);
    simple_labels.push_back(kept_labels[positive_at]);
  }
  if ((int)simples.size() != k)
    throw std::logic_error("link subsystem has wrong number of facets");

  // order by label for a stable presentation
  std::vector<int> order(k);
  for (int i = 0; i < k; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return simple_labels[a] < simple_labels[b];
  });
  std::vector<Vec> simples_sorted, fund_sorted;
  std::vector<int> labels_sorted;
  for (int i : order) {
    simples_sorted.push_back(simples[i]);
    labels_sorted.push_back(simple_labels[i]);
    int fi = (int)(std::find(kept_labels.begin(), kept_labels.end(),
                             simple_labels[i]) -
                   kept_labels.begin());
    fund_sorted.push_back(link_fund[fi]);
  }

  std::vector<Vec> constraints = rs.constraints;
  for (const Vec& v : base_rays) constraints.push_back(canonical_ray(v));

  RootSystem sub = build_custom_system(simples_sorted, labels_sorted,
                                       constraints, fund_sorted);

  // route (a) closure must reproduce the perpendicular subsystem
  if (sub.roots.size() != sub_roots.size())
    throw std::logic_error("link root closure disagrees with the "
                           "perpendicular subsystem");
  for (const Vec& r : sub_roots)
    if (sub.root_id(r) < 0)
      throw std::logic_error("perpendicular root missing from link closure");

  // route (b): diagram deletion must give the same Coxeter graph
  CoxeterGraph expected = cc.graph().without(labels);
  CoxeterGraph got = coxeter_graph(sub);
  if (!(expected == got))
    throw std::logic_error("link graph disagrees with diagram deletion");

  LinkComplex lk;
  lk.complex = ComplexLattice::build(std::move(sub));
  lk.base_face = cc.fundamental_face(labels);
  lk.deleted_labels = labels;
  std::sort(lk.deleted_labels.begin(), lk.deleted_labels.end());
  return lk;
}

LinkComplex link_of_face(const ComplexLattice& cc, int face) {
  if (cc.face_dim(face) == cc.dim())
    throw std::invalid_argument("link of a chamber is empty");
  std::vector<int> labels = cc.face_types(face);
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if ((int)labels.size() != (int)cc.face_vertices(face).size())
    throw std::logic_error("face has repeated vertex types");
  return link_of_fundamental(cc, labels);
}

int link_vertex_of_ambient(const ComplexLattice& cc, const LinkComplex& lk,
                           int ambient_vertex) {
  std::vector<Vec> base_rays;
  for (std::int32_t v : cc.face_vertices(lk.base_face))
    base_rays.push_back(cc.vertex_ray(v));
  Vec u = project_out(cc.vertex_ray(ambient_vertex), base_rays);
  if (u.is_zero()) return -1;
  return lk.complex->vertex_id(u);
}

int project_face_to_link(const ComplexLattice& cc, const LinkComplex& lk,
                         int ambient_face) {
  auto base = cc.face_vertices(lk.base_face);
  auto vs = cc.face_vertices(ambient_face);
  std::vector<std::int32_t> rest;
  for (std::int32_t v : vs)
    if (!std::binary_search(base.begin(), base.end(), v)) rest.push_back(v);
  if (rest.size() + base.size() != vs.size())
    throw std::invalid_argument("face does not contain the base face");
  if (rest.empty())
    throw std::invalid_argument("face equals the base face");
  std::vector<std::int32_t> ids;
  for (std::int32_t v : rest) {
    int lv = link_vertex_of_ambient(cc, lk, v);
    if (lv < 0) throw std::logic_error("ambient vertex has no link image");
    ids.push_back(lv);
  }
  std::sort(ids.begin(), ids.end());
  int f = lk.complex->face_id(ids);
  if (f < 0) throw std::logic_error("projected vertex set is not a link face");
  return f;
}

} // namespace chamberworks
