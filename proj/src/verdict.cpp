#include "chamberworks/verdict.hpp"

#include "chamberworks/geodesy.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace chamberworks {

namespace {

// cached automorphism groups for the materializable complexes
const AutGroup& cached_aut(const ComplexLattice& cc) {
  static std::mutex mu;
  static std::map<std::uint64_t, AutGroup> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(cc.uid());
  if (it == cache.end())
    it = cache.emplace(cc.uid(), automorphism_group(cc)).first;
  return it->second;
}

bool faces_invariant_under_perm(const ComplexLattice& cc, const Subcomplex& k,
                                const std::vector<std::int32_t>& perm) {
  for (int v : k.vertices)
    if (!k.contains_vertex(perm[v])) return false;
  for (int f : k.faces) {
    int im = cc.map_face(perm, f);
    if (im < 0 || !k.contains_face(im)) return false;
  }
  return true;
}

} // namespace

int StabilizerHandle::apply_vertex(std::size_t e, int v) const {
  if (!lazy_) return perms_[e][v];
  auto [widx, outer] = lazy_elems_[e];
  const WeylEnumeration& we = cc_->weyl();
  int im = cc_->vertex_id(we.apply(widx, cc_->vertex_ray(v)));
  if (outer) im = cc_->antipode_of(im);
  return im;
}

bool StabilizerHandle::element_inner(std::size_t e) const {
  if (!lazy_) return inner_[e];
  return !lazy_elems_[e].second;
}

bool StabilizerHandle::face_invariant(const ComplexLattice& cc,
                                      int face) const {
  auto vs = cc.face_vertices(face);
  std::vector<std::int32_t> im(vs.size());
  for (std::size_t e = 0; e < order_; ++e) {
    for (std::size_t i = 0; i < vs.size(); ++i)
      im[i] = apply_vertex(e, vs[i]);
    std::sort(im.begin(), im.end());
    if (!std::equal(im.begin(), im.end(), vs.begin())) return false;
  }
  return true;
}

StabilizerHandle stabilizer(const ComplexLattice& cc, const Subcomplex& k) {
  StabilizerHandle h;
  h.cc_ = &cc;

  if (cc.rs().family == "E6") {
    h.lazy_ = true;
    const WeylEnumeration& we = cc.weyl();
    h.aut_order_ = 2 * we.order();

    // outer prefilter: an outer element swaps the types 2<->6 and 3<->5,
    // so K must have a symmetric type multiset to admit any
    std::map<int, int> type_count;
    for (int v : k.vertices) ++type_count[cc.vertex_label(v)];
    bool outer_possible = type_count[2] == type_count[6] &&
                          type_count[3] == type_count[5];

    std::vector<char> vert_in(cc.num_vertices(), 0);
    for (int v : k.vertices) vert_in[v] = 1;

    int passes = outer_possible ? 2 : 1;
    for (int pass = 0; pass < passes; ++pass) {
      bool outer = pass == 1;
      std::vector<char> keep(we.order(), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 512)
#endif
      for (long long i = 0; i < (long long)we.order(); ++i) {
        bool ok = true;
        // vertex-set invariance first (cheap early exit), then faces
        std::vector<std::int32_t> perm_on_k;
        perm_on_k.reserve(k.vertices.size());
        for (int v : k.vertices) {
          int im = cc.vertex_id(we.apply((std::size_t)i, cc.vertex_ray(v)));
          if (outer) im = cc.antipode_of(im);
          if (!vert_in[im]) {
            ok = false;
            break;
          }
          perm_on_k.push_back(im);
        }
        if (ok) {
          // face invariance via id translation
          std::unordered_map<int, int> vmap;
          for (std::size_t j = 0; j < k.vertices.size(); ++j)
            vmap[k.vertices[j]] = perm_on_k[j];
          for (int f : k.faces) {
            std::vector<std::int32_t> im;
            for (std::int32_t v : cc.face_vertices(f)) im.push_back(vmap[v]);
            std::sort(im.begin(), im.end());
            int fid = cc.face_id(im);
            if (fid < 0 || !k.contains_face(fid)) {
              ok = false;
              break;
            }
          }
        }
        keep[i] = ok ? 1 : 0;
      }
      for (std::size_t i = 0; i < we.order(); ++i)
        if (keep[i]) h.lazy_elems_.push_back({(std::uint32_t)i, outer});
    }
    h.order_ = h.lazy_elems_.size();
    return h;
  }

  const AutGroup& aut = cached_aut(cc);
  h.aut_order_ = aut.order();
  std::vector<char> keep(aut.order(), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
  for (long long i = 0; i < (long long)aut.order(); ++i)
    keep[i] = faces_invariant_under_perm(cc, k, aut.elements[i].vperm) ? 1 : 0;
  for (std::size_t i = 0; i < aut.order(); ++i)
    if (keep[i]) {
      h.perms_.push_back(aut.elements[i].vperm);
      h.inner_.push_back(aut.elements[i].inner ? 1 : 0);
    }
  h.order_ = h.perms_.size();
  return h;
}

std::optional<int> fixed_face_in(const ComplexLattice& cc, const Subcomplex& k,
                                 const StabilizerHandle& g) {
  // faces ids are grouped by dimension ascending, so a plain scan visits
  // vertices first
  for (int f : k.faces)
    if (g.face_invariant(cc, f)) return f;
  return std::nullopt;
}

VerdictResult verdict(const ComplexLattice& cc, const Subcomplex& k,
                      bool assume_convex) {
  if (!assume_convex && !is_convex(cc, k))
    throw std::invalid_argument("verdict requires a convex subcomplex");
  VerdictResult r;
  r.kind = VerdictKind::Subbuilding;
  for (int v : k.vertices)
    if (!k.contains_vertex(cc.antipode_of(v))) r.antipode_failures.push_back(v);
  if (r.antipode_failures.empty()) return r;

  StabilizerHandle g = stabilizer(cc, k);
  r.stabilizer_order = g.order();
  if (auto f = fixed_face_in(cc, k, g)) {
    r.kind = VerdictKind::FixedFace;
    r.fixed_face = *f;
    return r;
  }
  r.kind = VerdictKind::Counterexample;
  return r;
}

RadiusCheck invariant_set_radius_check(const ComplexLattice& cc,
                                       const std::vector<int>& vertices) {
  if (vertices.empty())
    throw std::invalid_argument("radius check: empty vertex set");
  ExactAngle half_pi = ExactAngle::right();
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (half_pi < angle(cc.vertex_ray(vertices[i]), cc.vertex_ray(vertices[j])))
        throw std::invalid_argument("radius check: diameter exceeds pi/2");

  std::vector<Vec> pts;
  for (int v : vertices) pts.push_back(cc.vertex_ray(v));
  CircumcenterResult res = circumcenter(cc, pts);
  RadiusCheck out;
  if (res.exact && res.radius < half_pi) {
    out.ok = true;
    out.center = res.center;
    out.radius = res.radius;
  }
  return out;
}

} // namespace chamberworks
