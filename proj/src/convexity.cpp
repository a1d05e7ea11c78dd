#include "chamberworks/convexity.hpp"

#include "chamberworks/kernels.hpp"
#include "chamberworks/link.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <unordered_set>

namespace chamberworks {

namespace {

Subcomplex from_face_set(const ComplexLattice& cc, std::vector<int> faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  Subcomplex k;
  k.faces = std::move(faces);
  std::unordered_set<int> vs;
  for (int f : k.faces) {
    k.dim = std::max(k.dim, cc.face_dim(f));
    for (std::int32_t v : cc.face_vertices(f)) vs.insert(v);
  }
  k.vertices.assign(vs.begin(), vs.end());
  std::sort(k.vertices.begin(), k.vertices.end());
  return k;
}

std::vector<Vec> span_basis(const std::vector<Vec>& gens) {
  // echelon basis of the span
  std::vector<Vec> basis;
  for (const Vec& g : gens) {
    std::vector<Vec> trial = basis;
    trial.push_back(g);
    if (rank_of(trial) > (int)basis.size()) basis.push_back(g);
  }
  return basis;
}

} // namespace

Subcomplex make_subcomplex(const ComplexLattice& cc,
                           const std::vector<int>& seed_faces) {
  std::vector<int> all;
  for (int f : seed_faces) {
    all.push_back(f);
    cc.for_each_subface(f, [&](int s) { all.push_back(s); });
  }
  return from_face_set(cc, std::move(all));
}

Subcomplex whole_complex(const ComplexLattice& cc) {
  std::vector<int> all(cc.num_faces());
  for (int f = 0; f < cc.num_faces(); ++f) all[f] = f;
  return from_face_set(cc, std::move(all));
}

Subcomplex root_envelope(const ComplexLattice& cc, const Subcomplex& k) {
  auto constraints = kernels::envelope_constraints(cc, k.vertices);
  auto mask = kernels::envelope_vertex_mask(cc, constraints);
  return from_face_set(cc, kernels::faces_within_mask(cc, mask));
}

namespace {

// single cone sweep over candidate faces; returns hit faces (not closed)
std::vector<int> cone_sweep(const ComplexLattice& cc,
                            const std::vector<int>& candidates,
                            const std::vector<Vec>& gens) {
  std::vector<Vec> span = span_basis(gens);
  auto mask = kernels::cone_membership(cc, candidates, gens, span);
  std::vector<int> out;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (mask[i]) out.push_back(candidates[i]);
  return out;
}

std::vector<Vec> pair_cone_gens(const ComplexLattice& cc, int f1, int f2) {
  std::vector<std::int32_t> ids(cc.face_vertices(f1).begin(),
                                cc.face_vertices(f1).end());
  for (std::int32_t v : cc.face_vertices(f2)) ids.push_back(v);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<Vec> gens;
  for (std::int32_t v : ids) gens.push_back(cc.vertex_ray(v));
  return gens;
}

} // namespace

Subcomplex hull_of_face_pair(const ComplexLattice& cc, int f1, int f2) {
  if (cc.faces_have_antipodal_pair(f1, f2)) throw AntipodalPairError{};
  Subcomplex seed = make_subcomplex(cc, {f1, f2});
  Subcomplex env = root_envelope(cc, seed);
  std::vector<Vec> gens = pair_cone_gens(cc, f1, f2);
  std::vector<int> hits = cone_sweep(cc, env.faces, gens);
  for (int f : std::vector<int>(hits))
    cc.for_each_subface(f, [&](int s) { hits.push_back(s); });
  hits.insert(hits.end(), seed.faces.begin(), seed.faces.end());
  return from_face_set(cc, std::move(hits));
}

namespace {

struct ClosureState {
  const ComplexLattice& cc;
  std::vector<char> in_k;      // face membership
  std::vector<int> k_faces;    // insertion order
  std::vector<char> vert_in_k; // vertex membership
  std::vector<int> chambers_in_k;
  bool whole = false;

  explicit ClosureState(const ComplexLattice& c)
      : cc(c), in_k(c.num_faces(), 0), vert_in_k(c.num_vertices(), 0) {}

  bool add_face(int f) {
    if (in_k[f]) return false;
    in_k[f] = 1;
    k_faces.push_back(f);
    for (std::int32_t v : cc.face_vertices(f)) vert_in_k[v] = 1;
    if (cc.is_chamber(f)) {
      chambers_in_k.push_back(f);
      if (in_k[cc.opposite_face(f)] && f != cc.opposite_face(f)) whole = true;
    }
    return true;
  }

  void add_with_subfaces(int f, std::vector<int>& fresh) {
    if (add_face(f)) fresh.push_back(f);
    cc.for_each_subface(f, [&](int s) {
      if (add_face(s)) fresh.push_back(s);
    });
  }
};

} // namespace

Subcomplex simplicial_convex_hull(const ComplexLattice& cc,
                                  const std::vector<int>& seed_faces) {
  if (seed_faces.empty()) return Subcomplex{};
  ClosureState st(cc);
  std::vector<int> fresh;
  for (int f : seed_faces) st.add_with_subfaces(f, fresh);
  if (st.whole) return whole_complex(cc);

  auto envelope_faces = [&]() {
    std::vector<int> kv;
    for (int v = 0; v < cc.num_vertices(); ++v)
      if (st.vert_in_k[v]) kv.push_back(v);
    auto constraints = kernels::envelope_constraints(cc, kv);
    auto mask = kernels::envelope_vertex_mask(cc, constraints);
    return kernels::faces_within_mask(cc, mask);
  };

  // Pairs are enumerated implicitly: all faces with index < frontier_start
  // have had their mutual pairs processed.  Each round handles the pairs
  // (i, j) with frontier_start <= i < frontier_end, j < i; faces added
  // during a round join the next frontier.  Unions of vertex sets dedup
  // repeated cones.
  std::unordered_set<unsigned __int128, Face128Hash> done_unions;
  std::size_t frontier_start = 0;
  while (frontier_start < st.k_faces.size()) {
    std::vector<int> env = envelope_faces();
    if (env.size() == st.k_faces.size())
      return from_face_set(cc, std::move(st.k_faces)); // K == its envelope
    std::vector<int> sweep_candidates;
    for (int f : env)
      if (!st.in_k[f]) sweep_candidates.push_back(f);

    std::size_t frontier_end = st.k_faces.size();
    std::vector<int> unused;
    for (std::size_t i = frontier_start; i < frontier_end; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        int f = st.k_faces[i], g = st.k_faces[j];

        // union fast path: if the union of the vertex sets spans a face,
        // the pair hull is that face's closure
        std::vector<std::int32_t> uni(cc.face_vertices(f).begin(),
                                      cc.face_vertices(f).end());
        for (std::int32_t v : cc.face_vertices(g)) uni.push_back(v);
        std::sort(uni.begin(), uni.end());
        uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
        if (!done_unions.insert(pack_face_key(uni)).second) continue;
        int uf = cc.face_id(uni);
        if (uf >= 0) {
          st.add_with_subfaces(uf, unused);
          if (st.whole) return whole_complex(cc);
          continue;
        }
        // Antipodal vertex pairs make the cone non-pointed; the sweep is
        // still sound: the cone meets the sphere in the closure of the
        // geodesics between non-antipodal point pairs of the two faces.

        std::vector<Vec> gens;
        for (std::int32_t v : uni) gens.push_back(cc.vertex_ray(v));
        for (int hit : cone_sweep(cc, sweep_candidates, gens))
          st.add_with_subfaces(hit, unused);
        if (st.whole) return whole_complex(cc);
        // drop candidates that were just absorbed
        std::erase_if(sweep_candidates, [&](int c) { return st.in_k[c]; });
        if (sweep_candidates.empty() &&
            envelope_faces().size() == st.k_faces.size())
          return from_face_set(cc, std::move(st.k_faces));
      }
    }
    frontier_start = frontier_end;
  }
  return from_face_set(cc, std::move(st.k_faces));
}

bool is_convex(const ComplexLattice& cc, const Subcomplex& k) {
  if (k.empty()) return true;
  Subcomplex closed = make_subcomplex(cc, k.faces);
  if (!(closed == k)) return false;
  return simplicial_convex_hull(cc, k.faces) == k;
}

bool is_subbuilding(const ComplexLattice& cc, const Subcomplex& k) {
  for (int v : k.vertices)
    if (!k.contains_vertex(cc.antipode_of(v))) return false;
  return true;
}

bool is_interior_vertex(const ComplexLattice& cc, const Subcomplex& k, int v) {
  if (!k.contains_vertex(v))
    throw std::invalid_argument("vertex is not in the subcomplex");
  // link of the vertex, cached per (complex uid, label)
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, int>, LinkComplex> cache;
  int label = cc.vertex_label(v);
  const LinkComplex* lkp;
  {
    std::scoped_lock lock(mu);
    auto it = cache.find({cc.uid(), label});
    if (it == cache.end())
      it = cache.emplace(std::make_pair(cc.uid(), label),
                         link_of_fundamental(cc, {label}))
               .first;
    lkp = &it->second;
  }
  const LinkComplex& lk = *lkp;

  // fold v onto the fundamental vertex, carry K's faces through v along
  FoldResult fr = cc.fold(cc.vertex_ray(v));
  std::vector<int> link_faces;
  for (int f : k.faces) {
    auto vs = cc.face_vertices(f);
    if (vs.size() < 2) continue;
    if (!std::binary_search(vs.begin(), vs.end(), (std::int32_t)v)) continue;
    std::vector<std::int32_t> im;
    for (std::int32_t u : vs) {
      int id = cc.vertex_id(fr.w.apply(cc.vertex_ray(u)));
      if (id < 0) throw std::logic_error("fold does not permute vertices");
      im.push_back(id);
    }
    std::sort(im.begin(), im.end());
    int fid = cc.face_id(im);
    if (fid < 0) throw std::logic_error("fold does not permute faces");
    link_faces.push_back(project_face_to_link(cc, lk, fid));
  }
  if (link_faces.empty()) return false;
  Subcomplex lk_K = make_subcomplex(*lk.complex, link_faces);
  return is_subbuilding(*lk.complex, lk_K);
}

AntipodePropagation antipode_propagation_check(const ComplexLattice& cc,
                                               const Subcomplex& k, int x1,
                                               int x2, const Vec& z) {
  // preconditions: z interior to the segment, with an antipode in K
  std::vector<Rat> coef;
  if (!solve_linear({cc.vertex_ray(x1), cc.vertex_ray(x2)}, z, coef) ||
      coef[0].sign() <= 0 || coef[1].sign() <= 0)
    throw std::invalid_argument("z is not interior to the segment");
  int zf = cc.face_spanned_by(-z);
  bool z_antipode_in_k = k.contains_face(zf);
  if (!z_antipode_in_k)
    throw std::invalid_argument("z has no antipode in K");

  AntipodePropagation out;
  int a1 = cc.antipode_of(x1), a2 = cc.antipode_of(x2);
  out.ok = k.contains_vertex(a1) && k.contains_vertex(a2);
  if (k.contains_vertex(a1)) out.antipode_x1 = a1;
  if (k.contains_vertex(a2)) out.antipode_x2 = a2;
  return out;
}

} // namespace chamberworks
