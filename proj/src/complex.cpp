#include "chamberworks/complex.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <stdexcept>

namespace chamberworks {

unsigned __int128 pack_face_key(std::span<const std::int32_t> sorted_ids) {
  unsigned __int128 k = (unsigned __int128)sorted_ids.size();
  for (std::int32_t id : sorted_ids)
    k = (k << 17) | (unsigned __int128)(std::uint32_t)(id + 1);
  return k;
}

struct ComplexBuilder {
  static void build(ComplexLattice& cc) {
    const RootSystem& rs = cc.rs_;
    cc.name_ = rs.name();
    cc.subspace_basis_ = rs.subspace_basis();
    cc.dim_ = (int)cc.subspace_basis_.size() - 1;
    cc.graph_ = coxeter_graph(rs);

    // walls: one canonical normal per +- root pair
    {
      std::unordered_map<Vec, int, VecHash> seen;
      for (const Vec& r : rs.roots) {
        Vec n = canonical_normal(r);
        if (seen.emplace(n, (int)cc.wall_normals_.size()).second)
          cc.wall_normals_.push_back(n);
      }
      cc.num_walls_ = (int)cc.wall_normals_.size();
    }

    // vertices: orbits of the fundamental vertices under simple reflections
    std::vector<Mat> refl;
    for (const Vec& s : rs.simples) refl.push_back(Mat::reflection(s));
    auto add_vertex = [&](const Vec& ray, int label) -> std::int32_t {
      auto it = cc.vertex_index_.find(ray);
      if (it != cc.vertex_index_.end()) return it->second;
      std::int32_t id = (std::int32_t)cc.vertex_rays_.size();
      cc.vertex_index_.emplace(ray, id);
      cc.vertex_rays_.push_back(ray);
      cc.vertex_type_.push_back(label);
      return id;
    };
    for (int i = 0; i < rs.rank; ++i) {
      Vec seed = canonical_ray(rs.fundamental_vertices[i]);
      int label = rs.labels[i];
      std::deque<Vec> frontier;
      if (add_vertex(seed, label) == (std::int32_t)cc.vertex_rays_.size() - 1)
        frontier.push_back(seed);
      while (!frontier.empty()) {
        Vec v = frontier.front();
        frontier.pop_front();
        for (const Mat& m : refl) {
          Vec im = canonical_ray(m.apply(v));
          if (!cc.vertex_index_.count(im)) {
            add_vertex(im, label);
            frontier.push_back(im);
          }
        }
      }
    }

    // antipodes
    cc.vertex_antipode_.resize(cc.vertex_rays_.size());
    for (std::size_t v = 0; v < cc.vertex_rays_.size(); ++v) {
      auto it = cc.vertex_index_.find(canonical_ray(-cc.vertex_rays_[v]));
      if (it == cc.vertex_index_.end())
        throw std::logic_error("vertex set not closed under antipodes");
      cc.vertex_antipode_[v] = it->second;
    }

    // sign table
    cc.sign_table_.resize(cc.vertex_rays_.size() * cc.num_walls_);
    for (std::size_t v = 0; v < cc.vertex_rays_.size(); ++v)
      for (int w = 0; w < cc.num_walls_; ++w)
        cc.sign_table_[v * cc.num_walls_ + w] =
            (std::int8_t)dot(cc.vertex_rays_[v], cc.wall_normals_[w]).sign();

    // generator vertex permutations
    cc.gen_vertex_perm_.assign(rs.rank, {});
    for (int g = 0; g < rs.rank; ++g) {
      cc.gen_vertex_perm_[g].resize(cc.vertex_rays_.size());
      for (std::size_t v = 0; v < cc.vertex_rays_.size(); ++v) {
        Vec im = canonical_ray(refl[g].apply(cc.vertex_rays_[v]));
        cc.gen_vertex_perm_[g][v] = cc.vertex_index_.at(im);
      }
    }

    // faces: orbits of fundamental faces, by cotype size ascending so that
    // face ids are grouped by dimension with chambers last
    cc.fundamental_face_by_mask_.assign(256, -1);
    cc.face_off_.push_back(0);
    std::vector<std::vector<int>> subsets_by_size(rs.rank + 1);
    for (int mask = 1; mask < (1 << rs.rank); ++mask)
      subsets_by_size[__builtin_popcount((unsigned)mask)].push_back(mask);

    auto add_face = [&](const std::vector<std::int32_t>& ids,
                        std::uint8_t mask) -> bool {
      unsigned __int128 key = pack_face_key(ids);
      if (cc.face_index_.count(key)) return false;
      cc.face_index_.emplace(key, (std::int32_t)(cc.face_off_.size() - 1));
      cc.face_flat_.insert(cc.face_flat_.end(), ids.begin(), ids.end());
      cc.face_off_.push_back((std::uint32_t)cc.face_flat_.size());
      cc.face_cotype_.push_back(mask);
      return true;
    };

    for (int size = 1; size <= rs.rank; ++size) {
      for (int mask : subsets_by_size[size]) {
        std::vector<std::int32_t> seed;
        for (int i = 0; i < rs.rank; ++i)
          if (mask & (1 << i))
            seed.push_back(
                cc.vertex_index_.at(canonical_ray(rs.fundamental_vertices[i])));
        std::sort(seed.begin(), seed.end());
        int fundamental_id = (int)(cc.face_off_.size() - 1);
        cc.fundamental_face_by_mask_[mask] = fundamental_id;
        std::deque<std::vector<std::int32_t>> frontier;
        add_face(seed, (std::uint8_t)mask);
        frontier.push_back(seed);
        while (!frontier.empty()) {
          std::vector<std::int32_t> cur = std::move(frontier.front());
          frontier.pop_front();
          for (int g = 0; g < rs.rank; ++g) {
            std::vector<std::int32_t> im(cur.size());
            for (std::size_t i = 0; i < cur.size(); ++i)
              im[i] = cc.gen_vertex_perm_[g][cur[i]];
            std::sort(im.begin(), im.end());
            if (add_face(im, (std::uint8_t)mask)) frontier.push_back(im);
          }
        }
        if (size == rs.rank)
          cc.num_chambers_ = (int)(cc.face_off_.size() - 1) - fundamental_id;
      }
    }
  }
};

std::shared_ptr<ComplexLattice> ComplexLattice::build(RootSystem rs) {
  static std::atomic<std::uint64_t> next_uid{1};
  auto cc = std::make_shared<ComplexLattice>();
  cc->rs_ = std::move(rs);
  cc->uid_ = next_uid.fetch_add(1);
  ComplexBuilder::build(*cc);
  return cc;
}

int ComplexLattice::vertex_id(const Vec& ray) const {
  auto it = vertex_index_.find(canonical_ray(ray));
  return it == vertex_index_.end() ? -1 : it->second;
}

int ComplexLattice::vertex_type(const Vec& ray) const {
  int v = vertex_id(ray);
  if (v < 0) throw std::invalid_argument("not a vertex of " + name_);
  return vertex_type_[v];
}

int ComplexLattice::face_id(std::span<const std::int32_t> sorted_vertices) const {
  auto it = face_index_.find(pack_face_key(sorted_vertices));
  return it == face_index_.end() ? -1 : it->second;
}

std::vector<int> ComplexLattice::face_types(int f) const {
  std::vector<int> t;
  for (std::int32_t v : face_vertices(f)) t.push_back(vertex_type_[v]);
  std::sort(t.begin(), t.end());
  return t;
}

void ComplexLattice::for_each_subface(
    int f, const std::function<void(int)>& cb) const {
  auto vs = face_vertices(f);
  int k = (int)vs.size();
  std::vector<std::int32_t> sub;
  for (int mask = 1; mask < (1 << k); ++mask) {
    sub.clear();
    for (int i = 0; i < k; ++i)
      if (mask & (1 << i)) sub.push_back(vs[i]);
    int id = face_id(sub);
    if (id < 0) throw std::logic_error("subset of a face is not a face");
    cb(id);
  }
}

bool ComplexLattice::faces_have_antipodal_pair(int f1, int f2) const {
  for (std::int32_t v : face_vertices(f1)) {
    std::int32_t a = vertex_antipode_[v];
    auto vs = face_vertices(f2);
    if (std::binary_search(vs.begin(), vs.end(), a)) return true;
  }
  return false;
}

int ComplexLattice::opposite_face(int f) const {
  std::vector<std::int32_t> im;
  for (std::int32_t v : face_vertices(f)) im.push_back(vertex_antipode_[v]);
  std::sort(im.begin(), im.end());
  int id = face_id(im);
  if (id < 0) throw std::logic_error("antipodal vertex set is not a face");
  return id;
}

int ComplexLattice::fundamental_face(const std::vector<int>& labels) const {
  int mask = 0;
  for (int l : labels) mask |= 1 << rs_.simple_index_of_label(l);
  int f = fundamental_face_by_mask_[mask];
  if (f < 0) throw std::invalid_argument("no fundamental face for label set");
  return f;
}

int ComplexLattice::face_spanned_by(const Vec& x) const {
  FoldResult fr = fold(x);
  // write x0 as a nonnegative combination of the fundamental vertex rays
  std::vector<Rat> lambda;
  std::vector<Vec> cols;
  for (const Vec& v : rs_.fundamental_vertices) cols.push_back(v);
  if (!solve_linear(cols, fr.x0, lambda))
    throw std::invalid_argument("point not in the subspace of " + name_);
  std::vector<std::int32_t> ids;
  Mat winv = fr.w.transpose(); // orthogonal
  for (int i = 0; i < rs_.rank; ++i) {
    if (lambda[i].is_zero()) continue;
    if (lambda[i].sign() < 0)
      throw std::logic_error("fold produced a point outside the chamber");
    Vec orig = canonical_ray(winv.apply(rs_.fundamental_vertices[i]));
    ids.push_back(vertex_index_.at(orig));
  }
  std::sort(ids.begin(), ids.end());
  int f = face_id(ids);
  if (f < 0) throw std::logic_error("spanned vertex set is not a face");
  return f;
}

Vec ComplexLattice::face_interior_point(int f) const {
  Vec p(rs_.ambient);
  for (std::int32_t v : face_vertices(f)) p = p + vertex_rays_[v];
  return p;
}

const WeylEnumeration& ComplexLattice::weyl() const {
  if (!weyl_)
    weyl_ = std::make_unique<WeylEnumeration>(WeylEnumeration::run(rs_));
  return *weyl_;
}

bool ComplexLattice::weyl_enumerable() const {
  if (rs_.family == "E8") return false;
  if (rs_.family == "E7") return false; // opt-in path only
  if (rs_.family == "A" && rs_.rank > 7) return false;
  if (rs_.family == "B" && rs_.rank > 6) return false;
  if (rs_.family == "D" && rs_.rank > 6) return false;
  return true;
}

int ComplexLattice::apply_word_vertex(const std::vector<int>& word,
                                      int v) const {
  for (int g : word) {
    int gi = g >= 0 ? g : -g - 1; // involutions
    v = gen_vertex_perm_[gi][v];
  }
  return v;
}

int ComplexLattice::map_face(const std::vector<std::int32_t>& vperm,
                             int f) const {
  std::vector<std::int32_t> im;
  for (std::int32_t v : face_vertices(f)) im.push_back(vperm[v]);
  std::sort(im.begin(), im.end());
  return face_id(im);
}

std::vector<std::int32_t>
ComplexLattice::vertex_perm_of_matrix(const Mat& m) const {
  std::vector<std::int32_t> p(vertex_rays_.size());
  for (std::size_t v = 0; v < vertex_rays_.size(); ++v) {
    int id = vertex_id(m.apply(vertex_rays_[v]));
    if (id < 0)
      throw std::invalid_argument("matrix does not permute the vertex set");
    p[v] = id;
  }
  return p;
}

const std::vector<std::vector<std::pair<int, int>>>&
ComplexLattice::chamber_adjacency() const {
  if (!chamber_adj_.empty() || num_chambers_ == 0) return chamber_adj_;
  int c0 = first_chamber();
  // panel -> chambers
  std::unordered_map<int, std::vector<int>> panel_chambers;
  for (int c = c0; c < num_faces(); ++c) {
    auto vs = face_vertices(c);
    std::vector<std::int32_t> panel(vs.begin(), vs.end());
    for (std::size_t drop = 0; drop < vs.size(); ++drop) {
      std::vector<std::int32_t> sub;
      for (std::size_t i = 0; i < vs.size(); ++i)
        if (i != drop) sub.push_back(vs[i]);
      int pid = face_id(sub);
      if (pid < 0) throw std::logic_error("panel is not a face");
      panel_chambers[pid].push_back(c);
    }
  }
  chamber_adj_.assign(num_chambers_, {});
  for (auto& [pid, cs] : panel_chambers) {
    if (cs.size() != 2)
      throw std::logic_error("panel not adjacent to exactly two chambers");
    chamber_adj_[cs[0] - c0].push_back({pid, cs[1]});
    chamber_adj_[cs[1] - c0].push_back({pid, cs[0]});
  }
  for (auto& v : chamber_adj_) std::sort(v.begin(), v.end());
  return chamber_adj_;
}

Orbit<std::int32_t, std::hash<std::int32_t>>
ComplexLattice::vertex_orbit(int v) const {
  return orbit_closure<std::int32_t, std::hash<std::int32_t>>(
      v, rs_.rank,
      [&](int g, std::int32_t x) { return gen_vertex_perm_[g][x]; });
}

std::vector<int> poles(const ComplexLattice& cc, int face) {
  // pole vertices: orthogonal to every vertex ray of the face
  std::vector<char> ok(cc.num_vertices(), 1);
  for (std::int32_t fv : cc.face_vertices(face)) {
    const Vec& r = cc.vertex_ray(fv);
    for (int v = 0; v < cc.num_vertices(); ++v)
      if (ok[v] && !dot(r, cc.vertex_ray(v)).is_zero()) ok[v] = 0;
  }
  std::vector<int> out;
  for (int f = 0; f < cc.num_faces(); ++f) {
    bool all = true;
    for (std::int32_t v : cc.face_vertices(f))
      if (!ok[v]) {
        all = false;
        break;
      }
    if (all) out.push_back(f);
  }
  return out;
}

} // namespace chamberworks
