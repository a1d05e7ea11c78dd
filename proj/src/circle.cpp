#include "chamberworks/circle.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace chamberworks {

VertexInventory VertexInventory::from_root_system(const RootSystem& rs) {
  VertexInventory inv;
  std::vector<Mat> refl;
  for (const Vec& s : rs.simples) refl.push_back(Mat::reflection(s));
  for (int i = 0; i < rs.rank; ++i) {
    Vec seed = canonical_ray(rs.fundamental_vertices[i]);
    if (inv.index.count(seed)) continue;
    std::deque<Vec> frontier{seed};
    inv.index.emplace(seed, (std::int32_t)inv.rays.size());
    inv.rays.push_back(seed);
    inv.types.push_back(rs.labels[i]);
    while (!frontier.empty()) {
      Vec v = frontier.front();
      frontier.pop_front();
      for (const Mat& m : refl) {
        Vec im = canonical_ray(m.apply(v));
        if (inv.index.count(im)) continue;
        inv.index.emplace(im, (std::int32_t)inv.rays.size());
        inv.rays.push_back(im);
        inv.types.push_back(rs.labels[i]);
        frontier.push_back(im);
      }
    }
  }
  return inv;
}

VertexInventory VertexInventory::view_of(const ComplexLattice& cc) {
  VertexInventory inv;
  for (int v = 0; v < cc.num_vertices(); ++v) {
    inv.rays.push_back(cc.vertex_ray(v));
    inv.types.push_back(cc.vertex_label(v));
    inv.index.emplace(cc.vertex_ray(v), v);
  }
  return inv;
}

namespace {

// exact circular ordering of (p, q) plane coordinates by argument
bool circular_less(const std::pair<Rat, Rat>& u, const std::pair<Rat, Rat>& v) {
  auto half = [](const std::pair<Rat, Rat>& w) {
    // 0 for upper half [0, pi), 1 for lower half [pi, 2pi)
    if (w.second.sign() > 0) return 0;
    if (w.second.sign() < 0) return 1;
    return w.first.sign() > 0 ? 0 : 1;
  };
  int hu = half(u), hv = half(v);
  if (hu != hv) return hu < hv;
  // same half-plane: compare by cross product
  Rat cross = u.first * v.second - v.first * u.second;
  return cross.sign() > 0;
}

} // namespace

std::vector<std::string> SingularCircle::arcs_between(int vid_from,
                                                      int vid_to) const {
  int n = (int)cycle_vertices.size();
  int i0 = -1, i1 = -1;
  for (int i = 0; i < n; ++i) {
    if (cycle_vertices[i] == vid_from) i0 = i;
    if (cycle_vertices[i] == vid_to) i1 = i;
  }
  if (i0 < 0 || i1 < 0) throw std::invalid_argument("vertex not on circle");
  std::vector<std::string> out;
  for (int dir : {1, -1}) {
    std::string s;
    for (int i = i0;; i = (i + dir + n) % n) {
      s += cycle_types[i];
      if (i == i1) break;
    }
    out.push_back(s);
  }
  return out;
}

std::optional<SingularCircle> singular_circle_through(const RootSystem& rs,
                                                      const VertexInventory& inv,
                                                      const Vec& x,
                                                      const Vec& y) {
  // roots orthogonal to both x and y
  std::vector<Vec> perp;
  for (const Vec& r : rs.roots)
    if (dot(r, x).is_zero() && dot(r, y).is_zero()) perp.push_back(r);
  // intersection of their walls inside the subspace
  std::vector<Vec> cut = perp;
  for (const Vec& c : rs.constraints) cut.push_back(c);
  std::vector<Vec> ambient;
  for (int i = 0; i < rs.ambient; ++i) ambient.push_back(Vec::unit(rs.ambient, i));
  std::vector<Vec> comp = orthogonal_complement(cut, ambient);
  if (comp.size() != 2) return std::nullopt;
  // must equal span{x, y}
  std::vector<Vec> joint = comp;
  joint.push_back(x);
  joint.push_back(y);
  if (rank_of(joint) != 2) return std::nullopt;

  SingularCircle sc;
  sc.a = canonical_ray(x);
  Vec b = y - (dot(x, y) / norm2(x)) * x;
  if (b.is_zero()) return std::nullopt; // proportional rays
  sc.b = canonical_ray(b);

  // vertices on the plane, with exact angular order
  std::vector<std::pair<std::pair<Rat, Rat>, int>> pts;
  for (std::size_t v = 0; v < inv.rays.size(); ++v) {
    const Vec& u = inv.rays[v];
    std::vector<Rat> coef;
    if (!solve_linear({sc.a, sc.b}, u, coef)) continue;
    pts.push_back({{coef[0], coef[1]}, (int)v});
  }
  std::sort(pts.begin(), pts.end(),
            [](const auto& p, const auto& q) { return circular_less(p.first, q.first); });
  for (auto& [xyc, vid] : pts) {
    sc.cycle_vertices.push_back(vid);
    sc.cycle_coords.push_back(xyc);
    sc.cycle_types += std::to_string(inv.types[vid]);
  }
  return sc;
}

std::vector<SingularCircle> singular_circles_through_vertex(
    const RootSystem& rs, const VertexInventory& inv, int v) {
  std::vector<SingularCircle> out;
  std::unordered_map<Vec, bool, VecHash> seen_planes; // keyed by second basis ray
  const Vec& x = inv.rays[v];
  for (std::size_t u = 0; u < inv.rays.size(); ++u) {
    if ((int)u == v) continue;
    const Vec& y = inv.rays[u];
    Vec b = y - (dot(x, y) / norm2(x)) * x;
    if (b.is_zero()) continue; // antipode or same ray
    Vec bkey = canonical_normal(b);
    if (seen_planes.count(bkey)) continue;
    seen_planes.emplace(bkey, true);
    auto sc = singular_circle_through(rs, inv, x, y);
    if (sc) out.push_back(std::move(*sc));
  }
  return out;
}

namespace {

// canonical key of a 2-plane: echelonized basis rows, canonicalized
struct PlaneKey {
  Vec r0, r1;
  bool operator==(const PlaneKey& o) const { return r0 == o.r0 && r1 == o.r1; }
};
struct PlaneKeyHash {
  std::size_t operator()(const PlaneKey& k) const {
    return k.r0.hash() * 1000003 ^ k.r1.hash();
  }
};

PlaneKey plane_key(const Vec& a, const Vec& b) {
  // reduced row echelon of the 2 x n matrix [a; b]
  Vec u = a, v = b;
  int n = a.dim();
  int p0 = -1;
  for (int i = 0; i < n; ++i)
    if (!u[i].is_zero() || !v[i].is_zero()) {
      p0 = i;
      break;
    }
  if (u[p0].is_zero()) std::swap(u, v);
  v = v - (v[p0] / u[p0]) * u;
  int p1 = -1;
  for (int i = p0 + 1; i < n; ++i)
    if (!v[i].is_zero()) {
      p1 = i;
      break;
    }
  if (p1 < 0) throw std::logic_error("plane basis degenerate");
  u = u - (u[p1] / v[p1]) * v;
  return {canonical_normal(u), canonical_normal(v)};
}

struct Restriction {
  // 2x2 rational matrix in the (a, b) basis
  Rat m00, m01, m10, m11;
  bool operator==(const Restriction& o) const {
    return m00 == o.m00 && m01 == o.m01 && m10 == o.m10 && m11 == o.m11;
  }
};
struct RestrictionHash {
  std::size_t operator()(const Restriction& r) const {
    return ((r.m00.hash() * 31 + r.m01.hash()) * 31 + r.m10.hash()) * 31 +
           r.m11.hash();
  }
};

} // namespace

InducedCircleGroup induced_weyl_on_circle(const RootSystem& rs,
                                          const SingularCircle& circle) {
  std::vector<Mat> refl;
  for (const Vec& s : rs.simples) refl.push_back(Mat::reflection(s));
  const Vec& a = circle.a;
  const Vec& b = circle.b;

  // orbit of the plane under the simple reflections
  auto act = [&](int g, const PlaneKey& k) {
    return plane_key(refl[g].apply(k.r0), refl[g].apply(k.r1));
  };
  PlaneKey root = plane_key(a, b);
  auto orb = orbit_closure<PlaneKey, PlaneKeyHash>(root, rs.rank, act);

  // restrict each Schreier generator to the plane
  auto apply_word = [&](const std::vector<int>& w, Vec v) {
    for (int g : w) v = refl[g >= 0 ? g : -g - 1].apply(v); // involutions
    return v;
  };
  auto restrict_word = [&](const std::vector<int>& w) -> Restriction {
    Vec ia = apply_word(w, a), ib = apply_word(w, b);
    std::vector<Rat> ca, cb;
    if (!solve_linear({a, b}, ia, ca) || !solve_linear({a, b}, ib, cb))
      throw std::logic_error("stabilizer word does not preserve the plane");
    return {ca[0], cb[0], ca[1], cb[1]};
  };

  auto mul = [](const Restriction& x, const Restriction& y) {
    return Restriction{x.m00 * y.m00 + x.m01 * y.m10,
                       x.m00 * y.m01 + x.m01 * y.m11,
                       x.m10 * y.m00 + x.m11 * y.m10,
                       x.m10 * y.m01 + x.m11 * y.m11};
  };
  auto close_group = [&](std::vector<Restriction> gens) {
    std::vector<Restriction> elems{{Rat(1), Rat(0), Rat(0), Rat(1)}};
    std::unordered_map<Restriction, bool, RestrictionHash> seen;
    seen.emplace(elems[0], true);
    for (const Restriction& g : gens)
      if (seen.emplace(g, true).second) elems.push_back(g);
    for (std::size_t head = 1; head < elems.size(); ++head)
      for (std::size_t j = 1; j < elems.size(); ++j) {
        Restriction p = mul(elems[head], elems[j]);
        if (seen.emplace(p, true).second) elems.push_back(p);
      }
    return elems;
  };

  std::vector<Restriction> gens;
  {
    std::unordered_map<Restriction, bool, RestrictionHash> dedup;
    for_each_schreier_generator(orb, rs.rank, act,
                                [&](const std::vector<int>& w) {
                                  Restriction r = restrict_word(w);
                                  if (dedup.emplace(r, true).second)
                                    gens.push_back(r);
                                });
  }
  std::vector<Restriction> image = close_group(gens);

  InducedCircleGroup out;
  out.plane_orbit_size = orb.points.size();
  out.image_order = (int)image.size();
  std::vector<Restriction> reflections;
  for (const Restriction& g : image) {
    Rat det = g.m00 * g.m11 - g.m01 * g.m10;
    if (det == Rat(-1)) {
      ++out.reflection_count;
      reflections.push_back(g);
    }
    if (g.m00 == Rat(-1) && g.m11 == Rat(-1) && g.m01.is_zero() &&
        g.m10.is_zero())
      out.contains_antipodal = true;
  }
  out.induced_weyl_order = (int)close_group(reflections).size();

  // transitivity of the image group on same-type circle vertices
  {
    int n = (int)circle.cycle_vertices.size();
    auto canon2 = [](Rat p, Rat q) {
      Vec v(2);
      v[0] = p;
      v[1] = q;
      return canonical_ray(v);
    };
    std::unordered_map<Vec, int, VecHash> pos;
    for (int i = 0; i < n; ++i)
      pos.emplace(canon2(circle.cycle_coords[i].first,
                         circle.cycle_coords[i].second),
                  i);
    // union of orbits under the image group, per position
    std::vector<int> comp(n);
    for (int i = 0; i < n; ++i) comp[i] = i;
    std::function<int(int)> find = [&](int i) {
      return comp[i] == i ? i : comp[i] = find(comp[i]);
    };
    for (const Restriction& g : image)
      for (int i = 0; i < n; ++i) {
        Rat p = circle.cycle_coords[i].first, q = circle.cycle_coords[i].second;
        Vec im = canon2(g.m00 * p + g.m01 * q, g.m10 * p + g.m11 * q);
        auto it = pos.find(im);
        if (it == pos.end())
          throw std::logic_error("image group does not preserve the circle");
        int a = find(i), b = find(it->second);
        if (a != b) comp[a] = b;
      }
    std::map<int, std::vector<int>> by_type; // type -> component reps
    for (int i = 0; i < n; ++i)
      by_type[circle.cycle_types[i] - '0'].push_back(find(i));
    for (auto& [t, reps] : by_type) {
      std::sort(reps.begin(), reps.end());
      reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
      out.type_transitive.push_back({t, reps.size() == 1});
    }
  }
  return out;
}

} // namespace chamberworks
