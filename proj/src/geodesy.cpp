#include "chamberworks/geodesy.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace chamberworks {

SegmentTrace segment_trace(const ComplexLattice& cc, const Vec& x,
                           const Vec& y) {
  ExactAngle d = angle(x, y);
  if (d.is_straight())
    throw std::invalid_argument("segment_trace: antipodal endpoints");
  SegmentTrace t;
  t.x = x;
  t.y = y;
  if (canonical_ray(x) == canonical_ray(y)) {
    t.interval_faces.push_back(cc.face_spanned_by(x));
    return t;
  }

  // wall crossings: <(1-s)x + s y, n> = 0 at s = <x,n> / (<x,n> - <y,n>)
  std::set<Rat> params;
  for (int w = 0; w < cc.num_walls(); ++w) {
    const Vec& n = cc.wall_normal(w);
    Rat a = dot(x, n), b = dot(y, n);
    if (a.sign() == 0 || b.sign() == 0) continue; // endpoint on the wall
    if (a.sign() == b.sign()) continue;
    params.insert(a / (a - b));
  }
  auto point_at = [&](const Rat& s) {
    return (Rat(1) - s) * x + s * y;
  };
  Rat prev(0);
  for (const Rat& s : params) {
    t.interval_faces.push_back(
        cc.face_spanned_by(point_at((prev + s) / Rat(2))));
    t.crossings.push_back({s, cc.face_spanned_by(point_at(s))});
    prev = s;
  }
  t.interval_faces.push_back(
      cc.face_spanned_by(point_at((prev + Rat(1)) / Rat(2))));
  return t;
}

bool crossings_all_vertices(const ComplexLattice& cc, const SegmentTrace& t) {
  for (const auto& c : t.crossings)
    if (cc.face_dim(c.face) != 0) return false;
  return true;
}

std::string segment_type_string(const ComplexLattice& cc,
                                const SegmentTrace& t) {
  auto vertex_label_of = [&](const Vec& p) {
    int f = cc.face_spanned_by(p);
    if (cc.face_dim(f) != 0)
      throw std::invalid_argument("segment endpoint is not a vertex");
    return cc.vertex_label(cc.face_vertices(f)[0]);
  };
  std::string s = std::to_string(vertex_label_of(t.x));
  for (const auto& c : t.crossings) {
    if (cc.face_dim(c.face) != 0)
      throw std::invalid_argument("segment crossing is not a vertex");
    s += std::to_string(cc.vertex_label(cc.face_vertices(c.face)[0]));
  }
  s += std::to_string(vertex_label_of(t.y));
  return s;
}

std::vector<ExactAngle> distance_set(const ComplexLattice& cc, int label_i,
                                     int label_j) {
  const Vec& vi = cc.rs().fundamental_vertex(label_i);
  std::vector<ExactAngle> out;
  for (int v = 0; v < cc.num_vertices(); ++v) {
    if (cc.vertex_label(v) != label_j) continue;
    ExactAngle a = angle(vi, cc.vertex_ray(v));
    if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

Mat word_matrix(const ComplexLattice& cc, const std::vector<int>& word) {
  Mat m = Mat::identity(cc.rs().ambient);
  for (int g : word) {
    int gi = g >= 0 ? g : -g - 1; // simple reflections are involutions
    m = Mat::reflection(cc.rs().simples[gi]) * m;
  }
  return m;
}

} // namespace

std::optional<Mat> pairs_weyl_equivalent(const ComplexLattice& cc, int v1,
                                         int v1p, int v2, int v2p) {
  if (cc.vertex_label(v1) != cc.vertex_label(v2) ||
      cc.vertex_label(v1p) != cc.vertex_label(v2p))
    throw std::invalid_argument("pairs have mismatched types");
  ExactAngle d1 = angle(cc.vertex_ray(v1), cc.vertex_ray(v1p));
  ExactAngle d2 = angle(cc.vertex_ray(v2), cc.vertex_ray(v2p));
  if (d1 != d2) throw std::invalid_argument("pairs have mismatched distances");

  // fold both pairs to the fundamental base point of the type
  int base = cc.vertex_id(cc.rs().fundamental_vertex(cc.vertex_label(v1)));
  auto orb = cc.vertex_orbit(base);
  if (!orb.index.count(v1) || !orb.index.count(v2)) return std::nullopt;
  std::vector<int> t1 = orb.word_to(orb.index.at(v1));
  std::vector<int> t2 = orb.word_to(orb.index.at(v2));

  auto reversed = [](std::vector<int> w) {
    std::reverse(w.begin(), w.end());
    return w;
  };
  int a1 = cc.apply_word_vertex(reversed(t1), v1p);
  int a2 = cc.apply_word_vertex(reversed(t2), v2p);

  // Schreier generators of Stab(base), acting as vertex-id words
  auto act = [&](int g, std::int32_t v) { return cc.gen_vertex_perms()[g][v]; };
  auto sch = schreier_generators(orb, cc.rs().rank, act);

  // orbit of a1 under the stabilizer generators, with transversal
  auto stab_act = [&](int g, std::int32_t v) {
    return (std::int32_t)cc.apply_word_vertex(sch[g], v);
  };
  auto sorb = orbit_closure<std::int32_t, std::hash<std::int32_t>>(
      a1, (int)sch.size(), stab_act);
  auto it = sorb.index.find(a2);
  if (it == sorb.index.end()) return std::nullopt;

  std::vector<int> word = reversed(t1);
  for (int sg : sorb.word_to(it->second))
    word.insert(word.end(), sch[sg].begin(), sch[sg].end());
  word.insert(word.end(), t2.begin(), t2.end());

  Mat m = word_matrix(cc, word);
  if (cc.vertex_id(m.apply(cc.vertex_ray(v1))) != v2 ||
      cc.vertex_id(m.apply(cc.vertex_ray(v1p))) != v2p)
    throw std::logic_error("pair witness fails verification");
  return m;
}

bool distance_class_transitive(const ComplexLattice& cc, int v,
                               const std::vector<int>& cls) {
  if (cls.empty()) return true;
  auto orb = cc.vertex_orbit(v);
  auto act = [&](int g, std::int32_t u) { return cc.gen_vertex_perms()[g][u]; };
  auto sch = schreier_generators(orb, cc.rs().rank, act);
  auto stab_act = [&](int g, std::int32_t u) {
    return (std::int32_t)cc.apply_word_vertex(sch[g], u);
  };
  auto sorb = orbit_closure<std::int32_t, std::hash<std::int32_t>>(
      cls[0], (int)sch.size(), stab_act);
  for (int u : cls)
    if (!sorb.index.count(u)) return false;
  return sorb.points.size() == cls.size();
}

bool rescale_to_common_norm(std::vector<Vec>& vs) {
  if (vs.empty()) return true;
  Rat target = norm2(vs[0]);
  for (std::size_t i = 1; i < vs.size(); ++i) {
    Rat t2 = target / norm2(vs[i]);
    Rat t;
    if (!rational_sqrt(t2, t)) return false;
    vs[i] = t * vs[i];
  }
  return true;
}

MidpointResult midpoint(const ComplexLattice& cc, const Vec& x, const Vec& y) {
  if (angle(x, y).is_straight())
    throw std::invalid_argument("midpoint: antipodal inputs");
  std::vector<Vec> vs{x, y};
  if (!rescale_to_common_norm(vs))
    throw std::invalid_argument(
        "midpoint: no common rational rescaling of the representatives");
  Vec m = vs[0] + vs[1];
  MidpointResult r;
  r.direction = canonical_ray(m);
  r.face = cc.face_spanned_by(m);
  if (cc.face_dim(r.face) == 0)
    r.vertex_label = cc.vertex_label(cc.face_vertices(r.face)[0]);
  return r;
}

std::optional<int> antipode_in(const ComplexLattice& cc, int v,
                               const std::vector<int>& vertex_set) {
  int a = cc.antipode_of(v);
  if (std::binary_search(vertex_set.begin(), vertex_set.end(), a)) return a;
  return std::nullopt;
}

void circumcenter_numeric(const std::vector<Vec>& points,
                          std::vector<double>& center, double& radius) {
  int n = points[0].dim();
  int m = (int)points.size();
  std::vector<std::vector<double>> p(m, std::vector<double>(n));
  for (int i = 0; i < m; ++i) {
    double nm = std::sqrt(norm2(points[i]).to_double());
    for (int j = 0; j < n; ++j) p[i][j] = points[i][j].to_double() / nm;
  }
  auto dotd = [&](const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (int j = 0; j < (int)a.size(); ++j) s += a[j] * b[j];
    return s;
  };
  auto normalize = [&](std::vector<double>& a) {
    double s = std::sqrt(dotd(a, a));
    for (double& x : a) x /= s;
  };

  // active-set minimax: x maximizing min_i <x, p_i>
  std::vector<int> active{0};
  {
    // start from the normalized mean
    center.assign(n, 0.0);
    for (auto& q : p)
      for (int j = 0; j < n; ++j) center[j] += q[j];
    double s = std::sqrt(dotd(center, center));
    if (s < 1e-12) {
      center = p[0];
    } else {
      for (double& x : center) x /= s;
    }
    double worst = 2;
    int wi = 0;
    for (int i = 0; i < m; ++i) {
      double c = dotd(center, p[i]);
      if (c < worst) {
        worst = c;
        wi = i;
      }
    }
    active = {wi};
  }
  for (int iter = 0; iter < 200; ++iter) {
    // solve for x in span(active points) with equal inner products
    int k = (int)active.size();
    std::vector<std::vector<double>> G(k, std::vector<double>(k + 1));
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) G[i][j] = dotd(p[active[i]], p[active[j]]);
      G[i][k] = 1.0;
    }
    // gaussian solve G mu = 1
    std::vector<double> mu(k, 0.0);
    {
      for (int c = 0; c < k; ++c) {
        int piv = c;
        for (int r = c + 1; r < k; ++r)
          if (std::abs(G[r][c]) > std::abs(G[piv][c])) piv = r;
        std::swap(G[piv], G[c]);
        if (std::abs(G[c][c]) < 1e-14) break;
        for (int r = 0; r < k; ++r) {
          if (r == c) continue;
          double f = G[r][c] / G[c][c];
          for (int j = c; j <= k; ++j) G[r][j] -= f * G[c][j];
        }
      }
      for (int c = 0; c < k; ++c)
        mu[c] = std::abs(G[c][c]) > 1e-14 ? G[c][k] / G[c][c] : 0.0;
    }
    std::vector<double> x(n, 0.0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < n; ++j) x[j] += mu[i] * p[active[i]][j];
    if (std::sqrt(dotd(x, x)) < 1e-12) break;
    normalize(x);

    // drop points with negative weight
    bool dropped = false;
    for (int i = k - 1; i >= 0; --i)
      if (mu[i] < -1e-12) {
        active.erase(active.begin() + i);
        dropped = true;
      }
    if (dropped) continue;

    center = x;
    // add the farthest violating point
    double worst = 2;
    int wi = -1;
    for (int i = 0; i < m; ++i) {
      double c = dotd(center, p[i]);
      if (c < worst - 1e-15) {
        worst = c;
        wi = i;
      }
    }
    double active_cos = dotd(center, p[active[0]]);
    if (wi < 0 || worst >= active_cos - 1e-13) break;
    if (std::find(active.begin(), active.end(), wi) != active.end()) break;
    active.push_back(wi);
  }
  double worst = 2;
  for (int i = 0; i < m; ++i) worst = std::min(worst, dotd(center, p[i]));
  radius = std::acos(std::clamp(worst, -1.0, 1.0));
}

CircumcenterResult circumcenter(const ComplexLattice& cc,
                                const std::vector<Vec>& points) {
  if (points.empty()) throw std::invalid_argument("circumcenter: empty set");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (angle(points[i], points[j]).is_straight())
        throw std::invalid_argument("circumcenter: antipodal pair");

  CircumcenterResult res;

  // exact candidates
  std::vector<Vec> candidates = points;
  int m = (int)points.size();
  if (m <= 10) {
    for (int mask = 3; mask < (1 << m); ++mask) {
      if (__builtin_popcount((unsigned)mask) < 2) continue;
      std::vector<Vec> sub;
      for (int i = 0; i < m; ++i)
        if (mask & (1 << i)) sub.push_back(points[i]);
      if (rescale_to_common_norm(sub)) {
        Vec s(points[0].dim());
        for (const Vec& v : sub) s = s + v;
        if (!s.is_zero()) candidates.push_back(canonical_ray(s));
      }
    }
  }
  for (const Vec& pnt : points) {
    int f = cc.face_spanned_by(pnt);
    std::vector<Vec> rays;
    for (std::int32_t v : cc.face_vertices(f)) rays.push_back(cc.vertex_ray(v));
    if (rescale_to_common_norm(rays)) {
      Vec s(points[0].dim());
      for (const Vec& v : rays) s = s + v;
      candidates.push_back(canonical_ray(s));
    }
  }

  bool have = false;
  Vec best_center;
  ExactAngle best_rad;
  for (const Vec& c : candidates) {
    ExactAngle worst = ExactAngle::zero();
    for (const Vec& pnt : points) worst = std::max(worst, angle(c, pnt));
    if (!have || worst < best_rad) {
      have = true;
      best_rad = worst;
      best_center = c;
    }
  }

  circumcenter_numeric(points, res.center_numeric, res.radius_numeric);
  if (have && best_rad.radians() <= res.radius_numeric + 1e-8) {
    res.exact = true;
    res.center = best_center;
    res.radius = best_rad;
  }
  return res;
}

} // namespace chamberworks
