#include "chamberworks/angle.hpp"
#include "chamberworks/linalg.hpp"
#include "chamberworks/lp.hpp"
#include "chamberworks/prng.hpp"

#include "doctest.h"

#include <cmath>

using namespace chamberworks;

namespace {

Vec v8(std::initializer_list<std::int64_t> xs) {
  Vec v((int)xs.size());
  int i = 0;
  for (auto x : xs) v[i++] = Rat(x);
  return v;
}

// Independent feasibility oracle for small instances: Fourier-Motzkin
// elimination on the system
//   sum l_i f_i - sum m_j g_j = 0,  l_i >= 1,  m_j >= 0.
// Variables ordered l then m; equalities split into <= pairs.
struct FMOracle {
  // inequalities: sum c_k x_k <= c_last
  std::vector<std::vector<Rat>> rows;
  int nvars;

  static bool feasible(const std::vector<Vec>& face,
                       const std::vector<Vec>& gens) {
    int dim = face[0].dim();
    int k = (int)face.size(), m = (int)gens.size();
    FMOracle o;
    o.nvars = k + m;
    auto add_le = [&](std::vector<Rat> c, Rat rhs) {
      c.push_back(rhs);
      o.rows.push_back(std::move(c));
    };
    for (int d = 0; d < dim; ++d) {
      std::vector<Rat> c(o.nvars);
      for (int i = 0; i < k; ++i) c[i] = face[i][d];
      for (int j = 0; j < m; ++j) c[k + j] = -gens[j][d];
      add_le(c, Rat(0));
      for (auto& x : c) x = -x;
      add_le(c, Rat(0));
    }
    for (int i = 0; i < k; ++i) {
      std::vector<Rat> c(o.nvars);
      c[i] = Rat(-1);
      add_le(c, Rat(-1)); // l_i >= 1
    }
    for (int j = 0; j < m; ++j) {
      std::vector<Rat> c(o.nvars);
      c[k + j] = Rat(-1);
      add_le(c, Rat(0)); // m_j >= 0
    }
    return o.run();
  }

  bool run() {
    for (int v = 0; v < nvars; ++v) {
      std::vector<std::vector<Rat>> pos, neg, none;
      for (auto& r : rows) {
        int s = r[v].sign();
        if (s > 0)
          pos.push_back(r);
        else if (s < 0)
          neg.push_back(r);
        else
          none.push_back(r);
      }
      std::vector<std::vector<Rat>> next = none;
      for (auto& p : pos)
        for (auto& n : neg) {
          // p: a x <= b with a>0 ; n: c x <= d with c<0
          // eliminate: combine p/a + n/(-c)
          std::vector<Rat> r((std::size_t)nvars + 1);
          Rat ia = Rat(1) / p[v];
          Rat ic = Rat(1) / (-n[v]);
          for (int t = 0; t <= nvars; ++t) r[t] = p[t] * ia + n[t] * ic;
          next.push_back(std::move(r));
        }
      rows = std::move(next);
    }
    for (auto& r : rows)
      if (r[nvars].sign() < 0) return false; // 0 <= negative
    return true;
  }
};

} // namespace

TEST_CASE("rational arithmetic basics") {
  Rat a(1, 2), b(1, 3);
  CHECK(a + b == Rat(5, 6));
  CHECK(a * b == Rat(1, 6));
  CHECK(a - b == Rat(1, 6));
  CHECK(a / b == Rat(3, 2));
  CHECK(Rat(-4, -8) == Rat(1, 2));
  CHECK(Rat(4, -8) == Rat(-1, 2));
  CHECK(Rat(0, 5) == Rat(0));
  CHECK(Rat(7, 3) > Rat(2));
  CHECK_THROWS(Rat(1, 0));
  Rat s;
  CHECK(rational_sqrt(Rat(9, 4), s));
  CHECK(s == Rat(3, 2));
  CHECK_FALSE(rational_sqrt(Rat(2), s));
}

TEST_CASE("canonical rays preserve orientation") {
  CHECK(canonical_ray(v8({2, -4, 6})) == v8({1, -2, 3}));
  CHECK(canonical_ray(v8({-2, 4, -6})) == v8({-1, 2, -3}));
  Vec h(4);
  h[0] = Rat(1, 2);
  h[1] = Rat(-1, 2);
  h[2] = Rat(1, 2);
  h[3] = Rat(1, 2);
  CHECK(canonical_ray(h) == v8({1, -1, 1, 1}));
  CHECK(canonical_normal(v8({-1, 2, -3})) == v8({1, -2, 3}));
  CHECK(canonical_normal(v8({0, -2, 4})) == v8({0, 1, -2}));
}

TEST_CASE("angle: identity and listed values") {
  Vec e1 = Vec::unit(4, 0);
  CHECK(angle(e1, e1).is_zero());
  CHECK(angle(e1, -e1).is_straight());

  // 2-vertex pair with inner product 12 and squared norms 48, 48:
  // cos = 1/4, i.e. (positive, 1/16)
  Vec a = v8({-3, 3, 3, 3, 3, -1, -1, -1});
  Vec b = v8({0, 0, 0, 0, 6, 2, 2, 2});
  ExactAngle t = angle(a, b);
  CHECK(t.cos_sign() == 1);
  CHECK(t.cos_squared() == Rat(1, 16));

  // inner product 24, norms 48: cos = 1/2 -> pi/3
  Vec c = v8({3, 3, 3, 3, 3, 1, 1, 1});
  ExactAngle u = angle(a, c);
  CHECK(u.cos_sign() == 1);
  CHECK(u.cos_squared() == Rat(1, 4));
  CHECK(std::abs(u.radians() - M_PI / 3) < 1e-12);
}

TEST_CASE("angle ordering: pi/2 boundary cases") {
  ExactAngle zero = ExactAngle::zero();
  ExactAngle right = ExactAngle::right();
  ExactAngle straight = ExactAngle::straight();
  ExactAngle third(1, Rat(1, 4));     // pi/3
  ExactAngle twothird(-1, Rat(1, 4)); // 2pi/3
  CHECK(zero < third);
  CHECK(third < right);
  CHECK(right < twothird);
  CHECK(twothird < straight);
}

TEST_CASE("angle properties under rescaling and symmetry") {
  PRNG rng(12345);
  for (int trial = 0; trial < 300; ++trial) {
    int d = 2 + (int)(rng.next() % 6);
    Vec u(d), v(d);
    bool uz = true, vz = true;
    for (int i = 0; i < d; ++i) {
      u[i] = Rat((std::int64_t)(rng.next() % 21) - 10,
                 1 + (std::int64_t)(rng.next() % 4));
      v[i] = Rat((std::int64_t)(rng.next() % 21) - 10,
                 1 + (std::int64_t)(rng.next() % 4));
      uz = uz && u[i].is_zero();
      vz = vz && v[i].is_zero();
    }
    if (uz || vz) continue;
    CHECK(angle(u, v) == angle(v, u));
    CHECK(angle(u, u).is_zero());
    CHECK(angle(u, -u).is_straight());
    Rat s(1 + (std::int64_t)(rng.next() % 7), 1 + (std::int64_t)(rng.next() % 5));
    CHECK(angle(s * u, v) == angle(u, v));
  }
}

TEST_CASE("ExactAngle agrees with floating arccos on random pairs") {
  PRNG rng(777);
  int compared = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    int d = 2 + (int)(rng.next() % 7);
    Vec u(d), v(d), w(d);
    bool uz = true, vz = true, wz = true;
    for (int i = 0; i < d; ++i) {
      u[i] = Rat((std::int64_t)(rng.next() % 19) - 9);
      v[i] = Rat((std::int64_t)(rng.next() % 19) - 9);
      w[i] = Rat((std::int64_t)(rng.next() % 19) - 9);
      uz = uz && u[i].is_zero();
      vz = vz && v[i].is_zero();
      wz = wz && w[i].is_zero();
    }
    if (uz || vz || wz) continue;
    ExactAngle a1 = angle(u, v), a2 = angle(u, w);
    double f1 = std::acos(std::clamp(
        dot(u, v).to_double() /
            std::sqrt(norm2(u).to_double() * norm2(v).to_double()),
        -1.0, 1.0));
    double f2 = std::acos(std::clamp(
        dot(u, w).to_double() /
            std::sqrt(norm2(u).to_double() * norm2(w).to_double()),
        -1.0, 1.0));
    if (std::abs(f1 - f2) > 1e-12) {
      ++compared;
      CHECK((a1 < a2) == (f1 < f2));
    }
    CHECK(std::abs(a1.radians() - f1) < 1e-9);
  }
  CHECK(compared > 5000);
}

TEST_CASE("gaussian elimination: rank, solve, complement") {
  std::vector<Vec> cols = {v8({1, 0, 0}), v8({0, 1, 0}), v8({1, 1, 0})};
  CHECK(rank_of(cols) == 2);
  std::vector<Rat> x;
  CHECK(solve_linear(cols, v8({2, 3, 0}), x));
  CHECK(solve_linear({v8({1, 0, 0}), v8({0, 1, 0})}, v8({0, 0, 1}), x) == false);
  std::vector<Vec> amb = {v8({1, 0, 0}), v8({0, 1, 0}), v8({0, 0, 1})};
  auto comp = orthogonal_complement({v8({1, 1, 0})}, amb);
  CHECK(comp.size() == 2);
  for (const Vec& c : comp) CHECK(dot(c, v8({1, 1, 0})).is_zero());
  Vec p = project_out(v8({3, 1, 2}), {v8({1, 0, 0})});
  CHECK(p == v8({0, 1, 2}));
}

TEST_CASE("relint_meets_cone: listed examples") {
  Vec e1 = Vec::unit(3, 0), e2 = Vec::unit(3, 1);
  RationalCone c1{{e1}};
  CHECK(relint_meets_cone({e1}, c1));
  CHECK_FALSE(relint_meets_cone({e2}, c1));
  RationalCone c2{{e1, e2}};
  CHECK(relint_meets_cone({e1 + e2}, c2));
  // strictness: the relative interior of the edge {e1,e2} does not meet
  // the cone on the ray e1 alone
  CHECK_FALSE(relint_meets_cone({e1, e2}, c1));
  CHECK(relint_meets_cone({e1, e2}, c2));
}

TEST_CASE("cone pointedness") {
  Vec e1 = Vec::unit(3, 0), e2 = Vec::unit(3, 1);
  CHECK(cone_is_pointed({e1, e2}));
  CHECK_FALSE(cone_is_pointed({e1, -e1}));
  CHECK_FALSE(cone_is_pointed({e1, e2, -(e1 + e2)}));
  CHECK(cone_is_pointed({e1, e2, e1 + e2}));
}

TEST_CASE("relint_meets_cone agrees with a Fourier-Motzkin oracle") {
  PRNG rng(424242);
  int agree = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    int d = 2 + (int)(rng.next() % 2); // dims 2..3
    int k = 1 + (int)(rng.next() % 2);
    int m = 1 + (int)(rng.next() % 3);
    std::vector<Vec> face, gens;
    for (int i = 0; i < k; ++i) {
      Vec f(d);
      bool z = true;
      for (int j = 0; j < d; ++j) {
        f[j] = Rat((std::int64_t)(rng.next() % 7) - 3);
        z = z && f[j].is_zero();
      }
      if (z) f[0] = Rat(1);
      face.push_back(f);
    }
    if (k == 2 && rank_of(face) < 2) continue;
    for (int i = 0; i < m; ++i) {
      Vec g(d);
      bool z = true;
      for (int j = 0; j < d; ++j) {
        g[j] = Rat((std::int64_t)(rng.next() % 7) - 3);
        z = z && g[j].is_zero();
      }
      if (z) g[1 % d] = Rat(1);
      gens.push_back(g);
    }
    if (!cone_is_pointed(gens)) continue;
    bool lp = relint_meets_cone(face, RationalCone{gens});
    bool fm = FMOracle::feasible(face, gens);
    CHECK(lp == fm);
    ++agree;
  }
  CHECK(agree > 600);
}

TEST_CASE("relint_meets_subspace") {
  Vec e1 = Vec::unit(3, 0), e2 = Vec::unit(3, 1), e3 = Vec::unit(3, 2);
  CHECK(relint_meets_subspace({e1, e2}, {e1 + e2}));
  CHECK_FALSE(relint_meets_subspace({e1, e2}, {e3}));
  CHECK(relint_meets_subspace({e1, e2}, {e1 - e2, e1 + e2}));
  CHECK_FALSE(relint_meets_subspace({e1, e2}, {e1 - e2}));
}
