#include "chamberworks/lp.hpp"

#include <stdexcept>

namespace chamberworks {

namespace detail {

// Phase-1 simplex with Bland's rule on the tableau
//   [ A | I ] [x s]^T = b,  minimize sum(s),  x,s >= 0.
// Feasible iff the optimum is zero.  Bland's rule guarantees termination.
bool lp_feasible(const std::vector<std::vector<Rat>>& A,
                 const std::vector<Rat>& b) {
  int m = (int)A.size();
  int n = m ? (int)A[0].size() : 0;
  if (m == 0) return true;

  // tableau: m rows, n structural + m artificial columns + rhs
  int cols = n + m;
  std::vector<std::vector<Rat>> T(m, std::vector<Rat>(cols + 1));
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    int flip = b[i].sign() < 0 ? -1 : 1;
    for (int j = 0; j < n; ++j) T[i][j] = Rat(flip) * A[i][j];
    T[i][n + i] = Rat(1);
    T[i][cols] = Rat(flip) * b[i];
    basis[i] = n + i;
  }

  // objective row: minimize sum of artificials == maximize -sum
  // z[j] = sum over rows of T[i][j] for artificial basis; track reduced costs
  std::vector<Rat> z(cols + 1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= cols; ++j) z[j] += T[i][j];

  while (true) {
    // Bland: entering = lowest-index column with positive reduced cost,
    // excluding artificials (driving them back in cannot help).
    int enter = -1;
    for (int j = 0; j < n; ++j) {
      if (z[j].sign() > 0) { enter = j; break; }
    }
    if (enter < 0) break;
    // ratio test, Bland tie-break on lowest basis index
    int leave = -1;
    Rat best;
    for (int i = 0; i < m; ++i) {
      if (T[i][enter].sign() <= 0) continue;
      Rat ratio = T[i][cols] / T[i][enter];
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave < 0) break; // unbounded in phase 1 cannot happen; be safe
    // pivot
    Rat piv = T[leave][enter];
    for (int j = 0; j <= cols; ++j) T[leave][j] /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == leave || T[i][enter].is_zero()) continue;
      Rat f = T[i][enter];
      for (int j = 0; j <= cols; ++j) T[i][j] -= f * T[leave][j];
    }
    if (!z[enter].is_zero()) {
      Rat f = z[enter];
      for (int j = 0; j <= cols; ++j) z[j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }
  return z[cols].is_zero();
}

} // namespace detail

bool cone_is_pointed(const std::vector<Vec>& gens) {
  if (gens.empty()) return true;
  int n = gens[0].dim();
  int k = (int)gens.size();
  // Non-pointed iff exists mu >= 0, sum mu = 1, sum mu_j g_j = 0.
  std::vector<std::vector<Rat>> A(n + 1, std::vector<Rat>(k));
  std::vector<Rat> b(n + 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) A[i][j] = gens[j][i];
  for (int j = 0; j < k; ++j) A[n][j] = Rat(1);
  b[n] = Rat(1);
  return !detail::lp_feasible(A, b);
}

bool relint_meets_cone(const std::vector<Vec>& face_rays,
                       const RationalCone& cone) {
  if (face_rays.empty()) throw std::invalid_argument("relint: empty face");
  int n = face_rays[0].dim();
  int k = (int)face_rays.size();
  int m = (int)cone.generators.size();
  // lambda_i >= 1 (scale invariance makes strict positivity wlog >= 1),
  // mu_j >= 0:  sum (1 + t_i) f_i - sum mu_j g_j = 0
  //        =>   sum t_i f_i - sum mu_j g_j = -sum f_i,  t, mu >= 0.
  std::vector<std::vector<Rat>> A(n, std::vector<Rat>(k + m));
  std::vector<Rat> b(n);
  for (int i = 0; i < n; ++i) {
    Rat s;
    for (int j = 0; j < k; ++j) {
      A[i][j] = face_rays[j][i];
      s += face_rays[j][i];
    }
    for (int j = 0; j < m; ++j) A[i][k + j] = -cone.generators[j][i];
    b[i] = -s;
  }
  return detail::lp_feasible(A, b);
}

bool relint_meets_subspace(const std::vector<Vec>& face_rays,
                           const std::vector<Vec>& subspace_gens) {
  if (face_rays.empty()) throw std::invalid_argument("relint: empty face");
  int n = face_rays[0].dim();
  int k = (int)face_rays.size();
  int m = (int)subspace_gens.size();
  // sum t_i f_i - sum (u_j - w_j) s_j = -sum f_i with t,u,w >= 0
  std::vector<std::vector<Rat>> A(n, std::vector<Rat>(k + 2 * m));
  std::vector<Rat> b(n);
  for (int i = 0; i < n; ++i) {
    Rat s;
    for (int j = 0; j < k; ++j) {
      A[i][j] = face_rays[j][i];
      s += face_rays[j][i];
    }
    for (int j = 0; j < m; ++j) {
      A[i][k + 2 * j] = -subspace_gens[j][i];
      A[i][k + 2 * j + 1] = subspace_gens[j][i];
    }
    b[i] = -s;
  }
  return detail::lp_feasible(A, b);
}

} // namespace chamberworks
