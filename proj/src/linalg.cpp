#include "chamberworks/linalg.hpp"

namespace chamberworks {

namespace {

// Row echelon on a dense rational matrix (rows x cols), in place.
// Returns the rank; pivot column indices appended to pivots if non-null.
int echelon(std::vector<std::vector<Rat>>& m, std::vector<int>* pivots) {
  int rows = (int)m.size();
  int cols = rows ? (int)m[0].size() : 0;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (!m[i][c].is_zero()) { p = i; break; }
    if (p < 0) continue;
    std::swap(m[p], m[r]);
    Rat inv = Rat(1) / m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Rat f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return r;
}

} // namespace

int rank_of(const std::vector<Vec>& cols) {
  if (cols.empty()) return 0;
  int n = cols[0].dim();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(cols.size()));
  for (int i = 0; i < n; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m[i][j] = cols[j][i];
  return echelon(m, nullptr);
}

bool solve_linear(const std::vector<Vec>& cols, const Vec& rhs,
                  std::vector<Rat>& x) {
  int n = rhs.dim();
  int k = (int)cols.size();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(k + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) m[i][j] = cols[j][i];
    m[i][k] = rhs[i];
  }
  std::vector<int> pivots;
  echelon(m, &pivots);
  for (int c : pivots)
    if (c == k) return false; // pivot in the rhs column: inconsistent
  x.assign(k, Rat(0));
  int r = 0;
  for (int c : pivots) {
    x[c] = m[r][k];
    ++r;
  }
  return true;
}

std::vector<Vec> orthogonal_complement(const std::vector<Vec>& vs,
                                       const std::vector<Vec>& ambient_basis) {
  // Want u = sum_j y_j b_j with <u, v_i> = 0 for all i.
  int k = (int)ambient_basis.size();
  std::vector<std::vector<Rat>> m(vs.size(), std::vector<Rat>(k));
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (int j = 0; j < k; ++j) m[i][j] = dot(vs[i], ambient_basis[j]);
  std::vector<int> pivots;
  echelon(m, &pivots);
  std::vector<bool> is_pivot(k, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Vec> out;
  for (int f = 0; f < k; ++f) {
    if (is_pivot[f]) continue;
    // free column f: back-substitute y_f = 1
    std::vector<Rat> y(k, Rat(0));
    y[f] = Rat(1);
    int r = 0;
    for (int c : pivots) {
      y[c] = -m[r][f];
      ++r;
    }
    Vec u(ambient_basis[0].dim());
    for (int j = 0; j < k; ++j)
      if (!y[j].is_zero()) u = u + y[j] * ambient_basis[j];
    out.push_back(u);
  }
  return out;
}

Vec project_out(const Vec& v, const std::vector<Vec>& vs) {
  // Gram-Schmidt against an orthogonalized copy of vs.
  std::vector<Vec> ortho;
  for (const Vec& w : vs) {
    Vec u = w;
    for (const Vec& o : ortho) u = u - (dot(u, o) / norm2(o)) * o;
    if (!u.is_zero()) ortho.push_back(u);
  }
  Vec r = v;
  for (const Vec& o : ortho) r = r - (dot(r, o) / norm2(o)) * o;
  return r;
}

} // namespace chamberworks
