#include "chamberworks/weyl.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace chamberworks {

FoldResult fold_to_chamber(const RootSystem& rs, const Vec& x) {
  if (x.is_zero()) throw std::domain_error("fold_to_chamber: zero vector");
  FoldResult fr;
  fr.w = Mat::identity(rs.ambient);
  fr.x0 = x;
  std::vector<Mat> refl;
  for (const Vec& s : rs.simples) refl.push_back(Mat::reflection(s));
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < rs.rank; ++i) {
      if (dot(fr.x0, rs.simples[i]).sign() < 0) {
        fr.x0 = refl[i].apply(fr.x0);
        fr.w = refl[i] * fr.w;
        fr.word.push_back(i);
        moved = true;
      }
    }
  }
  return fr;
}

std::vector<std::pair<int, int>> canonical_involution(const RootSystem& rs) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < rs.rank; ++i) {
    Vec folded = fold_to_chamber(rs, -rs.fundamental_vertices[i]).x0;
    Vec c = canonical_ray(folded);
    int image = -1;
    for (int j = 0; j < rs.rank; ++j)
      if (canonical_ray(rs.fundamental_vertices[j]) == c) {
        image = rs.labels[j];
        break;
      }
    if (image < 0)
      throw std::logic_error("folded antipode is not a fundamental vertex");
    out.push_back({rs.labels[i], image});
  }
  return out;
}

namespace {

std::uint64_t pack_key(const std::vector<std::uint16_t>& imgs) {
  std::uint64_t k = 0;
  for (std::uint16_t v : imgs) k = (k << 8) | (std::uint64_t)(v & 0xff);
  return k;
}

} // namespace

WeylEnumeration WeylEnumeration::run(RootSystem rs_in, bool allow_large) {
  const RootSystem& rs = rs_in;
  if (rs.family == "E8")
    throw std::invalid_argument(
        "enumeration refused for E8 (order 696,729,600)");
  if (rs.family == "E7" && !allow_large)
    throw std::invalid_argument(
        "E7 enumeration is opt-in; pass allow_large=true");
  if (rs.family == "A" && rs.rank > 7)
    throw std::invalid_argument("A_n enumeration limited to n <= 7");
  if (rs.family == "B" && rs.rank > 6)
    throw std::invalid_argument("B_n enumeration limited to n <= 6");
  if (rs.family == "D" && rs.rank > 6)
    throw std::invalid_argument("D_n enumeration limited to n <= 6");
  if (rs.roots.size() > 255)
    throw std::invalid_argument("root set too large for enumeration");

  int nroots = (int)rs.roots.size();
  int k = rs.rank;

  // generator permutations of the root set
  std::vector<std::vector<std::uint16_t>> gen_perm(k);
  for (int g = 0; g < k; ++g) {
    Mat m = Mat::reflection(rs.simples[g]);
    gen_perm[g].resize(nroots);
    for (int r = 0; r < nroots; ++r) {
      int id = rs.root_id(m.apply(rs.roots[r]));
      if (id < 0) throw std::logic_error("reflection does not permute roots");
      gen_perm[g][r] = (std::uint16_t)id;
    }
  }

  WeylEnumeration we;

  std::unordered_set<std::uint64_t> seen;
  std::deque<std::vector<std::uint16_t>> frontier; // full root perms
  std::vector<std::uint16_t> id_perm(nroots);
  for (int r = 0; r < nroots; ++r) id_perm[r] = (std::uint16_t)r;

  auto record = [&](const std::vector<std::uint16_t>& perm) -> bool {
    std::vector<std::uint16_t> imgs(perm.begin(), perm.begin() + k);
    if (!seen.insert(pack_key(imgs)).second) return false;
    we.elements_.push_back(std::move(imgs));
    return true;
  };

  record(id_perm);
  frontier.push_back(id_perm);
  while (!frontier.empty()) {
    std::vector<std::uint16_t> cur = std::move(frontier.front());
    frontier.pop_front();
    for (int g = 0; g < k; ++g) {
      std::vector<std::uint16_t> nxt(nroots);
      for (int r = 0; r < nroots; ++r) nxt[r] = gen_perm[g][cur[r]];
      if (record(nxt)) frontier.push_back(std::move(nxt));
    }
  }

  // decomposition data for matrix reconstruction
  std::vector<Vec> ambient_basis;
  for (int i = 0; i < rs.ambient; ++i)
    ambient_basis.push_back(Vec::unit(rs.ambient, i));
  we.comp_basis_ = orthogonal_complement(rs.simples, ambient_basis);
  // invert B = [simples | comp] (columns) by solving B y = e_i
  int n = rs.ambient;
  std::vector<Vec> bcols(rs.simples.begin(), rs.simples.end());
  for (const Vec& c : we.comp_basis_) bcols.push_back(c);
  we.binv_.assign(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<Rat> y;
    if (!solve_linear(bcols, Vec::unit(n, i), y))
      throw std::logic_error("decomposition basis is singular");
    for (int j = 0; j < n; ++j) we.binv_[j][i] = y[j];
  }
  we.rs_ = std::move(rs_in);
  return we;
}

Mat WeylEnumeration::matrix_of(std::size_t idx) const {
  const RootSystem& rs = rs_;
  int n = rs.ambient;
  int k = rs.rank;
  // The recorded image root id only fixes the ray; the exact image vector
  // is the canonical ray rescaled so its norm matches the preimage (the
  // action is orthogonal, and norms within one W-orbit of canonical rays
  // differ by rational squares).
  std::vector<Vec> img;
  for (int j = 0; j < k; ++j) {
    const Vec& c = rs.roots[elements_[idx][j]];
    Rat t;
    if (!rational_sqrt(norm2(rs.simples[j]) / norm2(c), t))
      throw std::logic_error("irrational root rescaling");
    img.push_back(t * c);
  }
  // columns of the resulting matrix: M e_i = sum_j coeff * ...
  Mat m(n);
  for (int col = 0; col < n; ++col) {
    // B^{-1} e_col gives coordinates (c, d) of e_col in [simples | comp]
    // M e_col = sum c_j img_j + sum d_j comp_j
    Vec out(n);
    for (int j = 0; j < k; ++j) {
      const Rat& c = binv_[j][col];
      if (c.is_zero()) continue;
      out = out + c * img[j];
    }
    for (std::size_t j = 0; j < comp_basis_.size(); ++j) {
      const Rat& d = binv_[k + j][col];
      if (d.is_zero()) continue;
      out = out + d * comp_basis_[j];
    }
    for (int row = 0; row < n; ++row) m.at(row, col) = out[row];
  }
  return m;
}

Vec WeylEnumeration::apply(std::size_t idx, const Vec& v) const {
  const RootSystem& rs = rs_;
  int n = rs.ambient;
  int k = rs.rank;
  // coordinates of v in the [simples | comp] basis
  Vec out(n);
  for (int j = 0; j < k; ++j) {
    Rat c;
    for (int i = 0; i < n; ++i)
      if (!binv_[j][i].is_zero() && !v[i].is_zero()) c += binv_[j][i] * v[i];
    if (c.is_zero()) continue;
    const Vec& root = rs.roots[elements_[idx][j]];
    Rat t;
    if (!rational_sqrt(norm2(rs.simples[j]) / norm2(root), t))
      throw std::logic_error("irrational root rescaling");
    out = out + (c * t) * root;
  }
  for (std::size_t j = 0; j < comp_basis_.size(); ++j) {
    Rat d;
    for (int i = 0; i < n; ++i)
      if (!binv_[k + j][i].is_zero() && !v[i].is_zero())
        d += binv_[k + j][i] * v[i];
    if (!d.is_zero()) out = out + d * comp_basis_[j];
  }
  return out;
}

} // namespace chamberworks
