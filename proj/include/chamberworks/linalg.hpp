#pragma once

#include "chamberworks/rational.hpp"

#include <array>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace chamberworks {

constexpr int kMaxDim = 8;

/// Ambient vector with exact rational coordinates.  Fixed capacity 8
/// (largest ambient space used is R^8), runtime dimension.
class Vec {
public:
  Vec() : dim_(0) {}
  explicit Vec(int dim) : dim_(dim) {
    if (dim < 0 || dim > kMaxDim) throw std::invalid_argument("Vec: bad dim");
  }
  Vec(std::initializer_list<Rat> xs) : dim_((int)xs.size()) {
    if (dim_ > kMaxDim) throw std::invalid_argument("Vec: bad dim");
    int i = 0;
    for (const Rat& x : xs) c_[i++] = x;
  }

  static Vec unit(int dim, int i) {
    Vec v(dim);
    v[i] = Rat(1);
    return v;
  }

  int dim() const { return dim_; }
  Rat& operator[](int i) { return c_[i]; }
  const Rat& operator[](int i) const { return c_[i]; }

  bool is_zero() const {
    for (int i = 0; i < dim_; ++i)
      if (!c_[i].is_zero()) return false;
    return true;
  }

  friend Vec operator+(const Vec& a, const Vec& b) {
    Vec r(a.dim_);
    for (int i = 0; i < a.dim_; ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
  }
  friend Vec operator-(const Vec& a, const Vec& b) {
    Vec r(a.dim_);
    for (int i = 0; i < a.dim_; ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
  }
  Vec operator-() const {
    Vec r(dim_);
    for (int i = 0; i < dim_; ++i) r.c_[i] = -c_[i];
    return r;
  }
  friend Vec operator*(const Rat& s, const Vec& v) {
    Vec r(v.dim_);
    for (int i = 0; i < v.dim_; ++i) r.c_[i] = s * v.c_[i];
    return r;
  }

  friend bool operator==(const Vec& a, const Vec& b) {
    if (a.dim_ != b.dim_) return false;
    for (int i = 0; i < a.dim_; ++i)
      if (a.c_[i] != b.c_[i]) return false;
    return true;
  }
  friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }

  std::size_t hash() const {
    std::size_t h = (std::size_t)dim_;
    for (int i = 0; i < dim_; ++i)
      h = h * 0x100000001b3ull ^ c_[i].hash();
    return h;
  }

private:
  std::array<Rat, kMaxDim> c_;
  int dim_;
};

inline Rat dot(const Vec& a, const Vec& b) {
  Rat s;
  for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat norm2(const Vec& v) { return dot(v, v); }

/// Primitive integer representative of the ray through v, orientation
/// preserved.  Two vectors represent the same spherical point iff their
/// canonical forms are equal.
inline Vec canonical_ray(const Vec& v) {
  if (v.is_zero()) throw std::domain_error("canonical_ray: zero vector");
  std::int64_t l = 1;
  for (int i = 0; i < v.dim(); ++i)
    l = std::lcm(l, v[i].den());
  std::int64_t g = 0;
  Vec r(v.dim());
  std::array<std::int64_t, kMaxDim> w{};
  for (int i = 0; i < v.dim(); ++i) {
    Rat x = v[i] * Rat(l);
    w[i] = x.num();
    g = std::gcd(g, w[i] < 0 ? -w[i] : w[i]);
  }
  for (int i = 0; i < v.dim(); ++i) r[i] = Rat(w[i] / g);
  return r;
}

/// Canonical wall normal: primitive integer with first nonzero coordinate
/// positive (walls are unoriented).
inline Vec canonical_normal(const Vec& v) {
  Vec r = canonical_ray(v);
  for (int i = 0; i < r.dim(); ++i) {
    if (r[i].is_zero()) continue;
    if (r[i].sign() < 0) return -r;
    return r;
  }
  return r;
}

class Mat {
public:
  Mat() : n_(0) {}
  explicit Mat(int n) : n_(n) {
    if (n < 0 || n > kMaxDim) throw std::invalid_argument("Mat: bad dim");
  }

  static Mat identity(int n) {
    Mat m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
  }

  /// Reflection in the hyperplane orthogonal to r.
  static Mat reflection(const Vec& r) {
    int n = r.dim();
    Mat m = identity(n);
    Rat n2 = norm2(r);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m.at(i, j) -= Rat(2) * r[i] * r[j] / n2;
    return m;
  }

  int dim() const { return n_; }
  Rat& at(int i, int j) { return c_[i * kMaxDim + j]; }
  const Rat& at(int i, int j) const { return c_[i * kMaxDim + j]; }

  Vec apply(const Vec& v) const {
    Vec r(n_);
    for (int i = 0; i < n_; ++i) {
      Rat s;
      for (int j = 0; j < n_; ++j) {
        if (!at(i, j).is_zero() && !v[j].is_zero()) s += at(i, j) * v[j];
      }
      r[i] = s;
    }
    return r;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    Mat r(a.n_);
    for (int i = 0; i < a.n_; ++i)
      for (int k = 0; k < a.n_; ++k) {
        const Rat& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < a.n_; ++j) {
          if (b.at(k, j).is_zero()) continue;
          r.at(i, j) += aik * b.at(k, j);
        }
      }
    return r;
  }

  Mat transpose() const {
    Mat r(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    if (a.n_ != b.n_) return false;
    for (int i = 0; i < a.n_; ++i)
      for (int j = 0; j < a.n_; ++j)
        if (a.at(i, j) != b.at(i, j)) return false;
    return true;
  }

private:
  std::array<Rat, kMaxDim * kMaxDim> c_;
  int n_;
};

/// Rank of the matrix whose columns are the given vectors.
int rank_of(const std::vector<Vec>& cols);

/// Solve sum_j x_j * cols[j] = rhs exactly.  Returns false if inconsistent;
/// if the system is underdetermined any one solution is produced.
bool solve_linear(const std::vector<Vec>& cols, const Vec& rhs,
                  std::vector<Rat>& x);

/// Basis of the orthogonal complement of span(vs) inside span(ambient_basis).
std::vector<Vec> orthogonal_complement(const std::vector<Vec>& vs,
                                       const std::vector<Vec>& ambient_basis);

/// Component of v orthogonal to span(vs).
Vec project_out(const Vec& v, const std::vector<Vec>& vs);

} // namespace chamberworks
