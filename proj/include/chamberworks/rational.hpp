#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace chamberworks {

/// Exact rational number with int64 numerator/denominator.
///
/// All intermediates go through __int128 and results are checked to fit
/// back into int64 after gcd reduction.  Entries arising in this project
/// are quotients of small minors (Hadamard-bounded well below 2^63), so an
/// overflow indicates a logic error, not a precision problem; we throw
/// rather than silently wrap.
class Rat {
public:
  Rat() : num_(0), den_(1) {}
  Rat(std::int64_t n) : num_(n), den_(1) {}
  Rat(std::int64_t n, std::int64_t d) { assign(n, d); }

  static Rat from_i128(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    Rat r;
    r.num_ = fit(n);
    r.den_ = fit(d);
    return r;
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  Rat operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return from_i128((__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_,
                     (__int128)a.den_ * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return from_i128((__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_,
                     (__int128)a.den_ * b.den_);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return from_i128((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
    return from_i128((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
  }

  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  double to_double() const { return (double)num_ / (double)den_; }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  std::size_t hash() const {
    std::uint64_t h = (std::uint64_t)num_ * 0x9e3779b97f4a7c15ull;
    h ^= (std::uint64_t)den_ + 0x517cc1b727220a95ull + (h << 6) + (h >> 2);
    return h;
  }

private:
  void assign(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    num_ = n;
    den_ = d;
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a < 0 ? -a : a;
  }

  static std::int64_t fit(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
      throw std::overflow_error("Rat: value exceeds 64-bit range");
    return (std::int64_t)v;
  }

  std::int64_t num_;
  std::int64_t den_;
};

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

/// Exact nonnegative square root when the argument is a perfect rational
/// square; returns false otherwise.
inline bool rational_sqrt(const Rat& r, Rat& out) {
  if (r.sign() < 0) return false;
  auto isqrt = [](std::int64_t v, std::int64_t& root) {
    std::int64_t s = (std::int64_t)std::llround(std::sqrt((double)v));
    for (std::int64_t c = s > 1 ? s - 1 : 0; c <= s + 1; ++c)
      if (c * c == v) {
        root = c;
        return true;
      }
    return false;
  };
  std::int64_t rn, rd;
  if (!isqrt(r.num(), rn) || !isqrt(r.den(), rd)) return false;
  out = Rat(rn, rd);
  return true;
}

} // namespace chamberworks
