#pragma once

#include "chamberworks/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace chamberworks {

/// A spherical angle in [0, pi], encoded exactly by the sign of its cosine
/// and the square of its cosine.  Every angle between rational rays has a
/// rational squared cosine even when the norms themselves are irrational,
/// so all metric comparisons stay exact.
///
/// Total order: theta1 < theta2 iff cos(theta1) > cos(theta2), compared
/// lexicographically by (sign, cos^2).
class ExactAngle {
public:
  ExactAngle() : sign_(1), cos2_(1) {} // zero angle

  ExactAngle(int cos_sign, Rat cos_squared)
      : sign_(cos_sign), cos2_(cos_squared) {
    if (cos_sign < -1 || cos_sign > 1)
      throw std::invalid_argument("ExactAngle: bad sign");
    if (cos2_.sign() < 0 || cos2_ > Rat(1))
      throw std::invalid_argument("ExactAngle: cos^2 outside [0,1]");
    if (sign_ == 0 && !cos2_.is_zero())
      throw std::invalid_argument("ExactAngle: zero sign with nonzero cos^2");
    if (cos2_.is_zero()) sign_ = 0;
  }

  static ExactAngle zero() { return ExactAngle(1, Rat(1)); }
  static ExactAngle right() { return ExactAngle(0, Rat(0)); }
  static ExactAngle straight() { return ExactAngle(-1, Rat(1)); }

  /// Angle with cos = d / sqrt(n2a * n2b); caller supplies the inner
  /// product and both squared norms.
  static ExactAngle from_dot(const Rat& d, const Rat& n2a, const Rat& n2b) {
    return ExactAngle(d.sign(), d * d / (n2a * n2b));
  }

  int cos_sign() const { return sign_; }
  const Rat& cos_squared() const { return cos2_; }

  bool is_zero() const { return sign_ > 0 && cos2_ == Rat(1); }
  bool is_right() const { return sign_ == 0; }
  bool is_straight() const { return sign_ < 0 && cos2_ == Rat(1); }

  /// Signed comparison of cosines: positive if cos(*this) > cos(o).
  int compare_cos(const ExactAngle& o) const {
    if (sign_ != o.sign_) return sign_ > o.sign_ ? 1 : -1;
    if (cos2_ == o.cos2_) return 0;
    if (sign_ >= 0) return cos2_ > o.cos2_ ? 1 : -1;
    return cos2_ < o.cos2_ ? 1 : -1;
  }

  friend bool operator<(const ExactAngle& a, const ExactAngle& b) {
    return a.compare_cos(b) > 0;
  }
  friend bool operator>(const ExactAngle& a, const ExactAngle& b) { return b < a; }
  friend bool operator<=(const ExactAngle& a, const ExactAngle& b) { return !(b < a); }
  friend bool operator>=(const ExactAngle& a, const ExactAngle& b) { return !(a < b); }
  friend bool operator==(const ExactAngle& a, const ExactAngle& b) {
    return a.sign_ == b.sign_ && a.cos2_ == b.cos2_;
  }
  friend bool operator!=(const ExactAngle& a, const ExactAngle& b) { return !(a == b); }

  double radians() const {
    double c = sign_ * std::sqrt(cos2_.to_double());
    if (c > 1) c = 1;
    if (c < -1) c = -1;
    return std::acos(c);
  }

  std::string str() const {
    return std::string(sign_ > 0 ? "+" : (sign_ < 0 ? "-" : "0")) + "sqrt(" +
           cos2_.str() + ")";
  }

  std::size_t hash() const {
    return cos2_.hash() * 3 + (std::size_t)(sign_ + 1);
  }

private:
  int sign_;
  Rat cos2_;
};

/// Spherical distance between the rays through u and v.
inline ExactAngle angle(const Vec& u, const Vec& v) {
  if (u.is_zero() || v.is_zero())
    throw std::domain_error("angle: zero vector");
  return ExactAngle::from_dot(dot(u, v), norm2(u), norm2(v));
}

} // namespace chamberworks
