#pragma once

#include <array>
#include <string>

#include "hcrit/exactnum/rational.hpp"

namespace hcrit {

/// Point of P^1(Q) as a coprime integer pair [x : y] with y > 0, or [1 : 0]
/// for infinity.
class ProjPoint {
 public:
  ProjPoint() : x_(0), y_(1) {}
  /// Throws std::invalid_argument for [0 : 0].
  ProjPoint(Integer x, Integer y);
  ProjPoint(const Rational& q) : ProjPoint(q.get_num(), q.get_den()) {}  // NOLINT
  static ProjPoint infinity() { return ProjPoint(1, 0); }
  /// "p/q", an integer, or "inf".
  static ProjPoint parse(const std::string& text);

  const Integer& x() const { return x_; }
  const Integer& y() const { return y_; }
  bool is_infinity() const { return y_ == 0; }
  /// Throws std::domain_error at infinity.
  Rational affine() const;
  std::string to_string() const;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.x_ == b.x_ && a.y_ == b.y_; }
  friend bool operator<(const ProjPoint& a, const ProjPoint& b) {
    return a.y_ != b.y_ ? a.y_ < b.y_ : a.x_ < b.x_;
  }

 private:
  Integer x_, y_;
};

/// z -> (a z + b) / (c z + d) with ad - bc != 0; acts on column vectors (x, y).
struct Mobius {
  Rational a = 1, b = 0, c = 0, d = 1;

  static Mobius identity() { return {}; }
  /// Throws std::invalid_argument if singular.
  static Mobius make(Rational a, Rational b, Rational c, Rational d);
  Rational det() const { return a * d - b * c; }
  Mobius inverse() const;
  ProjPoint apply(const ProjPoint& p) const;
  /// Matrix product: (this * o)(z) = this(o(z)).
  Mobius operator*(const Mobius& o) const;
  /// Proportional integer matrix with coprime entries.
  std::array<Integer, 4> integer_matrix() const;
  std::string to_string() const;
};

}  // namespace hcrit
