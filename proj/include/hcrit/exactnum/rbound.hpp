#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "hcrit/exactnum/rational.hpp"

namespace hcrit {

/// Owning wrapper around an mpfr_t.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 64);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

  double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(v_, rnd); }
  std::string to_string(int digits = 17) const;

  /// x = mantissa * 2^exponent exactly. Zero maps to (0, 0).
  std::pair<Integer, long> mantissa_exponent() const;
  static BigFloat from_mantissa_exponent(const Integer& m, long e);

  /// Exact conversion of a dyadic value to a rational. Throws on NaN/inf.
  Rational to_rational() const;

  friend int cmp(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_); }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) <= 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return cmp(a, b) == 0; }

 private:
  mpfr_t v_;
};

/// Closed interval [lo, hi] with dyadic endpoints. Every operation rounds
/// outward, so the result contains the exact result for any choice of points
/// in the operands. The precision of a result is the larger of the operand
/// precisions.
class RBound {
 public:
  RBound();  // [0, 0]
  RBound(BigFloat lo, BigFloat hi);

  /// Exact when the integer fits in `prec` bits; otherwise outward rounded.
  static RBound from_int(const Integer& z, mpfr_prec_t prec = 64);
  static RBound from_rational(const Rational& q, mpfr_prec_t prec);
  static RBound from_double(double x, mpfr_prec_t prec = 64);
  static RBound interval(const Rational& lo, const Rational& hi, mpfr_prec_t prec);
  static RBound hull(const RBound& a, const RBound& b);

  static RBound pi(mpfr_prec_t prec);
  static RBound log_of(const Integer& n, mpfr_prec_t prec);  // n > 0
  static RBound log_of(const Rational& q, mpfr_prec_t prec);  // q > 0

  const BigFloat& lo() const { return lo_; }
  const BigFloat& hi() const { return hi_; }
  double lo_d() const { return lo_.to_double(MPFR_RNDD); }
  double hi_d() const { return hi_.to_double(MPFR_RNDU); }
  double mid_d() const;
  /// hi - lo rounded up.
  double width() const;
  BigFloat width_big() const;
  mpfr_prec_t prec() const { return std::max(lo_.prec(), hi_.prec()); }
  RBound with_prec(mpfr_prec_t prec) const;

  bool contains(const Rational& q) const;
  bool contains(double x) const;
  bool contains(const RBound& other) const;
  bool overlaps(const RBound& other) const;
  bool contains_zero() const;
  bool is_point() const { return lo_ == hi_; }
  int sign_lo() const { return mpfr_sgn(lo_.get()); }
  int sign_hi() const { return mpfr_sgn(hi_.get()); }
  bool certainly_positive() const { return sign_lo() > 0; }
  bool certainly_negative() const { return sign_hi() < 0; }
  bool certainly_nonnegative() const { return sign_lo() >= 0; }

  /// Both endpoints moved to at least `floor` (used for quantities known to be
  /// bounded below, like canonical heights).
  RBound clamp_below(const Rational& floor) const;

  std::string to_string(int digits = 12) const;

  RBound operator-() const;
  RBound& operator+=(const RBound& o) { return *this = *this + o; }
  RBound& operator-=(const RBound& o) { return *this = *this - o; }
  RBound& operator*=(const RBound& o) { return *this = *this * o; }
  RBound& operator/=(const RBound& o) { return *this = *this / o; }

  friend RBound operator+(const RBound& a, const RBound& b);
  friend RBound operator-(const RBound& a, const RBound& b);
  friend RBound operator*(const RBound& a, const RBound& b);
  /// Throws std::domain_error when b contains 0.
  friend RBound operator/(const RBound& a, const RBound& b);

  friend RBound operator*(const RBound& a, const Rational& q);
  friend RBound operator*(const Rational& q, const RBound& a) { return a * q; }
  friend RBound operator/(const RBound& a, const Rational& q);
  friend RBound operator+(const RBound& a, const Rational& q);
  friend RBound operator-(const RBound& a, const Rational& q);

 private:
  BigFloat lo_, hi_;
};

/// Throws std::domain_error unless x.lo > 0.
RBound log(const RBound& x);
/// max(0, log x) for x >= 0; an interval straddling 1 gives [0, max(0, log hi)].
RBound log_plus(const RBound& x);
RBound exp(const RBound& x);
/// Throws std::domain_error unless x.lo >= 0.
RBound sqrt(const RBound& x);
RBound abs(const RBound& x);
RBound sqr(const RBound& x);
RBound max(const RBound& a, const RBound& b);
RBound min(const RBound& a, const RBound& b);
/// x^y = exp(y log x) for x > 0.
RBound pow(const RBound& x, const RBound& y);

/// Rectangle in C with interval coordinates.
struct CBound {
  RBound re, im;

  static CBound from_parts(const BigFloat& re, const BigFloat& im);
  CBound operator-() const { return {-re, -im}; }
  friend CBound operator+(const CBound& a, const CBound& b) { return {a.re + b.re, a.im + b.im}; }
  friend CBound operator-(const CBound& a, const CBound& b) { return {a.re - b.re, a.im - b.im}; }
  friend CBound operator*(const CBound& a, const CBound& b);
  friend CBound operator*(const CBound& a, const RBound& r) { return {a.re * r, a.im * r}; }
  friend CBound operator/(const CBound& a, const CBound& b);

  RBound norm2() const { return sqr(re) + sqr(im); }
  RBound abs() const { return sqrt(norm2()); }
  /// Enlarges the rectangle by radius r in each direction.
  CBound inflate(const RBound& r) const;
  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
  double max_width() const { return std::max(re.width(), im.width()); }
};

}  // namespace hcrit
