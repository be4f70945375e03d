#pragma once

#include <string>

#include "hcrit/certify/certificate.hpp"
#include "hcrit/exactnum/place.hpp"

namespace hcrit {

/// A real quantity attached to a place. At a prime p it is held exactly as
/// [lo, hi] * log p with rational lo <= hi; at the archimedean place it is an
/// enclosure.
class LocalValue {
 public:
  static LocalValue archimedean(RBound value);
  static LocalValue padic(const Place& p, Rational lo, Rational hi);
  static LocalValue padic(const Place& p, const Rational& exact) { return padic(p, exact, exact); }
  static LocalValue zero(const Place& v, mpfr_prec_t prec);

  const Place& place() const { return place_; }
  bool is_exact() const;
  /// Multiples of log p (finite places only).
  const Rational& lo_coeff() const { return lo_; }
  const Rational& hi_coeff() const { return hi_; }
  RBound enclosure(mpfr_prec_t prec) const;

  LocalValue operator+(const LocalValue& o) const;
  LocalValue operator-(const LocalValue& o) const;
  LocalValue operator*(const Rational& q) const;

  Json to_json(mpfr_prec_t prec) const;

 private:
  LocalValue(Place p) : place_(p) {}  // NOLINT
  Place place_;
  Rational lo_, hi_;
  RBound arch_;
};

}  // namespace hcrit
