#pragma once

#include "hcrit/certify/certificate.hpp"
#include "hcrit/exactnum/place.hpp"

namespace hcrit {

/// Constants of the attraction estimates for a degree-d map with a fixed
/// point of multiplier lambda at 0. Everything is exact; logs are taken only
/// when an RBound is requested.
struct ExplicitConstants {
  int d;

  explicit ExplicitConstants(int degree);

  /// 3^(d-1) at the archimedean place, 1 at a prime.
  Integer C_v(const Place& v) const;
  /// 1/8 (d = 2) or 3^(1-d) (d >= 3) at the archimedean place;
  /// min_{1<=m<=d} |m|_p^d at a prime.
  Rational eps_v(const Place& v) const;
  /// sum over all places of log eps_v = -d log lcm(1..d) - log max(8, 3^(d-1)).
  RBound eps_sum(mpfr_prec_t prec) const;

  /// Super-attracting constant for local degree e at 0:
  /// ((2e+1)/(e-1)) log 2 + ((d-e)/(e-1)) log 3 at the archimedean place,
  /// (d/(e-1)) log max_m |1/m|_p at a prime.
  RBound sa_C_v(int e, const Place& v, mpfr_prec_t prec) const;
  /// Same at a prime, in units of log p.
  Rational sa_C_v_padic(int e, unsigned long p) const;

  /// c2(d) = (d-1) log 3 + d log lcm(1..d).
  RBound c2(mpfr_prec_t prec) const;
  /// The constant c0 of the global bound for maps with a fixed point:
  /// (4d-1)((d+1)^2 log 2 + log((d+1)(d+2))) + 2 log(2d(2d-1)!) + log 2
  ///   + d log lcm(1..d) + log max(8, 3^(d-1)).
  RBound c0(mpfr_prec_t prec) const;

  Json to_json(mpfr_prec_t prec) const;
};

/// sqrt(2) - 1 (archimedean), 1/4 (p = 2), 1 (other primes): the quadratic
/// attraction radius.
RBound quad_eps(const Place& v, mpfr_prec_t prec);

/// 1 / ((d-1) d^2 Q^(log d / log e)) with Q = 4d^2 - 2(e+2)d + e + 2.
RBound coefficient_Cde(int d, int e, mpfr_prec_t prec);
/// The additive constant C_{d,e} of the super-attracting lower bound.
RBound constant_Cde(int d, int e, mpfr_prec_t prec);

struct QuadBoundConstants {
  Rational coefficient;  // (k-8)/2^(k+2)
  RBound constant;       // (4 log 2 + 2k(2 log 2 + log(sqrt 2 + 1))) / 2^(k+2)
};
QuadBoundConstants quadbound_constants(int k, mpfr_prec_t prec);

/// log 12.
RBound corollary_threshold(mpfr_prec_t prec);
/// Upper bound on h(lambda) obtained from the k-bound with the given critical
/// height: log 12 + (2^(k+1)(1 + 2/(k-8)) hcrit + ((6k-12)/(k-8)) log 2
///   + (2k/(k-8)) log(sqrt 2 + 1)) / k. Throws for k = 8 or k < 1.
RBound kbound_height_bound(int k, const RBound& hcrit, mpfr_prec_t prec);

struct FibrationConstants {
  RBound exact;          // c2(d^(nm)) / m with exact lcm
  RBound bounded;        // (1.04 d^(2mn) + d^(mn) log 3 - log 3) / m
  RBound over_n;  // the same numerator over n
};
/// Throws std::overflow_error when d^(nm) exceeds 2^22.
FibrationConstants fibration_constants(int d, int n, int m, mpfr_prec_t prec);

}  // namespace hcrit
