#pragma once

#include "hcrit/certify/constants.hpp"
#include "hcrit/heights/heights.hpp"

namespace hcrit {

/// h(lambda) for a rational lambda.
RBound height_of(const Rational& lambda, mpfr_prec_t prec);

/// For f with f(0) = 0 (multiplier lambda != 0) and f(inf) = inf:
///   d^(k+1) hcrit(f) >= (k-1) h(lambda) - (4d-1) h_Hom(f) - 2 log(2d(2d-1)!)
///                       - log 2 - k d log lcm(1..d) - k log max(8, 3^(d-1)).
/// `tol` bounds the width of the lhs.
Certificate check_fixedzero_global(const RatMap& f, int k, double tol, const HeightOptions& opt = {});

/// Height growth under the two-fixed-point normalization g of f:
///   h_Hom(g) <= (d+2) h_Hom(f) + (d+1)^2 log 2 + log((d+1)(d+2)).
Certificate check_goodconj(const RatMap& f, const RatMap& g, mpfr_prec_t prec);

/// For f with a rational fixed point of multiplier lambda and a second
/// rational fixed point:
///   d^(k+1) hcrit(f) >= (k-1) h(lambda) - (4d-1)(d+2) h_Hom(f) - c0 k.
/// The fixed point with the largest h(lambda) among those with lambda != 1 is
/// used. Throws std::invalid_argument("needs rational fixed pair") otherwise.
/// The witness holds the normalization and its height-growth certificate.
Certificate check_mainglobal(const RatMap& f, int k, double tol, const HeightOptions& opt = {});

/// hcrit(f) >= coefficient_Cde(d, e) h_Hom(f) - C_{d,e} for f in
/// super-attracting normal form.
Certificate check_theorem_geom(const RatMap& f, double tol, const HeightOptions& opt = {});

/// hcrit(f) >= h(1, lambda0, lambda_inf) / 2048 - 0.012 for the quadratic
/// normal form with the given fixed-point multipliers.
Certificate check_theorem_quad(const Rational& lambda0, const Rational& lambda_inf, double tol,
                               const HeightOptions& opt = {});

struct QuadKCertificates {
  /// 2^(k+1) hcrit >= k h(lambda_inf) - k(2 log 2 + log(sqrt 2 + 1)) - 4 h(1, l0, linf) - 2 log 2
  Certificate quad;
  /// 2^(k+2) hcrit >= (k-8) h(1, l0, linf) - 4 log 2 - 2k(2 log 2 + log(sqrt 2 + 1))
  Certificate quadbound;
  /// hcrit(l0, linf) = hcrit(linf, l0)
  Certificate swap;
};
/// When lambda_inf = 0 the first inequality is taken with the multipliers
/// swapped.
QuadKCertificates check_quad_k(const Rational& lambda0, const Rational& lambda_inf, int k, double tol,
                               const HeightOptions& opt = {});

/// k (h(lambda) - log 12) <= 2^(k+1)(1 + 2/(k-8)) hcrit + ((6k-12)/(k-8)) log 2
///                          + (2k/(k-8)) log(sqrt 2 + 1)
/// with lhs of the certificate the right-hand side above. Throws for k = 8.
Certificate eval_kbound(const Rational& lambda, int k, const RBound& hcrit, mpfr_prec_t prec = 128);

}  // namespace hcrit
