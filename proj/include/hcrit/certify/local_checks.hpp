#pragma once

#include <vector>

#include "hcrit/certify/constants.hpp"
#include "hcrit/heights/heights.hpp"

namespace hcrit {

/// lhs >= rhs for two local values at the same place. At a prime the slack is
/// computed exactly in units of log p.
Certificate local_inequality(std::string statement, std::string anchor, Json inputs, const LocalValue& lhs,
                             const LocalValue& rhs, mpfr_prec_t prec);

/// Local pieces of a map with f(0) = 0, read off the lift whose denominator
/// has constant term 1.
struct NormalLiftData {
  int d;
  std::vector<Rational> num, den;  // ascending in z, den[0] = 1

  static NormalLiftData of(const RatMap& f);
  /// log max(1, |coefficients|)_v.
  LocalValue log_norm(const Place& v, mpfr_prec_t prec) const;
  /// log|Res|_v / (d(d-1)) for this lift.
  LocalValue r(const RatMap& f, const Place& v, mpfr_prec_t prec) const;
};

/// log max|root| over the nonzero roots of the given polynomials (roots at
/// infinity are ignored). Throws std::domain_error when no root is nonzero.
LocalValue log_max_root(const std::vector<IntPoly>& polys, const Place& v, mpfr_prec_t prec);

/// Bounds between the roots e_i and the coefficients c_i of the monic
/// polynomial p / lead(p):
///   upper: log||e|| <= log+||c|| + log+|2|
///   lower: log||c|| <= k log+||e|| + k log+|2|
/// Each certificate has the larger side as lhs. A side equal to log 0 is
/// replaced by 0 (the inequality then holds because the other side is >= 0).
struct CertificatePair {
  Certificate upper, lower;
};
CertificatePair check_root_coeff_bounds(const IntPoly& p, const Place& v, mpfr_prec_t prec = 128);

/// g_f(z, 0) >= log+|1/z| - log+|2d(2d-1)!| / (d-1) - ((2d-1)/(d-1)) log||f||
///              + (d-1) r(f)
/// for f with f(0) = 0 and z != 0.
Certificate check_greens_lower(const RatMap& f, const Rational& z, const Place& v, double tol = 1e-8,
                               mpfr_prec_t prec = 128);

/// The critical points outside the backward orbit of 0, pushed forward once
/// and then k more times: the divisor f_*^k B_f'. Throws std::runtime_error
/// if membership in the backward orbit cannot be decided within `budget`.
std::vector<ConjugateSet> excised_branch_divisor(const RatMap& f, int k, int budget = 64);

/// Fixed point of multiplier lambda at 0 with 0 < |lambda|_v < eps_v: some
/// branch point beta has 0 < |f^k(beta)| max|alpha, beta| <= (C_v |lambda|)^k
/// for k = 1..kmax. At a prime the certificate counts nonzero branch points in
/// the disk |z| < 1/max|alpha, beta| and checks the valuations of their
/// images against |f^k(z)| = |lambda|^k |z|.
Certificate check_attraction(const RatMap& f, const Place& v, int kmax = 6, mpfr_prec_t prec = 128);

/// The displayed key estimate for g_f(f_*^k B_f', 0).
Certificate check_key(const RatMap& f, int k, const Place& v, double tol = 1e-8, mpfr_prec_t prec = 128);
/// The stronger estimate available when 0 < |lambda|_v < eps_v; a vacuous
/// pass otherwise.
Certificate check_maincase(const RatMap& f, int k, const Place& v, double tol = 1e-8, mpfr_prec_t prec = 128);

/// Super-attracting branch estimate: when log rho_f + C_v < 0, some branch
/// point has log|f^k(beta)| < e^k log rho_f + (e^k/(e-1)) log+|2^(e-1) 3^(d-e)|.
Certificate check_sabranch(const RatMap& f, const Place& v, int kmax = 6, mpfr_prec_t prec = 128);

/// The displayed super-attracting local estimate for g_f(f_*^k B_f', 0).
Certificate check_saest(const RatMap& f, int k, const Place& v, double tol = 1e-8, mpfr_prec_t prec = 128);

}  // namespace hcrit
