#pragma once

#include <string>
#include <vector>

#include "hcrit/certify/certificate.hpp"
#include "hcrit/dynmap/operations.hpp"
#include "hcrit/heights/local_value.hpp"

namespace hcrit {

enum class HeightKind { Weil, Canonical, Critical, GreenLocal };
std::string to_string(HeightKind k);

struct HeightValue {
  RBound value;
  HeightKind kind;
  Json provenance = Json::object();
  Json to_json() const;
};

/// log max |x_i| after scaling to coprime integers. Throws on the zero vector.
RBound weil_height(const std::vector<Rational>& coords, mpfr_prec_t prec);
RBound weil_height(const ProjPoint& p, mpfr_prec_t prec);
/// Weil height of the coefficient vector in P^(2d+1).
RBound hom_height(const RatMap& f, mpfr_prec_t prec);

struct HeightOptions {
  mpfr_prec_t prec = 128;
  /// Iteration limit; tolerances that need more steps fail.
  int max_steps = 64;
  /// Size limit on iterated coordinates or forms, in bits.
  std::size_t max_bits = std::size_t(1) << 27;
};

/// One-step slack of the canonical lift: for every point P,
///   -c_low <= h(f(P)) - d h(P) <= c_up
/// with c_low = (2d-1) h_Hom(f) + log(2d (2d-1)!) and c_up = h_Hom(f) + log(d+1).
struct StepSlack {
  RBound c_low, c_up;
};
StepSlack one_step_slack(const RatMap& f, mpfr_prec_t prec);

/// Steps N needed so that k (c_low + c_up) / (d^N (d-1)) + extra / d^N <= tol.
int steps_for_tolerance(int d, double slack_sum, double extra, double tol, int max_steps);

/// Enclosure of the canonical height of P of width <= tol. Throws
/// std::runtime_error reporting the achieved width if the limits in `opt` stop
/// the iteration first.
RBound canonical_height(const RatMap& f, const ProjPoint& p, double tol, const HeightOptions& opt = {});
/// Sum of canonical heights over the roots of a binary form, with multiplicity.
RBound canonical_height_form(const RatMap& f, const IntPoly& form, double tol, const HeightOptions& opt = {});
/// Sum over the points of S, each with S's multiplicity.
RBound canonical_height_set(const RatMap& f, const ConjugateSet& s, double tol, const HeightOptions& opt = {});
RBound canonical_height_divisor(const RatMap& f, const std::vector<ConjugateSet>& divisor, double tol,
                                const HeightOptions& opt = {});

/// Sum of canonical heights of the critical points with multiplicity.
RBound critical_height(const RatMap& f, double tol, const HeightOptions& opt = {});

/// Compares crit(f^n) with n crit(f) as an overlap of enclosures.
Certificate crit_height_iterate_identity_check(const RatMap& f, int n, double tol, const HeightOptions& opt = {});

/// Local Green's function g_v(D, 0) summed over the points of the divisor of
/// the form `p` (with multiplicity), for f with f(0) = 0 and f(inf) = inf.
/// Uses the normal-form lift. At a prime the value is exact up to a tail
/// of width below tol; at the archimedean place it is an enclosure.
/// Throws std::domain_error("pairing at its pole") if 0 is a root of p.
LocalValue green_local_form(const RatMap& f, const IntPoly& p, const Place& v, double tol, mpfr_prec_t prec);
LocalValue green_local(const RatMap& f, const Rational& z, const Place& v, double tol, mpfr_prec_t prec);
LocalValue green_local(const RatMap& f, const ConjugateSet& s, const Place& v, double tol, mpfr_prec_t prec);

/// Primes at which g_v(D, 0) can be nonzero: divisors of Res(F) and of p(0, 1).
std::vector<unsigned long> green_relevant_primes(const RatMap& f, const IntPoly& p);

/// sum over the relevant places of g_v(D, 0); equals the canonical height of D
/// because 0 is fixed.
RBound green_global_sum(const RatMap& f, const IntPoly& p, double tol, mpfr_prec_t prec);

}  // namespace hcrit
