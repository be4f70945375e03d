#pragma once

#include <vector>

#include "hcrit/dynmap/conjugate_set.hpp"
#include "hcrit/dynmap/rat_map.hpp"

namespace hcrit {

/// Default bound on the degree of iterates: d^n <= 256.
inline constexpr int kDefaultIterateCap = 256;

RatMap make_map(const std::vector<Rational>& num, const std::vector<Rational>& den);

/// P, f(P), ..., f^n(P).
std::vector<ProjPoint> orbit(const RatMap& f, const ProjPoint& p, int n);

/// Canonical lift of f^n. Throws std::length_error naming the required cap
/// when d^n > cap.
RatMap iterate_map(const RatMap& f, int n, int cap = kDefaultIterateCap);

/// psi^-1 o f o psi.
RatMap conjugate(const RatMap& f, const Mobius& psi);
/// Conjugation by z -> 1/z.
RatMap flip(const RatMap& f);

/// Rational fixed points, sorted.
std::vector<ProjPoint> rational_fixed_points(const RatMap& f);
/// f'(p) at a fixed point, in a chart around p. Throws unless p is fixed.
Rational multiplier_at(const RatMap& f, const ProjPoint& p);

struct NormalizedMap {
  RatMap map;
  Mobius psi;  // map = psi^-1 o f o psi, psi(0) = gamma0, psi(inf) = gamma_inf
};
/// Conjugates the rational fixed points gamma0 -> 0 and gamma_inf -> inf.
NormalizedMap normalize_two_fixed(const RatMap& f, const ProjPoint& gamma0, const ProjPoint& gamma_inf);

/// F1x F2y - F1y F2x, a form of degree 2d - 2.
IntPoly wronskian(const RatMap& f);
/// Critical points with multiplicity e_P - 1; total degree 2d - 2.
std::vector<ConjugateSet> critical_divisor(const RatMap& f);

/// lambda_inf^2 X^2 + 2(2 - lambda0 lambda_inf) XY + lambda0^2 Y^2, made
/// primitive: its roots are the critical values of the Milnor map.
IntPoly branch_form_quadratic(const Rational& lambda0, const Rational& lambda_inf);
/// Throws std::invalid_argument("use the super-attracting path") for
/// lambda_inf = 0 and for lambda0 lambda_inf = 1.
std::vector<ConjugateSet> branch_points_quadratic(const Rational& lambda0, const Rational& lambda_inf);

/// Image under f of the roots of a form P of degree k, as a form of degree k:
/// Res_(w,z)(P(w, z), Y F1(w, z) - X F2(w, z)), made primitive unless `raw`.
/// The raw resultant's content measures how far F fails to be primitive on
/// the roots of P.
IntPoly pushforward_form(const RatMap& f, const IntPoly& p, bool raw = false);
/// f_* of a conjugate set, multiplicity carried over.
std::vector<ConjugateSet> pushforward_minpoly(const RatMap& f, const ConjugateSet& s);
std::vector<ConjugateSet> pushforward_divisor(const RatMap& f, const std::vector<ConjugateSet>& divisor);

/// Polynomial in Lambda whose roots (with multiplicity) are the multipliers of
/// the d^n + 1 fixed points of f^n.
IntPoly multiplier_char_poly(const RatMap& f, int n = 1, int cap = 64);

/// Product of f' along a cycle listed in orbit order. Throws unless the points
/// are distinct and f maps each to the next, the last back to the first.
Rational cycle_multiplier(const RatMap& f, const std::vector<ProjPoint>& cycle);

}  // namespace hcrit
