#pragma once

#include <vector>

#include "hcrit/exactnum/int_poly.hpp"
#include "hcrit/exactnum/newton_polygon.hpp"

namespace hcrit {

/// A rectangle holding exactly `multiplicity` roots counted with multiplicity
/// (one distinct root of the given multiplicity).
struct RootBox {
  CBound box;
  int multiplicity;
};

/// Certified boxes for every complex root of p, each of width <= 2^-prec.
/// Boxes for roots of different multiplicity may overlap; boxes for roots of
/// the same multiplicity are disjoint.
std::vector<RootBox> archimedean_root_enclosures(const IntPoly& p, mpfr_prec_t prec);

/// sum over complex roots (with multiplicity) of log+|alpha|.
RBound archimedean_log_plus_sum(const IntPoly& p, mpfr_prec_t prec);

/// Finite-place part of the root height sum of a primitive p: returns the
/// positive integer L with sum_p sum_roots log+|alpha|_p = log L. Computed from
/// Newton polygons at the primes dividing the leading coefficient; an
/// unfactored cofactor of the leading coefficient is included via the
/// Gauss-lemma identity (its contribution is log of the cofactor).
Integer finite_root_height_exp(const IntPoly& p);

/// Per-prime finite contributions: (p, q) meaning q * log p.
std::vector<std::pair<unsigned long, Rational>> finite_root_heights(const IntPoly& p);

/// sum over roots of h(alpha) = log M(p) for primitive p.
RBound roots_height_sum(const IntPoly& p, mpfr_prec_t prec);

/// Coarse two-sided enclosure of log M(p) from the coefficients alone:
/// |c_i| <= binom(n, i) M(p) and M(p) <= ||p||_2.
RBound log_mahler_coeff_bounds(const IntPoly& p, mpfr_prec_t prec);

}  // namespace hcrit
