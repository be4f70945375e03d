#pragma once

#include <string>
#include <vector>

#include "hcrit/dynmap/proj_point.hpp"
#include "hcrit/exactnum/int_poly.hpp"

namespace hcrit {

/// A Galois orbit of points of P^1 with a multiplicity: the roots of an
/// irreducible integer polynomial, or the point at infinity on its own.
class ConjugateSet {
 public:
  /// Verifies irreducibility; throws std::invalid_argument otherwise.
  static ConjugateSet from_minpoly(const IntPoly& minpoly, int multiplicity = 1);
  static ConjugateSet point(const ProjPoint& p, int multiplicity = 1);
  static ConjugateSet infinity(int multiplicity = 1);

  bool at_infinity() const { return inf_; }
  /// Normalized irreducible polynomial; empty for infinity.
  const IntPoly& minpoly() const { return poly_; }
  int multiplicity() const { return mult_; }
  /// Number of distinct points in the orbit.
  int size() const { return inf_ ? 1 : poly_.degree(); }
  /// size() * multiplicity().
  int total_degree() const { return size() * mult_; }
  bool is_rational_point() const { return size() == 1; }
  /// Throws unless is_rational_point().
  ProjPoint as_point() const;
  /// The binary form vanishing on the orbit (each point once).
  IntPoly form() const;

  ConjugateSet with_multiplicity(int m) const;
  std::string to_string() const;

  friend bool operator==(const ConjugateSet& a, const ConjugateSet& b) {
    return a.inf_ == b.inf_ && a.mult_ == b.mult_ && a.poly_ == b.poly_;
  }
  friend bool operator<(const ConjugateSet& a, const ConjugateSet& b);
  friend std::vector<ConjugateSet> decompose_form(const IntPoly& form);

 private:
  IntPoly poly_;
  bool inf_ = false;
  int mult_ = 1;
};

/// Splits a nonzero binary form into conjugate sets (roots at infinity come
/// from vanishing top coefficients). Sorted, with equal sets merged.
std::vector<ConjugateSet> decompose_form(const IntPoly& form);

/// Product of the forms of the sets raised to their multiplicities.
IntPoly divisor_form(const std::vector<ConjugateSet>& divisor);

int divisor_degree(const std::vector<ConjugateSet>& divisor);

}  // namespace hcrit
