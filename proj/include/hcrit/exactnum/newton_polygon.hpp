#pragma once

#include <vector>

#include "hcrit/exactnum/int_poly.hpp"
#include "hcrit/exactnum/place.hpp"

namespace hcrit {

/// One edge of the lower hull of (i, v_p(c_i)). `valuation` is the p-adic
/// valuation shared by the `multiplicity` roots the edge accounts for (the
/// negative of the edge slope).
struct NewtonSegment {
  Rational valuation;
  int multiplicity;
  friend bool operator==(const NewtonSegment&, const NewtonSegment&) = default;
};

struct NewtonPolygon {
  /// Sorted by valuation, ascending.
  std::vector<NewtonSegment> segments;
  /// Roots equal to 0, counted apart from the segments.
  int zero_roots = 0;

  int root_count() const;
  /// sum over nonzero roots of min(0, v(alpha)), i.e. minus the sum of
  /// log+|alpha|_p in units of log p.
  Rational negative_valuation_sum() const;
};

/// Throws std::domain_error for the zero polynomial.
NewtonPolygon newton_polygon(const IntPoly& p, const Place& place);

/// Roots of p (with multiplicity, over an algebraic closure of Q_p) in the disk
/// |z - center|_p <= p^radius_logp (closed) or < (open).
int count_roots_in_disk(const IntPoly& p, const Place& place, const Rational& center,
                        const Rational& radius_logp, bool closed);

}  // namespace hcrit
