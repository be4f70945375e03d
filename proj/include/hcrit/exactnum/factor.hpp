#pragma once

#include <vector>

#include "hcrit/exactnum/int_poly.hpp"

namespace hcrit {

struct Factor {
  IntPoly poly;  // irreducible over Q, primitive, positive leading coefficient
  int multiplicity;
};

/// Irreducible factorization over Q of a nonzero univariate polynomial; the
/// content and sign are dropped. Works by grouping certified complex roots and
/// testing each candidate factor by exact division, so it is meant for small
/// degrees (throws std::length_error above `max_degree`).
std::vector<Factor> factor_over_q(const IntPoly& p, int max_degree = 24);

bool is_irreducible(const IntPoly& p);

}  // namespace hcrit
