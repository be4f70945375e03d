#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <variant>
#include <vector>

#include "hcrit/dynmap/proj_point.hpp"
#include "hcrit/exactnum/int_poly.hpp"
#include "hcrit/exactnum/place.hpp"

namespace hcrit {

struct GeneralForm {};
/// f(0) = 0 with multiplier lambda, f(inf) = inf.
struct FixedZeroInftyForm {
  Rational lambda;
};
/// f(z) = z^e + O(z^(e+1)) at 0, f(inf) = inf.
struct SuperAttractingForm {
  int e;
};
/// (lambda0 z + z^2) / (lambda_inf z + 1).
struct Milnor2Form {
  Rational lambda0, lambda_inf;
};
using NormalFormTag = std::variant<GeneralForm, FixedZeroInftyForm, SuperAttractingForm, Milnor2Form>;

std::string describe(const NormalFormTag& tag);

/// Degree d >= 2 self-map of P^1 over Q, stored as its canonical lift: integer
/// forms (F1, F2) of degree d, jointly primitive, with the first nonzero entry
/// of the coefficient vector positive. The coefficient vector lists F1 then F2,
/// each by ascending power of X (that is, ascending power of z after
/// dehomogenizing).
class RatMap {
 public:
  /// Coefficients of numerator and denominator in z, ascending, both of length
  /// d + 1. Throws std::invalid_argument("degenerate map (degree < d)") when
  /// the resultant vanishes.
  static RatMap from_coefficients(const std::vector<Rational>& num, const std::vector<Rational>& den);
  static RatMap from_forms(IntPoly f1, IntPoly f2);
  /// Same canonicalization, but the caller guarantees Res != 0 (iterates and
  /// conjugates of a valid map); the resultant is then computed on first use.
  static RatMap from_forms_unchecked(IntPoly f1, IntPoly f2);
  static RatMap milnor(const Rational& lambda0, const Rational& lambda_inf);
  /// z + a + 1/z.
  static RatMap plus_minus(const Rational& a);

  int degree() const { return f1_.degree(); }
  const IntPoly& f1() const { return f1_; }
  const IntPoly& f2() const { return f2_; }
  const Integer& resultant() const;
  std::vector<Integer> coefficient_vector() const;

  /// The most specific normal form this lift satisfies.
  NormalFormTag tag() const;

  /// The coefficients of the lift scaled so the denominator has constant term
  /// 1 (throws if that term is 0). Numerator then denominator, ascending.
  std::vector<Rational> normal_lift() const;

  ProjPoint apply(const ProjPoint& p) const;
  std::string to_string() const;

  friend bool operator==(const RatMap& a, const RatMap& b) { return a.f1_ == b.f1_ && a.f2_ == b.f2_; }

 private:
  struct ResultantCache {
    std::once_flag once;
    Integer value;
  };
  RatMap(IntPoly f1, IntPoly f2)
      : f1_(std::move(f1)), f2_(std::move(f2)), res_(std::make_shared<ResultantCache>()) {}
  static std::pair<IntPoly, IntPoly> canonical(IntPoly f1, IntPoly f2);
  IntPoly f1_, f2_;
  std::shared_ptr<ResultantCache> res_;
};

/// r(F) at v for the canonical lift: log|Res|_v / (d(d-1)).
RBound r_local(const RatMap& f, const Place& v, mpfr_prec_t prec);

}  // namespace hcrit
