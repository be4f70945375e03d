#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hcrit/dynmap/operations.hpp"
#include "oracles.hpp"

using namespace hcrit;

namespace {

Rational small_rational(std::mt19937& rng, long h) {
  std::uniform_int_distribution<long> num(-h, h), den(1, h);
  return ratio(Integer(num(rng)), Integer(den(rng)));
}

// f(z) as a double, for floating cross-checks
double eval_map(const RatMap& f, double z) {
  double n = 0, d = 0;
  for (int i = f.degree(); i >= 0; --i) {
    n = n * z + f.f1().coeff(i).get_d();
    d = d * z + f.f2().coeff(i).get_d();
  }
  return n / d;
}

}  // namespace

TEST_CASE("maps are stored as canonical lifts") {
  RatMap a = make_map({Rational(0), Rational(2), Rational(1)}, {Rational(1), Rational(3), Rational(0)});
  RatMap b = make_map({Rational(0), Rational(4), Rational(2)}, {Rational(2), Rational(6), Rational(0)});
  CHECK(a == b);
  CHECK(a == RatMap::milnor(Rational(2), Rational(3)));
  CHECK(a.degree() == 2);
  CHECK_THROWS_AS(make_map({Rational(0), Rational(1), Rational(1)}, {Rational(0), Rational(1), Rational(0)}),
                  std::invalid_argument);
  CHECK(std::holds_alternative<Milnor2Form>(a.tag()));
  auto nl = a.normal_lift();
  CHECK(nl.size() == 6);
  CHECK(nl[3] == 1);
}

TEST_CASE("apply agrees with floating evaluation") {
  RatMap f = RatMap::milnor(Rational(2), Rational(3));
  for (long p : {1L, -2L, 5L}) {
    ProjPoint img = f.apply(ProjPoint(Rational(p, 7)));
    CHECK(img.affine().get_d() == doctest::Approx(eval_map(f, p / 7.0)));
  }
  CHECK(f.apply(ProjPoint::infinity()).is_infinity());
}

TEST_CASE("iterates compose") {
  RatMap f = RatMap::plus_minus(Rational(1, 2));
  RatMap f3 = iterate_map(f, 3);
  CHECK(f3.degree() == 8);
  ProjPoint z(Rational(3, 5));
  CHECK(f3.apply(z) == f.apply(f.apply(f.apply(z))));
  CHECK_THROWS_AS(iterate_map(f, 9, 256), std::length_error);
}

TEST_CASE("Milnor multipliers satisfy the fixed-point index relation") {
  // three fixed multipliers of a quadratic map: s1 = s3 + 2
  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    Rational l0 = small_rational(rng, 6), linf = small_rational(rng, 6);
    if (l0 * linf == 1) continue;
    RatMap f = RatMap::milnor(l0, linf);
    CHECK(multiplier_at(f, ProjPoint(Rational(0))) == l0);
    CHECK(multiplier_at(f, ProjPoint::infinity()) == linf);
    IntPoly chi = multiplier_char_poly(f, 1);
    REQUIRE(chi.degree() == 3);
    // chi = c (L - l0)(L - linf)(L - mu); read mu from the trace
    Rational trace = -ratio(chi.coeff(2), chi.coeff(3));
    Rational prod = -ratio(chi.coeff(0), chi.coeff(3));
    CHECK(trace == prod + 2);
  }
}

TEST_CASE("multiplier polynomial degree for iterates") {
  RatMap f = RatMap::milnor(Rational(2), Rational(3));
  CHECK(multiplier_char_poly(f, 2).degree() == 5);
  RatMap sq = make_map({Rational(0), Rational(0), Rational(1)}, {Rational(1), Rational(0), Rational(0)});
  IntPoly chi = multiplier_char_poly(sq, 1);
  CHECK(chi == IntPoly({0, 0, -2, 1}));
}

TEST_CASE("critical divisor has total degree 2d - 2") {
  std::mt19937 rng(9);
  for (int d : {2, 3}) {
    for (int t = 0; t < 8; ++t) {
      std::vector<Rational> num, den;
      for (int i = 0; i <= d; ++i) num.push_back(small_rational(rng, 5)), den.push_back(small_rational(rng, 5));
      RatMap f = [&] {
        try {
          return make_map(num, den);
        } catch (const std::invalid_argument&) {
          return RatMap::milnor(Rational(1), Rational(2));
        }
      }();
      int total = 0;
      for (const auto& s : critical_divisor(f)) total += s.total_degree();
      CHECK(total == 2 * f.degree() - 2);
    }
  }
}

TEST_CASE("critical points of z^2 + c") {
  RatMap f = make_map({Rational(-1), Rational(0), Rational(1)}, {Rational(1), Rational(0), Rational(0)});
  auto crit = critical_divisor(f);
  REQUIRE(crit.size() == 2);
  bool zero = false, inf = false;
  for (const auto& s : crit) {
    if (s.at_infinity()) inf = true;
    else if (s.is_rational_point() && s.as_point() == ProjPoint(Rational(0))) zero = true;
  }
  CHECK(zero);
  CHECK(inf);
}

TEST_CASE("pushforward of a rational point is its image") {
  RatMap f = RatMap::milnor(Rational(-2), Rational(1, 3));
  for (long p : {1L, 2L, -5L}) {
    ConjugateSet s = ConjugateSet::point(ProjPoint(Rational(p, 3)));
    auto img = pushforward_minpoly(f, s);
    REQUIRE(img.size() == 1);
    CHECK(img[0].as_point() == f.apply(ProjPoint(Rational(p, 3))));
  }
}

TEST_CASE("pushforward of a quadratic conjugate pair") {
  RatMap f = make_map({Rational(0), Rational(0), Rational(1)}, {Rational(1), Rational(0), Rational(0)});
  ConjugateSet s = ConjugateSet::from_minpoly(IntPoly{-2, 0, 1});  // +-sqrt 2
  auto img = pushforward_minpoly(f, s);
  REQUIRE(img.size() == 1);
  CHECK(img[0].as_point() == ProjPoint(Rational(2)));
  CHECK(img[0].multiplicity() == 2);
}

TEST_CASE("branch points of the Milnor map are critical values") {
  Rational l0(2), linf(3);
  RatMap f = RatMap::milnor(l0, linf);
  auto branch = branch_points_quadratic(l0, linf);
  auto crit = critical_divisor(f);
  std::vector<ConjugateSet> images;
  for (const auto& c : crit)
    for (const auto& i : pushforward_minpoly(f, c)) images.push_back(i);
  std::sort(images.begin(), images.end());
  std::sort(branch.begin(), branch.end());
  CHECK(images == branch);
  CHECK_THROWS_AS(branch_points_quadratic(Rational(2), Rational(0)), std::invalid_argument);
}

TEST_CASE("normalizing two fixed points") {
  RatMap f = make_map({Rational(-2), Rational(0), Rational(1)}, {Rational(1), Rational(0), Rational(0)});
  auto fixed = rational_fixed_points(f);
  REQUIRE(fixed.size() == 3);  // -1, 2, inf
  NormalizedMap nm = normalize_two_fixed(f, fixed[0], fixed[1]);
  CHECK(nm.map.apply(ProjPoint(Rational(0))) == ProjPoint(Rational(0)));
  CHECK(nm.map.apply(ProjPoint::infinity()).is_infinity());
  CHECK(multiplier_at(nm.map, ProjPoint(Rational(0))) == multiplier_at(f, fixed[0]));
  CHECK(conjugate(f, nm.psi) == nm.map);
}

TEST_CASE("conjugation preserves multipliers and flip is an involution") {
  RatMap f = RatMap::milnor(Rational(5), Rational(-1, 2));
  CHECK(flip(flip(f)) == f);
  CHECK(flip(f) == RatMap::milnor(Rational(-1, 2), Rational(5)));
  Mobius psi = Mobius::make(Rational(1), Rational(2), Rational(3), Rational(-1));
  CHECK(multiplier_char_poly(conjugate(f, psi)).primitive_part() == multiplier_char_poly(f).primitive_part());
}

TEST_CASE("cycle multipliers") {
  // z^2 - 1: 0 -> -1 -> 0, multiplier 4 * 0 * -1 = 0
  RatMap f = make_map({Rational(-1), Rational(0), Rational(1)}, {Rational(1), Rational(0), Rational(0)});
  CHECK(cycle_multiplier(f, {ProjPoint(Rational(0)), ProjPoint(Rational(-1))}) == 0);
  CHECK_THROWS(cycle_multiplier(f, {ProjPoint(Rational(1))}));
}
