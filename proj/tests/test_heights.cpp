#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hcrit/heights/heights.hpp"
#include "oracles.hpp"

using namespace hcrit;

namespace {

RatMap poly_map(long c) {
  return make_map({Rational(c), Rational(0), Rational(1)}, {Rational(1), Rational(0), Rational(0)});
}

}  // namespace

TEST_CASE("Weil heights") {
  CHECK(weil_height(ProjPoint::parse("[3:6]"), 128).contains(Rational(0)) == false);
  CHECK(weil_height(ProjPoint::parse("[3:6]"), 128).mid_d() == doctest::Approx(std::log(2.0)));
  CHECK(weil_height({Rational(1), Rational(2, 3), Rational(-5, 2)}, 128).mid_d() == doctest::Approx(std::log(15.0)));
  CHECK(weil_height(ProjPoint::infinity(), 64).contains_zero());
  std::mt19937 rng(1);
  std::uniform_int_distribution<long> num(-999, 999), den(1, 999);
  for (int t = 0; t < 50; ++t) {
    long p = num(rng), q = den(rng), g = oracle::gcd(p, q);
    if (g == 0) continue;
    RBound h = weil_height(ProjPoint(ratio(Integer(p), Integer(q))), 96);
    CHECK(h.mid_d() == doctest::Approx(oracle::height(p / g, q / g)));
  }
}

TEST_CASE("homogeneous height of a map") {
  RatMap f = RatMap::milnor(Rational(2), Rational(3));
  CHECK(hom_height(f, 64).mid_d() == doctest::Approx(std::log(3.0)));
}

TEST_CASE("canonical height of z^2 equals the Weil height") {
  RatMap sq = poly_map(0);
  for (const char* z : {"2/3", "7", "-5/11"}) {
    ProjPoint p = ProjPoint::parse(z);
    RBound h = canonical_height(sq, p, 1e-4);
    CHECK(h.contains(weil_height(p, 128)));
    CHECK(h.width() <= 1e-4);
  }
}

TEST_CASE("canonical height vanishes on preperiodic points") {
  RatMap f = poly_map(-1);
  CHECK(canonical_height(f, ProjPoint(Rational(-1)), 1e-6).contains_zero());
  CHECK(canonical_height(f, ProjPoint(Rational(0)), 1e-6).contains_zero());
  CHECK(canonical_height(poly_map(-2), ProjPoint(Rational(2)), 1e-6).contains_zero());
}

TEST_CASE("functional equation of the canonical height") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<long> c(-5, 5), den(1, 5);
  for (int t = 0; t < 10; ++t) {
    Rational l0 = ratio(Integer(c(rng)), Integer(den(rng))), linf(c(rng));
    if (l0 * linf == 1) continue;
    RatMap f = RatMap::milnor(l0, linf);
    ProjPoint p(ratio(Integer(c(rng)), Integer(den(rng))));
    RBound a = canonical_height(f, f.apply(p), 1e-3);
    RBound b = canonical_height(f, p, 1e-3 / 2) * Rational(2);
    CHECK(a.overlaps(b));
  }
}

TEST_CASE("critical height is zero for post-critically finite maps") {
  for (long c : {0L, -1L, -2L}) {
    RBound h = critical_height(poly_map(c), 1e-6);
    CHECK(h.contains_zero());
    CHECK(h.width() <= 1e-6);
  }
}

TEST_CASE("critical height of z^2 + c is half the height of c") {
  // critical points 0 (mapping to c) and inf (fixed): hcrit = hhat(0) = hhat(c) / 2
  RatMap f = poly_map(2);
  RBound h = critical_height(f, 1e-4);
  CHECK(h.certainly_positive());
  CHECK(h.overlaps(canonical_height(f, ProjPoint(Rational(2)), 1e-4) / Rational(2)));
}

TEST_CASE("critical height is a conjugation invariant") {
  RatMap f = RatMap::milnor(Rational(2), Rational(3));
  RBound a = critical_height(f, 1e-3);
  CHECK(a.overlaps(critical_height(flip(f), 1e-3)));
  Mobius psi = Mobius::make(Rational(1), Rational(1), Rational(0), Rational(2));
  CHECK(a.overlaps(critical_height(conjugate(f, psi), 1e-3)));
}

TEST_CASE("critical height of an iterate") {
  Certificate c = crit_height_iterate_identity_check(RatMap::milnor(Rational(1, 2), Rational(-3)), 2, 1e-3);
  CHECK(c.verdict == Verdict::Pass);
}

TEST_CASE("set and divisor heights") {
  RatMap sq = poly_map(0);
  ConjugateSet s = ConjugateSet::from_minpoly(IntPoly{-2, 0, 3});  // +-sqrt(2/3)
  // hhat = h for z^2; the pair contributes log M = log 3
  RBound h = canonical_height_set(sq, s, 1e-4);
  CHECK(h.lo_d() <= std::log(3.0) + 1e-12);
  CHECK(h.hi_d() >= std::log(3.0) - 1e-12);
  CHECK(h.width() <= 1e-4);
  CHECK(canonical_height_set(sq, s.with_multiplicity(2), 1e-4).contains(2 * std::log(3.0)));
}

TEST_CASE("steps for tolerance") {
  CHECK(steps_for_tolerance(2, 1.0, 0.0, 1.0, 64) == 1);
  CHECK(steps_for_tolerance(2, 1.0, 0.0, 1e-3, 64) == 11);
  CHECK_THROWS(steps_for_tolerance(2, 1.0, 0.0, 1e-30, 10));
}

TEST_CASE("local Green's functions sum to the canonical height") {
  RatMap f = RatMap::milnor(Rational(2), Rational(3));
  RBound sum = green_global_sum(f, IntPoly::linear_root(Rational(1, 5)).homogenize(1), 1e-4, 128);
  RBound hhat = canonical_height(f, ProjPoint(Rational(1, 5)), 1e-4);
  CHECK(sum.overlaps(hhat));
  CHECK(green_global_sum(f, IntPoly::linear_root(Rational(-2)).homogenize(1), 1e-4, 128).contains_zero());
  CHECK_THROWS_AS(green_local(f, Rational(0), Place::archimedean(), 1e-6, 128), std::domain_error);
}

TEST_CASE("p-adic Green's function at a prime of good reduction") {
  // z^2 + 2z has good reduction everywhere
  RatMap f = make_map({Rational(0), Rational(2), Rational(1)}, {Rational(1), Rational(0), Rational(0)});
  LocalValue g = green_local(f, Rational(1, 25), Place::prime(5), 1e-8, 128);
  CHECK(g.is_exact());
  auto primes = green_relevant_primes(f, IntPoly::linear_root(Rational(1, 25)).homogenize(1));
  CHECK(primes.empty());
}
