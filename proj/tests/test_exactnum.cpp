#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hcrit/exactnum/complex_roots.hpp"
#include "hcrit/exactnum/factor.hpp"
#include "oracles.hpp"

using namespace hcrit;

TEST_CASE("rational parsing canonicalizes") {
  CHECK(parse_rational("6/-4") == Rational(-3, 2));
  CHECK(parse_rational("-0/7") == 0);
  CHECK(to_string(parse_rational("10/4")) == "5/2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(ratio(4, -6) == Rational(-2, 3));
  CHECK(ratio(4, -6).get_den() == 3);
}

TEST_CASE("integer helpers") {
  CHECK(lcm_range(6) == 60);
  CHECK(factorial(7) == 5040);
  CHECK(bit_length(Integer(0)) == 0);
  CHECK(bit_length(Integer(255)) == 8);
  CHECK(common_denominator({Rational(1, 4), Rational(5, 6)}) == 12);
}

TEST_CASE("log enclosures contain the double logarithm") {
  for (long n : {2L, 3L, 12L, 1000003L}) {
    RBound b = RBound::log_of(Integer(n), 128);
    CHECK(b.lo_d() <= std::log(double(n)) + 1e-15);
    CHECK(b.hi_d() >= std::log(double(n)) - 1e-15);
    CHECK(b.width() < 1e-30);
  }
}

TEST_CASE("interval arithmetic is monotone and sound") {
  RBound a = RBound::interval(Rational(1), Rational(2), 64);
  RBound b = RBound::interval(Rational(-3), Rational(1, 2), 64);
  RBound p = a * b;
  CHECK(p.contains(Rational(-6)));
  CHECK(p.contains(Rational(1)));
  CHECK_FALSE(p.contains(Rational(2)));
  CHECK((a - a).contains_zero());
  CHECK(RBound::hull(a, b).contains(Rational(-3)));
  CHECK(a.clamp_below(Rational(3, 2)).lo_d() == doctest::Approx(1.5));
}

TEST_CASE("bigfloat mantissa round trip") {
  RBound x = RBound::log_of(Integer(7), 200);
  auto [m, e] = x.lo().mantissa_exponent();
  CHECK(BigFloat::from_mantissa_exponent(m, e) == x.lo());
}

TEST_CASE("place valuations and logs") {
  Place p5 = Place::prime(5);
  CHECK(val_p(Integer(250), 5) == 3);
  CHECK(val_p(Rational(3, 50), p5) == -2);
  CHECK_THROWS_AS(val_p(Integer(0), 5), std::domain_error);
  CHECK(log_abs(Rational(25), p5, 64).mid_d() == doctest::Approx(-2 * std::log(5.0)));
  CHECK(log_plus_abs(Rational(1, 25), p5, 64).mid_d() == doctest::Approx(2 * std::log(5.0)));
  CHECK(log_plus_abs(Rational(0), Place::archimedean(), 64).contains_zero());
  CHECK_THROWS_AS(Place::prime(9), std::invalid_argument);
  CHECK(Place::parse("oo").is_archimedean());
  auto tf = trial_factor(Integer(2 * 2 * 3 * 1000003L), 100);
  CHECK(tf.cofactor == 1000003);
  CHECK(prime_divisors(Integer(360)) == std::vector<unsigned long>{2, 3, 5});
}

TEST_CASE("polynomial arithmetic and resultants") {
  IntPoly a{-2, 0, 1};  // z^2 - 2
  IntPoly b{-3, 1};     // z - 3
  CHECK((a * b).degree() == 3);
  CHECK(a.eval(Rational(3)) == 7);
  // Res(z^2 - 2, z - 3) = (3^2 - 2) up to sign
  CHECK(abs(resultant(a, b)) == 7);
  IntPoly g = gcd(a * b, b * IntPoly{1, 1});
  CHECK(g.degree() == 1);
  CHECK(divides(b, a * b));
  auto sf = squarefree_decomposition(b * b * a);
  CHECK(sf.size() >= 2);
  CHECK(IntPoly{2, 4, 6}.content() == 2);
  CHECK(IntPoly::linear_root(Rational(2, 3)).eval(Rational(2, 3)) == 0);
}

TEST_CASE("resultant of split polynomials matches the product formula") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> r(-6, 6);
  for (int t = 0; t < 30; ++t) {
    long x1 = r(rng), x2 = r(rng), y1 = r(rng);
    IntPoly f = IntPoly{-x1, 1} * IntPoly{-x2, 1};
    IntPoly g = IntPoly{-y1, 1};
    long expect = (x1 - y1) * (x2 - y1);
    CHECK(abs(resultant(f, g)) == std::labs(expect));
  }
}

TEST_CASE("newton polygon reads root valuations") {
  Place p = Place::prime(3);
  // roots 3, 1/9, 27 (twice): valuations 1, -2, 3, 3
  IntPoly f = IntPoly{-3, 1} * IntPoly{-1, 9} * IntPoly{-27, 1} * IntPoly{-27, 1};
  auto np = newton_polygon(f, p);
  REQUIRE(np.segments.size() == 3);
  CHECK(np.segments[0] == NewtonSegment{Rational(-2), 1});
  CHECK(np.segments[1] == NewtonSegment{Rational(1), 1});
  CHECK(np.segments[2] == NewtonSegment{Rational(3), 2});
  CHECK(np.negative_valuation_sum() == -2);
  CHECK(count_roots_in_disk(f, p, Rational(0), Rational(-1), true) == 3);  // |z| <= 1/3
  CHECK(count_roots_in_disk(f, p, Rational(0), Rational(-1), false) == 2);  // |z| < 1/3
  CHECK(count_roots_in_disk(f, p, Rational(0), Rational(-3), false) == 0);  // |z| < 1/27
  CHECK(newton_polygon(IntPoly{0, 0, 1}, p).zero_roots == 2);
}

TEST_CASE("finite root heights equal log of the leading coefficient") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> r(-50, 50);
  for (int t = 0; t < 40; ++t) {
    std::vector<Integer> c;
    for (int i = 0; i < 5; ++i) c.push_back(r(rng));
    if (c.back() == 0) c.back() = 7;
    IntPoly p = IntPoly(c).primitive_part();
    if (p.degree() < 1) continue;
    CHECK(finite_root_height_exp(p) == abs(p.lead()));
  }
}

TEST_CASE("root height sum matches a floating Mahler measure") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> r(-20, 20);
  for (int t = 0; t < 30; ++t) {
    std::vector<Integer> c;
    std::vector<long double> cd;
    for (int i = 0; i < 6; ++i) {
      long x = r(rng);
      if (i == 5 && x == 0) x = 3;
      c.push_back(x);
      cd.push_back(x);
    }
    IntPoly p(c);
    if (p.content() != 1) continue;
    RBound s = roots_height_sum(p, 128);
    CHECK(s.lo_d() <= oracle::log_mahler(cd) + 1e-9);
    CHECK(s.hi_d() >= oracle::log_mahler(cd) - 1e-9);
    RBound coarse = log_mahler_coeff_bounds(p, 64);
    CHECK(coarse.lo_d() <= s.hi_d());
    CHECK(coarse.hi_d() >= s.lo_d());
  }
}

TEST_CASE("root enclosures hold the roots") {
  IntPoly p{-2, 0, 0, 1};  // z^3 - 2
  auto boxes = archimedean_root_enclosures(p, 80);
  REQUIRE(boxes.size() == 3);
  int real = 0;
  for (const auto& b : boxes) real += b.box.im.contains(0.0);
  CHECK(real == 1);
  CHECK(archimedean_log_plus_sum(p, 80).mid_d() == doctest::Approx(std::log(2.0)));
}

TEST_CASE("factorization over Q") {
  IntPoly p = IntPoly{-2, 0, 1} * IntPoly{1, 1} * IntPoly{1, 1} * IntPoly{1, 0, 1};
  auto fs = factor_over_q(p);
  int total = 0;
  for (const auto& f : fs) total += f.poly.degree() * f.multiplicity;
  CHECK(total == 6);
  CHECK(fs.size() == 3);
  CHECK(is_irreducible(IntPoly{-2, 0, 1}));
  CHECK_FALSE(is_irreducible(IntPoly{-4, 0, 1}));
}
