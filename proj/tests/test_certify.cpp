#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hcrit/certify/global_checks.hpp"
#include "hcrit/certify/local_checks.hpp"
#include "oracles.hpp"

using namespace hcrit;

namespace {

const double L2 = std::log(2.0), L3 = std::log(3.0), LS = std::log(std::sqrt(2.0) + 1);

RBound num(double x) { return RBound::from_double(x, 64); }

RatMap fixed_zero_quadratic(long lam_num, long lam_den, long a, long b) {
  // (lambda z + a z^2) / (1 + b z): f(0) = 0, f(inf) = inf
  return make_map({Rational(0), ratio(Integer(lam_num), Integer(lam_den)), Rational(a)},
                  {Rational(1), Rational(b), Rational(0)});
}

}  // namespace

TEST_CASE("certificate verdicts and serialization") {
  Certificate ok = Certificate::inequality("t", "a >= b", Json::object(), num(2), num(1), 64);
  CHECK(ok.verdict == Verdict::Pass);
  CHECK(ok.slack.lo_d() == doctest::Approx(1.0));
  Certificate bad = Certificate::inequality("t", "a >= b", Json::object(), num(1), num(2), 64);
  CHECK(bad.verdict == Verdict::Violation);
  Certificate unsure = Certificate::inequality("t", "a >= b", Json::object(),
                                               RBound::interval(Rational(0), Rational(2), 64), num(1), 64);
  CHECK(unsure.verdict == Verdict::Inconclusive);
  Certificate back = Certificate::from_json(ok.to_json());
  CHECK(back.to_json() == ok.to_json());
  CHECK(Certificate::identity("i", "a = b", Json::object(), num(1), num(1), 64).verdict == Verdict::Pass);
  CHECK(Certificate::identity("i", "a = b", Json::object(), num(1), num(2), 64).verdict == Verdict::Violation);
  Certificate vac = Certificate::vacuous_pass("v", "x", Json::object(), "no branch point", 64);
  CHECK(vac.vacuous);
  CHECK(vac.pass());
  CHECK(parse_verdict(to_string(Verdict::Inconclusive)) == Verdict::Inconclusive);
}

TEST_CASE("explicit constants") {
  ExplicitConstants c2(2), c3(3);
  CHECK(c2.eps_v(Place::archimedean()) == Rational(1, 8));
  CHECK(c3.eps_v(Place::archimedean()) == Rational(1, 9));
  CHECK(c2.eps_v(Place::prime(2)) == Rational(1, 4));
  CHECK(c3.eps_v(Place::prime(3)) == Rational(1, 27));
  CHECK(c2.eps_v(Place::prime(5)) == 1);
  CHECK(c3.C_v(Place::archimedean()) == 9);
  CHECK(c2.eps_sum(64).mid_d() == doctest::Approx(-(2 * L2 + std::log(8.0))));
  CHECK(c3.eps_sum(64).mid_d() == doctest::Approx(-(3 * std::log(6.0) + std::log(9.0))));
  CHECK(c2.c2(64).mid_d() == doctest::Approx(L3 + 2 * L2));
  double c0 = 7 * (9 * L2 + std::log(12.0)) + 2 * std::log(24.0) + L2 + 2 * L2 + std::log(8.0);
  CHECK(c2.c0(64).mid_d() == doctest::Approx(c0));
}

TEST_CASE("quadratic attraction radii") {
  CHECK(quad_eps(Place::archimedean(), 64).mid_d() == doctest::Approx(std::sqrt(2.0) - 1));
  CHECK(quad_eps(Place::prime(2), 64).mid_d() == doctest::Approx(0.25));
  CHECK(quad_eps(Place::prime(7), 64).mid_d() == doctest::Approx(1.0));
}

TEST_CASE("super-attracting constants at d = e = 2") {
  CHECK(coefficient_Cde(2, 2, 128).mid_d() == doctest::Approx(1.0 / 16));
  CHECK(constant_Cde(2, 2, 128).mid_d() == doctest::Approx(std::log(12.0) / 16 + 4.5 * L2));
  // d = 3, e = 2: Q = 36 - 24 + 4 = 16, exponent log 3 / log 2
  double Q = std::pow(16.0, L3 / L2);
  CHECK(coefficient_Cde(3, 2, 128).mid_d() == doctest::Approx(1.0 / (2 * 9 * Q)));
  CHECK_THROWS_AS(coefficient_Cde(2, 3, 64), std::invalid_argument);
}

TEST_CASE("quadratic bound constants at k = 10") {
  auto q = quadbound_constants(10, 128);
  CHECK(q.coefficient == Rational(1, 2048));
  double expect = (4 * L2 + 20 * (2 * L2 + LS)) / 4096;
  CHECK(q.constant.mid_d() == doctest::Approx(expect));
  CHECK(q.constant.lo_d() >= 0.0117);
  CHECK(q.constant.hi_d() <= 0.0120);
}

TEST_CASE("k-bound") {
  RBound b9 = kbound_height_bound(9, RBound(), 128);
  CHECK(b9.mid_d() == doctest::Approx((42 * L2 + 18 * LS) / 9 + std::log(12.0)));
  CHECK(42 * L2 + 18 * LS < 45);
  CHECK_THROWS(kbound_height_bound(8, RBound(), 64));
  CHECK(corollary_threshold(64).mid_d() == doctest::Approx(std::log(12.0)));
}

TEST_CASE("fibration constants") {
  auto f = fibration_constants(2, 1, 1, 64);
  CHECK(f.exact.mid_d() == doctest::Approx(L3 + 2 * L2));
  CHECK(f.bounded.mid_d() == doctest::Approx(1.04 * 4 + 2 * L3 - L3));
  auto g = fibration_constants(2, 2, 1, 64);
  CHECK(g.over_n.mid_d() * 2 == doctest::Approx(g.bounded.mid_d()));
  CHECK_THROWS_AS(fibration_constants(2, 12, 2, 64), std::overflow_error);
}

TEST_CASE("root and coefficient bounds pass everywhere") {
  IntPoly p{6, -5, 0, 10};
  for (auto v : {Place::archimedean(), Place::prime(2), Place::prime(3), Place::prime(5)}) {
    auto pair = check_root_coeff_bounds(p, v);
    CHECK(pair.upper.verdict == Verdict::Pass);
    CHECK(pair.lower.verdict == Verdict::Pass);
  }
}

TEST_CASE("Green's function lower bound") {
  RatMap f = fixed_zero_quadratic(3, 1, 2, 5);
  for (auto v : {Place::archimedean(), Place::prime(2), Place::prime(5)})
    for (long z : {1L, -3L, 7L}) CHECK(check_greens_lower(f, Rational(z, 2), v).verdict != Verdict::Violation);
  CHECK(check_greens_lower(f, Rational(1, 3), Place::archimedean()).verdict == Verdict::Pass);
}

TEST_CASE("attraction witness") {
  Certificate a = check_attraction(RatMap::milnor(Rational(1, 100), Rational(3)), Place::archimedean());
  CHECK(a.verdict == Verdict::Pass);
  CHECK_FALSE(a.vacuous);
  Certificate p = check_attraction(RatMap::milnor(Rational(7, 2), Rational(1, 3)), Place::prime(7));
  CHECK(p.verdict == Verdict::Pass);
  CHECK(check_attraction(RatMap::milnor(Rational(2), Rational(3)), Place::archimedean()).vacuous);
}

TEST_CASE("key and main-case inequalities") {
  RatMap f = RatMap::milnor(Rational(1, 100), Rational(3));
  for (int k = 1; k <= 3; ++k) {
    CHECK(check_key(f, k, Place::archimedean()).verdict == Verdict::Pass);
    CHECK(check_maincase(f, k, Place::archimedean()).verdict == Verdict::Pass);
  }
}

TEST_CASE("super-attracting branch and estimate") {
  RatMap f = make_map({Rational(0), Rational(0), Rational(1), Rational(5000)},
                      {Rational(1), Rational(0), Rational(0), Rational(0)});
  CHECK(check_sabranch(f, Place::archimedean()).verdict == Verdict::Pass);
  RatMap g = make_map({Rational(0), Rational(0), Rational(1), Rational(1, 25)},
                      {Rational(1), Rational(0), Rational(0), Rational(0)});
  CHECK(check_sabranch(g, Place::prime(5)).verdict == Verdict::Pass);
  CHECK(check_saest(g, 2, Place::prime(5)).verdict != Verdict::Violation);
}

TEST_CASE("global bounds") {
  RatMap f = RatMap::milnor(Rational(2), Rational(3));
  CHECK(check_fixedzero_global(f, 2, 1e-2).verdict == Verdict::Pass);
  Certificate m = check_mainglobal(f, 2, 1e-2);
  CHECK(m.verdict == Verdict::Pass);
  CHECK(m.witness["good_conj"]["verdict"] == "pass");
  CHECK(check_theorem_quad(Rational(2), Rational(3), 1e-3).verdict == Verdict::Pass);
  auto q = check_quad_k(Rational(-3), Rational(0), 3, 1e-2);
  CHECK(q.quad.inputs["swapped"] == true);
  CHECK(q.quad.verdict == Verdict::Pass);
  CHECK(q.quadbound.verdict == Verdict::Pass);
  CHECK(q.swap.verdict == Verdict::Pass);
  CHECK(check_theorem_geom(RatMap::milnor(Rational(0), Rational(5)), 1e-3).verdict == Verdict::Pass);
  RatMap no_pair = make_map({Rational(2), Rational(0), Rational(1)}, {Rational(1), Rational(0), Rational(0)});
  CHECK_THROWS_WITH_AS(check_mainglobal(no_pair, 1, 1e-2), "needs rational fixed pair", std::invalid_argument);
}

TEST_CASE("k-bound certificate") {
  CHECK(eval_kbound(Rational(13), 10, RBound(), 128).verdict == Verdict::Pass);
  // h(lambda) far beyond the bound with zero critical height is a violation
  CHECK(eval_kbound(Integer(1) << 200, 9, RBound(), 128).verdict == Verdict::Violation);
  CHECK_THROWS(eval_kbound(Rational(2), 8, RBound(), 128));
}
