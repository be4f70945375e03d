// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "hcrit/certify/global_checks.hpp"
#include "hcrit/certify/local_checks.hpp"
#include "hcrit/exactnum/complex_roots.hpp"
#include "hcrit/explorer/runner.hpp"

using namespace hcrit;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool ok;
  std::string detail;
};

int failures = 0;

void report(int id, const char* name, const std::function<Outcome()>& body) {
  auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  std::printf("%s %d %s (%.1fs): %s\n", o.ok ? "PASS" : "FAIL", id, name, seconds_since(t0), o.detail.c_str());
  std::fflush(stdout);
  failures += !o.ok;
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

Rational rand_rational(std::mt19937_64& rng, long hnum, long hden) {
  std::uniform_int_distribution<long> n(-hnum, hnum), d(1, hden);
  return ratio(Integer(n(rng)), Integer(d(rng)));
}

RatMap poly_map(long c) {
  return make_map({Rational(c), Rational(0), Rational(1)}, {Rational(1), Rational(0), Rational(0)});
}

// log M(p) from companion-matrix eigenvalues
long double eigen_log_mahler(const std::vector<long>& c) {
  int n = static_cast<int>(c.size()) - 1;
  using Mat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  long double s = std::log(std::fabs(static_cast<long double>(c[n])));
  if (n == 0) return s;
  Mat m = Mat::Zero(n, n);
  for (int i = 1; i < n; ++i) m(i, i - 1) = 1;
  for (int i = 0; i < n; ++i) m(i, n - 1) = -static_cast<long double>(c[i]) / c[n];
  Eigen::EigenSolver<Mat> es(m, false);
  for (int i = 0; i < n; ++i) s += std::max(0.0L, std::log(std::abs(es.eigenvalues()[i])));
  return s;
}

// (lambda z + a2 z^2 + ... + ad z^d) / (1 + b1 z + ... + b_{d-1} z^{d-1})
RatMap random_fixed_zero(std::mt19937_64& rng, int d) {
  for (;;) {
    std::vector<Rational> num(d + 1), den(d + 1);
    num[1] = rand_rational(rng, 9, 4);
    for (int i = 2; i <= d; ++i) num[i] = rand_rational(rng, 9, 4);
    den[0] = 1;
    for (int i = 1; i < d; ++i) den[i] = rand_rational(rng, 9, 4);
    if (num[1] == 0 || num[d] == 0) continue;
    try {
      return make_map(num, den);
    } catch (const std::invalid_argument&) {
    }
  }
}

Outcome criterion1() {
  auto t0 = Clock::now();
  std::string detail;
  bool ok = true;
  for (long c : {0L, -1L, -2L}) {
    RBound h = critical_height(poly_map(c), 1e-6);
    ok = ok && h.contains_zero() && h.width() <= 1e-6;
    detail += "z^2" + (c ? std::to_string(c) : std::string()) + " " + h.to_string(3) + " ";
  }
  double t = seconds_since(t0);
  ok = ok && t < 5;
  return {ok, detail + fmt("total %.2fs", t)};
}

Outcome criterion2() {
  auto t0 = Clock::now();
  auto grid = quad_grid(3, 2);
  std::size_t pass = 0, other = 0;
  double min_slack = 1e300;
  for (const auto& [l0, linf] : grid) {
    Certificate c = check_theorem_quad(l0, linf, 1e-4);
    bool good = c.verdict == Verdict::Pass && c.slack.certainly_nonnegative();
    (good ? pass : other)++;
    min_slack = std::min(min_slack, c.slack.lo_d());
  }
  double t = seconds_since(t0);
  auto q = quadbound_constants(10, 128);
  bool consts = q.coefficient == Rational(1, 2048) && q.constant.lo_d() >= 0.0117 && q.constant.hi_d() <= 0.0120 &&
                q.constant.hi_d() <= 0.012;
  bool ok = other == 0 && grid.size() == 115 && t < 600 && consts;
  return {ok, std::to_string(pass) + "/" + std::to_string(grid.size()) + " pass, min slack " +
                  fmt("%.5f", min_slack) + ", k=10 coefficient " + to_string(q.coefficient) + " constant " +
                  q.constant.to_string(6) + fmt(", %.0fs", t)};
}

Outcome criterion3() {
  std::mt19937_64 rng(2024);
  int failed = 0, done = 0;
  while (done < 200) {
    int d = done % 2 ? 3 : 2;
    std::vector<Rational> num(d + 1), den(d + 1);
    for (int i = 0; i <= d; ++i) num[i] = rand_rational(rng, 10, 10), den[i] = rand_rational(rng, 10, 10);
    RatMap f = [&]() -> RatMap {
      try {
        return make_map(num, den);
      } catch (const std::invalid_argument&) {
        return poly_map(0);
      }
    }();
    if (f.degree() != d || f == poly_map(0)) continue;
    ProjPoint p(rand_rational(rng, 10, 10));
    RBound img = canonical_height(f, f.apply(p), 1e-2);
    RBound base = canonical_height(f, p, 1e-2 / d) * Rational(d);
    failed += !img.overlaps(base);
    ++done;
  }
  return {failed == 0, std::to_string(done) + " samples, " + std::to_string(failed) + " failures"};
}

Outcome criterion4() {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> coef(-1000, 1000);
  std::uniform_int_distribution<int> deg(1, 8);
  int done = 0, exact_fail = 0, oracle_fail = 0;
  double worst = 0;
  while (done < 500) {
    int n = deg(rng);
    std::vector<long> c(n + 1);
    for (auto& x : c) x = coef(rng);
    if (c[n] == 0) continue;
    std::vector<Integer> ci(c.begin(), c.end());
    IntPoly p(ci);
    if (p.content() != 1) continue;
    exact_fail += finite_root_height_exp(p) != abs(p.lead());
    RBound s = roots_height_sum(p, 128);
    double o = static_cast<double>(eigen_log_mahler(c));
    double miss = std::max({0.0, s.lo_d() - o, o - s.hi_d()});
    worst = std::max(worst, miss);
    oracle_fail += miss > 1e-8;
    ++done;
  }
  return {exact_fail == 0 && oracle_fail == 0,
          std::to_string(done) + " polynomials, finite-place mismatches " + std::to_string(exact_fail) +
              ", oracle misses " + std::to_string(oracle_fail) + fmt(", worst excess %.2e", worst)};
}

Outcome criterion5() {
  std::mt19937_64 rng(5);
  std::size_t pass = 0, inconclusive = 0, violation = 0;
  for (int m = 0; m < 100; ++m) {
    RatMap f = random_fixed_zero(rng, m < 50 ? 2 : 3);
    for (int j = 0; j < 5; ++j) {
      Rational z;
      do z = rand_rational(rng, 12, 6);
      while (z == 0);
      // primes <= 7 dividing the map's resultant, its coefficients or the point
      Integer data = f.resultant() * z.get_num() * z.get_den();
      for (const auto& c : f.coefficient_vector())
        if (c != 0) data *= c;
      std::vector<Place> places{Place::archimedean()};
      for (unsigned long p : {2UL, 3UL, 5UL, 7UL})
        if (mpz_divisible_ui_p(data.get_mpz_t(), p)) places.push_back(Place::prime(p));
      for (const auto& v : places) {
        Verdict r = check_greens_lower(f, z, v).verdict;
        (r == Verdict::Pass ? pass : r == Verdict::Violation ? violation : inconclusive)++;
      }
    }
  }
  std::size_t total = pass + inconclusive + violation;
  bool ok = violation == 0 && inconclusive * 50 <= total;
  return {ok, std::to_string(total) + " certificates: " + std::to_string(pass) + " pass, " +
                  std::to_string(inconclusive) + " inconclusive, " + std::to_string(violation) + " violations"};
}

Outcome criterion6() {
  std::mt19937_64 rng(6);
  int arch_ok = 0, arch_n = 0;
  while (arch_n < 20) {
    Rational lambda = rand_rational(rng, 3, 40);
    Rational linf = rand_rational(rng, 10, 3);
    if (lambda == 0 || abs(lambda) >= Rational(1, 8) || lambda * linf == 1) continue;
    Certificate c = check_attraction(RatMap::milnor(lambda, linf), Place::archimedean());
    arch_ok += c.verdict == Verdict::Pass && !c.vacuous && !c.witness.is_null();
    ++arch_n;
  }
  int padic_ok = 0, padic_n = 0;
  while (padic_n < 20) {
    unsigned long p = padic_n % 2 ? 7 : 5;
    Place v = Place::prime(p);
    Rational lambda = rand_rational(rng, 6, 6) * Rational(long(p));
    Rational linf = rand_rational(rng, 10, 10);
    if (lambda == 0 || val_p(lambda, v) < 1 || lambda * linf == 1) continue;
    Certificate c = check_attraction(RatMap::milnor(lambda, linf), v);
    // independent count: nonzero roots of the branch form in the open unit disk
    IntPoly branch = branch_form_quadratic(lambda, linf).dehomogenize();
    int unit = count_roots_in_disk(branch, v, 0, 0, false) - newton_polygon(branch, v).zero_roots;
    padic_ok += c.verdict == Verdict::Pass && !c.vacuous && c.lhs.lo_d() >= 1 && unit >= 1;
    ++padic_n;
  }
  return {arch_ok == 20 && padic_ok == 20, "archimedean witnesses " + std::to_string(arch_ok) +
                                               "/20, p-adic branch counts >= 1 " + std::to_string(padic_ok) + "/20"};
}

Outcome criterion7() {
  std::mt19937_64 rng(7);
  int ok = 0, n = 0;
  while (n < 20) {
    Rational l0 = rand_rational(rng, 5, 3), linf = rand_rational(rng, 5, 3);
    if (l0 * linf == 1) continue;
    ok += crit_height_iterate_identity_check(RatMap::milnor(l0, linf), 2, 1e-2).verdict == Verdict::Pass;
    ++n;
  }
  return {ok == 20, std::to_string(ok) + "/20 within summed widths"};
}

Outcome criterion8() {
  RBound coef = coefficient_Cde(2, 2, 128), cst = constant_Cde(2, 2, 128);
  double expect = std::log(12.0) / 16 + 4.5 * std::log(2.0);
  bool consts = coef.contains(Rational(1, 16)) && std::fabs(cst.mid_d() - expect) < 1e-12;
  std::mt19937_64 rng(8);
  int pass22 = 0, viol = 0, smoke = 0;
  for (int i = 0; i < 30; ++i) {
    Rational c;
    do c = rand_rational(rng, 10, 10);
    while (c == 0);
    // z^2 / (1 + c z), coefficients q z^2 and q + p z
    RatMap f = make_map({Rational(0), Rational(0), Rational(1)}, {Rational(1), c, Rational(0)});
    Verdict v = check_theorem_geom(f, 1e-4).verdict;
    pass22 += v == Verdict::Pass;
    viol += v == Verdict::Violation;
  }
  for (int i = 0; i < 5; ++i) {
    RatMap f = make_map({Rational(0), Rational(0), Rational(1), rand_rational(rng, 10, 10)},
                        {Rational(1), rand_rational(rng, 10, 10), rand_rational(rng, 10, 10), Rational(0)});
    Verdict v = check_theorem_geom(f, 1e-3).verdict;
    viol += v == Verdict::Violation;
    smoke += v != Verdict::Violation;
  }
  return {consts && pass22 == 30 && viol == 0, "C_{2,2} = " + cst.to_string(8) + ", coefficient " +
                                                   coef.to_string(6) + "; d=e=2 " + std::to_string(pass22) +
                                                   "/30 pass; d=3,e=2 smoke " + std::to_string(smoke) +
                                                   "/5 without violation"};
}

Outcome criterion9() {
  const double l2 = std::log(2.0), ls = std::log(std::sqrt(2.0) + 1), l12 = std::log(12.0);
  RBound b9 = kbound_height_bound(9, RBound(), 128);
  bool ok = std::fabs(b9.mid_d() - ((42 * l2 + 18 * ls) / 9 + l12)) < 1e-12;
  double prev = b9.mid_d();
  for (int k = 10; k <= 40; ++k) {
    double b = kbound_height_bound(k, RBound(), 128).mid_d();
    ok = ok && b < prev && b > l12;
    prev = b;
  }
  double far = kbound_height_bound(1000000, RBound(), 128).mid_d() - l12;
  ok = ok && far > 0 && far < 1e-4;
  Certificate c = eval_kbound(Rational(13), 9, RBound(), 128);
  ok = ok && c.verdict == Verdict::Pass;
  return {ok, "k=9 bound " + b9.to_string(6) + fmt(", k=40 bound %.6f", prev) + fmt(", log 12 = %.6f", l12) +
                  fmt(", excess at k=1e6 %.2e", far)};
}

Outcome criterion10() {
  JobSpec job;
  job.task = Task::SweepQuad;
  job.grid_num_cap = 2;
  job.grid_den_cap = 1;
  job.tol = 1e-4;
  std::ostringstream a, b;
  int rc1 = run(job, a);
  job.jobs = 3;
  int rc2 = run(job, b);
  auto body = [](const std::string& s) { return s.substr(s.find('\n') + 1); };
  const std::string sa = a.str(), sb = b.str();
  bool same = body(sa) == body(sb);
  std::size_t lines = std::count(sa.begin(), sa.end(), '\n');
  return {same && rc1 == 0 && rc2 == 0, std::to_string(lines) + " lines, bodies " + (same ? "identical" : "differ")};
}

}  // namespace

int main() {
  report(1, "pcf-zero-height", criterion1);
  report(2, "quadratic-grid", criterion2);
  report(3, "functional-equation", criterion3);
  report(4, "newton-mahler", criterion4);
  report(5, "greens-lower", criterion5);
  report(6, "attraction-witness", criterion6);
  report(7, "iterate-identity", criterion7);
  report(8, "super-attracting", criterion8);
  report(9, "k-bound", criterion9);
  report(10, "determinism", criterion10);
  return failures == 0 ? 0 : 1;
}
