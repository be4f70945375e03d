#include "hcrit/certify/constants.hpp"

#include <stdexcept>

namespace hcrit {

namespace {

RBound logi(long n, mpfr_prec_t prec) { return RBound::log_of(Integer(n), prec); }

Rational q(long a, long b) { return ratio(Integer(a), Integer(b)); }

Integer ipow(unsigned long b, unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), b, e);
  return r;
}

// max over 1 <= m <= d of v_p(m)
long max_val(int d, unsigned long p) {
  long best = 0;
  for (int m = 1; m <= d; ++m) best = std::max(best, val_p(Integer(m), p));
  return best;
}

RBound sqrt2_plus_1(mpfr_prec_t prec) { return sqrt(RBound::from_int(2, prec)) + Rational(1); }

}  // namespace

ExplicitConstants::ExplicitConstants(int degree) : d(degree) {
  if (d < 2) throw std::invalid_argument("degree must be at least 2");
}

Integer ExplicitConstants::C_v(const Place& v) const { return v.is_archimedean() ? ipow(3, d - 1) : Integer(1); }

Rational ExplicitConstants::eps_v(const Place& v) const {
  if (v.is_archimedean()) return d == 2 ? Rational(1, 8) : Rational(Integer(1), ipow(3, d - 1));
  return Rational(Integer(1), ipow(v.prime(), d * max_val(d, v.prime())));
}

RBound ExplicitConstants::eps_sum(mpfr_prec_t prec) const {
  Integer m = std::max(Integer(8), ipow(3, d - 1));
  return -(RBound::log_of(lcm_range(d), prec) * Rational(d) + RBound::log_of(m, prec));
}

RBound ExplicitConstants::sa_C_v(int e, const Place& v, mpfr_prec_t prec) const {
  if (e < 2 || e > d) throw std::invalid_argument("local degree e must satisfy 2 <= e <= d");
  if (v.is_archimedean())
    return logi(2, prec) * q(2 * e + 1, e - 1) + logi(3, prec) * q(d - e, e - 1);
  return logi(long(v.prime()), prec) * sa_C_v_padic(e, v.prime());
}

Rational ExplicitConstants::sa_C_v_padic(int e, unsigned long p) const {
  return q(d * max_val(d, p), e - 1);
}

RBound ExplicitConstants::c2(mpfr_prec_t prec) const {
  return logi(3, prec) * Rational(d - 1) + RBound::log_of(lcm_range(d), prec) * Rational(d);
}

RBound ExplicitConstants::c0(mpfr_prec_t prec) const {
  RBound conj = logi(2, prec) * Rational((d + 1) * (d + 1)) + logi((d + 1) * (d + 2), prec);
  Integer f = factorial(2 * d - 1) * (2 * d);
  return conj * Rational(4 * d - 1) + RBound::log_of(f, prec) * Rational(2) + logi(2, prec) - eps_sum(prec);
}

Json ExplicitConstants::to_json(mpfr_prec_t prec) const {
  Json j;
  j["d"] = d;
  j["C_arch"] = to_string(C_v(Place::archimedean()));
  j["eps_arch"] = to_string(eps_v(Place::archimedean()));
  Json small = Json::object();
  for (unsigned long p = 2; p <= static_cast<unsigned long>(d); ++p)
    if (is_prime(Integer(p))) small[std::to_string(p)] = to_string(eps_v(Place::prime(p)));
  j["eps_small_primes"] = small;
  j["eps_sum"] = eps_sum(prec).to_string();
  j["c2"] = c2(prec).to_string();
  j["c0"] = c0(prec).to_string();
  return j;
}

RBound quad_eps(const Place& v, mpfr_prec_t prec) {
  if (v.is_archimedean()) return sqrt(RBound::from_int(2, prec)) - Rational(1);
  if (v.prime() == 2) return RBound::from_rational(Rational(1, 4), prec);
  return RBound::from_int(1, prec);
}

namespace {

// Q^(log d / log e - shift)
RBound q_power(int d, int e, int shift, mpfr_prec_t prec) {
  if (e < 2 || e > d) throw std::invalid_argument("local degree e must satisfy 2 <= e <= d");
  long q = 4L * d * d - 2L * (e + 2) * d + e + 2;
  RBound x = logi(d, prec) / logi(e, prec) - Rational(shift);
  if (d == e) x = RBound::from_int(1 - shift, prec);
  return pow(RBound::from_int(q, prec), x);
}

}  // namespace

RBound coefficient_Cde(int d, int e, mpfr_prec_t prec) {
  return RBound::from_int(1, prec) / (q_power(d, e, 0, prec) * Rational(long(d - 1) * d * d));
}

RBound constant_Cde(int d, int e, mpfr_prec_t prec) {
  RBound denom = Rational(long(d) * d * (d - 1)) * q_power(d, e, 0, prec);
  RBound first = RBound::log_of(Integer(factorial(2 * d - 1) * 2), prec) * Rational(2 * d - e - 1) / denom;
  RBound inner = logi(3, prec) * q(2 * (d - e), e - 1) + logi(2, prec) * q(4 * e - 1, e - 1) +
                 RBound::log_of(lcm_range(d), prec) * q(d, e - 1);
  RBound second = inner * Rational(e) / (Rational(long(d) * d * (d - 1)) * q_power(d, e, 1, prec));
  return first + second;
}

QuadBoundConstants quadbound_constants(int k, mpfr_prec_t prec) {
  Integer den = ipow(2, k + 2);
  Rational coef(Integer(k - 8), den);
  coef.canonicalize();
  RBound c = logi(2, prec) * Rational(4) + (logi(2, prec) * Rational(2) + log(sqrt2_plus_1(prec))) * Rational(2 * k);
  return {coef, c / Rational(den)};
}

RBound corollary_threshold(mpfr_prec_t prec) { return logi(12, prec); }

RBound kbound_height_bound(int k, const RBound& hcrit, mpfr_prec_t prec) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (k == 8) throw std::invalid_argument("k = 8 is a pole of the k-bound");
  Rational growth = Rational(ipow(2, k + 1)) * (Rational(1) + q(2, k - 8));
  RBound num = hcrit * growth + logi(2, prec) * q(6 * k - 12, k - 8) +
               log(sqrt2_plus_1(prec)) * q(2 * k, k - 8);
  return corollary_threshold(prec) + num / Rational(k);
}

FibrationConstants fibration_constants(int d, int n, int m, mpfr_prec_t prec) {
  if (d < 2 || n < 1 || m < 1) throw std::invalid_argument("fibration constants need d >= 2 and n, m >= 1");
  Integer big = 1;
  for (int i = 0; i < n * m; ++i) {
    big *= d;
    if (big > (1 << 22)) throw std::overflow_error("d^(nm) too large for an exact lcm");
  }
  unsigned long D = big.get_ui();
  RBound exact = (logi(3, prec) * Rational(Integer(D - 1)) + RBound::log_of(lcm_range(D), prec) * Rational(Integer(D))) /
                 Rational(m);
  RBound numer = RBound::from_rational(q(104, 100), prec) * Rational(big * big) +
                 logi(3, prec) * Rational(big) - logi(3, prec);
  return {exact, numer / Rational(m), numer / Rational(n)};
}

}  // namespace hcrit
