#include "hcrit/exactnum/rbound.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace hcrit {

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}
BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(v_, other.prec());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}
BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}
BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.prec());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}
BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}
BigFloat::~BigFloat() { mpfr_clear(v_); }

std::string BigFloat::to_string(int digits) const {
  std::vector<char> buf(digits + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
  return buf.data();
}

std::pair<Integer, long> BigFloat::mantissa_exponent() const {
  if (!mpfr_number_p(v_)) throw std::domain_error("non-finite endpoint");
  if (mpfr_zero_p(v_)) return {Integer(0), 0};
  Integer m;
  long e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
  // strip trailing zero bits so the representation is canonical
  mp_bitcnt_t tz = mpz_scan1(m.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(m.get_mpz_t(), m.get_mpz_t(), tz);
  return {m, e + static_cast<long>(tz)};
}

BigFloat BigFloat::from_mantissa_exponent(const Integer& m, long e) {
  BigFloat out(std::max<mpfr_prec_t>(64, bit_length(m)));
  mpfr_set_z_2exp(out.v_, m.get_mpz_t(), e, MPFR_RNDN);  // exact: enough bits
  return out;
}

Rational BigFloat::to_rational() const {
  auto [m, e] = mantissa_exponent();
  Rational q(m);
  if (e >= 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), e);
  } else {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), -e);
  }
  return q;
}

namespace {

mpfr_prec_t join(const RBound& a, const RBound& b) { return std::max(a.prec(), b.prec()); }

using Binary = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

BigFloat apply(Binary op, const BigFloat& x, const BigFloat& y, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  BigFloat out(prec);
  op(out.get(), x.get(), y.get(), rnd);
  return out;
}

using Unary = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

BigFloat apply(Unary op, const BigFloat& x, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  BigFloat out(prec);
  op(out.get(), x.get(), rnd);
  return out;
}

const BigFloat& min_of(const BigFloat& a, const BigFloat& b) { return b < a ? b : a; }
const BigFloat& max_of(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

}  // namespace

RBound::RBound() : lo_(64), hi_(64) {}

RBound::RBound(BigFloat lo, BigFloat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (mpfr_nan_p(lo_.get()) || mpfr_nan_p(hi_.get())) throw std::domain_error("NaN in interval");
  if (hi_ < lo_) throw std::invalid_argument("interval with lo > hi");
}

RBound RBound::from_int(const Integer& z, mpfr_prec_t prec) {
  BigFloat lo(prec), hi(prec);
  mpfr_set_z(lo.get(), z.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(hi.get(), z.get_mpz_t(), MPFR_RNDU);
  return RBound(std::move(lo), std::move(hi));
}

RBound RBound::from_rational(const Rational& q, mpfr_prec_t prec) {
  BigFloat lo(prec), hi(prec);
  mpfr_set_q(lo.get(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi.get(), q.get_mpq_t(), MPFR_RNDU);
  return RBound(std::move(lo), std::move(hi));
}

RBound RBound::from_double(double x, mpfr_prec_t prec) {
  BigFloat lo(std::max<mpfr_prec_t>(prec, 53));
  mpfr_set_d(lo.get(), x, MPFR_RNDN);
  BigFloat hi = lo;
  return RBound(std::move(lo), std::move(hi));
}

RBound RBound::interval(const Rational& lo, const Rational& hi, mpfr_prec_t prec) {
  BigFloat l(prec), h(prec);
  mpfr_set_q(l.get(), lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(h.get(), hi.get_mpq_t(), MPFR_RNDU);
  return RBound(std::move(l), std::move(h));
}

RBound RBound::hull(const RBound& a, const RBound& b) {
  return RBound(min_of(a.lo_, b.lo_), max_of(a.hi_, b.hi_));
}

RBound RBound::pi(mpfr_prec_t prec) {
  BigFloat lo(prec), hi(prec);
  mpfr_const_pi(lo.get(), MPFR_RNDD);
  mpfr_const_pi(hi.get(), MPFR_RNDU);
  return RBound(std::move(lo), std::move(hi));
}

RBound RBound::log_of(const Integer& n, mpfr_prec_t prec) {
  if (n <= 0) throw std::domain_error("log of a non-positive integer");
  if (n == 1) return RBound(BigFloat(prec), BigFloat(prec));
  // log n is about bit_length(n); keep prec bits after the binary point
  auto extra = static_cast<mpfr_prec_t>(bit_length(Integer(static_cast<unsigned long>(bit_length(n)))));
  return log(from_int(n, prec + 8 + extra)).with_prec(prec + extra);
}

RBound RBound::log_of(const Rational& q, mpfr_prec_t prec) {
  if (q <= 0) throw std::domain_error("log of a non-positive rational");
  if (q == 1) return RBound(BigFloat(prec), BigFloat(prec));
  // log of numerator and denominator separately keeps the relative error small
  return log_of(Integer(q.get_num()), prec) - log_of(Integer(q.get_den()), prec);
}

double RBound::mid_d() const {
  BigFloat m(prec() + 1);
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return m.to_double();
}

BigFloat RBound::width_big() const { return apply(mpfr_sub, hi_, lo_, prec(), MPFR_RNDU); }

double RBound::width() const { return width_big().to_double(MPFR_RNDU); }

RBound RBound::with_prec(mpfr_prec_t p) const {
  return RBound(apply(mpfr_set, lo_, p, MPFR_RNDD), apply(mpfr_set, hi_, p, MPFR_RNDU));
}

bool RBound::contains(const Rational& q) const {
  return mpfr_cmp_q(lo_.get(), q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), q.get_mpq_t()) >= 0;
}
bool RBound::contains(double x) const {
  return mpfr_cmp_d(lo_.get(), x) <= 0 && mpfr_cmp_d(hi_.get(), x) >= 0;
}
bool RBound::contains(const RBound& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
bool RBound::overlaps(const RBound& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }
bool RBound::contains_zero() const { return sign_lo() <= 0 && sign_hi() >= 0; }

RBound RBound::clamp_below(const Rational& floor) const {
  BigFloat f(prec());
  mpfr_set_q(f.get(), floor.get_mpq_t(), MPFR_RNDD);
  return RBound(max_of(lo_, f), max_of(hi_, f));
}

std::string RBound::to_string(int digits) const {
  return "[" + lo_.to_string(digits) + ", " + hi_.to_string(digits) + "]";
}

RBound RBound::operator-() const {
  return RBound(apply(mpfr_neg, hi_, hi_.prec(), MPFR_RNDD), apply(mpfr_neg, lo_, lo_.prec(), MPFR_RNDU));
}

RBound operator+(const RBound& a, const RBound& b) {
  auto p = join(a, b);
  return RBound(apply(mpfr_add, a.lo_, b.lo_, p, MPFR_RNDD), apply(mpfr_add, a.hi_, b.hi_, p, MPFR_RNDU));
}

RBound operator-(const RBound& a, const RBound& b) {
  auto p = join(a, b);
  return RBound(apply(mpfr_sub, a.lo_, b.hi_, p, MPFR_RNDD), apply(mpfr_sub, a.hi_, b.lo_, p, MPFR_RNDU));
}

RBound operator*(const RBound& a, const RBound& b) {
  auto p = join(a, b);
  const BigFloat* xs[2] = {&a.lo_, &a.hi_};
  const BigFloat* ys[2] = {&b.lo_, &b.hi_};
  BigFloat lo(p), hi(p);
  bool first = true;
  for (auto* x : xs) {
    for (auto* y : ys) {
      BigFloat d = apply(mpfr_mul, *x, *y, p, MPFR_RNDD);
      BigFloat u = apply(mpfr_mul, *x, *y, p, MPFR_RNDU);
      if (first || d < lo) lo = std::move(d);
      if (first || hi < u) hi = std::move(u);
      first = false;
    }
  }
  return RBound(std::move(lo), std::move(hi));
}

RBound operator/(const RBound& a, const RBound& b) {
  if (b.contains_zero()) throw std::domain_error("division by an interval containing 0");
  auto p = join(a, b);
  const BigFloat* xs[2] = {&a.lo_, &a.hi_};
  const BigFloat* ys[2] = {&b.lo_, &b.hi_};
  BigFloat lo(p), hi(p);
  bool first = true;
  for (auto* x : xs) {
    for (auto* y : ys) {
      BigFloat d = apply(mpfr_div, *x, *y, p, MPFR_RNDD);
      BigFloat u = apply(mpfr_div, *x, *y, p, MPFR_RNDU);
      if (first || d < lo) lo = std::move(d);
      if (first || hi < u) hi = std::move(u);
      first = false;
    }
  }
  return RBound(std::move(lo), std::move(hi));
}

RBound operator*(const RBound& a, const Rational& q) { return a * RBound::from_rational(q, a.prec()); }
RBound operator/(const RBound& a, const Rational& q) {
  if (q == 0) throw std::domain_error("division by zero");
  return a / RBound::from_rational(q, a.prec());
}
RBound operator+(const RBound& a, const Rational& q) { return a + RBound::from_rational(q, a.prec()); }
RBound operator-(const RBound& a, const Rational& q) { return a - RBound::from_rational(q, a.prec()); }

RBound log(const RBound& x) {
  if (x.sign_lo() <= 0) throw std::domain_error("log of an interval reaching 0");
  auto p = x.prec();
  return RBound(apply(mpfr_log, x.lo(), p, MPFR_RNDD), apply(mpfr_log, x.hi(), p, MPFR_RNDU));
}

RBound log_plus(const RBound& x) {
  auto p = x.prec();
  BigFloat lo(p), hi(p);
  if (mpfr_cmp_ui(x.lo().get(), 1) > 0) mpfr_log(lo.get(), x.lo().get(), MPFR_RNDD);
  if (mpfr_cmp_ui(x.hi().get(), 1) > 0) mpfr_log(hi.get(), x.hi().get(), MPFR_RNDU);
  if (mpfr_sgn(lo.get()) < 0) mpfr_set_zero(lo.get(), 1);
  return RBound(std::move(lo), std::move(hi));
}

RBound exp(const RBound& x) {
  auto p = x.prec();
  return RBound(apply(mpfr_exp, x.lo(), p, MPFR_RNDD), apply(mpfr_exp, x.hi(), p, MPFR_RNDU));
}

RBound sqrt(const RBound& x) {
  if (x.sign_lo() < 0) throw std::domain_error("sqrt of a negative interval");
  auto p = x.prec();
  return RBound(apply(mpfr_sqrt, x.lo(), p, MPFR_RNDD), apply(mpfr_sqrt, x.hi(), p, MPFR_RNDU));
}

RBound abs(const RBound& x) {
  if (x.sign_lo() >= 0) return x;
  if (x.sign_hi() <= 0) return -x;
  auto p = x.prec();
  BigFloat m = apply(mpfr_neg, x.lo(), p, MPFR_RNDU);
  return RBound(BigFloat(p), max_of(m, x.hi()));
}

RBound sqr(const RBound& x) {
  RBound a = abs(x);
  auto p = x.prec();
  return RBound(apply(mpfr_sqr, a.lo(), p, MPFR_RNDD), apply(mpfr_sqr, a.hi(), p, MPFR_RNDU));
}

RBound max(const RBound& a, const RBound& b) { return RBound(max_of(a.lo(), b.lo()), max_of(a.hi(), b.hi())); }
RBound min(const RBound& a, const RBound& b) { return RBound(min_of(a.lo(), b.lo()), min_of(a.hi(), b.hi())); }

RBound pow(const RBound& x, const RBound& y) { return exp(y * log(x)); }

CBound CBound::from_parts(const BigFloat& re, const BigFloat& im) {
  return {RBound(re, re), RBound(im, im)};
}

CBound operator*(const CBound& a, const CBound& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

CBound operator/(const CBound& a, const CBound& b) {
  RBound n = b.norm2();
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

CBound CBound::inflate(const RBound& r) const {
  RBound pad = RBound::hull(-hcrit::abs(r), hcrit::abs(r));
  return {re + pad, im + pad};
}

}  // namespace hcrit
