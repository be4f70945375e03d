#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "hcrit/exactnum/complex_roots.hpp"
#include "hcrit/heights/heights.hpp"

// Green's function g_v(D, 0) for the divisor D of a form P of degree k.
// Writing the roots as points q_i of a primitive lift F of f,
//   g_v(D, 0) = log M_v(P) - log|P(0,1)|_v + sum_i G_v(q_i) + k (H_F(0,1) - r_v(F))
// where G_v(q) = sum_n d^-(n+1) (log||F(F^n q)|| - d log||F^n q||). The answer
// does not depend on the lift, so the canonical integer lift is used.

namespace hcrit {

namespace {

void require_fixed_zero(const RatMap& f, const IntPoly& p) {
  if (f.f1().coeff(0) != 0) throw std::invalid_argument("green_local needs f(0) = 0");
  if (!p.is_form() || p.degree() < 0 || p.is_zero()) throw std::invalid_argument("green_local needs a nonzero form");
  if (p.coeff(0) == 0) throw std::domain_error("pairing at its pole");
}

Integer ipow(unsigned long b, unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), b, e);
  return r;
}

// Symmetric residues mod m.
IntPoly reduce_mod(const IntPoly& p, const Integer& m) {
  std::vector<Integer> c = p.coeffs();
  Integer half = m / 2;
  for (auto& x : c) {
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    if (x > half) x -= m;
  }
  return IntPoly::form(std::move(c));
}

// Number of steps with k * w / (d^N (d - 1)) <= tol.
int tail_steps(int d, double k_w, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  int n = 0;
  double scale = d - 1;
  while (k_w / scale > tol) {
    scale *= d;
    if (++n > 4096) throw std::runtime_error("green tolerance out of reach");
  }
  return n;
}

LocalValue green_padic(const RatMap& f, const IntPoly& p, unsigned long prime, double tol) {
  const int d = f.degree();
  const int k = p.degree();
  const Place v = Place::prime(prime);
  const long t = val_p(f.resultant(), prime);
  const long vb0 = val_p(f.f2().coeff(0), prime);
  Rational base = Rational(val_p(p.coeff(0), prime)) - ratio(k * vb0, d - 1) + ratio(k * t, d * (d - 1));
  if (t == 0) return LocalValue::padic(v, base);

  const int steps = tail_steps(d, double(k) * t * std::log(double(prime)), tol);
  long digits = long(steps) * k * t + k * t + 1;
  IntPoly cur = reduce_mod(p, ipow(prime, digits));
  Rational g = 0;
  Integer dn = d;
  for (int n = 0; n < steps; ++n) {
    IntPoly r = pushforward_form(f, cur, true);
    long c = digits;
    for (const auto& x : r.coeffs())
      if (x != 0) c = std::min(c, val_p(x, prime));
    if (c >= digits) throw std::logic_error("p-adic precision exhausted in green_local");
    g -= Rational(c) / Rational(dn);
    digits -= c;
    cur = reduce_mod(r.divexact(ipow(prime, c)), ipow(prime, digits));
    dn *= d;
  }
  // remaining steps each lie in [-k t, 0]; dn = d^(N+1) here
  Rational tail_lo = -Rational(Integer(k * t) * d, dn * (d - 1));
  tail_lo.canonicalize();
  return LocalValue::padic(v, base + g + tail_lo, base + g);
}

// A point of P^1 with max(|x|, |y|) close to 1: (u, 1) or (1, u).
struct ArchPoint {
  CBound u;
  bool at_y;  // true for (u, 1)
};

struct ArchLift {
  IntPoly a_y, b_y, a_x, b_x;  // F1(u, 1), F2(u, 1), F1(1, u), F2(1, u)
};

RBound log_step(const ArchLift& lift, ArchPoint& q, int d) {
  CBound x = q.at_y ? lift.a_y.eval(q.u) : lift.a_x.eval(q.u);
  CBound y = q.at_y ? lift.b_y.eval(q.u) : lift.b_x.eval(q.u);
  RBound ax = x.abs(), ay = y.abs();
  RBound term = log(max(ax, ay)) - log_plus(q.u.abs()) * Rational(d);
  if (ax.mid_d() <= ay.mid_d()) q = {x / y, true};
  else q = {y / x, false};
  return term;
}

RBound green_arch_at(const RatMap& f, const IntPoly& p, double tol, mpfr_prec_t prec) {
  const int d = f.degree();
  const int k = p.degree();
  IntPoly pu = p.dehomogenize();
  const int at_inf = k - pu.degree();

  RBound norm = RBound::log_of(std::max(max_abs_coeff(f.f1()), max_abs_coeff(f.f2())), prec);
  RBound log_res = RBound::log_of(Integer(abs(f.resultant())), prec);
  RBound up = norm + RBound::log_of(Integer(d + 1), prec);
  RBound low = norm * Rational(2 * d - 1) + RBound::log_of(Integer(factorial(2 * d - 1) * (2 * d)), prec) - log_res;
  const int steps = tail_steps(d, k * (up.hi_d() + low.hi_d()), tol / 2);
  Integer dn = ipow(d, steps);
  Rational scale(Integer(k), dn * (d - 1));
  scale.canonicalize();
  RBound tail = RBound::hull(-(low * scale), up * scale);

  ArchLift lift{IntPoly(f.f1().coeffs()), IntPoly(f.f2().coeffs()), IntPoly(f.f1().reversed().coeffs()),
                IntPoly(f.f2().reversed().coeffs())};

  RBound g = RBound::from_int(0, prec);
  RBound mahler = RBound::log_of(Integer(abs(pu.lead())), prec);
  std::vector<std::pair<ArchPoint, int>> pts;
  if (at_inf > 0) {
    CBound zero{RBound::from_int(0, prec), RBound::from_int(0, prec)};
    pts.push_back({{zero, false}, at_inf});
  }
  if (pu.degree() > 0) {
    for (const auto& rb : archimedean_root_enclosures(pu, prec)) {
      RBound m = rb.box.abs();
      mahler += log_plus(m) * Rational(rb.multiplicity);
      if (m.mid_d() <= 1) pts.push_back({{rb.box, true}, rb.multiplicity});
      else {
        CBound one{RBound::from_int(1, prec), RBound::from_int(0, prec)};
        pts.push_back({{one / rb.box, false}, rb.multiplicity});
      }
    }
  }
  for (auto& [q, mult] : pts) {
    RBound gq = RBound::from_int(0, prec);
    Integer w = d;
    for (int n = 0; n < steps; ++n) {
      gq += log_step(lift, q, d) / Rational(w);
      w *= d;
    }
    g += gq * Rational(mult);
  }
  RBound h0 = RBound::log_of(Integer(abs(f.f2().coeff(0))), prec) / Rational(d - 1);
  RBound r = log_res / Rational(d * (d - 1));
  RBound p0 = RBound::log_of(Integer(abs(p.coeff(0))), prec);
  return mahler - p0 + g + tail + (h0 - r) * Rational(k);
}

LocalValue green_arch(const RatMap& f, const IntPoly& p, double tol, mpfr_prec_t prec) {
  mpfr_prec_t work = prec + 32;
  RBound best;
  bool have = false;
  for (int attempt = 0; attempt < 6; ++attempt, work *= 2) {
    try {
      RBound g = green_arch_at(f, p, tol, work);
      if (!have || g.width() < best.width()) best = g, have = true;
      if (g.width() <= tol) break;
    } catch (const std::domain_error&) {
      // interval blow-up; retry with more bits
    }
  }
  if (!have) throw std::runtime_error("green_local: archimedean iteration failed at all precisions");
  return LocalValue::archimedean(best);
}

}  // namespace

LocalValue green_local_form(const RatMap& f, const IntPoly& p, const Place& v, double tol, mpfr_prec_t prec) {
  require_fixed_zero(f, p);
  IntPoly q = p.primitive_part();
  if (v.is_archimedean()) return green_arch(f, q, tol, prec);
  return green_padic(f, q, v.prime(), tol);
}

LocalValue green_local(const RatMap& f, const Rational& z, const Place& v, double tol, mpfr_prec_t prec) {
  if (z == 0) throw std::domain_error("pairing at its pole");
  return green_local_form(f, IntPoly::linear_root(z).homogenize(1), v, tol, prec);
}

LocalValue green_local(const RatMap& f, const ConjugateSet& s, const Place& v, double tol, mpfr_prec_t prec) {
  Rational m(s.multiplicity());
  return green_local_form(f, s.form(), v, tol / s.multiplicity(), prec) * m;
}

std::vector<unsigned long> green_relevant_primes(const RatMap& f, const IntPoly& p) {
  std::set<unsigned long> out;
  for (auto q : prime_divisors(f.resultant())) out.insert(q);
  if (p.coeff(0) != 0)
    for (auto q : prime_divisors(p.coeff(0))) out.insert(q);
  return {out.begin(), out.end()};
}

RBound green_global_sum(const RatMap& f, const IntPoly& p, double tol, mpfr_prec_t prec) {
  require_fixed_zero(f, p);
  IntPoly q = p.primitive_part();
  auto primes = green_relevant_primes(f, q);
  double share = tol / (primes.size() + 1);
  RBound acc = green_local_form(f, q, Place::archimedean(), share, prec).enclosure(prec);
  for (auto pr : primes) acc += green_local_form(f, q, Place::prime(pr), share, prec).enclosure(prec);
  return acc;
}

}  // namespace hcrit
