#include <cmath>
#include <set>
#include <stdexcept>

#include "hcrit/exactnum/complex_roots.hpp"
#include "hcrit/heights/heights.hpp"

namespace hcrit {

int steps_for_tolerance(int d, double slack_sum, double extra, double tol, int max_steps) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  double need = slack_sum / (d - 1) + extra;
  double scale = 1;
  for (int n = 0; n <= max_steps; ++n) {
    if (need / scale <= 0.95 * tol) return n;
    scale *= d;
  }
  throw std::runtime_error("tolerance " + std::to_string(tol) + " needs more than " + std::to_string(max_steps) +
                           " iterations");
}

namespace {

RBound zero(mpfr_prec_t prec) { return RBound::from_int(0, prec); }

// d^-N * [-c_low * k, c_up * k] / (d - 1)
RBound tail(const StepSlack& s, int d, int n, int k, mpfr_prec_t prec) {
  Integer dn;
  mpz_ui_pow_ui(dn.get_mpz_t(), d, n);
  Rational scale(Integer(k), dn * (d - 1));
  scale.canonicalize();
  RBound lo = -(s.c_low * scale), hi = s.c_up * scale;
  return RBound::hull(lo, hi).with_prec(prec);
}

RBound scale_down(const RBound& x, int d, int n) {
  Integer dn;
  mpz_ui_pow_ui(dn.get_mpz_t(), d, n);
  return x / Rational(dn);
}

[[noreturn]] void give_up(const char* what, int step, int d, const StepSlack& s, int k) {
  double w = k * (s.c_low.hi_d() + s.c_up.hi_d()) / ((d - 1) * std::pow(double(d), step));
  throw std::runtime_error(std::string(what) + " exceeded the size limit at step " + std::to_string(step) +
                           "; achieved width " + std::to_string(w));
}

}  // namespace

RBound canonical_height(const RatMap& f, const ProjPoint& p, double tol, const HeightOptions& opt) {
  int d = f.degree();
  StepSlack s = one_step_slack(f, opt.prec);
  int n_steps = steps_for_tolerance(d, s.c_low.hi_d() + s.c_up.hi_d(), 0, tol, opt.max_steps);
  std::set<ProjPoint> seen{p};
  ProjPoint x = p;
  for (int n = 1; n <= n_steps; ++n) {
    x = f.apply(x);
    if (!seen.insert(x).second) return zero(opt.prec);  // preperiodic
    if (bit_length(abs(x.x())) + bit_length(x.y()) > opt.max_bits) give_up("orbit", n, d, s, 1);
  }
  RBound h = scale_down(weil_height(x, opt.prec + 16), d, n_steps) + tail(s, d, n_steps, 1, opt.prec + 16);
  return h.clamp_below(0).with_prec(opt.prec);
}

RBound canonical_height_form(const RatMap& f, const IntPoly& form, double tol, const HeightOptions& opt) {
  if (!form.is_form()) throw std::invalid_argument("canonical_height_form needs a form");
  int d = f.degree();
  int k = form.degree();
  if (k == 0) return zero(opt.prec);
  StepSlack s = one_step_slack(f, opt.prec);
  Integer binom;
  mpz_bin_uiui(binom.get_mpz_t(), k, k / 2);
  double landau = std::log(binom.get_d()) + 0.5 * std::log(k + 1.0);
  int n_steps = steps_for_tolerance(d, k * (s.c_low.hi_d() + s.c_up.hi_d()), landau, tol, opt.max_steps);
  IntPoly r = form.normalized();
  std::set<std::vector<Integer>> seen{r.coeffs()};
  for (int n = 1; n <= n_steps; ++n) {
    r = pushforward_form(f, r);
    if (!seen.insert(r.coeffs()).second) return zero(opt.prec);
    if (bit_length(max_abs_coeff(r)) > opt.max_bits) give_up("pushforward", n, d, s, k);
  }
  RBound h = scale_down(log_mahler_coeff_bounds(r, opt.prec + 16), d, n_steps) + tail(s, d, n_steps, k, opt.prec + 16);
  return h.clamp_below(0).with_prec(opt.prec);
}

RBound canonical_height_set(const RatMap& f, const ConjugateSet& set, double tol, const HeightOptions& opt) {
  Rational m(set.multiplicity());
  double t = tol / set.multiplicity();
  if (set.is_rational_point()) return canonical_height(f, set.as_point(), t, opt) * m;
  return canonical_height_form(f, set.form(), t, opt) * m;
}

RBound canonical_height_divisor(const RatMap& f, const std::vector<ConjugateSet>& divisor, double tol,
                                const HeightOptions& opt) {
  RBound acc = zero(opt.prec);
  if (divisor.empty()) return acc;
  double share = tol / divisor.size();
  for (const auto& s : divisor) acc = acc + canonical_height_set(f, s, share, opt);
  return acc;
}

RBound critical_height(const RatMap& f, double tol, const HeightOptions& opt) {
  return canonical_height_divisor(f, critical_divisor(f), tol, opt);
}

Certificate crit_height_iterate_identity_check(const RatMap& f, int n, double tol, const HeightOptions& opt) {
  RatMap g = iterate_map(f, n);
  RBound lhs = critical_height(g, tol, opt);
  RBound rhs = critical_height(f, tol / n, opt) * Rational(n);
  Json inputs{{"map", f.to_string()}, {"n", n}, {"tol", tol}};
  return Certificate::identity("crit-iterate", "crit_height(f^n) = n * crit_height(f)", inputs, lhs, rhs, opt.prec);
}

}  // namespace hcrit
