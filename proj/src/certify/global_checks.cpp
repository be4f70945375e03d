#include "hcrit/certify/global_checks.hpp"

#include <stdexcept>

namespace hcrit {

namespace {

Integer ipow(unsigned long b, unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), b, e);
  return r;
}

RBound logi(const Integer& n, mpfr_prec_t prec) { return RBound::log_of(n, prec); }

// 2 log 2 + log(sqrt 2 + 1)
RBound quad_eps_sum(mpfr_prec_t prec) {
  return logi(2, prec) * Rational(2) + log(sqrt(RBound::from_int(2, prec)) + Rational(1));
}

Rational multiplier_at_zero(const RatMap& f) {
  if (f.f1().coeff(0) != 0) throw std::invalid_argument("map must fix 0");
  return ratio(f.f1().coeff(1), f.f2().coeff(0));
}

RBound crit_scaled(const RatMap& f, const Integer& scale, double tol, const HeightOptions& opt) {
  return critical_height(f, tol / scale.get_d(), opt) * Rational(scale);
}

}  // namespace

RBound height_of(const Rational& lambda, mpfr_prec_t prec) { return weil_height({lambda, Rational(1)}, prec); }

Certificate check_fixedzero_global(const RatMap& f, int k, double tol, const HeightOptions& opt) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  const int d = f.degree();
  const mpfr_prec_t prec = opt.prec;
  Rational lambda = multiplier_at_zero(f);
  if (lambda == 0) throw std::invalid_argument("fixed-point bound needs lambda != 0");
  if (f.f2().coeff(d) != 0) throw std::invalid_argument("map must fix infinity (b_d = 0)");
  Integer dk = ipow(d, k + 1);
  RBound lhs = crit_scaled(f, dk, tol, opt);
  Integer fact = factorial(2 * d - 1) * (2 * d);
  RBound rhs = height_of(lambda, prec) * Rational(k - 1) - hom_height(f, prec) * Rational(4 * d - 1) -
               logi(fact, prec) * Rational(2) - logi(2, prec) +
               ExplicitConstants(d).eps_sum(prec) * Rational(k);
  Json inputs{{"map", f.to_string()}, {"k", k}, {"lambda", to_string(lambda)}, {"tol", tol}};
  return Certificate::inequality("fixed-zero-global",
                                 "d^(k+1) hcrit >= (k-1) h(lambda) - (4d-1) h_Hom - 2 log(2d(2d-1)!) - log 2 "
                                 "- k d log lcm(1..d) - k log max(8, 3^(d-1))",
                                 inputs, lhs, rhs, prec);
}

Certificate check_goodconj(const RatMap& f, const RatMap& g, mpfr_prec_t prec) {
  const int d = f.degree();
  RBound rhs = hom_height(f, prec) * Rational(d + 2) + logi(2, prec) * Rational((d + 1) * (d + 1)) +
               logi((d + 1) * (d + 2), prec);
  Json inputs{{"map", f.to_string()}, {"conjugate", g.to_string()}};
  return Certificate::inequality("good-conj", "h_Hom(g) <= (d+2) h_Hom(f) + (d+1)^2 log 2 + log((d+1)(d+2))",
                                 inputs, rhs, hom_height(g, prec), prec);
}

Certificate check_mainglobal(const RatMap& f, int k, double tol, const HeightOptions& opt) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  const int d = f.degree();
  const mpfr_prec_t prec = opt.prec;
  auto fixed = rational_fixed_points(f);
  if (fixed.size() < 2) throw std::invalid_argument("needs rational fixed pair");
  std::size_t best = fixed.size();
  Rational lambda;
  RBound best_h;
  for (std::size_t i = 0; i < fixed.size(); ++i) {
    Rational m = multiplier_at(f, fixed[i]);
    if (m == 1) continue;
    RBound h = m == 0 ? RBound::from_int(0, prec) : height_of(m, prec);
    if (best == fixed.size() || h.mid_d() > best_h.mid_d()) best = i, lambda = m, best_h = h;
  }
  if (best == fixed.size()) throw std::invalid_argument("needs rational fixed pair");
  const ProjPoint& g0 = fixed[best];
  const ProjPoint& ginf = fixed[best == 0 ? 1 : 0];
  NormalizedMap nm = normalize_two_fixed(f, g0, ginf);

  Integer dk = ipow(d, k + 1);
  RBound lhs = crit_scaled(f, dk, tol, opt);
  RBound rhs = best_h * Rational(k - 1) - hom_height(f, prec) * Rational((4 * d - 1) * (d + 2)) -
               ExplicitConstants(d).c0(prec) * Rational(k);
  Json inputs{{"map", f.to_string()}, {"k", k}, {"lambda", to_string(lambda)}, {"tol", tol}};
  Certificate c = Certificate::inequality(
      "main-global", "d^(k+1) hcrit >= (k-1) h(lambda) - (4d-1)(d+2) h_Hom - c0 k", inputs, lhs, rhs, prec);
  c.witness = Json{{"fixed_point", g0.to_string()},
                   {"other_fixed_point", ginf.to_string()},
                   {"normalized", nm.map.to_string()},
                   {"psi", nm.psi.to_string()},
                   {"good_conj", check_goodconj(f, nm.map, prec).to_json()}};
  return c;
}

Certificate check_theorem_geom(const RatMap& f, double tol, const HeightOptions& opt) {
  const int d = f.degree();
  const mpfr_prec_t prec = opt.prec;
  auto tag = f.tag();
  int e = 0;
  if (auto* sa = std::get_if<SuperAttractingForm>(&tag)) e = sa->e;
  else if (auto* m = std::get_if<Milnor2Form>(&tag); m && m->lambda0 == 0) e = 2;
  if (e < 2) throw std::invalid_argument("map is not in super-attracting normal form");
  RBound lhs = critical_height(f, tol, opt);
  RBound rhs = coefficient_Cde(d, e, prec) * hom_height(f, prec) - constant_Cde(d, e, prec);
  Json inputs{{"map", f.to_string()}, {"d", d}, {"e", e}, {"tol", tol}};
  return Certificate::inequality("theorem-geom", "hcrit >= h_Hom / ((d-1) d^2 Q^(log d/log e)) - C_{d,e}", inputs,
                                 lhs, rhs, prec);
}

Certificate check_theorem_quad(const Rational& lambda0, const Rational& lambda_inf, double tol,
                               const HeightOptions& opt) {
  RatMap f = RatMap::milnor(lambda0, lambda_inf);
  const mpfr_prec_t prec = opt.prec;
  RBound lhs = critical_height(f, tol, opt);
  RBound h2 = weil_height({Rational(1), lambda0, lambda_inf}, prec);
  RBound rhs = h2 / Rational(2048) - RBound::from_rational(Rational(12, 1000), prec);
  Json inputs{{"lambda0", to_string(lambda0)}, {"lambda_inf", to_string(lambda_inf)}, {"tol", tol}};
  return Certificate::inequality("theorem-quad", "hcrit >= h(1, lambda0, lambda_inf) / 2048 - 0.012", inputs, lhs,
                                 rhs, prec);
}

QuadKCertificates check_quad_k(const Rational& lambda0, const Rational& lambda_inf, int k, double tol,
                               const HeightOptions& opt) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  const mpfr_prec_t prec = opt.prec;
  RatMap f = RatMap::milnor(lambda0, lambda_inf);
  RatMap g = RatMap::milnor(lambda_inf, lambda0);
  Integer two_k = ipow(2, k + 2);
  RBound hc = critical_height(f, tol / two_k.get_d(), opt);
  RBound hs = critical_height(g, tol / two_k.get_d(), opt);
  RBound h2 = weil_height({Rational(1), lambda0, lambda_inf}, prec);
  Json inputs{{"lambda0", to_string(lambda0)}, {"lambda_inf", to_string(lambda_inf)}, {"k", k}, {"tol", tol}};

  // the attracting multiplier sits at infinity; use the swapped form when it is 0
  const Rational& at_inf = lambda_inf == 0 ? lambda0 : lambda_inf;
  Json qin = inputs;
  qin["swapped"] = lambda_inf == 0 && lambda0 != 0;
  RBound rhs_q = height_of(at_inf, prec) * Rational(k) - quad_eps_sum(prec) * Rational(k) - h2 * Rational(4) -
                 logi(2, prec) * Rational(2);
  Certificate quad = Certificate::inequality(
      "quad-k", "2^(k+1) hcrit >= k h(lambda_inf) - k(2 log 2 + log(sqrt 2 + 1)) - 4 h(1, l0, linf) - 2 log 2", qin,
      hc * Rational(ipow(2, k + 1)), rhs_q, prec);

  RBound rhs_b = h2 * Rational(k - 8) - logi(2, prec) * Rational(4) - quad_eps_sum(prec) * Rational(2 * k);
  Certificate bound = Certificate::inequality(
      "quad-bound", "2^(k+2) hcrit >= (k-8) h(1, l0, linf) - 4 log 2 - 2k(2 log 2 + log(sqrt 2 + 1))", inputs,
      hc * Rational(two_k), rhs_b, prec);

  Certificate swap = Certificate::identity("quad-swap", "hcrit(l0, linf) = hcrit(linf, l0)", inputs, hc, hs, prec);
  return {quad, bound, swap};
}

Certificate eval_kbound(const Rational& lambda, int k, const RBound& hcrit, mpfr_prec_t prec) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (k == 8) throw std::invalid_argument("k = 8 is a pole of the k-bound");
  RBound bound = (kbound_height_bound(k, hcrit, prec) - corollary_threshold(prec)) * Rational(k);
  RBound lhs_side = (height_of(lambda, prec) - corollary_threshold(prec)) * Rational(k);
  Json inputs{{"lambda", to_string(lambda)}, {"k", k}, {"hcrit", rbound_to_json(hcrit)}};
  Certificate c = Certificate::inequality(
      "kbound",
      "k (h(lambda) - log 12) <= 2^(k+1)(1 + 2/(k-8)) hcrit + (6k-12)/(k-8) log 2 + 2k/(k-8) log(sqrt 2 + 1)",
      inputs, bound, lhs_side, prec);
  c.witness = Json{{"height_bound", kbound_height_bound(k, hcrit, prec).to_string(15)}};
  return c;
}

}  // namespace hcrit
