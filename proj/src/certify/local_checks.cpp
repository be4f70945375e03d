#include "hcrit/certify/local_checks.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

#include "hcrit/exactnum/complex_roots.hpp"
#include "hcrit/exactnum/newton_polygon.hpp"

namespace hcrit {

namespace {

LocalValue lv_log_abs(const Rational& x, const Place& v, mpfr_prec_t prec) {
  if (v.is_archimedean()) return LocalValue::archimedean(log_abs(x, v, prec));
  return LocalValue::padic(v, Rational(-val_p(x, v)));
}

LocalValue lv_log_plus(const Rational& x, const Place& v, mpfr_prec_t prec) {
  if (v.is_archimedean()) return LocalValue::archimedean(log_plus_abs(x, v, prec));
  if (x == 0) return LocalValue::zero(v, prec);
  return LocalValue::padic(v, Rational(std::max(0L, -val_p(x, v))));
}

LocalValue lv_max(const LocalValue& a, const LocalValue& b, mpfr_prec_t prec) {
  if (a.place().is_archimedean()) return LocalValue::archimedean(max(a.enclosure(prec), b.enclosure(prec)));
  return LocalValue::padic(a.place(), std::max(a.lo_coeff(), b.lo_coeff()), std::max(a.hi_coeff(), b.hi_coeff()));
}

// z^m with m = number of vanishing low coefficients divided out.
IntPoly strip_zero_roots(const IntPoly& p) {
  const auto& c = p.coeffs();
  std::size_t m = 0;
  while (m < c.size() && c[m] == 0) ++m;
  return IntPoly(std::vector<Integer>(c.begin() + m, c.end()));
}

Json map_inputs(const RatMap& f, const Place& v) { return Json{{"map", f.to_string()}, {"place", v.to_string()}}; }

struct Affine {
  IntPoly num, den;
  explicit Affine(const RatMap& f) : num(f.f1().dehomogenize()), den(f.f2().dehomogenize()) {}
  CBound operator()(const CBound& z) const { return num.eval(z) / den.eval(z); }
};

// Requirements shared by the fixed-point checks.
NormalLiftData fixed_zero_lift(const RatMap& f, bool need_inf_fixed) {
  NormalLiftData nl = NormalLiftData::of(f);
  if (need_inf_fixed && nl.den[nl.d] != 0) throw std::invalid_argument("map must fix infinity (b_d = 0)");
  return nl;
}

// Reciprocal polynomials whose roots are the alpha_i and beta_j.
std::vector<IntPoly> alpha_beta_polys(const NormalLiftData& nl, int e) {
  std::vector<Rational> a(nl.num.rbegin(), nl.num.rend() - e);  // a_d, ..., a_e
  std::vector<Rational> b(nl.den.rbegin() + 1, nl.den.rend());  // b_(d-1), ..., b_0
  std::vector<IntPoly> out;
  if (a.size() > 1) out.push_back(IntPoly::from_rationals(a));
  if (b.size() > 1) out.push_back(IntPoly::from_rationals(b));
  return out;
}

int sa_order(const NormalLiftData& nl) {
  int e = 0;
  while (e <= nl.d && nl.num[e] == 0) ++e;
  if (e < 2 || e > nl.d || nl.num[e] != 1) throw std::invalid_argument("map is not in super-attracting normal form");
  if (nl.den[nl.d] != 0) throw std::invalid_argument("map must fix infinity (b_d = 0)");
  return e;
}

Integer ipow(unsigned long b, unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), b, e);
  return r;
}

LocalValue green_divisor(const RatMap& f, const std::vector<ConjugateSet>& D, const Place& v, double tol,
                         mpfr_prec_t prec) {
  LocalValue acc = LocalValue::zero(v, prec);
  for (const auto& s : D) acc = acc + green_local(f, s, v, tol / D.size(), prec);
  return acc;
}

int divisor_total_degree(const std::vector<ConjugateSet>& D) {
  int n = 0;
  for (const auto& s : D) n += s.total_degree();
  return n;
}

// The branch points: images of the critical sets, with their critical sets.
struct BranchCandidate {
  CBound beta;
  std::string source;
};

std::vector<BranchCandidate> arch_branch_points(const RatMap& f, mpfr_prec_t prec) {
  Affine F(f);
  std::vector<BranchCandidate> out;
  for (const auto& s : critical_divisor(f)) {
    if (s.at_infinity()) continue;
    for (const auto& rb : archimedean_root_enclosures(s.minpoly(), prec)) {
      try {
        out.push_back({F(rb.box), s.to_string()});
      } catch (const std::domain_error&) {
        // a pole: the branch point is infinity
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const BranchCandidate& a, const BranchCandidate& b) {
    return a.beta.abs().mid_d() < b.beta.abs().mid_d();
  });
  return out;
}

Json box_json(const CBound& z) { return Json::array({z.re.to_string(15), z.im.to_string(15)}); }

// Arch witness search: margin(k, |f^k beta|) must be > 0 (strict) or >= 0 for
// k = 1..kmax with f^k(beta) != 0. Returns the certificate.
template <class Margin>
Certificate arch_witness(const std::string& statement, const std::string& anchor, Json inputs, const RatMap& f,
                         int kmax, mpfr_prec_t prec, bool strict, Margin margin) {
  Affine F(f);
  std::optional<RBound> best;
  Json witness;
  bool found = false;
  for (const auto& cand : arch_branch_points(f, prec)) {
    if (cand.beta.contains_zero()) continue;
    CBound x = cand.beta;
    std::optional<RBound> worst;
    bool ok = true;
    try {
      for (int k = 1; k <= kmax && ok; ++k) {
        x = F(x);
        if (x.contains_zero()) {
          ok = false;
          break;
        }
        RBound m = margin(k, log(x.abs()));
        worst = worst ? min(*worst, m) : m;
        if (m.certainly_negative()) ok = false;
      }
    } catch (const std::domain_error&) {
      ok = false;
    }
    if (!ok || !worst) continue;
    if (!best || worst->mid_d() > best->mid_d()) {
      best = worst;
      witness = Json{{"critical_set", cand.source}, {"branch_point", box_json(cand.beta)}, {"kmax", kmax}};
    }
    bool certified = strict ? worst->certainly_positive() : worst->certainly_nonnegative();
    if (certified) {
      found = true;
      break;
    }
  }
  RBound zero = RBound::from_int(0, prec);
  if (!best) {
    Certificate c = Certificate::inequality(statement, anchor, std::move(inputs), zero, zero, prec);
    c.verdict = Verdict::Inconclusive;
    c.inputs["note"] = "no branch point with a nonvanishing orbit enclosure";
    return c;
  }
  Certificate c = Certificate::inequality(statement, anchor, std::move(inputs), *best, zero, prec);
  c.witness = witness;
  if (!found && c.verdict == Verdict::Pass && strict) c.verdict = Verdict::Inconclusive;
  // a single branch point failing does not refute an existence statement
  if (c.verdict == Verdict::Violation) c.verdict = Verdict::Inconclusive;
  return c;
}

// p-adic witness: nonzero branch points in |z| < p^radius, whose images
// have valuation predicted by `image_val(k, w)`.
template <class ImageVal>
Certificate padic_witness(const std::string& statement, const std::string& anchor, Json inputs, const RatMap& f,
                          const Place& v, const Rational& radius, int kmax, mpfr_prec_t prec, ImageVal image_val) {
  int count = 0;
  Json witness;
  bool identity_ok = true;
  for (const auto& s : critical_divisor(f)) {
    IntPoly form = pushforward_form(f, s.form());
    IntPoly bu = form.dehomogenize();
    if (bu.degree() <= 0) continue;
    int zeros = newton_polygon(bu, v).zero_roots;
    int inside = count_roots_in_disk(bu, v, 0, radius, false) - zeros;
    if (inside <= 0) continue;
    count += inside * s.multiplicity();
    if (!witness.is_null()) continue;
    Rational w;
    for (const auto& seg : newton_polygon(bu, v).segments)
      if (seg.valuation > -radius) {
        w = seg.valuation;
        break;
      }
    Json images = Json::array();
    IntPoly cur = form;
    for (int k = 1; k <= kmax; ++k) {
      cur = pushforward_form(f, cur);
      Rational want = image_val(k, w);
      IntPoly cu = cur.dehomogenize();
      bool hit = false;
      if (cu.degree() > 0)
        for (const auto& seg : newton_polygon(cu, v).segments) hit = hit || seg.valuation == want;
      identity_ok = identity_ok && hit;
      images.push_back(to_string(want));
    }
    witness = Json{{"critical_set", s.to_string()}, {"valuation", to_string(w)}, {"image_valuations", images}};
  }
  Certificate c = Certificate::inequality(statement, anchor, std::move(inputs), RBound::from_int(count, prec),
                                          RBound::from_int(1, prec), prec);
  c.witness = witness;
  if (c.verdict == Verdict::Pass && !identity_ok) c.verdict = Verdict::Violation;
  return c;
}

}  // namespace

Certificate local_inequality(std::string statement, std::string anchor, Json inputs, const LocalValue& lhs,
                             const LocalValue& rhs, mpfr_prec_t prec) {
  if (!(lhs.place() == rhs.place())) throw std::invalid_argument("local inequality across places");
  if (lhs.place().is_archimedean())
    return Certificate::inequality(std::move(statement), std::move(anchor), std::move(inputs), lhs.enclosure(prec),
                                   rhs.enclosure(prec), prec);
  LocalValue diff = lhs - rhs;
  Certificate c = Certificate::inequality(std::move(statement), std::move(anchor), std::move(inputs),
                                          lhs.enclosure(prec), rhs.enclosure(prec), prec);
  c.slack = diff.enclosure(prec);
  if (diff.lo_coeff() >= 0) c.verdict = Verdict::Pass;
  else if (diff.hi_coeff() < 0) c.verdict = Verdict::Violation;
  else c.verdict = Verdict::Inconclusive;
  c.inputs["slack_log_p_multiple"] = Json::array({to_string(diff.lo_coeff()), to_string(diff.hi_coeff())});
  return c;
}

NormalLiftData NormalLiftData::of(const RatMap& f) {
  if (f.f1().coeff(0) != 0) throw std::invalid_argument("map must fix 0");
  NormalLiftData nl;
  nl.d = f.degree();
  auto lift = f.normal_lift();
  nl.num.assign(lift.begin(), lift.begin() + nl.d + 1);
  nl.den.assign(lift.begin() + nl.d + 1, lift.end());
  return nl;
}

LocalValue NormalLiftData::log_norm(const Place& v, mpfr_prec_t prec) const {
  LocalValue acc = LocalValue::zero(v, prec);
  for (const auto* side : {&num, &den})
    for (const auto& c : *side) acc = lv_max(acc, lv_log_plus(c, v, prec), prec);
  return acc;
}

LocalValue NormalLiftData::r(const RatMap& f, const Place& v, mpfr_prec_t prec) const {
  Rational b0(f.f2().coeff(0));
  Rational res(f.resultant());
  for (int i = 0; i < 2 * d; ++i) res /= b0;
  return lv_log_abs(res, v, prec + 16) * ratio(1, d * (d - 1));
}

LocalValue log_max_root(const std::vector<IntPoly>& polys, const Place& v, mpfr_prec_t prec) {
  std::optional<LocalValue> best;
  for (const auto& p0 : polys) {
    IntPoly p = strip_zero_roots(p0);
    if (p.degree() <= 0) continue;
    LocalValue cur = LocalValue::zero(v, prec);
    if (v.is_archimedean()) {
      std::optional<RBound> m;
      for (const auto& rb : archimedean_root_enclosures(p, prec)) m = m ? max(*m, rb.box.abs()) : rb.box.abs();
      cur = LocalValue::archimedean(log(*m));
    } else {
      cur = LocalValue::padic(v, -newton_polygon(p, v).segments.front().valuation);
    }
    best = best ? lv_max(*best, cur, prec) : cur;
  }
  if (!best) throw std::domain_error("all roots are zero");
  return *best;
}

CertificatePair check_root_coeff_bounds(const IntPoly& p, const Place& v, mpfr_prec_t prec) {
  if (p.is_form() || p.degree() < 1) throw std::invalid_argument("need a univariate polynomial of degree >= 1");
  const int k = p.degree();
  Json inputs{{"poly", p.to_string()}, {"place", v.to_string()}};
  std::vector<Rational> c;
  for (int i = 0; i < k; ++i) c.push_back(ratio(p.coeffs()[i], p.lead()));

  LocalValue log_plus_c = LocalValue::zero(v, prec);
  std::optional<LocalValue> log_c;
  for (const auto& x : c) {
    log_plus_c = lv_max(log_plus_c, lv_log_plus(x, v, prec), prec);
    if (x != 0) log_c = log_c ? lv_max(*log_c, lv_log_abs(x, v, prec), prec) : lv_log_abs(x, v, prec);
  }
  std::optional<LocalValue> log_e;
  try {
    log_e = log_max_root({p}, v, prec);
  } catch (const std::domain_error&) {
  }
  LocalValue zero = LocalValue::zero(v, prec);
  LocalValue log_plus_e = log_e ? lv_max(zero, *log_e, prec) : zero;
  LocalValue log2 = lv_log_plus(Rational(2), v, prec);

  Certificate up = local_inequality("roots-upper", "log||e|| <= log+||c|| + log+|2|", inputs, log_plus_c + log2,
                                   log_e.value_or(zero), prec);
  Certificate lo = local_inequality("roots-lower", "log||c|| <= k log+||e|| + k log+|2|", inputs,
                                   (log_plus_e + log2) * Rational(k), log_c.value_or(zero), prec);
  return {up, lo};
}

Certificate check_greens_lower(const RatMap& f, const Rational& z, const Place& v, double tol, mpfr_prec_t prec) {
  if (z == 0) throw std::domain_error("pairing at its pole");
  NormalLiftData nl = fixed_zero_lift(f, false);
  const int d = nl.d;
  Json inputs = map_inputs(f, v);
  inputs["z"] = to_string(z);
  LocalValue lhs = green_local(f, z, v, tol, prec);
  Integer fact = factorial(2 * d - 1) * (2 * d);
  LocalValue rhs = lv_log_plus(1 / z, v, prec) - lv_log_plus(Rational(fact), v, prec) * ratio(1, d - 1) -
                   nl.log_norm(v, prec) * ratio(2 * d - 1, d - 1) + nl.r(f, v, prec) * Rational(d - 1);
  return local_inequality("greens-lower",
                          "g(z,0) >= log+|1/z| - log+|2d(2d-1)!|/(d-1) - (2d-1)/(d-1) log||f|| + (d-1) r(f)", inputs,
                          lhs, rhs, prec);
}

namespace {

// Decides whether the forward orbit of s reaches 0.
bool reaches_zero(const RatMap& f, const ConjugateSet& s, int budget, const StepSlack& slack) {
  const ProjPoint zero(0, 1);
  const int d = f.degree();
  std::set<std::pair<bool, std::vector<Integer>>> seen;
  ConjugateSet cur = s.with_multiplicity(1);
  for (int n = 0; n <= budget; ++n) {
    if (cur.is_rational_point() && cur.as_point() == zero) return true;
    if (!seen.insert({cur.at_infinity(), cur.minpoly().coeffs()}).second) return false;
    // h-hat >= h - size c_low / (d-1) > 0 means the orbit wanders
    RBound lower = log_mahler_coeff_bounds(cur.form(), 64) - slack.c_low * ratio(cur.size(), d - 1);
    if (lower.certainly_positive()) return false;
    cur = pushforward_minpoly(f, cur).front().with_multiplicity(1);
  }
  throw std::runtime_error("could not decide whether a critical point is a preimage of 0");
}

}  // namespace

std::vector<ConjugateSet> excised_branch_divisor(const RatMap& f, int k, int budget) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  StepSlack slack = one_step_slack(f, 64);
  std::vector<ConjugateSet> kept;
  for (const auto& s : critical_divisor(f))
    if (!reaches_zero(f, s, budget, slack)) kept.push_back(s);
  std::vector<ConjugateSet> D = pushforward_divisor(f, kept);
  for (int i = 0; i < k; ++i) D = pushforward_divisor(f, D);
  return D;
}

Certificate check_attraction(const RatMap& f, const Place& v, int kmax, mpfr_prec_t prec) {
  NormalLiftData nl = fixed_zero_lift(f, true);
  const int d = nl.d;
  const Rational lambda = nl.num[1];
  Json inputs = map_inputs(f, v);
  inputs["kmax"] = kmax;
  inputs["lambda"] = to_string(lambda);
  const std::string anchor = "0 < |f^k(beta)| max|alpha,beta| <= (C_v |lambda|)^k";
  ExplicitConstants ec(d);
  Rational eps = ec.eps_v(v);
  bool small = lambda != 0 && (v.is_archimedean() ? abs(lambda) < eps : val_p(lambda, v) > -val_p(eps, v));
  if (!small) return Certificate::vacuous_pass("attraction", anchor, inputs, "|lambda|_v >= eps_v or lambda = 0", prec);

  LocalValue log_m = log_max_root(alpha_beta_polys(nl, 1), v, prec);
  if (v.is_archimedean()) {
    RBound step = log(RBound::from_rational(abs(lambda) * Rational(ec.C_v(v)), prec));
    RBound lm = log_m.enclosure(prec);
    return arch_witness("attraction", anchor, inputs, f, kmax, prec, false,
                        [&](int k, const RBound& log_fk) { return step * Rational(k) - lm - log_fk; });
  }
  Rational radius = -log_m.lo_coeff();
  long vl = val_p(lambda, v);
  return padic_witness("attraction", anchor, inputs, f, v, radius, kmax, prec,
                       [&](int k, const Rational& w) -> Rational { return w + Rational(k * vl); });
}

namespace {

struct KeyParts {
  LocalValue g, logf, r, log_ab, log_plus_inv_lambda, log_eps, log2, fact;
  int degB;
};

KeyParts key_parts(const RatMap& f, int k, const Place& v, double tol, mpfr_prec_t prec) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  NormalLiftData nl = fixed_zero_lift(f, true);
  const int d = nl.d;
  const Rational lambda = nl.num[1];
  if (lambda == 0) throw std::invalid_argument("key estimate needs lambda != 0");
  ExplicitConstants ec(d);
  auto D = excised_branch_divisor(f, k);
  Rational eps = ec.eps_v(v);
  Integer fact = factorial(2 * d - 1) * (2 * d);
  return {green_divisor(f, D, v, tol, prec),
          nl.log_norm(v, prec),
          nl.r(f, v, prec),
          log_max_root(alpha_beta_polys(nl, 1), v, prec),
          lv_log_plus(1 / lambda, v, prec),
          // eps_v is a real number: log eps_v = val_p(eps_v) log p at a prime
          v.is_archimedean() ? lv_log_abs(eps, v, prec) : LocalValue::padic(v, Rational(val_p(eps, v))),
          lv_log_plus(Rational(2), v, prec),
          lv_log_plus(Rational(fact), v, prec),
          divisor_total_degree(D)};
}

LocalValue key_tail(const KeyParts& p, int d) {
  return (p.logf * ratio(2 * d - 1, d - 1) + p.fact * ratio(1, d - 1) - p.r * Rational(d - 1)) * Rational(p.degB);
}

}  // namespace

Certificate check_key(const RatMap& f, int k, const Place& v, double tol, mpfr_prec_t prec) {
  KeyParts p = key_parts(f, k, v, tol, prec);
  const int d = f.degree();
  Json inputs = map_inputs(f, v);
  inputs["k"] = k;
  inputs["deg_B"] = p.degB;
  LocalValue rhs = p.log_plus_inv_lambda * Rational(k - 1) + p.log_eps * Rational(k) + p.log_ab - p.logf - p.log2 -
                   key_tail(p, d);
  return local_inequality("key",
                          "g(f_*^k B', 0) >= (k-1) log+|1/lambda| + k log eps_v + log||alpha,beta|| - log||f|| "
                          "- log+|2| - deg(B') ((2d-1)/(d-1) log||f|| + log+|2d(2d-1)!|/(d-1) - (d-1) r(f))",
                          inputs, p.g, rhs, prec);
}

Certificate check_maincase(const RatMap& f, int k, const Place& v, double tol, mpfr_prec_t prec) {
  const std::string anchor =
      "g(f_*^k B', 0) >= k log+|1/lambda| + k log eps_v + log||alpha,beta|| "
      "- deg(B') (log+|2d(2d-1)!|/(d-1) + (2d-1)/(d-1) log||f|| - (d-1) r(f))";
  Json inputs = map_inputs(f, v);
  inputs["k"] = k;
  NormalLiftData nl = fixed_zero_lift(f, true);
  Rational eps = ExplicitConstants(nl.d).eps_v(v);
  Rational lambda = nl.num[1];
  bool small = lambda != 0 && (v.is_archimedean() ? abs(lambda) < eps : val_p(lambda, v) > -val_p(eps, v));
  if (!small) return Certificate::vacuous_pass("maincase", anchor, inputs, "|lambda|_v >= eps_v or lambda = 0", prec);
  KeyParts p = key_parts(f, k, v, tol, prec);
  inputs["deg_B"] = p.degB;
  LocalValue rhs = p.log_plus_inv_lambda * Rational(k) + p.log_eps * Rational(k) + p.log_ab - key_tail(p, nl.d);
  return local_inequality("maincase", anchor, inputs, p.g, rhs, prec);
}

Certificate check_sabranch(const RatMap& f, const Place& v, int kmax, mpfr_prec_t prec) {
  NormalLiftData nl = NormalLiftData::of(f);
  const int d = nl.d;
  const int e = sa_order(nl);
  Json inputs = map_inputs(f, v);
  inputs["e"] = e;
  inputs["kmax"] = kmax;
  const std::string anchor = "log|f^k(beta)| < e^k log rho_f + e^k/(e-1) log+|2^(e-1) 3^(d-e)|";
  LocalValue log_m = LocalValue::zero(v, prec);
  try {
    log_m = log_max_root(alpha_beta_polys(nl, e), v, prec);
  } catch (const std::domain_error&) {
    return Certificate::vacuous_pass("sa-branch", anchor, inputs, "rho_f is infinite", prec);
  }
  ExplicitConstants ec(d);
  if (v.is_archimedean()) {
    RBound log_rho = -log_m.enclosure(prec);
    RBound pre = log_rho + ec.sa_C_v(e, v, prec);
    if (pre.certainly_nonnegative())
      return Certificate::vacuous_pass("sa-branch", anchor, inputs, "log rho_f + C_v >= 0", prec);
    if (!pre.certainly_negative()) {
      RBound zero = RBound::from_int(0, prec);
      Certificate c = Certificate::inequality("sa-branch", anchor, inputs, zero, zero, prec);
      c.verdict = Verdict::Inconclusive;
      c.inputs["note"] = "precondition undecided at this precision";
      return c;
    }
    RBound extra = RBound::log_of(Integer(ipow(2, e - 1) * ipow(3, d - e)), prec) / Rational(e - 1);
    return arch_witness("sa-branch", anchor, inputs, f, kmax, prec, true, [&](int k, const RBound& log_fk) {
      Rational ek(ipow(e, k));
      return (log_rho + extra) * ek - log_fk;
    });
  }
  Rational log_rho = -log_m.lo_coeff();
  if (log_rho + ec.sa_C_v_padic(e, v.prime()) >= 0)
    return Certificate::vacuous_pass("sa-branch", anchor, inputs, "log rho_f + C_v >= 0", prec);
  return padic_witness("sa-branch", anchor, inputs, f, v, log_rho, kmax, prec,
                       [&](int k, const Rational& w) -> Rational { return w * Rational(ipow(e, k)); });
}

Certificate check_saest(const RatMap& f, int k, const Place& v, double tol, mpfr_prec_t prec) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  NormalLiftData nl = NormalLiftData::of(f);
  const int d = nl.d;
  const int e = sa_order(nl);
  Json inputs = map_inputs(f, v);
  inputs["e"] = e;
  inputs["k"] = k;
  auto D = excised_branch_divisor(f, k);
  const int degB = divisor_total_degree(D);
  inputs["deg_B"] = degB;
  LocalValue logf = nl.log_norm(v, prec);
  LocalValue fact = lv_log_plus(Rational(factorial(2 * d - 1) * 2), v, prec);
  LocalValue lhs = green_divisor(f, D, v, tol, prec) +
                   (fact * ratio(1, d - 1) + logf * ratio(2 * d - 1, d - 1) - nl.r(f, v, prec) * Rational(d - 1)) *
                       Rational(degB);
  ExplicitConstants ec(d);
  LocalValue cv = v.is_archimedean() ? LocalValue::archimedean(ec.sa_C_v(e, v, prec))
                                     : LocalValue::padic(v, ec.sa_C_v_padic(e, v.prime()));
  Rational ek(ipow(e, k));
  LocalValue rhs = logf * (ek / Rational(d - 1)) -
                   (cv + lv_log_plus(Rational(2), v, prec) * Rational(2) +
                    lv_log_plus(Rational(3), v, prec) * ratio(d - e, e - 1)) *
                       ek;
  return local_inequality("sa-est",
                          "g(f_*^k B', 0) + deg(B') (log+|2(2d-1)!|/(d-1) + (2d-1)/(d-1) log||f|| - (d-1) r(f)) "
                          ">= e^k/(d-1) log||f|| - e^k (C_v + 2 log+|2| + (d-e)/(e-1) log+|3|)",
                          inputs, lhs, rhs, prec);
}

}  // namespace hcrit
