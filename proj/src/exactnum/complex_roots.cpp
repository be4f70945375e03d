#include "hcrit/exactnum/complex_roots.hpp"

#include <cmath>
#include <stdexcept>

namespace hcrit {

namespace {

// Plain floating complex number at a fixed working precision.
struct CF {
  BigFloat re, im;
  explicit CF(mpfr_prec_t w) : re(w), im(w) {}
};

mpfr_prec_t wprec(const CF& a) { return a.re.prec(); }

CF add(const CF& a, const CF& b) {
  CF r(wprec(a));
  mpfr_add(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  return r;
}

CF sub(const CF& a, const CF& b) {
  CF r(wprec(a));
  mpfr_sub(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_sub(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  return r;
}

CF mul(const CF& a, const CF& b) {
  mpfr_prec_t w = wprec(a);
  CF r(w);
  BigFloat t(w);
  mpfr_mul(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_sub(r.re.get(), r.re.get(), t.get(), MPFR_RNDN);
  mpfr_mul(r.im.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_mul(t.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(r.im.get(), r.im.get(), t.get(), MPFR_RNDN);
  return r;
}

BigFloat norm2(const CF& a) {
  BigFloat n(wprec(a)), t(wprec(a));
  mpfr_sqr(n.get(), a.re.get(), MPFR_RNDN);
  mpfr_sqr(t.get(), a.im.get(), MPFR_RNDN);
  mpfr_add(n.get(), n.get(), t.get(), MPFR_RNDN);
  return n;
}

CF div(const CF& a, const CF& b) {
  mpfr_prec_t w = wprec(a);
  BigFloat n = norm2(b);
  CF conj(w);
  mpfr_set(conj.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_neg(conj.im.get(), b.im.get(), MPFR_RNDN);
  CF r = mul(a, conj);
  mpfr_div(r.re.get(), r.re.get(), n.get(), MPFR_RNDN);
  mpfr_div(r.im.get(), r.im.get(), n.get(), MPFR_RNDN);
  return r;
}

CF from_int(const Integer& z, mpfr_prec_t w) {
  CF r(w);
  mpfr_set_z(r.re.get(), z.get_mpz_t(), MPFR_RNDN);
  return r;
}

CF rescale(const CF& a, mpfr_prec_t w) {
  CF r(w);
  mpfr_set(r.re.get(), a.re.get(), MPFR_RNDN);
  mpfr_set(r.im.get(), a.im.get(), MPFR_RNDN);
  return r;
}

// p(z) and p'(z) by Horner.
std::pair<CF, CF> eval_with_derivative(const std::vector<CF>& c, const CF& z) {
  mpfr_prec_t w = wprec(z);
  CF p = c.back(), dp(w);
  for (int i = static_cast<int>(c.size()) - 2; i >= 0; --i) {
    dp = add(mul(dp, z), p);
    p = add(mul(p, z), c[i]);
  }
  return {p, dp};
}

// Aberth iteration on a squarefree polynomial with p(0) != 0.
void aberth(const IntPoly& p, std::vector<CF>& z, mpfr_prec_t w) {
  int n = p.degree();
  std::vector<CF> c;
  for (const auto& a : p.coeffs()) c.push_back(from_int(a, w));
  if (z.empty()) {
    // start on the circle of radius |c0/cn|^(1/n)
    BigFloat r(w), t(w), pi(w);
    mpfr_set_z(r.get(), p.coeffs().front().get_mpz_t(), MPFR_RNDN);
    mpfr_abs(r.get(), r.get(), MPFR_RNDN);
    mpfr_set_z(t.get(), p.lead().get_mpz_t(), MPFR_RNDN);
    mpfr_abs(t.get(), t.get(), MPFR_RNDN);
    mpfr_div(r.get(), r.get(), t.get(), MPFR_RNDN);
    mpfr_rootn_ui(r.get(), r.get(), n, MPFR_RNDN);
    mpfr_const_pi(pi.get(), MPFR_RNDN);
    for (int k = 0; k < n; ++k) {
      CF s(w);
      BigFloat ang(w);
      mpfr_mul_ui(ang.get(), pi.get(), 2 * k, MPFR_RNDN);
      mpfr_div_ui(ang.get(), ang.get(), n, MPFR_RNDN);
      mpfr_add_d(ang.get(), ang.get(), 0.4, MPFR_RNDN);
      mpfr_sin_cos(s.im.get(), s.re.get(), ang.get(), MPFR_RNDN);
      mpfr_mul(s.re.get(), s.re.get(), r.get(), MPFR_RNDN);
      mpfr_mul(s.im.get(), s.im.get(), r.get(), MPFR_RNDN);
      z.push_back(std::move(s));
    }
  } else {
    for (auto& zi : z) zi = rescale(zi, w);
  }
  CF one = from_int(1, w);
  std::vector<bool> done(n, false);
  int cap = 200 + 10 * n;
  for (int iter = 0; iter < cap; ++iter) {
    bool all = true;
    for (int i = 0; i < n; ++i) {
      if (done[i]) continue;
      auto [pv, dpv] = eval_with_derivative(c, z[i]);
      if (mpfr_zero_p(pv.re.get()) && mpfr_zero_p(pv.im.get())) {
        done[i] = true;
        continue;
      }
      CF ratio = div(pv, dpv);
      CF s(w);
      for (int j = 0; j < n; ++j)
        if (j != i) s = add(s, div(one, sub(z[i], z[j])));
      CF corr = div(ratio, sub(one, mul(ratio, s)));
      z[i] = sub(z[i], corr);
      // converged when the step is below the working precision relative to |z|
      BigFloat lhs = norm2(corr), rhs = norm2(z[i]);
      mpfr_mul_2si(rhs.get(), rhs.get(), -2 * (w - 8), MPFR_RNDN);
      if (mpfr_cmp(lhs.get(), rhs.get()) <= 0) done[i] = true;
      else all = false;
    }
    if (all) break;
  }
}

// Gerschgorin discs from Weierstrass corrections. Returns false unless every
// disc is disjoint from the others and narrow enough.
bool certify(const IntPoly& p, const std::vector<CF>& z, mpfr_prec_t w, mpfr_prec_t prec,
             std::vector<CBound>& boxes) {
  int n = p.degree();
  std::vector<CBound> pts, centers;
  std::vector<RBound> radii;
  for (const auto& zi : z) pts.push_back(CBound::from_parts(zi.re, zi.im));
  RBound lead = RBound::from_int(p.lead(), w);
  for (int i = 0; i < n; ++i) {
    CBound den{lead, RBound::from_int(0, w)};
    for (int j = 0; j < n; ++j)
      if (j != i) den = den * (pts[i] - pts[j]);
    if (den.contains_zero()) return false;
    CBound wi = p.eval(pts[i]) / den;
    centers.push_back(pts[i] - wi);
    radii.push_back(wi.abs() * Rational(n - 1));
  }
  BigFloat limit(64);
  mpfr_set_ui_2exp(limit.get(), 1, -static_cast<long>(prec), MPFR_RNDN);
  boxes.clear();
  for (int i = 0; i < n; ++i) {
    CBound b = centers[i].inflate(RBound(radii[i].hi(), radii[i].hi()));
    if (limit < b.re.width_big() || limit < b.im.width_big()) return false;
    boxes.push_back(std::move(b));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      RBound dist = (centers[i] - centers[j]).abs();
      RBound reach = radii[i] + radii[j];
      if (!(reach.hi() < dist.lo())) return false;
    }
  }
  return true;
}

std::vector<CBound> isolate_squarefree(const IntPoly& p, mpfr_prec_t prec) {
  std::vector<CBound> boxes;
  int n = p.degree();
  if (n <= 0) return boxes;
  if (n == 1) {
    Rational root(-p.coeffs()[0], p.coeffs()[1]);
    root.canonicalize();
    boxes.push_back({RBound::from_rational(root, prec + 2), RBound::from_int(0, prec + 2)});
    return boxes;
  }
  std::vector<CF> z;
  mpfr_prec_t w = prec + 32 + static_cast<mpfr_prec_t>(bit_length(max_abs_coeff(p)) / 4);
  for (int attempt = 0; attempt < 12; ++attempt, w *= 2) {
    aberth(p, z, w);
    if (certify(p, z, w, prec, boxes)) return boxes;
  }
  throw std::runtime_error("root isolation did not converge for " + p.to_string());
}

}  // namespace

std::vector<RootBox> archimedean_root_enclosures(const IntPoly& p0, mpfr_prec_t prec) {
  if (p0.is_zero()) throw std::domain_error("roots of the zero polynomial");
  IntPoly p = p0.is_form() ? p0.dehomogenize() : p0;
  std::vector<RootBox> out;
  auto parts = squarefree_decomposition(p);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    IntPoly q = parts[k];
    int mult = static_cast<int>(k) + 1;
    if (q.degree() <= 0) continue;
    if (q.coeffs()[0] == 0) {
      RBound zero = RBound::from_int(0, prec);
      out.push_back({{zero, zero}, mult});
      q = IntPoly(std::vector<Integer>(q.coeffs().begin() + 1, q.coeffs().end()));
    }
    for (auto& b : isolate_squarefree(q, prec)) out.push_back({std::move(b), mult});
  }
  return out;
}

RBound archimedean_log_plus_sum(const IntPoly& p, mpfr_prec_t prec) {
  int n = std::max(1, p.degree());
  mpfr_prec_t work = prec + 4 + static_cast<mpfr_prec_t>(bit_length(Integer(n)));
  RBound acc = RBound::from_int(0, work);
  for (const auto& rb : archimedean_root_enclosures(p, work))
    acc = acc + log_plus(rb.box.abs()) * Rational(rb.multiplicity);
  return acc;
}

std::vector<std::pair<unsigned long, Rational>> finite_root_heights(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("root heights of the zero polynomial");
  std::vector<std::pair<unsigned long, Rational>> out;
  auto tf = trial_factor(p.lead(), 100000);
  auto add = [&](unsigned long q) {
    NewtonPolygon np = newton_polygon(p, Place::prime(q));
    out.emplace_back(q, -np.negative_valuation_sum());
  };
  for (auto& [q, e] : tf.primes) add(q);
  if (tf.cofactor != 1 && tf.cofactor.fits_ulong_p() && is_prime(tf.cofactor)) add(tf.cofactor.get_ui());
  return out;
}

Integer finite_root_height_exp(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("root heights of the zero polynomial");
  auto tf = trial_factor(p.lead(), 100000);
  Integer acc = 1;
  Integer covered = 1;
  for (const auto& [q, r] : finite_root_heights(p)) {
    Integer qp, qz = q;
    mpz_pow_ui(qp.get_mpz_t(), qz.get_mpz_t(), Integer(r.get_num()).get_ui());
    acc *= qp;
    Integer full;
    mpz_pow_ui(full.get_mpz_t(), qz.get_mpz_t(), val_p(p.lead(), q));
    covered *= full;
  }
  // remaining part of the leading coefficient, by the Gauss-lemma identity
  Integer rest = abs(p.lead()) / covered;
  return acc * rest;
}

RBound roots_height_sum(const IntPoly& p0, mpfr_prec_t prec) {
  if (p0.is_zero()) throw std::domain_error("root heights of the zero polynomial");
  IntPoly p = p0.is_form() ? p0.dehomogenize() : p0;
  if (p.content() != 1) throw std::invalid_argument("roots_height_sum needs a primitive polynomial");
  mpfr_prec_t work = prec + 4;
  RBound fin = RBound::log_of(finite_root_height_exp(p), work);
  if (p.degree() <= 0) return fin;
  return fin + archimedean_log_plus_sum(p, work);
}

RBound log_mahler_coeff_bounds(const IntPoly& p0, mpfr_prec_t prec) {
  IntPoly p = p0.is_form() ? p0.dehomogenize() : p0;
  if (p.is_zero()) throw std::domain_error("Mahler measure of the zero polynomial");
  unsigned long n = p.degree();
  RBound lower;
  bool have = false;
  Integer norm2 = 0;
  for (unsigned long i = 0; i <= n; ++i) {
    const Integer& c = p.coeffs()[i];
    norm2 += c * c;
    if (c == 0) continue;
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, i);
    RBound l = RBound::log_of(Rational(abs(c), b), prec);
    lower = have ? max(lower, l) : l;
    have = true;
  }
  RBound upper = RBound::log_of(norm2, prec) / Rational(2);
  return RBound(lower.lo(), upper.hi());
}

}  // namespace hcrit
