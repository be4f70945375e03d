#include "hcrit/dynmap/operations.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hcrit {

namespace {

// Coefficients (ascending) of the polynomial of degree <= k through (j, y[j]),
// j = 0..k. The values come from integer polynomials, so the result is
// integral.
std::vector<Integer> interpolate(const std::vector<Integer>& y) {
  std::size_t n = y.size();
  std::vector<Rational> dd(y.begin(), y.end());
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / Rational(static_cast<long>(level));
  // expand sum dd[i] * x (x-1) ... (x-i+1) by Horner from the top
  std::vector<Rational> acc{dd[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    // acc = acc * (x - i) + dd[i]
    std::vector<Rational> next(acc.size() + 1, Rational(0));
    for (std::size_t j = 0; j < acc.size(); ++j) {
      next[j + 1] += acc[j];
      next[j] -= acc[j] * static_cast<long>(i);
    }
    next[0] += dd[i];
    acc = std::move(next);
  }
  acc.resize(n, Rational(0));
  std::vector<Integer> out;
  for (auto& q : acc) {
    if (q.get_den() != 1) throw std::logic_error("interpolation produced a non-integer coefficient");
    out.emplace_back(q.get_num());
  }
  return out;
}

IntPoly x_form() { return IntPoly::form({Integer(0), Integer(1)}); }
IntPoly y_form() { return IntPoly::form({Integer(1), Integer(0)}); }

// h'(a) for a finite point with nonvanishing denominator.
Rational derivative_at(const RatMap& h, const Rational& a) {
  IntPoly n = h.f1().dehomogenize(), d = h.f2().dehomogenize();
  Rational dv = d.eval(a);
  if (dv == 0) throw std::domain_error("derivative at a pole");
  return (n.derivative().eval(a) * dv - n.eval(a) * d.derivative().eval(a)) / (dv * dv);
}

long checked_power(long base, int n, long cap) {
  long v = 1;
  for (int i = 0; i < n; ++i) {
    if (v > cap / base + 1) return cap + 1;
    v *= base;
  }
  return v;
}

}  // namespace

RatMap make_map(const std::vector<Rational>& num, const std::vector<Rational>& den) {
  return RatMap::from_coefficients(num, den);
}

std::vector<ProjPoint> orbit(const RatMap& f, const ProjPoint& p, int n) {
  if (n < 0) throw std::invalid_argument("orbit length must be nonnegative");
  std::vector<ProjPoint> out{p};
  for (int i = 0; i < n; ++i) out.push_back(f.apply(out.back()));
  return out;
}

RatMap iterate_map(const RatMap& f, int n, int cap) {
  if (n < 1) throw std::invalid_argument("iterate count must be at least 1");
  if (checked_power(f.degree(), n, cap) > cap) {
    Integer need;
    mpz_ui_pow_ui(need.get_mpz_t(), f.degree(), n);
    throw std::length_error("iterate degree " + need.get_str() + " exceeds the cap " + std::to_string(cap) +
                            "; raise the cap to at least " + need.get_str());
  }
  IntPoly g1 = f.f1(), g2 = f.f2();
  for (int i = 1; i < n; ++i) {
    IntPoly h1 = compose_form(f.f1(), g1, g2);
    IntPoly h2 = compose_form(f.f2(), g1, g2);
    Integer c = h1.content();
    Integer c2 = h2.content();
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), c2.get_mpz_t());
    g1 = h1.divexact(c);
    g2 = h2.divexact(c);
  }
  return RatMap::from_forms_unchecked(std::move(g1), std::move(g2));
}

RatMap conjugate(const RatMap& f, const Mobius& psi) {
  if (psi.det() == 0) throw std::invalid_argument("singular Mobius transformation");
  auto m = psi.integer_matrix();
  const Integer &a = m[0], &b = m[1], &c = m[2], &d = m[3];
  IntPoly p1 = IntPoly::form({b, a}), p2 = IntPoly::form({d, c});
  IntPoly g1 = compose_form(f.f1(), p1, p2);
  IntPoly g2 = compose_form(f.f2(), p1, p2);
  // adjugate of psi undoes it up to a scalar
  return RatMap::from_forms_unchecked(g1 * d - g2 * b, g2 * a - g1 * c);
}

RatMap flip(const RatMap& f) { return conjugate(f, Mobius{0, 1, 1, 0}); }

std::vector<ProjPoint> rational_fixed_points(const RatMap& f) {
  IntPoly phi = x_form() * f.f2() - y_form() * f.f1();
  std::vector<ProjPoint> out;
  for (const auto& s : decompose_form(phi))
    if (s.is_rational_point()) out.push_back(s.as_point());
  std::sort(out.begin(), out.end());
  return out;
}

Rational multiplier_at(const RatMap& f, const ProjPoint& p) {
  if (!(f.apply(p) == p)) throw std::invalid_argument("not a fixed point: " + p.to_string());
  if (p.is_infinity()) return derivative_at(flip(f), 0);
  return derivative_at(f, p.affine());
}

NormalizedMap normalize_two_fixed(const RatMap& f, const ProjPoint& g0, const ProjPoint& ginf) {
  if (g0 == ginf) throw std::invalid_argument("the two fixed points must differ");
  if (!(f.apply(g0) == g0)) throw std::invalid_argument("gamma0 = " + g0.to_string() + " is not a fixed point");
  if (!(f.apply(ginf) == ginf))
    throw std::invalid_argument("gamma_inf = " + ginf.to_string() + " is not a fixed point");
  if (multiplier_at(f, g0) == 1) throw std::invalid_argument("multiplier at gamma0 is 1");
  // psi(z) = (beta z + alpha) / (delta z + gamma) sends 0 to [alpha:gamma] and
  // inf to [beta:delta]
  Mobius psi = Mobius::make(Rational(ginf.x()), Rational(g0.x()), Rational(ginf.y()), Rational(g0.y()));
  return {conjugate(f, psi), psi};
}

IntPoly wronskian(const RatMap& f) {
  return f.f1().d_dx() * f.f2().d_dy() - f.f1().d_dy() * f.f2().d_dx();
}

std::vector<ConjugateSet> critical_divisor(const RatMap& f) { return decompose_form(wronskian(f)); }

IntPoly branch_form_quadratic(const Rational& l0, const Rational& linf) {
  std::vector<Rational> c{l0 * l0, 2 * (2 - l0 * linf), linf * linf};
  return IntPoly::from_rationals(c).homogenize(2).normalized();
}

std::vector<ConjugateSet> branch_points_quadratic(const Rational& l0, const Rational& linf) {
  if (linf == 0) throw std::invalid_argument("use the super-attracting path");
  if (l0 * linf == 1) throw std::invalid_argument("degenerate map (degree < d)");
  return decompose_form(branch_form_quadratic(l0, linf));
}

IntPoly pushforward_form(const RatMap& f, const IntPoly& p, bool raw) {
  if (!p.is_form()) throw std::invalid_argument("pushforward_form needs a form");
  int k = p.degree();
  std::vector<Integer> vals;
  for (int j = 0; j <= k; ++j) vals.push_back(form_resultant(p, f.f1() - f.f2() * Integer(j)));
  IntPoly r = IntPoly::form(interpolate(vals));
  if (raw) return r;
  if (r.is_zero()) throw std::logic_error("pushforward vanished identically");
  return r.normalized();
}

std::vector<ConjugateSet> pushforward_minpoly(const RatMap& f, const ConjugateSet& s) {
  if (s.is_rational_point()) return {ConjugateSet::point(f.apply(s.as_point()), s.multiplicity())};
  std::vector<ConjugateSet> out;
  for (const auto& t : decompose_form(pushforward_form(f, s.form())))
    out.push_back(t.with_multiplicity(t.multiplicity() * s.multiplicity()));
  return out;
}

std::vector<ConjugateSet> pushforward_divisor(const RatMap& f, const std::vector<ConjugateSet>& divisor) {
  std::vector<ConjugateSet> out;
  for (const auto& s : divisor) {
    for (auto& t : pushforward_minpoly(f, s)) {
      auto it = std::find_if(out.begin(), out.end(), [&](const ConjugateSet& u) {
        return u.at_infinity() == t.at_infinity() && u.minpoly() == t.minpoly();
      });
      if (it == out.end()) out.push_back(t);
      else *it = it->with_multiplicity(it->multiplicity() + t.multiplicity());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

IntPoly multiplier_char_poly(const RatMap& f, int n, int cap) {
  RatMap g = iterate_map(f, n, cap);
  int D = g.degree();
  // move a non-fixed integer point t to infinity so every fixed point is finite
  long t = 0;
  for (long cand : {0L, 1L, -1L, 2L, -2L, 3L, -3L, 4L, -4L, 5L}) {
    ProjPoint pt{Integer(cand), Integer(1)};
    if (!(g.apply(pt) == pt)) {
      t = cand;
      break;
    }
  }
  RatMap h = conjugate(g, Mobius{t, 1, 1, 0});
  IntPoly num = h.f1().dehomogenize(), den = h.f2().dehomogenize();
  IntPoly z{0, 1};
  IntPoly phi = (z * den - num).homogenize(D + 1);
  IntPoly a = (den * den).homogenize(2 * D);
  IntPoly b = (num.derivative() * den - num * den.derivative()).homogenize(2 * D);
  std::vector<Integer> vals;
  for (int lam = 0; lam <= D + 1; ++lam) vals.push_back(form_resultant(phi, a * Integer(lam) - b));
  return IntPoly(interpolate(vals)).normalized();
}

Rational cycle_multiplier(const RatMap& f, const std::vector<ProjPoint>& cycle) {
  if (cycle.empty()) throw std::invalid_argument("empty cycle");
  std::set<ProjPoint> seen(cycle.begin(), cycle.end());
  if (seen.size() != cycle.size()) throw std::invalid_argument("not a cycle: repeated point");
  for (std::size_t i = 0; i < cycle.size(); ++i)
    if (!(f.apply(cycle[i]) == cycle[(i + 1) % cycle.size()]))
      throw std::invalid_argument("not a cycle: f(" + cycle[i].to_string() + ") != next point");
  long t = 0;
  while (seen.count(ProjPoint(Integer(t), Integer(1)))) ++t;
  Mobius psi{t, 1, 1, 0};  // psi^-1(z) = 1 / (z - t)
  RatMap h = conjugate(f, psi);
  Mobius inv = psi.inverse();
  Rational acc = 1;
  for (const auto& p : cycle) acc *= derivative_at(h, inv.apply(p).affine());
  return acc;
}

}  // namespace hcrit
