#include "hcrit/dynmap/rat_map.hpp"

#include <algorithm>
#include <stdexcept>

namespace hcrit {

std::string describe(const NormalFormTag& tag) {
  struct {
    std::string operator()(const GeneralForm&) const { return "general"; }
    std::string operator()(const FixedZeroInftyForm& t) const { return "fixed-zero-infty(lambda=" + to_string(t.lambda) + ")"; }
    std::string operator()(const SuperAttractingForm& t) const { return "super-attracting(e=" + std::to_string(t.e) + ")"; }
    std::string operator()(const Milnor2Form& t) const {
      return "milnor2(" + to_string(t.lambda0) + "," + to_string(t.lambda_inf) + ")";
    }
  } v;
  return std::visit(v, tag);
}

std::pair<IntPoly, IntPoly> RatMap::canonical(IntPoly f1, IntPoly f2) {
  if (!f1.is_form() || !f2.is_form() || f1.degree() != f2.degree())
    throw std::invalid_argument("map needs two forms of one degree");
  if (f1.degree() < 2) throw std::invalid_argument("map degree must be at least 2");
  Integer g = f1.content();
  Integer g2 = f2.content();
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), g2.get_mpz_t());
  if (g == 0) throw std::invalid_argument("degenerate map (degree < d)");
  f1 = f1.divexact(g);
  f2 = f2.divexact(g);
  for (const auto* p : {&f1, &f2}) {
    auto it = std::find_if(p->coeffs().begin(), p->coeffs().end(), [](const Integer& c) { return c != 0; });
    if (it == p->coeffs().end()) continue;
    if (*it < 0) {
      f1 = -f1;
      f2 = -f2;
    }
    break;
  }
  return {std::move(f1), std::move(f2)};
}

RatMap RatMap::from_forms(IntPoly f1, IntPoly f2) {
  auto [a, b] = canonical(std::move(f1), std::move(f2));
  RatMap f(std::move(a), std::move(b));
  if (f.resultant() == 0) throw std::invalid_argument("degenerate map (degree < d)");
  return f;
}

RatMap RatMap::from_forms_unchecked(IntPoly f1, IntPoly f2) {
  auto [a, b] = canonical(std::move(f1), std::move(f2));
  return RatMap(std::move(a), std::move(b));
}

const Integer& RatMap::resultant() const {
  std::call_once(res_->once, [this] { res_->value = form_resultant(f1_, f2_); });
  return res_->value;
}

RatMap RatMap::from_coefficients(const std::vector<Rational>& num, const std::vector<Rational>& den) {
  if (num.size() != den.size() || num.size() < 3)
    throw std::invalid_argument("numerator and denominator need d+1 coefficients each, d >= 2");
  std::vector<Rational> all = num;
  all.insert(all.end(), den.begin(), den.end());
  Integer l = common_denominator(all);
  std::vector<Integer> a, b;
  for (const auto& q : num) a.emplace_back(Integer(q * l));
  for (const auto& q : den) b.emplace_back(Integer(q * l));
  return from_forms(IntPoly::form(std::move(a)), IntPoly::form(std::move(b)));
}

RatMap RatMap::milnor(const Rational& l0, const Rational& linf) {
  return from_coefficients({0, l0, 1}, {1, linf, 0});
}

RatMap RatMap::plus_minus(const Rational& a) { return from_coefficients({1, a, 1}, {0, 1, 0}); }

std::vector<Integer> RatMap::coefficient_vector() const {
  std::vector<Integer> v = f1_.coeffs();
  v.insert(v.end(), f2_.coeffs().begin(), f2_.coeffs().end());
  return v;
}

NormalFormTag RatMap::tag() const {
  int d = degree();
  const auto& a = f1_.coeffs();
  const auto& b = f2_.coeffs();
  if (a[0] != 0 || b[d] != 0 || b[0] == 0) return GeneralForm{};
  if (d == 2 && a[2] == b[0]) return Milnor2Form{ratio(a[1], a[2]), ratio(b[1], b[0])};
  if (a[1] != 0) return FixedZeroInftyForm{ratio(a[1], b[0])};
  int e = 1;
  while (a[e] == 0) ++e;
  if (a[e] == b[0]) return SuperAttractingForm{e};
  return FixedZeroInftyForm{Rational(0)};
}

std::vector<Rational> RatMap::normal_lift() const {
  const Integer& b0 = f2_.coeffs()[0];
  if (b0 == 0) throw std::domain_error("denominator vanishes at 0; no normal lift");
  std::vector<Rational> out;
  for (const auto& c : coefficient_vector()) {
    out.push_back(ratio(c, b0));
  }
  return out;
}

ProjPoint RatMap::apply(const ProjPoint& p) const {
  return ProjPoint(f1_.eval_form(p.x(), p.y()), f2_.eval_form(p.x(), p.y()));
}

std::string RatMap::to_string() const {
  return "(" + f1_.dehomogenize().to_string() + ")/(" + f2_.dehomogenize().to_string() + ")";
}

RBound r_local(const RatMap& f, const Place& v, mpfr_prec_t prec) {
  int d = f.degree();
  return log_abs(Rational(f.resultant()), v, prec) / Rational(d * (d - 1));
}

}  // namespace hcrit
