#include <stdexcept>

#include "hcrit/heights/heights.hpp"

namespace hcrit {

std::string to_string(HeightKind k) {
  switch (k) {
    case HeightKind::Weil: return "weil";
    case HeightKind::Canonical: return "canonical";
    case HeightKind::Critical: return "critical";
    case HeightKind::GreenLocal: return "green-local";
  }
  return "weil";
}

Json HeightValue::to_json() const {
  Json j;
  j["kind"] = to_string(kind);
  j["value"] = rbound_to_json(value);
  j["approx"] = Json::array({value.lo_d(), value.hi_d()});
  j["provenance"] = provenance;
  return j;
}

namespace {

Integer coprime_max(const std::vector<Integer>& v) {
  Integer g = 0, m = 0;
  for (const auto& c : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (abs(c) > m) m = abs(c);
  }
  if (g == 0) throw std::invalid_argument("height of the zero vector");
  return m / g;
}

}  // namespace

RBound weil_height(const std::vector<Rational>& coords, mpfr_prec_t prec) {
  Integer den = common_denominator(coords);
  std::vector<Integer> v;
  for (const auto& q : coords) v.emplace_back(Integer(q * den));
  return RBound::log_of(coprime_max(v), prec);
}

RBound weil_height(const ProjPoint& p, mpfr_prec_t prec) {
  return RBound::log_of(coprime_max({p.x(), p.y()}), prec);
}

RBound hom_height(const RatMap& f, mpfr_prec_t prec) {
  return RBound::log_of(coprime_max(f.coefficient_vector()), prec);
}

StepSlack one_step_slack(const RatMap& f, mpfr_prec_t prec) {
  unsigned long d = f.degree();
  RBound h = hom_height(f, prec);
  Integer c = factorial(2 * d - 1) * (2 * d);
  return {h * Rational(static_cast<long>(2 * d - 1)) + RBound::log_of(c, prec),
          h + RBound::log_of(Integer(d + 1), prec)};
}

}  // namespace hcrit
