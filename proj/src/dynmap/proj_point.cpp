#include "hcrit/dynmap/proj_point.hpp"

#include <stdexcept>

namespace hcrit {

ProjPoint::ProjPoint(Integer x, Integer y) : x_(std::move(x)), y_(std::move(y)) {
  if (x_ == 0 && y_ == 0) throw std::invalid_argument("[0:0] is not a point");
  if (y_ == 0) {
    x_ = 1;
    return;
  }
  Integer g;
  mpz_gcd(g.get_mpz_t(), x_.get_mpz_t(), y_.get_mpz_t());
  if (y_ < 0) g = -g;
  x_ /= g;
  y_ /= g;
}

ProjPoint ProjPoint::parse(const std::string& text) {
  if (text == "inf" || text == "oo" || text == "infinity") return infinity();
  if (text.size() >= 2 && text.front() == '[' && text.back() == ']') {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("expected [x:y], got '" + text + "'");
    Rational x = parse_rational(text.substr(1, colon - 1));
    Rational y = parse_rational(text.substr(colon + 1, text.size() - colon - 2));
    if (x == 0 && y == 0) throw std::invalid_argument("[0:0] is not a point");
    if (y == 0) return infinity();
    return ProjPoint(Rational(x / y));
  }
  return ProjPoint(parse_rational(text));
}

Rational ProjPoint::affine() const {
  if (is_infinity()) throw std::domain_error("infinity has no affine coordinate");
  return ratio(x_, y_);
}

std::string ProjPoint::to_string() const {
  if (is_infinity()) return "inf";
  if (y_ == 1) return x_.get_str();
  return x_.get_str() + "/" + y_.get_str();
}

Mobius Mobius::make(Rational a, Rational b, Rational c, Rational d) {
  Mobius m{std::move(a), std::move(b), std::move(c), std::move(d)};
  if (m.det() == 0) throw std::invalid_argument("singular Mobius transformation");
  return m;
}

Mobius Mobius::inverse() const {
  if (det() == 0) throw std::invalid_argument("singular Mobius transformation");
  return {d, -b, -c, a};
}

ProjPoint Mobius::apply(const ProjPoint& p) const {
  auto m = integer_matrix();
  return ProjPoint(m[0] * p.x() + m[1] * p.y(), m[2] * p.x() + m[3] * p.y());
}

Mobius Mobius::operator*(const Mobius& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

std::array<Integer, 4> Mobius::integer_matrix() const {
  Integer den = common_denominator({a, b, c, d});
  std::array<Integer, 4> m{Integer(a * den), Integer(b * den), Integer(c * den), Integer(d * den)};
  Integer g = 0;
  for (auto& e : m) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
  for (auto& e : m) e /= g;
  return m;
}

std::string Mobius::to_string() const {
  return "(" + hcrit::to_string(a) + "*z + " + hcrit::to_string(b) + ")/(" + hcrit::to_string(c) + "*z + " +
         hcrit::to_string(d) + ")";
}

}  // namespace hcrit
