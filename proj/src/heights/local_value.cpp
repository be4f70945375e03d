#include "hcrit/heights/local_value.hpp"

#include <stdexcept>

namespace hcrit {

LocalValue LocalValue::archimedean(RBound value) {
  LocalValue v(Place::archimedean());
  v.arch_ = std::move(value);
  return v;
}

LocalValue LocalValue::padic(const Place& p, Rational lo, Rational hi) {
  if (p.is_archimedean()) throw std::invalid_argument("padic value at the archimedean place");
  if (hi < lo) throw std::invalid_argument("padic value with lo > hi");
  LocalValue v(p);
  v.lo_ = std::move(lo);
  v.hi_ = std::move(hi);
  return v;
}

LocalValue LocalValue::zero(const Place& v, mpfr_prec_t prec) {
  if (v.is_archimedean()) return archimedean(RBound::from_int(0, prec));
  return padic(v, 0, 0);
}

bool LocalValue::is_exact() const { return place_.is_archimedean() ? arch_.is_point() : lo_ == hi_; }

RBound LocalValue::enclosure(mpfr_prec_t prec) const {
  if (place_.is_archimedean()) return arch_;
  if (lo_ == 0 && hi_ == 0) return RBound::from_int(0, prec);
  RBound logp = RBound::log_of(Integer(place_.prime()), prec + 8);
  // log p > 0, so the endpoints scale monotonically
  RBound a = logp * lo_, b = logp * hi_;
  return RBound(a.lo(), b.hi()).with_prec(prec);
}

LocalValue LocalValue::operator+(const LocalValue& o) const {
  if (!(place_ == o.place_)) throw std::invalid_argument("adding local values at different places");
  if (place_.is_archimedean()) return archimedean(arch_ + o.arch_);
  return padic(place_, lo_ + o.lo_, hi_ + o.hi_);
}

LocalValue LocalValue::operator-(const LocalValue& o) const {
  if (!(place_ == o.place_)) throw std::invalid_argument("subtracting local values at different places");
  if (place_.is_archimedean()) return archimedean(arch_ - o.arch_);
  return padic(place_, lo_ - o.hi_, hi_ - o.lo_);
}

LocalValue LocalValue::operator*(const Rational& q) const {
  if (place_.is_archimedean()) return archimedean(arch_ * q);
  if (q >= 0) return padic(place_, lo_ * q, hi_ * q);
  return padic(place_, hi_ * q, lo_ * q);
}

Json LocalValue::to_json(mpfr_prec_t prec) const {
  Json j;
  j["place"] = place_.to_string();
  if (!place_.is_archimedean()) {
    j["log_p_multiple"] = Json::array({to_string(lo_), to_string(hi_)});
  }
  j["value"] = rbound_to_json(enclosure(prec));
  return j;
}

}  // namespace hcrit
