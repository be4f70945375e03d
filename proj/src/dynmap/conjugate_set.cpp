#include "hcrit/dynmap/conjugate_set.hpp"

#include <algorithm>
#include <stdexcept>

#include "hcrit/exactnum/factor.hpp"

namespace hcrit {

ConjugateSet ConjugateSet::from_minpoly(const IntPoly& minpoly, int multiplicity) {
  if (multiplicity < 1) throw std::invalid_argument("multiplicity must be positive");
  IntPoly p = minpoly.is_form() ? minpoly.dehomogenize() : minpoly;
  if (!is_irreducible(p)) throw std::invalid_argument("not irreducible: " + p.to_string());
  ConjugateSet s;
  s.poly_ = p.normalized();
  s.mult_ = multiplicity;
  return s;
}

ConjugateSet ConjugateSet::point(const ProjPoint& p, int multiplicity) {
  if (p.is_infinity()) return infinity(multiplicity);
  ConjugateSet s;
  s.poly_ = IntPoly(std::vector<Integer>{-p.x(), p.y()});
  s.mult_ = multiplicity;
  return s;
}

ConjugateSet ConjugateSet::infinity(int multiplicity) {
  ConjugateSet s;
  s.inf_ = true;
  s.mult_ = multiplicity;
  return s;
}

ProjPoint ConjugateSet::as_point() const {
  if (inf_) return ProjPoint::infinity();
  if (poly_.degree() != 1) throw std::logic_error("conjugate set is not a rational point");
  return ProjPoint(-poly_.coeffs()[0], poly_.coeffs()[1]);
}

IntPoly ConjugateSet::form() const {
  if (inf_) return IntPoly::form({Integer(1), Integer(0)});
  return poly_.homogenize(poly_.degree());
}

ConjugateSet ConjugateSet::with_multiplicity(int m) const {
  ConjugateSet s = *this;
  s.mult_ = m;
  return s;
}

std::string ConjugateSet::to_string() const {
  std::string base = inf_ ? "inf" : (size() == 1 ? as_point().to_string() : "roots(" + poly_.to_string() + ")");
  return mult_ == 1 ? base : base + "^" + std::to_string(mult_);
}

bool operator<(const ConjugateSet& a, const ConjugateSet& b) {
  if (a.inf_ != b.inf_) return b.inf_;
  if (a.size() != b.size()) return a.size() < b.size();
  if (a.poly_.coeffs() != b.poly_.coeffs()) return a.poly_.coeffs() < b.poly_.coeffs();
  return a.mult_ < b.mult_;
}

std::vector<ConjugateSet> decompose_form(const IntPoly& form) {
  if (!form.is_form()) throw std::invalid_argument("decompose_form needs a form");
  if (form.is_zero()) throw std::domain_error("zero form has no divisor");
  std::vector<ConjugateSet> out;
  int k = form.infinity_multiplicity();
  if (k > 0) out.push_back(ConjugateSet::infinity(k));
  IntPoly finite = form.dehomogenize();
  if (finite.degree() > 0) {
    for (auto& f : factor_over_q(finite)) {
      ConjugateSet s;  // factor_over_q already guarantees irreducibility
      s.poly_ = f.poly;
      s.mult_ = f.multiplicity;
      out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

IntPoly divisor_form(const std::vector<ConjugateSet>& divisor) {
  IntPoly acc = IntPoly::form({Integer(1)});
  for (const auto& s : divisor) acc = acc * pow(s.form(), s.multiplicity());
  return acc;
}

int divisor_degree(const std::vector<ConjugateSet>& divisor) {
  int n = 0;
  for (const auto& s : divisor) n += s.total_degree();
  return n;
}

}  // namespace hcrit
