#include "hcrit/exactnum/int_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hcrit {

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) c_.emplace_back(c);
  trim();
}

IntPoly IntPoly::form(std::vector<Integer> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("form needs at least one coefficient");
  IntPoly p;
  p.c_ = std::move(coeffs);
  p.form_ = true;
  return p;
}

IntPoly IntPoly::from_rationals(const std::vector<Rational>& coeffs) {
  Integer den = common_denominator(coeffs);
  std::vector<Integer> out;
  out.reserve(coeffs.size());
  for (const auto& q : coeffs) out.emplace_back(Integer(q * den));
  return IntPoly(std::move(out)).primitive_part();
}

IntPoly IntPoly::linear_root(const Rational& root) {
  return IntPoly(std::vector<Integer>{-Integer(root.get_num()), Integer(root.get_den())});
}

void IntPoly::trim() {
  if (form_) return;
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool IntPoly::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Integer& c) { return c == 0; });
}

Integer IntPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

const Integer& IntPoly::lead() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return c_.back();
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  Integer g = content();
  if (g == 0 || g == 1) return *this;
  return divexact(g);
}

IntPoly IntPoly::normalized() const {
  IntPoly p = primitive_part();
  for (auto it = p.c_.rbegin(); it != p.c_.rend(); ++it) {
    if (*it == 0) continue;
    if (*it < 0) p = -p;
    break;
  }
  return p;
}

IntPoly IntPoly::dehomogenize() const { return IntPoly(c_); }

IntPoly IntPoly::homogenize(int n) const {
  if (form_) throw std::logic_error("already a form");
  if (n < degree()) throw std::invalid_argument("formal degree below true degree");
  std::vector<Integer> c = c_;
  c.resize(n + 1, 0);
  return form(std::move(c));
}

int IntPoly::infinity_multiplicity() const {
  int k = 0;
  for (auto it = c_.rbegin(); it != c_.rend() && *it == 0; ++it) ++k;
  return k;
}

IntPoly IntPoly::reversed() const {
  std::vector<Integer> c(c_.rbegin(), c_.rend());
  return form_ ? form(std::move(c)) : IntPoly(std::move(c));
}

IntPoly IntPoly::derivative() const {
  std::vector<Integer> c;
  for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(c_[i] * static_cast<unsigned long>(i));
  return IntPoly(std::move(c));
}

IntPoly IntPoly::d_dx() const {
  int n = degree();
  if (n == 0) return form({Integer(0)});
  std::vector<Integer> c(n);
  for (int i = 1; i <= n; ++i) c[i - 1] = c_[i] * i;
  return form(std::move(c));
}

IntPoly IntPoly::d_dy() const {
  int n = degree();
  if (n == 0) return form({Integer(0)});
  std::vector<Integer> c(n);
  for (int i = 0; i < n; ++i) c[i] = c_[i] * (n - i);
  return form(std::move(c));
}

IntPoly IntPoly::shifted(const Rational& a) const {
  if (c_.empty()) return *this;
  Integer r = a.get_num(), s = a.get_den();
  int n = degree();
  IntPoly lin(std::vector<Integer>{r, s});
  IntPoly acc = constant(c_[n]);
  Integer spow = 1;
  for (int i = n - 1; i >= 0; --i) {
    spow *= s;
    acc = acc * lin + constant(c_[i] * spow);
  }
  return acc;
}

IntPoly IntPoly::scaled_roots(const Rational& c) const {
  if (c == 0) throw std::domain_error("scaling roots by 0");
  Integer r = c.get_num(), s = c.get_den();
  int n = degree();
  std::vector<Integer> out(c_.size());
  for (int i = 0; i <= n; ++i) {
    Integer rp, sp;
    mpz_pow_ui(sp.get_mpz_t(), s.get_mpz_t(), i);
    mpz_pow_ui(rp.get_mpz_t(), r.get_mpz_t(), n - i);
    out[i] = c_[i] * sp * rp;
  }
  return IntPoly(std::move(out)).primitive_part();
}

Rational IntPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Integer IntPoly::eval_form(const Integer& x, const Integer& y) const {
  // Horner in x/y scaled by powers of y
  Integer acc = 0, ypow = 1;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * x + *it * ypow;
    ypow *= y;
  }
  // acc = sum c_i x^i y^(n-i) after the loop since each step multiplied one more y
  return acc;
}

RBound IntPoly::eval(const RBound& x) const {
  RBound acc = RBound::from_int(0, x.prec());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + RBound::from_int(*it, x.prec());
  return acc;
}

CBound IntPoly::eval(const CBound& z) const {
  auto prec = std::max(z.re.prec(), z.im.prec());
  RBound zero = RBound::from_int(0, prec);
  CBound acc{zero, zero};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * z;
    acc.re = acc.re + RBound::from_int(*it, prec);
  }
  return acc;
}

IntPoly IntPoly::operator-() const {
  IntPoly p = *this;
  for (auto& c : p.c_) c = -c;
  return p;
}

namespace {

void check_same_kind(const IntPoly& a, const IntPoly& b, bool same_degree) {
  if (a.is_form() != b.is_form()) throw std::invalid_argument("mixing a form and a univariate polynomial");
  if (same_degree && a.is_form() && a.degree() != b.degree())
    throw std::invalid_argument("adding forms of different degrees");
}

IntPoly make(std::vector<Integer> c, bool form) { return form ? IntPoly::form(std::move(c)) : IntPoly(std::move(c)); }

}  // namespace

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  check_same_kind(a, b, true);
  std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < a.c_.size()) c[i] += a.c_[i];
    if (i < b.c_.size()) c[i] += b.c_[i];
  }
  return make(std::move(c), a.form_);
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  check_same_kind(a, b, false);
  if (a.c_.empty() || b.c_.empty()) return IntPoly();
  std::vector<Integer> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) mpz_addmul(c[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
  }
  return make(std::move(c), a.form_);
}

IntPoly operator*(const IntPoly& a, const Integer& k) {
  IntPoly p = a;
  for (auto& c : p.c_) c *= k;
  p.trim();
  return p;
}

IntPoly IntPoly::divexact(const Integer& k) const {
  if (k == 0) throw std::domain_error("division by zero");
  IntPoly p = *this;
  for (auto& c : p.c_) {
    if (!mpz_divisible_p(c.get_mpz_t(), k.get_mpz_t())) throw std::domain_error("inexact division");
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), k.get_mpz_t());
  }
  return p;
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  int n = degree();
  for (int i = n; i >= 0; --i) {
    const Integer& c = c_[i];
    if (c == 0) continue;
    Integer a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono;
    if (form_) {
      auto part = [](const char* v, int e) -> std::string {
        if (e == 0) return "";
        return e == 1 ? std::string(v) : std::string(v) + "^" + std::to_string(e);
      };
      std::string x = part("X", i), y = part("Y", n - i);
      mono = x.empty() ? y : (y.empty() ? x : x + "*" + y);
    } else if (i > 0) {
      mono = i == 1 ? var : var + "^" + std::to_string(i);
    }
    if (mono.empty()) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << mono;
    }
  }
  return os.str();
}

IntPoly pow(const IntPoly& p, unsigned n) {
  IntPoly acc = p.is_form() ? IntPoly::form({Integer(1)}) : IntPoly::constant(1);
  IntPoly base = p;
  while (n) {
    if (n & 1) acc = acc * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return acc;
}

namespace {

// lead(b)^k * a = q * b + r with k = deg a - deg b + 1
std::pair<IntPoly, IntPoly> pseudo_divide(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  int m = a.degree(), n = b.degree();
  if (m < n) return {IntPoly(), a};
  std::vector<Integer> r = a.coeffs();
  std::vector<Integer> q(m - n + 1);
  const Integer& lb = b.lead();
  for (int i = m; i >= n; --i) {
    // multiply everything so far by lb, then eliminate r[i]
    for (auto& c : q) c *= lb;
    for (int j = 0; j <= i; ++j) r[j] *= lb;
    Integer t = r[i] / lb;
    q[i - n] += t;
    for (int j = 0; j <= n; ++j) r[i - n + j] -= t * b.coeffs()[j];
  }
  return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

}  // namespace

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) { return pseudo_divide(a, b).second; }

IntPoly divexact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  int m = a.degree(), n = b.degree();
  if (a.is_zero()) return IntPoly();
  if (m < n) throw std::domain_error("inexact polynomial division");
  std::vector<Integer> r = a.coeffs();
  std::vector<Integer> q(m - n + 1);
  const Integer& lb = b.lead();
  for (int i = m; i >= n; --i) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), lb.get_mpz_t())) throw std::domain_error("inexact polynomial division");
    Integer t;
    mpz_divexact(t.get_mpz_t(), r[i].get_mpz_t(), lb.get_mpz_t());
    q[i - n] = t;
    for (int j = 0; j <= n; ++j) mpz_submul(r[i - n + j].get_mpz_t(), t.get_mpz_t(), b.coeffs()[j].get_mpz_t());
  }
  for (const auto& c : r)
    if (c != 0) throw std::domain_error("inexact polynomial division");
  return IntPoly(std::move(q));
}

bool divides(const IntPoly& b, const IntPoly& a) { return pseudo_remainder(a, b).is_zero(); }

IntPoly gcd(const IntPoly& a0, const IntPoly& b0) {
  IntPoly a = a0.primitive_part(), b = b0.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = pseudo_remainder(a, b).primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  return a.normalized();
}

namespace {

// a / b over Q, returned primitive; b must divide a.
IntPoly quotient_q(const IntPoly& a, const IntPoly& b) {
  auto [q, r] = pseudo_divide(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q.normalized();
}

}  // namespace

std::vector<IntPoly> squarefree_decomposition(const IntPoly& p0) {
  if (p0.is_zero()) throw std::domain_error("squarefree decomposition of zero");
  IntPoly p = p0.normalized();
  std::vector<IntPoly> out;
  if (p.degree() == 0) return out;
  IntPoly g = gcd(p, p.derivative());
  IntPoly w = quotient_q(p, g);
  while (w.degree() > 0) {
    IntPoly y = gcd(w, g);
    out.push_back(quotient_q(w, y));
    w = y;
    g = quotient_q(g, y);
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

Integer determinant(std::vector<std::vector<Integer>> m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

namespace {

Integer sylvester(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  // a, b ascending with formal degrees m = |a|-1, n = |b|-1
  int m = static_cast<int>(a.size()) - 1, n = static_cast<int>(b.size()) - 1;
  int size = m + n;
  std::vector<std::vector<Integer>> s(size, std::vector<Integer>(size, 0));
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j) s[r][r + j] = a[m - j];
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j) s[n + r][r + j] = b[n - j];
  return determinant(std::move(s));
}

}  // namespace

Integer resultant(const IntPoly& a, const IntPoly& b) {
  if (a.is_form() || b.is_form()) throw std::invalid_argument("use form_resultant for forms");
  if (a.is_zero() || b.is_zero()) return 0;
  return sylvester(a.coeffs(), b.coeffs());
}

Integer form_resultant(const IntPoly& a, const IntPoly& b) {
  if (!a.is_form() || !b.is_form()) throw std::invalid_argument("form_resultant needs forms");
  return sylvester(a.coeffs(), b.coeffs());
}

IntPoly compose_form(const IntPoly& f, const IntPoly& g1, const IntPoly& g2) {
  if (!f.is_form() || !g1.is_form() || !g2.is_form()) throw std::invalid_argument("compose_form needs forms");
  if (g1.degree() != g2.degree()) throw std::invalid_argument("compose_form: unequal degrees");
  int n = f.degree(), m = g1.degree();
  std::vector<IntPoly> p1{IntPoly::form({Integer(1)})}, p2{IntPoly::form({Integer(1)})};
  for (int i = 1; i <= n; ++i) {
    p1.push_back(p1.back() * g1);
    p2.push_back(p2.back() * g2);
  }
  IntPoly acc = IntPoly::form(std::vector<Integer>(n * m + 1, 0));
  for (int i = 0; i <= n; ++i) {
    if (f.coeffs()[i] == 0) continue;
    acc = acc + p1[i] * p2[n - i] * f.coeffs()[i];
  }
  return acc;
}

Integer max_abs_coeff(const IntPoly& p) {
  Integer m = 0;
  for (const auto& c : p.coeffs())
    if (abs(c) > m) m = abs(c);
  return m;
}

}  // namespace hcrit
