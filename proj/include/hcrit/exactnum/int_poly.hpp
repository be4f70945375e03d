#pragma once

#include <string>
#include <vector>

#include "hcrit/exactnum/rational.hpp"
#include "hcrit/exactnum/rbound.hpp"

namespace hcrit {

/// Dense integer polynomial, coefficients in ascending degree.
///
/// A univariate polynomial is stored trimmed, so degree() is its true degree
/// (-1 for zero). A binary form F(X, Y) = sum c_i X^i Y^(n-i) keeps its formal
/// degree n even when the top coefficients vanish; each vanishing top
/// coefficient is a root at infinity, i.e. a factor of Y.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);
  static IntPoly form(std::vector<Integer> coeffs);
  /// Clears denominators; the result is primitive.
  static IntPoly from_rationals(const std::vector<Rational>& coeffs);
  static IntPoly constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }
  /// s*z - r for the rational r/s, primitive with s > 0.
  static IntPoly linear_root(const Rational& root);

  bool is_form() const { return form_; }
  bool is_zero() const;
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Integer>& coeffs() const { return c_; }
  /// 0 beyond the stored range.
  Integer coeff(int i) const;
  const Integer& lead() const;

  Integer content() const;
  /// Divides out the content; keeps the sign.
  IntPoly primitive_part() const;
  /// Content 1 and positive first nonzero coefficient from the top.
  IntPoly normalized() const;

  /// Dehomogenize at Y = 1 (univariate, trimmed).
  IntPoly dehomogenize() const;
  /// Homogenize a univariate polynomial to formal degree n >= degree().
  IntPoly homogenize(int n) const;
  /// Number of leading zero coefficients of a form (root multiplicity at infinity).
  int infinity_multiplicity() const;
  /// Swap X and Y in a form: c_i -> c_(n-i).
  IntPoly reversed() const;

  IntPoly derivative() const;  // univariate
  IntPoly d_dx() const;        // form
  IntPoly d_dy() const;        // form

  /// s^n P(w + r/s) for the rational shift r/s with n = degree; same roots as
  /// P(w + a).
  IntPoly shifted(const Rational& a) const;
  /// Q(z) = P(z / c) scaled to integers; its roots are c times the roots of P.
  IntPoly scaled_roots(const Rational& c) const;

  Rational eval(const Rational& x) const;
  Integer eval_form(const Integer& x, const Integer& y) const;
  RBound eval(const RBound& x) const;
  CBound eval(const CBound& z) const;

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const Integer& k);
  /// Exact division by an integer; throws std::domain_error if inexact.
  IntPoly divexact(const Integer& k) const;

  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

  std::string to_string(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<Integer> c_;
  bool form_ = false;
};

IntPoly pow(const IntPoly& p, unsigned n);

/// Exact quotient of univariate polynomials; throws std::domain_error unless b
/// divides a over Z.
IntPoly divexact(const IntPoly& a, const IntPoly& b);
/// True when b | a over Q.
bool divides(const IntPoly& b, const IntPoly& a);
/// lead(b)^(deg a - deg b + 1) a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);
/// Primitive gcd of univariate polynomials, normalized.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Yun decomposition of a univariate polynomial: factors[i] is the product of
/// the irreducible factors of multiplicity i+1 (primitive, positive lead). The
/// content and sign are dropped.
std::vector<IntPoly> squarefree_decomposition(const IntPoly& p);

/// Determinant by fraction-free elimination.
Integer determinant(std::vector<std::vector<Integer>> m);

/// Resultant of univariate polynomials by their true degrees.
Integer resultant(const IntPoly& a, const IntPoly& b);
/// Resultant of binary forms by their formal degrees.
Integer form_resultant(const IntPoly& a, const IntPoly& b);

/// F(G1, G2) for a form F of degree n and forms G1, G2 of a common degree m;
/// the result is a form of degree n*m.
IntPoly compose_form(const IntPoly& f, const IntPoly& g1, const IntPoly& g2);

/// Largest absolute coefficient.
Integer max_abs_coeff(const IntPoly& p);

}  // namespace hcrit
