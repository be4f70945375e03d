#include "hcrit/exactnum/place.hpp"

#include <stdexcept>

namespace hcrit {

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  // GMP runs Baillie-PSW first; there are no known BPSW pseudoprimes and none
  // below 2^64.
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

Place Place::prime(unsigned long p) {
  if (!is_prime(Integer(p)))
    throw std::invalid_argument("place requires a prime, got " + std::to_string(p));
  return Place(p);
}

std::string Place::to_string() const {
  return is_archimedean() ? std::string("inf") : std::to_string(p_);
}

Place Place::parse(const std::string& text) {
  if (text == "inf" || text == "arch" || text == "oo" || text == "infinity")
    return archimedean();
  std::size_t used = 0;
  unsigned long p = 0;
  try {
    p = std::stoul(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed place '" + text + "'");
  }
  if (used != text.size()) throw std::invalid_argument("malformed place '" + text + "'");
  return prime(p);
}

long val_p(const Integer& x, unsigned long p) {
  if (x == 0) throw std::domain_error("valuation of zero");
  Integer rest;
  Integer pp = p;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), pp.get_mpz_t()));
}

long val_p(const Rational& x, const Place& p) {
  if (p.is_archimedean()) throw std::invalid_argument("val_p needs a finite place");
  if (x == 0) throw std::domain_error("valuation of zero");
  return val_p(Integer(x.get_num()), p.prime()) - val_p(Integer(x.get_den()), p.prime());
}

RBound log_abs(const Rational& x, const Place& v, mpfr_prec_t prec) {
  if (x == 0) throw std::domain_error("log of zero");
  // extra bits so the width bound holds for large magnitudes
  std::size_t mag = bit_length(Integer(x.get_num())) + bit_length(Integer(x.get_den())) + 2;
  mpfr_prec_t work = prec + 16 + static_cast<mpfr_prec_t>(bit_length(Integer(static_cast<unsigned long>(mag))));
  if (v.is_archimedean()) return RBound::log_of(Rational(abs(x)), work);
  long e = val_p(x, v);
  if (e == 0) return RBound(BigFloat(work), BigFloat(work));
  return RBound::log_of(Integer(v.prime()), work) * Rational(-e);
}

RBound log_plus_abs(const Rational& x, const Place& v, mpfr_prec_t prec) {
  if (x == 0) return RBound(BigFloat(prec), BigFloat(prec));
  RBound l = log_abs(x, v, prec);
  return max(l, RBound(BigFloat(l.prec()), BigFloat(l.prec())));
}

TrialFactorization trial_factor(const Integer& n, unsigned long bound) {
  TrialFactorization out;
  Integer m = abs(n);
  if (m == 0) throw std::domain_error("cannot factor zero");
  auto take = [&](unsigned long p) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    if (e) out.primes.emplace_back(p, e);
  };
  take(2);
  for (unsigned long p = 3; p <= bound; p += 2) {
    if (Integer(p) * p > m) break;
    take(p);
  }
  if (m > 1 && m <= Integer(bound) * bound && m.fits_ulong_p()) {
    out.primes.emplace_back(m.get_ui(), 1);
    m = 1;
  }
  out.cofactor = m;
  return out;
}

std::vector<unsigned long> prime_divisors(const Integer& n) {
  auto tf = trial_factor(n);
  std::vector<unsigned long> out;
  for (auto& [p, e] : tf.primes) out.push_back(p);
  if (tf.cofactor != 1) {
    if (!is_prime(tf.cofactor) || !tf.cofactor.fits_ulong_p())
      throw std::runtime_error("could not factor " + tf.cofactor.get_str());
    out.push_back(tf.cofactor.get_ui());
  }
  return out;
}

}  // namespace hcrit
