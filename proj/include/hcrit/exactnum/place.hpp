#pragma once

#include <string>

#include "hcrit/exactnum/rational.hpp"
#include "hcrit/exactnum/rbound.hpp"

namespace hcrit {

/// A place of Q: the usual absolute value or a p-adic one, normalized so that
/// |p|_p = 1/p.
class Place {
 public:
  static Place archimedean() { return Place(0); }
  /// Throws std::invalid_argument unless p is prime.
  static Place prime(unsigned long p);

  bool is_archimedean() const { return p_ == 0; }
  /// The residue characteristic; 0 at the archimedean place.
  unsigned long prime() const { return p_; }

  std::string to_string() const;
  /// Accepts "inf", "arch", "oo" or a prime.
  static Place parse(const std::string& text);

  friend bool operator==(const Place&, const Place&) = default;
  friend auto operator<=>(const Place&, const Place&) = default;

 private:
  explicit Place(unsigned long p) : p_(p) {}
  unsigned long p_;
};

bool is_prime(const Integer& n);

/// p-adic valuation. Throws std::domain_error("valuation of zero") for x = 0.
long val_p(const Integer& x, unsigned long p);
long val_p(const Rational& x, const Place& p);

/// Enclosure of log|x|_v. At a prime this is -val_p(x) * log p.
RBound log_abs(const Rational& x, const Place& v, mpfr_prec_t prec);
/// log max(1, |x|_v); x = 0 gives 0.
RBound log_plus_abs(const Rational& x, const Place& v, mpfr_prec_t prec);

/// Primes found by trial division up to `bound`, with multiplicities; `cofactor`
/// is what remains (1 when fully factored).
struct TrialFactorization {
  std::vector<std::pair<unsigned long, unsigned>> primes;
  Integer cofactor;
};
TrialFactorization trial_factor(const Integer& n, unsigned long bound = 1000000);

/// The prime divisors of |n| (n != 0). Throws std::runtime_error when a
/// composite cofactor survives trial division.
std::vector<unsigned long> prime_divisors(const Integer& n);

}  // namespace hcrit
