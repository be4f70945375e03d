#include "hcrit/exactnum/factor.hpp"

#include <algorithm>
#include <stdexcept>

#include "hcrit/exactnum/complex_roots.hpp"

namespace hcrit {

namespace {

enum class Probe { Integral, NotIntegral, TooWide };

// lead * prod (z - r) over the chosen boxes; Integral fills `out`.
Probe candidate(const Integer& lead, const std::vector<CBound>& roots, const std::vector<int>& pick,
                mpfr_prec_t prec, IntPoly& out) {
  RBound zero = RBound::from_int(0, prec);
  std::vector<CBound> c{{RBound::from_int(lead, prec), zero}};
  for (int i : pick) {
    std::vector<CBound> next(c.size() + 1, CBound{zero, zero});
    for (std::size_t j = 0; j < c.size(); ++j) {
      next[j + 1] = next[j + 1] + c[j];
      next[j] = next[j] - c[j] * roots[i];
    }
    c = std::move(next);
  }
  std::vector<Integer> coeffs;
  for (const auto& z : c) {
    if (!z.im.contains_zero()) return Probe::NotIntegral;
    BigFloat lo = z.re.lo(), hi = z.re.hi();
    Integer a, b;
    mpfr_get_z(a.get_mpz_t(), lo.get(), MPFR_RNDU);
    mpfr_get_z(b.get_mpz_t(), hi.get(), MPFR_RNDD);
    if (a > b) return Probe::NotIntegral;
    if (a != b || z.im.width() > 0.25) return Probe::TooWide;
    coeffs.push_back(a);
  }
  out = IntPoly(std::move(coeffs)).normalized();
  return Probe::Integral;
}

// Splits a squarefree primitive polynomial into irreducible factors.
std::vector<IntPoly> split_squarefree(const IntPoly& p) {
  int n = p.degree();
  if (n <= 1) return {p.normalized()};
  mpfr_prec_t prec = 64 + 2 * static_cast<mpfr_prec_t>(bit_length(max_abs_coeff(p))) + 8 * n;
  for (int attempt = 0; attempt < 8; ++attempt, prec *= 2) {
    std::vector<CBound> roots;
    for (auto& rb : archimedean_root_enclosures(p, prec)) roots.push_back(rb.box);
    std::vector<IntPoly> found;
    std::vector<bool> used(n, false);
    IntPoly rest = p.normalized();
    bool too_wide = false;
    for (int k = 1; 2 * k <= rest.degree() && !too_wide; ++k) {
      std::vector<int> free;
      for (int i = 0; i < n; ++i)
        if (!used[i]) free.push_back(i);
      std::vector<bool> mask(free.size(), false);
      std::fill(mask.begin(), mask.begin() + k, true);
      bool restart = false;
      do {
        std::vector<int> pick;
        for (std::size_t i = 0; i < free.size(); ++i)
          if (mask[i]) pick.push_back(free[i]);
        IntPoly g;
        Probe pr = candidate(rest.lead(), roots, pick, prec, g);
        if (pr == Probe::TooWide) {
          too_wide = true;
          break;
        }
        if (pr == Probe::Integral && g.degree() == k && divides(g, rest)) {
          found.push_back(g);
          rest = divexact(rest, g).normalized();
          for (int i : pick) used[i] = true;
          restart = true;
          break;
        }
      } while (std::prev_permutation(mask.begin(), mask.end()));
      if (restart) --k;  // retry the same size on what is left
    }
    if (too_wide) continue;
    found.push_back(rest);
    return found;
  }
  throw std::runtime_error("factorization did not settle for " + p.to_string());
}

}  // namespace

std::vector<Factor> factor_over_q(const IntPoly& p0, int max_degree) {
  if (p0.is_zero()) throw std::domain_error("factoring the zero polynomial");
  IntPoly p = p0.is_form() ? p0.dehomogenize() : p0;
  if (p.degree() > max_degree) throw std::length_error("degree above the factorization cap");
  std::vector<Factor> out;
  auto parts = squarefree_decomposition(p);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k].degree() <= 0) continue;
    for (auto& g : split_squarefree(parts[k])) out.push_back({g, static_cast<int>(k) + 1});
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
    return a.poly.coeffs() < b.poly.coeffs();
  });
  return out;
}

bool is_irreducible(const IntPoly& p) {
  if (p.degree() <= 0) return false;
  auto f = factor_over_q(p);
  return f.size() == 1 && f[0].multiplicity == 1;
}

}  // namespace hcrit
