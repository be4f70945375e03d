#pragma once

// Independent floating-point oracles used to cross-check exact and interval
// results.

#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

using cld = std::complex<long double>;

// Durand-Kerner on a polynomial given by ascending double coefficients.
inline std::vector<cld> roots(const std::vector<long double>& c) {
  int n = static_cast<int>(c.size()) - 1;
  while (n > 0 && c[n] == 0) --n;
  std::vector<cld> z(n);
  const cld seed(0.4L, 0.9L);
  for (int i = 0; i < n; ++i) z[i] = std::pow(seed, i);
  auto eval = [&](cld x) {
    cld acc = 0;
    for (int i = n; i >= 0; --i) acc = acc * x + cld(c[i] / c[n]);
    return acc;
  };
  for (int it = 0; it < 2000; ++it) {
    long double moved = 0;
    for (int i = 0; i < n; ++i) {
      cld den = 1;
      for (int j = 0; j < n; ++j)
        if (j != i) den *= z[i] - z[j];
      cld step = eval(z[i]) / den;
      z[i] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-17L) break;
  }
  return z;
}

// log M(p) = log|a_n| + sum log+|alpha|.
inline long double log_mahler(const std::vector<long double>& c) {
  int n = static_cast<int>(c.size()) - 1;
  while (n > 0 && c[n] == 0) --n;
  long double s = std::log(std::fabs(c[n]));
  for (auto r : roots(std::vector<long double>(c.begin(), c.begin() + n + 1)))
    s += std::max(0.0L, std::log(std::abs(r)));
  return s;
}

// Weil height of p/q in lowest terms.
inline double height(long p, long q) { return std::log(static_cast<double>(std::max(std::labs(p), std::labs(q)))); }

inline long gcd(long a, long b) {
  a = std::labs(a), b = std::labs(b);
  while (b) {
    long t = a % b;
    a = b, b = t;
  }
  return a;
}

}  // namespace oracle
