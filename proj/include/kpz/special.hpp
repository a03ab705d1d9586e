#pragma once

// Special functions on real and complex arguments: log-gamma via the
// Stirling series with recurrence push-up, regularized incomplete gamma by
// series / continued fraction, and the Kolmogorov distribution tail used by
// the KS tests.

#include <cmath>
#include <complex>
#include <stdexcept>

namespace kpz {

using Cplx = std::complex<double>;

// log Gamma(z) for Re(z) not on the negative real axis. Pushes the argument
// up past Re 10 with the recurrence, then applies the Stirling series with
// Bernoulli coefficients.
inline Cplx log_gamma(Cplx z) {
  if (z.real() < 0 && z.imag() == 0 && z.real() == std::floor(z.real()))
    throw std::domain_error("log_gamma at a nonpositive integer pole");
  Cplx shift(0.0, 0.0);
  while (z.real() < 10.0) {
    shift -= std::log(z);
    z += 1.0;
  }
  static const double bern[] = {1.0 / 12, -1.0 / 360, 1.0 / 1260, -1.0 / 1680,
                                1.0 / 1188, -691.0 / 360360, 1.0 / 156};
  const Cplx zi = 1.0 / z, zi2 = zi * zi;
  Cplx series(0.0, 0.0), p = zi;
  for (double b : bern) {
    series += b * p;
    p *= zi2;
  }
  constexpr double half_log_two_pi = 0.91893853320467274178;
  return shift + (z - 0.5) * std::log(z) - z + half_log_two_pi + series;
}

inline Cplx cgamma(Cplx z) { return std::exp(log_gamma(z)); }

// Regularized lower incomplete gamma P(a, x); series for x < a+1, continued
// fraction (modified Lentz) otherwise.
inline double gamma_p(double a, double x) {
  if (a <= 0 || x < 0) throw std::invalid_argument("gamma_p: bad arguments");
  if (x == 0) return 0.0;
  double lg = std::lgamma(a);
  if (x < a + 1.0) {
    double term = 1.0 / a, sum = term;
    for (int n = 1; n < 10000; ++n) {
      term *= x / (a + n);
      sum += term;
      if (std::abs(term) < std::abs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - lg);
  }
  // Q(a,x) via continued fraction
  double tiny = 1e-300;
  double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
  for (int i = 1; i < 10000; ++i) {
    double an = -static_cast<double>(i) * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  double q = std::exp(-x + a * std::log(x) - lg) * h;
  return 1.0 - q;
}

// Inverse-gamma CDF with shape a, unit scale: P(W <= w) for W = 1/G,
// G ~ Gamma(a,1): equals Q(a, 1/w).
inline double inverse_gamma_cdf(double a, double w) {
  if (w <= 0) return 0.0;
  return 1.0 - gamma_p(a, 1.0 / w);
}

// Kolmogorov distribution K(x) = P(sup|B| <= x); the KS statistic satisfies
// sqrt(n) D_n -> K. Series converges fast for x > 0.2.
inline double kolmogorov_cdf(double x) {
  if (x <= 0.05) return 0.0;
  double sum = 0.0;
  for (int k = 1; k <= 200; ++k) {
    double term = std::exp(-2.0 * k * k * x * x);
    sum += (k % 2 == 1 ? term : -term);
    if (term < 1e-18) break;
  }
  return 1.0 - 2.0 * sum;
}

}  // namespace kpz
