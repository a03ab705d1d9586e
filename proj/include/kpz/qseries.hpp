#pragma once

// q-Pochhammer symbols. The infinite product (a;q)_inf is truncated once
// |a q^k| < eps * (1 - |q|); ratios that must cancel rounding bias share a
// truncation depth.

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "kpz/rational.hpp"

namespace kpz {

inline std::size_t qpoch_depth(double q, double eps = 1e-16) {
  if (!(std::abs(q) < 1)) throw std::invalid_argument("qpochhammer: need |q| < 1");
  if (q == 0) return 1;
  double k = std::log(eps * (1 - std::abs(q))) / std::log(std::abs(q));
  return static_cast<std::size_t>(std::max(1.0, std::ceil(k))) + 2;
}

inline double qpochhammer_inf(double a, double q, double eps = 1e-16) {
  if (a == 0) return 1.0;
  std::size_t depth = qpoch_depth(q, eps);
  double prod = 1.0, aqk = a;
  for (std::size_t k = 0; k < depth; ++k) {
    prod *= 1.0 - aqk;
    aqk *= q;
    if (std::abs(aqk) < eps * (1 - std::abs(q))) break;
  }
  return prod;
}

template <typename T>
T qpochhammer_finite(const T& a, const T& q, long n) {
  T prod = T(1), aqk = a;
  for (long k = 0; k < n; ++k) {
    prod *= T(1) - aqk;
    aqk *= q;
  }
  return prod;
}

// (q;q)_a = prod_{m=1..a} (1 - q^m), exact over any field.
template <typename T>
T qq_finite(const T& q, long a) {
  T prod = T(1), qm = q;
  for (long m = 1; m <= a; ++m) {
    prod *= T(1) - qm;
    qm *= q;
  }
  return prod;
}

// prod_{m=b+1..c} (1 - q^m); empty when c <= b.
template <typename T>
T qq_range(const T& q, long b, long c) {
  T prod = T(1);
  if (c <= b) return prod;
  T qm = T(1);
  for (long m = 1; m <= c; ++m) {
    qm *= q;
    if (m > b) prod *= T(1) - qm;
  }
  return prod;
}

// f(u) = (t u; q)_inf / (q u; q)_inf evaluated as one product with shared
// truncation depth.
inline double f_ratio(double u, double q, double t, std::size_t depth) {
  double prod = 1.0, qi = 1.0;
  for (std::size_t i = 0; i < depth; ++i) {
    prod *= (1.0 - t * u * qi) / (1.0 - q * u * qi);
    qi *= q;
  }
  return prod;
}

}  // namespace kpz
