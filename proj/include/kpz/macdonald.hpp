#pragma once

// Macdonald P/Q polynomials via the branching representation with phi/psi
// strip coefficients, plus the Pieri and (skew-)Cauchy machinery. Exact
// rational evaluation is available at the two specializations where the
// coefficient products are finite: q = t (everything collapses to Schur)
// and t = 0 (q-Whittaker), which is all the exact tests need. Generic (q,t)
// runs in floating point through truncated q-Pochhammer ratios.
//
// Boundary convention throughout: missing partition parts read as 0, and
// mu_0 = +infinity in single-box formulas.

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "kpz/partition.hpp"
#include "kpz/qseries.hpp"
#include "kpz/rational.hpp"

namespace kpz {

struct SkewPair {
  Partition outer, inner;
  bool horizontal() const { return outer.horizontal_strip_over(inner); }
  bool vertical() const { return outer.vertical_strip_over(inner); }
};

// ---- generic (q,t), floating point -----------------------------------------

inline double skew_psi(const Partition& la, const Partition& mu, double q, double t) {
  if (!la.horizontal_strip_over(mu)) return 0.0;
  if (q == t) return 1.0;
  std::size_t depth = qpoch_depth(q);
  double prod = 1.0;
  auto u = [&](long a, long b) { return std::pow(q, a) * std::pow(t, b); };
  for (std::size_t i = 1; i <= mu.length(); ++i)
    for (std::size_t j = i; j <= mu.length(); ++j) {
      long d = static_cast<long>(j - i);
      prod *= f_ratio(u(mu.part(i - 1) - mu.part(j - 1), d), q, t, depth) *
              f_ratio(u(la.part(i - 1) - la.part(j), d), q, t, depth) /
              (f_ratio(u(la.part(i - 1) - mu.part(j - 1), d), q, t, depth) *
               f_ratio(u(mu.part(i - 1) - la.part(j), d), q, t, depth));
    }
  return prod;
}

inline double skew_phi(const Partition& la, const Partition& mu, double q, double t) {
  if (!la.horizontal_strip_over(mu)) return 0.0;
  if (q == t) return 1.0;
  std::size_t depth = qpoch_depth(q);
  double prod = 1.0;
  auto u = [&](long a, long b) { return std::pow(q, a) * std::pow(t, b); };
  for (std::size_t i = 1; i <= la.length(); ++i)
    for (std::size_t j = i; j <= la.length(); ++j) {
      long d = static_cast<long>(j - i);
      prod *= f_ratio(u(la.part(i - 1) - la.part(j - 1), d), q, t, depth) *
              f_ratio(u(mu.part(i - 1) - mu.part(j), d), q, t, depth) /
              (f_ratio(u(la.part(i - 1) - mu.part(j - 1), d), q, t, depth) *
               f_ratio(u(mu.part(i - 1) - la.part(j), d), q, t, depth));
    }
  return prod;
}

// ---- exact coefficients at q = t and t = 0 ----------------------------------

template <typename T>
bool exact_spec_supported(const T& q, const T& t) {
  return q == t || t == T(0);
}

// t = 0 closed forms, finite products:
//   phi = prod_{i<=l(la)} [ 1/(q;q)_{la_i-mu_i} ]
//                        * prod_{m=mu_i-la_{i+1}+1}^{mu_i-mu_{i+1}} (1-q^m)
//   psi = prod_{i<=l(mu)} [ 1/(q;q)_{la_i-mu_i} ]
//                        * prod_{m=mu_i-la_{i+1}+1}^{la_i-la_{i+1}} (1-q^m)
template <typename T>
T skew_phi_exact(const Partition& la, const Partition& mu, const T& q, const T& t) {
  if (!la.horizontal_strip_over(mu)) return T(0);
  if (q == t) return T(1);
  if (t != T(0)) throw std::invalid_argument("exact skew coefficients need q==t or t==0");
  T prod = T(1);
  for (std::size_t i = 1; i <= la.length(); ++i) {
    long li = la.part(i - 1), mi = mu.part(i - 1);
    prod /= qq_finite(q, li - mi);
    prod *= qq_range(q, mi - la.part(i), mi - mu.part(i));
  }
  return prod;
}

template <typename T>
T skew_psi_exact(const Partition& la, const Partition& mu, const T& q, const T& t) {
  if (!la.horizontal_strip_over(mu)) return T(0);
  if (q == t) return T(1);
  if (t != T(0)) throw std::invalid_argument("exact skew coefficients need q==t or t==0");
  T prod = T(1);
  for (std::size_t i = 1; i <= mu.length(); ++i) {
    long li = la.part(i - 1), mi = mu.part(i - 1);
    prod /= qq_finite(q, li - mi);
    prod *= qq_range(q, mi - la.part(i), li - la.part(i));
  }
  return prod;
}

// psi' for vertical strips: finite product over pairs i < j with
// la_i = mu_i and la_j = mu_j + 1; exact for any (q,t).
template <typename T>
T skew_psi_prime(const Partition& la, const Partition& mu, const T& q, const T& t) {
  if (!la.vertical_strip_over(mu)) return T(0);
  auto qt = [&](long a, long b) {
    T v = T(1);
    for (long c = 0; c < a; ++c) v *= q;
    for (long c = 0; c < b; ++c) v *= t;
    return v;
  };
  T prod = T(1);
  std::size_t n = la.length();
  for (std::size_t j = 2; j <= n; ++j) {
    if (la.part(j - 1) != mu.part(j - 1) + 1) continue;
    for (std::size_t i = 1; i < j; ++i) {
      if (la.part(i - 1) != mu.part(i - 1)) continue;
      long dmu = mu.part(i - 1) - mu.part(j - 1);
      long dla = la.part(i - 1) - la.part(j - 1);
      long d = static_cast<long>(j - i);
      prod *= (T(1) - qt(dmu, d - 1)) * (T(1) - qt(dla, d + 1)) /
              ((T(1) - qt(dmu, d)) * (T(1) - qt(dla, d)));
    }
  }
  return prod;
}

// ---- P and Q by branching ----------------------------------------------------

enum class MacWhich { P, Q };

namespace detail {

// Sum over chains inner = la^(0) -> ... -> la^(k) = outer with horizontal
// strips, weight prod coeff(la^(i), la^(i-1)) x_i^{|strip|}.
template <typename T, typename Coeff>
T branch_sum(const Partition& outer, const Partition& inner, const std::vector<T>& x,
             const Coeff& coeff) {
  const std::size_t k = x.size();
  std::function<T(const Partition&, std::size_t)> rec = [&](const Partition& la,
                                                            std::size_t vars) -> T {
    if (vars == 0) return la == inner ? T(1) : T(0);
    if (!la.contains(inner)) return T(0);
    T total = T(0);
    // enumerate nu with la/nu horizontal strip, nu contains inner
    std::vector<long> cur;
    std::size_t m = la.length();
    std::function<void(std::size_t)> enumerate = [&](std::size_t i) {
      if (i == m) {
        Partition nu{std::vector<long>(cur)};
        if (!nu.contains(inner)) return;
        T w = T(1);
        long boxes = la.size() - nu.size();
        for (long c = 0; c < boxes; ++c) w *= x[vars - 1];
        T cf = coeff(la, nu);
        if (cf == T(0)) return;
        total += cf * w * rec(nu, vars - 1);
        return;
      }
      long lo = std::max(la.part(i + 1), inner.part(i));
      long hi = la.part(i);
      if (i > 0) hi = std::min(hi, cur[i - 1]);
      for (long v = hi; v >= lo; --v) {
        cur.push_back(v);
        enumerate(i + 1);
        cur.pop_back();
      }
    };
    if (m == 0) return inner.is_empty() ? T(1) : T(0);
    enumerate(0);
    return total;
  };
  if (k == 0) return outer == inner ? T(1) : T(0);
  return rec(outer, k);
}

}  // namespace detail

// Floating-point skew Macdonald polynomial, generic (q,t).
inline double macdonald(const Partition& outer, const Partition& inner,
                        const std::vector<double>& x, double q, double t,
                        MacWhich which = MacWhich::P) {
  if (!outer.contains(inner)) return 0.0;
  auto coeff = [&](const Partition& la, const Partition& nu) {
    return which == MacWhich::P ? skew_psi(la, nu, q, t) : skew_phi(la, nu, q, t);
  };
  return detail::branch_sum(outer, inner, x, coeff);
}

inline double macdonald(const Partition& lambda, const std::vector<double>& x, double q,
                        double t, MacWhich which = MacWhich::P) {
  return macdonald(lambda, Partition(), x, q, t, which);
}

// Exact rational version; requires q == t or t == 0.
template <typename T>
T macdonald_exact(const Partition& outer, const Partition& inner, const std::vector<T>& x,
                  const T& q, const T& t, MacWhich which = MacWhich::P) {
  if (!exact_spec_supported(q, t))
    throw std::invalid_argument("macdonald_exact: q==t or t==0 only");
  auto coeff = [&](const Partition& la, const Partition& nu) {
    return which == MacWhich::P ? skew_psi_exact(la, nu, q, t) : skew_phi_exact(la, nu, q, t);
  };
  return detail::branch_sum(outer, inner, x, coeff);
}

// ---- Pieri expansions ---------------------------------------------------------

enum class PieriRule { SchurH1, MacdonaldG1, MacdonaldE1 };

struct PieriTerm {
  Partition nu;
  double coefficient;
};

inline std::vector<PieriTerm> pieri_apply(const Partition& lambda, double q, double t,
                                          PieriRule rule) {
  std::vector<PieriTerm> out;
  for (std::size_t i = 0; i <= lambda.length(); ++i) {
    if (!lambda.valid_after_increment(i)) continue;
    Partition nu = lambda.add_box(i);
    double c = 1.0;
    if (rule == PieriRule::MacdonaldG1)
      c = skew_phi(nu, lambda, q, t);
    else if (rule == PieriRule::MacdonaldE1)
      c = to_double(skew_psi_prime<double>(nu, lambda, q, t));
    out.push_back({nu, c});
  }
  return out;
}

// ---- Cauchy kernels ------------------------------------------------------------

// H(x; y) = prod_{i,j} (t x_i y_j; q)_inf / (x_i y_j; q)_inf
inline double cauchy_kernel_H(const std::vector<double>& x, const std::vector<double>& y,
                              double q, double t) {
  double prod = 1.0;
  for (double xi : x)
    for (double yj : y) {
      if (std::abs(xi * yj) >= 1) throw std::invalid_argument("cauchy kernel diverges");
      prod *= qpochhammer_inf(t * xi * yj, q) / qpochhammer_inf(xi * yj, q);
    }
  return prod;
}

enum class CauchyFamily { Schur, Macdonald };

// | sum_{|la| <= L} P_la(x) Q_la(y) - H(x;y) |
inline double cauchy_residual(const std::vector<double>& x, const std::vector<double>& y,
                              double q, double t, CauchyFamily family, long L) {
  if (family == CauchyFamily::Schur) t = q;
  double sum = 0.0;
  std::size_t cap = std::min(x.size(), y.size());
  for (const Partition& la : partitions_up_to(L, cap))
    sum += macdonald(la, x, q, t, MacWhich::P) * macdonald(la, y, q, t, MacWhich::Q);
  double target;
  if (family == CauchyFamily::Schur) {
    target = 1.0;
    for (double xi : x)
      for (double yj : y) target /= 1.0 - xi * yj;
  } else {
    target = cauchy_kernel_H(x, y, q, t);
  }
  return std::abs(sum - target);
}

// Skew-Cauchy: sum_mu P_{mu/la}(x) Q_{mu/nu}(y)
//            = H(x;y) sum_mu Q_{la/mu}(y) P_{nu/mu}(x).
inline double skew_cauchy_residual(const Partition& la, const Partition& nu,
                                   const std::vector<double>& x, const std::vector<double>& y,
                                   double q, double t, long L) {
  double lhs = 0.0;
  long cap = la.size() + nu.size() + L;
  std::size_t len_cap = std::max(la.length() + x.size(), nu.length() + y.size());
  for (const Partition& mu : partitions_up_to(cap, len_cap))
    lhs += macdonald(mu, la, x, q, t, MacWhich::P) * macdonald(mu, nu, y, q, t, MacWhich::Q);
  double rhs = 0.0;
  for (const Partition& mu : partitions_up_to(std::min(la.size(), nu.size()),
                                              std::max(la.length(), nu.length())))
    rhs += macdonald(la, mu, y, q, t, MacWhich::Q) * macdonald(nu, mu, x, q, t, MacWhich::P);
  rhs *= cauchy_kernel_H(x, y, q, t);
  return std::abs(lhs - rhs);
}

}  // namespace kpz
