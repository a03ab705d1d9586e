#pragma once

// GL(n)-Whittaker functions by the Givental integral over geometric GT
// patterns with fixed bottom row (n <= 3, so the integral is at most
// three-dimensional), the Bump-Stade integral identity, the Sklyanin
// density, and the log-gamma polymer Laplace transform computed two ways:
// the Plancherel contour formula and direct Monte Carlo over inverse-gamma
// disorder.
//
// All integrals run in logarithmic coordinates where the e^{-E} factor
// decays doubly exponentially; a half-range of ~14 log units around the
// data is far below double precision already.

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <thread>
#include <vector>

#include "kpz/gauss_legendre.hpp"
#include "kpz/grid.hpp"
#include "kpz/rng.hpp"
#include "kpz/special.hpp"

namespace kpz {

struct WhittakerResult {
  Cplx value;
  double self_delta = 0;  // relative change under node refinement
  bool converged = false;
};

namespace detail {

struct LogGrid {
  std::vector<double> xs, ws;
};

inline LogGrid log_grid(double center, double half_range, double panel_width,
                        std::size_t order) {
  LogGrid g;
  std::size_t panels =
      static_cast<std::size_t>(std::ceil(2 * half_range / panel_width));
  for (std::size_t p = 0; p < panels; ++p) {
    double a = center - half_range + p * panel_width;
    std::vector<double> xs, ws;
    gl_mapped(order, a, a + panel_width, xs, ws);
    g.xs.insert(g.xs.end(), xs.begin(), xs.end());
    g.ws.insert(g.ws.end(), ws.begin(), ws.end());
  }
  return g;
}

template <typename F>
Cplx whittaker_quad(const std::vector<Cplx>& lambda, const std::vector<double>& x,
                    std::size_t order, const F&) {
  const std::size_t n = x.size();
  double c = 0, max_im = 0;
  for (double xi : x) c += std::log(xi) / n;
  for (const Cplx& l : lambda) max_im = std::max(max_im, std::abs(l.imag()));
  double width = std::min(2.0, 10.0 / (1.0 + max_im));
  LogGrid g = log_grid(c, 13.0, width, order);

  if (n == 2) {
    const double lx12 = std::log(x[0] * x[1]);
    Cplx total(0, 0);
    for (std::size_t i = 0; i < g.xs.size(); ++i) {
      double u = g.xs[i];
      double energy = std::exp(u) / x[0] + x[1] * std::exp(-u);
      Cplx expo = -lambda[0] * u - lambda[1] * (lx12 - u) - energy;
      total += g.ws[i] * std::exp(expo);
    }
    return total;
  }

  // n == 3: interior (z^1_1, z^2_1, z^2_2) in logs (u, v1, v2)
  const double lxall = std::log(x[0] * x[1] * x[2]);
  Cplx total(0, 0);
  for (std::size_t a = 0; a < g.xs.size(); ++a) {
    double v1 = g.xs[a];
    double e_v1 = std::exp(v1);
    for (std::size_t b = 0; b < g.xs.size(); ++b) {
      double v2 = g.xs[b];
      double e_v2 = std::exp(v2);
      double base_energy = e_v1 / x[0] + x[1] / e_v1 + e_v2 / x[1] + x[2] / e_v2;
      Cplx inner(0, 0);
      for (std::size_t k = 0; k < g.xs.size(); ++k) {
        double u = g.xs[k];
        double energy = base_energy + std::exp(u - v1) + std::exp(v2 - u);
        Cplx expo = -lambda[0] * u - lambda[1] * (v1 + v2 - u) -
                    lambda[2] * (lxall - v1 - v2) - energy;
        inner += g.ws[k] * std::exp(expo);
      }
      total += g.ws[a] * g.ws[b] * inner;
    }
  }
  return total;
}

}  // namespace detail

inline Cplx whittaker_gln_raw(const std::vector<Cplx>& lambda, const std::vector<double>& x,
                              std::size_t order = 16) {
  if (lambda.size() != x.size()) throw std::invalid_argument("whittaker: dim mismatch");
  for (double xi : x)
    if (!(xi > 0)) throw std::invalid_argument("whittaker: x must be positive");
  const std::size_t n = x.size();
  if (n == 0 || n > 3) throw std::invalid_argument("whittaker: n in {1,2,3}");
  if (n == 1) return std::exp(-lambda[0] * std::log(x[0]));
  return detail::whittaker_quad(lambda, x, order, 0);
}

// Doubles the quadrature order as the convergence check.
inline WhittakerResult whittaker_gln(const std::vector<Cplx>& lambda,
                                     const std::vector<double>& x, std::size_t order = 16,
                                     double tol = 1e-8) {
  WhittakerResult r;
  Cplx coarse = whittaker_gln_raw(lambda, x, order);
  r.value = x.size() == 1 ? coarse : whittaker_gln_raw(lambda, x, 2 * order);
  double scale = std::max(std::abs(r.value), 1e-300);
  r.self_delta = std::abs(r.value - coarse) / scale;
  r.converged = x.size() == 1 || r.self_delta < tol;
  return r;
}

inline double whittaker_gln_real(const std::vector<double>& lambda,
                                 const std::vector<double>& x, std::size_t order = 16) {
  std::vector<Cplx> l(lambda.begin(), lambda.end());
  return whittaker_gln_raw(l, x, order).real();
}

// ---- Bump-Stade identity ----------------------------------------------------

// | int e^{-1/x_n} Psi_alpha Psi_beta prod dx/x - prod Gamma(alpha_i + beta_j) |
inline double bump_stade_residual(const std::vector<double>& alpha,
                                  const std::vector<double>& beta,
                                  std::size_t outer_order = 16,
                                  std::size_t inner_order = 16) {
  const std::size_t n = alpha.size();
  if (beta.size() != n || n == 0 || n > 2)
    throw std::invalid_argument("bump_stade: n in {1,2}");
  for (double a : alpha)
    for (double b : beta)
      if (!(a + b > 0)) throw std::invalid_argument("bump_stade: alpha_i + beta_j > 0");

  double target = 1;
  for (double a : alpha)
    for (double b : beta) target *= std::tgamma(a + b);

  if (n == 1) {
    // int_0^inf e^{-1/x} x^{-a-b} dx/x, log coordinates
    auto g = detail::log_grid(0.0, 16.0, 2.0, outer_order);
    double total = 0;
    for (std::size_t i = 0; i < g.xs.size(); ++i) {
      double w = g.xs[i];
      total += g.ws[i] * std::exp(-std::exp(-w) - (alpha[0] + beta[0]) * w);
    }
    return std::abs(total - target);
  }

  std::vector<Cplx> la{Cplx(alpha[0]), Cplx(alpha[1])}, lb{Cplx(beta[0]), Cplx(beta[1])};
  auto g = detail::log_grid(0.0, 12.0, 2.0, outer_order);
  double total = 0;
  for (std::size_t i = 0; i < g.xs.size(); ++i) {
    double x1 = std::exp(g.xs[i]);
    for (std::size_t j = 0; j < g.xs.size(); ++j) {
      double x2 = std::exp(g.xs[j]);
      double damp = std::exp(-1.0 / x2);
      if (damp == 0) continue;
      std::vector<double> x{x1, x2};
      double pa = whittaker_gln_raw(la, x, inner_order).real();
      double pb = whittaker_gln_raw(lb, x, inner_order).real();
      total += g.ws[i] * g.ws[j] * damp * pa * pb;
    }
  }
  return std::abs(total - target) ;
}

// ---- Sklyanin measure ---------------------------------------------------------

inline Cplx sklyanin(const std::vector<Cplx>& lambda) {
  const std::size_t n = lambda.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(lambda[i] - lambda[j]) < 1e-12)
        throw std::domain_error("sklyanin: coincident spectral points (pole)");
  Cplx log_prod(0, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) log_prod += log_gamma(lambda[i] - lambda[j]);
  double nfact = 1;
  for (std::size_t k = 2; k <= n; ++k) nfact *= k;
  Cplx two_pi_i_pow = std::pow(Cplx(0, 2 * M_PI), static_cast<double>(n));
  return std::exp(-log_prod) / (two_pi_i_pow * nfact);
}

// ---- log-gamma polymer Laplace transform ---------------------------------------

// Contour route (n <= 2): the vertical line Re = delta must keep all beta_j
// to its left and all alpha_i to its right.
inline double loggamma_laplace_contour(double s, const std::vector<double>& alpha,
                                       const std::vector<double>& beta, double delta = 0,
                                       double height = 40.0, std::size_t order = 12,
                                       double panel_width = 1.0) {
  const std::size_t n = alpha.size();
  if (beta.size() != n || n == 0 || n > 2)
    throw std::invalid_argument("laplace contour: n in {1,2}");
  if (s == 0) return 1.0;
  if (!(s > 0)) throw std::invalid_argument("laplace contour: s >= 0");
  double amin = alpha[0], bmax = std::abs(beta[0]);
  for (double a : alpha) amin = std::min(amin, a);
  for (double b : beta) bmax = std::max(bmax, std::abs(b));
  if (delta == 0) delta = 0.5 * (bmax + amin);
  if (!(delta > bmax) || !(delta < amin))
    throw std::invalid_argument("laplace contour: need max|beta| < delta < min alpha");

  double log_s = std::log(s);
  double gamma_ab = 0;
  for (double a : alpha)
    for (double b : beta) gamma_ab += std::lgamma(a + b);

  auto g = detail::log_grid(0.0, height, panel_width, order);  // y grid on [-H, H]

  auto integrand_exponent = [&](const std::vector<Cplx>& la) {
    Cplx e(0, 0);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t jp = 0; jp < n; ++jp) e += log_gamma(la[j] - beta[jp]);
      for (std::size_t i = 0; i < n; ++i) e += log_gamma(alpha[i] + la[j]);
      e += (beta[j] - la[j]) * log_s;
    }
    e -= gamma_ab;
    return e;
  };

  if (n == 1) {
    Cplx total(0, 0);
    for (std::size_t k = 0; k < g.xs.size(); ++k) {
      Cplx la(delta, g.xs[k]);
      total += g.ws[k] * std::exp(integrand_exponent({la}));
    }
    total /= 2 * M_PI;
    return total.real();
  }

  // n = 2 with the Sklyanin density 1/(Gamma(l1-l2) Gamma(l2-l1)) / 2!
  Cplx total(0, 0);
  for (std::size_t a = 0; a < g.xs.size(); ++a) {
    Cplx l1(delta, g.xs[a]);
    for (std::size_t b = 0; b < g.xs.size(); ++b) {
      Cplx l2(delta, g.xs[b]);
      Cplx e = integrand_exponent({l1, l2});
      if (a != b) e -= log_gamma(l1 - l2) + log_gamma(l2 - l1);
      Cplx v = std::exp(e);
      if (a == b) v = Cplx(0, 0);  // Sklyanin density vanishes on the diagonal
      total += g.ws[a] * g.ws[b] * v;
    }
  }
  total /= (2 * M_PI) * (2 * M_PI) * 2.0;
  return total.real();
}

struct LaplaceMc {
  double mean = 0, stderr_ = 0;
  std::size_t replicas = 0;
};

// Monte Carlo over inverse-gamma disorder; chunked RNG streams merge
// deterministically under any thread count.
inline LaplaceMc loggamma_laplace_mc(std::size_t n, double s,
                                     const std::vector<double>& alpha,
                                     const std::vector<double>& beta, std::size_t replicas,
                                     std::uint64_t seed, unsigned threads = 1) {
  if (replicas < 100) throw std::invalid_argument("laplace mc: need >= 100 replicas");
  if (alpha.size() != n || beta.size() != n)
    throw std::invalid_argument("laplace mc: parameter dim mismatch");
  const std::size_t chunk = 4096;
  const std::size_t chunks = (replicas + chunk - 1) / chunk;
  std::vector<double> sum1(chunks, 0.0), sum2(chunks, 0.0);

  auto run_chunk = [&](std::size_t c) {
    Rng rng(seed, c);
    std::size_t lo = c * chunk, hi = std::min(replicas, lo + chunk);
    RealGrid w(n, n);
    double s1 = 0, s2 = 0;
    for (std::size_t r = lo; r < hi; ++r) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          w(i, j) = rng.inverse_gamma(alpha[i] + beta[j]);
      // polymer partition function by the down-right recursion
      RealGrid z(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          double in = (i == 0 && j == 0) ? 1.0
                      : (i == 0)         ? z(i, j - 1)
                      : (j == 0)         ? z(i - 1, j)
                                         : z(i - 1, j) + z(i, j - 1);
          z(i, j) = in * w(i, j);
        }
      double v = std::exp(-s * z(n - 1, n - 1));
      s1 += v;
      s2 += v * v;
    }
    sum1[c] = s1;
    sum2[c] = s2;
  };

  if (threads <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::vector<std::thread> pool;
    std::size_t per = (chunks + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t]() {
        for (std::size_t c = t * per; c < std::min(chunks, (t + 1) * per); ++c) run_chunk(c);
      });
    for (auto& th : pool) th.join();
  }

  double s1 = 0, s2 = 0;  // deterministic order reduction
  for (std::size_t c = 0; c < chunks; ++c) {
    s1 += sum1[c];
    s2 += sum2[c];
  }
  LaplaceMc out;
  out.replicas = replicas;
  out.mean = s1 / replicas;
  double var = std::max(s2 / replicas - out.mean * out.mean, 0.0);
  out.stderr_ = std::sqrt(var / replicas);
  return out;
}

// n = 1 independent oracle: E[e^{-s W}] for W inverse-gamma(a) by direct
// 1-d quadrature in log coordinates.
inline double inverse_gamma_laplace_quadrature(double a, double s) {
  auto g = detail::log_grid(0.0, 16.0, 1.0, 16);
  double total = 0;
  for (std::size_t i = 0; i < g.xs.size(); ++i) {
    double w = std::exp(g.xs[i]);
    total += g.ws[i] * std::exp(-s * w - 1.0 / w - a * g.xs[i]);
  }
  return total / std::tgamma(a);
}

}  // namespace kpz
