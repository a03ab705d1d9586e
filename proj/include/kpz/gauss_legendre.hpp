#pragma once

// Gauss-Legendre rules computed by Newton iteration on the Legendre
// recurrence, cached per order, with helpers for mapped intervals and
// panel composition.

#include <cmath>
#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <vector>

namespace kpz {

struct QuadRule {
  std::vector<double> nodes, weights;  // reference interval [-1, 1]
};

inline const QuadRule& gauss_legendre(std::size_t n) {
  static std::map<std::size_t, QuadRule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  QuadRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    // Chebyshev-based initial guess
    double x = std::cos(M_PI * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double p0 = 1.0, p1 = x;
    for (std::size_t k = 2; k <= n; ++k) {
      double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    double dp = n * (x * p1 - p0) / (x * x - 1.0);
    rule.nodes[n - 1 - i] = x;
    rule.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return cache.emplace(n, std::move(rule)).first->second;
}

// Nodes/weights on [a, b].
inline void gl_mapped(std::size_t n, double a, double b, std::vector<double>& xs,
                      std::vector<double>& ws) {
  const QuadRule& r = gauss_legendre(n);
  xs.resize(n);
  ws.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = 0.5 * (a + b) + 0.5 * (b - a) * r.nodes[i];
    ws[i] = 0.5 * (b - a) * r.weights[i];
  }
}

template <typename F>
double gl_integrate(const F& f, double a, double b, std::size_t n) {
  std::vector<double> xs, ws;
  gl_mapped(n, a, b, xs, ws);
  double s = 0;
  for (std::size_t i = 0; i < n; ++i) s += ws[i] * f(xs[i]);
  return s;
}

// Fixed-width panels until the running contribution stops mattering.
template <typename F>
double gl_panels_adaptive(const F& f, double start, double panel_width, std::size_t order,
                          double rel_tol = 1e-16, std::size_t max_panels = 4000) {
  double total = 0, scale = 0;
  for (std::size_t p = 0; p < max_panels; ++p) {
    double a = start + p * panel_width, b = a + panel_width;
    double c = gl_integrate(f, a, b, order);
    total += c;
    scale = std::max(scale, std::abs(total));
    if (p > 2 && std::abs(c) < rel_tol * std::max(scale, 1e-300)) break;
  }
  return total;
}

}  // namespace kpz
