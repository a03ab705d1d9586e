#pragma once

// The solvable last-passage kernels. K^LPP lives on the nonnegative integers
// and is evaluated either by the double contour integral (trapezoid rule on
// the two circles, spectrally accurate for analytic integrands) or by the
// residue sum over the parameter poles (exact for pairwise-distinct
// parameters; the route of choice when the parameters crowd the unit
// circle). K^exp is its exponential-weight scaling limit, evaluated through
// the composition K(t,s) = int_0^inf Phi(t+l) Psi(s+l) dl with each factor a
// single contour integral along rays rotated through the critical point.
//
// Distribution-function conventions (all verified against closed forms):
//   P(tau_N <= u)     = det(I - K^LPP)  restricted to {u+N, u+N+1, ...}
//   P(tau^exp_N <= x) = det(I - K^exp)_{L^2(x, inf)}
// The restriction enters as f = 1 + g with g = -1_{[u+N, inf)}.

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "kpz/fredholm.hpp"
#include "kpz/gauss_legendre.hpp"
#include "kpz/grid.hpp"
#include "kpz/lattice_paths.hpp"
#include "kpz/linalg.hpp"
#include "kpz/partition.hpp"
#include "kpz/rational.hpp"
#include "kpz/rng.hpp"
#include "kpz/schur.hpp"
#include "kpz/special.hpp"

namespace kpz {

// ---- geometric-weight kernel -------------------------------------------------

class LppKernel {
 public:
  LppKernel(std::vector<double> p, std::vector<double> q, std::size_t contour_nodes = 64)
      : p_(std::move(p)), q_(std::move(q)), M_(contour_nodes) {
    for (double v : p_)
      if (!(v > 0 && v < 1)) throw std::invalid_argument("K_LPP: p in (0,1)");
    for (double v : q_)
      if (!(v > 0 && v < 1)) throw std::invalid_argument("K_LPP: q in (0,1)");
    double qmax = 0;
    for (double v : q_) qmax = std::max(qmax, v);
    r1_ = std::sqrt(qmax);  // gamma_1 contains all q_i; balances both error rates
  }

  std::size_t size() const { return p_.size(); }
  double inner_radius() const { return r1_; }

  // residue route: K(t,s) = sum_{ij} q_i^t p_j^s (G^{-1})_{ij}-style weights
  double eval_sum(double t, double s) const {
    const std::size_t N = p_.size();
    double total = 0;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) {
        double w = 1.0 / (1.0 - p_[j] * q_[i]);
        for (std::size_t l = 0; l < N; ++l) w *= (1.0 - p_[j] * q_[l]) * (1.0 - p_[l] * q_[i]);
        for (std::size_t l = 0; l < N; ++l) {
          if (l != j) w /= p_[j] - p_[l];
          if (l != i) w /= q_[i] - q_[l];
        }
        total += std::pow(q_[i], t) * std::pow(p_[j], s) * w;
      }
    return total;
  }

  // double contour trapezoid on |zeta| = r1, |eta| = 1
  double eval_contour(long t, long s) const {
    Cplx total(0, 0);
    for (std::size_t a = 0; a < M_; ++a) {
      double tha = 2 * M_PI * (a + 0.5) / M_;
      Cplx zeta = std::polar(r1_, tha);
      Cplx fz = std::pow(zeta, static_cast<double>(t)) * zeta;
      for (std::size_t l = 0; l < p_.size(); ++l)
        fz *= (1.0 - p_[l] * zeta) / (zeta - q_[l]);
      for (std::size_t b = 0; b < M_; ++b) {
        double thb = 2 * M_PI * (b + 0.5) / M_;
        Cplx eta = std::polar(1.0, thb);
        Cplx fe = std::pow(eta, static_cast<double>(s)) * eta;
        for (std::size_t l = 0; l < p_.size(); ++l)
          fe *= (1.0 - eta * q_[l]) / (eta - p_[l]);
        total += fz * fe / (1.0 - zeta * eta);
      }
    }
    total /= static_cast<double>(M_) * static_cast<double>(M_);
    if (std::abs(total.imag()) > 1e-10 * (1.0 + std::abs(total.real())))
      throw std::domain_error("K_LPP contour: imaginary residue too large");
    return total.real();
  }

  // restricted determinant matrix on {m, m+1, ..., m+T-1}; the contour route
  // factorizes as Z^T C E with the 1/(1 - zeta eta) coupling precomputed
  RealGrid restricted_matrix(long m, std::size_t T, bool use_contour = true) const {
    RealGrid k(T, T);
    if (!use_contour) {
      for (std::size_t i = 0; i < T; ++i)
        for (std::size_t j = 0; j < T; ++j)
          k(i, j) = eval_sum(static_cast<double>(m + i), static_cast<double>(m + j));
      return k;
    }
    std::vector<Cplx> zeta(M_), eta(M_), fz(M_), fe(M_);
    for (std::size_t a = 0; a < M_; ++a) {
      zeta[a] = std::polar(r1_, 2 * M_PI * (a + 0.5) / M_);
      eta[a] = std::polar(1.0, 2 * M_PI * (a + 0.5) / M_);
      fz[a] = std::pow(zeta[a], static_cast<double>(m)) * zeta[a];
      fe[a] = std::pow(eta[a], static_cast<double>(m)) * eta[a];
      for (std::size_t l = 0; l < p_.size(); ++l) {
        fz[a] *= (1.0 - p_[l] * zeta[a]) / (zeta[a] - q_[l]);
        fe[a] *= (1.0 - eta[a] * q_[l]) / (eta[a] - p_[l]);
      }
    }
    Grid<Cplx> zp(M_, T), ep(M_, T);
    for (std::size_t a = 0; a < M_; ++a) {
      Cplx accz = fz[a], acce = fe[a];
      for (std::size_t i = 0; i < T; ++i) {
        zp(a, i) = accz;
        ep(a, i) = acce;
        accz *= zeta[a];
        acce *= eta[a];
      }
    }
    Grid<Cplx> coupled(M_, T);  // coupled(a, j) = sum_b ep(b,j) / (1 - zeta_a eta_b)
    for (std::size_t a = 0; a < M_; ++a)
      for (std::size_t b = 0; b < M_; ++b) {
        Cplx c = 1.0 / (1.0 - zeta[a] * eta[b]);
        for (std::size_t j = 0; j < T; ++j) coupled(a, j) += c * ep(b, j);
      }
    for (std::size_t i = 0; i < T; ++i)
      for (std::size_t j = 0; j < T; ++j) {
        Cplx total(0, 0);
        for (std::size_t a = 0; a < M_; ++a) total += zp(a, i) * coupled(a, j);
        total /= static_cast<double>(M_) * static_cast<double>(M_);
        if (std::abs(total.imag()) > 1e-10 * (1.0 + std::abs(total.real())))
          throw std::domain_error("K_LPP contour: imaginary residue too large");
        k(i, j) = total.real();
      }
    return k;
  }

 private:
  std::vector<double> p_, q_;
  std::size_t M_;
  double r1_;
};

// ---- geometric-weight LPP law, three routes ----------------------------------

// exact Schur sum: P(tau <= u) = prod(1-p_i q_j) sum_{la_1 <= u} s_la(p) s_la(q)
inline Rat lpp_cdf_schur(long u, const std::vector<Rat>& p, const std::vector<Rat>& q) {
  if (p.size() != q.size()) throw std::invalid_argument("lpp_cdf: p,q size mismatch");
  if (u < 0) return Rat(0);
  const std::size_t N = p.size();
  Rat prefactor(1);
  for (const auto& pi : p)
    for (const auto& qj : q) prefactor *= Rat(1) - pi * qj;
  Rat total(0);
  for (const Partition& la : partitions_in_box(N, u))
    total += schur_gt_sum(la, p) * schur_gt_sum(la, q);
  return prefactor * total;
}

inline double lpp_cdf_fredholm(long u, const std::vector<double>& p,
                               const std::vector<double>& q, std::size_t contour_nodes = 64,
                               bool use_contour = true) {
  if (u < 0) return 0.0;
  LppKernel kernel(p, q, contour_nodes);
  double pq = 0;
  for (double a : p)
    for (double b : q) pq = std::max(pq, a * b);
  std::size_t T = static_cast<std::size_t>(std::ceil(45.0 / -std::log(pq))) + 4;
  long m = u + static_cast<long>(p.size());
  RealGrid k = kernel.restricted_matrix(m, T, use_contour);
  for (auto& v : k.raw()) v = -v;
  return det_one_plus(std::move(k));
}

struct McEstimate {
  double mean = 0, stderr_ = 0;
  std::size_t samples = 0;
};

// Monte Carlo CDF of tau_N at several thresholds from one sample set.
inline std::vector<McEstimate> lpp_cdf_mc(const std::vector<long>& us,
                                          const std::vector<double>& p,
                                          const std::vector<double>& q, std::size_t samples,
                                          std::uint64_t seed) {
  const std::size_t N = p.size();
  std::vector<std::size_t> hits(us.size(), 0);
  Rng rng(seed, 17);
  IntGrid w(N, N);
  for (std::size_t s = 0; s < samples; ++s) {
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) w(i, j) = rng.geometric(p[i] * q[j]);
    long tau = lpp_value(w);
    for (std::size_t k = 0; k < us.size(); ++k)
      if (tau <= us[k]) ++hits[k];
  }
  std::vector<McEstimate> out(us.size());
  for (std::size_t k = 0; k < us.size(); ++k) {
    double mean = static_cast<double>(hits[k]) / samples;
    out[k] = {mean, std::sqrt(std::max(mean * (1 - mean), 1e-12) / samples), samples};
  }
  return out;
}

// N = 1 closed form: P(tau <= u) = 1 - (pq)^{u+1}
inline double lpp_cdf_geom1(long u, double p, double q) {
  if (u < 0) return 0;
  return 1.0 - std::pow(p * q, u + 1);
}

// ---- exponential-weight kernel -------------------------------------------------

class ExpKernel {
 public:
  ExpKernel(std::vector<double> alpha, std::vector<double> beta, std::size_t ray_order = 32,
            std::size_t lambda_nodes = 96)
      : alpha_(std::move(alpha)), beta_(std::move(beta)), ray_order_(ray_order) {
    if (alpha_.size() != beta_.size()) throw std::invalid_argument("K_exp: size mismatch");
    amin_ = alpha_[0];
    bmin_ = beta_[0];
    for (double a : alpha_) amin_ = std::min(amin_, a);
    for (double b : beta_) {
      if (!(std::abs(b) > 0.05))
        throw std::invalid_argument("K_exp: |beta_j| > 0.05 required (contour degeneracy)");
      bmin_ = std::min(bmin_, b);
    }
    const double N = static_cast<double>(alpha_.size());
    delta_ = amin_ * std::min(0.5, 1.5 * std::pow(N, -1.0 / 3.0));
    double sigma_scale = 0.4 * std::cbrt(2.0 / (amin_ * amin_ * amin_)) * std::cbrt(N);
    lambda_scale_ = std::max(1.0 / amin_ + 1.0 / bmin_, sigma_scale);
    gl_mapped(lambda_nodes, 0.0, 1.0, lv_, lw_);
    // collapse repeated parameters: the exponent loops over distinct values
    auto compress = [](const std::vector<double>& v) {
      std::vector<std::pair<double, double>> out;
      for (double a : v) {
        bool found = false;
        for (auto& [val, mult] : out)
          if (val == a) {
            mult += 1;
            found = true;
          }
        if (!found) out.emplace_back(a, 1.0);
      }
      return out;
    };
    alpha_c_ = compress(alpha_);
    beta_c_ = compress(beta_);
  }

  // Phi(u) = (1/2 pi i) int e^{-uz} prod (beta+z)/(alpha-z) dz on the
  // upward V through delta with rays e^{+- i pi/3}; folded by conjugate
  // symmetry onto the upper ray.
  double phi(double u) const { return ray_integral(u, delta_, M_PI / 3.0, false); }

  // Psi(u): rays e^{+- 2 pi i/3} through 0, integrand e^{uy} prod (alpha-y)/(beta+y)
  double psi(double u) const { return ray_integral(u, 0.0, 2.0 * M_PI / 3.0, true); }

  double operator()(double t, double s) const {
    double total = 0;
    for (std::size_t k = 0; k < lv_.size(); ++k) {
      double v = lv_[k], om = 1.0 - v;
      double lam = lambda_scale_ * v / om;
      double jac = lambda_scale_ / (om * om);
      total += lw_[k] * jac * phi(t + lam) * psi(s + lam);
    }
    return total;
  }

  // kernel matrix on points via the shared lambda grid
  RealGrid matrix(const std::vector<double>& xs, const std::vector<double>& ws) const {
    const std::size_t n = xs.size(), m = lv_.size();
    std::vector<double> lam(m), jac(m);
    for (std::size_t k = 0; k < m; ++k) {
      double v = lv_[k], om = 1.0 - v;
      lam[k] = lambda_scale_ * v / om;
      jac[k] = lw_[k] * lambda_scale_ / (om * om);
    }
    RealGrid tphi(n, m), tpsi(n, m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < m; ++k) {
        tphi(i, k) = phi(xs[i] + lam[k]);
        tpsi(i, k) = psi(xs[i] + lam[k]);
      }
    RealGrid a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        double s = 0;
        for (std::size_t k = 0; k < m; ++k) s += jac[k] * tphi(i, k) * tpsi(j, k);
        a(i, j) = std::sqrt(ws[i] * ws[j]) * s;
      }
    return a;
  }

  double apex() const { return delta_; }

 private:
  double ray_integral(double u, double apex, double angle, bool psi_side) const {
    if (!(u > 0)) throw std::invalid_argument("K_exp ray integral needs positive argument");
    const Cplx dir = std::polar(1.0, angle);
    auto g = [&](double r) {
      Cplx z = apex + r * dir;
      Cplx expo = psi_side ? Cplx(u) * z : Cplx(-u) * z;
      for (const auto& [a, mult] : alpha_c_)
        expo += (psi_side ? mult : -mult) * std::log(a - z);
      for (const auto& [b, mult] : beta_c_)
        expo += (psi_side ? -mult : mult) * std::log(b + z);
      return (dir * std::exp(expo)).imag();
    };
    // apex oscillation frequency: the exponent's linear coefficient, with the
    // saddle cancellation between u and the pole terms taken into account
    double pole_sum = 0;
    for (std::size_t l = 0; l < alpha_.size(); ++l)
      pole_sum += 1.0 / (beta_[l] + apex) + 1.0 / (alpha_[l] - apex);
    double freq = std::abs(std::sin(angle)) * std::abs(u - pole_sum);
    double width = std::min(std::min(1.0, 4.0 * std::max(delta_, 0.05)),
                            24.0 / (1.0 + freq));
    return gl_panels_adaptive(g, 0.0, width, 32, 1e-17, 6000) / M_PI;
  }

  std::vector<double> alpha_, beta_;
  std::vector<std::pair<double, double>> alpha_c_, beta_c_;  // (value, multiplicity)
  std::size_t ray_order_;
  double amin_, bmin_, delta_, lambda_scale_;
  std::vector<double> lv_, lw_;
};

// P(tau^exp_N <= x) = det(I - K_exp)_{L^2(x, inf)}
inline DetResult lpp_exp_cdf(const ExpKernel& kernel, double x, std::size_t nodes = 64,
                             double L = 0.0) {
  if (L <= 0) L = 4.0;
  auto eval = [&](std::size_t n) {
    std::vector<double> xs, ws;
    halfline_nodes(x, L, n, xs, ws);
    RealGrid m = kernel.matrix(xs, ws);
    for (auto& v : m.raw()) v = -v;
    return det_one_plus(std::move(m));
  };
  DetResult r;
  r.method = "nystrom";
  r.nodes = nodes;
  double coarse = eval(nodes / 2);
  r.value = eval(nodes);
  r.self_delta = std::abs(r.value - coarse);
  r.converged = r.self_delta < 1e-6;
  return r;
}

// ---- biorthogonal determinantal identities (exact, discrete) -------------------

// Z_N(f) = sum over t in {0..T-1}^N det(phi_i(t_j)) det(psi_i(t_j)) prod f(t_k)
// with phi_i(t) = p_i^t, psi_j(t) = q_j^t; direct truncated summation.
inline Rat zn_direct_geometric(const std::vector<Rat>& p, const std::vector<Rat>& q, long T,
                               long cutoff /* f = 1_{[0, cutoff-1]}, -1 for f == 1 */) {
  const std::size_t N = p.size();
  std::vector<long> t(N, 0);
  Rat total(0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == N) {
      Grid<Rat> a(N, N), b(N, N);
      for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
          a(i, j) = pow_rat(p[i], t[j]);
          b(i, j) = pow_rat(q[i], t[j]);
        }
      total += determinant(std::move(a)) * determinant(std::move(b));
      return;
    }
    for (long v = 0; v < T; ++v) {
      if (cutoff >= 0 && v >= cutoff) break;
      t[k] = v;
      rec(k + 1);
    }
  };
  rec(0);
  return total;
}

// det(I + gK) for g = -1_{[m, inf)} via the finite-rank identity
// det(I + BA) with A = G^{-1} phi, B = g psi: equals det(I_N + G^{-1} M),
// M_{jl} = -(p_j q_l)^m / (1 - p_j q_l). Exact rational.
inline Rat biorthogonal_det_geometric(const std::vector<Rat>& p, const std::vector<Rat>& q,
                                      long m) {
  const std::size_t N = p.size();
  Grid<Rat> g(N, N), mm(N, N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      g(i, j) = Rat(1) / (Rat(1) - p[i] * q[j]);
      mm(i, j) = -pow_rat(p[i] * q[j], m) / (Rat(1) - p[i] * q[j]);
    }
  // solve G X = M by Gaussian elimination over rationals
  const std::size_t n = N;
  Grid<Rat> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      aug(i, j) = g(i, j);
      aug(i, n + j) = mm(i, j);
    }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && aug(piv, k) == Rat(0)) ++piv;
    if (piv == n) throw std::domain_error("biorthogonal: singular Gram matrix");
    if (piv != k)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(aug(piv, j), aug(k, j));
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      Rat f = aug(i, k) / aug(k, k);
      for (std::size_t j = k; j < 2 * n; ++j) aug(i, j) -= f * aug(k, j);
    }
  }
  Grid<Rat> x(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) x(i, j) = aug(i, n + j) / aug(i, i);
  return det_one_plus(std::move(x));
}

// |Z_N(1+g)/Z_N - det(I+gK)| for the geometric instance, g = -1_{[u+N, inf)}.
inline Rat biorthogonal_fredholm_residual(const std::vector<Rat>& p, const std::vector<Rat>& q,
                                          long u, long T = 64) {
  const long m = u + static_cast<long>(p.size());
  Rat zn_f = zn_direct_geometric(p, q, T, m);  // f = 1_{[0, m-1]}
  Rat zn = zn_direct_geometric(p, q, T, -1);
  Rat lhs = zn_f / zn;
  Rat rhs = biorthogonal_det_geometric(p, q, m);
  return abs_val(lhs - rhs);
}

}  // namespace kpz
