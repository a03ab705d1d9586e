#pragma once

// Small dense linear algebra over a generic field: determinants by Gaussian
// elimination with pivoting (exact over rationals, partially pivoted over
// floating point), and a Jacobi eigensolver for real symmetric matrices.

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "kpz/grid.hpp"
#include "kpz/rational.hpp"

namespace kpz {

namespace detail {
inline double pivot_mag(double x) { return std::abs(x); }
inline double pivot_mag(const std::complex<double>& x) { return std::abs(x); }
inline double pivot_mag(const Rat& x) { return std::abs(to_double(x)); }
}  // namespace detail

template <typename T>
T determinant(Grid<T> a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: non-square");
  const std::size_t n = a.rows();
  T det = T(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = detail::pivot_mag(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      double m = detail::pivot_mag(a(i, k));
      if (m > best) {
        best = m;
        piv = i;
      }
    }
    if (a(piv, k) == T(0)) return T(0);
    if (piv != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a(piv, j), a(k, j));
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      T f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

// det(I + A)
template <typename T>
T det_one_plus(Grid<T> a) {
  for (std::size_t i = 0; i < a.rows(); ++i) a(i, i) += T(1);
  return determinant(std::move(a));
}

inline RealGrid matmul(const RealGrid& a, const RealGrid& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape mismatch");
  RealGrid c(a.rows(), b.cols(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

inline double trace(const RealGrid& a) {
  double t = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.
inline std::vector<double> symmetric_eigenvalues(RealGrid a, int sweeps = 64) {
  const std::size_t n = a.rows();
  for (int s = 0; s < sweeps; ++s) {
    double off = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
    if (off < 1e-26) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) < 1e-300) continue;
        double theta = (a(q, q) - a(p, p)) / (2 * a(p, q));
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1), sn = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - sn * akq;
          a(k, q) = sn * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - sn * aqk;
          a(q, k) = sn * apk + c * aqk;
        }
      }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i);
  return ev;
}

}  // namespace kpz
