#pragma once

// Airy function by the rotated-ray contour
//   Ai(x) = (1/2 pi i) int_gamma exp(z^3/3 - x z) dz,
// gamma tracing the rays r e^{+-i pi/3} upwards. Conjugate symmetry folds
// this onto a single ray through an apex a >= 0; for x > 0 the apex sits at
// the saddle sqrt(x), which keeps the integrand bump-free.

#include <cmath>
#include <complex>
#include <cstddef>

#include "kpz/gauss_legendre.hpp"
#include "kpz/special.hpp"

namespace kpz {

inline double airy_ai(double x) {
  const double apex = x > 0 ? std::sqrt(x) : 0.0;
  const Cplx dir = std::polar(1.0, M_PI / 3.0);
  auto integrand_re_im = [&](double r) -> Cplx {
    Cplx z = apex + r * dir;
    return std::exp(z * z * z / 3.0 - x * z);
  };
  // real integrand after folding: Ai = (1/pi) Im[ dir * int_0^inf f(r) dr ]
  auto f = [&](double r) { return (dir * integrand_re_im(r)).imag(); };

  // panel width resolves the oscillation |x| sqrt(3)/2 r for x < 0
  double freq = x < 0 ? -x * 0.87 + 1.0 : 1.0;
  double width = std::min(1.0, 12.0 / freq);
  double total = gl_panels_adaptive(f, 0.0, width, 32, 1e-18, 4000);
  return total / M_PI;
}

// Ai(0) and Ai'(0) in closed form; the Maclaurin series oracle lives in the
// test suite next to its convergence checks.
inline double airy_ai_zero() { return 1.0 / (std::pow(3.0, 2.0 / 3.0) * std::tgamma(2.0 / 3.0)); }

// Chebyshev panels over the range the Airy_2 quadratures hit; kernel matrix
// assembly calls Ai tens of thousands of times and the contour would
// dominate the runtime. Outside the table the direct contour is used.
class AiryInterp {
 public:
  AiryInterp(double lo = -14.0, double hi = 30.0, std::size_t points = 26)
      : lo_(lo), width_(2.0), n_(points) {
    std::size_t panels = static_cast<std::size_t>(std::ceil((hi - lo) / width_));
    hi_ = lo_ + panels * width_;
    vals_.resize(panels * n_);
    cheb_.resize(n_);
    bary_.resize(n_);
    for (std::size_t j = 0; j < n_; ++j) {
      cheb_[j] = std::cos(M_PI * j / (n_ - 1));  // second-kind points
      bary_[j] = (j % 2 == 0 ? 1.0 : -1.0) * (j == 0 || j == n_ - 1 ? 0.5 : 1.0);
    }
    for (std::size_t p = 0; p < panels; ++p) {
      double a = lo_ + p * width_, b = a + width_;
      for (std::size_t j = 0; j < n_; ++j)
        vals_[p * n_ + j] = airy_ai(0.5 * (a + b) + 0.5 * (b - a) * cheb_[j]);
    }
  }

  double operator()(double x) const {
    if (x < lo_ || x >= hi_) return airy_ai(x);
    std::size_t p = static_cast<std::size_t>((x - lo_) / width_);
    double a = lo_ + p * width_;
    double u = (x - a) / width_ * 2.0 - 1.0;
    double num = 0, den = 0;
    for (std::size_t j = 0; j < n_; ++j) {
      double d = u - cheb_[j];
      if (std::abs(d) < 1e-14) return vals_[p * n_ + j];
      double w = bary_[j] / d;
      num += w * vals_[p * n_ + j];
      den += w;
    }
    return num / den;
  }

 private:
  double lo_, hi_, width_;
  std::size_t n_;
  std::vector<double> cheb_, bary_, vals_;
};

inline double airy_ai_fast(double x) {
  static const AiryInterp table;
  return table(x);
}

}  // namespace kpz
