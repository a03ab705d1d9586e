#pragma once

// Geometric RSK in the (+,x) semiring. Same sweep structure as combinatorial
// RSK with the geometric local moves; the tau-ratio backend recomputes every
// pattern entry as a ratio of non-intersecting-path partition functions and
// serves as an independent algebraic route. Log-domain evaluation is the
// default for large matrices since polymer partition functions overflow
// doubles quickly.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "kpz/grid.hpp"
#include "kpz/gt_pattern.hpp"
#include "kpz/lattice_paths.hpp"
#include "kpz/linalg.hpp"
#include "kpz/local_moves.hpp"
#include "kpz/rsk.hpp"
#include "kpz/word.hpp"

namespace kpz {

// Geometric row insertion, exact over any field type.
//   xi~_i = xi_i a_i,  xi~_k = a_k (xi~_{k-1} + xi_k),
//   b_k   = a_k xi_k xi~_{k-1} / (xi_{k-1} xi~_k).
template <typename T>
std::pair<Word<T>, Word<T>> geom_row_insert(const Word<T>& x, const Word<T>& a) {
  if (x.start != a.start || x.mult.size() != a.mult.size())
    throw std::invalid_argument("geom_row_insert: window mismatch");
  const std::size_t m = x.mult.size();
  if (m == 0) return {Word<T>{x.start, {}}, Word<T>{x.start + 1, {}}};

  std::vector<T> xi(m), xit(m);
  T run = T(1);
  for (std::size_t k = 0; k < m; ++k) {
    run = run * x.mult[k];
    xi[k] = run;
  }
  xit[0] = xi[0] * a.mult[0];
  for (std::size_t k = 1; k < m; ++k) xit[k] = a.mult[k] * (xit[k - 1] + xi[k]);

  Word<T> xt{x.start, std::vector<T>(m)};
  xt.mult[0] = xit[0];
  for (std::size_t k = 1; k < m; ++k) xt.mult[k] = xit[k] / xit[k - 1];

  Word<T> b{x.start + 1, std::vector<T>(m - 1)};
  for (std::size_t k = 1; k < m; ++k)
    b.mult[k - 1] = a.mult[k] * xi[k] * xit[k - 1] / (xi[k - 1] * xit[k]);
  return {xt, b};
}

template <typename T>
struct GrskOutputT {
  GtPattern<T> Z, Zprime;
  Grid<T> glued;
};
using GrskOutput = GrskOutputT<double>;

enum class GrskBackend { LocalMoves, TauRatios };

template <typename T>
GrskOutputT<T> grsk_forward_exact(const Grid<T>& w) {
  const std::size_t n = w.rows(), N = w.cols();
  Grid<T> t = w;
  local_move_forward<GeometricMove>(t, ArrayShape::rectangle(n, N));
  GrskOutputT<T> out;
  out.glued = t;
  detail::unglue(t, out.Z, out.Zprime);
  return out;
}

// Tau-ratio route: z^a_b = tau(b paths -> column a) / tau(b-1 paths -> column a).
inline GrskOutput grsk_forward_tau(const RealGrid& w) {
  const std::size_t n = w.rows(), N = w.cols(), cap = std::min(n, N);
  GrskOutput out;
  out.Z = GeomGt(N, cap);
  out.Zprime = GeomGt(n, cap);
  for (std::size_t a = 1; a <= N; ++a)
    for (std::size_t b = 1; b <= out.Z.row_width(a); ++b) {
      double num = tau_ensemble(w, b, a);
      double den = b > 1 ? tau_ensemble(w, b - 1, a) : 1.0;
      out.Z.at(a, b) = num / den;
    }
  RealGrid wt = w.transpose();
  for (std::size_t a = 1; a <= n; ++a)
    for (std::size_t b = 1; b <= out.Zprime.row_width(a); ++b) {
      double num = tau_ensemble(wt, b, a);
      double den = b > 1 ? tau_ensemble(wt, b - 1, a) : 1.0;
      out.Zprime.at(a, b) = num / den;
    }
  out.glued = detail::reglue(out.Z, out.Zprime, n, N);
  return out;
}

inline GrskOutput grsk_forward(const RealGrid& w,
                               GrskBackend backend = GrskBackend::LocalMoves) {
  require_positive(w);
  if (backend == GrskBackend::TauRatios) return grsk_forward_tau(w);
  return grsk_forward_exact(w);
}

// Log-domain forward: input and output entries are logarithms.
inline GrskOutput grsk_forward_log(const RealGrid& logw) {
  RealGrid t = logw;
  local_move_forward<LogGeometricMove>(t, ArrayShape::rectangle(logw.rows(), logw.cols()));
  GrskOutput out;
  out.glued = t;
  detail::unglue(t, out.Z, out.Zprime);
  return out;
}

template <typename T>
Grid<T> grsk_inverse_exact(const GrskOutputT<T>& out) {
  const std::size_t n = out.Zprime.depth(), N = out.Z.depth();
  Grid<T> t = out.glued;
  if (t.rows() != n || t.cols() != N) t = detail::reglue(out.Z, out.Zprime, n, N);
  local_move_inverse<GeometricMove>(t, ArrayShape::rectangle(n, N));
  return t;
}

inline RealGrid grsk_inverse(const GrskOutput& out) {
  for (double v : out.glued.raw())
    if (!(v > 0)) throw std::invalid_argument("grsk_inverse: non-positive image entry");
  RealGrid t = grsk_inverse_exact(out);
  for (double v : t.raw())
    if (!(v > 0)) throw std::invalid_argument("grsk_inverse: not a gRSK image");
  return t;
}

inline RealGrid grsk_inverse_log(const GrskOutput& out) {
  RealGrid t = out.glued;
  local_move_inverse<LogGeometricMove>(t, ArrayShape::rectangle(t.rows(), t.cols()));
  return t;
}

// Energy E(Z) = sum over present pairs of z^i_j / z^{i+1}_j + z^{i+1}_{j+1} / z^i_j.
template <typename T>
T gt_energy(const GtPattern<T>& z) {
  T e = T(0);
  for (std::size_t i = 1; i + 1 <= z.depth(); ++i)
    for (std::size_t j = 1; j <= z.row_width(i); ++j) {
      if (j <= z.row_width(i + 1)) e += z.at(i, j) / z.at(i + 1, j);
      if (j + 1 <= z.row_width(i + 1)) e += z.at(i + 1, j + 1) / z.at(i, j);
    }
  return e;
}

template <typename T>
struct EnergyReport {
  T energy_Z, energy_Zprime, corner_term, lhs;  // lhs = sum 1/w_ij
  T residual;                                   // |lhs - (corner + E(Z) + E(Z'))|
};

// Energy identity of gRSK on square input: sum_ij 1/w_ij = 1/z^n_n + E(Z) + E(Z').
template <typename T>
EnergyReport<T> energy_report(const Grid<T>& w) {
  if (w.rows() != w.cols()) throw std::invalid_argument("energy identity needs square input");
  auto out = grsk_forward_exact(w);
  EnergyReport<T> r;
  r.energy_Z = gt_energy(out.Z);
  r.energy_Zprime = gt_energy(out.Zprime);
  r.corner_term = T(1) / out.Z.at(w.rows(), w.rows());
  r.lhs = T(0);
  for (const auto& v : w.raw()) r.lhs += T(1) / v;
  T rhs = r.corner_term + r.energy_Z + r.energy_Zprime;
  r.residual = abs_val(r.lhs - rhs);
  return r;
}

// Finite-difference log-Jacobian of the glued map in log coordinates;
// the volume-preserving property says the result is 0.
inline double jacobian_logdet(const RealGrid& w, double h = 1e-5) {
  require_positive(w);
  const std::size_t n = w.rows(), N = w.cols(), dim = n * N;
  if (dim > 36) throw std::invalid_argument("jacobian_logdet: matrix too large");
  RealGrid jac(dim, dim);
  for (std::size_t b = 0; b < dim; ++b) {
    RealGrid wp = w, wm = w;
    wp.raw()[b] *= std::exp(h);
    wm.raw()[b] *= std::exp(-h);
    auto tp = grsk_forward_exact(wp).glued, tm = grsk_forward_exact(wm).glued;
    for (std::size_t a = 0; a < dim; ++a)
      jac(a, b) = (std::log(tp.raw()[a]) - std::log(tm.raw()[a])) / (2 * h);
  }
  double det = determinant(jac);
  if (det == 0) throw std::domain_error("jacobian_logdet: numerically singular");
  return std::log(std::abs(det));
}

// eps*log of gRSK applied to exp(W/eps); converges entrywise to rsk_forward(W).
inline GrskOutput tropicalize(const IntGrid& w, double eps) {
  if (!(eps > 0)) throw std::invalid_argument("tropicalize: eps must be positive");
  RealGrid logw(w.rows(), w.cols());
  for (std::size_t i = 0; i < w.rows(); ++i)
    for (std::size_t j = 0; j < w.cols(); ++j) logw(i, j) = static_cast<double>(w(i, j)) / eps;
  GrskOutput out = grsk_forward_log(logw);
  auto scale = [eps](double v) { return eps * v; };
  for (auto& v : out.glued.raw()) v = scale(v);
  for (auto& v : out.Z.flat()) v = scale(v);
  for (auto& v : out.Zprime.flat()) v = scale(v);
  return out;
}

// Strict-weak polymer partition function: levels sweep rows m..1 while the
// column advances 1..n; a stay at (row r, col j) collects 1/w_{r,j}, diagonal
// advances are free. Equals 1/z^n_n of grsk_forward(w).
template <typename T>
T strict_weak_partition(const Grid<T>& w) {
  const std::size_t m = w.rows(), n = w.cols();
  std::vector<T> f(n + 1, T(0));
  f[1] = T(1);
  for (std::size_t level = 1; level <= m; ++level) {
    std::size_t r = m - level + 1;
    std::vector<T> g(n + 1, T(0));
    for (std::size_t j = 1; j <= n; ++j) {
      g[j] = f[j] / w(r - 1, j - 1);
      if (j > 1) g[j] += f[j - 1];
    }
    f = std::move(g);
  }
  return f[n];
}

// gRSK on a Young-diagram-shaped array; returns the transformed array whose
// outer corners hold path partition functions to those corners.
template <typename Move, typename T>
Grid<T> polygonal_forward(Grid<T> t, const ArrayShape& shape) {
  if (!shape.valid() || shape.rows() > t.rows())
    throw std::invalid_argument("polygonal_forward: bad shape");
  local_move_forward<Move>(t, shape);
  return t;
}

// Point-to-line polymer partition function via the staircase array
// {i + j <= 2n + 1}: the sum of the output anti-diagonal.
inline double flat_polymer_from_grsk(const RealGrid& w, std::size_t two_n) {
  ArrayShape s = ArrayShape::staircase(two_n);
  RealGrid t = polygonal_forward<GeometricMove>(w, s);
  double total = 0;
  for (std::size_t i = 1; i <= two_n; ++i) total += t(i - 1, two_n + 1 - i - 1);
  return total;
}

}  // namespace kpz
