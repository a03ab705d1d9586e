#pragma once

// The 2x2 local moves that decompose RSK (max-plus) and geometric RSK
// (sum-product), plus the anti-diagonal sweep schedule. A move l_{i,j}
// rewrites the submatrix
//     (a b; c d) -> (b^c - a, b; c, d + b v c)        combinatorial
//     (a b; c d) -> (bc/(a(b+c)), b; c, d(b+c))       geometric
// with degenerate first-row / first-column variants and l_{1,1} = identity.
// Row insertion R_k = rho^k_{len} o ... o rho^k_1, each rho^k_j running the
// l moves up the anti-diagonal from (k,j).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "kpz/grid.hpp"

namespace kpz {

namespace testing {
// Mutation hook for negative-control tests: corrupts the combinatorial
// interior move so invariant checks must catch it.
inline bool& mutate_local_move() {
  static bool flag = false;
  return flag;
}
}  // namespace testing

struct CombinatorialMove {
  template <typename T>
  static void interior(T& a, const T& b, const T& c, T& d) {
    T na = std::min(b, c) - a;
    if (testing::mutate_local_move()) na = std::max(b, c) - a;
    d += std::max(b, c);
    a = na;
  }
  template <typename T>
  static void interior_inverse(T& a, const T& b, const T& c, T& d) {
    a = std::min(b, c) - a;
    d -= std::max(b, c);
  }
  template <typename T>
  static void edge(T& x, const T& prev) {
    x += prev;
  }
  template <typename T>
  static void edge_inverse(T& x, const T& prev) {
    x -= prev;
  }
};

struct GeometricMove {
  template <typename T>
  static void interior(T& a, const T& b, const T& c, T& d) {
    T s = b + c;
    a = b * c / (a * s);
    d *= s;
  }
  template <typename T>
  static void interior_inverse(T& a, const T& b, const T& c, T& d) {
    T s = b + c;
    a = b * c / (a * s);
    d /= s;
  }
  template <typename T>
  static void edge(T& x, const T& prev) {
    x *= prev;
  }
  template <typename T>
  static void edge_inverse(T& x, const T& prev) {
    x /= prev;
  }
};

// Geometric moves on log-scale values: products become sums and b+c becomes
// log-sum-exp. This is the only viable mode once partition functions leave
// double range.
struct LogGeometricMove {
  static double lse(double x, double y) {
    double m = std::max(x, y);
    if (m == -std::numeric_limits<double>::infinity()) return m;
    return m + std::log1p(std::exp(std::min(x, y) - m));
  }
  static void interior(double& a, const double& b, const double& c, double& d) {
    double s = lse(b, c);
    a = b + c - a - s;
    d += s;
  }
  static void interior_inverse(double& a, const double& b, const double& c, double& d) {
    double s = lse(b, c);
    a = b + c - a - s;
    d -= s;
  }
  static void edge(double& x, const double& prev) { x += prev; }
  static void edge_inverse(double& x, const double& prev) { x -= prev; }
};

// Index sets of Young-diagram shape: row i (1-based) holds columns
// 1..len[i-1], rows weakly decreasing. A rectangle is the usual case; the
// staircase {i+j <= 2n+1} drives the flat-geometry polymer.
struct ArrayShape {
  std::vector<std::size_t> row_len;

  static ArrayShape rectangle(std::size_t rows, std::size_t cols) {
    return ArrayShape{std::vector<std::size_t>(rows, cols)};
  }
  static ArrayShape staircase(std::size_t n) {  // i + j <= n + 1
    ArrayShape s;
    for (std::size_t i = 1; i <= n; ++i) s.row_len.push_back(n + 1 - i);
    return s;
  }
  std::size_t rows() const { return row_len.size(); }
  bool valid() const {
    for (std::size_t i = 0; i + 1 < row_len.size(); ++i)
      if (row_len[i] < row_len[i + 1]) return false;
    return !row_len.empty() && row_len.back() >= 1;
  }
  bool contains(std::size_t i, std::size_t j) const {  // 1-based
    return i >= 1 && i <= rows() && j >= 1 && j <= row_len[i - 1];
  }
};

namespace detail {

template <typename Move, typename T>
void apply_l(Grid<T>& t, std::size_t i, std::size_t j) {  // 1-based
  if (i == 1 && j == 1) return;
  if (i == 1) {
    Move::edge(t(0, j - 1), t(0, j - 2));
  } else if (j == 1) {
    Move::edge(t(i - 1, 0), t(i - 2, 0));
  } else {
    Move::interior(t(i - 2, j - 2), t(i - 2, j - 1), t(i - 1, j - 2), t(i - 1, j - 1));
  }
}

template <typename Move, typename T>
void apply_l_inverse(Grid<T>& t, std::size_t i, std::size_t j) {
  if (i == 1 && j == 1) return;
  if (i == 1) {
    Move::edge_inverse(t(0, j - 1), t(0, j - 2));
  } else if (j == 1) {
    Move::edge_inverse(t(i - 1, 0), t(i - 2, 0));
  } else {
    Move::interior_inverse(t(i - 2, j - 2), t(i - 2, j - 1), t(i - 1, j - 2), t(i - 1, j - 1));
  }
}

// positions of rho^k_j: the anti-diagonal (k,j), (k-1,j-1), ... ending at
// row 1 or column 1.
inline std::vector<std::pair<std::size_t, std::size_t>> rho_positions(std::size_t k,
                                                                      std::size_t j) {
  std::vector<std::pair<std::size_t, std::size_t>> pos;
  std::size_t steps = std::min(k, j) - 1;
  for (std::size_t m = 0; m <= steps; ++m) pos.emplace_back(k - m, j - m);
  return pos;
}

}  // namespace detail

// In-place forward pass: after processing all rows the array holds the glued
// output patterns.
template <typename Move, typename T>
void local_move_forward(Grid<T>& t, const ArrayShape& shape) {
  for (std::size_t k = 1; k <= shape.rows(); ++k)
    for (std::size_t j = 1; j <= shape.row_len[k - 1]; ++j)
      for (auto [i, jj] : detail::rho_positions(k, j)) detail::apply_l<Move>(t, i, jj);
}

template <typename Move, typename T>
void local_move_inverse(Grid<T>& t, const ArrayShape& shape) {
  for (std::size_t k = shape.rows(); k >= 1; --k) {
    for (std::size_t j = shape.row_len[k - 1]; j >= 1; --j) {
      auto pos = detail::rho_positions(k, j);
      for (auto it = pos.rbegin(); it != pos.rend(); ++it)
        detail::apply_l_inverse<Move>(t, it->first, it->second);
      if (j == 1) break;
    }
    if (k == 1) break;
  }
}

}  // namespace kpz
