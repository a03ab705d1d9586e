#pragma once

// Schur polynomials by two independent routes: the Gelfand-Tsetlin sum over
// interlacing chains and the bialternant ratio of alternants. Both are
// generic over the scalar field; identity tests run them over exact
// rationals.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "kpz/grid.hpp"
#include "kpz/linalg.hpp"
#include "kpz/partition.hpp"

namespace kpz {

template <typename T>
T schur_gt_sum(const Partition& lambda, const std::vector<T>& x) {
  const std::size_t n = x.size();
  if (lambda.length() > n) return T(0);
  // branch on the top variable: s_lambda(x_1..x_k) = sum_{mu < lambda} x_k^{|l|-|m|} s_mu(...)
  std::function<T(const Partition&, std::size_t)> rec = [&](const Partition& la,
                                                            std::size_t k) -> T {
    if (la.length() > k) return T(0);
    if (k == 1) {
      T v = T(1);
      for (long c = 0; c < la.part(0); ++c) v *= x[0];
      return v;
    }
    T total = T(0);
    interlacing_below(la, [&](const Partition& mu) {
      T w = T(1);
      for (long c = 0; c < la.size() - mu.size(); ++c) w *= x[k - 1];
      total += w * rec(mu, k - 1);
    });
    return total;
  };
  if (n == 0) return lambda.is_empty() ? T(1) : T(0);
  return rec(lambda, n);
}

template <typename T>
T schur_bialternant(const Partition& lambda, const std::vector<T>& x) {
  const std::size_t n = x.size();
  if (lambda.length() > n) return T(0);
  if (n == 0) return T(1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (x[i] == x[j])
        throw std::invalid_argument("bialternant requires pairwise distinct variables");
  auto power = [](T base, long e) {
    T acc = T(1);
    while (e-- > 0) acc *= base;
    return acc;
  };
  Grid<T> num(n, n), den(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      num(i, j) = power(x[i], lambda.part(j) + static_cast<long>(n - 1 - j));
      den(i, j) = power(x[i], static_cast<long>(n - 1 - j));
    }
  return determinant(std::move(num)) / determinant(std::move(den));
}

enum class SchurMethod { GtSum, Bialternant };

// Falls back to the GT sum when variables coincide (the bialternant is 0/0
// there).
template <typename T>
T schur(const Partition& lambda, const std::vector<T>& x,
        SchurMethod method = SchurMethod::GtSum) {
  if (method == SchurMethod::Bialternant) {
    bool distinct = true;
    for (std::size_t i = 0; i < x.size() && distinct; ++i)
      for (std::size_t j = i + 1; j < x.size(); ++j)
        if (x[i] == x[j]) {
          distinct = false;
          break;
        }
    if (distinct) return schur_bialternant(lambda, x);
  }
  return schur_gt_sum(lambda, x);
}

// h_1 * s_lambda = sum over single-box additions; the expansion list.
inline std::vector<Partition> pieri_h1(const Partition& lambda) {
  std::vector<Partition> out;
  for (std::size_t i = 0; i <= lambda.length(); ++i)
    if (lambda.valid_after_increment(i)) out.push_back(lambda.add_box(i));
  return out;
}

}  // namespace kpz
