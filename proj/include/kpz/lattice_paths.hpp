#pragma once

// Brute-force path oracles. Down-right lattice paths in matrix coordinates:
// from (i,j) the allowed steps are (i+1,j) and (i,j+1); a path's weight is
// the max-plus sum or sum-product product of the vertex weights it traces.
// These enumerations are exponential on purpose: they are the ground truth
// the fast algebraic routes are tested against, capped at ~30 cells.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include "kpz/grid.hpp"
#include "kpz/linalg.hpp"
#include "kpz/rational.hpp"

namespace kpz {

// Longest strictly increasing subsequence, O(n log n) patience sorting.
inline std::size_t lis(const std::vector<long>& seq) {
  std::vector<long> tails;
  for (long v : seq) {
    auto it = std::lower_bound(tails.begin(), tails.end(), v);
    if (it == tails.end())
      tails.push_back(v);
    else
      *it = v;
  }
  return tails.size();
}

enum class Semiring { MaxPlus, SumProduct };

struct Cell {
  std::size_t i, j;  // 1-based matrix coordinates
  bool operator==(const Cell& o) const { return i == o.i && j == o.j; }
  bool operator<(const Cell& o) const { return i != o.i ? i < o.i : j < o.j; }
};

struct PathEnsembleQuery {
  std::size_t r = 1;
  std::vector<Cell> starts, ends;  // strictly ordered, length r each
  Semiring mode = Semiring::MaxPlus;
};

inline PathEnsembleQuery greene_query(std::size_t rows, std::size_t cols, std::size_t r,
                                      Semiring mode) {
  // ensembles from (1,1)..(1,r) to (rows, cols-r+1)..(rows, cols)
  PathEnsembleQuery q;
  q.r = r;
  q.mode = mode;
  for (std::size_t k = 0; k < r; ++k) {
    q.starts.push_back({1, 1 + k});
    q.ends.push_back({rows, cols - r + 1 + k});
  }
  return q;
}

namespace detail {

template <typename T>
void enumerate_paths(const Grid<T>& w, Cell a, Cell b,
                     const std::function<void(const std::vector<Cell>&)>& visit) {
  if (a.i > b.i || a.j > b.j) return;
  std::vector<Cell> path;
  std::function<void(Cell)> rec = [&](Cell c) {
    path.push_back(c);
    if (c == b) {
      visit(path);
    } else {
      if (c.i < b.i) rec({c.i + 1, c.j});
      if (c.j < b.j) rec({c.i, c.j + 1});
    }
    path.pop_back();
  };
  rec(a);
}

inline bool cells_disjoint(const std::vector<std::vector<Cell>>& paths) {
  std::vector<Cell> all;
  for (const auto& p : paths) all.insert(all.end(), p.begin(), p.end());
  std::sort(all.begin(), all.end());
  return std::adjacent_find(all.begin(), all.end()) == all.end();
}

}  // namespace detail

// Exhaustive r-tuple vertex-disjoint enumeration. Max-plus returns the max
// total (or min() when no admissible ensemble exists); sum-product returns
// the total sum (0 when empty).
template <typename T>
T brute_force_paths(const Grid<T>& w, const PathEnsembleQuery& q) {
  if (q.r == 0 || q.starts.size() != q.r || q.ends.size() != q.r)
    throw std::invalid_argument("path ensemble query: bad endpoints");
  for (std::size_t k = 0; k + 1 < q.r; ++k)
    if (!(q.starts[k] < q.starts[k + 1]) || !(q.ends[k] < q.ends[k + 1]))
      throw std::invalid_argument("path ensemble query: endpoints must be strictly ordered");
  if (w.rows() * w.cols() > 30) throw std::invalid_argument("brute force capped at 30 cells");

  std::vector<std::vector<std::vector<Cell>>> per_pair(q.r);
  for (std::size_t k = 0; k < q.r; ++k)
    detail::enumerate_paths(w, q.starts[k], q.ends[k],
                            [&](const std::vector<Cell>& p) { per_pair[k].push_back(p); });

  bool any = false;
  T best = T();
  std::vector<std::vector<Cell>> chosen(q.r);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == q.r) {
      if (!detail::cells_disjoint(chosen)) return;
      if (q.mode == Semiring::MaxPlus) {
        T tot = T(0);
        for (const auto& p : chosen)
          for (const Cell& c : p) tot += w(c.i - 1, c.j - 1);
        if (!any || best < tot) best = tot;
      } else {
        T prod = T(1);
        for (const auto& p : chosen)
          for (const Cell& c : p) prod *= w(c.i - 1, c.j - 1);
        best += prod;
      }
      any = true;
      return;
    }
    for (const auto& p : per_pair[k]) {
      chosen[k] = p;
      rec(k + 1);
    }
  };
  if (q.mode == Semiring::SumProduct) best = T(0);
  rec(0);
  if (!any && q.mode == Semiring::MaxPlus)
    return std::numeric_limits<long>::min();  // empty ensemble sentinel
  return best;
}

// Single-path weight sums D(a,b) by dynamic programming (sum-product).
template <typename T>
T path_sum(const Grid<T>& w, Cell a, Cell b) {
  if (a.i > b.i || a.j > b.j) return T(0);
  std::size_t ni = b.i - a.i + 1, nj = b.j - a.j + 1;
  Grid<T> dp(ni, nj, T(0));
  for (std::size_t i = 0; i < ni; ++i)
    for (std::size_t j = 0; j < nj; ++j) {
      T in = T(0);
      if (i == 0 && j == 0)
        in = T(1);
      else {
        if (i > 0) in += dp(i - 1, j);
        if (j > 0) in += dp(i, j - 1);
      }
      dp(i, j) = in * w(a.i - 1 + i, a.j - 1 + j);
    }
  return dp(ni - 1, nj - 1);
}

// Lindstrom-Gessel-Viennot: det of pairwise path sums equals the
// vertex-disjoint ensemble sum, valid for crossing-compatible endpoints.
template <typename T>
T lgv_determinant(const Grid<T>& w, const std::vector<Cell>& starts,
                  const std::vector<Cell>& ends) {
  if (starts.size() != ends.size() || starts.empty())
    throw std::invalid_argument("lgv: endpoint mismatch");
  std::size_t r = starts.size();
  Grid<T> d(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) d(i, j) = path_sum(w, starts[i], ends[j]);
  return determinant(std::move(d));
}

// tau^i_j of the Noumi-Yamada weight: i-path ensemble from (1,1)..(1,i) to
// (rows, j-i+1)..(rows, j), computed via LGV.
template <typename T>
T tau_ensemble(const Grid<T>& w, std::size_t i, std::size_t j) {
  std::vector<Cell> starts, ends;
  for (std::size_t k = 1; k <= i; ++k) {
    starts.push_back({1, k});
    ends.push_back({w.rows(), j - i + k});
  }
  return lgv_determinant(w, starts, ends);
}

// Max over down-right paths (1,1) -> (rows, cols); plain LPP.
template <typename T>
T lpp_value(const Grid<T>& w) {
  std::size_t n = w.rows(), m = w.cols();
  Grid<T> dp(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      T best = T(0);
      if (i == 0 && j == 0)
        best = T(0);
      else if (i == 0)
        best = dp(i, j - 1);
      else if (j == 0)
        best = dp(i - 1, j);
      else
        best = std::max(dp(i - 1, j), dp(i, j - 1));
      dp(i, j) = best + w(i, j);
    }
  return dp(n - 1, m - 1);
}

}  // namespace kpz
