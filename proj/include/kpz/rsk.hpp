#pragma once

// Combinatorial RSK on nonnegative integer matrices. Two routes to the same
// bijection: word-by-word row insertion via the max-plus recursion, and the
// local-move sweep acting in place on the matrix. Output is the pair of
// interlacing patterns (Z, Z') together with the glued rectangular view
//   t_{i,j} = z^{n-i+j}_{n-i+1}        for i-j >= n-N,
//   t_{i,j} = (z^{N+i-j}_{N-j+1})'     for i-j <= n-N,
// whose lower-right corner is the last-passage value.

#include <stdexcept>
#include <vector>

#include "kpz/grid.hpp"
#include "kpz/gt_pattern.hpp"
#include "kpz/local_moves.hpp"
#include "kpz/word.hpp"

namespace kpz {

// Max-plus row insertion of word a into row word x (shared window start i).
// Returns the updated row and the bumped word (window start i+1, empty when
// i is the last letter).
inline std::pair<IntWord, IntWord> row_insert_word(const IntWord& x, const IntWord& a) {
  if (x.start != a.start || x.mult.size() != a.mult.size())
    throw std::invalid_argument("row_insert_word: window mismatch");
  const std::size_t m = x.mult.size();
  if (m == 0) return {IntWord{x.start, {}}, IntWord{x.start + 1, {}}};

  std::vector<long> xi(m), xit(m);
  long run = 0;
  for (std::size_t k = 0; k < m; ++k) {
    run += x.mult[k];
    xi[k] = run;
  }
  xit[0] = xi[0] + a.mult[0];
  for (std::size_t k = 1; k < m; ++k) xit[k] = std::max(xit[k - 1], xi[k]) + a.mult[k];

  IntWord xt{x.start, std::vector<long>(m)};
  xt.mult[0] = xit[0];
  for (std::size_t k = 1; k < m; ++k) xt.mult[k] = xit[k] - xit[k - 1];

  IntWord b{x.start + 1, std::vector<long>(m > 0 ? m - 1 : 0)};
  for (std::size_t k = 1; k < m; ++k)
    b.mult[k - 1] = a.mult[k] + (xi[k] - xi[k - 1]) - (xit[k] - xit[k - 1]);
  return {xt, b};
}

struct RskOutput {
  IntGt Z;        // P-pattern: depth N, width cap min(n,N)
  IntGt Zprime;   // Q-pattern: depth n, width cap min(n,N)
  IntGrid glued;  // n x N rectangular array
};

namespace detail {

// Z and Z' read off the glued array; inverse of the gluing map.
template <typename T>
void unglue(const Grid<T>& t, GtPattern<T>& Z, GtPattern<T>& Zp) {
  const std::size_t n = t.rows(), N = t.cols(), cap = std::min(n, N);
  Z = GtPattern<T>(N, cap);
  Zp = GtPattern<T>(n, cap);
  for (std::size_t a = 1; a <= N; ++a)
    for (std::size_t b = 1; b <= Z.row_width(a); ++b)
      Z.at(a, b) = t(n - b, a - b);  // t_{n-b+1, a-b+1}, 0-based
  for (std::size_t a = 1; a <= n; ++a)
    for (std::size_t b = 1; b <= Zp.row_width(a); ++b)
      Zp.at(a, b) = t(a - b, N - b);  // t_{a-b+1, N-b+1}
  return;
}

template <typename T>
Grid<T> reglue(const GtPattern<T>& Z, const GtPattern<T>& Zp, std::size_t n, std::size_t N) {
  Grid<T> t(n, N);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= N; ++j) {
      if (static_cast<long>(i) - static_cast<long>(j) >=
          static_cast<long>(n) - static_cast<long>(N))
        t(i - 1, j - 1) = Z.at(n - i + j, n - i + 1);
      else
        t(i - 1, j - 1) = Zp.at(N + i - j, N - j + 1);
    }
  return t;
}

}  // namespace detail

enum class RskBackend { Insertion, LocalMoves };

inline RskOutput rsk_forward(const IntGrid& w, RskBackend backend = RskBackend::LocalMoves) {
  const std::size_t n = w.rows(), N = w.cols();
  if (n == 0 || N == 0) throw std::invalid_argument("rsk_forward: empty matrix");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (w(i, j) < 0) throw std::invalid_argument("rsk_forward: negative entry");

  RskOutput out;
  if (backend == RskBackend::LocalMoves) {
    IntGrid t = w;
    local_move_forward<CombinatorialMove>(t, ArrayShape::rectangle(n, N));
    out.glued = t;
    detail::unglue(t, out.Z, out.Zprime);
    return out;
  }

  // insertion backend: rows of the P tableau as words, Q from row growth
  std::vector<IntWord> rows;                       // rows[r-1] has window start r
  std::vector<std::vector<long>> lengths_history;  // per inserted word: row lengths
  for (std::size_t i = 0; i < n; ++i) {
    IntWord v{1, std::vector<long>(N)};
    for (std::size_t j = 0; j < N; ++j) v.mult[j] = w(i, j);
    std::size_t r = 0;
    while (!v.mult.empty()) {
      bool zero = true;
      for (long m : v.mult) zero &= (m == 0);
      if (r >= rows.size()) {
        if (zero) break;
        rows.push_back(IntWord{v.start, std::vector<long>(v.mult.size(), 0)});
      }
      auto [xt, b] = row_insert_word(rows[r], v);
      rows[r] = xt;
      v = b;
      ++r;
    }
    std::vector<long> lens;
    for (const auto& row : rows) {
      long len = 0;
      for (long m : row.mult) len += m;
      lens.push_back(len);
    }
    lengths_history.push_back(lens);
  }

  const std::size_t cap = std::min(n, N);
  out.Z = IntGt(N, cap);
  for (std::size_t a = 1; a <= N; ++a)
    for (std::size_t b = 1; b <= out.Z.row_width(a); ++b) {
      long s = 0;
      if (b <= rows.size())
        for (std::size_t k = b; k <= a; ++k) s += rows[b - 1].count(k);
      out.Z.at(a, b) = s;
    }
  out.Zprime = IntGt(n, cap);
  for (std::size_t a = 1; a <= n; ++a)
    for (std::size_t b = 1; b <= out.Zprime.row_width(a); ++b)
      out.Zprime.at(a, b) =
          b <= lengths_history[a - 1].size() ? lengths_history[a - 1][b - 1] : 0;
  out.glued = detail::reglue(out.Z, out.Zprime, n, N);
  return out;
}

// Inverts the local-move sweep. Rejects images that are not in the range of
// RSK (shape mismatch, interlacing violation, or negative preimage entries).
inline IntGrid rsk_inverse(const RskOutput& out) {
  const std::size_t n = out.Zprime.depth(), N = out.Z.depth();
  if (shape_of(out.Z).parts() !=
      Partition(std::vector<long>(out.Zprime.bottom_row())).parts())
    throw std::invalid_argument("rsk_inverse: shape mismatch between Z and Z'");
  if (!validate_gt(out.Z) || !validate_gt(out.Zprime))
    throw std::invalid_argument("rsk_inverse: interlacing violation");
  IntGrid t = out.glued;
  if (t.rows() != n || t.cols() != N) t = detail::reglue(out.Z, out.Zprime, n, N);
  local_move_inverse<CombinatorialMove>(t, ArrayShape::rectangle(n, N));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (t(i, j) < 0) throw std::invalid_argument("rsk_inverse: not an RSK image");
  return t;
}

inline IntGrid permutation_matrix(const std::vector<long>& sigma) {
  IntGrid w(sigma.size(), sigma.size(), 0);
  for (std::size_t i = 0; i < sigma.size(); ++i) w(i, sigma[i] - 1) = 1;
  return w;
}

}  // namespace kpz
