#pragma once

// Gelfand-Tsetlin patterns. Row i (1-based) holds entries z^i_j for
// j = 1..min(i, width_cap), stored largest-first (z^i_1 is the rightmost
// particle in the usual picture). Integer patterns must interlace,
//   z^{i+1}_{j+1} <= z^i_j <= z^{i+1}_j;
// geometric (positive real) patterns carry no interlacing constraint.
// Truncated patterns (width_cap < depth) arise from non-square RSK input.

#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "kpz/partition.hpp"

namespace kpz {

template <typename T>
class GtPattern {
 public:
  GtPattern() : depth_(0), width_cap_(0) {}
  GtPattern(std::size_t depth, std::size_t width_cap)
      : depth_(depth), width_cap_(width_cap ? width_cap : depth) {
    offsets_.reserve(depth_ + 1);
    offsets_.push_back(0);
    for (std::size_t i = 1; i <= depth_; ++i)
      offsets_.push_back(offsets_.back() + row_width(i));
    data_.assign(offsets_.back(), T());
  }
  explicit GtPattern(std::size_t depth) : GtPattern(depth, depth) {}

  // from explicit rows, e.g. {{3},{3,1}}
  GtPattern(std::initializer_list<std::initializer_list<T>> rows) {
    std::size_t cap = 0;
    for (const auto& r : rows) cap = std::max(cap, r.size());
    *this = GtPattern(rows.size(), cap);
    std::size_t i = 1;
    for (const auto& r : rows) {
      if (r.size() != row_width(i)) throw std::invalid_argument("malformed triangle row");
      std::size_t j = 1;
      for (const auto& v : r) at(i, j++) = v;
      ++i;
    }
  }

  std::size_t depth() const { return depth_; }
  std::size_t width_cap() const { return width_cap_; }
  std::size_t row_width(std::size_t i) const { return std::min(i, width_cap_); }

  // 1-based (i,j), j <= row_width(i)
  T& at(std::size_t i, std::size_t j) { return data_[offsets_[i - 1] + (j - 1)]; }
  const T& at(std::size_t i, std::size_t j) const { return data_[offsets_[i - 1] + (j - 1)]; }

  const std::vector<T>& flat() const { return data_; }
  std::vector<T>& flat() { return data_; }

  bool operator==(const GtPattern& o) const {
    return depth_ == o.depth_ && width_cap_ == o.width_cap_ && data_ == o.data_;
  }

  std::vector<T> bottom_row() const {
    std::vector<T> r;
    for (std::size_t j = 1; j <= row_width(depth_); ++j) r.push_back(at(depth_, j));
    return r;
  }

  T row_sum(std::size_t i) const {  // |z^i|
    T s = T();
    for (std::size_t j = 1; j <= row_width(i); ++j) s += at(i, j);
    return s;
  }

  std::string str() const {
    std::ostringstream os;
    for (std::size_t i = 1; i <= depth_; ++i) {
      for (std::size_t j = row_width(i); j >= 1; --j) os << at(i, j) << (j > 1 ? " " : "");
      if (i < depth_) os << "\n";
    }
    return os.str();
  }

 private:
  std::size_t depth_, width_cap_;
  std::vector<std::size_t> offsets_;
  std::vector<T> data_;
};

using IntGt = GtPattern<long>;
using GeomGt = GtPattern<double>;

struct GtViolation {
  std::size_t i, j;  // failing constraint between rows i and i+1 at column j
};

// Interlacing check for integer patterns; reports the first violation.
inline std::optional<GtViolation> find_gt_violation(const IntGt& z) {
  for (std::size_t i = 1; i + 1 <= z.depth(); ++i) {
    for (std::size_t j = 1; j <= z.row_width(i); ++j) {
      if (j <= z.row_width(i + 1) && !(z.at(i, j) <= z.at(i + 1, j)))
        return GtViolation{i, j};
      if (j + 1 <= z.row_width(i + 1) && !(z.at(i + 1, j + 1) <= z.at(i, j)))
        return GtViolation{i, j};
    }
  }
  return std::nullopt;
}

inline bool validate_gt(const IntGt& z) { return !find_gt_violation(z).has_value(); }

inline Partition shape_of(const IntGt& z) {
  std::vector<long> parts = z.bottom_row();
  return Partition(std::move(parts));
}

// type(Z)_i = |z^i| - |z^{i-1}| with |z^0| = 0.
inline std::vector<long> type_of(const IntGt& z) {
  std::vector<long> t;
  long prev = 0;
  for (std::size_t i = 1; i <= z.depth(); ++i) {
    long s = z.row_sum(i);
    t.push_back(s - prev);
    prev = s;
  }
  return t;
}

// Geometric type: ratios of row products, empty product = 1.
inline std::vector<double> type_of(const GeomGt& z) {
  std::vector<double> t;
  double prev = 1.0;
  for (std::size_t i = 1; i <= z.depth(); ++i) {
    double p = 1.0;
    for (std::size_t j = 1; j <= z.row_width(i); ++j) p *= z.at(i, j);
    t.push_back(p / prev);
    prev = p;
  }
  return t;
}

// Pattern from semistandard tableau rows given as letter multiplicities:
// rows[j-1][k-1] = number of letters k in tableau row j. z^i_j = sum_{k=j..i}.
inline IntGt pattern_from_tableau_rows(const std::vector<std::vector<long>>& rows,
                                       std::size_t alphabet) {
  std::size_t cap = rows.size();
  IntGt z(alphabet, cap ? cap : alphabet);
  for (std::size_t i = 1; i <= alphabet; ++i)
    for (std::size_t j = 1; j <= z.row_width(i); ++j) {
      long s = 0;
      if (j <= rows.size())
        for (std::size_t k = j; k <= i; ++k)
          if (k <= rows[j - 1].size()) s += rows[j - 1][k - 1];
      z.at(i, j) = s;
    }
  return z;
}

}  // namespace kpz
