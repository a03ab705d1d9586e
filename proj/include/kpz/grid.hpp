#pragma once

// Rectangular weight arrays in matrix coordinates: entry (i,j) is row i,
// column j, both 1-based in the maths and 0-based in storage. Row index
// increases downwards, matching the down-right path convention used
// throughout.

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace kpz {

template <typename T>
class Grid {
 public:
  Grid() : rows_(0), cols_(0) {}
  Grid(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  Grid(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged grid initializer");
      for (const auto& v : row) data_.push_back(v);
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  // 0-based accessors
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Grid<T> transpose() const {
    Grid<T> t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool operator==(const Grid<T>& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  template <typename U, typename F>
  Grid<U> map(F&& f) const {
    Grid<U> g(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) g(i, j) = f((*this)(i, j));
    return g;
  }

  std::vector<T>& raw() { return data_; }
  const std::vector<T>& raw() const { return data_; }

 private:
  std::size_t rows_, cols_;
  std::vector<T> data_;
};

using IntGrid = Grid<long>;
using RealGrid = Grid<double>;

inline void require_positive(const RealGrid& w) {
  for (std::size_t i = 0; i < w.rows(); ++i)
    for (std::size_t j = 0; j < w.cols(); ++j)
      if (!(w(i, j) > 0)) throw std::invalid_argument("weight matrix entries must be positive");
}

}  // namespace kpz
