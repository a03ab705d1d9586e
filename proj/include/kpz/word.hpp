#pragma once

// Words as letter-multiplicity vectors over a window [start..alphabet]:
// mult[k] counts the letter start+k. Integer mode words may be empty
// (all-zero); geometric mode requires strictly positive entries.

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace kpz {

template <typename T>
struct Word {
  std::size_t start = 1;  // first letter of the window, 1-based
  std::vector<T> mult;

  Word() = default;
  Word(std::size_t start_, std::vector<T> mult_) : start(start_), mult(std::move(mult_)) {}

  std::size_t alphabet_end() const { return start + mult.size() - 1; }
  bool empty() const { return mult.empty(); }

  const T& count(std::size_t letter) const {  // letter in [start, alphabet_end]
    return mult.at(letter - start);
  }
};

using IntWord = Word<long>;
using RealWord = Word<double>;

}  // namespace kpz
