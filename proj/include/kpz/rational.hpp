#pragma once

// Exact rational arithmetic used by the combinatorial layer. Thin helpers
// around GMP's mpq_class so the rest of the code can stay generic over the
// scalar type (Rat or double).

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace kpz {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat pow_rat(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  Rat b = e > 0 ? base : Rat(1) / base;
  unsigned long n = e > 0 ? e : -e;
  Rat acc(1);
  while (n) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

inline double to_double(const Rat& r) { return r.get_d(); }
inline double to_double(double r) { return r; }

inline Rat abs_val(const Rat& r) { return r < 0 ? Rat(-r) : r; }
inline double abs_val(double r) { return r < 0 ? -r : r; }

inline std::string to_string(const Rat& r) { return r.get_str(); }

}  // namespace kpz
