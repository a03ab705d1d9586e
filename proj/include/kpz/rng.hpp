#pragma once

// Seeded RNG streams. All samplers are built from the raw mt19937_64 output
// so results are reproducible across standard libraries; stream k of a master
// seed is an independent deterministic sequence (per-replica streams merge
// deterministically regardless of thread count).

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace kpz {

class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : eng_(mix(seed, stream)) {}

  std::uint64_t raw() { return eng_(); }

  double uniform() {  // (0, 1)
    return (static_cast<double>(eng_() >> 11) + 0.5) * 0x1.0p-53;
  }

  double exponential(double rate) { return -std::log(uniform()) / rate; }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform(), u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1)), th = 2.0 * M_PI * u2;
    spare_ = r * std::sin(th);
    has_spare_ = true;
    return r * std::cos(th);
  }

  // P(k) = (1-a) a^k on k = 0,1,2,...
  long geometric(double a) {
    if (!(a > 0 && a < 1)) throw std::invalid_argument("geometric: a in (0,1)");
    return static_cast<long>(std::floor(std::log(uniform()) / std::log(a)));
  }

  // Marsaglia-Tsang rejection sampler, unit scale.
  double gamma(double shape) {
    if (!(shape > 0)) throw std::invalid_argument("gamma: shape > 0");
    if (shape < 1.0) {
      double u = uniform();
      return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    double d = shape - 1.0 / 3.0, c = 1.0 / std::sqrt(9.0 * d);
    while (true) {
      double x = normal();
      double v = 1.0 + c * x;
      if (v <= 0) continue;
      v = v * v * v;
      double u = uniform();
      if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) return d * v;
    }
  }

  double inverse_gamma(double shape) { return 1.0 / gamma(shape); }

 private:
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 pass over (seed, stream)
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::mt19937_64 eng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace kpz
