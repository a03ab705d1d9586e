#pragma once

// Continuous-time Markov dynamics on Gelfand-Tsetlin patterns:
//  * Poissonian RSK: left-edge particles z^i_1 jump at rate x_i, the jump
//    trickles down deterministically (push on equality, pull otherwise).
//  * q-RSK (O'Connell-Pei): same initiators; at each level the push happens
//    with probability R_j = q^{z^{i+1}_j - z^i_j}
//      (1-q^{z^i_{j-1}-z^{i+1}_j}) / (1-q^{z^i_{j-1}-z^i_j}),
//    the pull with 1 - R_j; conventions z^i_0 = +inf.
//  * q-Whittaker 2d growth: every particle carries its own clock with rate
//      x_k (1-q^{z^{k-1}_{j-1}-z^k_j})(1-q^{z^k_j-z^k_{j+1}+1})
//          / (1-q^{z^k_j-z^{k-1}_j+1}),
//    missing-particle factors omitted; a jump pushes the equal string below.
// Exact event simulation with competing exponential clocks; the q-TASEP
// marginal is the diagonal (z^k_k).

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "kpz/gt_pattern.hpp"
#include "kpz/rng.hpp"

namespace kpz {

enum class DynModel { PoissonRsk, QRsk, QWhittaker };

struct DynamicsConfig {
  DynModel model = DynModel::PoissonRsk;
  std::size_t depth = 1;
  std::vector<double> rates;  // x_1..x_n > 0
  double q = 0.0;             // q-models only, in [0,1)
  double horizon = 1.0;
  std::uint64_t seed = 0;
  IntGt initial;  // default all-zero of the given depth
  std::size_t max_events = 1 << 20;
};

struct DynEvent {
  double time;
  std::size_t i, j;  // initiating particle
  IntGt state;       // snapshot after the event
};

struct Trajectory {
  std::vector<DynEvent> events;
  IntGt final_state;
  double horizon = 0;
};

// ---- single-event moves -------------------------------------------------------

// Deterministic RSK cascade from an initiating jump at (i,1).
inline void poisson_rsk_apply(IntGt& z, std::size_t i) {
  std::size_t r = i, j = 1;
  long pre = z.at(r, j);
  z.at(r, j) += 1;
  while (r + 1 <= z.depth()) {
    if (pre == z.at(r + 1, j)) {
      pre = z.at(r + 1, j);
      z.at(r + 1, j) += 1;
    } else {
      pre = z.at(r + 1, j + 1);
      z.at(r + 1, j + 1) += 1;
      j += 1;
    }
    r += 1;
  }
}

// Push probability R_j(z^i; z^{i+1}) evaluated on pre-jump values. Equality
// z^i_j = z^{i+1}_j forces the push (this also covers the 0/0 ratio when the
// row above has equal adjacent entries).
inline double qrsk_push_probability(const IntGt& z, std::size_t i, std::size_t j, double q) {
  if (z.at(i + 1, j) == z.at(i, j)) return 1.0;
  double r = std::pow(q, static_cast<double>(z.at(i + 1, j) - z.at(i, j)));
  if (j >= 2) {
    long up = z.at(i, j - 1);
    r *= (1.0 - std::pow(q, static_cast<double>(up - z.at(i + 1, j)))) /
         (1.0 - std::pow(q, static_cast<double>(up - z.at(i, j))));
  }
  return r;
}

// Stochastic q-RSK cascade from an initiating jump at (i,1).
inline void qrsk_apply(IntGt& z, std::size_t i, double q, Rng& rng) {
  std::size_t r = i, j = 1;
  while (true) {
    if (r + 1 > z.depth()) {
      z.at(r, j) += 1;
      break;
    }
    double push = qrsk_push_probability(z, r, j, q);
    z.at(r, j) += 1;
    if (rng.uniform() < push) {
      // continue with the pushed particle (r+1, j)
    } else {
      j += 1;  // pull (r+1, j+1)
    }
    r += 1;
  }
}

// Rate table for the q-Whittaker growth model; index (k,j) 1-based.
inline double qwhittaker_rate(const IntGt& z, std::size_t k, std::size_t j,
                              const std::vector<double>& x, double q) {
  double rate = x[k - 1];
  if (k >= 2 && j >= 2)
    rate *= 1.0 - std::pow(q, static_cast<double>(z.at(k - 1, j - 1) - z.at(k, j)));
  if (j + 1 <= z.row_width(k))
    rate *= 1.0 - std::pow(q, static_cast<double>(z.at(k, j) - z.at(k, j + 1) + 1));
  if (k >= 2 && j <= z.row_width(k - 1))
    rate /= 1.0 - std::pow(q, static_cast<double>(z.at(k, j) - z.at(k - 1, j) + 1));
  return rate;
}

// Jump of (k,j) pushes the equal string below in the same column.
inline void qwhittaker_apply(IntGt& z, std::size_t k, std::size_t j) {
  long pre = z.at(k, j);
  z.at(k, j) += 1;
  for (std::size_t m = k + 1; m <= z.depth(); ++m) {
    if (z.at(m, j) != pre) break;
    z.at(m, j) += 1;
  }
}

// ---- exact event simulation ----------------------------------------------------

inline Trajectory simulate(const DynamicsConfig& cfg) {
  const std::size_t n = cfg.depth;
  if (cfg.rates.size() != n) throw std::invalid_argument("simulate: need one rate per row");
  for (double r : cfg.rates)
    if (!(r > 0)) throw std::invalid_argument("simulate: rates must be positive");
  if (cfg.model != DynModel::PoissonRsk && !(cfg.q >= 0 && cfg.q < 1))
    throw std::invalid_argument("simulate: q in [0,1)");

  IntGt z = cfg.initial.depth() == n ? cfg.initial : IntGt(n);
  if (!validate_gt(z)) throw std::invalid_argument("simulate: invalid initial pattern");

  Rng rng(cfg.seed, 0);
  Trajectory traj;
  traj.horizon = cfg.horizon;
  double t = 0;

  std::vector<double> rates;
  std::vector<std::pair<std::size_t, std::size_t>> sites;
  while (true) {
    rates.clear();
    sites.clear();
    if (cfg.model == DynModel::QWhittaker) {
      for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t j = 1; j <= z.row_width(k); ++j) {
          double r = qwhittaker_rate(z, k, j, cfg.rates, cfg.q);
          if (r > 0) {
            rates.push_back(r);
            sites.emplace_back(k, j);
          }
        }
    } else {
      for (std::size_t i = 1; i <= n; ++i) {
        rates.push_back(cfg.rates[i - 1]);
        sites.emplace_back(i, 1);
      }
    }
    double total = 0;
    for (double r : rates) total += r;
    if (total <= 0) break;
    t += rng.exponential(total);
    if (t > cfg.horizon) break;
    if (traj.events.size() >= cfg.max_events)
      throw std::runtime_error("simulate: event cap exceeded");
    double u = rng.uniform() * total;
    std::size_t pick = 0;
    for (; pick + 1 < rates.size(); ++pick) {
      u -= rates[pick];
      if (u <= 0) break;
    }
    auto [i, j] = sites[pick];
    switch (cfg.model) {
      case DynModel::PoissonRsk:
        poisson_rsk_apply(z, i);
        break;
      case DynModel::QRsk:
        qrsk_apply(z, i, cfg.q, rng);
        break;
      case DynModel::QWhittaker:
        qwhittaker_apply(z, i, j);
        break;
    }
    traj.events.push_back({t, i, j, z});
  }
  traj.final_state = z;
  return traj;
}

inline std::vector<long> qtasep_marginal(const IntGt& z) {
  std::vector<long> diag;
  for (std::size_t k = 1; k <= z.depth(); ++k) diag.push_back(z.at(k, k));
  return diag;
}

}  // namespace kpz
