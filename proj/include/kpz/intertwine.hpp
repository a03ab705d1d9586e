#pragma once

// Intertwining verification in exact arithmetic, Doob-transformed shape
// dynamics, and the Pitman-Rogers Monte Carlo comparison.
//
// Schur / Poissonian-RSK: with K(la, Z) = prod_i x_i^{|z^i|-|z^{i-1}|} on
// patterns of shape la, Pi the RSK jump generator and P(la,nu) the
// single-box adjacency, the relation K Pi = P K holds entrywise; truncating
// entries at M only removes rows whose images leave the box, so interior
// rows must give an exactly zero residual.
//
// Macdonald (t = 0): the Borodin-Corwin kernel built from P_k, the
// stochastic links Lambda^k_{k-1} and Delta = Lambda P_{k-1}. The common
// normalization H(x; rho) = prod_k 1/(rho x_k; q)_infty is an infinite
// product and is stripped from BOTH sides, leaving an identity in the
// rationals; row sums of the stripped kernel recover H numerically.

#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "kpz/dynamics.hpp"
#include "kpz/gt_pattern.hpp"
#include "kpz/macdonald.hpp"
#include "kpz/partition.hpp"
#include "kpz/qseries.hpp"
#include "kpz/rational.hpp"
#include "kpz/rng.hpp"
#include "kpz/schur.hpp"
#include "kpz/special.hpp"

namespace kpz {

// ---- helpers over truncated pattern spaces -------------------------------------

inline std::vector<IntGt> patterns_with_shape(const Partition& lambda, std::size_t n) {
  std::vector<IntGt> out;
  if (lambda.length() > n) return out;
  std::vector<Partition> rows(n);
  rows[n - 1] = lambda;
  std::function<void(std::size_t)> rec = [&](std::size_t level) {
    if (level == 0) {
      IntGt z(n);
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= i; ++j) z.at(i, j) = rows[i - 1].part(j - 1);
      out.push_back(std::move(z));
      return;
    }
    interlacing_below(rows[level], [&](const Partition& mu) {
      if (mu.length() > level) return;
      rows[level - 1] = mu;
      rec(level - 1);
    });
  };
  if (n == 1) {
    IntGt z(1);
    z.at(1, 1) = lambda.part(0);
    out.push_back(z);
    return out;
  }
  rec(n - 1);
  return out;
}

inline Rat schur_link_weight(const IntGt& z, const std::vector<Rat>& x) {
  Rat w(1);
  long prev = 0;
  for (std::size_t i = 1; i <= z.depth(); ++i) {
    long s = z.row_sum(i);
    w *= pow_rat(x[i - 1], s - prev);
    prev = s;
  }
  return w;
}

// ---- Schur intertwining: K Pi = P K ---------------------------------------------

struct IntertwineReport {
  Rat max_residual{0};
  std::size_t interior_shapes = 0, pairs_checked = 0;
  double leakage = 0;  // row-mass outside the truncation (Macdonald only)
};

inline IntertwineReport intertwining_residual_schur(std::size_t n, const std::vector<Rat>& x,
                                                    long M) {
  if (n < 1 || n > 3) throw std::invalid_argument("intertwining: n <= 3");
  IntertwineReport rep;
  using Key = std::vector<long>;
  for (const Partition& la : partitions_in_box(n, M - 1)) {
    // interior: every image of every pattern with this shape stays inside M
    ++rep.interior_shapes;
    std::map<Key, Rat> lhs, rhs;
    for (const IntGt& z : patterns_with_shape(la, n)) {
      Rat kw = schur_link_weight(z, x);
      for (std::size_t i = 1; i <= n; ++i) {
        IntGt zt = z;
        poisson_rsk_apply(zt, i);
        lhs[zt.flat()] += kw * x[i - 1];
      }
    }
    for (std::size_t i = 0; i <= la.length(); ++i) {
      if (!la.valid_after_increment(i)) continue;
      Partition nu = la.add_box(i);
      if (nu.length() > n) continue;
      for (const IntGt& z : patterns_with_shape(nu, n)) rhs[z.flat()] += schur_link_weight(z, x);
    }
    for (const auto& [key, v] : lhs) {
      Rat diff = abs_val(v - (rhs.count(key) ? rhs.at(key) : Rat(0)));
      if (diff > rep.max_residual) rep.max_residual = diff;
      ++rep.pairs_checked;
    }
    for (const auto& [key, v] : rhs)
      if (!lhs.count(key)) {
        Rat diff = abs_val(v);
        if (diff > rep.max_residual) rep.max_residual = diff;
        ++rep.pairs_checked;
      }
  }
  return rep;
}

// Doob-transformed shape walk: rate la -> la + e_i is s_{la+e_i}(x)/s_la(x).
inline Rat schur_doob_rate(const Partition& la, const Partition& nu, const std::vector<Rat>& x) {
  bool adjacent = false;
  for (std::size_t i = 0; i <= la.length(); ++i)
    if (la.valid_after_increment(i) && la.add_box(i) == nu) adjacent = true;
  if (!adjacent) return Rat(0);
  if (nu.length() > x.size()) return Rat(0);
  return schur_gt_sum(nu, x) / schur_gt_sum(la, x);
}

// ---- Macdonald (t = 0) intertwining ----------------------------------------------

class MacdonaldT0 {
 public:
  MacdonaldT0(Rat q, Rat rho, std::vector<Rat> x) : q_(q), rho_(rho), x_(std::move(x)) {}

  Rat P_straight(const Partition& la, std::size_t vars) const {
    std::vector<long> key = la.parts();
    key.push_back(static_cast<long>(vars));
    auto it = p_memo_.find(key);
    if (it != p_memo_.end()) return it->second;
    std::vector<Rat> xs(x_.begin(), x_.begin() + vars);
    Rat v = macdonald_exact(la, Partition(), xs, q_, Rat(0), MacWhich::P);
    p_memo_.emplace(std::move(key), v);
    return v;
  }
  Rat P_skew(const Partition& outer, const Partition& inner, std::size_t var_index) const {
    if (!outer.horizontal_strip_over(inner)) return Rat(0);
    return skew_psi_exact(outer, inner, q_, Rat(0)) *
           pow_rat(x_[var_index - 1], outer.size() - inner.size());
  }
  Rat Q_rho(const Partition& outer, const Partition& inner) const {
    if (!outer.horizontal_strip_over(inner)) return Rat(0);
    return skew_phi_exact(outer, inner, q_, Rat(0)) * pow_rat(rho_, outer.size() - inner.size());
  }

  // stripped one-row kernel: P^_k(mu,nu) = Q_{nu/mu}(rho) P_nu / P_mu
  Rat Pk(std::size_t k, const Partition& mu, const Partition& nu) const {
    Rat qq = Q_rho(nu, mu);
    if (qq == Rat(0)) return Rat(0);
    return qq * P_straight(nu, k) / P_straight(mu, k);
  }

  // stochastic link Lambda^k_{k-1}(mu,nu) = P_nu(x_1..x_{k-1}) P_{mu/nu}(x_k) / P_mu(x_1..x_k)
  Rat Lambda(std::size_t k, const Partition& mu, const Partition& nu) const {
    Rat skew = P_skew(mu, nu, k);
    if (skew == Rat(0)) return Rat(0);
    return P_straight(nu, k - 1) * skew / P_straight(mu, k);
  }

  // Delta^_k(mu, nut) = sum_kappa Lambda(mu,kappa) P^_{k-1}(kappa,nut), finite
  Rat Delta(std::size_t k, const Partition& mu, const Partition& nut) const {
    std::vector<long> key = mu.parts();
    key.push_back(-1);
    for (long p : nut.parts()) key.push_back(p);
    key.push_back(static_cast<long>(k));
    auto it = delta_memo_.find(key);
    if (it != delta_memo_.end()) return it->second;
    Rat total(0);
    interlacing_below(mu, [&](const Partition& kappa) {
      Rat l = Lambda(k, mu, kappa);
      if (l == Rat(0)) return;
      total += l * Pk(k - 1, kappa, nut);
    });
    delta_memo_.emplace(std::move(key), total);
    return total;
  }

  // stripped pattern kernel Pi^(Z, Zt), n = 2
  Rat Pi2(const IntGt& z, const IntGt& zt) const {
    Partition z1{std::vector<long>{z.at(1, 1)}}, zt1{std::vector<long>{zt.at(1, 1)}};
    Partition z2{std::vector<long>{z.at(2, 1), z.at(2, 2)}};
    Partition zt2{std::vector<long>{zt.at(2, 1), zt.at(2, 2)}};
    Rat d = Delta(2, z2, zt1);
    if (d == Rat(0)) return Rat(0);
    return Pk(1, z1, zt1) * Pk(2, z2, zt2) * Lambda(2, zt2, zt1) / d;
  }

  const Rat& q() const { return q_; }
  const Rat& rho() const { return rho_; }
  const std::vector<Rat>& x() const { return x_; }

 private:
  Rat q_, rho_;
  std::vector<Rat> x_;
  mutable std::map<std::vector<long>, Rat> p_memo_, delta_memo_;
};

// max | (K Pi^)(la, Z) - (P^_n K)(la, Z) | over shapes la and targets Z with
// entries <= M, exact; also reports 1 - row mass of Pi_rho numerically.
inline IntertwineReport intertwining_residual_macdonald(const Rat& q, const Rat& rho,
                                                        const std::vector<Rat>& x, long M) {
  if (x.size() != 2) throw std::invalid_argument("macdonald intertwining: n = 2");
  MacdonaldT0 mac(q, rho, x);
  IntertwineReport rep;

  auto shapes = partitions_in_box(2, M);
  std::vector<IntGt> states;
  for (const Partition& la : shapes)
    for (const IntGt& z : patterns_with_shape(la, 2)) states.push_back(z);

  // K(la, Zt) = Lambda^2_1(la, zt1) with sh(Zt) = la
  auto bigK = [&](const Partition& la, const IntGt& zt) {
    Partition sh{std::vector<long>{zt.at(2, 1), zt.at(2, 2)}};
    if (!(sh == la)) return Rat(0);
    return mac.Lambda(2, la, Partition{std::vector<long>{zt.at(1, 1)}});
  };

  for (const Partition& la : shapes) {
    ++rep.interior_shapes;
    for (const IntGt& target : states) {
      // lhs = sum_{Zt: sh = la} K(la, Zt) Pi^(Zt, target)
      Rat lhs(0);
      for (const IntGt& zt : patterns_with_shape(la, 2)) {
        Rat kw = bigK(la, zt);
        if (kw == Rat(0)) continue;
        lhs += kw * mac.Pi2(zt, target);
      }
      // rhs = P^_2(la, sh(target)) K(sh(target), target)
      Partition sh{std::vector<long>{target.at(2, 1), target.at(2, 2)}};
      Rat rhs = mac.Pk(2, la, sh) * bigK(sh, target);
      Rat diff = abs_val(lhs - rhs);
      if (diff > rep.max_residual) rep.max_residual = diff;
      ++rep.pairs_checked;
    }
  }

  // row-mass: sum over truncated targets of Pi_rho should approach 1
  double H = 1.0;
  for (const Rat& xi : x) H /= qpochhammer_inf(to_double(rho * xi), to_double(q));
  double worst = 0;
  for (const IntGt& z : patterns_with_shape(Partition{1}, 2)) {
    double mass = 0;
    for (const IntGt& zt : states) mass += to_double(mac.Pi2(z, zt));
    worst = std::max(worst, std::abs(mass / H - 1.0));
  }
  rep.leakage = worst;
  return rep;
}

// ---- Pitman-Rogers Monte Carlo comparison ----------------------------------------

struct PitmanRogersReport {
  std::vector<double> times;
  std::vector<double> tv_distance;   // empirical TV at each checkpoint
  std::vector<double> max_z;         // largest per-state two-sample z-score
  std::size_t replicas = 0;
};

// Samples Z ~ K(la0, .) (the normalized Schur link), runs the full pattern
// dynamics and the Doob shape walk independently, and compares bottom-row
// laws at the checkpoints. degenerate_start forces a fixed pattern instead
// of the link sample; the comparison is then expected to fail (negative
// control for the initial-law precondition).
inline PitmanRogersReport pitman_rogers_distance(const Partition& la0,
                                                 const std::vector<double>& x,
                                                 const std::vector<double>& times,
                                                 std::size_t replicas, std::uint64_t seed,
                                                 bool degenerate_start = false) {
  if (replicas < 1000) throw std::invalid_argument("pitman-rogers: need >= 1000 replicas");
  const std::size_t n = x.size();
  if (n != 2) throw std::invalid_argument("pitman-rogers: n = 2 implemented");

  std::vector<Rat> xr;
  for (double v : x) xr.push_back(rat(static_cast<long>(std::llround(v * 1000)), 1000));

  // distribution of z^1_1 given bottom row la0 under the link kernel
  std::vector<double> link_w;
  std::vector<long> link_v;
  for (long v = la0.part(1); v <= la0.part(0); ++v) {
    link_v.push_back(v);
    link_w.push_back(std::pow(x[0], v) * std::pow(x[1], la0.size() - v));
  }
  double link_total = 0;
  for (double w : link_w) link_total += w;

  using ShapeKey = std::pair<long, long>;
  std::vector<std::map<ShapeKey, std::size_t>> full_counts(times.size()),
      doob_counts(times.size());
  std::map<std::vector<long>, std::pair<std::vector<Partition>, std::vector<double>>> rate_cache;

  for (std::size_t r = 0; r < replicas; ++r) {
    // full pattern run
    Rng rng(seed, 2 * r);
    IntGt z0(2);
    z0.at(2, 1) = la0.part(0);
    z0.at(2, 2) = la0.part(1);
    if (degenerate_start) {
      z0.at(1, 1) = la0.part(0);
    } else {
      double u = rng.uniform() * link_total;
      std::size_t pick = 0;
      for (; pick + 1 < link_v.size(); ++pick) {
        u -= link_w[pick];
        if (u <= 0) break;
      }
      z0.at(1, 1) = link_v[pick];
    }
    IntGt z = z0;
    double t = 0;
    std::size_t check = 0;
    double total_rate = x[0] + x[1];
    while (check < times.size()) {
      double dt = rng.exponential(total_rate);
      while (check < times.size() && t + dt > times[check]) {
        full_counts[check][{z.at(2, 1), z.at(2, 2)}]++;
        ++check;
      }
      if (check >= times.size()) break;
      t += dt;
      std::size_t i = (rng.uniform() * total_rate < x[0]) ? 1 : 2;
      poisson_rsk_apply(z, i);
    }

    // independent Doob walk started at la0
    Rng rng2(seed, 2 * r + 1);
    Partition la = la0;
    t = 0;
    check = 0;
    while (check < times.size()) {
      auto cached = rate_cache.find(la.parts());
      if (cached == rate_cache.end()) {
        std::vector<Partition> nus;
        std::vector<double> rates;
        for (std::size_t i = 0; i <= la.length() && i < n; ++i) {
          if (!la.valid_after_increment(i)) continue;
          Partition nu = la.add_box(i);
          if (nu.length() > n) continue;
          nus.push_back(nu);
          rates.push_back(to_double(schur_gt_sum(nu, xr) / schur_gt_sum(la, xr)));
        }
        cached = rate_cache.emplace(la.parts(), std::make_pair(nus, rates)).first;
      }
      const auto& nus = cached->second.first;
      const auto& rates = cached->second.second;
      double tot = 0;
      for (double rr : rates) tot += rr;
      double dt = rng2.exponential(tot);
      while (check < times.size() && t + dt > times[check]) {
        doob_counts[check][{la.part(0), la.part(1)}]++;
        ++check;
      }
      if (check >= times.size()) break;
      t += dt;
      double u = rng2.uniform() * tot;
      std::size_t pick = 0;
      for (; pick + 1 < rates.size(); ++pick) {
        u -= rates[pick];
        if (u <= 0) break;
      }
      la = nus[pick];
    }
  }

  PitmanRogersReport rep;
  rep.times = times;
  rep.replicas = replicas;
  for (std::size_t c = 0; c < times.size(); ++c) {
    double tv = 0, worst_z = 0;
    std::map<ShapeKey, std::size_t> keys;
    for (const auto& [k, v] : full_counts[c]) keys[k] += 0;
    for (const auto& [k, v] : doob_counts[c]) keys[k] += 0;
    for (const auto& [k, dummy] : keys) {
      double p1 = full_counts[c].count(k) ? double(full_counts[c][k]) / replicas : 0;
      double p2 = doob_counts[c].count(k) ? double(doob_counts[c][k]) / replicas : 0;
      tv += 0.5 * std::abs(p1 - p2);
      double pooled = 0.5 * (p1 + p2);
      if (pooled * replicas >= 8) {
        double se = std::sqrt(pooled * (1 - pooled) * 2.0 / replicas);
        worst_z = std::max(worst_z, std::abs(p1 - p2) / se);
      }
    }
    rep.tv_distance.push_back(tv);
    rep.max_z.push_back(worst_z);
  }
  return rep;
}

// ---- Burke-type fixed point -------------------------------------------------------

struct BurkeReport {
  double ks_u, ks_v, ks_y;  // sqrt(n)-scaled KS statistics of the transformed triple
  std::size_t samples;
};

// (U', V', Y') = (Y(1+U/V), Y(1+V/U), (1/U+1/V)^{-1}) preserves the law of
// independent inverse-gammas (theta), (mu-theta), (mu).
inline BurkeReport burke_transform_ks(double theta, double mu, std::size_t samples,
                                      std::uint64_t seed) {
  if (!(theta > 0 && mu > theta)) throw std::invalid_argument("burke: 0 < theta < mu");
  Rng rng(seed, 0);
  std::vector<double> us(samples), vs(samples), ys(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    double u = rng.inverse_gamma(theta);
    double v = rng.inverse_gamma(mu - theta);
    double y = rng.inverse_gamma(mu);
    us[i] = y * (1 + u / v);
    vs[i] = y * (1 + v / u);
    ys[i] = 1.0 / (1.0 / u + 1.0 / v);
  }
  auto ks = [&](std::vector<double>& xs, double shape) {
    std::sort(xs.begin(), xs.end());
    double d = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      double F = inverse_gamma_cdf(shape, xs[i]);
      d = std::max(d, std::abs(F - (i + 1.0) / xs.size()));
      d = std::max(d, std::abs(F - static_cast<double>(i) / xs.size()));
    }
    return std::sqrt(static_cast<double>(xs.size())) * d;
  };
  return {ks(us, theta), ks(vs, mu - theta), ks(ys, mu), samples};
}

}  // namespace kpz
