#pragma once

// Named verification checks behind both `kpz verify` and the acceptance
// runner. Each check owns its tolerances; `fast` members keep Monte-Carlo
// sizes and asymptotic-trend tests out of the quick suite.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kpz/dynamics.hpp"
#include "kpz/fredholm.hpp"
#include "kpz/grsk.hpp"
#include "kpz/intertwine.hpp"
#include "kpz/lpp.hpp"
#include "kpz/macdonald.hpp"
#include "kpz/rsk.hpp"
#include "kpz/schur.hpp"
#include "kpz/whittaker.hpp"

namespace kpz::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double wall_ms = 0;
};

struct Check {
  std::string name;
  int criterion;  // acceptance criterion this check belongs to
  bool fast;      // member of the quick suite
  std::function<std::pair<bool, std::string>()> run;
};

inline CheckResult run_check(const Check& c) {
  auto t0 = std::chrono::steady_clock::now();
  CheckResult r;
  r.name = c.name;
  try {
    auto [ok, detail] = c.run();
    r.pass = ok;
    r.detail = detail;
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

namespace detail {

inline std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

inline IntGrid random_int_matrix(std::mt19937_64& rng, std::size_t n, std::size_t N,
                                 long maxval) {
  IntGrid w(n, N);
  std::uniform_int_distribution<long> d(0, maxval);
  for (auto& v : w.raw()) v = d(rng);
  return w;
}

inline RealGrid random_pos_matrix(std::mt19937_64& rng, std::size_t n, std::size_t N,
                                  double lo = 0.2, double hi = 3.0) {
  RealGrid w(n, N);
  std::uniform_real_distribution<double> d(lo, hi);
  for (auto& v : w.raw()) v = d(rng);
  return w;
}

// traces of powers of a symmetric matrix up to k_max via Frobenius pairing
// (tr A^{j+k} = <A^j, A^k>), needing powers only up to ceil(k_max/2)
inline std::vector<double> symmetric_traces(const RealGrid& a, int k_max) {
  int half = (k_max + 1) / 2;
  std::vector<RealGrid> pow{a};
  for (int k = 2; k <= half; ++k) pow.push_back(matmul(pow.back(), a));
  std::vector<double> tr(k_max + 1, 0.0);
  const std::size_t n = a.rows();
  for (int k = 1; k <= k_max; ++k) {
    int i = k / 2, j = k - k / 2;  // 1-based powers i, j with i + j = k
    if (i == 0) {
      tr[k] = trace(pow[j - 1]);
    } else {
      double s = 0;
      const auto& A = pow[i - 1].raw();
      const auto& B = pow[j - 1].raw();
      for (std::size_t t = 0; t < n * n; ++t) s += A[t] * B[t];
      tr[k] = s;  // symmetric: <A^i, A^j> = tr(A^{i+j})
    }
  }
  return tr;
}

inline double tw_series_oracle(double x, std::size_t nodes, int k_max) {
  Airy2Kernel kernel(x);
  std::vector<double> xs, ws;
  halfline_nodes(x, 4.0, nodes, xs, ws);
  RealGrid m = kernel.matrix(xs, ws);
  auto tr = symmetric_traces(m, k_max);
  std::vector<double> e(k_max + 1, 0.0);
  e[0] = 1.0;
  for (int k = 1; k <= k_max; ++k) {
    double s = 0;
    for (int j = 1; j <= k; ++j) s += (j % 2 == 1 ? 1.0 : -1.0) * e[k - j] * tr[j];
    e[k] = s / k;
  }
  double det = 0, sign = 1.0;
  for (int k = 0; k <= k_max; ++k) {
    det += sign * e[k];
    sign = -sign;
  }
  return det;
}

}  // namespace detail

// ---- criterion 1 ----------------------------------------------------------------

inline Check c1_bijectivity() {
  return {"rsk-bijectivity-exhaustive-3x3", 1, true, []() {
            IntGrid w(3, 3);
            for (long code = 0; code < 19683; ++code) {
              long c = code;
              for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) {
                  w(i, j) = c % 3;
                  c /= 3;
                }
              auto a = rsk_forward(w, RskBackend::LocalMoves);
              auto b = rsk_forward(w, RskBackend::Insertion);
              if (!(a.Z == b.Z && a.Zprime == b.Zprime && a.glued == b.glued))
                return std::make_pair(false, std::string("backend mismatch at code ") +
                                                 std::to_string(code));
              if (!(rsk_inverse(a) == w))
                return std::make_pair(false, std::string("round trip failed at code ") +
                                                 std::to_string(code));
            }
            return std::make_pair(true, std::string("19683 cases, both backends, round trip"));
          }};
}

// ---- criterion 2 ----------------------------------------------------------------

inline Check c2_greene() {
  return {"greene-schensted-oracle", 2, true, []() {
            auto wp = permutation_matrix({3, 5, 1, 6, 2, 4, 7});
            auto op = rsk_forward(wp);
            if (!(shape_of(op.Z) == Partition{4, 3}) || lis({3, 5, 1, 6, 2, 4, 7}) != 4)
              return std::make_pair(false, std::string("worked permutation fixture failed"));
            std::mt19937_64 rng(9001);
            std::uniform_int_distribution<std::size_t> nd(1, 4), Nd(1, 5);
            for (int trial = 0; trial < 200; ++trial) {
              std::size_t n = nd(rng), N = Nd(rng);
              auto w = detail::random_int_matrix(rng, n, N, 4);
              auto out = rsk_forward(w);
              for (std::size_t r = 1; r <= 3 && r <= std::min(n, N); ++r) {
                long sum = 0;
                for (std::size_t j = 1; j <= r; ++j) sum += out.Z.at(out.Z.depth(), j);
                long oracle = brute_force_paths(w, greene_query(n, N, r, Semiring::MaxPlus));
                if (sum != oracle)
                  return std::make_pair(false, std::string("greene mismatch, trial ") +
                                                   std::to_string(trial));
              }
            }
            return std::make_pair(true, std::string("200 matrices, r=1..3 exact"));
          }};
}

// ---- criterion 3 ----------------------------------------------------------------

inline Check c3_grsk_identities() {
  return {"grsk-energy-type-polymer", 3, true, []() {
            std::mt19937_64 rng(9002);
            std::uniform_int_distribution<std::size_t> dim(2, 6);
            double worst_energy = 0, worst_type = 0, worst_poly = 0, worst_sw = 0;
            for (int trial = 0; trial < 1000; ++trial) {
              std::size_t n = dim(rng);
              auto w = detail::random_pos_matrix(rng, n, n);
              auto rep = energy_report(w);
              worst_energy = std::max(worst_energy, rep.residual / std::abs(rep.lhs));
              auto out = grsk_forward(w);
              auto tz = type_of(out.Z);
              auto tzp = type_of(out.Zprime);
              for (std::size_t j = 0; j < n; ++j) {
                double col = 1, row = 1;
                for (std::size_t i = 0; i < n; ++i) {
                  col *= w(i, j);
                  row *= w(j, i);
                }
                worst_type = std::max(worst_type, std::abs(tz[j] - col) / col);
                worst_type = std::max(worst_type, std::abs(tzp[j] - row) / row);
              }
              double poly = path_sum(w, {1, 1}, {n, n});
              worst_poly =
                  std::max(worst_poly, std::abs(out.Z.at(n, 1) - poly) / std::abs(poly));
              double sw = strict_weak_partition(w);
              worst_sw = std::max(worst_sw,
                                  std::abs(1.0 / out.Z.at(n, n) - sw) / std::abs(sw));
              // symmetric input: exact equality of patterns
              for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < i; ++j) w(i, j) = w(j, i);
              auto sym = grsk_forward(w);
              if (!(sym.Z == sym.Zprime))
                return std::make_pair(false, std::string("symmetric input Z != Z'"));
            }
            bool ok = worst_energy < 1e-10 && worst_type < 1e-10 && worst_poly < 1e-12 &&
                      worst_sw < 1e-12;
            return std::make_pair(
                ok, "energy " + detail::fmt(worst_energy) + ", type " +
                        detail::fmt(worst_type) + ", polymer " + detail::fmt(worst_poly) +
                        ", strict-weak " + detail::fmt(worst_sw));
          }};
}

// ---- criterion 4 ----------------------------------------------------------------

inline Check c4_jacobian() {
  return {"grsk-volume-preservation", 4, true, []() {
            std::mt19937_64 rng(9003);
            double worst = 0;
            for (int trial = 0; trial < 100; ++trial) {
              auto w = detail::random_pos_matrix(rng, 3, 4, 0.5, 2.0);
              worst = std::max(worst, std::abs(jacobian_logdet(w)));
            }
            return std::make_pair(worst < 1e-4,
                                  "max |log|det J|| = " + detail::fmt(worst));
          }};
}

// ---- criterion 5 ----------------------------------------------------------------

inline Check c5_tropicalization() {
  return {"tropicalization-limit", 5, true, []() {
            auto check_instance = [](const IntGrid& w, double tol) {
              auto ref = rsk_forward(w);
              double prev = -1;
              for (double eps : {1e-1, 1e-2, 1e-3}) {
                auto t = tropicalize(w, eps);
                double err = 0;
                for (std::size_t i = 0; i < ref.glued.raw().size(); ++i)
                  err = std::max(err,
                                 std::abs(t.glued.raw()[i] - ref.glued.raw()[i]));
                if (prev >= 0 && err > prev + 1e-12) return std::make_pair(false, err);
                prev = err;
              }
              return std::make_pair(prev <= tol, prev);
            };
            auto wp = permutation_matrix({3, 5, 1, 6, 2, 4, 7});
            auto [okp, errp] = check_instance(wp, 0.02);
            if (!okp)
              return std::make_pair(false,
                                    "worked fixture err " + detail::fmt(errp));
            std::mt19937_64 rng(9004);
            double worst = errp;
            for (int trial = 0; trial < 50; ++trial) {
              auto w = detail::random_int_matrix(rng, 3, 3, 4);
              auto [ok, err] = check_instance(w, 0.02);
              worst = std::max(worst, err);
              if (!ok)
                return std::make_pair(false, std::string("instance ") +
                                                 std::to_string(trial) + " err " +
                                                 detail::fmt(err));
            }
            return std::make_pair(true, "max err at eps=1e-3: " + detail::fmt(worst));
          }};
}

// ---- criterion 6 ----------------------------------------------------------------

inline Check c6_lpp_threeway(bool fast) {
  std::size_t samples = fast ? 200000 : 1000000;
  return {fast ? "lpp-law-threeway-fast" : "lpp-law-threeway", 6, fast,
          [samples]() {
            // N = 1 closed form, exact rational
            for (long u : {0, 2, 5}) {
              Rat expect = Rat(1) - pow_rat(rat(3, 10) * rat(2, 5), u + 1);
              if (!(lpp_cdf_schur(u, {rat(3, 10)}, {rat(2, 5)}) == expect))
                return std::make_pair(false, std::string("N=1 closed form"));
            }
            std::vector<Rat> pr{rat(3, 10), rat(2, 5)}, qr{rat(3, 10), rat(2, 5)};
            std::vector<double> p{0.3, 0.4}, q{0.3, 0.4};
            std::vector<long> us;
            for (long u = 0; u <= 12; ++u) us.push_back(u);
            auto mc = lpp_cdf_mc(us, p, q, samples, 4242);
            double worst_det = 0, worst_z = 0;
            for (std::size_t i = 0; i < us.size(); ++i) {
              double exact = to_double(lpp_cdf_schur(us[i], pr, qr));
              double fred = lpp_cdf_fredholm(us[i], p, q, 64);
              worst_det = std::max(worst_det, std::abs(exact - fred));
              // sigma from the exact binomial probability (the sample stderr
              // degenerates when every draw lands on one side)
              double sigma = std::sqrt(exact * (1 - exact) / samples) + 1e-15;
              worst_z = std::max(worst_z, std::abs(mc[i].mean - exact) / sigma);
            }
            bool ok = worst_det < 1e-8 && worst_z < 3.0;
            return std::make_pair(ok, "max |schur-fredholm| = " + detail::fmt(worst_det) +
                                          ", max MC z = " + detail::fmt(worst_z));
          }};
}

// ---- criterion 7 ----------------------------------------------------------------

inline Check c7_fredholm_engine() {
  return {"fredholm-engine-identities", 7, true, []() {
            // rank-one closed form
            auto phi = [](double x) { return std::cos(x) + 1.5; };
            auto psi = [](double y) { return std::exp(-y); };
            std::vector<double> xs, ws;
            gl_mapped(32, 0.0, 1.0, xs, ws);
            auto k1 = [&](double x, double y) { return phi(x) * psi(y); };
            double det = det_one_plus(nystrom_matrix(k1, xs, ws));
            double expect =
                1.0 + gl_integrate([&](double t) { return phi(t) * psi(t); }, 0, 1, 64);
            if (std::abs(det - expect) > 1e-12)
              return std::make_pair(false, std::string("rank-one closed form"));

            // det(I+AB) = det(I+BA)
            auto a = [](double x, double y) { return std::sin(x + y) + 0.3 * x * y; };
            auto b = [](double y, double x) { return std::exp(-x * y) + 0.2 * x; };
            std::vector<double> ys, wy;
            gl_mapped(48, 0.0, 1.0, ys, wy);
            std::vector<double> x2s, wx2;
            gl_mapped(48, 0.0, 2.0, x2s, wx2);
            auto ab = [&](double x, double xp) {
              double s = 0;
              for (std::size_t k = 0; k < ys.size(); ++k) s += wy[k] * a(x, ys[k]) * b(ys[k], xp);
              return s;
            };
            auto ba = [&](double y, double yp) {
              double s = 0;
              for (std::size_t k = 0; k < x2s.size(); ++k)
                s += wx2[k] * b(y, x2s[k]) * a(x2s[k], yp);
              return s;
            };
            double dab = det_one_plus(nystrom_matrix(ab, x2s, wx2));
            double dba = det_one_plus(nystrom_matrix(ba, ys, wy));
            if (std::abs(dab - dba) > 1e-8)
              return std::make_pair(false, "det(I+AB) vs det(I+BA): " +
                                               detail::fmt(std::abs(dab - dba)));

            // finite-matrix eigenproduct
            std::mt19937_64 rng(9005);
            std::uniform_real_distribution<double> d(-0.4, 0.4);
            for (int trial = 0; trial < 10; ++trial) {
              RealGrid m(5, 5);
              for (std::size_t i = 0; i < 5; ++i)
                for (std::size_t j = i; j < 5; ++j) m(i, j) = m(j, i) = d(rng);
              double prod = 1;
              for (double l : symmetric_eigenvalues(m)) prod *= 1 + l;
              if (std::abs(det_one_plus(m) - prod) > 1e-12)
                return std::make_pair(false, std::string("eigenproduct identity"));
            }

            // biorthogonal identity on the N=2 geometric instance
            Rat resid = biorthogonal_fredholm_residual({rat(3, 10), rat(2, 5)},
                                                       {rat(3, 10), rat(2, 5)}, 5, 64);
            if (!(resid < rat(1, 10000000000L)))
              return std::make_pair(false, std::string("biorthogonal residual too large"));
            return std::make_pair(true, std::string("all identities within tolerance"));
          }};
}

// ---- criterion 8 ----------------------------------------------------------------

inline Check c8_tracy_widom_core() {
  return {"tracy-widom-gue", 8, true, []() {
            if (!(tw_gue_cdf(6.0, 64) > 1 - 1e-8))
              return std::make_pair(false, std::string("right limit"));
            if (!(tw_gue_cdf(-8.0, 96) < 1e-3))
              return std::make_pair(false, std::string("left limit"));
            double prev = -1;
            for (int i = 0; i < 50; ++i) {
              double x = -6.0 + 12.0 * i / 49.0;
              double v = tw_gue_cdf(x, 64);
              if (v < prev - 1e-10)
                return std::make_pair(false, "monotonicity at x = " + detail::fmt(x));
              prev = v;
            }
            auto r = tw_gue_cdf_result(0.0, 96);
            if (!(r.self_delta < 1e-8))
              return std::make_pair(false,
                                    "self-convergence " + detail::fmt(r.self_delta));
            double worst = 0;
            for (double x : {-2.0, 0.0, 2.0}) {
              double nys = tw_gue_cdf(x, 96);
              double oracle = detail::tw_series_oracle(x, 960, 10);
              worst = std::max(worst, std::abs(nys - oracle));
            }
            return std::make_pair(worst < 1e-6,
                                  "max |nystrom - series oracle| = " + detail::fmt(worst));
          }};
}

inline Check c8_kexp_limit() {
  return {"kexp-tracy-widom-trend", 8, false, []() {
            const double a = 1.0;
            const std::size_t N = 200;
            const double f = 2.0 / a;
            const double sigma = std::cbrt(2.0 / (a * a * a));
            std::vector<double> alpha(N, a), beta(N, a);
            ExpKernel kernel(alpha, beta, 32, 96);
            double worst = 0;
            for (double x : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
              double u = f * N + sigma * std::cbrt(static_cast<double>(N)) * x;
              double fn = lpp_exp_cdf(kernel, u, 64, 4.0 * sigma * std::cbrt((double)N)).value;
              double f2 = tw_gue_cdf(x, 96);
              worst = std::max(worst, std::abs(fn - f2));
            }
            return std::make_pair(worst < 0.02,
                                  "max |F_N - F_2| = " + detail::fmt(worst) + " at N=200");
          }};
}

// ---- criterion 9 ----------------------------------------------------------------

inline Check c9_whittaker(bool fast) {
  return {fast ? "whittaker-loggamma-fast" : "whittaker-loggamma", 9, fast, [fast]() {
            // n = 1 exact
            if (bump_stade_residual({0.9}, {1.2}) > 1e-10)
              return std::make_pair(false, std::string("bump-stade n=1"));
            if (loggamma_laplace_contour(0.0, {1.1}, {0.4}) != 1.0)
              return std::make_pair(false, std::string("laplace at s=0"));

            // bump-stade n=2 across parameter draws
            std::vector<std::pair<std::vector<double>, std::vector<double>>> draws = {
                {{0.8, 1.1}, {0.9, 1.3}},
                {{0.7, 1.0}, {1.1, 0.8}},
                {{1.2, 0.9}, {0.7, 1.0}},
                {{1.0, 1.4}, {0.6, 0.9}},
                {{0.9, 0.9}, {1.0, 1.2}}};
            std::size_t ndraws = fast ? 2 : draws.size();
            std::size_t order = fast ? 12 : 16;
            double worst_bs = 0;
            for (std::size_t i = 0; i < ndraws; ++i) {
              double r = bump_stade_residual(draws[i].first, draws[i].second, order, order);
              worst_bs = std::max(worst_bs, r);
            }
            if (worst_bs > 1e-5)
              return std::make_pair(false, "bump-stade residual " + detail::fmt(worst_bs));

            // laplace transform, contour vs MC
            std::vector<double> alpha{0.9, 1.2}, beta{0.3, 0.5};
            std::size_t reps = fast ? 200000 : 1000000;
            double worst_z = 0;
            for (double s : {0.1, 0.5, 2.0}) {
              double contour = loggamma_laplace_contour(s, alpha, beta);
              auto mc = loggamma_laplace_mc(2, s, alpha, beta, reps, 777,
                                            std::thread::hardware_concurrency());
              worst_z = std::max(worst_z, std::abs(contour - mc.mean) / mc.stderr_);
            }
            bool ok = worst_z < 3.0;
            return std::make_pair(ok, "bump-stade " + detail::fmt(worst_bs) +
                                          ", laplace max z = " + detail::fmt(worst_z));
          }};
}

// ---- criterion 10 ----------------------------------------------------------------

inline Check c10_symmetric_functions() {
  return {"symmetric-function-identities", 10, true, []() {
            std::mt19937_64 rng(9006);
            std::uniform_int_distribution<long> num(1, 9), den(2, 7);
            // gt-sum == bialternant exactly
            for (std::size_t n = 1; n <= 4; ++n)
              for (long size = 0; size <= 8; size += 2) {
                bool ok = true;
                partitions_of(size, n, [&](const Partition& la) {
                  std::vector<Rat> x(n);
                  // numerators distinct mod 7 across i, so the x_i never collide
                  for (std::size_t i = 0; i < n; ++i)
                    x[i] = rat(7 * num(rng) + static_cast<long>(i) + 1, 7);
                  if (!(schur_gt_sum(la, x) == schur_bialternant(la, x))) ok = false;
                });
                if (!ok) return std::make_pair(false, std::string("gt-sum != bialternant"));
              }
            // macdonald reduces to schur at q = t, exactly
            Rat q = rat(2, 5);
            bool mac_ok = true;
            partitions_of(5, 3, [&](const Partition& la) {
              std::vector<Rat> x{rat(1, 2), rat(1, 3), rat(2, 7)};
              if (!(macdonald_exact(la, Partition(), x, q, q) == schur_gt_sum(la, x)))
                mac_ok = false;
            });
            if (!mac_ok) return std::make_pair(false, std::string("macdonald != schur at q=t"));

            // cauchy residuals
            double rs = cauchy_residual({0.3, 0.2}, {0.3, 0.2}, 0, 0, CauchyFamily::Schur, 12);
            double rm = cauchy_residual({0.2}, {0.3}, 0.4, 0.1, CauchyFamily::Macdonald, 20);
            if (rs > 1e-8 || rm > 1e-9)
              return std::make_pair(false, "cauchy residuals " + detail::fmt(rs) + ", " +
                                               detail::fmt(rm));

            // skew-cauchy grid
            double worst_skew = 0;
            std::vector<Partition> smalls;
            for (long s = 0; s <= 3; ++s)
              partitions_of(s, 2, [&](const Partition& p) { smalls.push_back(p); });
            for (const auto& la : smalls)
              for (const auto& nu : smalls)
                worst_skew = std::max(
                    worst_skew, skew_cauchy_residual(la, nu, {0.3}, {0.25}, 0.3, 0.12,
                                                     la.size() + nu.size() + 14));
            if (worst_skew > 1e-8)
              return std::make_pair(false, "skew-cauchy " + detail::fmt(worst_skew));

            // pieri verifiers: schur exact, macdonald numeric
            std::vector<Rat> xr{rat(1), rat(2), rat(3)};
            Rat h1 = xr[0] + xr[1] + xr[2];
            for (const Partition& la : {Partition{2, 1}, Partition{3}, Partition{}}) {
              Rat lhs = h1 * schur_gt_sum(la, xr);
              Rat rhs(0);
              for (const auto& nu : pieri_h1(la))
                if (nu.length() <= 3) rhs += schur_gt_sum(nu, xr);
              if (!(lhs == rhs)) return std::make_pair(false, std::string("schur pieri"));
            }
            std::vector<double> xd{0.4, 0.7, 0.2};
            double qq = 0.3, tt = 0.2;
            for (const Partition& mu : {Partition{1}, Partition{2, 1}}) {
              double g1 = macdonald(Partition{1}, xd, qq, tt, MacWhich::Q);
              double lhs = g1 * macdonald(mu, xd, qq, tt);
              double rhs = 0;
              for (const auto& term : pieri_apply(mu, qq, tt, PieriRule::MacdonaldG1))
                rhs += term.coefficient * macdonald(term.nu, xd, qq, tt);
              if (std::abs(lhs - rhs) > 1e-10)
                return std::make_pair(false, std::string("macdonald g1 pieri"));
              double e1 = xd[0] + xd[1] + xd[2];
              double lhs2 = e1 * macdonald(mu, xd, qq, tt);
              double rhs2 = 0;
              for (const auto& term : pieri_apply(mu, qq, tt, PieriRule::MacdonaldE1))
                rhs2 += term.coefficient * macdonald(term.nu, xd, qq, tt);
              if (std::abs(lhs2 - rhs2) > 1e-10)
                return std::make_pair(false, std::string("macdonald e1 pieri"));
            }
            return std::make_pair(true, std::string("all identities hold"));
          }};
}

// ---- criterion 11 ----------------------------------------------------------------

inline Check c11_intertwining_exact() {
  return {"intertwining-exact", 11, true, []() {
            for (std::size_t n = 1; n <= 3; ++n) {
              std::vector<Rat> x;
              for (std::size_t i = 0; i < n; ++i) x.push_back(rat(i + 1, 1));
              long M = n == 3 ? 6 : 8;
              auto rep = intertwining_residual_schur(n, x, M);
              if (!(rep.max_residual == Rat(0)))
                return std::make_pair(false, "schur residual nonzero at n=" +
                                                 std::to_string(n));
            }
            auto mac =
                intertwining_residual_macdonald(rat(1, 3), rat(1, 5), {rat(1), rat(1, 2)}, 6);
            if (!(mac.max_residual == Rat(0)))
              return std::make_pair(false, std::string("macdonald residual nonzero"));
            if (mac.leakage > 1e-3)
              return std::make_pair(false, "macdonald row-mass leakage " +
                                               detail::fmt(mac.leakage));

            // total-rate conservation via Doob harmonicity, |la| <= 8
            std::vector<Rat> xg{rat(2, 3), rat(5, 4)};
            Rat h1 = xg[0] + xg[1];
            for (long size = 0; size <= 8; ++size) {
              bool ok = true;
              partitions_of(size, 2, [&](const Partition& p) {
                Rat tot(0);
                for (std::size_t i = 0; i <= p.length(); ++i) {
                  if (!p.valid_after_increment(i)) continue;
                  Partition nu = p.add_box(i);
                  if (nu.length() <= 2) tot += schur_doob_rate(p, nu, xg);
                }
                if (!(tot == h1)) ok = false;
              });
              if (!ok) return std::make_pair(false, std::string("doob harmonicity"));
            }

            // q-whittaker blocked rate and q-TASEP marginal forms
            IntGt blocked{{2}, {3, 2}};
            if (qwhittaker_rate(blocked, 2, 2, {1.0, 2.0}, 0.4) != 0.0)
              return std::make_pair(false, std::string("blocked rate nonzero"));
            std::mt19937_64 rng(9007);
            for (int trial = 0; trial < 100; ++trial) {
              IntGt z(3);
              z.at(1, 1) = trial % 5;
              z.at(2, 1) = z.at(1, 1) + trial % 3;
              z.at(2, 2) = std::max(0L, z.at(1, 1) - 1);
              z.at(3, 1) = z.at(2, 1) + 1;
              z.at(3, 2) = z.at(2, 2);
              z.at(3, 3) = 0;
              if (!validate_gt(z)) continue;
              for (std::size_t k = 2; k <= 3; ++k) {
                double gap = static_cast<double>(z.at(k - 1, k - 1) - z.at(k, k));
                double expect = 1.3 * (1 - std::pow(0.45, gap));
                if (std::abs(qwhittaker_rate(z, k, k, {1.3, 1.3, 1.3}, 0.45) - expect) > 1e-14)
                  return std::make_pair(false, std::string("q-TASEP marginal rate"));
              }
            }
            return std::make_pair(true, std::string("exact residuals, rates verified"));
          }};
}

inline Check c11_pitman_rogers(bool fast) {
  std::size_t reps = fast ? 20000 : 100000;
  return {fast ? "pitman-rogers-mc-fast" : "pitman-rogers-mc", 11, fast, [reps]() {
            auto rep = pitman_rogers_distance(Partition{1}, {1.0, 1.0}, {0.5, 1.0}, reps, 2024);
            double worst = 0;
            for (double z : rep.max_z) worst = std::max(worst, z);
            auto burke = burke_transform_ks(0.8, 2.1, 100000, 31415);
            bool burke_ok = burke.ks_u < 1.63 && burke.ks_v < 1.63 && burke.ks_y < 1.63;
            bool ok = worst < 3.5 && burke_ok;
            return std::make_pair(ok, "max per-state z = " + detail::fmt(worst) +
                                          ", burke KS = " + detail::fmt(burke.ks_u) + "/" +
                                          detail::fmt(burke.ks_v) + "/" +
                                          detail::fmt(burke.ks_y));
          }};
}

// ---- registry ---------------------------------------------------------------------

inline std::vector<Check> all_checks(bool fast_suite) {
  std::vector<Check> checks = {
      c1_bijectivity(),      c2_greene(),
      c3_grsk_identities(),  c4_jacobian(),
      c5_tropicalization(),  c6_lpp_threeway(fast_suite),
      c7_fredholm_engine(),  c8_tracy_widom_core(),
      c9_whittaker(fast_suite), c10_symmetric_functions(),
      c11_intertwining_exact(), c11_pitman_rogers(fast_suite),
  };
  if (!fast_suite) checks.push_back(c8_kexp_limit());
  return checks;
}

}  // namespace kpz::verify
