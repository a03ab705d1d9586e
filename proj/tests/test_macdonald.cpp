#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "kpz/macdonald.hpp"
#include "kpz/schur.hpp"

using namespace kpz;

TEST_CASE("q-pochhammer basics") {
  CHECK(qpochhammer_inf(0.0, 0.7) == 1.0);
  CHECK(qpochhammer_inf(0.4, 0.0) == doctest::Approx(0.6).epsilon(1e-15));

  // direct-product oracle for the Euler value (0.5; 0.5)_inf
  double direct = 1.0, aqk = 0.5;
  for (int k = 0; k < 200; ++k) {
    direct *= 1.0 - aqk;
    aqk *= 0.5;
  }
  CHECK(std::abs(qpochhammer_inf(0.5, 0.5) - direct) < 1e-12);
  CHECK(direct == doctest::Approx(0.2887880950866024).epsilon(1e-12));

  CHECK_THROWS(qpochhammer_inf(0.5, 1.0));
  CHECK(qpochhammer_finite(0.5, 0.5, 1) == doctest::Approx(0.5));
  CHECK(qq_finite(rat(1, 2), 2) == rat(1, 2) * rat(3, 4));
  CHECK(qq_range(rat(1, 2), 1, 3) == rat(3, 4) * rat(7, 8));
  CHECK(qq_range(rat(1, 2), 2, 2) == rat(1));
}

TEST_CASE("skew coefficients: q=t collapse and t=0 forms") {
  // q = t: phi = psi = 1 on any horizontal strip
  CHECK(skew_phi(Partition{3, 1}, Partition{2}, 0.37, 0.37) == 1.0);
  CHECK(skew_psi(Partition{3, 1}, Partition{2}, 0.37, 0.37) == 1.0);

  // non-strip input gives zero
  CHECK(skew_phi(Partition{4, 3}, Partition{2, 1}, 0.3, 0.2) == 0.0);
  CHECK(skew_psi_prime(Partition{3, 1}, Partition{1, 1}, 0.3, 0.2) == 0.0);

  // t=0 single box in row j: phi = (1 - q^{mu_{j-1}-mu_j}) / (1-q), mu_0 = inf
  double q = 0.3;
  // row 1 (j=1): phi = 1/(1-q)
  CHECK(skew_phi(Partition{3}, Partition{2}, q, 0.0) == doctest::Approx(1 / (1 - q)));
  // row 2: mu = (2,1) -> la = (2,2): phi = (1-q^{2-1})/(1-q) = 1
  CHECK(skew_phi(Partition{2, 2}, Partition{2, 1}, q, 0.0) ==
        doctest::Approx((1 - std::pow(q, 1)) / (1 - q)));
  // la=(2,1)/mu=(2): box in row 2, mu_1 - mu_2 = 2: phi = (1-q^2)/(1-q)
  CHECK(skew_phi(Partition{2, 1}, Partition{2}, q, 0.0) ==
        doctest::Approx((1 - q * q) / (1 - q)));

  // exact t=0 forms match the generic f-ratio evaluation on wider strips
  std::vector<std::pair<Partition, Partition>> strips = {
      {Partition{4, 2}, Partition{3, 1}}, {Partition{5, 3, 1}, Partition{4, 2}},
      {Partition{3, 3}, Partition{3, 2}}, {Partition{6, 2}, Partition{2, 2}},
      {Partition{4, 4, 2}, Partition{4, 3, 1}}};
  for (const auto& [la, mu] : strips) {
    REQUIRE(la.horizontal_strip_over(mu));
    double phi_gen = skew_phi(la, mu, q, 0.0);
    double psi_gen = skew_psi(la, mu, q, 0.0);
    double phi_ex = to_double(skew_phi_exact(la, mu, rat(3, 10), rat(0)));
    double psi_ex = to_double(skew_psi_exact(la, mu, rat(3, 10), rat(0)));
    CHECK(phi_gen == doctest::Approx(phi_ex).epsilon(1e-12));
    CHECK(psi_gen == doctest::Approx(psi_ex).epsilon(1e-12));
  }
}

TEST_CASE("psi-prime single-box relation") {
  // |la/mu| = 1: psi' = (1-q)/(1-t) * phi. The constant is forced by
  // g_1 = Q_(1) = (1-t)/(1-q) e_1 together with the two r=1 Pieri rules.
  double q = 0.35, t = 0.15;
  std::vector<std::pair<Partition, Partition>> boxes = {
      {Partition{3}, Partition{2}},
      {Partition{2, 2}, Partition{2, 1}},
      {Partition{4, 2, 1}, Partition{4, 2}},
      {Partition{1}, Partition{}}};
  for (const auto& [la, mu] : boxes) {
    double lhs = to_double(skew_psi_prime<double>(la, mu, q, t));
    double rhs = (1 - q) / (1 - t) * skew_phi(la, mu, q, t);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
  // and indeed Q_(1)(x) = (1-t)/(1-q) * P_(1)(x)
  std::vector<double> x{0.4, 0.9};
  CHECK(macdonald(Partition{1}, x, q, t, MacWhich::Q) ==
        doctest::Approx((1 - t) / (1 - q) * (0.4 + 0.9)).epsilon(1e-12));
}

TEST_CASE("macdonald reduces to schur at q=t, exactly") {
  std::mt19937_64 rng(401);
  std::uniform_int_distribution<long> num(1, 6), den(2, 7);
  Rat q = rat(1, 3);
  for (long size = 0; size <= 6; ++size) {
    partitions_of(size, 3, [&](const Partition& la) {
      std::vector<Rat> x{rat(num(rng), den(rng)), rat(num(rng), den(rng)),
                         rat(num(rng), den(rng))};
      REQUIRE(macdonald_exact(la, Partition(), x, q, q, MacWhich::P) == schur_gt_sum(la, x));
      REQUIRE(macdonald_exact(la, Partition(), x, q, q, MacWhich::Q) == schur_gt_sum(la, x));
    });
  }
}

TEST_CASE("P_(1) is the power sum in one box; Q over lambda/lambda is 1") {
  double q = 0.4, t = 0.15;
  std::vector<double> x{0.3, 0.5, 0.9};
  CHECK(macdonald(Partition{1}, x, q, t) == doctest::Approx(0.3 + 0.5 + 0.9).epsilon(1e-12));
  CHECK(macdonald(Partition{2, 1}, Partition{2, 1}, x, q, t, MacWhich::Q) == 1.0);
}

TEST_CASE("single-variable skew forms") {
  double q = 0.25, t = 0.1;
  Partition la{3, 1}, mu{2};
  std::vector<double> x1{0.7};
  CHECK(macdonald(la, mu, x1, q, t, MacWhich::Q) ==
        doctest::Approx(skew_phi(la, mu, q, t) * std::pow(0.7, 2)).epsilon(1e-12));
  CHECK(macdonald(la, mu, x1, q, t, MacWhich::P) ==
        doctest::Approx(skew_psi(la, mu, q, t) * std::pow(0.7, 2)).epsilon(1e-12));
}

TEST_CASE("cauchy identities") {
  // x = y = (0): both sides 1
  CHECK(cauchy_residual({0.0}, {0.0}, 0.3, 0.3, CauchyFamily::Schur, 4) == 0.0);

  // Schur: x = y = (0.3, 0.2), L = 12
  CHECK(cauchy_residual({0.3, 0.2}, {0.3, 0.2}, 0.0, 0.0, CauchyFamily::Schur, 12) < 1e-8);

  // Macdonald: q=0.4, t=0.1, x=(0.2), y=(0.3), L = 20
  CHECK(cauchy_residual({0.2}, {0.3}, 0.4, 0.1, CauchyFamily::Macdonald, 20) < 1e-9);

  // residual decreases with L
  double r8 = cauchy_residual({0.3, 0.2}, {0.3, 0.2}, 0.0, 0.0, CauchyFamily::Schur, 8);
  double r12 = cauchy_residual({0.3, 0.2}, {0.3, 0.2}, 0.0, 0.0, CauchyFamily::Schur, 12);
  CHECK(r12 < r8);
}

TEST_CASE("skew cauchy identity on small instances") {
  double q = 0.3, t = 0.12;
  std::vector<Partition> smalls;
  for (long s = 0; s <= 3; ++s)
    partitions_of(s, 2, [&](const Partition& p) { smalls.push_back(p); });
  for (const auto& la : smalls)
    for (const auto& nu : smalls) {
      double r = skew_cauchy_residual(la, nu, {0.3}, {0.25}, q, t,
                                      la.size() + nu.size() + 14);
      CHECK(r < 1e-8);
    }
}

TEST_CASE("macdonald pieri verifiers") {
  double q = 0.3, t = 0.0;
  std::vector<double> x{0.4, 0.7, 0.2};

  // g1 rule: g_1(x) * P_mu = sum phi_{la/mu} P_la; g_1 = Q_(1)
  for (const Partition& mu : {Partition{1}, Partition{2, 1}, Partition{3, 1}}) {
    double g1 = macdonald(Partition{1}, x, q, t, MacWhich::Q);
    double lhs = g1 * macdonald(mu, x, q, t, MacWhich::P);
    double rhs = 0;
    for (const auto& term : pieri_apply(mu, q, t, PieriRule::MacdonaldG1))
      rhs += term.coefficient * macdonald(term.nu, x, q, t, MacWhich::P);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    // coefficients are the phi skew coefficients
    for (const auto& term : pieri_apply(mu, q, t, PieriRule::MacdonaldG1))
      CHECK(term.coefficient == doctest::Approx(skew_phi(term.nu, mu, q, t)));
  }

  // e1 rule at generic (q,t): e_1 * P_mu = sum psi'_{la/mu} P_la
  double t2 = 0.2;
  for (const Partition& mu : {Partition{1}, Partition{2}, Partition{2, 1}}) {
    double e1 = x[0] + x[1] + x[2];
    double lhs = e1 * macdonald(mu, x, q, t2, MacWhich::P);
    double rhs = 0;
    for (const auto& term : pieri_apply(mu, q, t2, PieriRule::MacdonaldE1))
      rhs += term.coefficient * macdonald(term.nu, x, q, t2, MacWhich::P);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
  }
}
