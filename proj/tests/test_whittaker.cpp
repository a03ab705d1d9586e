#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "kpz/whittaker.hpp"

using namespace kpz;

namespace {

// Modified Bessel K_nu by its cosh integral; the independent oracle for the
// n = 2 Whittaker function.
double bessel_k(double nu, double z) {
  return gl_integrate([&](double t) { return std::exp(-z * std::cosh(t)) * std::cosh(nu * t); },
                      0.0, 20.0, 400);
}

// Lanczos gamma (same coefficients as in test_special) for the Sklyanin oracle.
Cplx lanczos_gamma(Cplx z) {
  static const double coef[9] = {0.99999999999980993,  676.5203681218851,
                                 -1259.1392167224028,  771.32342877765313,
                                 -176.61502916214059,  12.507343278686905,
                                 -0.13857109526572012, 9.9843695780195716e-6,
                                 1.5056327351493116e-7};
  if (z.real() < 0.5) return M_PI / (std::sin(M_PI * z) * lanczos_gamma(1.0 - z));
  z -= 1.0;
  Cplx x = coef[0];
  for (int i = 1; i < 9; ++i) x += coef[i] / (z + static_cast<double>(i));
  Cplx t = z + 7.5;
  return std::sqrt(2 * M_PI) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

}  // namespace

TEST_CASE("whittaker n=1 closed form") {
  CHECK(whittaker_gln_real({0.7}, {2.0}) == doctest::Approx(std::pow(2.0, -0.7)).epsilon(1e-15));
  Cplx v = whittaker_gln_raw({Cplx(0.3, 1.1)}, {1.7});
  Cplx expect = std::exp(-Cplx(0.3, 1.1) * std::log(1.7));
  CHECK(std::abs(v - expect) < 1e-15);
}

TEST_CASE("whittaker n=2 against the Bessel-K oracle") {
  for (auto [l1, l2, x1, x2] : std::vector<std::array<double, 4>>{
           {0.8, 0.3, 1.0, 2.0}, {1.1, -0.4, 0.5, 1.5}, {0.2, 0.2, 2.0, 0.7}}) {
    double psi = whittaker_gln_real({l1, l2}, {x1, x2});
    double oracle = std::pow(x1 * x2, -(l1 + l2) / 2) * 2.0 *
                    bessel_k(l1 - l2, 2.0 * std::sqrt(x2 / x1));
    CHECK(psi == doctest::Approx(oracle).epsilon(1e-9));
  }
}

TEST_CASE("whittaker scaling and inversion identities, n=2") {
  std::mt19937_64 rng(601);
  std::uniform_real_distribution<double> d(0.5, 2.0);
  for (int trial = 0; trial < 10; ++trial) {
    double x1 = d(rng), x2 = d(rng), s = 2.0;
    std::vector<Cplx> la{Cplx(0.6), Cplx(-0.2)};
    double lhs = whittaker_gln_raw(la, {s * x1, s * x2}).real();
    double rhs = std::pow(s, -(0.6 - 0.2)) * whittaker_gln_raw(la, {x1, x2}).real();
    CHECK(std::abs(lhs - rhs) / std::abs(rhs) < 1e-6);

    // inversion: Psi_alpha(x) = Psi_{-alpha}(x'), x'_i = 1/x_{n-i+1}
    std::vector<Cplx> nla{-la[0], -la[1]};
    double inv = whittaker_gln_raw(nla, {1 / x2, 1 / x1}).real();
    double base = whittaker_gln_raw(la, {x1, x2}).real();
    CHECK(std::abs(base - inv) / std::abs(base) < 1e-6);
  }
}

TEST_CASE("whittaker n=3 scaling and self-convergence") {
  std::vector<Cplx> la{Cplx(0.5), Cplx(0.1), Cplx(-0.3)};
  std::vector<double> x{0.8, 1.1, 1.4};
  auto r = whittaker_gln(la, x, 10);
  CHECK(r.converged);
  double s = 1.7;
  double lhs = whittaker_gln_raw(la, {s * x[0], s * x[1], s * x[2]}, 10).real();
  double rhs = std::pow(s, -0.3) * whittaker_gln_raw(la, x, 10).real();
  CHECK(std::abs(lhs - rhs) / std::abs(rhs) < 1e-5);
}

TEST_CASE("bump-stade identity") {
  // n = 1 reduces to the gamma integral
  CHECK(bump_stade_residual({0.9}, {1.2}) < 1e-10);

  // n = 2
  double r = bump_stade_residual({0.8, 1.1}, {0.9, 1.3});
  double scale = std::tgamma(0.8 + 0.9) * std::tgamma(0.8 + 1.3) * std::tgamma(1.1 + 0.9) *
                 std::tgamma(1.1 + 1.3);
  CHECK(r / scale < 1e-5);

  // integrand is symmetric under swapping the parameter vectors
  CHECK(bump_stade_residual({0.8, 1.1}, {0.9, 1.3}) ==
        doctest::Approx(bump_stade_residual({0.9, 1.3}, {0.8, 1.1})).epsilon(1e-12));

  // residual shrinks as quadrature refines
  double coarse = bump_stade_residual({0.8, 1.1}, {0.9, 1.3}, 8, 8);
  double fine = bump_stade_residual({0.8, 1.1}, {0.9, 1.3}, 20, 20);
  CHECK(fine <= coarse + 1e-12);

  CHECK_THROWS(bump_stade_residual({0.5}, {-0.6}));
}

TEST_CASE("sklyanin measure") {
  // n = 1: empty product, 1/(2 pi i)
  Cplx s1 = sklyanin({Cplx(0.3, 0.4)});
  CHECK(std::abs(s1 - 1.0 / Cplx(0, 2 * M_PI)) < 1e-15);

  // conjugate symmetry: lambda -> -conj(lambda) conjugates the value
  std::vector<Cplx> la{Cplx(0, 0.5), Cplx(0, -0.5)};
  std::vector<Cplx> mla{-std::conj(la[0]), -std::conj(la[1])};
  Cplx a = sklyanin(la), b = sklyanin(mla);
  CHECK(std::abs(a - std::conj(b)) < 1e-14 * std::abs(a));

  // n = 2 against the Lanczos oracle
  Cplx direct = 1.0 / (std::pow(Cplx(0, 2 * M_PI), 2.0) * 2.0 *
                       lanczos_gamma(la[0] - la[1]) * lanczos_gamma(la[1] - la[0]));
  CHECK(std::abs(sklyanin(la) - direct) < 1e-12 * std::abs(direct));

  CHECK_THROWS(sklyanin({Cplx(0, 0.5), Cplx(0, 0.5)}));
}

TEST_CASE("log-gamma laplace transform: n=1 contour vs direct quadrature") {
  double alpha = 1.1, beta = 0.4;
  CHECK(loggamma_laplace_contour(0.0, {alpha}, {beta}) == 1.0);
  for (double s : {0.1, 0.5, 2.0}) {
    double contour = loggamma_laplace_contour(s, {alpha}, {beta});
    double direct = inverse_gamma_laplace_quadrature(alpha + beta, s);
    CHECK(contour == doctest::Approx(direct).epsilon(1e-6));
  }
}

TEST_CASE("log-gamma laplace transform: n=2 contour vs monte carlo") {
  std::vector<double> alpha{0.9, 1.2}, beta{0.3, 0.5};
  for (double s : {0.1, 0.5, 2.0}) {
    double contour = loggamma_laplace_contour(s, alpha, beta);
    auto mc = loggamma_laplace_mc(2, s, alpha, beta, 200000, 777, 2);
    CHECK(std::abs(contour - mc.mean) < 3.0 * mc.stderr_ + 1e-4);
    CHECK(contour > 0);
    CHECK(contour < 1);
  }
}

TEST_CASE("laplace mc determinism and thread invariance") {
  std::vector<double> alpha{0.9, 1.2}, beta{0.3, 0.5};
  auto a = loggamma_laplace_mc(2, 0.5, alpha, beta, 20000, 42, 1);
  auto b = loggamma_laplace_mc(2, 0.5, alpha, beta, 20000, 42, 4);
  CHECK(a.mean == b.mean);  // bitwise: chunked streams, ordered reduction
  auto c = loggamma_laplace_mc(2, 0.5, alpha, beta, 20000, 43, 1);
  CHECK(a.mean != c.mean);
  CHECK_THROWS(loggamma_laplace_mc(2, 0.5, alpha, beta, 50, 42));
}

TEST_CASE("laplace contour parameter window validation") {
  CHECK_THROWS(loggamma_laplace_contour(0.5, {0.9, 1.2}, {1.0, 1.1}));  // no valid delta
  CHECK_THROWS(loggamma_laplace_contour(0.5, {0.9}, {0.3}, 0.95));      // delta >= alpha
  CHECK_THROWS(loggamma_laplace_contour(0.5, {0.9}, {0.3}, 0.2));       // delta <= |beta|
}
