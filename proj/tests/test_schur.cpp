#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kpz/rational.hpp"
#include "kpz/schur.hpp"

using namespace kpz;

TEST_CASE("schur pinned small values") {
  // s_(1)(x1,x2) = x1 + x2
  std::vector<Rat> x{rat(2), rat(5)};
  CHECK(schur_gt_sum(Partition{1}, x) == rat(7));
  CHECK(schur_bialternant(Partition{1}, x) == rat(7));

  // s_(2,1)(1,1) = 2
  std::vector<Rat> ones{rat(1), rat(1)};
  CHECK(schur_gt_sum(Partition{2, 1}, ones) == rat(2));

  // bialternant by hand: s_(2,1)(x1,x2) = x1 x2 (x1 + x2)
  std::vector<Rat> xy{rat(3), rat(4)};
  CHECK(schur_bialternant(Partition{2, 1}, xy) == rat(3) * rat(4) * rat(7));

  // empty partition
  CHECK(schur_gt_sum(Partition{}, xy) == rat(1));
  // length exceeding variable count
  CHECK(schur_gt_sum(Partition{1, 1, 1}, xy) == rat(0));
}

TEST_CASE("gt-sum equals bialternant exactly, |lambda| <= 8, n <= 4") {
  std::mt19937_64 rng(301);
  std::uniform_int_distribution<long> num(1, 12), den(1, 6);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (long size = 0; size <= 8; ++size) {
      partitions_of(size, n, [&](const Partition& la) {
        std::vector<Rat> x(n);
        // distinct rationals
        while (true) {
          for (auto& v : x) v = rat(num(rng), den(rng));
          bool distinct = true;
          for (std::size_t i = 0; i < n && distinct; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
              if (x[i] == x[j]) distinct = false;
          if (distinct) break;
        }
        REQUIRE(schur_gt_sum(la, x) == schur_bialternant(la, x));
      });
    }
  }
}

TEST_CASE("bialternant falls back on repeated variables") {
  std::vector<Rat> x{rat(1), rat(1)};
  CHECK_THROWS(schur_bialternant(Partition{2, 1}, x));
  CHECK(schur(Partition{2, 1}, x, SchurMethod::Bialternant) == rat(2));
}

TEST_CASE("branching consistency") {
  // s_la(x1..xn) = sum_{mu < la} x_n^{|la|-|mu|} s_mu(x1..x_{n-1})
  std::mt19937_64 rng(302);
  std::uniform_int_distribution<long> num(1, 9), den(1, 5);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + trial % 3;
    std::vector<Rat> x(n);
    for (auto& v : x) v = rat(num(rng), den(rng));
    std::vector<Rat> xm(x.begin(), x.end() - 1);
    partitions_of(4, n, [&](const Partition& la) {
      Rat lhs = schur_gt_sum(la, x);
      Rat rhs(0);
      interlacing_below(la, [&](const Partition& mu) {
        rhs += pow_rat(x[n - 1], la.size() - mu.size()) * schur_gt_sum(mu, xm);
      });
      REQUIRE(lhs == rhs);
    });
  }
}

TEST_CASE("schur pieri h1") {
  auto terms = pieri_h1(Partition{});
  REQUIRE(terms.size() == 1);
  CHECK(terms[0] == Partition{1});

  auto t2 = pieri_h1(Partition{2, 1});
  REQUIRE(t2.size() == 3);
  CHECK(t2[0] == Partition{3, 1});
  CHECK(t2[1] == Partition{2, 2});
  CHECK(t2[2] == Partition{2, 1, 1});

  // numeric verification at x = (1,2,3): h1 * s_(2,1) = sum of expansions
  std::vector<Rat> x{rat(1), rat(2), rat(3)};
  Rat h1 = rat(6);
  Rat lhs = h1 * schur_gt_sum(Partition{2, 1}, x);
  Rat rhs(0);
  for (const auto& nu : t2) rhs += schur_gt_sum(nu, x);
  CHECK(lhs == rhs);
}
