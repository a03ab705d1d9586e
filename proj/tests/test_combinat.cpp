#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kpz/gt_pattern.hpp"
#include "kpz/lattice_paths.hpp"
#include "kpz/partition.hpp"
#include "kpz/rational.hpp"

using namespace kpz;

namespace {

// Constructive sampler: interlaced rows built top-down are valid by
// construction, giving the oracle for validate_gt.
IntGt sample_valid_pattern(std::mt19937_64& rng, std::size_t depth, long top_max, long slack) {
  IntGt z(depth);
  std::uniform_int_distribution<long> top(0, top_max);
  z.at(1, 1) = top(rng);
  for (std::size_t i = 1; i + 1 <= depth; ++i) {
    // z^{i+1}_1 >= z^i_1; z^{i+1}_{j} in [z^i_j, z^i_{j-1}]; z^{i+1}_{i+1} in [0, z^i_i]
    std::uniform_int_distribution<long> bump(0, slack);
    z.at(i + 1, 1) = z.at(i, 1) + bump(rng);
    for (std::size_t j = 2; j <= i; ++j) {
      long lo = z.at(i, j), hi = z.at(i, j - 1);
      std::uniform_int_distribution<long> pick(lo, hi);
      z.at(i + 1, j) = pick(rng);
    }
    std::uniform_int_distribution<long> last(0, z.at(i, i));
    z.at(i + 1, i + 1) = last(rng);
  }
  return z;
}

}  // namespace

TEST_CASE("partition basics") {
  Partition p{4, 3, 1};
  CHECK(p.size() == 8);
  CHECK(p.length() == 3);
  CHECK(p.part(5) == 0);
  CHECK(Partition{3, 1, 0, 0} == Partition{3, 1});
  CHECK_THROWS(Partition{1, 2});
  CHECK(p.conjugate() == Partition{3, 2, 2, 1});
  CHECK(p.conjugate().conjugate() == p);

  CHECK(Partition{4, 2}.horizontal_strip_over(Partition{3, 1}));
  CHECK_FALSE(Partition{4, 3}.horizontal_strip_over(Partition{2, 1}));  // two boxes stacked
  CHECK(Partition{2, 1, 1}.vertical_strip_over(Partition{1, 1}));
  CHECK_FALSE(Partition{3, 1}.vertical_strip_over(Partition{1, 1}));

  CHECK(interlaces(Partition{3, 1}, Partition{4, 2, 1}));
  CHECK_FALSE(interlaces(Partition{5, 1}, Partition{4, 2, 1}));
}

TEST_CASE("partition enumeration") {
  int count = 0;
  partitions_of(6, 6, [&](const Partition&) { ++count; });
  CHECK(count == 11);  // p(6) = 11

  auto box = partitions_in_box(2, 2);  // (0,0),(1,0),(1,1),(2,0),(2,1),(2,2)
  CHECK(box.size() == 6);

  int below = 0;
  interlacing_below(Partition{3, 1}, [&](const Partition& mu) {
    CHECK(interlaces(mu, Partition{3, 1}));
    ++below;
  });
  CHECK(below == 6);  // mu_1 in {1,2,3}, mu_2 in {0,1}

  int above = 0;
  horizontal_strips_above(Partition{2}, 4, 2, [&](const Partition& la) {
    CHECK(la.horizontal_strip_over(Partition{2}));
    ++above;
  });
  CHECK(above == 3 * 3);  // la_1 in {2,3,4}, la_2 in {0,1,2}
}

TEST_CASE("validate_gt basics") {
  CHECK(validate_gt(IntGt{{5}}));
  CHECK(validate_gt(IntGt{{3}, {3, 1}}));
  CHECK(validate_gt(IntGt{{3}, {4, 1}}));
  IntGt bad{{3}, {2, 0}};
  auto v = find_gt_violation(bad);
  REQUIRE(v.has_value());
  CHECK(v->i == 1);
  CHECK(v->j == 1);
}

TEST_CASE("validate_gt accepts sampler output, rejects perturbations") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    auto z = sample_valid_pattern(rng, 2 + trial % 5, 6, 3);
    CHECK(validate_gt(z));
  }
  // perturb one entry outside its interlacing interval
  std::mt19937_64 rng2(8);
  int rejected = 0, attempts = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto z = sample_valid_pattern(rng2, 4, 5, 2);
    // push z^2_1 below z^1_1 (violates z^1_1 <= z^2_1)
    IntGt bad = z;
    bad.at(2, 1) = z.at(1, 1) - 1;
    if (bad.at(2, 1) >= 0) {
      ++attempts;
      if (!validate_gt(bad)) ++rejected;
    }
  }
  CHECK(rejected == attempts);
}

TEST_CASE("shape and type") {
  IntGt z{{2}, {3, 1}};
  CHECK(shape_of(z) == Partition{3, 1});
  CHECK(type_of(z) == std::vector<long>{2, 2});

  IntGt one{{7}};
  CHECK(shape_of(one) == Partition{7});
  CHECK(type_of(one) == std::vector<long>{7});

  GeomGt g{{3.0}, {20.0, 6.0 / 5.0}};
  auto t = type_of(g);
  CHECK(t[0] == doctest::Approx(3.0));
  CHECK(t[1] == doctest::Approx(8.0));

  // type sums to |shape| in integer mode
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    auto p = sample_valid_pattern(rng, 3 + trial % 3, 5, 2);
    long total = 0;
    for (long t2 : type_of(p)) total += t2;
    CHECK(total == shape_of(p).size());
  }
}

TEST_CASE("lis") {
  CHECK(lis({1, 10, 2, 4, 7, 5, 6, 9, 3, 8}) == 6);
  CHECK(lis({3, 5, 1, 6, 2, 4, 7}) == 4);
  std::vector<long> id;
  for (long i = 1; i <= 40; ++i) id.push_back(i);
  CHECK(lis(id) == 40);
  CHECK(lis({}) == 0);

  // appending a new maximum increases lis by exactly one
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    std::vector<long> v(12);
    std::uniform_int_distribution<long> d(0, 30);
    for (auto& x : v) x = d(rng);
    auto base = lis(v);
    v.push_back(31);
    CHECK(lis(v) == base + 1);
  }
}

TEST_CASE("brute force paths: pinned examples") {
  IntGrid w{{1, 2}, {3, 4}};
  PathEnsembleQuery q;
  q.r = 1;
  q.starts = {{1, 1}};
  q.ends = {{2, 2}};
  q.mode = Semiring::MaxPlus;
  CHECK(brute_force_paths(w, q) == 8);  // max(1+2+4, 1+3+4)

  Grid<Rat> wr{{Rat(1), Rat(2)}, {Rat(3), Rat(4)}};
  q.mode = Semiring::SumProduct;
  CHECK(brute_force_paths(wr, q) == Rat(20));  // ad(b+c) = 1*4*(2+3)

  PathEnsembleQuery q2;
  q2.r = 2;
  q2.starts = {{1, 1}, {1, 2}};
  q2.ends = {{2, 1}, {2, 2}};
  q2.mode = Semiring::SumProduct;
  CHECK(brute_force_paths(wr, q2) == Rat(24));  // unique disjoint pair 1*3 * 2*4
}

TEST_CASE("lgv equals brute force") {
  Grid<Rat> wr{{Rat(1), Rat(2)}, {Rat(3), Rat(4)}};
  std::vector<Cell> s{{1, 1}, {1, 2}}, e{{2, 1}, {2, 2}};
  CHECK(lgv_determinant(wr, s, e) == Rat(24));

  // r = 1 reduces to the plain path sum
  CHECK(lgv_determinant(wr, {Cell{1, 1}}, {Cell{2, 2}}) == path_sum(wr, {1, 1}, {2, 2}));

  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> d(1, 5);
  for (int trial = 0; trial < 50; ++trial) {
    Grid<Rat> w(3, 4);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 4; ++j) w(i, j) = Rat(d(rng));
    PathEnsembleQuery q = greene_query(3, 4, 2, Semiring::SumProduct);
    Rat bf = brute_force_paths(w, q);
    Rat det = lgv_determinant(w, q.starts, q.ends);
    CHECK(bf == det);
  }
}

TEST_CASE("lgv equals brute force for r=1..3 on small integer matrices") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> d(0, 4);
  std::uniform_int_distribution<std::size_t> nd(2, 4), md(2, 5);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = nd(rng), m = md(rng);
    if (n * m > 25) continue;
    Grid<Rat> w(n, m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) w(i, j) = Rat(d(rng));
    for (std::size_t r = 1; r <= 3 && r <= std::min(n, m); ++r) {
      auto q = greene_query(n, m, r, Semiring::SumProduct);
      CHECK(brute_force_paths(w, q) == lgv_determinant(w, q.starts, q.ends));
    }
  }
}

TEST_CASE("empty ensemble signals by semiring") {
  Grid<Rat> w{{Rat(1), Rat(1)}, {Rat(1), Rat(1)}};
  PathEnsembleQuery q;  // two disjoint paths ending at the same column: impossible
  q.r = 2;
  q.starts = {{1, 1}, {1, 2}};
  q.ends = {{2, 2}, {2, 2}};
  CHECK_THROWS(brute_force_paths(w, q));  // duplicate end cells rejected
  q.ends = {{1, 2}, {2, 2}};
  q.mode = Semiring::SumProduct;
  // start (1,1) -> end (1,2) passes through (1,2) = start of path 2: never disjoint
  CHECK(brute_force_paths(w, q) == Rat(0));
}
