#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kpz/lattice_paths.hpp"
#include "kpz/rsk.hpp"

using namespace kpz;

namespace {

IntGrid random_matrix(std::mt19937_64& rng, std::size_t n, std::size_t N, long maxval) {
  IntGrid w(n, N);
  std::uniform_int_distribution<long> d(0, maxval);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < N; ++j) w(i, j) = d(rng);
  return w;
}

long greene_sum(const IntGt& Z, std::size_t r) {
  long s = 0;
  for (std::size_t j = 1; j <= r; ++j) s += Z.at(Z.depth(), j);
  return s;
}

}  // namespace

TEST_CASE("row insertion: worked example from the RS walkthrough") {
  // insert a '2' into row "156" over letters 1..7 -> row "126", bump one '5'
  IntWord x{1, {1, 0, 0, 0, 1, 1, 0}};
  IntWord a{1, {0, 1, 0, 0, 0, 0, 0}};
  auto [xt, b] = row_insert_word(x, a);
  CHECK(xt.mult == std::vector<long>{1, 1, 0, 0, 0, 1, 0});
  CHECK(b.start == 2);
  CHECK(b.mult == std::vector<long>{0, 0, 0, 1, 0, 0});
}

TEST_CASE("row insertion: empty row and hand-iterated case") {
  IntWord empty{1, {0, 0, 0}};
  IntWord a{1, {2, 0, 1}};
  auto [xt, b] = row_insert_word(empty, a);
  CHECK(xt.mult == a.mult);
  CHECK(b.mult == std::vector<long>{0, 0});

  IntWord x2{1, {2, 1}};
  IntWord a2{1, {0, 3}};
  auto [xt2, b2] = row_insert_word(x2, a2);
  CHECK(xt2.mult == std::vector<long>{2, 4});
  CHECK(b2.mult == std::vector<long>{0});
}

TEST_CASE("local move cells") {
  long a = 0, b = 2, c = 3, d = 0;
  CombinatorialMove::interior(a, b, c, d);
  CHECK(a == 2);
  CHECK(d == 3);

  long x = 1, prev = 4;
  CombinatorialMove::edge(x, prev);
  CHECK(x == 5);

  IntGrid t{{7, 1}, {2, 3}};
  detail::apply_l<CombinatorialMove>(t, 1, 1);  // origin: identity
  CHECK(t == IntGrid{{7, 1}, {2, 3}});
}

TEST_CASE("rsk of the worked permutation (3,5,1,6,2,4,7)") {
  auto w = permutation_matrix({3, 5, 1, 6, 2, 4, 7});
  auto out = rsk_forward(w);
  CHECK(shape_of(out.Z) == Partition{4, 3});
  CHECK(out.Z.at(7, 1) == 4);  // Schensted: longest increasing subsequence
  CHECK(lis({3, 5, 1, 6, 2, 4, 7}) == 4);
  CHECK(out.Z == out.Zprime);  // involution => symmetric matrix => P = Q
  CHECK(rsk_inverse(out) == w);
}

TEST_CASE("rsk trivial and all-ones") {
  IntGrid w1{{5}};
  auto o1 = rsk_forward(w1);
  CHECK(o1.Z.at(1, 1) == 5);
  CHECK(o1.Zprime.at(1, 1) == 5);

  IntGrid ones(3, 3, 1);
  auto o = rsk_forward(ones);
  // Greene oracle fixes the whole shape
  long w_lpp = brute_force_paths(ones, greene_query(3, 3, 1, Semiring::MaxPlus));
  CHECK(w_lpp == 5);
  CHECK(o.Z.at(3, 1) == 5);
  CHECK(greene_sum(o.Z, 2) == brute_force_paths(ones, greene_query(3, 3, 2, Semiring::MaxPlus)));
  CHECK(greene_sum(o.Z, 3) == brute_force_paths(ones, greene_query(3, 3, 3, Semiring::MaxPlus)));
}

TEST_CASE("backend agreement, bitwise, on random instances") {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (int trial = 0; trial < 1000; ++trial) {
    auto w = random_matrix(rng, dim(rng), dim(rng), 4);
    auto a = rsk_forward(w, RskBackend::LocalMoves);
    auto b = rsk_forward(w, RskBackend::Insertion);
    REQUIRE(a.Z == b.Z);
    REQUIRE(a.Zprime == b.Zprime);
    REQUIRE(a.glued == b.glued);
  }
}

TEST_CASE("shape equality, interlacing, transpose duality, type identity") {
  std::mt19937_64 rng(102);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = dim(rng), N = dim(rng);
    auto w = random_matrix(rng, n, N, 4);
    auto out = rsk_forward(w);
    CHECK(validate_gt(out.Z));
    CHECK(validate_gt(out.Zprime));
    CHECK(shape_of(out.Z) == shape_of(out.Zprime));

    auto tout = rsk_forward(w.transpose());
    CHECK(tout.Z == out.Zprime);
    CHECK(tout.Zprime == out.Z);

    // |z^k| - |z^{k-1}| = sum_i w^i_k and symmetrically for Z'
    auto ty = type_of(out.Z);
    for (std::size_t k = 0; k < N; ++k) {
      long col = 0;
      for (std::size_t i = 0; i < n; ++i) col += w(i, k);
      CHECK(ty[k] == col);
    }
    auto typ = type_of(out.Zprime);
    for (std::size_t i = 0; i < n; ++i) {
      long row = 0;
      for (std::size_t k = 0; k < N; ++k) row += w(i, k);
      CHECK(typ[i] == row);
    }
  }
}

TEST_CASE("Greene invariant against the max-plus ensemble oracle") {
  std::mt19937_64 rng(103);
  std::uniform_int_distribution<std::size_t> nd(1, 4), Nd(1, 5);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = nd(rng), N = Nd(rng);
    auto w = random_matrix(rng, n, N, 4);
    auto out = rsk_forward(w);
    for (std::size_t r = 1; r <= 3 && r <= std::min(n, N); ++r) {
      long oracle = brute_force_paths(w, greene_query(n, N, r, Semiring::MaxPlus));
      CHECK(greene_sum(out.Z, r) == oracle);
    }
  }
}

TEST_CASE("mutated local move breaks the Greene invariant (negative control)") {
  std::mt19937_64 rng(104);
  testing::mutate_local_move() = true;
  int broken = 0;
  for (int trial = 0; trial < 20; ++trial) {
    auto w = random_matrix(rng, 3, 3, 4);
    auto o = rsk_forward(w);
    long oracle = brute_force_paths(w, greene_query(3, 3, 2, Semiring::MaxPlus));
    if (greene_sum(o.Z, 2) != oracle) ++broken;
  }
  testing::mutate_local_move() = false;
  CHECK(broken > 0);
}

TEST_CASE("bijectivity: exhaustive round trip over 2x3 matrices, entries <= 2") {
  IntGrid w(2, 3);
  for (long v = 0; v < 729; ++v) {
    long code = v;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        w(i, j) = code % 3;
        code /= 3;
      }
    auto out = rsk_forward(w);
    REQUIRE(rsk_inverse(out) == w);
    // inverse of forward composed the other way
    auto again = rsk_forward(rsk_inverse(out));
    REQUIRE(again.Z == out.Z);
    REQUIRE(again.Zprime == out.Zprime);
  }
}

TEST_CASE("rsk_inverse rejects invalid images") {
  auto out = rsk_forward(IntGrid{{1, 2}, {0, 1}});
  RskOutput bad = out;
  bad.Zprime.at(bad.Zprime.depth(), 1) += 1;  // shape mismatch
  CHECK_THROWS(rsk_inverse(bad));

  RskOutput bad2 = out;
  bad2.Z.at(1, 1) = 100;  // interlacing violation
  bad2.glued = IntGrid();
  CHECK_THROWS(rsk_inverse(bad2));
}
