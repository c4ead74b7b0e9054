#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cw/matrix.hpp"

using namespace cw;

TEST_CASE("smith form of a diagonal-ready matrix") {
  Mat a{{2, 0}, {0, 3}};
  SmithForm s = smith_normal_form(a);
  CHECK(s.rank == 2);
  CHECK(s.d(0, 0) == 1);
  CHECK(s.d(1, 1) == 6);
  CHECK(s.u * a * s.v == s.d);
}

TEST_CASE("smith form divisibility chain and factorization") {
  Mat a{{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}};
  SmithForm s = smith_normal_form(a);
  CHECK(s.u * a * s.v == s.d);
  for (std::size_t i = 0; i + 1 < s.rank; ++i)
    CHECK(s.d(i + 1, i + 1) % s.d(i, i) == 0);
  // The product of the invariants equals |det a| = 624.
  Int det = s.d(0, 0) * s.d(1, 1) * s.d(2, 2);
  CHECK(abs(det) == 624);
}

TEST_CASE("randomized smith form: transform identities hold") {
  std::mt19937 rng(20260825);
  std::uniform_int_distribution<int> dim(1, 6), entry(-9, 9);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t m = dim(rng), n = dim(rng);
    Mat a(m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = entry(rng);
    SmithForm s = smith_normal_form(a);
    REQUIRE(s.u * a * s.v == s.d);
    for (std::size_t i = 0; i < std::min(m, n); ++i) {
      if (i < s.rank) {
        REQUIRE(s.d(i, i) > 0);
        if (i + 1 < s.rank) REQUIRE(s.d(i + 1, i + 1) % s.d(i, i) == 0);
      } else {
        REQUIRE(s.d(i, i) == 0);
      }
    }
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) REQUIRE(s.d(i, j) == 0);
    // Unimodularity: the transforms must be invertible over Z, i.e. have
    // full-rank smith form with all invariants 1.
    auto unimodular = [](const Mat& t) {
      SmithForm ts = smith_normal_form(t);
      if (ts.rank != t.rows()) return false;
      for (std::size_t i = 0; i < ts.rank; ++i)
        if (ts.d(i, i) != 1) return false;
      return true;
    };
    REQUIRE(unimodular(s.u));
    REQUIRE(unimodular(s.v));
  }
}

TEST_CASE("solve finds exact integer solutions") {
  Mat a{{2, 3}, {1, 1}};
  Vec b{7, 3};
  auto x = solve(a, b);
  REQUIRE(x.has_value());
  CHECK(a * *x == b);

  // 2x = 3 has no integer solution.
  Mat c{{2}};
  CHECK(!solve(c, Vec{3}).has_value());
}

TEST_CASE("kernel lattice spans the kernel") {
  Mat a{{1, 2, 3}};
  Mat k = kernel_lattice(a);
  CHECK(k.cols() == 2);
  CHECK((a * k).is_zero());
}

TEST_CASE("preimage lattice of a mod-lattice condition") {
  // x with 2x even: everything. x with x = 0 mod lattice(2): 2Z.
  Mat a = Mat::identity(1);
  Mat lat{{2}};
  Mat p = preimage_lattice(a, lat);
  // Lattice generated by the columns of p must be exactly 2Z.
  SmithForm s = smith_normal_form(p);
  REQUIRE(s.rank == 1);
  CHECK(s.d(0, 0) == 2);
}

TEST_CASE("row lattice membership") {
  Mat lat{{2, 0}, {0, 3}};
  CHECK(in_row_lattice(lat, Vec{4, -3}));
  CHECK(!in_row_lattice(lat, Vec{1, 0}));
  CHECK(in_row_lattice(Mat(0, 2), Vec{0, 0}));
  CHECK(!in_row_lattice(Mat(0, 2), Vec{0, 1}));
}

TEST_CASE("invariant factors drop trivial entries and keep free rank") {
  Mat rel{{2, 0, 0}, {0, 1, 0}};
  auto inv = invariant_factors(rel, 3);
  REQUIRE(inv.size() == 2);
  CHECK(inv[0] == 2);
  CHECK(inv[1] == 0);
}
