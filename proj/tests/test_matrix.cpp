#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "khom/rational_matrix.hpp"
#include "support/oracles.hpp"

using khom::Rat;
using khom::RationalMatrix;

TEST_CASE("sparse storage keeps only nonzero in-bounds entries") {
  RationalMatrix m(3, 4);
  m.set(0, 1, Rat(1, 2));
  m.set(2, 3, Rat(-5));
  m.add(0, 1, Rat(-1, 2));  // cancels
  REQUIRE(m.get(0, 1) == 0);
  REQUIRE(m.get(2, 3) == Rat(-5));
  REQUIRE(m.nonzero_count() == 1);
  REQUIRE_THROWS_AS(m.set(3, 0, Rat(1)), std::invalid_argument);
  REQUIRE_THROWS_AS(m.get(0, 4), std::invalid_argument);
}

TEST_CASE("multiplication") {
  RationalMatrix a(2, 3), b(3, 2);
  a.set(0, 0, Rat(1));
  a.set(0, 2, Rat(2));
  a.set(1, 1, Rat(1, 3));
  b.set(0, 1, Rat(3));
  b.set(2, 0, Rat(1, 2));
  b.set(1, 0, Rat(6));
  RationalMatrix c = a * b;
  REQUIRE(c.get(0, 0) == Rat(1));   // 2 * 1/2
  REQUIRE(c.get(0, 1) == Rat(3));
  REQUIRE(c.get(1, 0) == Rat(2));   // 1/3 * 6
  REQUIRE(c.get(1, 1) == 0);
  RationalMatrix id = RationalMatrix::identity(3);
  REQUIRE(a * id == a);
  REQUIRE_THROWS_AS(b * b, std::invalid_argument);  // 3x2 * 3x2
}

TEST_CASE("rank of fixed matrices") {
  SECTION("zero and identity") {
    REQUIRE(RationalMatrix(5, 7).rank() == 0);
    REQUIRE(RationalMatrix::identity(6).rank() == 6);
  }
  SECTION("rank-1 outer product") {
    RationalMatrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        m.set(i, j, Rat(static_cast<long>((i + 1) * (j + 2))));
    REQUIRE(m.rank() == 1);
  }
  SECTION("singular integer matrix with nontrivial elimination") {
    // rows: r2 = r0 + r1
    RationalMatrix m(3, 3);
    long vals[3][3] = {{2, -1, 3}, {4, 0, -2}, {6, -1, 1}};
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m.set(i, j, Rat(vals[i][j]));
    REQUIRE(m.rank() == 2);
    REQUIRE(oracle::rank(m) == 2);
  }
}

TEST_CASE("rank agrees with the dense rational oracle on random matrices") {
  std::mt19937 rng(Catch::rngSeed());
  std::uniform_int_distribution<int> dim(1, 12);
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_real_distribution<double> fill(0.0, 1.0);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = dim(rng), c = dim(rng);
    double density = 0.15 + 0.5 * fill(rng);
    RationalMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (fill(rng) < density) m.set(i, j, Rat(num(rng), den(rng)));
    INFO("trial " << trial << ": " << r << "x" << c);
    REQUIRE(m.rank() == oracle::rank(m));
  }
}

TEST_CASE("rank of low-rank products matches construction") {
  std::mt19937 rng(Catch::rngSeed() ^ 0x9e3779b9u);
  std::uniform_int_distribution<int> num(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    // m = a * b with a: 8 x k, b: k x 8 has rank at most k
    std::size_t k = 1 + trial % 4;
    RationalMatrix a(8, k), b(k, 8);
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        a.set(i, j, Rat(num(rng)));
        b.set(j, i, Rat(num(rng)));
      }
    RationalMatrix m = a * b;
    REQUIRE(m.rank() <= k);
    REQUIRE(m.rank() == oracle::rank(m));
  }
}

TEST_CASE("submatrix and transpose") {
  RationalMatrix m(3, 3);
  m.set(0, 0, Rat(1));
  m.set(1, 2, Rat(2));
  m.set(2, 1, Rat(3));
  RationalMatrix s = m.submatrix({0, 2}, {0, 1});
  REQUIRE(s.rows() == 2);
  REQUIRE(s.cols() == 2);
  REQUIRE(s.get(0, 0) == Rat(1));
  REQUIRE(s.get(1, 1) == Rat(3));
  REQUIRE(s.nonzero_count() == 2);
  RationalMatrix t = m.transposed();
  REQUIRE(t.get(2, 1) == Rat(2));
  REQUIRE(t.get(1, 2) == Rat(3));
  REQUIRE(t.rank() == m.rank());
}
