#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "khom/laurent.hpp"

using khom::Int;
using khom::LaurentPoly;

namespace {

LaurentPoly q_pow(long e) { return LaurentPoly::monomial(1, e); }

}  // namespace

TEST_CASE("ring operations in canonical form") {
  LaurentPoly circle = LaurentPoly::q_plus_q_inverse();

  SECTION("(q+q^-1)*(q+q^-1) = q^2 + 2 + q^-2") {
    LaurentPoly sq = circle * circle;
    REQUIRE(sq.coeff(2) == 1);
    REQUIRE(sq.coeff(0) == 2);
    REQUIRE(sq.coeff(-2) == 1);
    REQUIRE(sq.term_count() == 3);
  }

  SECTION("p + 0 = p") {
    LaurentPoly p = q_pow(5) - LaurentPoly::constant(3);
    REQUIRE(p + LaurentPoly() == p);
    REQUIRE(LaurentPoly() + p == p);
  }

  SECTION("(q - q^-1)*(q + q^-1) = q^2 - q^-2") {
    LaurentPoly diff = q_pow(1) - q_pow(-1);
    LaurentPoly prod = diff * circle;
    REQUIRE(prod == q_pow(2) - q_pow(-2));
  }

  SECTION("cancellation leaves no zero terms") {
    LaurentPoly p = circle - circle;
    REQUIRE(p.is_zero());
    REQUIRE(p.term_count() == 0);
  }

  SECTION("scalar multiple") {
    REQUIRE(khom::laurent_scale(Int(-2), circle) ==
            LaurentPoly::monomial(-2, 1) + LaurentPoly::monomial(-2, -1));
    REQUIRE(khom::laurent_scale(Int(0), circle).is_zero());
  }
}

TEST_CASE("arbitrary precision coefficients") {
  Int big("123456789012345678901234567890");
  LaurentPoly p = LaurentPoly::monomial(big, 7);
  LaurentPoly q = p * p;
  REQUIRE(q.coeff(14) == big * big);
  // 2^200 by repeated squaring of (2q)
  LaurentPoly two_q = LaurentPoly::monomial(2, 1);
  LaurentPoly pw = LaurentPoly::pow(two_q, 200);
  REQUIRE(pw.coeff(200) == Int(1) << 200);
}

TEST_CASE("text format") {
  REQUIRE(LaurentPoly().to_text() == "0");
  REQUIRE(LaurentPoly::q_plus_q_inverse().to_text() == "q + q^-1");
  LaurentPoly sq = LaurentPoly::q_plus_q_inverse() * LaurentPoly::q_plus_q_inverse();
  REQUIRE(sq.to_text() == "q^2 + 2 + q^-2");
  LaurentPoly p = LaurentPoly::monomial(-1, 9) + LaurentPoly::monomial(1, 5) +
                  LaurentPoly::monomial(-3, 0) + LaurentPoly::monomial(2, -2);
  REQUIRE(p.to_text() == "-q^9 + q^5 - 3 + 2*q^-2");
}

TEST_CASE("json round trip") {
  std::mt19937 rng(Catch::rngSeed());
  std::uniform_int_distribution<long> e(-10, 10);
  std::uniform_int_distribution<long> c(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    LaurentPoly p;
    for (int t = 0; t < 8; ++t) p.add_term(e(rng), c(rng));
    REQUIRE(LaurentPoly::from_json(p.to_json()) == p);
  }
  // exponents descending in the serialized form
  LaurentPoly p = LaurentPoly::q_plus_q_inverse();
  auto j = p.to_json();
  REQUIRE(j[0][0].get<long>() == 1);
  REQUIRE(j[1][0].get<long>() == -1);
  REQUIRE(j[0][1].get<std::string>() == "1");
}

TEST_CASE("substitution q -> q^-1") {
  LaurentPoly p = LaurentPoly::monomial(3, 2) + LaurentPoly::monomial(-1, -5);
  LaurentPoly m = p.substituted(-1);
  REQUIRE(m == LaurentPoly::monomial(3, -2) + LaurentPoly::monomial(-1, 5));
  REQUIRE(m.substituted(-1) == p);
}
