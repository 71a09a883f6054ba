#include "cellring/laurent.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "cellring/weyl.hpp"

using namespace cellring;

namespace {

LPoly randomPoly(std::mt19937& rng) {
  std::uniform_int_distribution<int> nTerms(0, 6), exp(-8, 8), coef(-9, 9);
  LPoly p;
  int n = nTerms(rng);
  for (int i = 0; i < n; ++i) p.addTerm(exp(rng), coef(rng));
  return p;
}

}  // namespace

TEST_CASE("basic ring identities") {
  LPoly x(1, 1);          // v
  LPoly xinv(1, -1);      // v^-1
  LPoly xi = x + xinv;    // v + v^-1

  SECTION("(v + v^-1)^2 = v^2 + 2 + v^-2") {
    LPoly sq = xi * xi;
    LPoly expect;
    expect.addTerm(2, 1);
    expect.addTerm(0, 2);
    expect.addTerm(-2, 1);
    REQUIRE(sq == expect);
    REQUIRE(sq == LPoly::xi() * LPoly::xi());
  }

  SECTION("p + 0 = p") {
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
      LPoly p = randomPoly(rng);
      REQUIRE(p + LPoly::zero() == p);
    }
  }

  SECTION("xi^2 - 2 = v^2 + v^-2") {
    LPoly lhs = xi * xi - LPoly(2, 0);
    LPoly rhs;
    rhs.addTerm(2, 1);
    rhs.addTerm(-2, 1);
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("degree and coefficients") {
  REQUIRE(LPoly::zero().degree() == LPoly::kMinusInf);

  LPoly p;  // v^3 + 1
  p.addTerm(3, 1);
  p.addTerm(0, 1);
  REQUIRE(p.degree() == 3);

  LPoly xi6 = LPoly::one();
  for (int i = 0; i < 6; ++i) xi6 = xi6 * LPoly::xi();
  REQUIRE(xi6.degree() == 6);
  REQUIRE(xi6.lowDegree() == -6);

  LPoly q;  // v + v^-1
  q.addTerm(1, 1);
  q.addTerm(-1, 1);
  REQUIRE(q.coeff(1) == 1);
  REQUIRE(q.coeff(0) == 0);
}

TEST_CASE("eta = v^-6 sum over W_012 of v^(2 l(u)) has degree 6") {
  WeylGroup W;
  // enumerate the parabolic subgroup generated by r0, r1, r2
  std::unordered_set<EltId> seen = {W.identity()};
  std::vector<EltId> frontier = {W.identity()};
  while (!frontier.empty()) {
    std::vector<EltId> next;
    for (EltId a : frontier)
      for (int i : {0, 1, 2}) {
        EltId b = W.rightGen(a, i);
        if (seen.insert(b).second) next.push_back(b);
      }
    frontier = std::move(next);
  }
  REQUIRE(seen.size() == 24);
  LPoly eta;
  for (EltId u : seen) eta.addTerm(2 * W.length(u) - 6, 1);
  REQUIRE(eta.degree() == 6);
  REQUIRE(eta.coeff(6) == 1);
  REQUIRE(eta.isBarSymmetric());
}

TEST_CASE("bar involution") {
  LPoly p;  // v^3 + 2
  p.addTerm(3, 1);
  p.addTerm(0, 2);
  LPoly pb = p.bar();
  LPoly expect;
  expect.addTerm(-3, 1);
  expect.addTerm(0, 2);
  REQUIRE(pb == expect);

  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    LPoly a = randomPoly(rng), b = randomPoly(rng);
    REQUIRE(a.bar().bar() == a);
    REQUIRE((a + b).bar() == a.bar() + b.bar());
    REQUIRE((a * b).bar() == a.bar() * b.bar());
  }
}

TEST_CASE("ring axioms on random sparse inputs") {
  std::mt19937 rng(3);
  for (int i = 0; i < 150; ++i) {
    LPoly a = randomPoly(rng), b = randomPoly(rng), c = randomPoly(rng);
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a + (-a) == LPoly::zero());
    REQUIRE(a * LPoly::one() == a);
  }
}

TEST_CASE("overflow is detected") {
  LPoly big(int64_t(1) << 62, 0);
  REQUIRE_THROWS_AS(big * LPoly(4, 0), OverflowError);
  LPoly near(std::numeric_limits<int64_t>::max(), 1);
  REQUIRE_THROWS_AS(near + near, OverflowError);
}

TEST_CASE("printing") {
  LPoly p;
  p.addTerm(2, 1);
  p.addTerm(0, -2);
  REQUIRE(p.str() == "v^2 - 2");
  REQUIRE(p.strQ() == "q - 2");
  REQUIRE(LPoly::zero().str() == "0");
}
