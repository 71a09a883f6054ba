#include "cellring/hecke.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <cstdio>
#include <random>

using namespace cellring;

namespace {

struct Fixture {
  WeylGroup W;
  HeckeAlgebra H{W};
};

TermMap singleT(EltId w) {
  TermMap m;
  m[w] = LPoly::one();
  return m;
}

bool mapsEqual(const TermMap& a, const TermMap& b) {
  if (a.size() != b.size()) return false;
  for (auto& [w, p] : a) {
    auto it = b.find(w);
    if (it == b.end() || it->second != p) return false;
  }
  return true;
}

}  // namespace

TEST_CASE_METHOD(Fixture, "T-basis quadratic relation") {
  for (int r = 0; r < 4; ++r) {
    TermMap t = singleT(W.gen(r));
    TermMap sq = H.tMulGen(t, r, true);
    // T_r T_r = q T_e + (q-1) T_r
    REQUIRE(sq.size() == 2);
    REQUIRE(sq.at(W.identity()) == LPoly(1, 2));
    LPoly qm1(1, 2);
    qm1.addTerm(0, -1);
    REQUIRE(sq.at(W.gen(r)) == qm1);
  }
  // T_r T_e = T_r
  TermMap e = singleT(W.identity());
  REQUIRE(mapsEqual(H.tMulGen(e, 2, true), singleT(W.gen(2))));
  // length-additive case: T_2 T_3 T_2 T_3 is a single term
  TermMap h = singleT(W.identity());
  for (int r : {2, 3, 2, 3}) h = H.tMulGen(h, r, true);
  REQUIRE(h.size() == 1);
  REQUIRE(h.count(W.evaluate("2323")) == 1);
}

TEST_CASE_METHOD(Fixture, "T-basis inverses") {
  for (int r = 0; r < 4; ++r) {
    TermMap inv = H.tInverseGen(r);
    TermMap prod = H.tMulGen(inv, r, true);  // T_r^{-1} * T_r
    REQUIRE(mapsEqual(prod, singleT(W.identity())));
  }
  TermMap i2 = H.tInverseGen(2);
  REQUIRE(i2.at(W.gen(2)) == LPoly(1, -2));
  LPoly c(1, -2);
  c.addTerm(0, -1);
  REQUIRE(i2.at(W.identity()) == c);
  // (T_r T_s)^{-1} = T_s^{-1} T_r^{-1}
  TermMap lhs = singleT(W.evaluate("23"));
  lhs = H.tMulGenInv(lhs, 3);
  lhs = H.tMulGenInv(lhs, 2);
  REQUIRE(mapsEqual(lhs, singleT(W.identity())));
}

TEST_CASE_METHOD(Fixture, "KL polynomials: basic values") {
  EltId w012 = W.evaluate("012012");
  REQUIRE(H.klPolynomial(w012, w012) == LPoly::one());
  REQUIRE(H.klPolynomial(W.gen(3), w012).isZero());
  // all 24 elements below the longest element of a finite parabolic give P=1
  auto ivl = W.lowerInterval(w012);
  REQUIRE(ivl.size() == 24);
  for (EltId y : ivl) REQUIRE(H.klPolynomial(y, w012) == LPoly::one());
}

TEST_CASE_METHOD(Fixture, "KL degree bound for short elements") {
  for (EltId w : W.elementsUpToLength(6)) {
    auto [ew, w0] = W.stripTau(w);
    for (EltId y : W.lowerInterval(w)) {
      if (y == w) continue;
      LPoly p = H.klPolynomial(y, w);
      REQUIRE(!p.isZero());
      REQUIRE(p.degree() <= W.length(w) - W.length(y) - 1);
    }
  }
}

TEST_CASE_METHOD(Fixture, "mu coefficients") {
  REQUIRE(H.mu(W.identity(), W.gen(1)) == 1);
  EltId w012 = W.evaluate("012012");
  REQUIRE(H.mu(W.identity(), w012) == 0);
  // 1.1(a): y < w = ry, rw < w, ry > y implies mu = 1
  std::mt19937 rng(17);
  auto all = W.elementsUpToLength(7);
  std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
  int found = 0;
  for (int i = 0; i < 400 && found < 60; ++i) {
    EltId y = all[pick(rng)];
    for (int r = 0; r < 4; ++r) {
      EltId w = W.leftGen(r, y);
      if (W.length(w) == W.length(y) + 1) {
        REQUIRE(H.mu(y, w) == 1);
        ++found;
      }
    }
  }
  REQUIRE(found >= 60);
}

TEST_CASE_METHOD(Fixture, "C-basis expansion and round trip") {
  // C_r = v^{-1} (T_e + T_r)
  TermMap cr = H.cBasisT(W.gen(2));
  REQUIRE(cr.size() == 2);
  REQUIRE(cr.at(W.identity()) == LPoly(1, -1));
  REQUIRE(cr.at(W.gen(2)) == LPoly(1, -1));

  // c_basis(w012) = v^-6 sum of all 24 T_y
  EltId w012 = W.evaluate("012012");
  TermMap cl = H.cBasisT(w012);
  REQUIRE(cl.size() == 24);
  for (auto& [y, p] : cl) REQUIRE(p == LPoly(1, -6));

  // to_c_basis(c_basis(w)) = C_w exactly, sampled across lengths and cosets
  std::mt19937 rng(23);
  auto all = W.elementsUpToLength(8);
  std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
  for (int i = 0; i < 25; ++i) {
    EltId w = all[pick(rng)];
    TermMap c = H.toCBasis(H.cBasisT(w));
    REQUIRE(c.size() == 1);
    REQUIRE(c.at(w) == LPoly::one());
  }
}

TEST_CASE_METHOD(Fixture, "structure constants") {
  EltId w012 = W.evaluate("012012");
  // C_r C_w = xi C_w when rw < w
  TermMap h = H.cProduct(W.gen(0), w012);
  REQUIRE(h.size() == 1);
  REQUIRE(h.at(w012) == LPoly::xi());

  // eta identity on the parabolic head
  TermMap sq = H.cProduct(w012, w012);
  REQUIRE(sq.size() == 1);
  LPoly eta;
  for (EltId u : W.lowerInterval(w012)) eta.addTerm(2 * W.length(u) - 6, 1);
  REQUIRE(sq.at(w012) == eta);

  // C_tau C_w = C_{tau w}
  EltId w = W.evaluate("0123");
  TermMap tw = H.cProduct(W.tau(), w);
  REQUIRE(tw.size() == 1);
  REQUIRE(tw.at(W.leftTau(w)) == LPoly::one());

  // bar symmetry of h_{x,y,z}
  TermMap p2 = H.cProduct(W.evaluate("232"), W.evaluate("232"));
  for (auto& [z, hz] : p2) REQUIRE(hz.isBarSymmetric());
}

TEST_CASE_METHOD(Fixture, "product associativity spot check") {
  std::mt19937 rng(29);
  auto all = W.elementsUpToLength(5);
  std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
  for (int i = 0; i < 6; ++i) {
    EltId a = all[pick(rng)], b = all[pick(rng)], c = all[pick(rng)];
    TermMap ab = H.productCT(a, b);
    TermMap bc = H.productCT(b, c);
    TermMap left = H.tProduct(ab, H.cBasisT(c));
    TermMap right = H.tProduct(H.cBasisT(a), bc);
    REQUIRE(mapsEqual(left, right));
  }
}

TEST_CASE_METHOD(Fixture, "theta elements") {
  // theta_0 = T_e
  REQUIRE(mapsEqual(H.theta({0, 0, 0}), singleT(W.identity())));

  // theta_{x1} theta_{-x1} = T_e
  TermMap t1 = H.theta({1, 0, 0});
  TermMap t1m = H.theta({-1, 0, 0});
  REQUIRE(mapsEqual(H.tProduct(t1, t1m), singleT(W.identity())));

  // dominant weight: single tilde-normalized term
  EltId tx1 = W.translationElt({1, 0, 0});
  REQUIRE(t1.size() == 1);
  REQUIRE(t1.at(tx1) == LPoly(1, -W.length(tx1)));

  // independence of the dominant decomposition
  TermMap a = H.thetaFromPair({1, 1, 0}, {1, 0, 0});   // x = (0,1,0)
  TermMap b = H.thetaFromPair({2, 2, 1}, {2, 1, 1});   // same x, fatter pair
  REQUIRE(mapsEqual(a, b));
  // theta_x theta_x' = theta_{x+x'}
  TermMap lhs = H.tProduct(H.theta({1, 0, 0}), H.theta({0, 1, 0}));
  REQUIRE(mapsEqual(lhs, H.theta({1, 1, 0})));
}

TEST_CASE_METHOD(Fixture, "Bernstein elements are central") {
  TermMap s1 = H.bernsteinS1();
  TermMap s2 = H.bernsteinS2();
  for (int r = 0; r < 4; ++r) {
    TermMap cr = H.cBasisT(W.gen(r));
    REQUIRE(mapsEqual(H.tProduct(s1, cr), H.tProduct(cr, s1)));
    REQUIRE(mapsEqual(H.tProduct(s2, cr), H.tProduct(cr, s2)));
  }
  TermMap ttau = singleT(W.tau());
  REQUIRE(mapsEqual(H.tProduct(s1, ttau), H.tProduct(ttau, s1)));
  REQUIRE(mapsEqual(H.tProduct(s2, ttau), H.tProduct(ttau, s2)));
}

TEST_CASE_METHOD(Fixture, "Bernstein action on the parabolic head") {
  EltId w012 = W.evaluate("012012");
  EltId x10 = W.evaluate("012012t32012");   // w012 (tau r3 r2 r0 r1 r2)
  EltId x01 = W.evaluate("01201232013201"); // w012 (r3 r2 r0 r1)^2
  REQUIRE(W.length(x10) == 11);
  REQUIRE(W.length(x01) == 14);

  TermMap lhs1 = H.toCBasis(H.tProduct(H.bernsteinS1(), H.cBasisT(w012)));
  REQUIRE(lhs1.at(x10) == LPoly::one());
  REQUIRE(lhs1.at(W.leftTau(w012)) == -LPoly::xi());

  TermMap lhs2 = H.toCBasis(H.tProduct(H.bernsteinS2(), H.cBasisT(w012)));
  REQUIRE(lhs2.at(x01) == LPoly::one());
  REQUIRE(lhs2.at(W.leftTau(x10)) == -LPoly::xi());
  REQUIRE(lhs2.at(w012) == LPoly::one());
}

TEST_CASE_METHOD(Fixture, "delta") {
  REQUIRE(H.delta(W.identity()) == 0);
  REQUIRE(H.delta(W.gen(2)) == 0);
  REQUIRE(H.delta(W.evaluate("012012")) == 0);
}

TEST_CASE_METHOD(Fixture, "KL cache round trip") {
  EltId w = W.evaluate("0120123");
  LPoly p = H.klPolynomial(W.gen(0), w);
  std::string path = "kl_cache_test.jsonl";
  H.saveCache(path);

  WeylGroup W2;
  HeckeAlgebra H2(W2);
  size_t n = H2.loadCache(path);
  REQUIRE(n > 0);
  REQUIRE(H2.numColumns() == H.numColumns());
  REQUIRE(H2.klPolynomial(W2.gen(0), W2.evaluate("0120123")) == p);
  std::remove(path.c_str());
}
