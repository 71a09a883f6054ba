// The based ring J_c: gamma_{x,y,z} is the coefficient of v^6 = q^{a(z)/2}
// in the structure constant h_{x,y,z}, read only at z inside the enumerated
// cell window.
//
// Two product engines feed the extraction.
//
//  * The exact engine (HeckeAlgebra::cProduct) computes C_x C_y in full and
//    converts to the C-basis; it is the reference but its KL closure grows
//    steeply with l(x) + l(y).
//
//  * The windowed engine computes the image of C_x C_y modulo the two-sided
//    ideal spanned by all C_w with a(w) >= 9.  For x in c every support
//    element z of any C_x C_u obeys z <=_R x, hence a(z) >= 6; since c is the
//    unique two-sided cell with a = 6 and the next value is 9 (the cell
//    table), a support element not in the window - provided the window is
//    complete past its length - lies in the ideal and can be dropped.  The
//    peel recursion
//        F(ur) = F(u) C_r - sum_{z prec u, zr<z} mu(z,u) F(z)
//    therefore only ever right-multiplies window-supported sums by C_r,
//    which needs mu-rows of window elements and of the peeled factor's
//    prefixes.  Coefficients at window elements are exact.
//
// Both engines agree wherever both run; the acceptance suite cross-checks.

#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "cellring/cells.hpp"
#include "cellring/hecke.hpp"
#include "cellring/laurent.hpp"
#include "cellring/weyl.hpp"

namespace cellring {

struct WindowTooSmall : std::runtime_error {
  explicit WindowTooSmall(const std::string& m) : std::runtime_error(m) {}
};

// integer combination of cell basis elements t_x
using JElement = std::map<EltId, int64_t>;

// gamma row of a product: z -> gamma_{x,y,z}
using GammaRow = std::map<EltId, int64_t>;

class JRing {
 public:
  JRing(WeylGroup& W, HeckeAlgebra& H, CellData& C) : W_(W), H_(H), C_(C) {}

  CellData& cells() { return C_; }

  // ---- windowed product engine ---------------------------------------------

  // C_x C_y modulo the a>=9 ideal, as exact C-basis coefficients on the
  // window; requires x in the window and window completeness past
  // l(x) + l(y) + 1
  TermMap windowedProduct(EltId x, EltId y) {
    if (!C_.inWindow(x)) throw WindowTooSmall("left factor outside the window");
    if (W_.length(x) + W_.length(y) + 1 > C_.windowLen())
      throw WindowTooSmall("window shorter than the product support");
    // peel the shorter factor
    if (W_.length(y) > W_.length(x) && C_.inWindow(W_.inverse(y))) {
      TermMap t = windowedProduct(W_.inverse(y), W_.inverse(x));
      TermMap out;
      for (auto& [z, p] : t) out.emplace(W_.inverse(z), p);
      return out;
    }
    auto [ey, y0] = W_.stripTau(y);
    EltId yw = ey ? W_.mult(W_.mult(W_.tau(), y0), W_.tau()) : y0;
    std::unordered_map<EltId, TermMap> memo;
    TermMap res = peelWindow(x, yw, memo);
    if (!ey) return res;
    TermMap out;
    for (auto& [z, p] : res) out.emplace(W_.rightTau(z), p);
    return out;
  }

  // ---- gamma ----------------------------------------------------------------

  // full gamma row of t_x t_y; windowed engine unless exact is forced
  const GammaRow& gammaRow(EltId x, EltId y, bool exact = false) {
    uint64_t key = ((uint64_t)x << 32) | y;
    {
      auto it = rows_.find(key);
      if (it != rows_.end()) return it->second;
    }
    TermMap h = exact ? H_.cProduct(x, y) : windowedProduct(x, y);
    GammaRow row = extractGamma(h, /*checkOutside=*/exact);
    auto [it, ok] = rows_.emplace(key, std::move(row));
    return it->second;
  }

  // gamma coefficients from a product in the C-basis: v^6 coefficients at
  // window elements; degree bound asserted on the window, and (for exact
  // products) residual support must stay outside the window
  GammaRow extractGamma(const TermMap& h, bool checkOutside) {
    GammaRow row;
    for (auto& [z, p] : h) {
      if (C_.inWindow(z)) {
        if (p.degree() > 6)
          throw std::logic_error("h_{x,y,z} exceeds degree 6 on the cell");
        int64_t g = p.coeff(6);
        if (g != 0) row.emplace(z, g);
      } else if (checkOutside) {
        // every exact-product support element off the window must be
        // certified beyond the cell: complete enumeration up to windowLen
        if (W_.length(z) > C_.windowLen())
          throw WindowTooSmall("unclassified support element beyond the window");
      }
    }
    return row;
  }

  int64_t gamma(EltId x, EltId y, EltId z) {
    if (!C_.inWindow(x) || !C_.inWindow(y) || !C_.inWindow(z))
      throw WindowTooSmall("gamma argument outside the enumerated window");
    const GammaRow& r = gammaRow(x, y);
    auto it = r.find(z);
    return it == r.end() ? 0 : it->second;
  }

  // ---- J_c multiplication ----------------------------------------------------

  JElement tMultiply(const JElement& a, const JElement& b) {
    JElement out;
    for (auto& [x, cx] : a)
      for (auto& [y, cy] : b)
        for (auto& [z, g] : gammaRow(x, y)) {
          int64_t& slot = out[z];
          slot = checkedAdd(slot, checkedMul(checkedMul(cx, cy), g));
          if (slot == 0) out.erase(z);
        }
    return out;
  }

  // unit of J_c restricted to the window: sum of t_d over the distinguished
  // involutions of the 24 left cells
  JElement unit(int searchLen) {
    JElement u;
    for (int g = 0; g < 24; ++g) u.emplace(C_.distinguishedInvolution(g, searchLen), 1);
    return u;
  }

  void clearRowCache() { rows_.clear(); }

 private:
  // F(u) = C_x C_u projected to the window, for u in W'
  TermMap peelWindow(EltId x, EltId u, std::unordered_map<EltId, TermMap>& memo) {
    auto it = memo.find(u);
    if (it != memo.end()) return it->second;
    TermMap res;
    if (W_.length(u) == 0) {
      res.emplace(x, LPoly::one());
    } else {
      uint8_t m = W_.rightDescentMask(u);
      int r = 0;
      while (!(m & (1 << r))) ++r;
      EltId v = W_.rightGen(u, r);
      TermMap Fv = peelWindow(x, v, memo);
      res = mulWindowGen(Fv, r);
      auto row = H_.muRow(v);
      for (auto& [z, mz] : *row) {
        if (!W_.isRightDescent(z, r)) continue;
        TermMap Fz = peelWindow(x, z, memo);
        for (auto& [w2, p] : Fz) addTo(res, w2, p, -mz);
      }
    }
    memo.emplace(u, res);
    return res;
  }

  // (window-supported sum) * C_r, dropping certified a>=9 terms
  TermMap mulWindowGen(const TermMap& S, int r) {
    TermMap out;
    LPoly xi = LPoly::xi();
    for (auto& [u, p] : S) {
      if (W_.isRightDescent(u, r)) {
        addTo(out, u, p * xi);
        continue;
      }
      EltId ur = W_.rightGen(u, r);
      if (C_.inWindow(ur)) {
        addTo(out, ur, p);
      } else if (W_.length(ur) > C_.windowLen()) {
        throw WindowTooSmall("support reached past the enumerated window");
      }
      // else: ur <=_R u forces a(ur) >= 6; off the complete window it is 9
      auto row = H_.muRow(u);
      for (auto& [t, mt] : *row) {
        if (!W_.isRightDescent(t, r)) continue;
        if (C_.inWindow(t)) addTo(out, t, p, mt);
        // dropped t: t < u keeps l(t) within the window bound
      }
    }
    return out;
  }

  WeylGroup& W_;
  HeckeAlgebra& H_;
  CellData& C_;
  std::unordered_map<uint64_t, GammaRow> rows_;
};

}  // namespace cellring
