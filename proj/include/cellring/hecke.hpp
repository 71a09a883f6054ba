// The Hecke algebra H of (W,S) over Z[v,v^-1], v = q^{1/2}.
//
// T-basis: (T_r - q)(T_r + 1) = 0 and T_w T_u = T_{wu} when lengths add.
// C-basis (the C'_w of Kazhdan-Lusztig):
//     C_w = v^{-l(w)} sum_{y <= w} P_{y,w} T_y .
// Kazhdan-Lusztig columns are computed by the C_s C_{sw} recursion
//     C_w = C_s C_{sw} - sum_{z prec sw, sz < z} mu(z,sw) C_z
// and memoized.  Storage follows the classic Coxeter-library economies:
// polynomials are pooled (hash-consed), a column keeps only its extremal
// entries (P_{y,w} = P_{sy,w} whenever sw < w, sy > y), and columns are
// normalized to the W' coset (P is invariant under the length-zero twist).
//
// Products C_x C_y are computed exactly in the T-basis by peeling a reduced
// word of the shorter factor:
//     F(ur) = F(u) C_r - sum mu(z,u) F(z),   F(e) = C_x,
// then converting back with the triangular change of basis.  All arithmetic
// is exact; structure constants h_{x,y,z} come out as bar-symmetric Laurent
// polynomials, which the converter asserts.

#pragma once

#include <algorithm>
#include <cassert>
#include <condition_variable>
#include <cstdint>
#include <cstdio>
#include <deque>
#include <fstream>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "cellring/laurent.hpp"
#include "cellring/weyl.hpp"

namespace cellring {

// sparse H-element, basis tagged
using TermMap = std::unordered_map<EltId, LPoly>;

struct HeckeElt {
  char basis = 'T';  // 'T' or 'C'
  TermMap terms;
};

inline void addTo(TermMap& m, EltId w, const LPoly& p, int64_t c = 1, int32_t shift = 0) {
  if (p.isZero() || c == 0) return;
  auto& slot = m[w];
  slot.addMul(p, c, shift);
  if (slot.isZero()) m.erase(w);
}

struct KLColumn {
  EltId w = kNoElt;
  int16_t lw = 0;
  std::vector<EltId> ys;      // extremal y <= w, sorted by id
  std::vector<uint32_t> ps;   // pooled polynomial indices, parallel to ys
};

// (z, mu(z,w)) for all z < w with nonzero mu
using MuRow = std::vector<std::pair<EltId, int64_t>>;

class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(WeylGroup& W) : W_(W) {}

  WeylGroup& weyl() { return W_; }

  // ---- Kazhdan-Lusztig polynomials -------------------------------------

  // P_{y,w} as a polynomial in v (even exponents only); zero if y !<= w
  LPoly klPolynomial(EltId y, EltId w) {
    if (W_.inAffine(y) != W_.inAffine(w)) return LPoly::zero();
    auto [ew, w0] = W_.stripTau(w);
    EltId y0 = ew ? W_.leftTau(y) : y;
    auto col = column(w0);
    return lookup(*col, y0);
  }

  int64_t mu(EltId y, EltId w) {
    if (W_.inAffine(y) != W_.inAffine(w)) return 0;
    int d = W_.length(w) - W_.length(y);
    if (d <= 0) return 0;
    return klPolynomial(y, w).coeff(d - 1);
  }

  // symmetric extension: mu(y,w) if y <= w, mu(w,y) if w < y, else 0
  int64_t muTilde(EltId y, EltId w) {
    return W_.length(y) <= W_.length(w) ? mu(y, w) : mu(w, y);
  }

  // degree in q of P_{e,z}; z must lie in W' (P_{e,z} = 0 off the coset)
  int delta(EltId z) {
    if (!W_.inAffine(z)) throw std::invalid_argument("delta: element outside W'");
    LPoly p = klPolynomial(W_.identity(), z);
    if (p.isZero()) throw std::logic_error("delta: e not below z");
    return p.degree() / 2;
  }

  // ---- T-basis primitives ----------------------------------------------

  // h * T_r or T_r * h, exact
  TermMap tMulGen(const TermMap& h, int r, bool onRight) {
    TermMap out;
    out.reserve(h.size() * 2);
    for (auto& [w, p] : h) {
      EltId wr = onRight ? W_.rightGen(w, r) : W_.leftGen(r, w);
      if (W_.length(wr) > W_.length(w)) {
        addTo(out, wr, p);
      } else {
        addTo(out, wr, p, 1, 2);   // q T_{wr}
        addTo(out, w, p, 1, 2);    // (q-1) T_w
        addTo(out, w, p, -1, 0);
      }
    }
    return out;
  }

  TermMap tMulTau(const TermMap& h, bool onRight) {
    TermMap out;
    out.reserve(h.size());
    for (auto& [w, p] : h) out.emplace(onRight ? W_.rightTau(w) : W_.leftTau(w), p);
    return out;
  }

  // T_r^{-1} = q^{-1} T_r + (q^{-1} - 1) T_e
  TermMap tInverseGen(int r) {
    TermMap m;
    m[W_.gen(r)] = LPoly(1, -2);
    LPoly c(1, -2);
    c.addTerm(0, -1);
    m[W_.identity()] = c;
    return m;
  }

  // h * T_r^{-1}
  TermMap tMulGenInv(const TermMap& h, int r) {
    TermMap out;
    out.reserve(h.size() * 2);
    for (auto& [w, p] : h) {
      EltId wr = W_.rightGen(w, r);
      if (W_.length(wr) < W_.length(w)) {
        addTo(out, wr, p);
      } else {
        addTo(out, wr, p, 1, -2);  // q^{-1} T_{wr}
        addTo(out, w, p, 1, -2);   // (q^{-1} - 1) T_w
        addTo(out, w, p, -1, 0);
      }
    }
    return out;
  }

  // h * C_r = h * v^{-1} (T_e + T_r)
  TermMap cMulGenRight(const TermMap& h, int r) {
    TermMap out;
    out.reserve(h.size() * 2);
    for (auto& [w, p] : h) {
      EltId wr = W_.rightGen(w, r);
      if (W_.length(wr) > W_.length(w)) {
        addTo(out, w, p, 1, -1);
        addTo(out, wr, p, 1, -1);
      } else {
        addTo(out, w, p, 1, 1);
        addTo(out, wr, p, 1, 1);
      }
    }
    return out;
  }

  // ---- C-basis ----------------------------------------------------------

  // full T-expansion of C_w
  TermMap cBasisT(EltId w) {
    auto [ew, w0] = W_.stripTau(w);
    auto col = column(w0);
    TermMap out;
    auto ivl = W_.lowerInterval(w0);
    out.reserve(ivl.size());
    int lw = W_.length(w0);
    for (EltId y : ivl) {
      LPoly p = lookup(*col, y);
      if (!p.isZero()) addTo(out, ew ? W_.leftTau(y) : y, p, 1, -lw);
    }
    return out;
  }

  // exact product C_x C_y in the T-basis
  TermMap productCT(EltId x, EltId y) {
    // peel the shorter factor: h_{x,y,z} = h_{y^-1,x^-1,z^-1}
    if (W_.length(y) > W_.length(x)) {
      TermMap t = productCT(W_.inverse(y), W_.inverse(x));
      TermMap out;
      out.reserve(t.size());
      for (auto& [w, p] : t) out.emplace(W_.inverse(w), p);
      return out;
    }
    auto [ey, y0] = W_.stripTau(y);
    // C_{y0 tau} = C_{y0} T_tau: handle the twist on the W' part;
    // y = tau * y0 = (tau y0 tau) tau, and tau y0 tau is again in W'
    EltId yw = ey ? W_.mult(W_.mult(W_.tau(), y0), W_.tau()) : y0;
    std::unordered_map<EltId, TermMap> memo;
    const TermMap& res = peelRight(x, yw, memo);
    return ey ? tMulTau(res, /*onRight=*/true) : res;
  }

  // triangular conversion: T-map -> C-map (z -> h_z with sum h_z C_z)
  TermMap toCBasis(TermMap h) {
    TermMap out;
    if (h.empty()) return out;
    int maxLen = 0;
    std::vector<std::vector<EltId>> byLen;
    auto bucket = [&](EltId w) {
      int l = W_.length(w);
      if ((int)byLen.size() <= l) byLen.resize(l + 1);
      byLen[l].push_back(w);
    };
    for (auto& [w, p] : h) {
      bucket(w);
      maxLen = std::max(maxLen, W_.length(w));
    }
    for (int L = (int)byLen.size() - 1; L >= 0; --L) {
      // bucket may contain duplicates or consumed ids; check live coefficient
      std::sort(byLen[L].begin(), byLen[L].end());
      byLen[L].erase(std::unique(byLen[L].begin(), byLen[L].end()), byLen[L].end());
      for (EltId z : byLen[L]) {
        auto it = h.find(z);
        if (it == h.end() || it->second.isZero()) continue;
        LPoly hz = it->second.scaled(1, L);  // h_z = v^{l(z)} * coeff
        out.emplace(z, hz);
        // subtract hz * C_z
        auto [ez, z0] = W_.stripTau(z);
        auto col = column(z0);
        auto ivl = W_.lowerInterval(z0);
        for (EltId y : ivl) {
          LPoly p = lookup(*col, y);
          if (p.isZero()) continue;
          EltId yy = ez ? W_.leftTau(y) : y;
          auto& slot = h[yy];
          LPoly sub = hz * p;
          slot.addMul(sub, -1, -L);
          if (slot.isZero()) {
            h.erase(yy);
          } else if (yy != z && W_.length(yy) < L) {
            bucket(yy);  // may have just become live at a lower level
          }
        }
        assert(h.find(z) == h.end());
      }
    }
    assert(h.empty());
    return out;
  }

  // structure constants: z -> h_{x,y,z}
  TermMap cProduct(EltId x, EltId y) { return toCBasis(productCT(x, y)); }

  // ---- theta elements and Bernstein central elements ---------------------

  // theta_x = Ttilde_{t_y} Ttilde_{t_z}^{-1} for x = y - z, y,z dominant
  TermMap theta(std::array<int32_t, 3> x) {
    // fundamental-weight coordinates of x
    int32_t c1 = x[0] - x[1], c2 = x[1] - x[2], c3 = x[2];
    std::array<int32_t, 3> yv = {0, 0, 0}, zv = {0, 0, 0};
    auto acc = [](std::array<int32_t, 3>& v, int32_t c, int k) {
      // omega_1 = e1, omega_2 = e1+e2, omega_3 = e1+e2+e3
      for (int i = 0; i < k; ++i) v[i] += c;
    };
    acc(c1 >= 0 ? yv : zv, std::abs(c1), 1);
    acc(c2 >= 0 ? yv : zv, std::abs(c2), 2);
    acc(c3 >= 0 ? yv : zv, std::abs(c3), 3);
    return thetaFromPair(yv, zv);
  }

  // independent of the dominant decomposition; exposed for the property test
  TermMap thetaFromPair(std::array<int32_t, 3> yv, std::array<int32_t, 3> zv) {
    EltId ty = W_.translationElt(yv), tz = W_.translationElt(zv);
    TermMap h;
    h[ty] = LPoly(1, -W_.length(ty));  // Ttilde_{t_y}
    Word wz = W_.reducedWord(tz);
    for (auto it = wz.rbegin(); it != wz.rend(); ++it) {
      if (*it == 't')
        h = tMulTau(h, true);
      else
        h = tMulGenInv(h, *it - '0');
    }
    // Ttilde^{-1} carries v^{+l(t_z)}
    TermMap out;
    int lz = W_.length(tz);
    for (auto& [w, p] : h) out.emplace(w, p.scaled(1, lz));
    return out;
  }

  // S_{x_1}: six-term theta sum over the weight orbit {±e_i}
  TermMap bernsteinS1() {
    TermMap s;
    for (int i = 0; i < 3; ++i)
      for (int sign : {1, -1}) {
        std::array<int32_t, 3> w = {0, 0, 0};
        w[i] = sign;
        for (auto& [u, p] : theta(w)) addTo(s, u, p);
      }
    return s;
  }

  // S_{x_2}: twelve thetas over the orbit {±e_i ± e_j} plus 2 Ttilde_e
  TermMap bernsteinS2() {
    TermMap s;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        for (int si : {1, -1})
          for (int sj : {1, -1}) {
            std::array<int32_t, 3> w = {0, 0, 0};
            w[i] = si;
            w[j] = sj;
            for (auto& [u, p] : theta(w)) addTo(s, u, p);
          }
    addTo(s, W_.identity(), LPoly(2, 0));
    return s;
  }

  // h * h' in the T-basis (for small operands: Bernstein checks)
  TermMap tProduct(const TermMap& a, const TermMap& b) {
    TermMap out;
    for (auto& [w, p] : b) {
      // a * T_w by folding a reduced word of w on the right
      TermMap cur = a;
      Word rw = W_.reducedWord(w);
      if (!rw.empty() && rw[0] == 't') {
        cur = tMulTau(cur, true);
        rw.erase(0, 1);
      }
      for (char c : rw) cur = tMulGen(cur, c - '0', true);
      for (auto& [w2, p2] : cur) addTo(out, w2, p2 * p);
    }
    return out;
  }

  // mu-row access (shared with the windowed engine)
  std::shared_ptr<const MuRow> muRow(EltId w) {
    auto [ew, w0] = W_.stripTau(w);
    auto row = muRowAffine(w0);
    if (!ew) return row;
    auto shifted = std::make_shared<MuRow>();
    shifted->reserve(row->size());
    for (auto& [z, m] : *row) shifted->emplace_back(W_.leftTau(z), m);
    return shifted;
  }

  // ---- KL disk cache (JSON-lines) ----------------------------------------

  void saveCache(const std::string& path) {
    std::unique_lock<std::shared_mutex> lk(colMu_);
    std::string tmp = path + ".tmp";
    std::ofstream os(tmp);
    if (!os) throw std::runtime_error("cannot write cache: " + path);
    os << "{\"format\": 1, \"type\": \"B3~\"}\n";
    for (auto& [w, col] : cols_) {
      Word ww = W_.reducedWord(w);
      for (size_t i = 0; i < col->ys.size(); ++i) {
        os << "{\"y\": \"" << W_.reducedWord(col->ys[i]) << "\", \"w\": \"" << ww
           << "\", \"P\": {";
        const LPoly& p = poolGet(col->ps[i]);
        bool first = true;
        for (auto& [e, c] : p.terms()) {
          if (!first) os << ", ";
          first = false;
          os << "\"" << e / 2 << "\": " << c;
        }
        os << "}}\n";
      }
      os << "{\"endcol\": \"" << ww << "\", \"n\": " << col->ys.size() << "}\n";
    }
    os.close();
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
      throw std::runtime_error("cannot move cache into place: " + path);
  }

  // returns number of columns loaded; quietly ignores a missing file
  size_t loadCache(const std::string& path) {
    std::ifstream is(path);
    if (!is) return 0;
    std::string line;
    if (!std::getline(is, line)) return 0;
    {
      auto hdr = nlohmann::json::parse(line, nullptr, false);
      if (hdr.is_discarded() || hdr.value("format", 0) != 1 ||
          hdr.value("type", std::string()) != "B3~")
        throw std::runtime_error("cache header mismatch: " + path);
    }
    size_t loaded = 0;
    std::vector<std::pair<EltId, LPoly>> pending;
    EltId curW = kNoElt;
    while (std::getline(is, line)) {
      auto j = nlohmann::json::parse(line, nullptr, false);
      if (j.is_discarded()) break;  // truncated tail: ignore the rest
      if (j.contains("endcol")) {
        EltId w = W_.evaluate(j["endcol"].get<std::string>());
        if (w == curW && pending.size() == j.value("n", size_t(0))) {
          auto col = std::make_shared<KLColumn>();
          col->w = w;
          col->lw = (int16_t)W_.length(w);
          std::sort(pending.begin(), pending.end(),
                    [](const auto& a, const auto& b) { return a.first < b.first; });
          for (auto& [y, p] : pending) {
            col->ys.push_back(y);
            col->ps.push_back(poolIntern(p));
          }
          std::unique_lock<std::shared_mutex> lk(colMu_);
          if (cols_.emplace(w, col).second) ++loaded;
        }
        pending.clear();
        curW = kNoElt;
        continue;
      }
      EltId w = W_.evaluate(j["w"].get<std::string>());
      if (w != curW) {
        pending.clear();
        curW = w;
      }
      LPoly p;
      for (auto& [k, v] : j["P"].items())
        p.addTerm(2 * std::stoi(k), v.get<int64_t>());
      pending.emplace_back(W_.evaluate(j["y"].get<std::string>()), p);
    }
    return loaded;
  }

  size_t numColumns() {
    std::shared_lock<std::shared_mutex> lk(colMu_);
    return cols_.size();
  }

  // drop cached columns for elements of length > keepLen (memory relief)
  void evictColumns(int keepLen) {
    std::unique_lock<std::shared_mutex> lk(colMu_);
    for (auto it = cols_.begin(); it != cols_.end();) {
      if (it->second->lw > keepLen)
        it = cols_.erase(it);
      else
        ++it;
    }
  }

 private:
  // ---- pooled polynomials ------------------------------------------------

  uint32_t poolIntern(const LPoly& p) {
    {
      std::shared_lock<std::shared_mutex> lk(poolMu_);
      auto it = poolIdx_.find(p);
      if (it != poolIdx_.end()) return it->second;
    }
    std::unique_lock<std::shared_mutex> lk(poolMu_);
    auto it = poolIdx_.find(p);
    if (it != poolIdx_.end()) return it->second;
    uint32_t id = (uint32_t)pool_.size();
    pool_.push_back(p);
    poolIdx_.emplace(pool_.back(), id);
    return id;
  }

  const LPoly& poolGet(uint32_t i) {
    std::shared_lock<std::shared_mutex> lk(poolMu_);
    return pool_[i];
  }

  // ---- column machinery ---------------------------------------------------

  // P_{y,w} from an extremal-compressed column; y arbitrary
  LPoly lookup(const KLColumn& col, EltId y) {
    if (W_.length(y) > col.lw) return LPoly::zero();
    uint8_t lw = W_.leftDescentMask(col.w);
    while (true) {
      uint8_t up = lw & ~W_.leftDescentMask(y);
      if (!up) break;
      int s = 0;
      while (!(up & (1 << s))) ++s;
      y = W_.leftGen(s, y);
      if (W_.length(y) > col.lw) return LPoly::zero();
    }
    auto it = std::lower_bound(col.ys.begin(), col.ys.end(), y);
    if (it == col.ys.end() || *it != y) return LPoly::zero();
    return poolGet(col.ps[it - col.ys.begin()]);
  }

  std::shared_ptr<const KLColumn> column(EltId w) {
    assert(W_.inAffine(w));
    // compute-once protocol: column dependencies strictly decrease length,
    // so waiting on another worker cannot deadlock
    while (true) {
      {
        std::shared_lock<std::shared_mutex> lk(colMu_);
        auto it = cols_.find(w);
        if (it != cols_.end()) return it->second;
      }
      std::unique_lock<std::mutex> lk(progMu_);
      if (!inProgress_.count(w)) {
        inProgress_.insert(w);
        break;
      }
      progCv_.wait(lk);
    }
    std::shared_ptr<const KLColumn> res;
    try {
      res = computeColumn(w);
    } catch (...) {
      std::unique_lock<std::mutex> lk(progMu_);
      inProgress_.erase(w);
      progCv_.notify_all();
      throw;
    }
    {
      std::unique_lock<std::shared_mutex> lk(colMu_);
      cols_.emplace(w, res);
    }
    {
      std::unique_lock<std::mutex> lk(progMu_);
      inProgress_.erase(w);
      progCv_.notify_all();
    }
    return res;
  }

  std::shared_ptr<const KLColumn> computeColumn(EltId w) {
    auto col = std::make_shared<KLColumn>();
    col->w = w;
    col->lw = (int16_t)W_.length(w);
    if (col->lw == 0) {
      col->ys = {w};
      col->ps = {poolIntern(LPoly::one())};
      return col;
    }
    uint8_t lmask = W_.leftDescentMask(w);
    int s = 0;
    while (!(lmask & (1 << s))) ++s;
    EltId v = W_.leftGen(s, w);
    auto colv = column(v);
    auto ivl = W_.lowerInterval(v);

    TermMap A;  // y -> P accumulation over I(w) = I(v) u s I(v)
    A.reserve(ivl.size() * 2);
    for (EltId y : ivl) {
      LPoly p = lookup(*colv, y);
      if (p.isZero()) continue;
      EltId sy = W_.leftGen(s, y);
      if (W_.length(sy) > W_.length(y)) {
        addTo(A, sy, p);
        addTo(A, y, p);
      } else {
        addTo(A, sy, p, 1, 2);
        addTo(A, y, p, 1, 2);
      }
    }
    // corrections: all z < v with sz < z and mu(z,v) != 0
    auto row = muRowAffine(v);
    int lv = col->lw - 1;
    for (auto& [z, m] : *row) {
      if (!W_.isLeftDescent(s, z)) continue;
      auto colz = column(z);
      int shift = col->lw - W_.length(z);
      for (EltId y : ivl) {
        LPoly p = lookup(*colz, y);
        if (!p.isZero()) addTo(A, y, p, -m, shift);
      }
    }
    (void)lv;

    // keep extremal nonzero entries
    std::vector<std::pair<EltId, LPoly>> kept;
    for (auto& [y, p] : A) {
      if (p.isZero()) continue;
      if ((W_.leftDescentMask(y) & lmask) != lmask) continue;
      int bound = col->lw - W_.length(y) - 1;
      if (y != w && p.degree() > bound)
        throw std::logic_error("KL degree bound violated");
      for (auto& [e, c] : p.terms()) {
        if (e % 2 != 0) throw std::logic_error("KL polynomial with odd v-exponent");
        if (c < 0) throw std::logic_error("negative KL coefficient");
      }
      kept.emplace_back(y, std::move(p));
    }
    std::sort(kept.begin(), kept.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    col->ys.reserve(kept.size());
    col->ps.reserve(kept.size());
    for (auto& [y, p] : kept) {
      col->ys.push_back(y);
      col->ps.push_back(poolIntern(p));
    }
    if (lookup(*col, w) != LPoly::one()) throw std::logic_error("P_{w,w} != 1");
    return col;
  }

  std::shared_ptr<const MuRow> muRowAffine(EltId w) {
    {
      std::shared_lock<std::shared_mutex> lk(muMu_);
      auto it = muRows_.find(w);
      if (it != muRows_.end()) return it->second;
    }
    auto col = column(w);
    auto row = std::make_shared<MuRow>();
    int lw = W_.length(w);
    // coatoms all carry mu = 1 (constant term of P is 1)
    for (EltId y : W_.lowerInterval(w))
      if (W_.length(y) == lw - 1) row->emplace_back(y, 1);
    for (size_t i = 0; i < col->ys.size(); ++i) {
      int d = lw - W_.length(col->ys[i]);
      if (d < 3) continue;
      int64_t c = poolGet(col->ps[i]).coeff(d - 1);
      if (c != 0) row->emplace_back(col->ys[i], c);
    }
    std::sort(row->begin(), row->end());
    std::unique_lock<std::shared_mutex> lk(muMu_);
    auto [it, ok] = muRows_.emplace(w, row);
    return it->second;
  }

  // F(u) = C_x C_u for u in W', by right peeling
  const TermMap& peelRight(EltId x, EltId u, std::unordered_map<EltId, TermMap>& memo) {
    auto it = memo.find(u);
    if (it != memo.end()) return it->second;
    TermMap res;
    if (W_.length(u) == 0) {
      res = cBasisT(x);
      if (u != W_.identity()) res = tMulTau(res, true);
    } else {
      uint8_t m = W_.rightDescentMask(u);
      int r = 0;
      while (!(m & (1 << r))) ++r;
      EltId v = W_.rightGen(u, r);
      const TermMap& Fv = peelRight(x, v, memo);
      res = cMulGenRight(Fv, r);
      auto row = muRow(v);
      for (auto& [z, mz] : *row) {
        if (!W_.isRightDescent(z, r)) continue;
        const TermMap& Fz = peelRight(x, z, memo);
        for (auto& [w2, p] : Fz) addTo(res, w2, p, -mz);
      }
    }
    auto [it2, ok] = memo.emplace(u, std::move(res));
    return it2->second;
  }

  WeylGroup& W_;

  std::shared_mutex poolMu_;
  std::deque<LPoly> pool_;  // deque: stable references across appends
  std::unordered_map<LPoly, uint32_t, LPolyHash> poolIdx_;

  std::shared_mutex colMu_;
  std::unordered_map<EltId, std::shared_ptr<const KLColumn>> cols_;
  std::mutex progMu_;
  std::condition_variable progCv_;
  std::unordered_set<EltId> inProgress_;

  std::shared_mutex muMu_;
  std::unordered_map<EltId, std::shared_ptr<const MuRow>> muRows_;
};

}  // namespace cellring
