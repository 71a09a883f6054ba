// The representation ring of F_c = Sp_4(C) x Z/2Z.
//
// Irreducibles are V(a,b) = V(a*lambda1 + b*lambda2) and their eps-twists.
// Weights live in the fundamental-weight basis with lambda1 = e1,
// lambda2 = e1 + e2 in orthogonal coordinates (type C_2: positive roots
// e1-e2, e1+e2, 2e1, 2e2, rho = (2,1)).
//
// Tensor products are decomposed by the sign-corrected weight-shift rule
// (Klimyk): for each weight nu of the second factor, lambda + nu + rho is
// either singular (dropped) or conjugated to the strictly dominant chamber
// with the determinant sign.  Weight multiplicities come from the Freudenthal
// recursion.  The character ring over Z[x1^, x2^] provides an independent
// oracle: multiply characters and strip highest terms.

#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cellring/laurent.hpp"  // checked arithmetic helpers

namespace cellring {

// weight in fundamental coordinates (a,b): a*lambda1 + b*lambda2
using Wt = std::pair<int, int>;

// orthogonal coordinates: lambda1 = (1,0), lambda2 = (1,1)
inline std::pair<int, int> toOrth(Wt w) { return {w.first + w.second, w.second}; }
inline Wt fromOrth(std::pair<int, int> o) { return {o.first - o.second, o.second}; }

struct IrrClass {
  int a = 0, b = 0;  // highest weight a*lambda1 + b*lambda2
  int eps = 0;       // Z/2 twist
  auto operator<=>(const IrrClass&) const = default;
  std::string str() const {
    std::ostringstream os;
    if (eps) os << "e";
    os << "V(" << a << "," << b << ")";
    return os.str();
  }
};

// virtual representation: finite Z-combination of irreducible classes
using VirtualRep = std::map<IrrClass, int64_t>;

inline void addRep(VirtualRep& v, const IrrClass& c, int64_t m) {
  if (m == 0) return;
  auto it = v.find(c);
  if (it == v.end()) {
    v.emplace(c, m);
  } else {
    it->second = checkedAdd(it->second, m);
    if (it->second == 0) v.erase(it);
  }
}

// two-variable Laurent polynomial over orthogonal monomials x1^i x2^j
using TwoVarPoly = std::map<std::pair<int, int>, int64_t>;

inline void addMono(TwoVarPoly& p, std::pair<int, int> e, int64_t c) {
  if (c == 0) return;
  auto it = p.find(e);
  if (it == p.end()) {
    p.emplace(e, c);
  } else {
    it->second = checkedAdd(it->second, c);
    if (it->second == 0) p.erase(it);
  }
}

inline TwoVarPoly mulPoly(const TwoVarPoly& a, const TwoVarPoly& b) {
  TwoVarPoly r;
  for (auto& [ea, ca] : a)
    for (auto& [eb, cb] : b)
      addMono(r, {ea.first + eb.first, ea.second + eb.second}, checkedMul(ca, cb));
  return r;
}

class RepRing {
 public:
  // Weyl dimension formula for C_2
  int64_t dim(const IrrClass& c) const {
    int64_t p = c.a + c.b + 2, q = c.b + 1;
    return (p - q) * q * (p + q) * p / 6;
  }

  // orbit of a weight under the Weyl group of C_2 (signed permutations)
  std::vector<Wt> weightOrbit(Wt w) const {
    auto [x, y] = toOrth(w);
    std::vector<Wt> out;
    for (int swap = 0; swap < 2; ++swap)
      for (int sx : {1, -1})
        for (int sy : {1, -1}) {
          std::pair<int, int> o = swap ? std::make_pair(sx * y, sy * x)
                                       : std::make_pair(sx * x, sy * y);
          Wt f = fromOrth(o);
          if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
        }
    return out;
  }

  // weight multiplicities of V(a,b) at dominant weights (Freudenthal)
  const std::map<Wt, int64_t>& dominantMults(const IrrClass& c) {
    Wt key = {c.a, c.b};
    auto it = freud_.find(key);
    if (it != freud_.end()) return it->second;

    auto ip = [](std::pair<int, int> u, std::pair<int, int> v) {
      return u.first * v.first + u.second * v.second;
    };
    static const std::array<std::pair<int, int>, 4> pos = {
        {{1, -1}, {1, 1}, {2, 0}, {0, 2}}};
    auto lam = toOrth(key);
    std::pair<int, int> rho = {2, 1};
    auto lr = std::make_pair(lam.first + rho.first, lam.second + rho.second);
    int64_t clam = ip(lr, lr);

    // dominant weights below lambda in the same root-lattice coset
    std::vector<std::pair<int, int>> doms;
    for (int x = lam.first; x >= 0; --x)
      for (int y = std::min(x, lam.second + (lam.first - x)); y >= 0; --y) {
        if (((lam.first + lam.second) - (x + y)) % 2 != 0) continue;
        // mu <= lambda iff lambda - mu is a nonneg combination of simple roots
        int dx = lam.first - x, dy = lam.second - y;
        // alpha1 = (1,-1), alpha2 = (0,2): lambda - mu = k1 a1 + k2 a2
        int k1 = dx, k2t = dy + dx;  // 2 k2 = dy + k1
        if (k1 < 0 || k2t < 0 || k2t % 2 != 0) continue;
        doms.push_back({x, y});
      }
    // order so that mu + k*alpha is always processed before mu; alpha1 has
    // coordinate sum 0, hence the tie-break on the first coordinate
    std::sort(doms.begin(), doms.end(), [&](auto u, auto v) {
      if (u.first + u.second != v.first + v.second)
        return u.first + u.second > v.first + v.second;
      return u.first > v.first;
    });

    std::map<std::pair<int, int>, int64_t> morth;  // orthogonal coords
    auto multAt = [&](std::pair<int, int> mu) -> int64_t {
      // conjugate to dominant
      int x = std::abs(mu.first), y = std::abs(mu.second);
      if (x < y) std::swap(x, y);
      auto it2 = morth.find({x, y});
      return it2 == morth.end() ? 0 : it2->second;
    };
    for (auto mu : doms) {
      if (mu == lam) {
        morth[mu] = 1;
        continue;
      }
      auto mr = std::make_pair(mu.first + rho.first, mu.second + rho.second);
      int64_t denom = clam - ip(mr, mr);
      if (denom <= 0) throw std::logic_error("Freudenthal: bad denominator");
      int64_t acc = 0;
      int bound = lam.first + lam.second;  // any weight has sup-norm <= bound
      for (auto& al : pos)
        for (int k = 1; k <= 2 * bound + 2; ++k) {
          std::pair<int, int> nu = {mu.first + k * al.first, mu.second + k * al.second};
          if (std::max(std::abs(nu.first), std::abs(nu.second)) > bound) break;
          int64_t m = multAt(nu);
          if (m != 0) acc = checkedAdd(acc, checkedMul(m, ip(nu, al)));
        }
      int64_t m = 2 * acc / denom;
      if (2 * acc % denom != 0) throw std::logic_error("Freudenthal: non-integral");
      if (m != 0) morth[mu] = m;
    }

    std::map<Wt, int64_t> out;
    for (auto& [o, m] : morth) out.emplace(fromOrth(o), m);
    auto [ins, ok] = freud_.emplace(key, std::move(out));
    return ins->second;
  }

  // multiplicity of an arbitrary weight in V(c)
  int64_t weightMultiplicity(Wt mu, const IrrClass& c) {
    auto o = toOrth(mu);
    int x = std::abs(o.first), y = std::abs(o.second);
    if (x < y) std::swap(x, y);
    const auto& dm = dominantMults(c);
    auto it = dm.find(fromOrth({x, y}));
    return it == dm.end() ? 0 : it->second;
  }

  // all weights with multiplicities (Weyl-orbit extension of the dominant part)
  std::vector<std::pair<Wt, int64_t>> weights(const IrrClass& c) {
    std::vector<std::pair<Wt, int64_t>> out;
    for (auto& [mu, m] : dominantMults(c))
      for (Wt w : weightOrbit(mu)) out.emplace_back(w, m);
    return out;
  }

  // formal character over orthogonal monomials
  TwoVarPoly character(const IrrClass& c) {
    TwoVarPoly p;
    for (auto& [w, m] : weights(c)) addMono(p, toOrth(w), m);
    return p;
  }

  // sign-corrected weight-shift rule; eps bits add mod 2
  VirtualRep tensor(const IrrClass& x, const IrrClass& y) {
    int eps = (x.eps + y.eps) % 2;
    auto lr = toOrth({x.a, x.b});
    lr.first += 2;
    lr.second += 1;  // lambda + rho
    VirtualRep out;
    for (auto& [nu, m] : weights(y)) {
      auto o = toOrth(nu);
      int X = lr.first + o.first, Y = lr.second + o.second;
      if (X == 0 || Y == 0 || std::abs(X) == std::abs(Y)) continue;  // singular
      int sign = 1;
      if (X < 0) {
        X = -X;
        sign = -sign;
      }
      if (Y < 0) {
        Y = -Y;
        sign = -sign;
      }
      if (X < Y) {
        std::swap(X, Y);
        sign = -sign;
      }
      Wt hw = fromOrth({X - 2, Y - 1});
      addRep(out, {hw.first, hw.second, eps}, sign * m);
    }
    for (auto& [c, m] : out)
      if (m < 0) throw std::logic_error("negative multiplicity survived Klimyk");
    return out;
  }

  VirtualRep tensor(const VirtualRep& x, const VirtualRep& y) {
    VirtualRep out;
    for (auto& [cx, mx] : x)
      for (auto& [cy, my] : y)
        for (auto& [cz, mz] : tensor(cx, cy))
          addRep(out, cz, checkedMul(checkedMul(mx, my), mz));
    return out;
  }

  // independent oracle: multiply characters, strip highest dominant terms
  VirtualRep tensorByCharacters(const IrrClass& x, const IrrClass& y) {
    int eps = (x.eps + y.eps) % 2;
    TwoVarPoly prod = mulPoly(character(x), character(y));
    VirtualRep out;
    while (!prod.empty()) {
      // highest dominant monomial by height then lexicographic
      auto best = prod.end();
      for (auto it = prod.begin(); it != prod.end(); ++it) {
        auto [e, cm] = *it;
        if (e.first < e.second || e.second < 0) continue;  // not dominant
        if (best == prod.end() || e.first + e.second > best->first.first + best->first.second ||
            (e.first + e.second == best->first.first + best->first.second &&
             e.first > best->first.first))
          best = it;
      }
      if (best == prod.end()) throw std::logic_error("character residue has no dominant term");
      Wt hw = fromOrth(best->first);
      int64_t mult = best->second;
      if (mult < 0) throw std::logic_error("negative character multiplicity");
      IrrClass c{hw.first, hw.second, eps};
      addRep(out, c, mult);
      TwoVarPoly ch = character(IrrClass{hw.first, hw.second, 0});
      for (auto& [e, cm] : ch) addMono(prod, e, -checkedMul(cm, mult));
    }
    return out;
  }

  // parse "V(a,b)" / "eV(a,b)"
  static IrrClass parse(const std::string& s) {
    IrrClass c;
    size_t p = 0;
    if (!s.empty() && s[0] == 'e') {
      c.eps = 1;
      p = 1;
    }
    if (s.compare(p, 2, "V(") != 0) throw std::invalid_argument("bad class: " + s);
    size_t comma = s.find(',', p), close = s.find(')', p);
    if (comma == std::string::npos || close == std::string::npos)
      throw std::invalid_argument("bad class: " + s);
    c.a = std::stoi(s.substr(p + 2, comma - p - 2));
    c.b = std::stoi(s.substr(comma + 1, close - comma - 1));
    return c;
  }

 private:
  std::map<Wt, std::map<Wt, int64_t>> freud_;
};

inline std::string repStr(const VirtualRep& v) {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [c, m] : v) {
    if (!first) os << " + ";
    first = false;
    if (m != 1) os << m << "*";
    os << c.str();
  }
  return os.str();
}

}  // namespace cellring
