// Strings, star operations, and the combinatorics of the two-sided cell c
// containing w_012 = r0 r1 r2 r0 r1 r2 (a-value 6, 24 left cells).
//
// A left string with respect to a non-commuting pair {r,t} (m = order of rt)
// consists of the m-1 elements r w, t r w, r t r w, ...; the star of the i-th
// element is the (m-i)-th.  Right strings mirror this.  Right stars move an
// element across left cells, left stars across right cells, and the two
// commute.
//
// The 24 left cells are encoded by Du's representatives.  The star graphs on
// them are DERIVED by applying right stars to the representatives (every
// image is again a listed representative) and checked against the statically
// encoded graphs of the paper's lemma.  Canonical star paths are spanning
// trees of those graphs rooted at G012, G03, G013p, G02; the cell window is
// enumerated by transporting the parametrized base intersections
//     x_{i,j} = w_012 (tau r3 r2 r0 r1 r2)^i (r3 r2 r0 r1)^{2j},
// (eps = explicit leading tau) along those paths.  Membership in c is decided
// by this enumeration, never recomputed from scratch.

#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "cellring/hecke.hpp"
#include "cellring/weyl.hpp"

namespace cellring {

struct NotInString : std::runtime_error {
  NotInString() : std::runtime_error("element is not inside a string") {}
};

struct NotFound : std::runtime_error {
  explicit NotFound(const std::string& m) : std::runtime_error(m) {}
};

struct StarContext {
  int r, t;
  bool left;  // side of the string (left strings use left descents)
};

struct StringPosition {
  std::vector<EltId> elems;  // the m-1 elements of the string
  int pos = 0;               // 1-based index of x
};

// the full string through x and x's position in it
inline StringPosition stringThrough(WeylGroup& W, EltId x, const StarContext& c) {
  int m = coxeterM(c.r, c.t);
  if (m < 3) throw std::invalid_argument("star pair must have order >= 3");
  auto desc = [&](EltId u, int g) {
    return c.left ? W.isLeftDescent(g, u) : W.isRightDescent(u, g);
  };
  auto mul = [&](int g, EltId u) { return c.left ? W.leftGen(g, u) : W.rightGen(u, g); };
  if (desc(x, c.r) == desc(x, c.t)) throw NotInString();
  EltId cur = x;
  std::vector<int> popped;
  while (true) {
    bool dr = desc(cur, c.r), dt = desc(cur, c.t);
    if (dr && dt) throw NotInString();  // fell onto the long element
    if (!dr && !dt) break;
    int g = dr ? c.r : c.t;
    popped.push_back(g);
    cur = mul(g, cur);
  }
  StringPosition sp;
  int first = popped.back();
  int other = first == c.r ? c.t : c.r;
  EltId e = mul(first, cur);
  sp.elems.push_back(e);
  for (int i = 1; i < m - 1; ++i) {
    e = mul(i % 2 == 1 ? other : first, e);
    sp.elems.push_back(e);
  }
  sp.pos = (int)popped.size();
  assert(sp.pos >= 1 && sp.pos <= m - 1);
  assert(sp.elems[sp.pos - 1] == x);
  return sp;
}

// the (m-i)-th element of x's string; an involution on strings
inline EltId star(WeylGroup& W, EltId x, const StarContext& c) {
  StringPosition sp = stringThrough(W, x, c);
  int m = coxeterM(c.r, c.t);
  return sp.elems[m - sp.pos - 1];
}

// *(x^star) = (*x)^star; both orders are computed and must agree
inline EltId commuteStars(WeylGroup& W, EltId x, const StarContext& lc,
                          const StarContext& rc) {
  if (!lc.left || rc.left) throw std::invalid_argument("expected (left, right) pair");
  EltId a = star(W, star(W, x, rc), lc);
  EltId b = star(W, star(W, x, lc), rc);
  if (a != b) throw std::logic_error("left and right stars failed to commute");
  return a;
}

// descent-set certificate: max l(w_0(J)) over finite standard parabolic
// J inside L(w) or R(w); a guaranteed lower bound for the a-function
inline int aLowerBound(WeylGroup& W, EltId w) {
  static const std::array<int, 16> best = [] {
    std::array<int, 16> t{};
    auto set = [&](std::initializer_list<int> gens, int v) {
      int m = 0;
      for (int g : gens) m |= 1 << g;
      t[m] = v;
    };
    set({0}, 1), set({1}, 1), set({2}, 1), set({3}, 1);
    set({0, 1}, 2), set({0, 3}, 2), set({1, 3}, 2);
    set({0, 2}, 3), set({1, 2}, 3);
    set({2, 3}, 4);
    set({0, 1, 2}, 6);  // type A_3
    set({0, 1, 3}, 3);  // A_1 x A_1 x A_1
    set({0, 2, 3}, 9);  // type B_3
    set({1, 2, 3}, 9);  // type B_3
    // {0,1,2,3} generates the whole affine group: never a certificate
    std::array<int, 16> b{};
    for (int m = 0; m < 16; ++m)
      for (int s = 0; s < 16; ++s)
        if ((s & m) == s && s != 15) b[m] = std::max(b[m], t[s]);
    return b;
  }();
  return std::max(best[W.leftDescentMask(w)], best[W.rightDescentMask(w)]);
}

// ---- the 24 left cells ------------------------------------------------------

struct LeftCellLabel {
  const char* name;  // ASCII: prime = p, hat = h, double prime = pp
  const char* rep;   // Du's representative, as a word
  uint8_t rset;      // R-set encoded by the subscript
  int group;         // Y-partition index, 1..4
};

inline const std::array<LeftCellLabel, 24>& leftCellTable() {
  auto R = [](std::initializer_list<int> gens) {
    uint8_t m = 0;
    for (int g : gens) m |= 1 << g;
    return m;
  };
  static const std::array<LeftCellLabel, 24> t = {{
      {"G012", "012012", R({0, 1, 2}), 1},
      {"G013", "0120123", R({0, 1, 3}), 1},
      {"G2", "01201232", R({2}), 1},
      {"G23", "012012323", R({2, 3}), 2},
      {"G02", "012012320", R({0, 2}), 4},
      {"G03", "0120123203", R({0, 3}), 2},
      {"G12", "012012321", R({1, 2}), 4},
      {"G13", "0120123213", R({1, 3}), 2},
      {"G01", "0120123201", R({0, 1}), 4},
      {"G013p", "01201232013", R({0, 1, 3}), 3},
      {"G2p", "012012320132", R({2}), 3},
      {"G3", "0120123201323", R({3}), 3},
      {"G02p", "01201232032", R({0, 2}), 4},
      {"G01p", "012012320321", R({0, 1}), 4},
      {"G12p", "01201232132", R({1, 2}), 4},
      {"G01ph", "012012321320", R({0, 1}), 4},
      {"G12pp", "0120123203212", R({1, 2}), 4},
      {"G13p", "01201232032123", R({1, 3}), 4},
      {"G2pp", "012012320321232", R({2}), 4},
      {"G0", "0120123203212320", R({0}), 4},
      {"G02pp", "0120123213202", R({0, 2}), 4},
      {"G03p", "01201232132023", R({0, 3}), 4},
      {"G2pph", "012012321320232", R({2}), 4},
      {"G1", "0120123213202321", R({1}), 4},
  }};
  return t;
}

inline int labelByName(const std::string& name) {
  const auto& t = leftCellTable();
  for (int i = 0; i < 24; ++i)
    if (name == t[i].name) return i;
  throw NotFound("unknown left cell label: " + name);
}

// an element of c with its position data: x in Gamma cap Theta^{-1}
struct CellPoint {
  EltId elt = kNoElt;
  int8_t leftCell = -1;   // Gamma
  int8_t rightCell = -1;  // Theta
  int16_t i = 0, j = 0;
  int8_t eps = 0;
};

// star edge between left cells
struct CellEdge {
  int from, to;
  int r, t;
};

class CellData {
 public:
  CellData(WeylGroup& W, HeckeAlgebra& H) : W_(W), H_(H) {
    const auto& tab = leftCellTable();
    for (int i = 0; i < 24; ++i) {
      reps_[i] = W_.evaluate(tab[i].rep);
      if (W_.rightDescentMask(reps_[i]) != tab[i].rset)
        throw std::logic_error("representative R-set mismatch");
    }
    deriveGraphs();
  }

  WeylGroup& weyl() { return W_; }
  EltId rep(int label) const { return reps_[label]; }
  int group(int label) const { return leftCellTable()[label].group; }

  // star graph edges derived from the representatives
  const std::vector<CellEdge>& starEdges() const { return edges_; }

  // canonical star path (sequence of pairs) from the group root to the label
  const std::vector<std::pair<int, int>>& pathFromRoot(int label) const {
    return paths_[label];
  }

  static int groupRoot(int group) {
    switch (group) {
      case 1: return 0;   // G012
      case 2: return 5;   // G03
      case 3: return 9;   // G013p
      case 4: return 4;   // G02
    }
    throw std::invalid_argument("bad Y group");
  }

  // ---- base parametrization -------------------------------------------------

  // x_{i,j}, with the tau twist when eps = 1
  EltId baseX(int i, int j, int eps) {
    EltId x = W_.evaluate("012012");
    EltId tu = W_.evaluate("t32012");
    EltId m = W_.evaluate("32013201");
    for (int k = 0; k < i; ++k) x = W_.mult(x, tu);
    for (int k = 0; k < j; ++k) x = W_.mult(x, m);
    if (eps) x = W_.leftTau(x);
    if (W_.length(x) != 6 + 5 * i + 8 * j)
      throw std::logic_error("base parametrization is not reduced");
    return x;
  }

  // the ten base intersections of the paper, by root-pair; elements are
  // prefix * y * suffix over y = x_{i,j} with the tau twist
  struct BasePair {
    int gamma, theta;  // label indices
    Word prefix, suffix;
  };

  const std::vector<BasePair>& basePairs() {
    static const std::vector<BasePair> bp = {
        {0, 0, "", ""},            // G012 cap G012^-1
        {4, 4, "023", "320"},      // G02 cap G02^-1
        {5, 5, "3023", "3203"},    // G03 cap G03^-1
        {9, 9, "13023", "32031"},  // G013p cap G013p^-1
        {0, 4, "023", ""},         // G012 cap G02^-1
        {0, 5, "3023", ""},        // G012 cap G03^-1
        {0, 9, "13023", ""},       // G012 cap G013p^-1
        {4, 5, "3023", "320"},     // G02 cap G03^-1
        {4, 9, "13023", "320"},    // G02 cap G013p^-1
        {5, 9, "13023", "3203"},   // G03 cap G013p^-1
    };
    return bp;
  }

  // one base-intersection element; inverted pairs come from x |-> x^{-1}
  EltId baseElt(const BasePair& bp, int i, int j, int eps, bool inverted) {
    EltId y = baseX(i, j, eps);
    EltId p = W_.evaluate(bp.prefix), s = W_.evaluate(bp.suffix);
    EltId x = W_.mult(W_.mult(p, y), s);
    int expect = W_.length(y) + W_.length(p) + W_.length(s);
    if (W_.length(x) != expect)
      throw std::logic_error("base intersection word is not reduced");
    return inverted ? W_.inverse(x) : x;
  }

  // named access for the ten base sets ("G012:G012", "G02:G02", ...)
  std::vector<CellPoint> baseSet(const std::string& which, int maxIJ) {
    for (const auto& bp : basePairs()) {
      std::string name = std::string(leftCellTable()[bp.gamma].name) + ":" +
                         leftCellTable()[bp.theta].name;
      if (name != which) continue;
      std::vector<CellPoint> out;
      for (int i = 0; i + 0 <= maxIJ; ++i)
        for (int j = 0; i + j <= maxIJ; ++j)
          for (int eps = 0; eps < 2; ++eps) {
            CellPoint cp;
            cp.elt = baseElt(bp, i, j, eps, false);
            cp.leftCell = (int8_t)bp.gamma;
            cp.rightCell = (int8_t)bp.theta;
            cp.i = (int16_t)i;
            cp.j = (int16_t)j;
            cp.eps = (int8_t)eps;
            out.push_back(cp);
          }
      return out;
    }
    throw NotFound("unknown base intersection: " + which);
  }

  // ---- window enumeration -----------------------------------------------------

  // transport one element along right stars (path for the left label) and
  // left stars (path for the right label)
  EltId transport(EltId x, int gamma, int theta) {
    for (auto [r, t] : paths_[gamma]) x = star(W_, x, {r, t, /*left=*/false});
    for (auto [r, t] : paths_[theta]) x = star(W_, x, {r, t, /*left=*/true});
    return x;
  }

  // enumerate all of c up to length maxLen (complete within that bound);
  // lengths inside one transported family grow as offset + 5i + 8j, which is
  // asserted element by element
  void enumerateWindow(int maxLen) {
    if (maxLen <= windowLen_) return;
    byElt_.clear();
    byPair_.assign(24 * 24, {});
    windowLen_ = maxLen;
    for (int gamma = 0; gamma < 24; ++gamma)
      for (int theta = 0; theta < 24; ++theta) {
        const BasePair* base = nullptr;
        bool inverted = false;
        int rg = groupRoot(group(gamma)), rt = groupRoot(group(theta));
        for (const auto& bp : basePairs()) {
          if (bp.gamma == rg && bp.theta == rt) base = &bp;
          if (bp.gamma == rt && bp.theta == rg && !base) {
            base = &bp;
            inverted = true;
          }
        }
        if (!base) throw std::logic_error("no base pair for group combination");
        int off = W_.length(transport(baseElt(*base, 0, 0, 0, inverted), gamma, theta));
        if (off > maxLen) continue;
        for (int i = 0; off + 5 * i <= maxLen; ++i)
          for (int j = 0; off + 5 * i + 8 * j <= maxLen; ++j)
            for (int eps = 0; eps < 2; ++eps) {
              EltId x = baseElt(*base, i, j, eps, inverted);
              EltId y = transport(x, gamma, theta);
              if (W_.length(y) != off + 5 * i + 8 * j)
                throw std::logic_error("transported family length is not affine in (i,j)");
              CellPoint cp{y, (int8_t)gamma, (int8_t)theta, (int16_t)i,
                           (int16_t)j, (int8_t)eps};
              auto [it, fresh] = byElt_.emplace(y, cp);
              if (!fresh) throw std::logic_error("cell window collision");
              byPair_[gamma * 24 + theta].push_back(y);
            }
      }
    for (auto& v : byPair_)
      std::sort(v.begin(), v.end(), [&](EltId a, EltId b) {
        if (W_.length(a) != W_.length(b)) return W_.length(a) < W_.length(b);
        return a < b;
      });
  }

  int windowLen() const { return windowLen_; }

  bool inWindow(EltId x) const { return byElt_.count(x) > 0; }

  const CellPoint* find(EltId x) const {
    auto it = byElt_.find(x);
    return it == byElt_.end() ? nullptr : &it->second;
  }

  const CellPoint& at(EltId x) const {
    auto it = byElt_.find(x);
    if (it == byElt_.end()) throw NotFound("element outside the enumerated window");
    return it->second;
  }

  const std::vector<EltId>& pairMembers(int gamma, int theta) const {
    return byPair_[gamma * 24 + theta];
  }

  const std::unordered_map<EltId, CellPoint>& window() const { return byElt_; }

  // point of the given coordinates (window must cover it)
  EltId pointAt(int gamma, int theta, int i, int j, int eps) {
    for (EltId x : byPair_[gamma * 24 + theta]) {
      const CellPoint& cp = byElt_.at(x);
      if (cp.i == i && cp.j == j && cp.eps == eps) return x;
    }
    throw NotFound("cell point not inside the enumerated window");
  }

  // the unique distinguished involution of the left cell within the window:
  // z = z^{-1} in Gamma cap Gamma^{-1} with l(z) - 6 - 2 delta(z) = 0
  EltId distinguishedInvolution(int gamma, int searchLen) {
    auto it = dinv_.find(gamma);
    if (it != dinv_.end()) return it->second;
    EltId found = kNoElt;
    for (EltId z : pairMembers(gamma, gamma)) {
      if (W_.length(z) > searchLen) break;
      if (!W_.inAffine(z)) continue;  // delta(z) = -inf off the coset
      if (W_.inverse(z) != z) continue;
      if (W_.length(z) - 6 - 2 * H_.delta(z) != 0) continue;
      if (found != kNoElt) throw std::logic_error("two distinguished involutions");
      found = z;
    }
    if (found == kNoElt)
      throw NotFound("no distinguished involution within the search bound");
    dinv_.emplace(gamma, found);
    return found;
  }

 private:
  void deriveGraphs() {
    static const int pairs[3][2] = {{0, 2}, {1, 2}, {2, 3}};
    std::map<EltId, int> byRep;
    for (int i = 0; i < 24; ++i) byRep[reps_[i]] = i;
    for (int i = 0; i < 24; ++i)
      for (auto& pr : pairs) {
        EltId img;
        try {
          img = star(W_, reps_[i], {pr[0], pr[1], /*left=*/false});
        } catch (const NotInString&) {
          continue;
        }
        auto it = byRep.find(img);
        if (it == byRep.end())
          throw std::logic_error("star image of a representative is not a representative");
        if (it->second == i) continue;  // fixed by the middle of a 4-string
        if (it->second > i) edges_.push_back({i, it->second, pr[0], pr[1]});
      }
    // spanning trees rooted at the four group roots, BFS in edge order
    for (auto& p : paths_) p.clear();
    std::array<bool, 24> seen{};
    for (int g = 1; g <= 4; ++g) {
      int root = groupRoot(g);
      seen[root] = true;
      std::vector<int> frontier = {root};
      while (!frontier.empty()) {
        std::vector<int> next;
        for (int v : frontier)
          for (const auto& e : edges_) {
            int other = -1;
            if (e.from == v) other = e.to;
            if (e.to == v) other = e.from;
            if (other < 0 || seen[other]) continue;
            seen[other] = true;
            paths_[other] = paths_[v];
            paths_[other].push_back({e.r, e.t});
            next.push_back(other);
          }
        frontier = std::move(next);
      }
    }
    for (int i = 0; i < 24; ++i)
      if (!seen[i]) throw std::logic_error("left cell unreachable from its group root");
  }

  WeylGroup& W_;
  HeckeAlgebra& H_;
  std::array<EltId, 24> reps_{};
  std::vector<CellEdge> edges_;
  std::array<std::vector<std::pair<int, int>>, 24> paths_;
  int windowLen_ = -1;
  std::unordered_map<EltId, CellPoint> byElt_;
  std::vector<std::vector<EltId>> byPair_ = std::vector<std::vector<EltId>>(24 * 24);
  std::unordered_map<int, EltId> dinv_;
};

}  // namespace cellring
