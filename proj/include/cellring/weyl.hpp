// The extended affine Weyl group W of type B~3 attached to Sp_6(C).
//
// Realization: W_0 of type C_3 acts on X = Z^3 by signed permutations.  An
// element is the affine map v |-> sigma(v) + t with sigma in W_0 (order 48)
// and t in X.  Simple reflections:
//   r1 <-> e1 - e2,   r2 <-> e2 - e3,   r3 <-> 2 e3,
//   r0 = affine reflection in e1 + e2 at level 1.
// W' = W_0 x| P (P = root lattice = even coordinate sum) is the affine Weyl
// group proper; W / W' = {e, tau} with tau the unique nontrivial length-0
// element.  tau is located by search among t_omega * u rather than taken from
// a formula; the Coxeter-matrix and tau-conjugation tests pin the realization.
//
// Lengths come from the Iwahori-Matsumoto counting formula over the 9
// positive roots of C_3 and are cross-checked against BFS word length in the
// test suite.  Elements are interned: the rest of the library manipulates
// 32-bit ids.  Reads of the registry are lock-free; lazily cached attributes
// (descents, generator neighbors, inverses) are idempotent atomic writes, so
// the structure is safe to share across verification workers.

#pragma once

#include <array>
#include <atomic>
#include <cassert>
#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cellring/stablevec.hpp"

namespace cellring {

using EltId = uint32_t;
constexpr EltId kNoElt = 0xFFFFFFFFu;

// ASCII word over {0,1,2,3,t}; empty = identity
using Word = std::string;

namespace detail {

// one signed permutation of {0,1,2}:  v[i] -> sign[i]*v[perm[i]]
struct SignedPerm {
  std::array<uint8_t, 3> perm;
  std::array<int8_t, 3> sign;
};

struct W0Tables {
  std::array<SignedPerm, 48> elems;
  std::array<std::array<uint8_t, 48>, 48> mult;
  std::array<uint8_t, 48> inv;
  // positive roots of C_3 and their coroots (pairing vectors)
  std::array<std::array<int8_t, 3>, 9> roots;
  std::array<std::array<int8_t, 3>, 9> coroots;
  // negRoot[s][a]: whether elems[s]^{-1} applied to roots[a] is negative
  std::array<std::array<bool, 9>, 48> negRoot;
  uint8_t idIdx;

  W0Tables() {
    static const uint8_t perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                        {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (int p = 0; p < 6; ++p)
      for (int sbits = 0; sbits < 8; ++sbits) {
        SignedPerm sp;
        for (int i = 0; i < 3; ++i) {
          sp.perm[i] = perms[p][i];
          sp.sign[i] = (sbits >> i) & 1 ? -1 : 1;
        }
        elems[p * 8 + sbits] = sp;
      }
    auto apply = [&](const SignedPerm& sp, std::array<int8_t, 3> v) {
      std::array<int8_t, 3> r;
      for (int i = 0; i < 3; ++i) r[i] = sp.sign[i] * v[sp.perm[i]];
      return r;
    };
    auto index = [&](const SignedPerm& sp) -> uint8_t {
      for (int k = 0; k < 48; ++k)
        if (elems[k].perm == sp.perm && elems[k].sign == sp.sign) return (uint8_t)k;
      throw std::logic_error("signed permutation not found");
    };
    for (int a = 0; a < 48; ++a)
      for (int b = 0; b < 48; ++b) {
        // (ab)(v) = a(b(v))
        SignedPerm ab;
        for (int i = 0; i < 3; ++i) {
          ab.perm[i] = elems[b].perm[elems[a].perm[i]];
          ab.sign[i] = elems[a].sign[i] * elems[b].sign[elems[a].perm[i]];
        }
        mult[a][b] = index(ab);
      }
    SignedPerm id{{0, 1, 2}, {1, 1, 1}};
    idIdx = index(id);
    for (int a = 0; a < 48; ++a)
      for (int b = 0; b < 48; ++b)
        if (mult[a][b] == idIdx) inv[a] = (uint8_t)b;
    int k = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        roots[k] = {0, 0, 0};
        roots[k][i] = 1;
        roots[k][j] = -1;  // e_i - e_j
        coroots[k] = roots[k];
        ++k;
        roots[k] = {0, 0, 0};
        roots[k][i] = 1;
        roots[k][j] = 1;  // e_i + e_j
        coroots[k] = roots[k];
        ++k;
      }
    for (int i = 0; i < 3; ++i) {
      roots[k] = {0, 0, 0};
      roots[k][i] = 2;  // 2 e_i
      coroots[k] = {0, 0, 0};
      coroots[k][i] = 1;
      ++k;
    }
    auto isNeg = [&](std::array<int8_t, 3> v) {
      for (int i = 0; i < 3; ++i) {
        if (v[i] > 0) return false;
        if (v[i] < 0) return true;
      }
      return false;
    };
    for (int s = 0; s < 48; ++s)
      for (int a = 0; a < 9; ++a) negRoot[s][a] = isNeg(apply(elems[inv[s]], roots[a]));
  }
};

inline const W0Tables& w0tables() {
  static const W0Tables t;
  return t;
}

}  // namespace detail

// Coxeter matrix of the generators r_0..r_3 (orders of r_i r_j)
inline int coxeterM(int i, int j) {
  static const int m[4][4] = {
      {1, 2, 3, 2}, {2, 1, 3, 2}, {3, 3, 1, 4}, {2, 2, 4, 1}};
  return m[i][j];
}

class WeylGroup {
 public:
  WeylGroup() {
    const auto& t = detail::w0tables();
    eId_ = intern(Packed{t.idIdx, {0, 0, 0}});
    for (int i = 0; i < 4; ++i) gen_[i] = makeGenerator(i);
    tau_ = findTau();
  }

  WeylGroup(const WeylGroup&) = delete;
  WeylGroup& operator=(const WeylGroup&) = delete;

  EltId identity() const { return eId_; }
  EltId tau() const { return tau_; }
  EltId gen(int i) const { return gen_[i]; }

  EltId mult(EltId a, EltId b) {
    const Packed& pa = elts_[a];
    const Packed& pb = elts_[b];
    const auto& t = detail::w0tables();
    Packed r;
    r.w0 = t.mult[pa.w0][pb.w0];
    auto tb = applyW0(pa.w0, pb.tr);
    for (int i = 0; i < 3; ++i) r.tr[i] = (int16_t)(tb[i] + pa.tr[i]);
    return intern(r);
  }

  EltId inverse(EltId a) {
    EltId cached = inv_[a].load(std::memory_order_relaxed);
    if (cached != kNoElt) return cached;
    const Packed& p = elts_[a];
    const auto& t = detail::w0tables();
    Packed r;
    r.w0 = t.inv[p.w0];
    auto v = applyW0(r.w0, {(int16_t)-p.tr[0], (int16_t)-p.tr[1], (int16_t)-p.tr[2]});
    for (int i = 0; i < 3; ++i) r.tr[i] = (int16_t)v[i];
    EltId res = intern(r);
    inv_[a].store(res, std::memory_order_relaxed);
    inv_[res].store(a, std::memory_order_relaxed);
    return res;
  }

  int length(EltId a) const { return len_[a]; }

  // v |-> sigma(v) + t evaluated at a lattice point
  std::array<int32_t, 3> applyTo(EltId a, std::array<int32_t, 3> v) const {
    const Packed& p = elts_[a];
    const auto& sp = detail::w0tables().elems[p.w0];
    std::array<int32_t, 3> r;
    for (int i = 0; i < 3; ++i) r[i] = sp.sign[i] * v[sp.perm[i]] + p.tr[i];
    return r;
  }

  // translation part and finite part
  std::array<int16_t, 3> translation(EltId a) const { return elts_[a].tr; }

  // membership in the affine Weyl group W' (root-lattice translations)
  bool inAffine(EltId a) const {
    const Packed& p = elts_[a];
    return ((p.tr[0] + p.tr[1] + p.tr[2]) & 1) == 0;
  }

  // translation element t_lambda
  EltId translationElt(std::array<int32_t, 3> lam) {
    Packed p;
    p.w0 = detail::w0tables().idIdx;
    for (int i = 0; i < 3; ++i) p.tr[i] = (int16_t)lam[i];
    return intern(p);
  }

  // left/right multiplication by a generator, cached
  EltId leftGen(int i, EltId a) { return neighbor(a, i, /*left=*/true); }
  EltId rightGen(EltId a, int i) { return neighbor(a, i, /*left=*/false); }
  EltId leftTau(EltId a) { return neighbor(a, 4, true); }
  EltId rightTau(EltId a) { return neighbor(a, 4, false); }

  uint8_t leftDescentMask(EltId a) {
    uint8_t m = ld_[a].load(std::memory_order_relaxed);
    if (m != 0xFF) return m;
    m = 0;
    int la = length(a);
    for (int i = 0; i < 4; ++i)
      if (length(leftGen(i, a)) < la) m |= (1 << i);
    ld_[a].store(m, std::memory_order_relaxed);
    return m;
  }

  uint8_t rightDescentMask(EltId a) {
    uint8_t m = rd_[a].load(std::memory_order_relaxed);
    if (m != 0xFF) return m;
    m = 0;
    int la = length(a);
    for (int i = 0; i < 4; ++i)
      if (length(rightGen(a, i)) < la) m |= (1 << i);
    rd_[a].store(m, std::memory_order_relaxed);
    return m;
  }

  std::vector<int> leftDescents(EltId a) { return maskToList(leftDescentMask(a)); }
  std::vector<int> rightDescents(EltId a) { return maskToList(rightDescentMask(a)); }

  bool isLeftDescent(int i, EltId a) { return leftDescentMask(a) & (1 << i); }
  bool isRightDescent(EltId a, int i) { return rightDescentMask(a) & (1 << i); }

  // ShortLex-least reduced word of the W'-part, 't'-prefixed off the
  // identity coset
  Word reducedWord(EltId a) {
    Word w;
    if (!inAffine(a)) {
      w.push_back('t');
      a = leftTau(a);
    }
    while (length(a) > 0) {
      int s = firstBit(leftDescentMask(a));
      w.push_back(char('0' + s));
      a = leftGen(s, a);
    }
    assert(a == eId_);
    return w;
  }

  EltId evaluate(const Word& w) {
    EltId a = eId_;
    for (char c : w) {
      if (c == 't')
        a = rightTau(a);
      else if (c >= '0' && c <= '3')
        a = rightGen(a, c - '0');
      else
        throw std::invalid_argument("bad word character: " + std::string(1, c));
    }
    return a;
  }

  // Bruhat order; elements in different Omega-cosets are incomparable
  bool bruhatLeq(EltId y, EltId w) {
    if (inAffine(y) != inAffine(w)) return false;
    while (true) {
      if (y == w) return true;
      if (length(y) > length(w)) return false;
      if (length(w) == 0) return y == w;
      int s = firstBit(leftDescentMask(w));
      if (isLeftDescent(s, y)) y = leftGen(s, y);
      w = leftGen(s, w);
    }
  }

  // {y : y <= w}, built as I(sw) union s*I(sw) along a reduced word
  std::vector<EltId> lowerInterval(EltId w) {
    Word word = reducedWord(w);
    bool hasTau = !word.empty() && word[0] == 't';
    size_t start = hasTau ? 1 : 0;
    std::vector<EltId> cur = {eId_};
    std::unordered_set<EltId> seen = {eId_};
    for (size_t k = word.size(); k > start; --k) {
      int s = word[k - 1] - '0';
      size_t n = cur.size();
      for (size_t i = 0; i < n; ++i) {
        EltId y = leftGen(s, cur[i]);
        if (seen.insert(y).second) cur.push_back(y);
      }
    }
    if (hasTau)
      for (auto& y : cur) y = leftTau(y);
    return cur;
  }

  // all elements of length <= L, both cosets, each exactly once
  std::vector<EltId> elementsUpToLength(int L) {
    std::vector<EltId> all = {eId_, tau_};
    std::unordered_set<EltId> seen(all.begin(), all.end());
    std::vector<EltId> frontier = all;
    for (int l = 1; l <= L; ++l) {
      std::vector<EltId> next;
      for (EltId a : frontier)
        for (int i = 0; i < 4; ++i) {
          EltId b = rightGen(a, i);
          if (length(b) == l && seen.insert(b).second) next.push_back(b);
        }
      all.insert(all.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
    return all;
  }

  size_t numRegistered() const { return elts_.size(); }

  // a = tau^eps * b with b in W'
  std::pair<bool, EltId> stripTau(EltId a) {
    if (inAffine(a)) return {false, a};
    return {true, leftTau(a)};
  }

 private:
  struct Packed {
    uint8_t w0;
    std::array<int16_t, 3> tr;
    uint64_t key() const {
      uint64_t k = w0;
      for (int i = 0; i < 3; ++i) k = (k << 16) | (uint16_t)(tr[i] + 0x4000);
      return k;
    }
  };

  std::array<int32_t, 3> applyW0(uint8_t s, std::array<int16_t, 3> v) const {
    const auto& sp = detail::w0tables().elems[s];
    std::array<int32_t, 3> r;
    for (int i = 0; i < 3; ++i) r[i] = sp.sign[i] * v[sp.perm[i]];
    return r;
  }

  int computeLength(const Packed& p) const {
    const auto& t = detail::w0tables();
    int l = 0;
    for (int a = 0; a < 9; ++a) {
      int pair = 0;
      for (int i = 0; i < 3; ++i) pair += t.coroots[a][i] * p.tr[i];
      if (t.negRoot[p.w0][a]) pair -= 1;
      l += pair < 0 ? -pair : pair;
    }
    return l;
  }

  EltId intern(const Packed& p) {
    uint64_t k = p.key();
    {
      std::shared_lock<std::shared_mutex> lk(mu_);
      auto it = index_.find(k);
      if (it != index_.end()) return it->second;
    }
    std::unique_lock<std::shared_mutex> lk(mu_);
    auto it = index_.find(k);
    if (it != index_.end()) return it->second;
    len_.push((int16_t)computeLength(p));
    ld_.pushInit([](std::atomic<uint8_t>& a) { a.store(0xFF); });
    rd_.pushInit([](std::atomic<uint8_t>& a) { a.store(0xFF); });
    inv_.pushInit([](std::atomic<EltId>& a) { a.store(kNoElt); });
    nbr_.pushInit([](std::array<std::atomic<EltId>, 10>& a) {
      for (auto& x : a) x.store(kNoElt);
    });
    EltId id = (EltId)elts_.push(p);
    index_.emplace(k, id);
    return id;
  }

  EltId neighbor(EltId a, int slot, bool left) {
    int idx = slot + (left ? 0 : 5);
    EltId cached = nbr_[a][idx].load(std::memory_order_relaxed);
    if (cached != kNoElt) return cached;
    EltId g = slot == 4 ? tau_ : gen_[slot];
    EltId r = left ? mult(g, a) : mult(a, g);
    nbr_[a][idx].store(r, std::memory_order_relaxed);
    return r;
  }

  EltId makeGenerator(int i) {
    const auto& t = detail::w0tables();
    auto find = [&](detail::SignedPerm sp) -> uint8_t {
      for (int k = 0; k < 48; ++k)
        if (t.elems[k].perm == sp.perm && t.elems[k].sign == sp.sign) return (uint8_t)k;
      throw std::logic_error("generator permutation not found");
    };
    Packed p;
    p.tr = {0, 0, 0};
    switch (i) {
      case 1:
        p.w0 = find({{1, 0, 2}, {1, 1, 1}});
        break;
      case 2:
        p.w0 = find({{0, 2, 1}, {1, 1, 1}});
        break;
      case 3:
        p.w0 = find({{0, 1, 2}, {1, 1, -1}});
        break;
      case 0:
        p.w0 = find({{1, 0, 2}, {-1, -1, 1}});
        p.tr = {1, 1, 0};
        break;
      default:
        throw std::logic_error("bad generator");
    }
    EltId id = intern(p);
    assert(length(id) == 1);
    return id;
  }

  // the unique nontrivial length-0 element: search t_omega * u over W_0 with
  // omega = e_1, a representative of the nontrivial X/P coset
  EltId findTau() {
    for (int u = 0; u < 48; ++u) {
      Packed p;
      p.w0 = (uint8_t)u;
      p.tr = {1, 0, 0};
      if (computeLength(p) == 0) return intern(p);
    }
    throw std::logic_error("tau not found");
  }

  static int firstBit(uint8_t m) {
    for (int i = 0; i < 4; ++i)
      if (m & (1 << i)) return i;
    return -1;
  }

  static std::vector<int> maskToList(uint8_t m) {
    std::vector<int> r;
    for (int i = 0; i < 4; ++i)
      if (m & (1 << i)) r.push_back(i);
    return r;
  }

  std::shared_mutex mu_;
  StableVector<Packed> elts_;
  StableVector<int16_t> len_;
  StableVector<std::atomic<uint8_t>> ld_, rd_;
  StableVector<std::atomic<EltId>> inv_;
  StableVector<std::array<std::atomic<EltId>, 10>> nbr_;
  std::unordered_map<uint64_t, EltId> index_;
  EltId eId_ = 0;
  EltId tau_ = 0;
  std::array<EltId, 4> gen_{};
};

}  // namespace cellring
