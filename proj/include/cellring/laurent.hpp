// Exact integer Laurent polynomials in the variable v = q^{1/2}.
//
// These are the coefficients of the Hecke algebra of an (extended) affine
// Weyl group.  Everything downstream (Kazhdan-Lusztig polynomials, structure
// constants h_{x,y,z}, gamma extraction) is exact integer arithmetic in v;
// polynomials that live naturally in q simply have even support.  Coefficient
// overflow is checked and fatal rather than silent.

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cellring {

struct OverflowError : std::runtime_error {
  OverflowError() : std::runtime_error("integer overflow in Laurent coefficient") {}
};

inline int64_t checkedAdd(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError();
  return r;
}

inline int64_t checkedMul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError();
  return r;
}

// Sparse Laurent polynomial: terms sorted by exponent, no zero coefficients.
class LPoly {
 public:
  // sentinel for degree of the zero polynomial
  static constexpr int32_t kMinusInf = std::numeric_limits<int32_t>::min();

  LPoly() = default;
  LPoly(int64_t c, int32_t exp) {
    if (c != 0) terms_.emplace_back(exp, c);
  }

  static LPoly zero() { return LPoly(); }
  static LPoly one() { return LPoly(1, 0); }
  // xi = v + v^{-1}, the coefficient of C_r C_w when rw < w
  static LPoly xi() {
    LPoly p;
    p.terms_ = {{-1, 1}, {1, 1}};
    return p;
  }

  bool isZero() const { return terms_.empty(); }
  size_t numTerms() const { return terms_.size(); }
  const std::vector<std::pair<int32_t, int64_t>>& terms() const { return terms_; }

  int32_t degree() const { return terms_.empty() ? kMinusInf : terms_.back().first; }
  int32_t lowDegree() const {
    return terms_.empty() ? std::numeric_limits<int32_t>::max() : terms_.front().first;
  }

  int64_t coeff(int32_t exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const auto& t, int32_t e) { return t.first < e; });
    return (it != terms_.end() && it->first == exp) ? it->second : 0;
  }

  void addTerm(int32_t exp, int64_t c) {
    if (c == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const auto& t, int32_t e) { return t.first < e; });
    if (it != terms_.end() && it->first == exp) {
      it->second = checkedAdd(it->second, c);
      if (it->second == 0) terms_.erase(it);
    } else {
      terms_.insert(it, {exp, c});
    }
  }

  // *this += c * v^shift * p
  void addMul(const LPoly& p, int64_t c, int32_t shift = 0) {
    if (c == 0 || p.isZero()) return;
    if (terms_.empty()) {
      terms_.reserve(p.terms_.size());
      for (auto& [e, a] : p.terms_) terms_.emplace_back(e + shift, checkedMul(a, c));
      return;
    }
    std::vector<std::pair<int32_t, int64_t>> out;
    out.reserve(terms_.size() + p.terms_.size());
    auto i = terms_.begin();
    auto j = p.terms_.begin();
    while (i != terms_.end() || j != p.terms_.end()) {
      if (j == p.terms_.end() || (i != terms_.end() && i->first < j->first + shift)) {
        out.push_back(*i++);
      } else if (i == terms_.end() || i->first > j->first + shift) {
        out.emplace_back(j->first + shift, checkedMul(j->second, c));
        ++j;
      } else {
        int64_t s = checkedAdd(i->second, checkedMul(j->second, c));
        if (s != 0) out.emplace_back(i->first, s);
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
  }

  LPoly& operator+=(const LPoly& p) {
    addMul(p, 1);
    return *this;
  }
  LPoly& operator-=(const LPoly& p) {
    addMul(p, -1);
    return *this;
  }

  friend LPoly operator+(LPoly a, const LPoly& b) {
    a += b;
    return a;
  }
  friend LPoly operator-(LPoly a, const LPoly& b) {
    a -= b;
    return a;
  }

  friend LPoly operator*(const LPoly& a, const LPoly& b) {
    LPoly r;
    if (a.isZero() || b.isZero()) return r;
    // accumulate into a map; operand sizes here are small
    std::map<int32_t, int64_t> acc;
    for (auto& [ea, ca] : a.terms_)
      for (auto& [eb, cb] : b.terms_) {
        int64_t& slot = acc[ea + eb];
        slot = checkedAdd(slot, checkedMul(ca, cb));
      }
    for (auto& [e, c] : acc)
      if (c != 0) r.terms_.emplace_back(e, c);
    return r;
  }

  LPoly operator-() const {
    LPoly r(*this);
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  LPoly scaled(int64_t c, int32_t shift = 0) const {
    LPoly r;
    r.addMul(*this, c, shift);
    return r;
  }

  // the bar involution v -> v^{-1}
  LPoly bar() const {
    LPoly r;
    r.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
      r.terms_.emplace_back(-it->first, it->second);
    return r;
  }

  bool isBarSymmetric() const { return *this == bar(); }

  bool operator==(const LPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LPoly& o) const { return !(*this == o); }

  size_t hash() const {
    size_t h = 0x9e3779b97f4a7c15ull;
    for (auto& [e, c] : terms_) {
      h ^= (size_t)(uint32_t)e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h ^= (size_t)(uint64_t)c + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }

  // human-readable, in v
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      auto [e, c] = *it;
      if (!first) os << (c > 0 ? " + " : " - ");
      else if (c < 0) os << "-";
      first = false;
      int64_t a = c < 0 ? -c : c;
      if (a != 1 || e == 0) os << a;
      if (e != 0) {
        if (a != 1) os << "*";
        os << "v";
        if (e != 1) os << "^" << e;
      }
    }
    return os.str();
  }

  // printed in q = v^2; requires even support
  std::string strQ() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      auto [e, c] = *it;
      if (e % 2 != 0) throw std::logic_error("strQ on polynomial with odd v-exponent");
      if (!first) os << (c > 0 ? " + " : " - ");
      else if (c < 0) os << "-";
      first = false;
      int64_t a = c < 0 ? -c : c;
      int32_t eq = e / 2;
      if (a != 1 || eq == 0) os << a;
      if (eq != 0) {
        if (a != 1) os << "*";
        os << "q";
        if (eq != 1) os << "^" << eq;
      }
    }
    return os.str();
  }

 private:
  std::vector<std::pair<int32_t, int64_t>> terms_;
};

struct LPolyHash {
  size_t operator()(const LPoly& p) const { return p.hash(); }
};

}  // namespace cellring
