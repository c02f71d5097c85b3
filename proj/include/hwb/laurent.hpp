#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "rational.hpp"

namespace hwb {

// Element of Z[q^{+-1}]: finitely supported exponent -> coefficient map.
struct LaurentScalar {
  std::map<int, std::int64_t> c;  // canonical: no zero coefficients

  LaurentScalar() = default;
  LaurentScalar(std::int64_t n) {
    if (n != 0) c[0] = n;
  }
  static LaurentScalar q_power(int e, std::int64_t coeff = 1) {
    LaurentScalar s;
    if (coeff != 0) s.c[e] = coeff;
    return s;
  }

  bool is_zero() const { return c.empty(); }
  bool is_one() const { return c.size() == 1 && c.count(0) && c.at(0) == 1; }

  // q-power test; exponent via *e when monomial with coefficient 1.
  bool is_q_power(int* e = nullptr) const {
    if (c.size() != 1 || c.begin()->second != 1) return false;
    if (e) *e = c.begin()->first;
    return true;
  }

  friend LaurentScalar operator+(const LaurentScalar& a, const LaurentScalar& b) {
    LaurentScalar r = a;
    for (auto& [e, v] : b.c) {
      auto it = r.c.find(e);
      if (it == r.c.end()) {
        r.c[e] = v;
      } else {
        it->second += v;
        if (it->second == 0) r.c.erase(it);
      }
    }
    return r;
  }
  friend LaurentScalar operator-(const LaurentScalar& a, const LaurentScalar& b) {
    return a + (LaurentScalar(-1) * b);
  }
  friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
    LaurentScalar r;
    for (auto& [e1, v1] : a.c)
      for (auto& [e2, v2] : b.c) {
        auto key = e1 + e2;
        auto it = r.c.find(key);
        std::int64_t add = v1 * v2;
        if (it == r.c.end()) {
          if (add != 0) r.c[key] = add;
        } else {
          it->second += add;
          if (it->second == 0) r.c.erase(it);
        }
      }
    return r;
  }
  LaurentScalar operator-() const { return LaurentScalar(-1) * *this; }
  LaurentScalar& operator+=(const LaurentScalar& o) { *this = *this + o; return *this; }
  LaurentScalar& operator-=(const LaurentScalar& o) { *this = *this - o; return *this; }
  LaurentScalar& operator*=(const LaurentScalar& o) { *this = *this * o; return *this; }

  // Division by a q-power monomial c*q^e (exact in Z[q^{+-1}]).
  LaurentScalar shift_div(int e, std::int64_t coeff = 1) const {
    LaurentScalar r;
    for (auto& [k, v] : c) {
      if (coeff == 0 || v % coeff != 0) throw std::domain_error("LaurentScalar: inexact division");
      r.c[k - e] = v / coeff;
    }
    return r;
  }

  friend bool operator==(const LaurentScalar& a, const LaurentScalar& b) { return a.c == b.c; }
  friend bool operator!=(const LaurentScalar& a, const LaurentScalar& b) { return !(a == b); }
  friend bool operator<(const LaurentScalar& a, const LaurentScalar& b) { return a.c < b.c; }

  Rat eval_at(std::int64_t p) const {
    Rat s(0);
    for (auto& [e, v] : c) {
      Rat term(v);
      if (e >= 0) {
        for (int k = 0; k < e; ++k) term *= Rat(p);
      } else {
        for (int k = 0; k < -e; ++k) term /= Rat(p);
      }
      s += term;
    }
    return s;
  }

  std::string str() const {
    if (c.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      auto [e, v] = *it;
      std::int64_t av = v < 0 ? -v : v;
      if (first) {
        if (v < 0) out += "-";
        first = false;
      } else {
        out += v < 0 ? " - " : " + ";
      }
      if (e == 0) {
        out += std::to_string(av);
      } else {
        if (av != 1) out += std::to_string(av) + "*";
        out += "q";
        if (e != 1) out += "^" + std::to_string(e);
      }
    }
    return out;
  }
};

}  // namespace hwb
