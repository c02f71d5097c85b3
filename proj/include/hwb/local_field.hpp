#pragma once

#include <cassert>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace hwb {

// Dense polynomial over F_p in the uniformizer pi, lowest coefficient first.
struct FpPoly {
  int p = 2;
  std::vector<int> a;  // canonical: no trailing zero (empty means 0)

  FpPoly() = default;
  FpPoly(int p_, std::vector<int> coeffs) : p(p_), a(std::move(coeffs)) { trim(); }

  static FpPoly zero(int p) { return FpPoly(p, {}); }
  static FpPoly constant(int p, long c) {
    long r = c % p;
    if (r < 0) r += p;
    return FpPoly(p, {static_cast<int>(r)});
  }
  static FpPoly monomial(int p, int deg, long c = 1) {
    long r = c % p;
    if (r < 0) r += p;
    if (r == 0) return zero(p);
    std::vector<int> v(deg + 1, 0);
    v[deg] = static_cast<int>(r);
    return FpPoly(p, std::move(v));
  }

  void trim() {
    for (int& x : a) {
      x %= p;
      if (x < 0) x += p;
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
  }

  bool is_zero() const { return a.empty(); }
  int degree() const { return a.empty() ? -1 : static_cast<int>(a.size()) - 1; }
  int low_degree() const {  // -1 for zero
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != 0) return static_cast<int>(i);
    return -1;
  }
  int leading() const { return a.empty() ? 0 : a.back(); }

  friend FpPoly operator+(const FpPoly& x, const FpPoly& y) {
    assert(x.p == y.p);
    FpPoly r;
    r.p = x.p;
    r.a.resize(std::max(x.a.size(), y.a.size()), 0);
    for (std::size_t i = 0; i < r.a.size(); ++i) {
      int s = (i < x.a.size() ? x.a[i] : 0) + (i < y.a.size() ? y.a[i] : 0);
      r.a[i] = s % x.p;
    }
    r.trim();
    return r;
  }
  friend FpPoly operator-(const FpPoly& x, const FpPoly& y) {
    assert(x.p == y.p);
    FpPoly r;
    r.p = x.p;
    r.a.resize(std::max(x.a.size(), y.a.size()), 0);
    for (std::size_t i = 0; i < r.a.size(); ++i) {
      int s = (i < x.a.size() ? x.a[i] : 0) - (i < y.a.size() ? y.a[i] : 0);
      r.a[i] = ((s % x.p) + x.p) % x.p;
    }
    r.trim();
    return r;
  }
  friend FpPoly operator*(const FpPoly& x, const FpPoly& y) {
    assert(x.p == y.p);
    if (x.is_zero() || y.is_zero()) return zero(x.p);
    FpPoly r;
    r.p = x.p;
    r.a.assign(x.a.size() + y.a.size() - 1, 0);
    for (std::size_t i = 0; i < x.a.size(); ++i) {
      if (x.a[i] == 0) continue;
      for (std::size_t j = 0; j < y.a.size(); ++j)
        r.a[i + j] = static_cast<int>((r.a[i + j] + 1LL * x.a[i] * y.a[j]) % x.p);
    }
    r.trim();
    return r;
  }
  friend bool operator==(const FpPoly& x, const FpPoly& y) { return x.p == y.p && x.a == y.a; }
  friend bool operator!=(const FpPoly& x, const FpPoly& y) { return !(x == y); }

  // modular inverse of a scalar
  static int inv_mod(int x, int p) {
    int t = 0, nt = 1, r = p, nr = x % p;
    if (nr < 0) nr += p;
    while (nr != 0) {
      int qq = r / nr;
      t -= qq * nt;
      std::swap(t, nt);
      r -= qq * nr;
      std::swap(r, nr);
    }
    if (r != 1) throw std::domain_error("inv_mod: not invertible");
    return ((t % p) + p) % p;
  }

  // division with remainder
  static void divmod(const FpPoly& num, const FpPoly& den, FpPoly& q, FpPoly& r) {
    assert(num.p == den.p);
    if (den.is_zero()) throw std::domain_error("FpPoly: division by zero");
    int p = num.p;
    q = zero(p);
    r = num;
    int dl = den.degree();
    int dinv = inv_mod(den.leading(), p);
    if (r.degree() >= dl) q.a.assign(r.degree() - dl + 1, 0);
    while (!r.is_zero() && r.degree() >= dl) {
      int shift = r.degree() - dl;
      int c = static_cast<int>((1LL * r.leading() * dinv) % p);
      q.a[shift] = c;
      // r -= c * x^shift * den
      for (int i = 0; i <= dl; ++i) {
        int idx = shift + i;
        r.a[idx] = static_cast<int>(((r.a[idx] - 1LL * c * den.a[i]) % p + p) % p);
      }
      r.trim();
    }
    q.trim();
  }

  static FpPoly gcd(FpPoly x, FpPoly y) {
    while (!y.is_zero()) {
      FpPoly q, r;
      divmod(x, y, q, r);
      x = y;
      y = r;
    }
    if (!x.is_zero()) {
      int inv = inv_mod(x.leading(), x.p);
      for (int& c : x.a) c = static_cast<int>((1LL * c * inv) % x.p);
    }
    return x;  // monic (or zero)
  }

  std::string str() const {  // e.g. "1+2pi^3"
    if (is_zero()) return "0";
    std::string s;
    bool first = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      if (!first) s += "+";
      first = false;
      if (i == 0) {
        s += std::to_string(a[i]);
      } else {
        if (a[i] != 1) s += std::to_string(a[i]) + "*";
        s += "pi";
        if (i != 1) s += "^" + std::to_string(i);
      }
    }
    return s;
  }
};

constexpr int kValInfinity = std::numeric_limits<int>::max() / 4;

// Element of F_p(pi), normalized: denominator monic, gcd(num, den) = 1.
struct LocalScalar {
  FpPoly num, den;

  LocalScalar() : num(FpPoly::zero(2)), den(FpPoly::constant(2, 1)) {}
  LocalScalar(int p, long c) : num(FpPoly::constant(p, c)), den(FpPoly::constant(p, 1)) {}
  LocalScalar(FpPoly n, FpPoly d) : num(std::move(n)), den(std::move(d)) { normalize(); }

  int p() const { return num.p; }

  static LocalScalar zero(int p) { return LocalScalar(p, 0); }
  static LocalScalar one(int p) { return LocalScalar(p, 1); }
  static LocalScalar pi_power(int p, int k) {
    if (k >= 0) return LocalScalar(FpPoly::monomial(p, k), FpPoly::constant(p, 1));
    return LocalScalar(FpPoly::constant(p, 1), FpPoly::monomial(p, -k));
  }
  static LocalScalar from_poly(FpPoly n) {
    int p = n.p;
    return LocalScalar(std::move(n), FpPoly::constant(p, 1));
  }

  void normalize() {
    if (den.is_zero()) throw std::domain_error("LocalScalar: zero denominator");
    if (num.is_zero()) {
      den = FpPoly::constant(num.p, 1);
      return;
    }
    FpPoly g = FpPoly::gcd(num, den);
    if (g.degree() > 0) {
      FpPoly q, r;
      FpPoly::divmod(num, g, q, r);
      num = q;
      FpPoly::divmod(den, g, q, r);
      den = q;
    }
    int inv = FpPoly::inv_mod(den.leading(), den.p);
    if (inv != 1) {
      for (int& c : den.a) c = static_cast<int>((1LL * c * inv) % den.p);
      for (int& c : num.a) c = static_cast<int>((1LL * c * inv) % num.p);
    }
  }

  bool is_zero() const { return num.is_zero(); }

  // normalized pi-adic valuation
  int val() const {
    if (num.is_zero()) return kValInfinity;
    return num.low_degree() - den.low_degree();
  }

  friend LocalScalar operator+(const LocalScalar& x, const LocalScalar& y) {
    return LocalScalar(x.num * y.den + y.num * x.den, x.den * y.den);
  }
  friend LocalScalar operator-(const LocalScalar& x, const LocalScalar& y) {
    return LocalScalar(x.num * y.den - y.num * x.den, x.den * y.den);
  }
  friend LocalScalar operator*(const LocalScalar& x, const LocalScalar& y) {
    return LocalScalar(x.num * y.num, x.den * y.den);
  }
  friend LocalScalar operator/(const LocalScalar& x, const LocalScalar& y) {
    if (y.is_zero()) throw std::domain_error("LocalScalar: division by zero");
    return LocalScalar(x.num * y.den, x.den * y.num);
  }
  LocalScalar operator-() const {
    LocalScalar r = *this;
    r.num = FpPoly::zero(p()) - r.num;
    return r;
  }
  LocalScalar inverse() const {
    if (is_zero()) throw std::domain_error("LocalScalar: inverse of zero");
    return LocalScalar(den, num);
  }
  friend bool operator==(const LocalScalar& x, const LocalScalar& y) {
    return x.num == y.num && x.den == y.den;
  }
  friend bool operator!=(const LocalScalar& x, const LocalScalar& y) { return !(x == y); }

  std::string str() const {
    if (den == FpPoly::constant(den.p, 1)) return num.str();
    return num.str() + "/" + den.str();
  }
};

}  // namespace hwb
