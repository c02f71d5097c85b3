#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "lambda_algebra.hpp"

namespace hwb {

// ---------------------------------------------------------------------------
// H(K_B, B) for GL_2 in the X_-^n X_+^m Y^k basis (n, m >= 0, k in Z).
// Relations: Y central invertible, X_+ X_- = q.
// ---------------------------------------------------------------------------

struct GL2BMono {
  int n = 0, m = 0, k = 0;
  friend bool operator<(const GL2BMono& a, const GL2BMono& b) {
    return std::tie(a.n, a.m, a.k) < std::tie(b.n, b.m, b.k);
  }
  friend bool operator==(const GL2BMono& a, const GL2BMono& b) {
    return a.n == b.n && a.m == b.m && a.k == b.k;
  }
};

struct GL2BElement {
  std::map<GL2BMono, LaurentScalar> terms;

  static GL2BElement mono(int n, int m, int k, LaurentScalar c = LaurentScalar(1)) {
    if (n < 0 || m < 0) throw std::invalid_argument("GL2BElement: negative exponent");
    GL2BElement e;
    if (!c.is_zero()) e.terms[{n, m, k}] = std::move(c);
    return e;
  }
  static GL2BElement one() { return mono(0, 0, 0); }
  static GL2BElement Xp(int m = 1) { return mono(0, m, 0); }
  static GL2BElement Xm(int n = 1) { return mono(n, 0, 0); }
  static GL2BElement Yk(int k) { return mono(0, 0, k); }

  bool is_zero() const { return terms.empty(); }

  void add_term(const GL2BMono& mo, const LaurentScalar& c) {
    auto it = terms.find(mo);
    if (it == terms.end()) {
      if (!c.is_zero()) terms[mo] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  friend GL2BElement operator+(const GL2BElement& a, const GL2BElement& b) {
    GL2BElement r = a;
    for (auto& [mo, c] : b.terms) r.add_term(mo, c);
    return r;
  }
  friend GL2BElement operator-(const GL2BElement& a, const GL2BElement& b) {
    GL2BElement r = a;
    for (auto& [mo, c] : b.terms) r.add_term(mo, -c);
    return r;
  }
  GL2BElement operator-() const {
    GL2BElement r;
    for (auto& [mo, c] : terms) r.terms[mo] = -c;
    return r;
  }
  // (X_-^n X_+^m Y^k)(X_-^n' X_+^m' Y^k') = q^t X_-^{n+n'-t} X_+^{m+m'-t} Y^{k+k'},
  // t = min(m, n').
  friend GL2BElement operator*(const GL2BElement& a, const GL2BElement& b) {
    GL2BElement r;
    for (auto& [ma, ca] : a.terms)
      for (auto& [mb, cb] : b.terms) {
        int t = std::min(ma.m, mb.n);
        GL2BMono mo{ma.n + mb.n - t, ma.m + mb.m - t, ma.k + mb.k};
        r.add_term(mo, ca * cb * LaurentScalar::q_power(t));
      }
    return r;
  }
  friend GL2BElement operator*(const LaurentScalar& c, const GL2BElement& a) {
    GL2BElement r;
    for (auto& [mo, v] : a.terms) r.add_term(mo, c * v);
    return r;
  }
  friend bool operator==(const GL2BElement& a, const GL2BElement& b) { return a.terms == b.terms; }
  friend bool operator!=(const GL2BElement& a, const GL2BElement& b) { return !(a == b); }

  bool in_C_plus() const {  // span{X_+^m Y^k}
    for (auto& [mo, c] : terms)
      if (mo.n != 0) return false;
    return true;
  }
  bool in_C_minus() const {  // span{X_-^n Y^k}
    for (auto& [mo, c] : terms)
      if (mo.m != 0) return false;
    return true;
  }

  std::string str() const {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [mo, c] : terms) {
      if (!first) out += " + ";
      first = false;
      out += "(" + c.str() + ")";
      if (mo.n) out += "*X-^" + std::to_string(mo.n);
      if (mo.m) out += "*X+^" + std::to_string(mo.m);
      if (mo.k) out += "*Y^" + std::to_string(mo.k);
    }
    return out;
  }
};

inline GL2BElement gl2b_multiply(const GL2BElement& a, const GL2BElement& b) { return a * b; }

// ---------------------------------------------------------------------------
// Double-coset basis: triples (a, b, c) with b <= min(a, c) index
// K_B diag-with-corner matrices [[pi^a, pi^b], [0, pi^c]].
// ---------------------------------------------------------------------------

struct DCoset {
  int a = 0, b = 0, c = 0;
  friend bool operator<(const DCoset& x, const DCoset& y) {
    return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
  }
  friend bool operator==(const DCoset& x, const DCoset& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c;
  }
  bool valid() const { return b <= std::min(a, c); }
};

// unitriangular change of basis, double coset -> monomials
inline GL2BElement dcoset_to_monomials(const DCoset& d) {
  if (!d.valid()) throw std::invalid_argument("dcoset_to_monomials: b > min(a,c)");
  if (d.b == d.c) return GL2BElement::mono(0, d.a - d.c, d.c);          // X_+^{a-c} Y^c
  if (d.b == d.a) return GL2BElement::mono(d.c - d.a, 0, d.c);          // X_-^{c-a} Y^c
  return GL2BElement::mono(d.c - d.b, d.a - d.b, d.c) -
         GL2BElement::mono(d.c - d.b - 1, d.a - d.b - 1, d.c);
}

// monomial -> double cosets: X_-^n X_+^m Y^k = sum over b of (m+k-n, b, k)
inline std::map<DCoset, LaurentScalar> monomial_to_dcosets(const GL2BMono& mo) {
  std::map<DCoset, LaurentScalar> out;
  int a = mo.m + mo.k - mo.n;
  for (int b = mo.k - mo.n; b <= std::min(a, mo.k); ++b) out[{a, b, mo.k}] = LaurentScalar(1);
  return out;
}

inline std::map<DCoset, LaurentScalar> to_dcoset_basis(const GL2BElement& x) {
  std::map<DCoset, LaurentScalar> out;
  for (auto& [mo, c] : x.terms)
    for (auto& [d, unit] : monomial_to_dcosets(mo)) {
      auto it = out.find(d);
      if (it == out.end()) {
        out[d] = c;
      } else {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  return out;
}

inline GL2BElement from_dcoset_basis(const std::map<DCoset, LaurentScalar>& dc) {
  GL2BElement x;
  for (auto& [d, c] : dc) {
    GL2BElement part = dcoset_to_monomials(d);
    x = x + c * part;
  }
  return x;
}

// zeta_B on the double-coset basis: (g) -> (g^{-1}), i.e. (a,b,c) -> (-a, b-a-c, -c).
inline GL2BElement zeta_B(const GL2BElement& x) {
  std::map<DCoset, LaurentScalar> out;
  for (auto& [d, c] : to_dcoset_basis(x)) {
    DCoset z{-d.a, d.b - d.a - d.c, -d.c};
    if (!z.valid()) throw std::logic_error("zeta_B: image triple invalid");
    out[z] += c;  // distinct triples stay distinct under the involution
  }
  return from_dcoset_basis(out);
}

// Theta^B_Z: X_-^n X_+^m Y^k -> q^n x^{m-n+k} y^k in R[Lambda] (x = e^{(1,0)}, y = e^{(0,1)}).
inline GroupAlgebraElement theta_BZ(const GL2BElement& x) {
  GroupAlgebraElement out(2);
  for (auto& [mo, c] : x.terms)
    out.add_term({mo.m - mo.n + mo.k, mo.k}, c * LaurentScalar::q_power(mo.n));
  return out;
}

// ---------------------------------------------------------------------------
// The spherical algebra H(K, G) for GL_2 presented as R[T, S^{+-1}],
// T = (diag(pi,1))_K and S = (pi E_2)_K.
// ---------------------------------------------------------------------------

struct GL2GMono {
  int m = 0, k = 0;  // T^m S^k, m >= 0
  friend bool operator<(const GL2GMono& a, const GL2GMono& b) {
    return std::tie(a.m, a.k) < std::tie(b.m, b.k);
  }
  friend bool operator==(const GL2GMono& a, const GL2GMono& b) { return a.m == b.m && a.k == b.k; }
};

struct GL2GElement {
  std::map<GL2GMono, LaurentScalar> terms;

  static GL2GElement mono(int m, int k, LaurentScalar c = LaurentScalar(1)) {
    if (m < 0) throw std::invalid_argument("GL2GElement: negative T power");
    GL2GElement e;
    if (!c.is_zero()) e.terms[{m, k}] = std::move(c);
    return e;
  }
  static GL2GElement one() { return mono(0, 0); }
  static GL2GElement T() { return mono(1, 0); }
  static GL2GElement S(int k = 1) { return mono(0, k); }

  bool is_zero() const { return terms.empty(); }
  void add_term(const GL2GMono& mo, const LaurentScalar& c) {
    auto it = terms.find(mo);
    if (it == terms.end()) {
      if (!c.is_zero()) terms[mo] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  friend GL2GElement operator+(const GL2GElement& a, const GL2GElement& b) {
    GL2GElement r = a;
    for (auto& [mo, c] : b.terms) r.add_term(mo, c);
    return r;
  }
  friend GL2GElement operator-(const GL2GElement& a, const GL2GElement& b) {
    GL2GElement r = a;
    for (auto& [mo, c] : b.terms) r.add_term(mo, -c);
    return r;
  }
  GL2GElement operator-() const {
    GL2GElement r;
    for (auto& [mo, c] : terms) r.terms[mo] = -c;
    return r;
  }
  friend GL2GElement operator*(const GL2GElement& a, const GL2GElement& b) {
    GL2GElement r;
    for (auto& [ma, ca] : a.terms)
      for (auto& [mb, cb] : b.terms) r.add_term({ma.m + mb.m, ma.k + mb.k}, ca * cb);
    return r;
  }
  friend GL2GElement operator*(const LaurentScalar& c, const GL2GElement& a) {
    GL2GElement r;
    for (auto& [mo, v] : a.terms) r.add_term(mo, c * v);
    return r;
  }
  friend bool operator==(const GL2GElement& a, const GL2GElement& b) { return a.terms == b.terms; }
  friend bool operator!=(const GL2GElement& a, const GL2GElement& b) { return !(a == b); }
};

// zeta_G: T^m S^k -> T^m S^{-m-k} (from (diag(pi^a, pi^b))_K -> (diag(pi^-b, pi^-a))_K).
inline GL2GElement zeta_G(const GL2GElement& x) {
  GL2GElement r;
  for (auto& [mo, c] : x.terms) r.add_term({mo.m, -mo.m - mo.k}, c);
  return r;
}

// Satake on the T,S presentation: T -> x + qy, S -> xy.
inline GroupAlgebraElement satake_of_spherical(const GL2GElement& x) {
  GroupAlgebraElement out(2);
  GroupAlgebraElement t_img = gl2_x() + LaurentScalar::q_power(1) * gl2_y();
  std::vector<GroupAlgebraElement> tpow = {GroupAlgebraElement::one(2)};
  for (auto& [mo, c] : x.terms) {
    while (static_cast<int>(tpow.size()) <= mo.m) tpow.push_back(tpow.back() * t_img);
    out = out + c * (tpow[mo.m] * GroupAlgebraElement::monomial({mo.k, mo.k}));
  }
  return out;
}

// Inverse of the Satake map on its image, by lexicographic-leading-term
// elimination: (x+qy)^m (xy)^k has leading monomial x^{m+k} y^k.
inline GL2GElement satake_inverse(GroupAlgebraElement v) {
  GL2GElement out;
  int guard = 1 << 16;
  while (!v.is_zero()) {
    if (--guard < 0) throw std::invalid_argument("satake_inverse: not in the Satake image");
    auto lead = v.terms.rbegin();  // lex-largest lambda
    int a = lead->first[0], b = lead->first[1];
    if (a < b) throw std::invalid_argument("satake_inverse: not in the Satake image");
    LaurentScalar c = lead->second;
    out.add_term({a - b, b}, c);
    v = v - c * satake_of_spherical(GL2GElement::mono(a - b, b));
  }
  return out;
}

// epsilon_{B,G}: T -> X_+ + X_- Y, S -> Y.
inline GL2BElement epsilon_BG(const GL2GElement& x) {
  GL2BElement out;
  GL2BElement t_img = GL2BElement::Xp() + GL2BElement::mono(1, 0, 1);
  std::vector<GL2BElement> tpow = {GL2BElement::one()};
  for (auto& [mo, c] : x.terms) {
    while (static_cast<int>(tpow.size()) <= mo.m) tpow.push_back(tpow.back() * t_img);
    out = out + c * (tpow[mo.m] * GL2BElement::Yk(mo.k));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Closed-form Satake of a double coset (diag(pi^a, pi^b))_K, a >= b.
// ---------------------------------------------------------------------------

struct SatakeClosedForm {
  GroupAlgebraElement value;                     // monomial form
  std::map<LambdaVector, LaurentScalar> s_coords;  // S-basis expansion
};

inline SatakeClosedForm satake_closed_form_gl2(int a, int b) {
  if (a < b) throw std::invalid_argument("satake_closed_form_gl2: need a >= b");
  SatakeClosedForm out;
  out.value = GroupAlgebraElement(2);
  out.value.add_term({a, b}, LaurentScalar(1));
  if (a > b) {
    for (int c = 1; c <= a - b - 1; ++c)
      out.value.add_term({a - c, b + c},
                         (LaurentScalar::q_power(1) - LaurentScalar(1)) * LaurentScalar::q_power(c - 1));
    out.value.add_term({b, a}, LaurentScalar::q_power(a - b));
  }
  // S-basis: pair off mirror monomials; the middle term survives alone when a-b is even
  out.s_coords[{a, b}] = LaurentScalar(1);
  int gamma = (a - b) / 2;
  int top = (a - b) % 2 == 0 ? gamma - 1 : gamma;
  for (int c = 1; c <= top; ++c)
    out.s_coords[{a - c, b + c}] =
        (LaurentScalar::q_power(1) - LaurentScalar(1)) * LaurentScalar::q_power(c - 1);
  if ((a - b) % 2 == 0 && a != b)
    out.s_coords[{a - gamma, b + gamma}] =
        (LaurentScalar::q_power(1) - LaurentScalar(1)) * LaurentScalar::q_power(gamma - 1);
  return out;
}

// ---------------------------------------------------------------------------
// Convolution oracle on literal right-coset representatives.
// Right cosets of K_B in B are [[pi^a, beta], [0, pi^c]] with beta a finite
// Laurent polynomial in pi supported in exponents < c.
// ---------------------------------------------------------------------------

namespace gl2detail {

using Corner = std::map<int, int>;  // exponent -> F_p coefficient, canonical: no zeros

struct RightCoset {
  int a = 0, c = 0;
  Corner beta;
  friend bool operator<(const RightCoset& x, const RightCoset& y) {
    return std::tie(x.a, x.c, x.beta) < std::tie(y.a, y.c, y.beta);
  }
};

inline void corner_trim(Corner& b, int c_cut) {
  for (auto it = b.begin(); it != b.end();) {
    if (it->first >= c_cut || it->second == 0) it = b.erase(it);
    else ++it;
  }
}

// right multiplication of representatives
inline RightCoset coset_mul(const RightCoset& x, const RightCoset& y, int p) {
  RightCoset r;
  r.a = x.a + y.a;
  r.c = x.c + y.c;
  // corner: pi^{x.a} * y.beta + x.beta * pi^{y.c}
  for (auto& [e, v] : y.beta) r.beta[e + x.a] = (r.beta[e + x.a] + v) % p;
  for (auto& [e, v] : x.beta) r.beta[e + y.c] = (r.beta[e + y.c] + v) % p;
  corner_trim(r.beta, r.c);
  return r;
}

inline DCoset dcoset_of(const RightCoset& r) {
  if (r.beta.empty()) return {r.a, std::min(r.a, r.c), r.c};
  int v = r.beta.begin()->first;
  if (v < std::min(r.a, r.c)) return {r.a, v, r.c};
  return {r.a, std::min(r.a, r.c), r.c};
}

// the full right-coset list of a double coset
inline std::vector<RightCoset> right_cosets(const DCoset& d, int p) {
  if (!d.valid()) throw std::invalid_argument("right_cosets: invalid triple");
  std::vector<RightCoset> out;
  if (d.b == std::min(d.a, d.c)) {
    if (d.a >= d.c) {
      out.push_back({d.a, d.c, {}});
      return out;
    }
    // beta over exponents [a, c-1], arbitrary digits
    int len = d.c - d.a;
    std::vector<int> digits(len, 0);
    while (true) {
      RightCoset r{d.a, d.c, {}};
      for (int i = 0; i < len; ++i)
        if (digits[i]) r.beta[d.a + i] = digits[i];
      out.push_back(std::move(r));
      int t = 0;
      while (t < len && ++digits[t] == p) digits[t++] = 0;
      if (t == len) break;
    }
    return out;
  }
  // b < min(a,c): beta over exponents [b, c-1] with nonzero digit at b
  int len = d.c - d.b;
  std::vector<int> digits(len, 0);
  while (true) {
    if (digits[0] != 0) {
      RightCoset r{d.a, d.c, {}};
      for (int i = 0; i < len; ++i)
        if (digits[i]) r.beta[d.b + i] = digits[i];
      out.push_back(std::move(r));
    }
    int t = 0;
    while (t < len && ++digits[t] == p) digits[t++] = 0;
    if (t == len) break;
  }
  return out;
}

}  // namespace gl2detail

// Convolution of two double cosets by literal right-coset enumeration; the
// result is re-expressed on the monomial basis with integer coefficients
// (the value of the product at q = p). Verifies that every right coset of an
// output double coset is hit equally often.
inline GL2BElement coset_convolution_oracle(const DCoset& x, const DCoset& y, int p) {
  using namespace gl2detail;
  if (!x.valid() || !y.valid()) throw std::invalid_argument("coset_convolution_oracle: bad triple");
  auto xs = right_cosets(x, p);
  auto ys = right_cosets(y, p);
  std::map<RightCoset, long> hits;
  for (const RightCoset& r : xs)
    for (const RightCoset& s : ys) ++hits[coset_mul(r, s, p)];
  std::map<DCoset, long> coeff;
  while (!hits.empty()) {
    DCoset d = dcoset_of(hits.begin()->first);
    long mult = -1;
    for (const RightCoset& rc : right_cosets(d, p)) {
      auto it = hits.find(rc);
      long h = it == hits.end() ? 0 : it->second;
      if (mult < 0) mult = h;
      else if (mult != h)
        throw std::logic_error("coset_convolution_oracle: uneven coset multiplicities");
      if (it != hits.end()) hits.erase(it);
    }
    if (mult > 0) coeff[d] = mult;
  }
  GL2BElement out;
  for (auto& [d, c] : coeff) out = out + LaurentScalar(c) * dcoset_to_monomials(d);
  return out;
}

// Specialize q -> p in every coefficient; requires integrality.
inline GL2BElement gl2b_eval_q(const GL2BElement& x, int p) {
  GL2BElement out;
  for (auto& [mo, c] : x.terms) {
    Rat v = c.eval_at(p);
    if (!v.is_integer()) throw std::domain_error("gl2b_eval_q: non-integral specialization");
    out.add_term(mo, LaurentScalar(v.num));
  }
  return out;
}

// Cone sections (inverses of Theta on C^+ / C^-), monomial by monomial.
inline GL2BElement lift_to_C_plus(const GroupAlgebraElement& v) {
  GL2BElement out;
  for (auto& [l, c] : v.terms) {
    int a = l[0], b = l[1];
    if (a < b) throw std::invalid_argument("lift_to_C_plus: monomial outside Theta(C^+)");
    out.add_term({0, a - b, b}, c);
  }
  return out;
}

inline GL2BElement lift_to_C_minus(const GroupAlgebraElement& v) {
  GL2BElement out;
  for (auto& [l, c] : v.terms) {
    int a = l[0], b = l[1];
    if (b < a) throw std::invalid_argument("lift_to_C_minus: monomial outside Theta(C^-)");
    out.add_term({b - a, 0, b}, c.shift_div(b - a));  // Theta(X_-^n Y^k) = q^n x^{k-n} y^k
  }
  return out;
}

}  // namespace hwb
