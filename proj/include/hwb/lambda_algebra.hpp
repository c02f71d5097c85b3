#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "laurent.hpp"

namespace hwb {

// Cocharacter of the diagonal split torus of GL_n: lambda <-> diag(pi^{l_1},...,pi^{l_n}).
using LambdaVector = std::vector<int>;

// nu(lambda) = -lambda, so that <e_i - e_j, nu(lambda)> = lambda_j - lambda_i.
inline std::vector<int> nu(const LambdaVector& l) {
  std::vector<int> v(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) v[i] = -l[i];
  return v;
}

// Dominance on V for GL_n: v <= w iff w - v is a nonnegative combination of the
// simple coroots e_i - e_{i+1}; coordinate sums must agree.
inline bool dominance_leq(const std::vector<int>& v, const std::vector<int>& w) {
  if (v.size() != w.size()) throw std::invalid_argument("dominance_leq: size mismatch");
  long total = 0, partial = 0;
  for (std::size_t i = 0; i < v.size(); ++i) total += w[i] - v[i];
  if (total != 0) return false;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    partial += w[i] - v[i];
    if (partial < 0) return false;
  }
  return true;
}

inline bool is_dominant_lambda(const LambdaVector& l) {  // Lambda^+: decreasing entries
  for (std::size_t i = 0; i + 1 < l.size(); ++i)
    if (l[i] < l[i + 1]) return false;
  return true;
}

// mu_U(lambda) = q^{sum over positive roots of max(0, <alpha, nu(lambda)>)};
// equals 1 exactly on Lambda^+.
inline LaurentScalar mu_U(const LambdaVector& l) {
  long e = 0;
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = i + 1; j < l.size(); ++j)
      e += std::max(0, l[j] - l[i]);
  return LaurentScalar::q_power(static_cast<int>(e));
}

inline int mu_U_exponent(const LambdaVector& l) {
  long e = 0;
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = i + 1; j < l.size(); ++j)
      e += std::max(0, l[j] - l[i]);
  return static_cast<int>(e);
}

// delta(lambda) = mu_U(lambda) / mu_U(-lambda), an exact (possibly negative) q-power.
inline LaurentScalar delta_char(const LambdaVector& l) {
  LambdaVector neg(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) neg[i] = -l[i];
  return LaurentScalar::q_power(mu_U_exponent(l) - mu_U_exponent(neg));
}

// The W_0 = S_n action on Lambda by coordinate permutations.
struct WeylActionData {
  int n;
  explicit WeylActionData(int n_) : n(n_) {}

  // all permutations, identity first (n <= 8 intended)
  std::vector<std::vector<int>> elements() const {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    std::vector<std::vector<int>> out;
    do {
      out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::sort(out.begin(), out.end());
    return out;
  }

  static LambdaVector apply(const std::vector<int>& perm, const LambdaVector& l) {
    // w(lambda)_{perm[i]} = lambda_i, i.e. position i moves to perm[i]
    LambdaVector r(l.size());
    for (std::size_t i = 0; i < l.size(); ++i) r[perm[i]] = l[i];
    return r;
  }

  std::vector<int> longest() const {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = n - 1 - i;
    return p;
  }

  std::vector<std::vector<int>> simple_transpositions() const {
    std::vector<std::vector<int>> out;
    for (int i = 0; i + 1 < n; ++i) {
      std::vector<int> p(n);
      for (int j = 0; j < n; ++j) p[j] = j;
      std::swap(p[i], p[i + 1]);
      out.push_back(p);
    }
    return out;
  }
};

// Finitely supported function Lambda -> Z[q^{+-1}], the group algebra R[Lambda].
struct GroupAlgebraElement {
  int n = 0;  // rank of Lambda = Z^n
  std::map<LambdaVector, LaurentScalar> terms;

  GroupAlgebraElement() = default;
  explicit GroupAlgebraElement(int n_) : n(n_) {}

  static GroupAlgebraElement monomial(const LambdaVector& l, LaurentScalar c = LaurentScalar(1)) {
    GroupAlgebraElement x(static_cast<int>(l.size()));
    if (!c.is_zero()) x.terms[l] = std::move(c);
    return x;
  }
  static GroupAlgebraElement one(int n) { return monomial(LambdaVector(n, 0)); }

  bool is_zero() const { return terms.empty(); }

  void add_term(const LambdaVector& l, const LaurentScalar& c) {
    auto it = terms.find(l);
    if (it == terms.end()) {
      if (!c.is_zero()) terms[l] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  friend GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    GroupAlgebraElement r = a;
    for (auto& [l, c] : b.terms) r.add_term(l, c);
    return r;
  }
  friend GroupAlgebraElement operator-(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    GroupAlgebraElement r = a;
    for (auto& [l, c] : b.terms) r.add_term(l, -c);
    return r;
  }
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    GroupAlgebraElement r(a.n ? a.n : b.n);
    for (auto& [l1, c1] : a.terms)
      for (auto& [l2, c2] : b.terms) {
        LambdaVector l(l1.size());
        for (std::size_t i = 0; i < l.size(); ++i) l[i] = l1[i] + l2[i];
        r.add_term(l, c1 * c2);
      }
    return r;
  }
  friend GroupAlgebraElement operator*(const LaurentScalar& c, const GroupAlgebraElement& a) {
    GroupAlgebraElement r(a.n);
    for (auto& [l, v] : a.terms) r.add_term(l, c * v);
    return r;
  }
  GroupAlgebraElement operator-() const { return LaurentScalar(-1) * *this; }
  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return a.terms == b.terms;
  }
  friend bool operator!=(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return !(a == b);
  }
};

// w * e^lambda = (mu_U(w(lambda))/mu_U(lambda)) * e^{w(lambda)}, extended linearly.
inline GroupAlgebraElement twisted_act(const std::vector<int>& perm, const GroupAlgebraElement& x) {
  GroupAlgebraElement r(x.n);
  for (auto& [l, c] : x.terms) {
    LambdaVector wl = WeylActionData::apply(perm, l);
    int shift = mu_U_exponent(wl) - mu_U_exponent(l);
    r.add_term(wl, c * LaurentScalar::q_power(shift));
  }
  return r;
}

// S_lambda = sum over the orbit of mu_U(mu) e^mu (lambda in Lambda^+, where mu_U(lambda) = 1).
inline GroupAlgebraElement orbit_sum(const LambdaVector& lambda) {
  if (!is_dominant_lambda(lambda)) throw std::invalid_argument("orbit_sum: lambda not in Lambda^+");
  int n = static_cast<int>(lambda.size());
  WeylActionData W(n);
  std::set<LambdaVector> orbit;
  for (const auto& p : W.elements()) orbit.insert(WeylActionData::apply(p, lambda));
  GroupAlgebraElement s(n);
  for (const LambdaVector& mu : orbit) s.add_term(mu, mu_U(mu));
  return s;
}

inline bool is_star_invariant(const GroupAlgebraElement& x) {
  WeylActionData W(x.n);
  for (const auto& s : W.simple_transpositions())
    if (twisted_act(s, x) != x) return false;
  return true;
}

// Coordinates of a star-invariant element over the S_lambda basis. Support is a
// union of orbits and S_lambda is supported on exactly one orbit with unit
// coefficient at the dominant representative, so extraction peels one orbit per step.
inline std::map<LambdaVector, LaurentScalar> star_invariant_coordinates(GroupAlgebraElement x) {
  if (!is_star_invariant(x))
    throw std::invalid_argument("star_invariant_coordinates: element is not star-invariant");
  std::map<LambdaVector, LaurentScalar> out;
  int guard = 1 << 20;
  while (!x.is_zero()) {
    if (--guard < 0) throw std::logic_error("star_invariant_coordinates: no convergence");
    const LambdaVector* dom = nullptr;
    for (auto& [l, c] : x.terms)
      if (is_dominant_lambda(l)) {
        dom = &l;
        break;
      }
    if (!dom) throw std::logic_error("star_invariant_coordinates: no dominant term in support");
    LambdaVector l = *dom;
    LaurentScalar c = x.terms.at(l);
    out[l] = c;
    x = x - c * orbit_sum(l);
  }
  return out;
}

// Both forms of the delta/mu comparison identity, checked symbolically.
inline bool delta_mu_identity_check(const std::vector<int>& perm, const LambdaVector& l) {
  LambdaVector wl = WeylActionData::apply(perm, l);
  LambdaVector nl(l.size()), nwl(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) {
    nl[i] = -l[i];
    nwl[i] = -wl[i];
  }
  LaurentScalar lhs = delta_char(wl);                     // delta(w(lambda))
  LaurentScalar rhs1 = delta_char(l) *
      LaurentScalar::q_power(2 * (mu_U_exponent(wl) - mu_U_exponent(l)));
  LaurentScalar rhs2 = delta_char(l) *
      LaurentScalar::q_power(2 * (mu_U_exponent(nl) - mu_U_exponent(nwl)));
  return lhs == rhs1 && lhs == rhs2;
}

// GL_2 shorthands: x = e^{(1,0)}, y = e^{(0,1)}.
inline GroupAlgebraElement gl2_x(int pow = 1) { return GroupAlgebraElement::monomial({pow, 0}); }
inline GroupAlgebraElement gl2_y(int pow = 1) { return GroupAlgebraElement::monomial({0, pow}); }
inline GroupAlgebraElement gl2_mono(int a, int b, LaurentScalar c = LaurentScalar(1)) {
  return GroupAlgebraElement::monomial({a, b}, std::move(c));
}

}  // namespace hwb
