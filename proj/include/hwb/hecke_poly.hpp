#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "gl2_hecke.hpp"
#include "gln_model.hpp"
#include "satake_oracle.hpp"

namespace hwb {

// Polynomial in a central variable t over a (possibly noncommutative) carrier.
template <class C>
struct HPoly {
  std::vector<C> c;  // coefficient of t^i at index i; no trailing zeros

  HPoly() = default;
  explicit HPoly(std::vector<C> cc) : c(std::move(cc)) { trim(); }
  static HPoly constant(C x) { return HPoly(std::vector<C>{std::move(x)}); }

  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c.empty(); }
  C coeff(int i) const { return i >= 0 && i < static_cast<int>(c.size()) ? c[i] : C{}; }

  friend HPoly operator+(const HPoly& a, const HPoly& b) {
    HPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < r.c.size(); ++i) {
      if (i < a.c.size()) r.c[i] = r.c[i] + a.c[i];
      if (i < b.c.size()) r.c[i] = r.c[i] + b.c[i];
    }
    r.trim();
    return r;
  }
  friend HPoly operator-(const HPoly& a, const HPoly& b) {
    HPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < r.c.size(); ++i) {
      if (i < a.c.size()) r.c[i] = r.c[i] + a.c[i];
      if (i < b.c.size()) r.c[i] = r.c[i] - b.c[i];
    }
    r.trim();
    return r;
  }
  friend HPoly operator*(const HPoly& a, const HPoly& b) {  // coefficient order preserved
    if (a.is_zero() || b.is_zero()) return HPoly{};
    HPoly r;
    r.c.resize(a.c.size() + b.c.size() - 1);
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    r.trim();
    return r;
  }
  friend bool operator==(const HPoly& a, const HPoly& b) { return a.c == b.c; }
  friend bool operator!=(const HPoly& a, const HPoly& b) { return !(a == b); }

  HPoly truncated(int order) const {  // keep t^0..t^order
    HPoly r = *this;
    if (static_cast<int>(r.c.size()) > order + 1) r.c.resize(order + 1);
    r.trim();
    return r;
  }

  template <class D>
  HPoly<D> map(const std::function<D(const C&)>& f) const {
    std::vector<D> out;
    out.reserve(c.size());
    for (const C& x : c) out.push_back(f(x));
    return HPoly<D>(std::move(out));
  }
};

// Right-inverse power series h of f (constant term 1): f * h = 1 + O(t^{order+1}).
template <class C>
std::vector<C> series_right_inverse(const HPoly<C>& f, int order, const C& one) {
  if (f.is_zero() || !(f.c[0] == one))
    throw std::invalid_argument("series_right_inverse: constant term must be 1");
  std::vector<C> h(order + 1);
  h[0] = one;
  for (int j = 1; j <= order; ++j) {
    C acc{};
    for (int i = 1; i <= std::min(j, f.degree()); ++i) acc = acc + f.c[i] * h[j - i];
    h[j] = C{} - acc;
  }
  return h;
}

// Left-inverse series: h * f = 1 + O(t^{order+1}).
template <class C>
std::vector<C> series_left_inverse(const HPoly<C>& f, int order, const C& one) {
  if (f.is_zero() || !(f.c[0] == one))
    throw std::invalid_argument("series_left_inverse: constant term must be 1");
  std::vector<C> h(order + 1);
  h[0] = one;
  for (int j = 1; j <= order; ++j) {
    C acc{};
    for (int i = 1; i <= std::min(j, f.degree()); ++i) acc = acc + h[j - i] * f.c[i];
    h[j] = C{} - acc;
  }
  return h;
}

using LambdaPoly = HPoly<GroupAlgebraElement>;
using SphericalPoly = HPoly<GL2GElement>;
using BorelPoly = HPoly<GL2BElement>;

// ---------------------------------------------------------------------------
// chi_{a_P}(t) = prod over the orbit of -lambda_P of (1 - w * e^{-lambda_P} t),
// for strictly M-positive lambda_P of a standard parabolic of GL_n.
// ---------------------------------------------------------------------------

inline void require_strictly_M_positive(const StandardParabolic& par, const LambdaVector& lp) {
  int n = par.n();
  if (static_cast<int>(lp.size()) != n) throw std::invalid_argument("lambda_P: size mismatch");
  for (int i = 0; i + 1 < n; ++i) {
    if (!par.crossing(i, i + 1) && lp[i] != lp[i + 1])
      throw std::invalid_argument("lambda_P not central in the Levi");
    if (par.crossing(i, i + 1) && lp[i] <= lp[i + 1])
      throw std::invalid_argument("lambda_P not strictly M-positive");
  }
}

inline LambdaPoly chi_tilde(const StandardParabolic& par, const LambdaVector& lambda_p) {
  require_strictly_M_positive(par, lambda_p);
  int n = par.n();
  LambdaVector neg(n);
  for (int i = 0; i < n; ++i) neg[i] = -lambda_p[i];
  WeylActionData W(n);
  std::set<LambdaVector> orbit;
  for (const auto& w : W.elements()) orbit.insert(WeylActionData::apply(w, neg));
  int base = mu_U_exponent(neg);
  LambdaPoly out = LambdaPoly::constant(GroupAlgebraElement::one(n));
  for (const LambdaVector& mu : orbit) {
    GroupAlgebraElement lin = GroupAlgebraElement::monomial(
        mu, LaurentScalar::q_power(mu_U_exponent(mu) - base, -1));
    out = out * LambdaPoly({GroupAlgebraElement::one(n), lin});
  }
  return out;
}

// The subset-sum closed form for Satake(X_i); equals the chi_tilde coefficients.
inline LambdaPoly chi_tilde_subset_formula(const StandardParabolic& par,
                                           const LambdaVector& lambda_p) {
  require_strictly_M_positive(par, lambda_p);
  int n = par.n();
  LambdaVector neg(n);
  for (int i = 0; i < n; ++i) neg[i] = -lambda_p[i];
  WeylActionData W(n);
  std::set<LambdaVector> orbit_set;
  for (const auto& w : W.elements()) orbit_set.insert(WeylActionData::apply(w, neg));
  std::vector<LambdaVector> orbit(orbit_set.begin(), orbit_set.end());
  int d = static_cast<int>(orbit.size());
  int base = mu_U_exponent(neg);
  std::vector<GroupAlgebraElement> coeffs(d + 1, GroupAlgebraElement(n));
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    int i = __builtin_popcount(mask);
    LambdaVector sum(n, 0);
    int mu_prod = 0;
    for (int t = 0; t < d; ++t)
      if (mask & (1u << t)) {
        for (int a = 0; a < n; ++a) sum[a] += orbit[t][a];
        mu_prod += mu_U_exponent(orbit[t]);
      }
    int sign_exp = i;  // (-1)^i
    LaurentScalar c = LaurentScalar::q_power(mu_prod - i * base, sign_exp % 2 ? -1 : 1);
    coeffs[i].add_term(sum, c);
  }
  return LambdaPoly(std::move(coeffs));
}

// evaluate a LambdaPoly at e^{lambda} (central variable)
inline GroupAlgebraElement lambda_poly_eval(const LambdaPoly& f, const LambdaVector& l) {
  int n = static_cast<int>(l.size());
  GroupAlgebraElement acc(n);
  GroupAlgebraElement power = GroupAlgebraElement::one(n);
  GroupAlgebraElement e = GroupAlgebraElement::monomial(l);
  for (int i = 0; i <= f.degree(); ++i) {
    acc = acc + f.coeff(i) * power;
    power = power * e;
  }
  return acc;
}

struct Gl2Chi {
  LambdaPoly tilde;       // coefficients in R[Lambda]
  SphericalPoly spherical;  // X_i in the T,S presentation
  BorelPoly embedded;       // epsilon_{B,G}(X_i)
};

// chi for the GL_2 Borel and a_B = diag(pi,1): the worked explicit case.
inline Gl2Chi gl2_chi_borel() {
  StandardParabolic borel({1, 1});
  Gl2Chi chi;
  chi.tilde = chi_tilde(borel, {1, 0});
  std::vector<GL2GElement> sph;
  for (int i = 0; i <= chi.tilde.degree(); ++i) sph.push_back(satake_inverse(chi.tilde.coeff(i)));
  chi.spherical = SphericalPoly(std::move(sph));
  std::vector<GL2BElement> emb;
  for (int i = 0; i <= chi.spherical.degree(); ++i) emb.push_back(epsilon_BG(chi.spherical.coeff(i)));
  chi.embedded = BorelPoly(std::move(emb));
  return chi;
}

// Left evaluation sum_i (a_P)^i X_i at a_B = X_+; zero iff the Hypothesis holds.
inline GL2BElement chi_left_evaluation(const BorelPoly& chi) {
  GL2BElement acc;
  GL2BElement power = GL2BElement::one();
  for (int i = 0; i <= chi.degree(); ++i) {
    acc = acc + power * chi.coeff(i);
    power = power * GL2BElement::Xp();
  }
  return acc;
}

inline bool hypothesis_check(const BorelPoly& chi) { return chi_left_evaluation(chi).is_zero(); }

// Weaker membership: chi((a_P)) lies in Ker Theta.
inline bool chi_in_kernel_check(const BorelPoly& chi) {
  return theta_BZ(chi_left_evaluation(chi)).is_zero();
}

// ---------------------------------------------------------------------------
// Negative powers of X_+ and the O^+ / Ker Theta splitting for GL_2.
// ---------------------------------------------------------------------------

class Gl2NegativePowers {
 public:
  explicit Gl2NegativePowers(BorelPoly chi) : chi_(std::move(chi)) {
    if (!hypothesis_check(chi_))
      throw std::invalid_argument("Gl2NegativePowers: hypothesis fails for this chi");
    neg_.push_back(GL2BElement::one());  // placeholder index 0 = X_+^0
  }

  // X_+^d for any integer d; negative powers are the recursive elements.
  GL2BElement power(int d) {
    if (d >= 0) return GL2BElement::Xp(d);
    ensure(-d);
    return neg_[-d];
  }

 private:
  void ensure(int n) {
    while (static_cast<int>(neg_.size()) <= n) {
      int m = static_cast<int>(neg_.size());
      GL2BElement acc;
      for (int i = 1; i <= chi_.degree(); ++i) acc = acc + power(i - m) * chi_.coeff(i);
      neg_.push_back(-acc);
    }
  }
  BorelPoly chi_;
  std::vector<GL2BElement> neg_;
};

// x = o + kernel with o = X_+^n x X_+^{-n} in O^+_B and Theta(kernel) = 0.
inline std::pair<GL2BElement, GL2BElement> split_hyp(const GL2BElement& x,
                                                     Gl2NegativePowers& np) {
  int n = 0;
  for (auto& [mo, c] : x.terms) n = std::max(n, mo.n);
  GL2BElement shifted = GL2BElement::Xp(n) * x;
  if (!shifted.in_C_plus()) throw std::logic_error("split_hyp: X_+^n x did not land in C^+");
  GL2BElement o = shifted * np.power(-n);
  GL2BElement kernel = x - o;
  if (!theta_BZ(kernel).is_zero()) throw std::logic_error("split_hyp: kernel part not in Ker Theta");
  return {o, kernel};
}

// ---------------------------------------------------------------------------
// Decomposition of Hecke polynomials over the GL_2 parabolic algebra.
// ---------------------------------------------------------------------------

enum class ConeSide { plusC, minusC };

struct DecomposeResult {
  BorelPoly f, g;
  std::vector<std::pair<std::string, bool>> transcript;
};

inline SphericalPoly spherical_from_lambda(const LambdaPoly& p) {
  std::vector<GL2GElement> c;
  for (int i = 0; i <= p.degree(); ++i) c.push_back(satake_inverse(p.coeff(i)));
  return SphericalPoly(std::move(c));
}

inline LambdaPoly lambda_from_spherical(const SphericalPoly& p) {
  std::vector<GroupAlgebraElement> c;
  for (int i = 0; i <= p.degree(); ++i) c.push_back(satake_of_spherical(p.coeff(i)));
  return LambdaPoly(std::move(c));
}

inline BorelPoly embed_spherical(const SphericalPoly& p) {
  std::vector<GL2BElement> c;
  for (int i = 0; i <= p.degree(); ++i) c.push_back(epsilon_BG(p.coeff(i)));
  return BorelPoly(std::move(c));
}

inline DecomposeResult decompose(const SphericalPoly& d, const LambdaPoly& f_tilde,
                                 const LambdaPoly& g_tilde, ConeSide side) {
  DecomposeResult res;
  auto check = [&](const std::string& name, bool ok) {
    res.transcript.push_back({name, ok});
    if (!ok) throw std::invalid_argument("decompose: failed check: " + name);
  };

  check("theta(d) = f~ * g~", lambda_from_spherical(d) == f_tilde * g_tilde);
  BorelPoly dB = embed_spherical(d);
  const GL2BElement one = GL2BElement::one();

  if (side == ConeSide::plusC) {
    std::vector<GL2BElement> fc;
    for (int i = 0; i <= f_tilde.degree(); ++i) fc.push_back(lift_to_C_plus(f_tilde.coeff(i)));
    BorelPoly f(std::move(fc));
    check("f~ lifts into C^+ with constant term 1", !f.is_zero() && f.c[0] == one);
    int order = std::max(0, g_tilde.degree());
    auto h = series_right_inverse(f, order, one);
    BorelPoly g = (BorelPoly(h) * dB).truncated(order);
    check("deg f = deg f~", f.degree() == f_tilde.degree());
    check("deg g = deg g~", g.degree() == g_tilde.degree());
    check("product f*g = d exactly", f * g == dB);
    bool theta_match = true;
    for (int i = 0; i <= g.degree(); ++i)
      if (theta_BZ(g.coeff(i)) != g_tilde.coeff(i)) theta_match = false;
    check("theta(g_i) = g~_i", theta_match);
    res.f = f;
    res.g = g;
  } else {
    std::vector<GL2BElement> gc;
    for (int i = 0; i <= g_tilde.degree(); ++i) gc.push_back(lift_to_C_minus(g_tilde.coeff(i)));
    BorelPoly g(std::move(gc));
    check("g~ lifts into C^- with constant term 1", !g.is_zero() && g.c[0] == one);
    int order = std::max(0, f_tilde.degree());
    auto h = series_left_inverse(g, order, one);
    BorelPoly f = (dB * BorelPoly(h)).truncated(order);
    check("deg f = deg f~", f.degree() == f_tilde.degree());
    check("deg g = deg g~", g.degree() == g_tilde.degree());
    check("product f*g = d exactly", f * g == dB);
    bool theta_match = true;
    for (int i = 0; i <= f.degree(); ++i)
      if (theta_BZ(f.coeff(i)) != f_tilde.coeff(i)) theta_match = false;
    check("theta(f_i) = f~_i", theta_match);
    res.f = f;
    res.g = g;
  }
  return res;
}

struct CompleteResult {
  BorelPoly g;
  SphericalPoly d;  // f * g = epsilon(d)
  LambdaPoly d_tilde;
};

// Completion: multiply the twisted conjugates of Theta(f) and lift the product.
inline CompleteResult complete_to_spherical(const BorelPoly& f) {
  const GL2BElement one = GL2BElement::one();
  if (f.is_zero() || !(f.c[0] == one))
    throw std::invalid_argument("complete_to_spherical: constant term must be 1");
  for (int i = 0; i <= f.degree(); ++i)
    if (!f.coeff(i).in_C_plus())
      throw std::invalid_argument("complete_to_spherical: coefficients must lie in C^+");

  std::vector<GroupAlgebraElement> ft;
  for (int i = 0; i <= f.degree(); ++i) ft.push_back(theta_BZ(f.coeff(i)));
  LambdaPoly f_tilde(std::move(ft));

  WeylActionData W(2);
  std::vector<LambdaPoly> conjugates;
  for (const auto& w : W.elements()) {
    std::vector<GroupAlgebraElement> cc;
    for (int i = 0; i <= f_tilde.degree(); ++i) cc.push_back(twisted_act(w, f_tilde.coeff(i)));
    LambdaPoly fw(std::move(cc));
    bool seen = false;
    for (const LambdaPoly& c : conjugates)
      if (c == fw) seen = true;
    if (!seen) conjugates.push_back(fw);
  }
  LambdaPoly d_tilde = LambdaPoly::constant(GroupAlgebraElement::one(2));
  for (const LambdaPoly& c : conjugates) d_tilde = d_tilde * c;

  SphericalPoly d = spherical_from_lambda(d_tilde);  // throws unless star-invariant image

  int order = d_tilde.degree() - f_tilde.degree();
  auto ht = series_right_inverse(f_tilde, std::max(0, order), GroupAlgebraElement::one(2));
  LambdaPoly g_tilde = (LambdaPoly(ht) * d_tilde).truncated(std::max(0, order));
  if (f_tilde * g_tilde != d_tilde)
    throw std::logic_error("complete_to_spherical: tilde division left a tail");

  DecomposeResult dec = decompose(d, f_tilde, g_tilde, ConeSide::plusC);
  if (dec.f != f) throw std::logic_error("complete_to_spherical: lifted f mismatch");
  // |W_0^M| = 2 for the Borel of GL_2: deg g <= deg f * (|W_0^M| - 1)
  if (dec.g.degree() > f.degree())
    throw std::logic_error("complete_to_spherical: degree bound violated");
  return {dec.g, d, d_tilde};
}

// Monic integral equation for X in C^+: sum_i X^i d_i = 0 with deg <= |W_0^M|.
inline SphericalPoly integral_equation(const GL2BElement& x) {
  if (!x.in_C_plus()) throw std::invalid_argument("integral_equation: X must lie in C^+");
  if (x.is_zero()) {
    return SphericalPoly({GL2GElement{}, GL2GElement::one()});  // d(t) = t
  }
  BorelPoly f({GL2BElement::one(), -x});
  CompleteResult comp = complete_to_spherical(f);
  int r = comp.d.degree();
  std::vector<GL2GElement> rev(r + 1);
  for (int i = 0; i <= r; ++i) rev[i] = comp.d.coeff(r - i);
  SphericalPoly out(std::move(rev));
  if (!(out.coeff(r) == GL2GElement::one()))
    throw std::logic_error("integral_equation: result not monic");
  GL2BElement acc;
  GL2BElement power = GL2BElement::one();
  for (int i = 0; i <= r; ++i) {
    acc = acc + power * epsilon_BG(out.coeff(i));
    power = power * x;
  }
  if (!acc.is_zero()) throw std::logic_error("integral_equation: left evaluation nonzero");
  return out;
}

// ---------------------------------------------------------------------------
// Cartan-basis coordinates at a fixed residue cardinality p, by triangular
// inversion against the counting oracle (the GL_3 route to lifted chi).
// ---------------------------------------------------------------------------

struct CartanCoords {
  std::map<LambdaVector, Rat> coeffs;  // dominant lambda -> rational coefficient
};

inline CartanCoords cartan_coordinates_at_p(const GroupAlgebraElement& v_sym, int p) {
  int n = v_sym.n;
  std::map<LambdaVector, Rat> work;
  for (auto& [l, c] : v_sym.terms) {
    Rat r = c.eval_at(p);
    if (!r.is_zero()) work[l] = r;
  }
  CartanCoords out;
  int guard = 4096;
  while (!work.empty()) {
    if (--guard < 0) throw std::invalid_argument("cartan_coordinates_at_p: no convergence");
    // pick a dominance-maximal orbit via its dominant-sorted representative
    LambdaVector best;
    bool have = false;
    for (auto& [l, c] : work) {
      LambdaVector d = l;
      std::sort(d.begin(), d.end(), std::greater<int>());
      if (!have || dominance_leq(nu(d), nu(best))) {  // nu reverses, so this picks max
        best = d;
        have = true;
      }
    }
    const GroupAlgebraElement& sat = satake_counting_cached(best, p);
    // the unit coefficient of the oracle image sits at the dominant class itself
    LambdaVector lead = best;
    auto it_lead = sat.terms.find(lead);
    if (it_lead == sat.terms.end())
      throw std::logic_error("cartan_coordinates_at_p: oracle image lacks leading term");
    Rat lead_c = it_lead->second.eval_at(p);
    auto it_work = work.find(lead);
    if (it_work == work.end())
      throw std::invalid_argument("cartan_coordinates_at_p: not in the spherical image");
    Rat coeff = it_work->second / lead_c;
    out.coeffs[best] = out.coeffs.count(best) ? out.coeffs[best] + coeff : coeff;
    for (auto& [l, c] : sat.terms) {
      Rat delta = coeff * c.eval_at(p);
      auto w = work.find(l);
      if (w == work.end()) {
        if (!delta.is_zero()) work[l] = -delta;
      } else {
        w->second -= delta;
        if (w->second.is_zero()) work.erase(w);
      }
    }
  }
  return out;
}

}  // namespace hwb
