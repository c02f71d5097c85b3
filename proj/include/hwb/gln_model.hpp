#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "lambda_algebra.hpp"
#include "local_field.hpp"

namespace hwb {

// Invertible n x n matrix over F_p(pi), modeling GL_n(F).
struct GMatrix {
  int n = 0;
  int p = 2;
  std::vector<LocalScalar> e;  // row-major

  GMatrix() = default;
  GMatrix(int n_, int p_) : n(n_), p(p_), e(n_ * n_, LocalScalar::zero(p_)) {}

  LocalScalar& at(int i, int j) { return e[i * n + j]; }
  const LocalScalar& at(int i, int j) const { return e[i * n + j]; }

  static GMatrix identity(int n, int p) {
    GMatrix m(n, p);
    for (int i = 0; i < n; ++i) m.at(i, i) = LocalScalar::one(p);
    return m;
  }
  static GMatrix diag_pi(const LambdaVector& lambda, int p) {
    GMatrix m(static_cast<int>(lambda.size()), p);
    for (int i = 0; i < m.n; ++i) m.at(i, i) = LocalScalar::pi_power(p, lambda[i]);
    return m;
  }
  // u_alpha(x) = 1 + x E_{ij} for alpha = e_i - e_j
  static GMatrix root_element(int n, int p, int i, int j, const LocalScalar& x) {
    GMatrix m = identity(n, p);
    m.at(i, j) = x;
    return m;
  }

  friend GMatrix operator*(const GMatrix& a, const GMatrix& b) {
    GMatrix r(a.n, a.p);
    for (int i = 0; i < a.n; ++i)
      for (int k = 0; k < a.n; ++k) {
        if (a.at(i, k).is_zero()) continue;
        for (int j = 0; j < a.n; ++j) {
          if (b.at(k, j).is_zero()) continue;
          r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
        }
      }
    return r;
  }
  friend bool operator==(const GMatrix& a, const GMatrix& b) {
    return a.n == b.n && a.e == b.e;
  }
  friend bool operator!=(const GMatrix& a, const GMatrix& b) { return !(a == b); }

  bool is_identity() const { return *this == identity(n, p); }
  bool is_diagonal() const {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && !at(i, j).is_zero()) return false;
    return true;
  }
  bool is_upper_unitriangular() const {
    for (int i = 0; i < n; ++i) {
      if (at(i, i) != LocalScalar::one(p)) return false;
      for (int j = 0; j < i; ++j)
        if (!at(i, j).is_zero()) return false;
    }
    return true;
  }

  LocalScalar det() const {
    GMatrix a = *this;
    LocalScalar d = LocalScalar::one(p);
    bool neg = false;
    for (int s = 0; s < n; ++s) {
      int piv = -1;
      for (int i = s; i < n; ++i)
        if (!a.at(i, s).is_zero()) { piv = i; break; }
      if (piv < 0) return LocalScalar::zero(p);
      if (piv != s) {
        for (int j = 0; j < n; ++j) std::swap(a.e[piv * n + j], a.e[s * n + j]);
        neg = !neg;
      }
      d = d * a.at(s, s);
      for (int i = s + 1; i < n; ++i) {
        if (a.at(i, s).is_zero()) continue;
        LocalScalar f = a.at(i, s) / a.at(s, s);
        for (int j = s; j < n; ++j) a.at(i, j) = a.at(i, j) - f * a.at(s, j);
      }
    }
    return neg ? -d : d;
  }

  GMatrix inverse() const {
    GMatrix a = *this;
    GMatrix inv = identity(n, p);
    for (int s = 0; s < n; ++s) {
      int piv = -1;
      for (int i = s; i < n; ++i)
        if (!a.at(i, s).is_zero()) { piv = i; break; }
      if (piv < 0) throw std::domain_error("GMatrix: singular");
      if (piv != s)
        for (int j = 0; j < n; ++j) {
          std::swap(a.e[piv * n + j], a.e[s * n + j]);
          std::swap(inv.e[piv * n + j], inv.e[s * n + j]);
        }
      LocalScalar d = a.at(s, s).inverse();
      for (int j = 0; j < n; ++j) {
        a.at(s, j) = a.at(s, j) * d;
        inv.at(s, j) = inv.at(s, j) * d;
      }
      for (int i = 0; i < n; ++i) {
        if (i == s || a.at(i, s).is_zero()) continue;
        LocalScalar f = a.at(i, s);
        for (int j = 0; j < n; ++j) {
          a.at(i, j) = a.at(i, j) - f * a.at(s, j);
          inv.at(i, j) = inv.at(i, j) - f * inv.at(s, j);
        }
      }
    }
    return inv;
  }
};

inline bool in_K(const GMatrix& g) {
  for (const LocalScalar& x : g.e)
    if (!x.is_zero() && x.val() < 0) return false;
  LocalScalar d = g.det();
  return !d.is_zero() && d.val() == 0;
}

// Valuation vector of a diagonal matrix (the Lambda class of z).
inline LambdaVector lambda_of_diag(const GMatrix& z) {
  if (!z.is_diagonal()) throw std::invalid_argument("lambda_of_diag: not diagonal");
  LambdaVector l(z.n);
  for (int i = 0; i < z.n; ++i) {
    if (z.at(i, i).is_zero()) throw std::domain_error("lambda_of_diag: singular");
    l[i] = z.at(i, i).val();
  }
  return l;
}

// phi_alpha(u) for u = 1 + x E_{ij}: the valuation of the parameter.
struct RootGroupElement {
  int i = 0, j = 0;  // alpha = e_i - e_j
  LocalScalar x;

  GMatrix matrix(int n, int p) const { return GMatrix::root_element(n, p, i, j, x); }
  int phi() const { return x.is_zero() ? kValInfinity : x.val(); }
};

// Unique triple u = u' m u'' with u', u'' in U_{-alpha} and m in N swapping
// U_alpha and U_{-alpha}: u' = u'' = 1 + x^{-1} E_{ji},
// m = 1 - E_ii - E_jj + x E_ij - x^{-1} E_ji.
inline std::tuple<GMatrix, GMatrix, GMatrix> m_of_u(int n, int p, const RootGroupElement& u) {
  if (u.x.is_zero()) throw std::invalid_argument("m_of_u: trivial root element");
  LocalScalar xinv = u.x.inverse();
  GMatrix uprime = GMatrix::root_element(n, p, u.j, u.i, xinv);
  GMatrix m = GMatrix::identity(n, p);
  m.at(u.i, u.i) = LocalScalar::zero(p);
  m.at(u.j, u.j) = LocalScalar::zero(p);
  m.at(u.i, u.j) = u.x;
  m.at(u.j, u.i) = -xinv;
  GMatrix check = uprime * m * uprime;
  if (check != u.matrix(n, p)) throw std::logic_error("m_of_u: decomposition failed");
  return {uprime, m, uprime};
}

// The sandwich form of the same element: m = u' u u'' with u' = u'' in
// U_{-alpha} of parameter -x^{-1}; this is the normalization the reduction
// steps conjugate with.
inline std::tuple<GMatrix, GMatrix, GMatrix> m_sandwich(int n, int p, const RootGroupElement& u) {
  if (u.x.is_zero()) throw std::invalid_argument("m_sandwich: trivial root element");
  LocalScalar xinv = u.x.inverse();
  GMatrix uprime = GMatrix::root_element(n, p, u.j, u.i, -xinv);
  GMatrix m = uprime * u.matrix(n, p) * uprime;
  // antidiagonal on {i,j}: x at (i,j), -x^{-1} at (j,i)
  if (!m.at(u.i, u.i).is_zero() || !m.at(u.j, u.j).is_zero() || m.at(u.i, u.j) != u.x ||
      m.at(u.j, u.i) != -xinv)
    throw std::logic_error("m_sandwich: normalization failed");
  return {uprime, m, uprime};
}

// Fixed lift of s_alpha in N ∩ K for alpha = +-(e_i - e_j).
inline GMatrix n_alpha_lift(int n, int p, int i, int j) {
  int a = std::min(i, j), b = std::max(i, j);
  GMatrix m = GMatrix::identity(n, p);
  m.at(a, a) = LocalScalar::zero(p);
  m.at(b, b) = LocalScalar::zero(p);
  m.at(a, b) = LocalScalar::one(p);
  m.at(b, a) = -LocalScalar::one(p);
  return m;
}

// Block data of a standard parabolic P = U_P M.
struct StandardParabolic {
  std::vector<int> blocks;  // composition of n
  std::vector<int> start;   // block start offsets, plus total at the end

  explicit StandardParabolic(std::vector<int> comp) : blocks(std::move(comp)) {
    start.push_back(0);
    for (int b : blocks) {
      if (b <= 0) throw std::invalid_argument("StandardParabolic: nonpositive block");
      start.push_back(start.back() + b);
    }
  }
  int n() const { return start.back(); }
  int block_of(int idx) const {
    for (std::size_t b = 0; b + 1 < start.size(); ++b)
      if (idx < start[b + 1]) return static_cast<int>(b);
    throw std::out_of_range("block_of");
  }
  bool crossing(int i, int j) const { return block_of(i) != block_of(j); }

  bool in_U_P(const GMatrix& g) const {
    for (int i = 0; i < g.n; ++i)
      for (int j = 0; j < g.n; ++j) {
        int bi = block_of(i), bj = block_of(j);
        if (bi == bj) {
          if (i == j ? g.at(i, j) != LocalScalar::one(g.p) : !g.at(i, j).is_zero()) return false;
        } else if (bi > bj) {
          if (!g.at(i, j).is_zero()) return false;
        }
      }
    return true;
  }
  bool in_M(const GMatrix& g) const {
    for (int i = 0; i < g.n; ++i)
      for (int j = 0; j < g.n; ++j)
        if (block_of(i) != block_of(j) && !g.at(i, j).is_zero()) return false;
    return true;
  }

  // Lambda_{M+}: <alpha, nu(lambda)> <= 0 for all positive crossing roots.
  bool lambda_in_M_plus(const LambdaVector& l) const {
    for (std::size_t i = 0; i < l.size(); ++i)
      for (std::size_t j = i + 1; j < l.size(); ++j)
        if (crossing(static_cast<int>(i), static_cast<int>(j)) && l[i] < l[j]) return false;
    return true;
  }
  // Z^{+,M}: dominant for the Levi's own root system (blockwise decreasing).
  bool lambda_in_Z_plus_M(const LambdaVector& l) const {
    for (std::size_t i = 0; i + 1 < l.size(); ++i)
      if (!crossing(static_cast<int>(i), static_cast<int>(i) + 1) && l[i] < l[i + 1]) return false;
    return true;
  }
};

namespace detail {

struct SmithResult {
  GMatrix u, d, v;  // a = u d v, with u, v in K and d diagonal pi-powers
};

// Smith normal form over the valuation ring by pivot-on-minimal-valuation
// elimination; diagonal valuations come out increasing.
inline SmithResult smith_decompose(GMatrix a) {
  int n = a.n, p = a.p;
  GMatrix u = GMatrix::identity(n, p), v = GMatrix::identity(n, p);
  for (int s = 0; s < n; ++s) {
    int bi = -1, bj = -1, bv = kValInfinity;
    for (int i = s; i < n; ++i)
      for (int j = s; j < n; ++j) {
        if (a.at(i, j).is_zero()) continue;
        if (a.at(i, j).val() < bv) {
          bv = a.at(i, j).val();
          bi = i;
          bj = j;
        }
      }
    if (bi < 0) throw std::domain_error("smith_decompose: singular matrix");
    if (bi != s) {
      for (int j = 0; j < n; ++j) std::swap(a.e[bi * n + j], a.e[s * n + j]);
      for (int j = 0; j < n; ++j) std::swap(u.e[j * n + bi], u.e[j * n + s]);
    }
    if (bj != s) {
      for (int i = 0; i < n; ++i) std::swap(a.e[i * n + bj], a.e[i * n + s]);
      for (int i = 0; i < n; ++i) std::swap(v.e[bj * n + i], v.e[s * n + i]);
    }
    // scale pivot to an exact pi power (unit row scaling)
    LocalScalar unit = a.at(s, s) * LocalScalar::pi_power(p, -bv);
    LocalScalar unit_inv = unit.inverse();
    for (int j = s; j < n; ++j) a.at(s, j) = unit_inv * a.at(s, j);
    for (int i = 0; i < n; ++i) u.at(i, s) = u.at(i, s) * unit;
    for (int i = s + 1; i < n; ++i) {
      if (a.at(i, s).is_zero()) continue;
      LocalScalar f = a.at(i, s) / a.at(s, s);
      for (int j = s; j < n; ++j) a.at(i, j) = a.at(i, j) - f * a.at(s, j);
      for (int j = 0; j < n; ++j) u.at(j, s) = u.at(j, s) + f * u.at(j, i);
    }
    for (int j = s + 1; j < n; ++j) {
      if (a.at(s, j).is_zero()) continue;
      LocalScalar f = a.at(s, j) / a.at(s, s);
      for (int i = s; i < n; ++i) a.at(i, j) = a.at(i, j) - f * a.at(i, s);
      for (int i = 0; i < n; ++i) v.at(s, i) = v.at(s, i) + f * v.at(j, i);
    }
  }
  return {u, a, v};
}

}  // namespace detail

// Dominant-sorted elementary divisor valuations: the Cartan invariant of KgK.
inline LambdaVector cartan_invariant(const GMatrix& g) {
  auto res = detail::smith_decompose(g);
  LambdaVector l = lambda_of_diag(res.d);
  std::sort(l.begin(), l.end(), std::greater<int>());
  return l;
}

// The Z^- representative convention: antidominant (increasing) valuation vector,
// i.e. nu(z) dominant.
inline LambdaVector z_minus_representative(const GMatrix& g) {
  LambdaVector l = cartan_invariant(g);
  std::sort(l.begin(), l.end());
  return l;
}

struct IwasawaParts {
  GMatrix u, z, k;  // g = u z k
};

// G = U Z K by bottom-up column reduction over the valuation ring.
inline IwasawaParts iwasawa_decompose(const GMatrix& g) {
  int n = g.n, p = g.p;
  GMatrix w = g, k = GMatrix::identity(n, p);
  // invariant: g = w * k
  for (int i = n - 1; i >= 0; --i) {
    int bj = -1, bv = kValInfinity;
    for (int j = i; j >= 0; --j)
      if (!w.at(i, j).is_zero() && w.at(i, j).val() < bv) {
        bv = w.at(i, j).val();
        bj = j;
      }
    if (bj < 0) throw std::domain_error("iwasawa_decompose: singular matrix");
    if (bj != i) {
      for (int r = 0; r < n; ++r) std::swap(w.e[r * n + bj], w.e[r * n + i]);
      for (int c = 0; c < n; ++c) std::swap(k.e[bj * n + c], k.e[i * n + c]);
    }
    LocalScalar unit = w.at(i, i) * LocalScalar::pi_power(p, -bv);
    LocalScalar unit_inv = unit.inverse();
    for (int r = 0; r <= i; ++r) w.at(r, i) = w.at(r, i) * unit_inv;
    for (int c = 0; c < n; ++c) k.at(i, c) = unit * k.at(i, c);
    for (int j = 0; j < i; ++j) {
      if (w.at(i, j).is_zero()) continue;
      LocalScalar f = w.at(i, j) / w.at(i, i);
      for (int r = 0; r <= i; ++r) w.at(r, j) = w.at(r, j) - f * w.at(r, i);
      for (int c = 0; c < n; ++c) k.at(i, c) = k.at(i, c) + f * k.at(j, c);
    }
  }
  IwasawaParts parts;
  parts.z = GMatrix(n, p);
  for (int i = 0; i < n; ++i) parts.z.at(i, i) = w.at(i, i);
  parts.u = w * parts.z.inverse();
  parts.k = k;
  if (!parts.u.is_upper_unitriangular()) throw std::logic_error("iwasawa_decompose: U part bad");
  return parts;
}

struct PositiveIwasawaParts {
  GMatrix k, u_p, z, k_m;  // g = k * u_p * z * k_m, z in Z^{+,M}, k_m in K_M
};

// g = K U_P Z^{+,M} K_M: left Iwasawa, split off U_P, Cartan in the Levi,
// then move the left K_M factor across U_P.
inline PositiveIwasawaParts positive_iwasawa(const GMatrix& g, const StandardParabolic& par) {
  int n = g.n, p = g.p;
  IwasawaParts iw = iwasawa_decompose(g.inverse());
  // g = k0 z0 u0 with k0 = iw.k^{-1}, z0 = iw.z^{-1}, u0 = iw.u^{-1}
  GMatrix k0 = iw.k.inverse();
  GMatrix z0 = iw.z.inverse();
  GMatrix u0 = iw.u.inverse();
  GMatrix uprime = z0 * u0 * z0.inverse();  // g = k0 * uprime * z0
  // split uprime = u_P * u_M
  GMatrix u_m(n, p);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      u_m.at(i, j) = par.block_of(i) == par.block_of(j) ? uprime.at(i, j) : LocalScalar::zero(p);
  GMatrix u_p = uprime * u_m.inverse();
  GMatrix m = u_m * z0;
  // blockwise Cartan in the Levi, dominant within each block
  GMatrix c1 = GMatrix::identity(n, p), zt(n, p), c2 = GMatrix::identity(n, p);
  for (std::size_t b = 0; b < par.blocks.size(); ++b) {
    int s = par.start[b], len = par.blocks[b];
    GMatrix blk(len, p);
    for (int i = 0; i < len; ++i)
      for (int j = 0; j < len; ++j) blk.at(i, j) = m.at(s + i, s + j);
    auto sm = detail::smith_decompose(blk);
    // reverse to decreasing valuations: d' = P d P, u' = u P, v' = P v with P the flip
    for (int i = 0; i < len; ++i)
      for (int j = 0; j < len; ++j) {
        c1.at(s + i, s + j) = sm.u.at(i, len - 1 - j);
        zt.at(s + i, s + j) = i == j ? sm.d.at(len - 1 - i, len - 1 - i) : LocalScalar::zero(p);
        c2.at(s + i, s + j) = sm.v.at(len - 1 - i, j);
      }
  }
  PositiveIwasawaParts out;
  out.k = k0 * c1;
  out.u_p = c1.inverse() * u_p * c1;
  out.z = zt;
  out.k_m = c2;
  if (!par.in_U_P(out.u_p)) throw std::logic_error("positive_iwasawa: U_P part bad");
  if (!par.lambda_in_Z_plus_M(lambda_of_diag(out.z)))
    throw std::logic_error("positive_iwasawa: Z part not M-dominant");
  if (!in_K(out.k_m) || !par.in_M(out.k_m)) throw std::logic_error("positive_iwasawa: K_M part bad");
  if (out.k * out.u_p * out.z * out.k_m != g) throw std::logic_error("positive_iwasawa: recompose");
  return out;
}

// Seeded samplers. Deterministic in the seed; outputs always land in K.
inline LocalScalar sample_integral(Rng& rng, int p, int degree_bound) {
  std::vector<int> c(degree_bound + 1);
  for (int& x : c) x = static_cast<int>(rng.next() % static_cast<unsigned>(p));
  return LocalScalar::from_poly(FpPoly(p, std::move(c)));
}

inline LocalScalar sample_unit(Rng& rng, int p, int degree_bound) {
  std::vector<int> c(degree_bound + 1);
  c[0] = 1 + static_cast<int>(rng.next() % static_cast<unsigned>(p - 1));
  for (std::size_t i = 1; i < c.size(); ++i)
    c[i] = static_cast<int>(rng.next() % static_cast<unsigned>(p));
  return LocalScalar::from_poly(FpPoly(p, std::move(c)));
}

inline GMatrix sample_K(std::uint64_t seed, int n, int p, int degree_bound = 1) {
  Rng rng(seed);
  GMatrix k = GMatrix::identity(n, p);
  for (int i = 0; i < n; ++i) {
    GMatrix d = GMatrix::identity(n, p);
    d.at(i, i) = sample_unit(rng, p, degree_bound);
    k = k * d;
  }
  int shears = 2 * n * n;
  for (int t = 0; t < shears; ++t) {
    int i = static_cast<int>(rng.next() % static_cast<unsigned>(n));
    int j = static_cast<int>(rng.next() % static_cast<unsigned>(n));
    if (i == j) continue;
    k = k * GMatrix::root_element(n, p, i, j, sample_integral(rng, p, degree_bound));
  }
  return k;
}

inline GMatrix sample_cartan_coset(const GMatrix& z, std::uint64_t seed) {
  GMatrix k1 = sample_K(seed * 2 + 1, z.n, z.p);
  GMatrix k2 = sample_K(seed * 2 + 2, z.n, z.p);
  return k1 * z * k2;
}

// Literal coset-index count [K_U : K_U ∩ z^{-1} K_U z] for GL_2, by residue
// enumeration and matrix membership tests only.
inline long count_mu_U_gl2(const LambdaVector& lambda, int p) {
  if (lambda.size() != 2) throw std::invalid_argument("count_mu_U_gl2: rank 2 only");
  int spread = std::abs(lambda[0] - lambda[1]);
  int N = spread + 1;
  GMatrix z = GMatrix::diag_pi(lambda, p);
  GMatrix zinv = z.inverse();
  long total = 0, in_subgroup = 0;
  std::vector<int> digits(N, 0);
  while (true) {
    FpPoly c(p, digits);
    GMatrix u = GMatrix::root_element(2, p, 0, 1, LocalScalar::from_poly(c));
    ++total;
    if (in_K(z * u * zinv)) ++in_subgroup;  // u in K_U by construction
    int d = 0;
    while (d < N && ++digits[d] == p) digits[d++] = 0;
    if (d == N) break;
  }
  if (total % in_subgroup != 0) throw std::logic_error("count_mu_U_gl2: bad index");
  return total / in_subgroup;
}

}  // namespace hwb
