#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "root_system.hpp"

namespace hwb {

// Maximal standard parabolic attached to the i-th simple root (0-based).
struct ParabolicVertex {
  const RootSystem* sys = nullptr;
  int i = 0;
  std::vector<QVec> sigma_M;   // roots in span(Delta minus alpha_i), i.e. c_i = 0
  std::vector<QVec> sigma_UP;  // positive roots with c_i > 0
};

inline ParabolicVertex parabolic_vertex(const RootSystem& sys, int i) {
  if (i < 0 || i >= sys.rank()) throw std::invalid_argument("parabolic_vertex: bad index");
  ParabolicVertex v;
  v.sys = &sys;
  v.i = i;
  v.sigma_M = levi_roots(sys, i);
  v.sigma_UP = unipotent_radical_roots(sys, i);
  return v;
}

// (i): <alpha, beta^vee> >= 0 for all alpha, beta in Sigma_{U_P}; equivalently
// (alpha, beta) >= 0 on all pairs.
inline bool condition_i(const ParabolicVertex& v) {
  for (std::size_t a = 0; a < v.sigma_UP.size(); ++a)
    for (std::size_t b = a; b < v.sigma_UP.size(); ++b)
      if (dot(v.sigma_UP[a], v.sigma_UP[b]) < Rat(0)) return false;
  return true;
}

// (ii): only the pairs involving alpha_i.
inline bool condition_ii(const ParabolicVertex& v) {
  const QVec& ai = v.sys->simple[v.i];
  for (const QVec& b : v.sigma_UP)
    if (dot(ai, b) < Rat(0)) return false;
  return true;
}

// (iii): W_{0,M_i} acts transitively on each length class of Sigma_{U_P}.
inline bool condition_iii(const ParabolicVertex& v) {
  std::map<Rat, std::vector<QVec>> by_len;
  for (const QVec& b : v.sigma_UP) by_len[dot(b, b)].push_back(b);
  for (auto& [len, cls] : by_len) {
    auto orbit = levi_orbit(*v.sys, v.i, cls.front());
    std::set<QVec, QVecLess> orb(orbit.begin(), orbit.end());
    for (const QVec& b : cls)
      if (!orb.count(b)) return false;
  }
  return true;
}

// (iv): c_i(alpha_0^i) = 1 for the highest root of the same length as alpha_i.
inline bool condition_iv(const ParabolicVertex& v) {
  QVec a0 = highest_root_of_length(*v.sys, v.sys->simple[v.i]);
  return v.sys->coefficient_c(v.i, a0) == 1;
}

struct VertexReport {
  int i;  // 0-based vertex
  bool cond_i, cond_ii, cond_iii, cond_iv;
  bool non_obtuse;
};

struct ClassificationReport {
  CartanType type;
  std::vector<VertexReport> vertices;

  std::vector<int> non_obtuse_vertices() const {
    std::vector<int> out;
    for (const auto& v : vertices)
      if (v.non_obtuse) out.push_back(v.i);
    return out;
  }
};

inline ClassificationReport classify(const RootSystem& sys) {
  if (!is_irreducible(sys)) throw std::invalid_argument("classify: reducible root system");
  ClassificationReport rep;
  rep.type = sys.type;
  for (int i = 0; i < sys.rank(); ++i) {
    ParabolicVertex v = parabolic_vertex(sys, i);
    VertexReport r;
    r.i = i;
    r.cond_i = condition_i(v);
    r.cond_ii = condition_ii(v);
    r.cond_iii = condition_iii(v);
    r.cond_iv = condition_iv(v);
    if (r.cond_i != r.cond_ii || r.cond_i != r.cond_iii || r.cond_i != r.cond_iv)
      throw std::logic_error("classify: conditions (i)-(iv) disagree at vertex " +
                             std::to_string(i + 1));
    r.non_obtuse = r.cond_i;
    rep.vertices.push_back(r);
  }
  return rep;
}

// The expected classification table, 1-based vertex indices.
inline std::set<int> expected_non_obtuse(CartanType t) {
  std::set<int> s;
  switch (t.family) {
    case Family::A:
      for (int i = 1; i <= t.rank; ++i) s.insert(i);
      break;
    case Family::B:
    case Family::C:
      s = {1, t.rank};
      break;
    case Family::D:
      s = {1, t.rank - 1, t.rank};
      break;
    case Family::E:
      if (t.rank == 6) s = {1, 6};
      else if (t.rank == 7) s = {7};
      break;
    case Family::F:
    case Family::G:
      break;
  }
  return s;
}

enum class NoConeResult {
  precond_lambda_violated,
  precond_mu_violated,
  holds,
  fails,
};

// Geometric no-cone check: with lambda strictly M-positive and every
// W_0-translate of nu(mu) dominated by nu(-lambda), test whether
// <alpha, nu(lambda+mu)> <= 0 on Sigma^+ minus Sigma_M. Inputs are Lambda
// coordinates with nu(lambda) = -lambda. W_0 ranges over the full Weyl group
// of the ambient system; dominance is over simple coroots with rational
// nonnegative coefficients.
inline NoConeResult no_cone_check(const ParabolicVertex& v, const QVec& lambda, const QVec& mu) {
  const RootSystem& sys = *v.sys;
  QVec nu_lambda = -lambda;
  QVec nu_mu = -mu;

  // dominance test: w <= d iff d - w is a nonnegative combination of simple coroots
  QMat coroot_cols(sys.ambient_dim, QVec(sys.rank()));
  for (int j = 0; j < sys.rank(); ++j) {
    QVec cr = coroot_of(sys, sys.simple[j]);
    for (int a = 0; a < sys.ambient_dim; ++a) coroot_cols[a][j] = cr[a];
  }
  auto dominated = [&](const QVec& w, const QVec& d) {
    QVec c;
    if (!solve_linear(coroot_cols, d - w, c)) return false;
    for (const Rat& x : c)
      if (x < Rat(0)) return false;
    return true;
  };

  for (const QVec& a : v.sigma_M)
    if (pairing(a, nu_lambda) != Rat(0)) return NoConeResult::precond_lambda_violated;
  for (const QVec& a : v.sigma_UP)
    if (!(pairing(a, nu_lambda) < Rat(0))) return NoConeResult::precond_lambda_violated;

  // nu(w(mu)) <= nu(-lambda) for all w. The orbit maximum in dominance order is
  // the dominant representative, so one comparison suffices.
  QVec rep = nu_mu;
  for (bool moved = true; moved;) {
    moved = false;
    for (int j = 0; j < sys.rank(); ++j)
      if (pairing(sys.simple[j], rep) < Rat(0)) {
        rep = reflect(sys.simple[j], rep);
        moved = true;
        break;
      }
  }
  if (!dominated(rep, -nu_lambda)) return NoConeResult::precond_mu_violated;

  QVec s = nu_lambda + nu_mu;
  for (const QVec& a : v.sigma_UP)
    if (pairing(a, s) > Rat(0)) return NoConeResult::fails;
  return NoConeResult::holds;
}

// Minimal integral strictly M-positive lambda for a vertex: a positive multiple
// of the fundamental coweight direction, scaled into the coroot lattice.
// (Lambda coordinates: nu(lambda) = -lambda.)
inline QVec strictly_M_positive_lambda(const ParabolicVertex& v) {
  const RootSystem& sys = *v.sys;
  int n = sys.rank();
  QMat cartan(n, QVec(n));
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) cartan[k][j] = pairing(sys.simple[k], coroot_of(sys, sys.simple[j]));
  QVec rhs(n);
  rhs[v.i] = Rat(1);
  QVec t;
  if (!solve_linear(cartan, rhs, t)) throw std::logic_error("coweight solve failed");
  std::int64_t scale = 1;
  for (const Rat& x : t) scale = std::lcm(scale, x.den);
  QVec lambda(sys.ambient_dim);
  for (int j = 0; j < n; ++j) lambda = lambda + (Rat(scale) * t[j]) * coroot_of(sys, sys.simple[j]);
  // rescale to integer ambient coordinates so integer mu grids see the polytope
  std::int64_t coord_scale = 1;
  for (const Rat& x : lambda) coord_scale = std::lcm(coord_scale, x.den);
  return Rat(coord_scale) * lambda;
}

// Integer-grid points mu in span(Sigma^vee) with sup norm at most `cap` and
// dom(nu(mu)) <= nu(-lambda): the legal mu range of the no-cone lemma,
// intersected with the capped ambient integer grid.
inline std::vector<QVec> no_cone_mu_grid(const ParabolicVertex& v, const QVec& lambda,
                                         long cap = 3) {
  const RootSystem& sys = *v.sys;
  int n = sys.rank();
  int dim = sys.ambient_dim;
  QVec d = lambda;  // nu(-lambda) = lambda, dominant by construction
  Rat d_norm = dot(d, d);

  QMat coroot_cols(dim, QVec(n));
  for (int j = 0; j < n; ++j) {
    QVec cr = coroot_of(sys, sys.simple[j]);
    for (int a = 0; a < dim; ++a) coroot_cols[a][j] = cr[a];
  }
  // orthogonal complement of the root span, for a cheap membership test
  QMat root_rows(n, QVec(dim));
  for (int j = 0; j < n; ++j) root_rows[j] = sys.simple[j];
  std::vector<QVec> complement;
  {
    // nullspace of root_rows by elimination over the standard basis
    QMat m = root_rows;
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (int c = 0; c < dim && r < m.size(); ++c) {
      std::size_t sel = r;
      while (sel < m.size() && m[sel][c].is_zero()) ++sel;
      if (sel == m.size()) continue;
      std::swap(m[sel], m[r]);
      Rat inv = Rat(1) / m[r][c];
      for (int j2 = 0; j2 < dim; ++j2) m[r][j2] *= inv;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (i == r || m[i][c].is_zero()) continue;
        Rat f = m[i][c];
        for (int j2 = 0; j2 < dim; ++j2) m[i][j2] -= f * m[r][j2];
      }
      pivot_col.push_back(c);
      ++r;
    }
    std::set<int> pivots(pivot_col.begin(), pivot_col.end());
    for (int c = 0; c < dim; ++c) {
      if (pivots.count(c)) continue;
      QVec w(dim);
      w[c] = Rat(1);
      for (std::size_t i = 0; i < r; ++i) w[pivot_col[i]] = -m[i][c];
      complement.push_back(w);
    }
  }

  auto dominant_rep = [&](QVec x) {
    for (bool moved = true; moved;) {
      moved = false;
      for (int j = 0; j < n; ++j)
        if (pairing(sys.simple[j], x) < Rat(0)) {
          x = reflect(sys.simple[j], x);
          moved = true;
          break;
        }
    }
    return x;
  };
  auto dominated = [&](const QVec& w, const QVec& dd) {
    QVec c;
    if (!solve_linear(coroot_cols, dd - w, c)) return false;
    for (const Rat& x : c)
      if (x < Rat(0)) return false;
    return true;
  };

  std::vector<QVec> out;
  std::vector<long> x(dim, -cap);
  while (true) {
    long norm = 0;
    for (long xi : x) norm += xi * xi;
    if (Rat(norm) <= d_norm) {  // the polytope sits inside the norm ball of d
      QVec q(dim);
      for (int i = 0; i < dim; ++i) q[i] = Rat(x[i]);
      bool in_span = true;
      for (const QVec& w : complement)
        if (dot(q, w) != Rat(0)) { in_span = false; break; }
      if (in_span && dominated(dominant_rep(q), d)) out.push_back(-q);  // mu with nu(mu) = q
    }
    int i = 0;
    while (i < dim && ++x[i] > cap) x[i++] = -cap;
    if (i == dim) break;
  }
  return out;
}

// Witness pairs with negative inner product from the per-type case analysis;
// empty when the vertex is non-obtuse. 0-based vertex index.
inline std::optional<std::pair<QVec, QVec>> recorded_obtuse_witness(const RootSystem& sys, int i) {
  auto comb = [&](std::initializer_list<std::int64_t> cs) {
    QVec v(sys.ambient_dim);
    int j = 0;
    for (auto c : cs) v = v + Rat(c) * sys.simple[j++];
    return v;
  };
  int n = sys.rank();
  int r = i + 1;  // 1-based
  switch (sys.type.family) {
    case Family::A: return std::nullopt;
    case Family::B:
    case Family::C:
      if (r == 1 || r == n) return std::nullopt;
      break;
    case Family::D:
      if (r == 1 || r == n - 1 || r == n) return std::nullopt;
      break;
    case Family::E:
      if (n == 6) {
        if (r == 1 || r == 6) return std::nullopt;
        return std::make_pair(comb({1, 1, 1, 1, 1, 0}), comb({0, 1, 1, 2, 1, 1}));
      }
      if (n == 7) {
        if (r == 7) return std::nullopt;
        return std::make_pair(comb({1, 1, 1, 1, 1, 1, 0}), comb({1, 1, 2, 3, 2, 1, 1}));
      }
      return std::make_pair(comb({1, 1, 1, 1, 1, 1, 1, 1}), comb({1, 2, 3, 5, 4, 3, 2, 1}));
    case Family::F:
      switch (r) {
        case 1: return std::make_pair(comb({1, 0, 0, 0}), comb({1, 3, 4, 2}));
        case 2: return std::make_pair(comb({0, 1, 0, 0}), comb({1, 1, 2, 2}));
        case 3: return std::make_pair(comb({0, 0, 1, 0}), comb({1, 2, 2, 2}));
        case 4: return std::make_pair(comb({0, 0, 0, 1}), comb({1, 2, 3, 1}));
      }
      break;
    case Family::G:
      if (r == 1) return std::make_pair(comb({1, 0}), comb({1, 1}));
      return std::make_pair(comb({0, 1}), comb({3, 1}));
  }
  // B/C/D middle vertices: (e_r - e_{r+1}, e_{r-1} + e_{r+1}), 1-based r.
  QVec a(sys.ambient_dim), b(sys.ambient_dim);
  a[r - 1] = Rat(1);
  a[r] = Rat(-1);
  b[r - 2] = Rat(1);
  b[r] = Rat(1);
  return std::make_pair(a, b);
}

}  // namespace hwb
