#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace hwb {

enum class Family { A, B, C, D, E, F, G };

inline char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    case Family::E: return 'E';
    case Family::F: return 'F';
    case Family::G: return 'G';
  }
  return '?';
}

struct CartanType {
  Family family;
  int rank;

  bool valid() const {
    switch (family) {
      case Family::A: return rank >= 1;
      case Family::B: return rank >= 2;
      case Family::C: return rank >= 3;
      case Family::D: return rank >= 4;
      case Family::E: return rank == 6 || rank == 7 || rank == 8;
      case Family::F: return rank == 4;
      case Family::G: return rank == 2;
    }
    return false;
  }

  std::string str() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

  // Parses e.g. "B4", "E6".
  static CartanType parse(const std::string& s) {
    if (s.size() < 2) throw std::invalid_argument("CartanType: bad string '" + s + "'");
    Family f;
    switch (s[0]) {
      case 'A': case 'a': f = Family::A; break;
      case 'B': case 'b': f = Family::B; break;
      case 'C': case 'c': f = Family::C; break;
      case 'D': case 'd': f = Family::D; break;
      case 'E': case 'e': f = Family::E; break;
      case 'F': case 'f': f = Family::F; break;
      case 'G': case 'g': f = Family::G; break;
      default: throw std::invalid_argument("CartanType: bad family in '" + s + "'");
    }
    int r = std::stoi(s.substr(1));
    CartanType t{f, r};
    if (!t.valid()) throw std::invalid_argument("CartanType: rank out of range in '" + s + "'");
    return t;
  }
};

struct QVecLess {
  bool operator()(const QVec& a, const QVec& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

// Reduced root system in the Bourbaki planche coordinates, exact rationals.
struct RootSystem {
  CartanType type;
  int ambient_dim = 0;
  std::vector<QVec> roots;        // all roots, canonical order
  std::vector<QVec> simple;       // simple roots (0-based indexing of alpha_1..alpha_n)
  std::vector<std::vector<std::int64_t>> coeffs;  // expansion of roots[k] over simple
  std::vector<int> neg_index;     // index of -roots[k]
  std::map<QVec, int, QVecLess> index_of;

  int rank() const { return static_cast<int>(simple.size()); }
  int num_positive() const { return static_cast<int>(roots.size()) / 2; }

  bool is_root(const QVec& v) const { return index_of.count(v) != 0; }
  int root_index(const QVec& v) const {
    auto it = index_of.find(v);
    if (it == index_of.end()) throw std::invalid_argument("not a root");
    return it->second;
  }
  bool is_positive(const QVec& v) const {
    const auto& c = coeffs[root_index(v)];
    for (auto x : c) if (x > 0) return true;
    return false;
  }

  std::vector<QVec> positive_roots() const {
    std::vector<QVec> p;
    for (std::size_t k = 0; k < roots.size(); ++k)
      if (is_positive(roots[k])) p.push_back(roots[k]);
    return p;
  }

  std::int64_t coefficient_c(int i, const QVec& beta) const {
    return coeffs[root_index(beta)][i];
  }

  std::int64_t root_height(const QVec& beta) const {
    std::int64_t h = 0;
    for (auto x : coeffs[root_index(beta)]) h += x;
    return h;
  }
};

inline Rat pairing(const QVec& alpha, const QVec& v) { return dot(alpha, v); }

inline QVec coroot_of(const RootSystem& sys, const QVec& beta) {
  if (!sys.is_root(beta)) throw std::invalid_argument("coroot: not a root");
  Rat nn = dot(beta, beta);
  return (Rat(2) / nn) * beta;
}

// Orthogonal reflection s_beta; valid on both V and V* in these coordinates.
inline QVec reflect(const QVec& beta, const QVec& v) {
  Rat c = (Rat(2) * dot(v, beta)) / dot(beta, beta);
  return v - c * beta;
}

inline QMat reflection_matrix(std::size_t dim, const QVec& beta) {
  QMat m(dim, QVec(dim));
  for (std::size_t j = 0; j < dim; ++j) {
    QVec e(dim);
    e[j] = Rat(1);
    QVec col = reflect(beta, e);
    for (std::size_t i = 0; i < dim; ++i) m[i][j] = col[i];
  }
  return m;
}

struct WeylElement {
  QMat matrix;
  std::optional<std::vector<int>> word;  // simple reflection indices, 0-based

  QVec apply(const QVec& v) const { return mat_apply(matrix, v); }
  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.matrix == b.matrix; }
  friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }
};

namespace detail {

inline void add_pm(std::vector<QVec>& roots, const QVec& v) {
  roots.push_back(v);
  roots.push_back(-v);
}

inline QVec units(int dim, std::initializer_list<std::pair<int, Rat>> entries) {
  QVec v(dim);
  for (auto& [i, c] : entries) v[i] = c;
  return v;
}

}  // namespace detail

inline RootSystem build_root_system(CartanType t) {
  if (!t.valid()) throw std::invalid_argument("build_root_system: invalid type " +
                                              std::string(1, family_letter(t.family)) +
                                              std::to_string(t.rank));
  RootSystem sys;
  sys.type = t;
  int n = t.rank;
  std::vector<QVec> roots;
  const Rat one(1), half(1, 2);

  auto e = [&](int dim, int i) { QVec v(dim); v[i] = one; return v; };

  switch (t.family) {
    case Family::A: {
      int dim = n + 1;
      sys.ambient_dim = dim;
      for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) detail::add_pm(roots, e(dim, i) - e(dim, j));
      for (int i = 0; i < n; ++i) sys.simple.push_back(e(dim, i) - e(dim, i + 1));
      break;
    }
    case Family::B: {
      sys.ambient_dim = n;
      for (int i = 0; i < n; ++i) detail::add_pm(roots, e(n, i));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          detail::add_pm(roots, e(n, i) - e(n, j));
          detail::add_pm(roots, e(n, i) + e(n, j));
        }
      for (int i = 0; i + 1 < n; ++i) sys.simple.push_back(e(n, i) - e(n, i + 1));
      sys.simple.push_back(e(n, n - 1));
      break;
    }
    case Family::C: {
      sys.ambient_dim = n;
      for (int i = 0; i < n; ++i) detail::add_pm(roots, Rat(2) * e(n, i));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          detail::add_pm(roots, e(n, i) - e(n, j));
          detail::add_pm(roots, e(n, i) + e(n, j));
        }
      for (int i = 0; i + 1 < n; ++i) sys.simple.push_back(e(n, i) - e(n, i + 1));
      sys.simple.push_back(Rat(2) * e(n, n - 1));
      break;
    }
    case Family::D: {
      sys.ambient_dim = n;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          detail::add_pm(roots, e(n, i) - e(n, j));
          detail::add_pm(roots, e(n, i) + e(n, j));
        }
      for (int i = 0; i + 1 < n; ++i) sys.simple.push_back(e(n, i) - e(n, i + 1));
      sys.simple.push_back(e(n, n - 2) + e(n, n - 1));
      break;
    }
    case Family::E: {
      sys.ambient_dim = 8;
      int m = (n == 6) ? 5 : (n == 7 ? 6 : 8);  // index range for the +-e_i +- e_j part
      if (n == 8) {
        for (int i = 0; i < 8; ++i)
          for (int j = i + 1; j < 8; ++j) {
            detail::add_pm(roots, e(8, i) - e(8, j));
            detail::add_pm(roots, e(8, i) + e(8, j));
          }
        for (int mask = 0; mask < 128; ++mask) {
          if (__builtin_popcount(mask) % 2 != 0) continue;
          QVec v(8);
          v[7] = half;
          for (int i = 0; i < 7; ++i) v[i] = (mask >> i) & 1 ? -half : half;
          detail::add_pm(roots, v);
        }
      } else {
        for (int i = 0; i < m; ++i)
          for (int j = i + 1; j < m; ++j) {
            detail::add_pm(roots, e(8, i) - e(8, j));
            detail::add_pm(roots, e(8, i) + e(8, j));
          }
        if (n == 7) detail::add_pm(roots, e(8, 7) - e(8, 6));
        int count = (n == 6) ? 5 : 6;
        int parity = (n == 6) ? 0 : 1;
        for (int mask = 0; mask < (1 << count); ++mask) {
          if (__builtin_popcount(mask) % 2 != parity) continue;
          QVec v(8);
          v[7] = half;
          v[6] = -half;
          if (n == 6) v[5] = -half;
          for (int i = 0; i < count; ++i) v[i] = (mask >> i) & 1 ? -half : half;
          detail::add_pm(roots, v);
        }
      }
      QVec a1(8);
      a1[0] = half;
      a1[7] = half;
      for (int i = 1; i <= 6; ++i) a1[i] = -half;
      sys.simple.push_back(a1);
      sys.simple.push_back(e(8, 0) + e(8, 1));
      for (int i = 3; i <= n; ++i) sys.simple.push_back(e(8, i - 2) - e(8, i - 3));
      break;
    }
    case Family::F: {
      sys.ambient_dim = 4;
      for (int i = 0; i < 4; ++i) detail::add_pm(roots, e(4, i));
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
          detail::add_pm(roots, e(4, i) - e(4, j));
          detail::add_pm(roots, e(4, i) + e(4, j));
        }
      for (int mask = 0; mask < 8; ++mask) {
        QVec v(4);
        v[0] = half;
        for (int i = 0; i < 3; ++i) v[i + 1] = (mask >> i) & 1 ? -half : half;
        detail::add_pm(roots, v);
      }
      sys.simple.push_back(e(4, 1) - e(4, 2));
      sys.simple.push_back(e(4, 2) - e(4, 3));
      sys.simple.push_back(e(4, 3));
      sys.simple.push_back(detail::units(4, {{0, half}, {1, -half}, {2, -half}, {3, -half}}));
      break;
    }
    case Family::G: {
      sys.ambient_dim = 3;
      detail::add_pm(roots, e(3, 0) - e(3, 1));
      detail::add_pm(roots, e(3, 1) - e(3, 2));
      detail::add_pm(roots, e(3, 0) - e(3, 2));
      detail::add_pm(roots, Rat(2) * e(3, 0) - e(3, 1) - e(3, 2));
      detail::add_pm(roots, Rat(2) * e(3, 1) - e(3, 0) - e(3, 2));
      detail::add_pm(roots, Rat(2) * e(3, 2) - e(3, 0) - e(3, 1));
      sys.simple.push_back(e(3, 0) - e(3, 1));
      sys.simple.push_back(Rat(-2) * e(3, 0) + e(3, 1) + e(3, 2));
      break;
    }
  }

  std::sort(roots.begin(), roots.end(), QVecLess{});
  sys.roots = std::move(roots);
  for (std::size_t k = 0; k < sys.roots.size(); ++k) sys.index_of[sys.roots[k]] = static_cast<int>(k);

  // Expand every root over the simple basis; coefficients must be integers of one sign.
  QMat basis_cols(sys.ambient_dim, QVec(sys.rank()));
  for (int j = 0; j < sys.rank(); ++j)
    for (int i = 0; i < sys.ambient_dim; ++i) basis_cols[i][j] = sys.simple[j][i];
  sys.coeffs.resize(sys.roots.size());
  sys.neg_index.resize(sys.roots.size());
  for (std::size_t k = 0; k < sys.roots.size(); ++k) {
    QVec c;
    if (!solve_linear(basis_cols, sys.roots[k], c))
      throw std::logic_error("root outside simple-root span");
    std::vector<std::int64_t> ic(c.size());
    bool pos = false, neg = false;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!c[i].is_integer()) throw std::logic_error("non-integral root coefficient");
      ic[i] = c[i].num;
      if (ic[i] > 0) pos = true;
      if (ic[i] < 0) neg = true;
    }
    if (pos && neg) throw std::logic_error("mixed-sign root coefficients");
    sys.coeffs[k] = std::move(ic);
    sys.neg_index[k] = sys.root_index(-sys.roots[k]);
  }
  return sys;
}

inline WeylElement simple_reflection(const RootSystem& sys, int i) {
  WeylElement w;
  w.matrix = reflection_matrix(sys.ambient_dim, sys.simple[i]);
  w.word = std::vector<int>{i};
  return w;
}

inline WeylElement weyl_identity(const RootSystem& sys) {
  WeylElement w;
  w.matrix = identity_mat(sys.ambient_dim);
  w.word = std::vector<int>{};
  return w;
}

inline WeylElement weyl_from_word(const RootSystem& sys, const std::vector<int>& word) {
  QMat m = identity_mat(sys.ambient_dim);
  for (int i : word) m = mat_mul(m, reflection_matrix(sys.ambient_dim, sys.simple[i]));
  WeylElement w;
  w.matrix = std::move(m);
  w.word = word;
  return w;
}

// Reduced word by inversion-set descent. `allowed` restricts the generators
// (used for Levi subgroups); empty means all simple reflections.
inline std::vector<int> reduced_word_of(const RootSystem& sys, QMat m,
                                        const std::vector<int>& allowed = {}) {
  std::vector<int> gens;
  if (allowed.empty()) {
    for (int i = 0; i < sys.rank(); ++i) gens.push_back(i);
  } else {
    gens = allowed;
  }
  std::vector<int> acc;
  const QMat id = identity_mat(sys.ambient_dim);
  int guard = 4 * sys.num_positive() + 4;
  while (m != id) {
    if (--guard < 0) throw std::logic_error("reduced_word_of: no descent found");
    bool found = false;
    for (int i : gens) {
      QVec img = mat_apply(m, sys.simple[i]);
      if (sys.is_root(img) && !sys.is_positive(img)) {
        m = mat_mul(m, reflection_matrix(sys.ambient_dim, sys.simple[i]));
        acc.push_back(i);
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("reduced_word_of: element not in the generated subgroup");
  }
  std::reverse(acc.begin(), acc.end());
  return acc;
}

// Longest element w_0, with a reduced word of length |Sigma^+|.
inline WeylElement longest_word(const RootSystem& sys) {
  QVec x(sys.ambient_dim);
  for (const QVec& b : sys.positive_roots()) x = x + b;  // 2*rho, regular dominant
  std::vector<int> acc;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < sys.rank(); ++i) {
      if (dot(x, sys.simple[i]) > Rat(0)) {
        x = reflect(sys.simple[i], x);
        acc.push_back(i);
        moved = true;
        break;
      }
    }
  }
  std::reverse(acc.begin(), acc.end());
  WeylElement w = weyl_from_word(sys, acc);
  if (static_cast<int>(acc.size()) != sys.num_positive())
    throw std::logic_error("longest_word: descent did not produce |Sigma^+| letters");
  return w;
}

inline std::vector<QVec> betas_of_word(const RootSystem& sys, const std::vector<int>& word) {
  std::vector<QVec> betas;
  QMat pre = identity_mat(sys.ambient_dim);
  for (std::size_t j = 0; j < word.size(); ++j) {
    betas.push_back(mat_apply(pre, sys.simple[word[j]]));
    pre = mat_mul(pre, reflection_matrix(sys.ambient_dim, sys.simple[word[j]]));
  }
  return betas;
}

// A word is reduced iff its beta_j are pairwise distinct (Bourbaki IV.1.4 Lemma 2
// style test; all beta_j are roots by construction).
inline bool is_reduced_word(const RootSystem& sys, const std::vector<int>& word) {
  auto betas = betas_of_word(sys, word);
  std::set<QVec, QVecLess> seen;
  for (const QVec& b : betas)
    if (!seen.insert(b).second) return false;
  return true;
}

// The 2r-periodic root sequence attached to a reduced word for w_0.
struct BetaSequence {
  const RootSystem* sys = nullptr;
  std::vector<int> word;          // reduced word for w_0, 0-based letters
  int r = 0;
  std::vector<QVec> base_betas;   // beta_1..beta_r at offsets 0..r-1
  std::vector<QMat> prefix;       // prefix[j] = s_{i_1}...s_{i_j}, j = 0..r

  // beta_k for k >= 1, following the parity rule.
  QVec beta(long k) const {
    long j = ((k - 1) % r) + 1;           // j(k) in 1..r
    long m = ((k - j) / r) % 2;           // 0 iff k == j mod 2r
    QVec b = base_betas[j - 1];
    return m == 0 ? b : -b;
  }

  // Sigma^{(k)} = {beta_{k+1},...,beta_{k+r}} as an ordered window.
  std::vector<QVec> window(long k) const {
    std::vector<QVec> w;
    for (long t = 1; t <= r; ++t) w.push_back(beta(k + t));
    return w;
  }

  // Delta^{(k)} = eps_k * s_{i_1}...s_{i_{j(k)}}(Delta), Delta^{(0)} = Delta.
  std::vector<QVec> delta(long k) const {
    if (k == 0) return sys->simple;
    long j = ((k - 1) % r) + 1;
    long m = ((k - j) / r) % 2;
    std::vector<QVec> d;
    for (const QVec& a : sys->simple) {
      QVec v = mat_apply(prefix[j], a);
      d.push_back(m == 0 ? v : -v);
    }
    return d;
  }
};

inline BetaSequence beta_sequence(const RootSystem& sys, const std::vector<int>& word) {
  if (static_cast<int>(word.size()) != sys.num_positive() || !is_reduced_word(sys, word))
    throw std::invalid_argument("beta_sequence: word is not a reduced word for w_0");
  BetaSequence seq;
  seq.sys = &sys;
  seq.word = word;
  seq.r = static_cast<int>(word.size());
  seq.prefix.push_back(identity_mat(sys.ambient_dim));
  for (std::size_t j = 0; j < word.size(); ++j) {
    seq.base_betas.push_back(mat_apply(seq.prefix.back(), sys.simple[word[j]]));
    seq.prefix.push_back(mat_mul(seq.prefix.back(), reflection_matrix(sys.ambient_dim, sys.simple[word[j]])));
  }
  // w_0 check: the full prefix must send Sigma^+ to Sigma^-.
  WeylElement w0 = longest_word(sys);
  if (seq.prefix.back() != w0.matrix)
    throw std::invalid_argument("beta_sequence: word does not multiply to w_0");
  return seq;
}

// {beta_{j+1},...,beta_r, -beta_1,...,-beta_j} (Lemma-style prefix positive system).
inline std::vector<QVec> positive_system_after_prefix(const BetaSequence& seq, int j) {
  if (j < 0 || j > seq.r) throw std::invalid_argument("positive_system_after_prefix: j out of range");
  std::vector<QVec> out;
  for (int t = j; t < seq.r; ++t) out.push_back(seq.base_betas[t]);
  for (int t = 0; t < j; ++t) out.push_back(-seq.base_betas[t]);
  return out;
}

// Roots of the Levi at vertex i (c_i = 0) and of the unipotent radical (positive, c_i > 0).
inline std::vector<QVec> levi_roots(const RootSystem& sys, int i) {
  std::vector<QVec> out;
  for (const QVec& b : sys.roots)
    if (sys.coefficient_c(i, b) == 0) out.push_back(b);
  return out;
}

inline std::vector<QVec> unipotent_radical_roots(const RootSystem& sys, int i) {
  std::vector<QVec> out;
  for (const QVec& b : sys.roots)
    if (sys.coefficient_c(i, b) > 0) out.push_back(b);
  return out;
}

inline bool vertex_pairs_non_obtuse(const RootSystem& sys, int i) {
  auto up = unipotent_radical_roots(sys, i);
  for (std::size_t a = 0; a < up.size(); ++a)
    for (std::size_t b = a; b < up.size(); ++b)
      if (dot(up[a], up[b]) < Rat(0)) return false;
  return true;
}

// W_{0,M_i}-orbit of a root under the simple reflections of Delta minus alpha_i.
inline std::vector<QVec> levi_orbit(const RootSystem& sys, int i, const QVec& start) {
  std::set<QVec, QVecLess> seen;
  std::vector<QVec> order;
  std::queue<QVec> q;
  seen.insert(start);
  order.push_back(start);
  q.push(start);
  while (!q.empty()) {
    QVec v = q.front();
    q.pop();
    for (int j = 0; j < sys.rank(); ++j) {
      if (j == i) continue;
      QVec img = reflect(sys.simple[j], v);
      if (seen.insert(img).second) {
        order.push_back(img);
        q.push(img);
      }
    }
  }
  return order;
}

// Longest element of W_{0,M_i}.
inline WeylElement longest_levi_word(const RootSystem& sys, int i) {
  QVec x(sys.ambient_dim);
  for (const QVec& b : sys.roots)
    if (sys.is_positive(b) && sys.coefficient_c(i, b) == 0) x = x + b;
  std::vector<int> acc;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int j = 0; j < sys.rank(); ++j) {
      if (j == i) continue;
      if (dot(x, sys.simple[j]) > Rat(0)) {
        x = reflect(sys.simple[j], x);
        acc.push_back(j);
        moved = true;
        break;
      }
    }
  }
  std::reverse(acc.begin(), acc.end());
  return weyl_from_word(sys, acc);
}

struct ExposedWord {
  std::vector<int> word;  // reduced word for w_0
  int l = 0;              // beta_1..beta_l lie in Sigma_M, beta_{l+1} = alpha
};

// Reduced w_0-word whose beta-sequence exposes alpha right after a Levi prefix.
// Follows the orbit-transitivity construction: w in W_{0,M} with w(alpha_i) = alpha,
// then w_{0,M} w_0, then a completion to w_0.
inline ExposedWord word_exposing_root(const RootSystem& sys, int i, const QVec& alpha) {
  if (!vertex_pairs_non_obtuse(sys, i))
    throw std::invalid_argument("word_exposing_root: vertex is obtuse");
  if (!sys.is_root(alpha) || sys.coefficient_c(i, alpha) <= 0 ||
      dot(alpha, alpha) != dot(sys.simple[i], sys.simple[i]))
    throw std::invalid_argument("word_exposing_root: alpha not admissible");

  // BFS for some w in W_{0,M_i} with w(alpha_i) = alpha.
  std::map<QVec, std::pair<QVec, int>, QVecLess> parent;  // node -> (previous, generator)
  std::queue<QVec> q;
  parent[sys.simple[i]] = {sys.simple[i], -1};
  q.push(sys.simple[i]);
  while (!q.empty() && !parent.count(alpha)) {
    QVec v = q.front();
    q.pop();
    for (int j = 0; j < sys.rank(); ++j) {
      if (j == i) continue;
      QVec img = reflect(sys.simple[j], v);
      if (!parent.count(img)) {
        parent[img] = {v, j};
        q.push(img);
      }
    }
  }
  if (!parent.count(alpha))
    throw std::invalid_argument("word_exposing_root: alpha not in the W_{0,M} orbit of alpha_i");
  std::vector<int> chain;
  for (QVec v = alpha; parent[v].second >= 0; v = parent[v].first) chain.push_back(parent[v].second);
  // chain applied right-to-left sends alpha_i to alpha; as a word w = chain in order.
  WeylElement w = weyl_from_word(sys, chain);

  std::vector<int> levi_gens;
  for (int j = 0; j < sys.rank(); ++j)
    if (j != i) levi_gens.push_back(j);
  std::vector<int> word_w = reduced_word_of(sys, w.matrix, levi_gens);

  WeylElement w0 = longest_word(sys);
  WeylElement w0M = longest_levi_word(sys, i);
  QMat v_mat = mat_mul(w0M.matrix, w0.matrix);
  std::vector<int> word_v = reduced_word_of(sys, v_mat);

  QMat head = mat_mul(w.matrix, v_mat);
  QMat tail_mat = mat_mul(mat_transpose(head), w0.matrix);  // head^{-1} w_0; head orthogonal
  std::vector<int> word_tail = reduced_word_of(sys, tail_mat);

  ExposedWord out;
  out.word = word_w;
  out.word.insert(out.word.end(), word_v.begin(), word_v.end());
  out.word.insert(out.word.end(), word_tail.begin(), word_tail.end());
  out.l = static_cast<int>(word_w.size());

  // Re-validate the postcondition by direct beta-sequence computation.
  if (!is_reduced_word(sys, out.word) ||
      static_cast<int>(out.word.size()) != sys.num_positive())
    throw std::logic_error("word_exposing_root: assembled word not reduced");
  auto betas = betas_of_word(sys, out.word);
  for (int j = 0; j < out.l; ++j)
    if (sys.coefficient_c(i, betas[j]) != 0)
      throw std::logic_error("word_exposing_root: prefix leaves Sigma_M");
  if (betas[out.l] != alpha) throw std::logic_error("word_exposing_root: beta_{l+1} != alpha");
  return out;
}

// Highest root among those of the same squared length as `norm_of`; unique for
// irreducible systems (highest root or highest short root).
inline QVec highest_root_of_length(const RootSystem& sys, const QVec& norm_of) {
  Rat nn = dot(norm_of, norm_of);
  bool found = false;
  QVec best;
  std::int64_t best_h = 0;
  for (const QVec& b : sys.roots) {
    if (dot(b, b) != nn || !sys.is_positive(b)) continue;
    std::int64_t h = sys.root_height(b);
    if (!found || h > best_h) {
      best = b;
      best_h = h;
      found = true;
    }
  }
  if (!found) throw std::logic_error("no root of requested length");
  return best;
}

inline bool is_irreducible(const RootSystem& sys) {
  int n = sys.rank();
  std::vector<int> comp(n, -1);
  std::queue<int> q;
  comp[0] = 0;
  q.push(0);
  while (!q.empty()) {
    int i = q.front();
    q.pop();
    for (int j = 0; j < n; ++j)
      if (comp[j] < 0 && dot(sys.simple[i], sys.simple[j]) != Rat(0)) {
        comp[j] = 0;
        q.push(j);
      }
  }
  for (int j = 0; j < n; ++j)
    if (comp[j] < 0) return false;
  return true;
}

}  // namespace hwb
