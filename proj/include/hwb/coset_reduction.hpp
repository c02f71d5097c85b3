#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gln_model.hpp"
#include "root_system.hpp"

namespace hwb {

// Roots of GL_n are e_i - e_j, realized as ambient vectors of the A_{n-1} system.
inline std::pair<int, int> root_pair(const QVec& beta) {
  int i = -1, j = -1;
  for (std::size_t t = 0; t < beta.size(); ++t) {
    if (beta[t] == Rat(1)) i = static_cast<int>(t);
    else if (beta[t] == Rat(-1)) j = static_cast<int>(t);
    else if (!beta[t].is_zero()) throw std::invalid_argument("root_pair: not a type-A root");
  }
  if (i < 0 || j < 0) throw std::invalid_argument("root_pair: not a type-A root");
  return {i, j};
}

// Ordered factorization of a unipotent matrix along a convex root ordering.
// `ordering` lists the factors of the product left to right; peeling starts at
// the rightmost (convex-minimal) root, whose parameter is the plain matrix entry.
inline std::vector<RootGroupElement> factor_unipotent(const GMatrix& u,
                                                      const std::vector<QVec>& ordering) {
  std::vector<std::pair<int, int>> pairs;
  for (const QVec& b : ordering) pairs.push_back(root_pair(b));
  for (int i = 0; i < u.n; ++i)
    for (int j = 0; j < u.n; ++j) {
      if (i == j) {
        if (u.at(i, j) != LocalScalar::one(u.p))
          throw std::invalid_argument("factor_unipotent: not unipotent");
        continue;
      }
      if (u.at(i, j).is_zero()) continue;
      if (std::find(pairs.begin(), pairs.end(), std::make_pair(i, j)) == pairs.end())
        throw std::invalid_argument("factor_unipotent: support outside the ordering");
    }
  std::vector<RootGroupElement> factors(ordering.size());
  GMatrix rest = u;
  for (int t = static_cast<int>(ordering.size()) - 1; t >= 0; --t) {
    auto [i, j] = pairs[t];
    LocalScalar x = rest.at(i, j);
    factors[t] = RootGroupElement{i, j, x};
    if (!x.is_zero()) rest = rest * GMatrix::root_element(u.n, u.p, i, j, -x);
  }
  if (!rest.is_identity()) throw std::invalid_argument("factor_unipotent: not in the span group");
  return factors;
}

enum class AlgCase { Alg1, Alg2, Alg3 };

struct StepRecord {
  long k;
  std::pair<int, int> beta;   // beta_{k+1} as (i, j), the root e_i - e_j
  bool beta_positive;         // i < j
  int phi;                    // phi of the extracted factor (kValInfinity when trivial)
  AlgCase tag;
  std::optional<int> f_k;     // Alg-3 only
  std::vector<int> nu_z;      // nu(z^{(k)}) before the step
};

struct ReductionTrace {
  std::vector<StepRecord> steps;
  bool terminated = false;
  std::vector<int> final_nu;
  long alg1 = 0, alg2 = 0, alg3 = 0;
  bool footnote_violated = false;  // u^{(k)}_{beta_{k+r}} != 1 at some k >= 1
};

struct ReductionState {
  long k = 0;
  GMatrix u;
  GMatrix z;
  LambdaVector target;  // dominant-sorted invariant of KzK
};

struct ReductionOptions {
  bool check_cosets = false;  // cartan_invariant(u z) == target after every step
  long step_cap = 0;          // 0: derive from the nu-polygon box count
};

namespace detail {

inline std::vector<int> nu_of_z(const GMatrix& z) {
  LambdaVector l = lambda_of_diag(z);
  return nu(l);
}

inline long pair_with_nu(const std::pair<int, int>& ij, const std::vector<int>& nuz) {
  return nuz[ij.first] - nuz[ij.second];
}

inline long norm_sq(const std::vector<int>& v) {
  long s = 0;
  for (int x : v) s += static_cast<long>(x) * x;
  return s;
}

}  // namespace detail

// One step of the three-case reduction. Appends its record to the trace.
inline ReductionState reduction_step(const ReductionState& s, const BetaSequence& seq,
                                     ReductionTrace& trace, const ReductionOptions& opt = {}) {
  const int n = s.u.n, p = s.u.p;
  std::vector<QVec> window;
  for (int t = seq.r; t >= 1; --t) window.push_back(seq.beta(s.k + t));
  // window = [beta_{k+r}, ..., beta_{k+1}], the product order
  auto factors = factor_unipotent(s.u, window);
  const RootGroupElement& lead = factors.back();  // the beta_{k+1} factor
  if (s.k >= 1 && !factors.front().x.is_zero()) trace.footnote_violated = true;

  std::vector<int> nuz = detail::nu_of_z(s.z);
  long pair_k = detail::pair_with_nu({lead.i, lead.j}, nuz);
  int phi = lead.phi();

  StepRecord rec;
  rec.k = s.k;
  rec.beta = {lead.i, lead.j};
  rec.beta_positive = lead.i < lead.j;
  rec.phi = phi;
  rec.nu_z = nuz;

  ReductionState next;
  next.k = s.k + 1;
  next.target = s.target;

  if (phi == kValInfinity || phi + pair_k >= 0) {
    rec.tag = AlgCase::Alg1;
    ++trace.alg1;
    next.z = s.z;
    next.u = lead.x.is_zero() ? s.u : s.u * GMatrix::root_element(n, p, lead.i, lead.j, -lead.x);
  } else if (phi >= 0) {
    rec.tag = AlgCase::Alg2;
    ++trace.alg2;
    next.z = s.z;
    next.u = GMatrix::root_element(n, p, lead.i, lead.j, -lead.x) * s.u;
  } else {
    rec.tag = AlgCase::Alg3;
    ++trace.alg3;
    rec.f_k = phi;
    auto [uprime, m, udprime] = m_sandwich(n, p, lead);
    // u' and z^{-1} u'' z lie in K
    if (!in_K(uprime) || !in_K(s.z.inverse() * udprime * s.z))
      throw std::logic_error("reduction_step: Alg-3 side factors not integral");
    next.z = m * s.z * n_alpha_lift(n, p, lead.i, lead.j);
    if (!next.z.is_diagonal()) throw std::logic_error("reduction_step: Alg-3 z not diagonal");
    next.u = uprime * s.u * GMatrix::root_element(n, p, lead.i, lead.j, -lead.x) * uprime.inverse();
    std::vector<int> nuz1 = detail::nu_of_z(next.z);
    long pair_k1 = detail::pair_with_nu({lead.i, lead.j}, nuz1);
    if (2L * phi != -(pair_k + pair_k1))
      throw std::logic_error("reduction_step: reflection valuation identity failed");
    if (detail::norm_sq(nuz1) <= detail::norm_sq(nuz))
      throw std::logic_error("reduction_step: Alg-3 did not increase |nu(z)|");
  }

  // window support invariant for u^{(k+1)}
  std::set<std::pair<int, int>> allowed;
  for (int t = 2; t <= seq.r; ++t) allowed.insert(root_pair(seq.beta(s.k + t)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && !next.u.at(i, j).is_zero() && !allowed.count({i, j}))
        throw std::logic_error("reduction_step: u left the window group");

  if (opt.check_cosets && cartan_invariant(next.u * next.z) != s.target)
    throw std::logic_error("reduction_step: left the Cartan class");

  trace.steps.push_back(std::move(rec));
  return next;
}

// Runs the reduction from u z' inside K z K until u^{(l)} = 1.
// z is the Z^- representative (increasing valuation vector).
inline ReductionTrace run_reduction(const GMatrix& u, const GMatrix& z_prime,
                                    const LambdaVector& z, const ReductionOptions& opt = {}) {
  if (!u.is_upper_unitriangular()) throw std::invalid_argument("run_reduction: u not in U");
  LambdaVector target = z;
  std::sort(target.begin(), target.end(), std::greater<int>());
  if (cartan_invariant(u * z_prime) != target)
    throw std::invalid_argument("run_reduction: u z' is not in K z K");

  RootSystem a = build_root_system(CartanType{Family::A, u.n - 1});
  BetaSequence seq = beta_sequence(a, *longest_word(a).word);

  long cap = opt.step_cap;
  if (cap == 0) {
    int lo = *std::min_element(target.begin(), target.end());
    int hi = *std::max_element(target.begin(), target.end());
    long box = 1;
    for (int i = 0; i < u.n; ++i) box *= (hi - lo + 1);
    cap = std::max(100L, 10L * seq.r * box);
  }

  ReductionState s;
  s.u = u;
  s.z = z_prime;
  s.target = target;
  ReductionTrace trace;
  while (!s.u.is_identity()) {
    if (s.k >= cap) throw std::logic_error("run_reduction: step cap exceeded");
    s = reduction_step(s, seq, trace, opt);
  }
  trace.terminated = true;
  trace.final_nu = detail::nu_of_z(s.z);
  std::vector<int> sorted_final = trace.final_nu;
  std::sort(sorted_final.begin(), sorted_final.end(), std::greater<int>());
  std::vector<int> sorted_target = nu(z);
  std::sort(sorted_target.begin(), sorted_target.end(), std::greater<int>());
  if (sorted_final != sorted_target)
    throw std::logic_error("run_reduction: final nu(z) outside the W_0-orbit");
  return trace;
}

struct HarnessViolation {
  std::string what;
  std::uint64_t seed;
  LambdaVector z;
};

struct TheoremHarnessReport {
  long samples = 0;
  long alg1 = 0, alg2 = 0, alg3 = 0;
  long z_classes = 0;
  std::vector<HarnessViolation> violations;
};

// Anti-dominant lambda(z) with nu(z) dominated by nu(a^{-1}) = a, enumerated
// over the orbit polytope box.
inline std::vector<LambdaVector> z_candidates_for(const LambdaVector& a_vec) {
  int n = static_cast<int>(a_vec.size());
  int lo = *std::min_element(a_vec.begin(), a_vec.end());
  int hi = *std::max_element(a_vec.begin(), a_vec.end());
  long sum_a = 0;
  for (int x : a_vec) sum_a += x;
  std::vector<LambdaVector> out;
  std::vector<int> v(n, lo);
  while (true) {
    long sum = 0;
    bool decreasing = true;
    for (int i = 0; i < n; ++i) {
      sum += v[i];
      if (i && v[i - 1] < v[i]) decreasing = false;
    }
    if (decreasing && sum == sum_a && dominance_leq(v, a_vec)) {
      LambdaVector lz(n);
      for (int i = 0; i < n; ++i) lz[i] = -v[i];  // nu(z) = v dominant, lambda(z) increasing
      out.push_back(lz);
    }
    int d = 0;
    while (d < n && ++v[d] > hi) v[d++] = lo;
    if (d == n) break;
  }
  return out;
}

// Empirical run of the main coset-containment theorem on GL_n: for every legal
// z and sampled g in K z K, the M-positivity of a z' and the integrality of
// a u_P a^{-1} must hold, along with the per-root valuation bounds.
inline TheoremHarnessReport main_theorem_harness(const StandardParabolic& par,
                                                 const LambdaVector& a_vec, int p,
                                                 long samples_per_z, std::uint64_t seed) {
  int n = par.n();
  if (static_cast<int>(a_vec.size()) != n)
    throw std::invalid_argument("main_theorem_harness: size mismatch");
  // strictly M-positive: constant on blocks, strictly decreasing across them
  for (int i = 0; i + 1 < n; ++i) {
    if (!par.crossing(i, i + 1) && a_vec[i] != a_vec[i + 1])
      throw std::invalid_argument("main_theorem_harness: a not central in the Levi");
    if (par.crossing(i, i + 1) && a_vec[i] <= a_vec[i + 1])
      throw std::invalid_argument("main_theorem_harness: a not strictly M-positive");
  }

  TheoremHarnessReport rep;
  Rng rng(seed);
  auto note = [&](const std::string& msg, std::uint64_t s, const LambdaVector& lz) {
    rep.violations.push_back({msg, s, lz});
  };

  for (const LambdaVector& lz : z_candidates_for(a_vec)) {
    ++rep.z_classes;
    GMatrix z = GMatrix::diag_pi(lz, p);
    for (long t = 0; t < samples_per_z; ++t) {
      std::uint64_t s = rng.next();
      ++rep.samples;
      GMatrix g = sample_cartan_coset(z, s);
      PositiveIwasawaParts ps = positive_iwasawa(g, par);
      LambdaVector lzp = lambda_of_diag(ps.z);
      // (i) a z' in M^+
      LambdaVector azp(n);
      for (int i = 0; i < n; ++i) azp[i] = a_vec[i] + lzp[i];
      if (!par.lambda_in_M_plus(azp)) note("a z' not in M^+", s, lz);
      // (ii) a u_P a^{-1} in K
      GMatrix a_mat = GMatrix::diag_pi(a_vec, p);
      if (!in_K(a_mat * ps.u_p * a_mat.inverse())) note("a u_P a^{-1} not in K", s, lz);
      // per-root bound on the initial factorization: phi_alpha(u_alpha) >= <alpha, nu(a)>
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          if (!par.crossing(i, j) || ps.u_p.at(i, j).is_zero()) continue;
          if (ps.u_p.at(i, j).val() < a_vec[j] - a_vec[i])
            note("initial per-root bound failed", s, lz);
        }
      // per-step bound along the reduction, at positive crossing roots
      ReductionTrace tr = run_reduction(ps.u_p, ps.z, lz);
      rep.alg1 += tr.alg1;
      rep.alg2 += tr.alg2;
      rep.alg3 += tr.alg3;
      for (const StepRecord& st : tr.steps) {
        auto [i, j] = st.beta;
        if (st.phi == kValInfinity) continue;
        if (i < j && par.crossing(i, j) && st.phi < a_vec[j] - a_vec[i])
          note("per-step bound failed at k=" + std::to_string(st.k), s, lz);
      }
      if (tr.footnote_violated) note("leading window factor nontrivial", s, lz);
    }
  }
  return rep;
}

// Deterministic witness that the bound needs nu(z) <= nu(a^{-1}): with the
// hypothesis dropped, u = u_alpha(pi^{-2}) z' = 1 lies in K z K for
// nu(z) = (2,-2) yet its valuation undercuts <alpha, nu(a)> for a = (0,-1).
inline bool negative_control_bound_violation(int p) {
  LambdaVector a_vec = {0, -1};
  GMatrix u = GMatrix::root_element(2, p, 0, 1, LocalScalar::pi_power(p, -2));
  GMatrix z_prime = GMatrix::identity(2, p);
  LambdaVector lz = z_minus_representative(u * z_prime);
  if (dominance_leq(nu(lz), a_vec)) return false;  // hypothesis accidentally holds
  ReductionTrace tr = run_reduction(u, z_prime, lz);
  (void)tr;
  return u.at(0, 1).val() < a_vec[1] - a_vec[0];
}

}  // namespace hwb
