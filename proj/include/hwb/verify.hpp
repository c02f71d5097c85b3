#pragma once

#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "coset_reduction.hpp"
#include "hecke_poly.hpp"
#include "nonobtuse.hpp"

namespace hwb {

struct CheckReport {
  std::string suite;
  std::uint64_t seed = 0;
  long checks = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond) violations.push_back(what);
  }
  void merge(const CheckReport& other) {
    checks += other.checks;
    for (const auto& v : other.violations) violations.push_back(other.suite + ": " + v);
  }
};

namespace verify_detail {

inline GMatrix random_unipotent(Rng& rng, int n, int p, int val_lo, int val_hi) {
  GMatrix u = GMatrix::identity(n, p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (rng.next() % 4 == 0) continue;
      LocalScalar c = LocalScalar::pi_power(p, static_cast<int>(rng.range(val_lo, val_hi))) *
                      LocalScalar(p, 1 + static_cast<int>(rng.next() % (p - 1)));
      if (rng.next() % 2) c = c + LocalScalar::pi_power(p, static_cast<int>(rng.range(0, val_hi)));
      u.at(i, j) = c;
    }
  return u;
}

inline std::string lambda_str(const LambdaVector& l) {
  std::string s = "(";
  for (std::size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + std::to_string(l[i]);
  return s + ")";
}

}  // namespace verify_detail

// --- rootsys ---------------------------------------------------------------

inline CheckReport verify_rootsys(std::uint64_t seed) {
  CheckReport rep;
  rep.suite = "rootsys";
  rep.seed = seed;
  Rng rng(seed);

  std::vector<std::string> types = {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3",
                                    "C4", "D4", "D5", "E6", "F4", "G2"};
  for (const std::string& t : types) {
    RootSystem sys = build_root_system(CartanType::parse(t));
    WeylElement w0 = longest_word(sys);
    BetaSequence seq = beta_sequence(sys, *w0.word);
    std::set<QVec, QVecLess> betas(seq.base_betas.begin(), seq.base_betas.end());
    rep.expect(static_cast<int>(betas.size()) == seq.r, t + ": repeated beta in w0 word");
    bool all_pos = true;
    for (const QVec& b : seq.base_betas) all_pos = all_pos && sys.is_positive(b);
    rep.expect(all_pos && seq.r == sys.num_positive(), t + ": betas do not enumerate Sigma^+");

    // prefix positive systems against brute force at sampled j
    for (int trial = 0; trial < 3; ++trial) {
      int j = static_cast<int>(rng.next() % (seq.r + 1));
      auto claimed = positive_system_after_prefix(seq, j);
      QMat wj_inv = mat_transpose(seq.prefix[j]);
      std::set<QVec, QVecLess> brute;
      for (const QVec& g : sys.roots)
        if (sys.is_positive(mat_apply(wj_inv, g))) brute.insert(g);
      rep.expect(std::set<QVec, QVecLess>(claimed.begin(), claimed.end()) == brute,
                 t + ": prefix positive system mismatch at j=" + std::to_string(j));
    }

    // reflections preserve the form
    for (int trial = 0; trial < 4; ++trial) {
      QVec u(sys.ambient_dim), v(sys.ambient_dim);
      for (int i = 0; i < sys.ambient_dim; ++i) {
        u[i] = Rat(rng.range(-4, 4), 1 + rng.range(0, 2));
        v[i] = Rat(rng.range(-4, 4), 1 + rng.range(0, 2));
      }
      const QVec& b = sys.roots[rng.next() % sys.roots.size()];
      rep.expect(dot(reflect(b, u), reflect(b, v)) == dot(u, v), t + ": reflection not orthogonal");
    }
  }

  // Claim: s_{e_1} words in B_n are reduced, n <= 8
  for (int n = 2; n <= 8; ++n) {
    RootSystem sys = build_root_system(CartanType{Family::B, n});
    std::vector<int> word;
    for (int i = 0; i + 1 < n; ++i) word.push_back(i);
    word.push_back(n - 1);
    for (int i = n - 2; i >= 0; --i) word.push_back(i);
    rep.expect(is_reduced_word(sys, word), "B" + std::to_string(n) + ": s_{e_1} word not reduced");
  }

  // word_exposing_root re-validates its postcondition (it throws otherwise)
  for (const std::string& t : {"A2", "A3", "B3", "C3", "D4", "E6"}) {
    RootSystem sys = build_root_system(CartanType::parse(t));
    for (int i = 0; i < sys.rank(); ++i) {
      if (!vertex_pairs_non_obtuse(sys, i)) continue;
      Rat len = dot(sys.simple[i], sys.simple[i]);
      int tested = 0;
      for (const QVec& a : unipotent_radical_roots(sys, i)) {
        if (dot(a, a) != len || tested >= 4) continue;
        ++tested;
        try {
          word_exposing_root(sys, i, a);
          rep.expect(true, "");
        } catch (const std::exception& e) {
          rep.expect(false, t + ": word_exposing_root failed: " + e.what());
        }
      }
    }
  }
  return rep;
}

// --- nonobtuse ---------------------------------------------------------------

inline CheckReport verify_nonobtuse(std::uint64_t seed) {
  CheckReport rep;
  rep.suite = "nonobtuse";
  rep.seed = seed;

  std::vector<CartanType> all;
  for (int n = 1; n <= 8; ++n) all.push_back({Family::A, n});
  for (int n = 2; n <= 8; ++n) all.push_back({Family::B, n});
  for (int n = 3; n <= 8; ++n) all.push_back({Family::C, n});
  for (int n = 4; n <= 8; ++n) all.push_back({Family::D, n});
  for (int n : {6, 7, 8}) all.push_back({Family::E, n});
  all.push_back({Family::F, 4});
  all.push_back({Family::G, 2});

  for (CartanType t : all) {
    RootSystem sys = build_root_system(t);
    ClassificationReport cls;
    try {
      cls = classify(sys);  // throws if the four conditions disagree anywhere
    } catch (const std::exception& e) {
      rep.expect(false, t.str() + ": " + e.what());
      continue;
    }
    std::set<int> got;
    for (int i : cls.non_obtuse_vertices()) got.insert(i + 1);
    rep.expect(got == expected_non_obtuse(t), t.str() + ": classification differs from the table");

    // recorded witnesses
    for (int i = 0; i < sys.rank(); ++i) {
      auto w = recorded_obtuse_witness(sys, i);
      bool black = expected_non_obtuse(t).count(i + 1) != 0;
      rep.expect(w.has_value() == !black, t.str() + ": witness presence mismatch");
      if (w) {
        bool ok = sys.is_root(w->first) && sys.is_root(w->second) &&
                  sys.coefficient_c(i, w->first) > 0 && sys.coefficient_c(i, w->second) > 0 &&
                  dot(w->first, w->second) < Rat(0);
        rep.expect(ok, t.str() + ": recorded witness fails at vertex " + std::to_string(i + 1));
      }
    }
  }

  // Lemma on the cone: every non-obtuse vertex up to rank 6, mu grid with sup norm <= 3
  std::vector<std::string> grid_types = {"A1", "A2", "A3", "A4", "A5", "A6", "B2", "B3", "B4",
                                         "B5", "B6", "C3", "C4", "C5", "C6", "D4", "D5", "D6", "E6"};
  for (const std::string& t : grid_types) {
    RootSystem sys = build_root_system(CartanType::parse(t));
    for (int i = 0; i < sys.rank(); ++i) {
      if (!expected_non_obtuse(sys.type).count(i + 1)) continue;
      ParabolicVertex v = parabolic_vertex(sys, i);
      QVec lambda = strictly_M_positive_lambda(v);
      auto grid = no_cone_mu_grid(v, lambda, 3);
      for (const QVec& mu : grid) {
        NoConeResult r = no_cone_check(v, lambda, mu);
        rep.expect(r == NoConeResult::holds, t + ": no-cone fails at non-obtuse vertex " +
                                                 std::to_string(i + 1));
      }
    }
  }
  // and the G2 obtuse vertex admits a failing mu
  {
    RootSystem g2 = build_root_system(CartanType::parse("G2"));
    ParabolicVertex v = parabolic_vertex(g2, 1);
    QVec lambda = strictly_M_positive_lambda(v);
    bool found = false;
    for (const QVec& mu : no_cone_mu_grid(v, lambda))
      if (no_cone_check(v, lambda, mu) == NoConeResult::fails) found = true;
    rep.expect(found, "G2: expected a no-cone failure witness");
  }
  return rep;
}

// --- lambda ------------------------------------------------------------------

inline CheckReport verify_lambda(std::uint64_t seed) {
  CheckReport rep;
  rep.suite = "lambda";
  rep.seed = seed;

  // delta-mu identity for all w and lambda in [-3,3]^n, n <= 4
  for (int n = 2; n <= 4; ++n) {
    WeylActionData W(n);
    auto elems = W.elements();
    LambdaVector l(n, -3);
    while (true) {
      for (const auto& w : elems)
        if (!delta_mu_identity_check(w, l)) {
          rep.expect(false, "delta-mu identity fails at n=" + std::to_string(n) +
                                " lambda=" + verify_detail::lambda_str(l));
        }
      ++rep.checks;
      int d = 0;
      while (d < n && ++l[d] > 3) l[d++] = -3;
      if (d == n) break;
    }
  }

  // w * S_lambda = S_lambda on dominant samples, n = 2, 3
  for (int n = 2; n <= 3; ++n) {
    WeylActionData W(n);
    Rng rng(seed + n);
    for (int t = 0; t < 20; ++t) {
      LambdaVector l(n);
      for (int& x : l) x = static_cast<int>(rng.range(-3, 3));
      std::sort(l.begin(), l.end(), std::greater<int>());
      GroupAlgebraElement s = orbit_sum(l);
      for (const auto& w : W.elements())
        rep.expect(twisted_act(w, s) == s, "S_lambda not invariant");
      auto coords = star_invariant_coordinates(s);
      rep.expect(coords.size() == 1 && coords.begin()->first == l &&
                     coords.begin()->second == LaurentScalar(1),
                 "orbit sum coordinates wrong");
    }
  }

  // GL2 invariant ring at bounded degree: S_{a,b} in Z[S_{1,0}, S_{1,1}^{+-1}]
  {
    GroupAlgebraElement s10 = orbit_sum({1, 0});
    GroupAlgebraElement s11 = orbit_sum({1, 1});
    for (int a = -3; a <= 3; ++a)
      for (int b = -3; b <= a; ++b) {
        GroupAlgebraElement center = GroupAlgebraElement::monomial({b, b});
        rep.expect(orbit_sum({a, b}) == center * orbit_sum({a - b, 0}),
                   "S_{a,b} != S_{b,b} S_{a-b,0}");
      }
    for (int n = 2; n <= 4; ++n)
      rep.expect(orbit_sum({n, 0}) * s10 ==
                     orbit_sum({n + 1, 0}) + LaurentScalar::q_power(1) * s11 * orbit_sum({n - 1, 0}),
                 "S recursion fails");
    rep.expect(is_star_invariant(s10 * s10 * GroupAlgebraElement::monomial({-1, -1})),
               "generator products not invariant");
  }

  // star-coordinate round trip on random invariant elements
  {
    Rng rng(seed ^ 0x5555);
    for (int t = 0; t < 10; ++t) {
      GroupAlgebraElement mix(2);
      std::map<LambdaVector, LaurentScalar> picked;
      for (int j = 0; j < 3; ++j) {
        int a = static_cast<int>(rng.range(-2, 3)), b = static_cast<int>(rng.range(-3, 2));
        if (b > a) std::swap(a, b);
        LaurentScalar c = LaurentScalar::q_power(static_cast<int>(rng.range(-1, 1)), rng.range(-3, 3));
        if (c.is_zero()) continue;
        mix = mix + c * orbit_sum({a, b});
        picked[{a, b}] += c;
      }
      for (auto it = picked.begin(); it != picked.end();)
        it = it->second.is_zero() ? picked.erase(it) : std::next(it);
      rep.expect(star_invariant_coordinates(mix) == picked, "coordinate round trip failed");
    }
  }
  return rep;
}

// --- padic -------------------------------------------------------------------

inline CheckReport verify_padic(std::uint64_t seed) {
  CheckReport rep;
  rep.suite = "padic";
  rep.seed = seed;
  Rng rng(seed);

  for (int p : {2, 3}) {
    // equation (nu) and V-axioms on samples
    for (int t = 0; t < 10; ++t) {
      int n = 3;
      LambdaVector l(n);
      for (int& x : l) x = static_cast<int>(rng.range(-3, 3));
      GMatrix z = GMatrix::diag_pi(l, p);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          LocalScalar x = LocalScalar::pi_power(p, static_cast<int>(rng.range(-2, 2)));
          GMatrix conj = z.inverse() * GMatrix::root_element(n, p, i, j, x) * z;
          rep.expect(conj.at(i, j).val() == x.val() + (l[j] - l[i]), "eq (nu) fails");
        }
      // V3 commutator shapes
      LocalScalar x = LocalScalar::pi_power(p, static_cast<int>(rng.range(-2, 2)));
      LocalScalar y = LocalScalar::pi_power(p, static_cast<int>(rng.range(-2, 2)));
      GMatrix u1 = GMatrix::root_element(3, p, 0, 1, x), u2 = GMatrix::root_element(3, p, 1, 2, y);
      rep.expect(u1 * u2 * u1.inverse() * u2.inverse() == GMatrix::root_element(3, p, 0, 2, x * y),
                 "V3 commutator fails");
      // V5 via m_of_u
      RootGroupElement ru{0, 1, x};
      auto [a, m, b] = m_of_u(3, p, ru);
      rep.expect(a.at(1, 0).val() == -x.val(), "V5 valuation fails");
    }

    // Cartan bi-invariance and Iwasawa round trips
    for (int t = 0; t < 10; ++t) {
      int n = 2 + static_cast<int>(rng.next() % 3);
      LambdaVector l(n);
      for (int& x : l) x = static_cast<int>(rng.range(-2, 2));
      GMatrix z = GMatrix::diag_pi(l, p);
      GMatrix g = sample_cartan_coset(z, rng.next());
      LambdaVector sorted = l;
      std::sort(sorted.begin(), sorted.end(), std::greater<int>());
      rep.expect(cartan_invariant(g) == sorted, "cartan invariance fails");
      IwasawaParts ps = iwasawa_decompose(g);
      rep.expect(ps.u * ps.z * ps.k == g && in_K(ps.k), "iwasawa recomposition fails");
      // Remark: nu(z') <= nu(z) with the Z^- representative, all Weyl translates
      LambdaVector zm = l;
      std::sort(zm.begin(), zm.end());
      GMatrix g2 = sample_cartan_coset(GMatrix::diag_pi(zm, p), rng.next());
      LambdaVector lp = lambda_of_diag(iwasawa_decompose(g2).z);
      WeylActionData W(n);
      for (const auto& w : W.elements())
        rep.expect(dominance_leq(WeylActionData::apply(w, nu(lp)), nu(zm)),
                   "remark: w.nu(z') <= nu(z) fails");
      if (nu(lp) == nu(zm)) rep.expect(lp == zm, "remark: equality case fails");
    }

    // mu_U counting oracle
    for (int a = -3; a <= 3; ++a)
      for (int b = -3; b <= 3; ++b) {
        if (std::abs(a - b) > 3) continue;
        rep.expect(Rat(count_mu_U_gl2({a, b}, p)) == mu_U({a, b}).eval_at(p),
                   "mu_U count mismatch at " + verify_detail::lambda_str({a, b}));
      }
  }
  return rep;
}

// --- reduction (criterion-7/9 scale) ------------------------------------------

struct ReductionSweepStats {
  long runs = 0, alg1 = 0, alg2 = 0, alg3 = 0;
};

inline CheckReport verify_reduction(std::uint64_t seed, long gl2_runs = 500, long gl3_runs = 200,
                                    ReductionSweepStats* stats = nullptr) {
  CheckReport rep;
  rep.suite = "reduction";
  rep.seed = seed;
  Rng rng(seed);

  auto sweep = [&](int n, long runs) {
    for (long t = 0; t < runs; ++t) {
      int p = (rng.next() % 2) ? 2 : 3;
      GMatrix u = verify_detail::random_unipotent(rng, n, p, -3, 3);
      LambdaVector lp(n);
      for (int& x : lp) x = static_cast<int>(rng.range(-3, 3));
      GMatrix z_prime = GMatrix::diag_pi(lp, p);
      LambdaVector lz = z_minus_representative(u * z_prime);
      // criterion 9 preamble: the Iwasawa class of the instance obeys the remark
      WeylActionData W(n);
      for (const auto& w : W.elements())
        rep.expect(dominance_leq(WeylActionData::apply(w, nu(lp)), nu(lz)),
                   "instance violates w.nu(z') <= nu(z)");
      if (nu(lp) == nu(lz)) rep.expect(lp == lz, "equality case violates class equality");
      try {
        ReductionOptions opt;
        opt.check_cosets = true;  // state invariant after every step
        ReductionTrace tr = run_reduction(u, z_prime, lz, opt);
        rep.expect(tr.terminated, "no termination");
        rep.expect(!tr.footnote_violated, "leading window factor nontrivial");
        if (stats) {
          ++stats->runs;
          stats->alg1 += tr.alg1;
          stats->alg2 += tr.alg2;
          stats->alg3 += tr.alg3;
        }
      } catch (const std::exception& e) {
        rep.expect(false, std::string("reduction run failed: ") + e.what());
      }
    }
  };
  sweep(2, gl2_runs);
  sweep(3, gl3_runs);

  rep.expect(negative_control_bound_violation(2), "negative control found no violation at p=2");
  rep.expect(negative_control_bound_violation(3), "negative control found no violation at p=3");
  return rep;
}

// --- theorem harness (criterion-8 scale) ---------------------------------------

inline CheckReport verify_theorem_harness(std::uint64_t seed, long samples_per_z = 200) {
  CheckReport rep;
  rep.suite = "theorem";
  rep.seed = seed;
  struct Config {
    std::vector<int> blocks;
    LambdaVector a;
    int p;
  };
  std::vector<Config> configs = {
      {{2, 1}, {0, 0, -2}, 2},  {{1, 2}, {2, 0, 0}, 3},
      {{3, 1}, {0, 0, 0, -2}, 2}, {{2, 2}, {1, 1, -1, -1}, 2}, {{1, 3}, {1, -1, -1, -1}, 3},
  };
  Rng rng(seed);
  for (const Config& cfg : configs) {
    StandardParabolic par(cfg.blocks);
    TheoremHarnessReport hr = main_theorem_harness(par, cfg.a, cfg.p, samples_per_z, rng.next());
    rep.checks += hr.samples;
    for (const HarnessViolation& v : hr.violations) {
      std::ostringstream os;
      os << "blocks(";
      for (int b : cfg.blocks) os << b << " ";
      os << ") " << v.what << " seed=" << v.seed << " z=" << verify_detail::lambda_str(v.z);
      rep.violations.push_back(os.str());
    }
  }
  return rep;
}

// --- hecke -------------------------------------------------------------------

inline CheckReport verify_hecke(std::uint64_t seed) {
  CheckReport rep;
  rep.suite = "hecke";
  rep.seed = seed;
  Rng rng(seed);

  // presentation vs convolution oracle on the [-2,2]^3 box
  std::vector<DCoset> triples;
  for (int a = -2; a <= 2; ++a)
    for (int c = -2; c <= 2; ++c)
      for (int b = -2; b <= std::min(a, c); ++b) triples.push_back({a, b, c});
  for (int p : {2, 3})
    for (const DCoset& x : triples)
      for (const DCoset& y : triples) {
        GL2BElement lhs = coset_convolution_oracle(x, y, p);
        GL2BElement rhs = gl2b_eval_q(dcoset_to_monomials(x) * dcoset_to_monomials(y), p);
        rep.expect(lhs == rhs, "oracle/presentation mismatch");
      }

  // basis conversion is unitriangular and round-trips
  for (int t = 0; t < 20; ++t) {
    GL2BElement x;
    for (int j = 0; j < 3; ++j)
      x.add_term({static_cast<int>(rng.next() % 3), static_cast<int>(rng.next() % 3),
                  static_cast<int>(rng.range(-2, 2))},
                 LaurentScalar::q_power(static_cast<int>(rng.range(-1, 1)), rng.range(-2, 2)));
    rep.expect(from_dcoset_basis(to_dcoset_basis(x)) == x, "dcoset basis round trip");
    GL2BElement y;
    for (int j = 0; j < 2; ++j)
      y.add_term({static_cast<int>(rng.next() % 2), static_cast<int>(rng.next() % 2),
                  static_cast<int>(rng.range(-1, 1))},
                 LaurentScalar(rng.range(-2, 2)));
    rep.expect(zeta_B(x * y) == zeta_B(y) * zeta_B(x), "zeta anti-multiplicativity");
    rep.expect(zeta_B(zeta_B(x)) == x, "zeta involution");
  }

  // zeta and theta do not commute, already on X_+
  rep.expect(theta_BZ(zeta_B(GL2BElement::Xp())) != gl2_x(-1), "theta/zeta commute unexpectedly");
  // the embedding square commutes
  for (int t = 0; t < 10; ++t) {
    GL2GElement a = GL2GElement::mono(static_cast<int>(rng.next() % 3),
                                      static_cast<int>(rng.range(-2, 2)));
    rep.expect(zeta_B(epsilon_BG(a)) == epsilon_BG(zeta_G(a)), "embedding square fails");
    rep.expect(theta_BZ(epsilon_BG(a)) == satake_of_spherical(a), "theta . epsilon != satake");
  }

  // closed-form Satake vs counting oracle, spreads <= 3
  for (int p : {2, 3})
    for (int a = -3; a <= 3; ++a)
      for (int b = a - 3; b <= a; ++b) {
        if (b < -3) continue;
        GroupAlgebraElement counted = satake_counting_oracle({a, b}, p);
        GroupAlgebraElement closed(2);
        for (auto& [l, c] : satake_closed_form_gl2(a, b).value.terms)
          closed.add_term(l, LaurentScalar(c.eval_at(p).num));
        rep.expect(counted == closed, "closed form vs counting oracle at (" + std::to_string(a) +
                                          "," + std::to_string(b) + ") p=" + std::to_string(p));
        // triangular S-coordinate pattern
        for (auto& [l, c] : satake_closed_form_gl2(a, b).s_coords)
          rep.expect(l[0] <= a && l[0] + l[1] == a + b, "triangular pattern violated");
      }

  // injectivity of Theta on C^+ monomials
  {
    std::set<LambdaVector> seen;
    bool inj = true;
    for (int m = 0; m <= 3; ++m)
      for (int k = -3; k <= 3; ++k) {
        auto img = theta_BZ(GL2BElement::mono(0, m, k));
        inj = inj && seen.insert(img.terms.begin()->first).second;
      }
    rep.expect(inj, "Theta not injective on C^+ monomials");
  }

  // Satake image = bounded-degree star invariants: random S-combinations invert
  for (int t = 0; t < 10; ++t) {
    GroupAlgebraElement inv(2);
    for (int j = 0; j < 3; ++j) {
      int a = static_cast<int>(rng.range(-2, 3)), b = static_cast<int>(rng.range(-3, 2));
      if (b > a) std::swap(a, b);
      LaurentScalar c = LaurentScalar::q_power(static_cast<int>(rng.range(-1, 1)), rng.range(-2, 2));
      inv = inv + c * orbit_sum({a, b});
    }
    rep.expect(is_star_invariant(inv), "S-combination not invariant");
    try {
      GL2GElement back = satake_inverse(inv);
      rep.expect(satake_of_spherical(back) == inv, "satake inversion round trip");
    } catch (const std::exception&) {
      rep.expect(false, "satake_inverse rejected an invariant element");
    }
  }

  // chi, hypothesis, negative powers, splitting, decomposition
  Gl2Chi chi = gl2_chi_borel();
  rep.expect(hypothesis_check(chi.embedded), "hypothesis fails for chi");
  Gl2NegativePowers np(chi.embedded);
  rep.expect(np.power(-1) == LaurentScalar::q_power(-1) * GL2BElement::Xm(), "X_+^{-1} wrong");
  for (int n = 0; n <= 4; ++n)
    for (int d = -4; d <= 4; ++d) {
      if (n + d < -4) continue;
      rep.expect(GL2BElement::Xp(n) * np.power(d) == np.power(n + d), "power law fails");
    }
  for (int t = 0; t < 10; ++t) {
    GL2BElement x;
    for (int j = 0; j < 3; ++j)
      x.add_term({static_cast<int>(rng.next() % 3), static_cast<int>(rng.next() % 3),
                  static_cast<int>(rng.range(-2, 2))},
                 LaurentScalar::q_power(static_cast<int>(rng.range(-1, 1)), rng.range(-2, 2)));
    auto [o, k] = split_hyp(x, np);
    rep.expect(o + k == x && theta_BZ(k).is_zero(), "splitting fails");
    auto [oo, kk] = split_hyp(o, np);
    rep.expect(oo == o && kk.is_zero(), "splitting not idempotent");
    if (!o.is_zero()) rep.expect(!theta_BZ(o).is_zero(), "O^+ meets Ker Theta");
  }
  {
    LambdaPoly f_tilde({GroupAlgebraElement::one(2),
                        -(LaurentScalar::q_power(-1) * gl2_y(-1))});
    LambdaPoly g_tilde({GroupAlgebraElement::one(2), -gl2_x(-1)});
    DecomposeResult res = decompose(chi.spherical, f_tilde, g_tilde, ConeSide::plusC);
    rep.expect(res.f * res.g == chi.embedded, "chi decomposition product fails");
  }
  return rep;
}

// --- registry ------------------------------------------------------------------

using SuiteFn = std::function<CheckReport(std::uint64_t)>;

struct SuiteEntry {
  std::string name;
  SuiteFn fn;
};

inline const std::vector<SuiteEntry>& suite_registry() {
  static const std::vector<SuiteEntry> reg = {
      {"rootsys", [](std::uint64_t s) { return verify_rootsys(s); }},
      {"nonobtuse", [](std::uint64_t s) { return verify_nonobtuse(s); }},
      {"lambda", [](std::uint64_t s) { return verify_lambda(s); }},
      {"padic", [](std::uint64_t s) { return verify_padic(s); }},
      {"reduction",
       [](std::uint64_t s) {
         CheckReport r = verify_reduction(s, 60, 25);  // CLI-scale sweep
         r.merge(verify_theorem_harness(s, 15));
         return r;
       }},
      {"hecke", [](std::uint64_t s) { return verify_hecke(s); }},
  };
  return reg;
}

inline CheckReport run_suite(const std::string& name, std::uint64_t seed) {
  if (name == "all") {
    CheckReport total;
    total.suite = "all";
    total.seed = seed;
    for (const SuiteEntry& e : suite_registry()) total.merge(e.fn(seed));
    return total;
  }
  for (const SuiteEntry& e : suite_registry())
    if (e.name == name) return e.fn(seed);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace hwb
