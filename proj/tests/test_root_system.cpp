#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hwb/root_system.hpp>
#include <set>

using namespace hwb;

namespace {

QVec qv(std::initializer_list<std::int64_t> xs) {
  QVec v;
  for (auto x : xs) v.push_back(Rat(x));
  return v;
}

// Independent oracle: W-saturation of the simple roots under simple reflections.
std::set<QVec, QVecLess> closure_of_simples(const RootSystem& sys) {
  std::set<QVec, QVecLess> out;
  for (const QVec& a : sys.simple) {
    out.insert(a);
    out.insert(-a);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<QVec> cur(out.begin(), out.end());
    for (const QVec& v : cur)
      for (const QVec& a : sys.simple) {
        QVec img = reflect(a, v);
        if (out.insert(img).second) grew = true;
      }
  }
  return out;
}

}  // namespace

TEST_CASE("root counts match the standard tables") {
  auto count = [](const char* t) {
    return build_root_system(CartanType::parse(t)).roots.size();
  };
  CHECK(count("A1") == 2);
  CHECK(count("A2") == 6);
  CHECK(count("A7") == 56);
  CHECK(count("B2") == 8);
  CHECK(count("B5") == 50);
  CHECK(count("C3") == 18);
  CHECK(count("C6") == 72);
  CHECK(count("D4") == 24);
  CHECK(count("D8") == 112);
  CHECK(count("E6") == 72);
  CHECK(count("E7") == 126);
  CHECK(count("E8") == 240);
  CHECK(count("F4") == 48);
  CHECK(count("G2") == 12);
}

TEST_CASE("invalid ranks are rejected") {
  CHECK_THROWS(build_root_system(CartanType{Family::A, 0}));
  CHECK_THROWS(build_root_system(CartanType{Family::B, 1}));
  CHECK_THROWS(build_root_system(CartanType{Family::C, 2}));
  CHECK_THROWS(build_root_system(CartanType{Family::D, 3}));
  CHECK_THROWS(build_root_system(CartanType{Family::E, 9}));
  CHECK_THROWS(build_root_system(CartanType{Family::F, 5}));
  CHECK_THROWS(build_root_system(CartanType{Family::G, 3}));
  CHECK_THROWS(CartanType::parse("H3"));
}

TEST_CASE("planche coordinates: A2 and G2 simple roots") {
  RootSystem a2 = build_root_system(CartanType::parse("A2"));
  CHECK(a2.simple[0] == qv({1, -1, 0}));
  CHECK(a2.simple[1] == qv({0, 1, -1}));

  RootSystem g2 = build_root_system(CartanType::parse("G2"));
  CHECK(g2.simple[0] == qv({1, -1, 0}));
  CHECK(g2.simple[1] == qv({-2, 1, 1}));
}

TEST_CASE("structural invariants on every type") {
  for (const char* t : {"A1", "A3", "B2", "B4", "C3", "D4", "E6", "F4", "G2"}) {
    RootSystem sys = build_root_system(CartanType::parse(t));
    CAPTURE(t);
    // reduced: 2*alpha is never a root
    for (const QVec& b : sys.roots) CHECK_FALSE(sys.is_root(Rat(2) * b));
    // closed under all reflections
    for (const QVec& b : sys.roots)
      for (const QVec& c : sys.roots) CHECK(sys.is_root(reflect(b, c)));
    // positive/negative split is exact
    int pos = 0;
    for (const QVec& b : sys.roots) pos += sys.is_positive(b) ? 1 : 0;
    CHECK(pos * 2 == static_cast<int>(sys.roots.size()));
    CHECK(is_irreducible(sys));
  }
}

TEST_CASE("E8 enumeration agrees with reflection closure of the simples") {
  RootSystem e8 = build_root_system(CartanType::parse("E8"));
  auto cls = closure_of_simples(e8);
  CHECK(cls.size() == 240);
  std::set<QVec, QVecLess> mine(e8.roots.begin(), e8.roots.end());
  CHECK(cls == mine);
}

TEST_CASE("E6/E7 enumerations agree with reflection closure") {
  for (const char* t : {"E6", "E7"}) {
    RootSystem sys = build_root_system(CartanType::parse(t));
    auto cls = closure_of_simples(sys);
    std::set<QVec, QVecLess> mine(sys.roots.begin(), sys.roots.end());
    CHECK(cls == mine);
  }
}

TEST_CASE("reflection and coroot basics") {
  RootSystem a2 = build_root_system(CartanType::parse("A2"));
  const QVec& a1 = a2.simple[0];
  const QVec& al2 = a2.simple[1];
  CHECK(reflect(a1, a1) == -a1);
  CHECK(reflect(a1, al2) == a1 + al2);  // <alpha_2, alpha_1^vee> = -1
  // s_beta is an involution on random rational vectors
  QVec v = {Rat(3, 2), Rat(-1, 3), Rat(2)};
  CHECK(reflect(a1, reflect(a1, v)) == v);
  // pairing with coroots
  for (const QVec& b : a2.roots) CHECK(pairing(b, coroot_of(a2, b)) == Rat(2));
  CHECK_THROWS(coroot_of(a2, qv({1, 1, -2})));

  RootSystem g2 = build_root_system(CartanType::parse("G2"));
  CHECK(pairing(g2.simple[0], coroot_of(g2, g2.simple[1])) == Rat(-1));
  CHECK(pairing(g2.simple[1], coroot_of(g2, g2.simple[0])) == Rat(-3));
}

TEST_CASE("s_beta preserves the inner product") {
  RootSystem f4 = build_root_system(CartanType::parse("F4"));
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    QVec u(4), v(4);
    for (int i = 0; i < 4; ++i) {
      u[i] = Rat(rng.range(-5, 5), 1 + rng.range(0, 2));
      v[i] = Rat(rng.range(-5, 5), 1 + rng.range(0, 2));
    }
    const QVec& b = f4.roots[trial % f4.roots.size()];
    CHECK(dot(reflect(b, u), reflect(b, v)) == dot(u, v));
  }
}

TEST_CASE("longest word") {
  RootSystem a1 = build_root_system(CartanType::parse("A1"));
  WeylElement w0 = longest_word(a1);
  CHECK(w0.word->size() == 1);

  RootSystem a2 = build_root_system(CartanType::parse("A2"));
  w0 = longest_word(a2);
  CHECK(w0.word->size() == 3);

  for (const char* t : {"B3", "C4", "D4", "G2", "F4", "E6"}) {
    RootSystem sys = build_root_system(CartanType::parse(t));
    WeylElement w = longest_word(sys);
    CAPTURE(t);
    CHECK(static_cast<int>(w.word->size()) == sys.num_positive());
    // w0^2 = 1 and w0(Sigma^+) = Sigma^-
    CHECK(mat_mul(w.matrix, w.matrix) == identity_mat(sys.ambient_dim));
    for (const QVec& b : sys.positive_roots()) {
      QVec img = w.apply(b);
      CHECK(sys.is_root(img));
      CHECK_FALSE(sys.is_positive(img));
    }
  }
}

TEST_CASE("beta sequence: betas enumerate Sigma^+ without repeats") {
  for (const char* t : {"A1", "A3", "B3", "C3", "D4", "G2", "F4"}) {
    RootSystem sys = build_root_system(CartanType::parse(t));
    WeylElement w0 = longest_word(sys);
    BetaSequence seq = beta_sequence(sys, *w0.word);
    CAPTURE(t);
    std::set<QVec, QVecLess> b(seq.base_betas.begin(), seq.base_betas.end());
    CHECK(static_cast<int>(b.size()) == seq.r);
    for (const QVec& v : seq.base_betas) CHECK(sys.is_positive(v));
    // Sigma^{(r)} = -Sigma^+
    auto wr = seq.window(seq.r);
    for (const QVec& v : wr) CHECK_FALSE(sys.is_positive(v));
    // 2r-periodicity
    for (int k = 1; k <= 2 * seq.r; ++k) CHECK(seq.beta(k) == seq.beta(k + 2 * seq.r));
  }
}

TEST_CASE("beta sequence rejects non-reduced words") {
  RootSystem a2 = build_root_system(CartanType::parse("A2"));
  CHECK_THROWS(beta_sequence(a2, {0, 0, 0}));
  CHECK_THROWS(beta_sequence(a2, {0, 1}));
}

TEST_CASE("A2 beta sequence matches the worked layout for w0 = s1 s2 s1") {
  RootSystem a2 = build_root_system(CartanType::parse("A2"));
  BetaSequence seq = beta_sequence(a2, {0, 1, 0});
  const QVec a1 = a2.simple[0], al2 = a2.simple[1];
  CHECK(seq.beta(1) == a1);
  CHECK(seq.beta(2) == a1 + al2);
  CHECK(seq.beta(3) == al2);
  auto s1 = seq.window(1);  // {beta_2, beta_3, beta_4} = {a1+a2, a2, -a1}
  CHECK(s1[0] == a1 + al2);
  CHECK(s1[1] == al2);
  CHECK(s1[2] == -a1);
}

TEST_CASE("A1 beta sequence alternates with period 2") {
  RootSystem a1 = build_root_system(CartanType::parse("A1"));
  BetaSequence seq = beta_sequence(a1, {0});
  CHECK(seq.beta(1) == a1.simple[0]);
  CHECK(seq.beta(2) == -a1.simple[0]);
  CHECK(seq.beta(3) == a1.simple[0]);
}

TEST_CASE("positive system after prefix equals the transformed-basis system") {
  for (const char* t : {"A3", "B3", "G2"}) {
    RootSystem sys = build_root_system(CartanType::parse(t));
    WeylElement w0 = longest_word(sys);
    BetaSequence seq = beta_sequence(sys, *w0.word);
    CAPTURE(t);
    CHECK_THROWS(positive_system_after_prefix(seq, -1));
    CHECK_THROWS(positive_system_after_prefix(seq, seq.r + 1));
    for (int j = 0; j <= seq.r; ++j) {
      auto claimed = positive_system_after_prefix(seq, j);
      // brute force: gamma is positive for the basis w_j(Delta) iff w_j^{-1}(gamma) > 0
      QMat wj_inv = mat_transpose(seq.prefix[j]);
      std::set<QVec, QVecLess> brute;
      for (const QVec& g : sys.roots)
        if (sys.is_positive(mat_apply(wj_inv, g))) brute.insert(g);
      std::set<QVec, QVecLess> got(claimed.begin(), claimed.end());
      CHECK(got == brute);
    }
  }
}

TEST_CASE("G2 circular ordering for w0 = s1 s2 s1 s2 s1 s2") {
  RootSystem g2 = build_root_system(CartanType::parse("G2"));
  BetaSequence seq = beta_sequence(g2, {0, 1, 0, 1, 0, 1});
  CHECK(seq.beta(1) == g2.simple[0]);
  CHECK(seq.beta(6) == g2.simple[1]);
  auto after2 = positive_system_after_prefix(seq, 2);
  std::set<QVec, QVecLess> got(after2.begin(), after2.end());
  std::set<QVec, QVecLess> expect;
  for (int t = 3; t <= 6; ++t) expect.insert(seq.beta(t));
  expect.insert(-seq.beta(1));
  expect.insert(-seq.beta(2));
  CHECK(got == expect);
}

TEST_CASE("claim: the s_{e_1} word in B_n is reduced with the stated betas") {
  for (int n = 2; n <= 8; ++n) {
    RootSystem sys = build_root_system(CartanType{Family::B, n});
    CAPTURE(n);
    std::vector<int> word;
    for (int i = 0; i + 1 < n; ++i) word.push_back(i);
    word.push_back(n - 1);
    for (int i = n - 2; i >= 0; --i) word.push_back(i);
    CHECK(static_cast<int>(word.size()) == 2 * n - 1);
    CHECK(is_reduced_word(sys, word));
    auto betas = betas_of_word(sys, word);
    for (int j = 1; j <= n - 1; ++j) {  // beta_j = e_1 - e_{j+1}
      QVec v(n);
      v[0] = Rat(1);
      v[j] = Rat(-1);
      CHECK(betas[j - 1] == v);
    }
    QVec e1(n);
    e1[0] = Rat(1);
    CHECK(betas[n - 1] == e1);
    for (int j = 1; j <= n - 1; ++j) {  // beta_{2n-j} = e_1 + e_{j+1}
      QVec v(n);
      v[0] = Rat(1);
      v[j] = Rat(1);
      CHECK(betas[2 * n - j - 1] == v);
    }
    // and the product is the reflection in e_1
    WeylElement w = weyl_from_word(sys, word);
    CHECK(w.matrix == reflection_matrix(n, e1));
  }
}

TEST_CASE("root heights and coefficients") {
  RootSystem b4 = build_root_system(CartanType::parse("B4"));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(b4.coefficient_c(i, b4.simple[j]) == (i == j ? 1 : 0));
  // B_n highest root e_1 + e_2 has c_r = 2 for r > 1
  QVec a0(4);
  a0[0] = Rat(1);
  a0[1] = Rat(1);
  CHECK(b4.coefficient_c(0, a0) == 1);
  for (int r = 1; r < 4; ++r) CHECK(b4.coefficient_c(r, a0) == 2);

  RootSystem e8 = build_root_system(CartanType::parse("E8"));
  QVec h = highest_root_of_length(e8, e8.simple[0]);
  std::vector<std::int64_t> expect = {2, 3, 4, 6, 5, 4, 3, 2};
  for (int i = 0; i < 8; ++i) CHECK(e8.coefficient_c(i, h) == expect[i]);
  CHECK(e8.root_height(h) == 29);
  CHECK_THROWS(b4.root_index(qv({3, 3, 3, 3})));
}

TEST_CASE("word exposing a root after a Levi prefix") {
  RootSystem a2 = build_root_system(CartanType::parse("A2"));
  // alpha = alpha_i works with l = 0
  ExposedWord w0 = word_exposing_root(a2, 0, a2.simple[0]);
  CHECK(w0.l == 0);
  // A2, i = 1 (0-based 0), alpha = a1 + a2: l = 1 with prefix s2
  ExposedWord w1 = word_exposing_root(a2, 0, a2.simple[0] + a2.simple[1]);
  CHECK(w1.l == 1);
  CHECK(w1.word[0] == 1);

  // B3, vertex 1: alpha = e_1 + e_2 has the same length as alpha_1
  RootSystem b3 = build_root_system(CartanType::parse("B3"));
  QVec a(3);
  a[0] = Rat(1);
  a[1] = Rat(1);
  ExposedWord wb = word_exposing_root(b3, 0, a);
  CHECK(wb.l >= 1);  // postcondition re-validated inside

  // vertex 3 of B3 is non-obtuse but e_1 + e_2 is longer than alpha_3 = e_3
  CHECK_THROWS(word_exposing_root(b3, 2, a));
  // obtuse vertex: B3 middle vertex
  CHECK_THROWS(word_exposing_root(b3, 1, b3.simple[1]));
}

TEST_CASE("weyl element equality is by matrix, not word") {
  RootSystem a2 = build_root_system(CartanType::parse("A2"));
  WeylElement u = weyl_from_word(a2, {0, 1, 0});
  WeylElement v = weyl_from_word(a2, {1, 0, 1});
  CHECK(u == v);  // both are w0
}
