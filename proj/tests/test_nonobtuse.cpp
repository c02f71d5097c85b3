#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hwb/nonobtuse.hpp>

using namespace hwb;

TEST_CASE("classification matches the golden table") {
  for (const char* t : {"A1", "A2", "A5", "B2", "B4", "B6", "C3", "C5", "D4", "D5",
                        "D6", "E6", "E7", "E8", "F4", "G2"}) {
    RootSystem sys = build_root_system(CartanType::parse(t));
    ClassificationReport rep = classify(sys);  // throws if (i)-(iv) ever disagree
    CAPTURE(t);
    std::set<int> got;
    for (int i : rep.non_obtuse_vertices()) got.insert(i + 1);
    CHECK(got == expected_non_obtuse(sys.type));
  }
}

TEST_CASE("single-vertex condition examples") {
  RootSystem a3 = build_root_system(CartanType::parse("A3"));
  for (int i = 0; i < 3; ++i) CHECK(condition_i(parabolic_vertex(a3, i)));

  RootSystem g2 = build_root_system(CartanType::parse("G2"));
  CHECK_FALSE(condition_i(parabolic_vertex(g2, 0)));
  CHECK_FALSE(condition_i(parabolic_vertex(g2, 1)));

  RootSystem b4 = build_root_system(CartanType::parse("B4"));
  ParabolicVertex v = parabolic_vertex(b4, 1);  // vertex 2
  CHECK_FALSE(condition_i(v));
  // stated witness: (e_2 - e_3, e_1 + e_3) = -1
  QVec w1(4), w2(4);
  w1[1] = Rat(1);
  w1[2] = Rat(-1);
  w2[0] = Rat(1);
  w2[2] = Rat(1);
  CHECK(dot(w1, w2) == Rat(-1));

  RootSystem e7 = build_root_system(CartanType::parse("E7"));
  ParabolicVertex v7 = parabolic_vertex(e7, 6);
  CHECK(condition_i(v7));
  CHECK(condition_ii(v7));
  CHECK(condition_iii(v7));
  CHECK(condition_iv(v7));

  RootSystem f4 = build_root_system(CartanType::parse("F4"));
  for (int i = 0; i < 4; ++i) {
    ParabolicVertex fv = parabolic_vertex(f4, i);
    CHECK_FALSE(condition_ii(fv));
    CHECK_FALSE(condition_iii(fv));
    CHECK_FALSE(condition_iv(fv));
  }

  RootSystem d5 = build_root_system(CartanType::parse("D5"));
  CHECK(condition_ii(parabolic_vertex(d5, 0)));
  CHECK_FALSE(condition_ii(parabolic_vertex(d5, 1)));
}

TEST_CASE("sigma_UP structure") {
  RootSystem b3 = build_root_system(CartanType::parse("B3"));
  for (int i = 0; i < 3; ++i) {
    ParabolicVertex v = parabolic_vertex(b3, i);
    // Sigma^+ = Sigma_M^+ disjoint-union Sigma_{U_P}
    int mpos = 0;
    for (const QVec& b : v.sigma_M)
      if (b3.is_positive(b)) ++mpos;
    CHECK(mpos + static_cast<int>(v.sigma_UP.size()) == b3.num_positive());
    for (const QVec& b : v.sigma_UP) CHECK(b3.coefficient_c(i, b) > 0);
    // alpha_i is the unique simple root in Sigma_{U_P}
    int simple_count = 0;
    for (const QVec& b : v.sigma_UP)
      for (const QVec& s : b3.simple)
        if (b == s) ++simple_count;
    CHECK(simple_count == 1);
  }
  CHECK_THROWS(parabolic_vertex(b3, 3));
}

TEST_CASE("recorded obtuse witnesses re-verify numerically") {
  for (const char* t : {"B4", "B6", "C4", "C6", "D5", "D6", "E6", "E7", "E8", "F4", "G2"}) {
    RootSystem sys = build_root_system(CartanType::parse(t));
    CAPTURE(t);
    for (int i = 0; i < sys.rank(); ++i) {
      auto w = recorded_obtuse_witness(sys, i);
      bool expected_black = expected_non_obtuse(sys.type).count(i + 1) != 0;
      CHECK(w.has_value() == !expected_black);
      if (!w) continue;
      auto [b1, b2] = *w;
      CHECK(sys.is_root(b1));
      CHECK(sys.is_root(b2));
      CHECK(sys.coefficient_c(i, b1) > 0);
      CHECK(sys.coefficient_c(i, b2) > 0);
      CHECK(dot(b1, b2) < Rat(0));
    }
  }
  // exact stated values
  RootSystem g2 = build_root_system(CartanType::parse("G2"));
  auto wg1 = recorded_obtuse_witness(g2, 0);
  auto wg2 = recorded_obtuse_witness(g2, 1);
  CHECK(dot(wg1->first, wg1->second) == Rat(-1));
  CHECK(dot(wg2->first, wg2->second) == Rat(-3));
  RootSystem f4 = build_root_system(CartanType::parse("F4"));
  CHECK(dot(recorded_obtuse_witness(f4, 3)->first, recorded_obtuse_witness(f4, 3)->second) ==
        Rat(-1, 2));
}

TEST_CASE("reducible systems are rejected") {
  RootSystem fake;
  fake.type = CartanType{Family::A, 2};
  fake.ambient_dim = 2;
  QVec r1 = {Rat(1), Rat(-1)}, r2 = {Rat(1), Rat(1)};
  fake.simple = {r1, r2};  // A1 x A1: orthogonal simples
  CHECK_FALSE(is_irreducible(fake));
  CHECK_THROWS(classify(fake));
}

TEST_CASE("no-cone check on A2 (non-obtuse): holds on the whole legal grid") {
  RootSystem a2 = build_root_system(CartanType::parse("A2"));
  ParabolicVertex v = parabolic_vertex(a2, 1);  // Sigma_M = {+-alpha_1}
  QVec lambda = strictly_M_positive_lambda(v);
  auto grid = no_cone_mu_grid(v, lambda);
  CHECK(grid.size() > 1);
  for (const QVec& mu : grid) CHECK(no_cone_check(v, lambda, mu) == NoConeResult::holds);
  // mu = -lambda is always legal and trivially holds
  CHECK(no_cone_check(v, lambda, -lambda) == NoConeResult::holds);
}

TEST_CASE("no-cone check fails somewhere on G2 (obtuse)") {
  RootSystem g2 = build_root_system(CartanType::parse("G2"));
  ParabolicVertex v = parabolic_vertex(g2, 1);  // Sigma_M = {+-alpha_1}
  QVec lambda = strictly_M_positive_lambda(v);
  auto grid = no_cone_mu_grid(v, lambda);
  int fails = 0, holds = 0;
  for (const QVec& mu : grid) {
    NoConeResult r = no_cone_check(v, lambda, mu);
    CHECK((r == NoConeResult::holds || r == NoConeResult::fails));
    if (r == NoConeResult::fails) ++fails;
    if (r == NoConeResult::holds) ++holds;
  }
  CHECK(fails > 0);
  CHECK(holds > 0);
}

TEST_CASE("no-cone check reports precondition violations distinctly") {
  RootSystem a2 = build_root_system(CartanType::parse("A2"));
  ParabolicVertex v = parabolic_vertex(a2, 1);
  QVec lambda = strictly_M_positive_lambda(v);
  // lambda not strictly M-positive: zero vector
  CHECK(no_cone_check(v, zero_vec(3), zero_vec(3)) == NoConeResult::precond_lambda_violated);
  // mu outside the polytope: -3*lambda is way below
  CHECK(no_cone_check(v, lambda, Rat(3) * lambda) == NoConeResult::precond_mu_violated);
}
