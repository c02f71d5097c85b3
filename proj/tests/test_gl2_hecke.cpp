#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hwb/gl2_hecke.hpp>
#include <hwb/satake_oracle.hpp>

using namespace hwb;

namespace {
LaurentScalar Q(int e, long c = 1) { return LaurentScalar::q_power(e, c); }
GL2BElement rand_b(Rng& rng, int width = 2) {
  GL2BElement x;
  for (int t = 0; t < 4; ++t)
    x.add_term({static_cast<int>(rng.next() % (width + 1)), static_cast<int>(rng.next() % (width + 1)),
                static_cast<int>(rng.range(-width, width))},
               Q(static_cast<int>(rng.range(-1, 1)), rng.range(-3, 3)));
  return x;
}
}  // namespace

TEST_CASE("defining relations of H(K_B, B)") {
  GL2BElement Xp = GL2BElement::Xp(), Xm = GL2BElement::Xm();
  CHECK(Xp * Xm == Q(1) * GL2BElement::one());                 // X+ X- = q
  CHECK(Xm * Xp == GL2BElement::mono(1, 1, 0));                // stays a basis monomial
  CHECK((Xm * Xp) * (Xm * Xp) == Q(1) * (Xm * Xp));            // (X-X+)^2 = q X-X+
  GL2BElement Y = GL2BElement::Yk(1);
  CHECK(Y * GL2BElement::Yk(-1) == GL2BElement::one());
  CHECK(Y * Xp == Xp * Y);
  CHECK(Y * Xm == Xm * Y);
  CHECK_THROWS(GL2BElement::mono(-1, 0, 0));
}

TEST_CASE("associativity on random triples") {
  Rng rng(21);
  for (int t = 0; t < 15; ++t) {
    GL2BElement a = rand_b(rng), b = rand_b(rng), c = rand_b(rng);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("double-coset basis conversion round-trips") {
  Rng rng(8);
  for (int t = 0; t < 30; ++t) {
    GL2BElement x = rand_b(rng);
    CHECK(from_dcoset_basis(to_dcoset_basis(x)) == x);
  }
  // explicit triples
  for (int a = -2; a <= 2; ++a)
    for (int c = -2; c <= 2; ++c)
      for (int b = -3; b <= std::min(a, c); ++b) {
        DCoset d{a, b, c};
        auto back = to_dcoset_basis(dcoset_to_monomials(d));
        REQUIRE(back.size() == 1);
        CHECK(back.begin()->first == d);
        CHECK(back.begin()->second == LaurentScalar(1));
      }
}

TEST_CASE("convolution oracle: pinned products") {
  for (int p : {2, 3}) {
    // (diag(pi,1)) * (diag(pi^{-1},1)) = q * (K_B)
    GL2BElement prod = coset_convolution_oracle({1, 0, 0}, {-1, -1, 0}, p);
    CHECK(prod == LaurentScalar(p) * GL2BElement::one());
    // identity coset is neutral
    DCoset idc{0, 0, 0};
    CHECK(coset_convolution_oracle(idc, {2, 0, 1}, p) == dcoset_to_monomials({2, 0, 1}));
    CHECK(coset_convolution_oracle({2, 0, 1}, idc, p) == dcoset_to_monomials({2, 0, 1}));
  }
  CHECK_THROWS(coset_convolution_oracle({0, 1, 0}, {0, 0, 0}, 2));
}

TEST_CASE("convolution oracle agrees with the presentation on a sample box") {
  std::vector<DCoset> triples;
  for (int a = -1; a <= 1; ++a)
    for (int c = -1; c <= 1; ++c)
      for (int b = -1; b <= std::min(a, c); ++b) triples.push_back({a, b, c});
  for (int p : {2, 3})
    for (const DCoset& x : triples)
      for (const DCoset& y : triples) {
        GL2BElement lhs = coset_convolution_oracle(x, y, p);
        GL2BElement rhs = gl2b_eval_q(dcoset_to_monomials(x) * dcoset_to_monomials(y), p);
        CHECK(lhs == rhs);
      }
}

TEST_CASE("oracle associativity spot-check at p = 2") {
  std::vector<DCoset> ts = {{1, 0, 0}, {0, -1, 0}, {1, -1, 2}};
  for (const DCoset& x : ts)
    for (const DCoset& y : ts) {
      // (x*y)*z vs x*(y*z) through the presentation after one oracle hop
      GL2BElement xy = coset_convolution_oracle(x, y, 2);
      GL2BElement yz = coset_convolution_oracle(y, x, 2);
      CHECK(gl2b_eval_q(xy * dcoset_to_monomials(x), 2) ==
            gl2b_eval_q(dcoset_to_monomials(x) * yz, 2));
    }
}

TEST_CASE("theta_BZ") {
  GL2BElement Xp = GL2BElement::Xp(), Xm = GL2BElement::Xm();
  CHECK(theta_BZ(Xp) == gl2_x());
  CHECK(theta_BZ(Xm) == Q(1) * gl2_x(-1));
  CHECK(theta_BZ(GL2BElement::Yk(1)) == gl2_x() * gl2_y());
  CHECK(theta_BZ(Xm * Xp - Q(1) * GL2BElement::one()).is_zero());  // kernel generator
  CHECK(theta_BZ(GL2BElement::mono(2, 0, 1)) == gl2_mono(-1, 1, Q(2)));  // X_-^2 Y
  Rng rng(3);
  for (int t = 0; t < 10; ++t) {
    GL2BElement a = rand_b(rng), b = rand_b(rng);
    CHECK(theta_BZ(a * b) == theta_BZ(a) * theta_BZ(b));
    // two-sided ideal generated by X_-X_+ - q maps to zero
    GL2BElement gen = Xm * Xp - Q(1) * GL2BElement::one();
    CHECK(theta_BZ(a * gen * b).is_zero());
  }
}

TEST_CASE("zeta_B: the definition-forced anti-involution") {
  GL2BElement Xp = GL2BElement::Xp(), Xm = GL2BElement::Xm();
  CHECK(zeta_B(Xp) == Xm);
  CHECK(zeta_B(Xm) == Xp);
  // zeta(Y) = Y^{-1}: forced by (g) -> (g^{-1}) on the central coset
  CHECK(zeta_B(GL2BElement::Yk(1)) == GL2BElement::Yk(-1));
  Rng rng(14);
  for (int t = 0; t < 12; ++t) {
    GL2BElement a = rand_b(rng), b = rand_b(rng);
    CHECK(zeta_B(zeta_B(a)) == a);
    CHECK(zeta_B(a * b) == zeta_B(b) * zeta_B(a));
  }
  // zeta maps C^+ onto C^-
  for (int m = 0; m <= 3; ++m)
    for (int k = -2; k <= 2; ++k) {
      GL2BElement c = GL2BElement::mono(0, m, k);
      CHECK(zeta_B(c).in_C_minus());
      CHECK(zeta_B(zeta_B(c)) == c);
    }
  // zeta preserves Ker Theta
  GL2BElement gen = Xm * Xp - Q(1) * GL2BElement::one();
  for (int t = 0; t < 6; ++t) {
    GL2BElement a = rand_b(rng), b = rand_b(rng);
    CHECK(theta_BZ(zeta_B(a * gen * b)).is_zero());
  }
  // Theta . zeta_B differs from zeta_Z . Theta already on X_+
  GroupAlgebraElement lhs = theta_BZ(zeta_B(Xp));  // q x^{-1}
  GroupAlgebraElement rhs = gl2_x(-1);             // zeta_Z(x) = x^{-1}
  CHECK(lhs != rhs);
}

TEST_CASE("spherical presentation, zeta_G, and the embedding") {
  GL2GElement T = GL2GElement::T(), S = GL2GElement::S();
  CHECK(zeta_G(T) == GL2GElement::mono(1, -1));
  CHECK(zeta_G(S) == GL2GElement::S(-1));
  Rng rng(6);
  for (int t = 0; t < 10; ++t) {
    GL2GElement a = GL2GElement::mono(static_cast<int>(rng.next() % 3),
                                      static_cast<int>(rng.range(-2, 2)), Q(0, rng.range(-3, 3)));
    GL2GElement b = GL2GElement::mono(static_cast<int>(rng.next() % 3),
                                      static_cast<int>(rng.range(-2, 2)));
    CHECK(zeta_G(zeta_G(a)) == a);
    CHECK(zeta_G(a * b) == zeta_G(a) * zeta_G(b));  // commutative carrier
    // compatibility square: zeta_B . epsilon = epsilon . zeta_G
    CHECK(zeta_B(epsilon_BG(a)) == epsilon_BG(zeta_G(a)));
    // Theta . epsilon = Satake
    CHECK(theta_BZ(epsilon_BG(a)) == satake_of_spherical(a));
  }
  CHECK(epsilon_BG(GL2GElement::one()) == GL2BElement::one());
  CHECK(theta_BZ(epsilon_BG(T)) == gl2_x() + Q(1) * gl2_y());
  CHECK(epsilon_BG(T * S) ==
        (GL2BElement::Xp() + GL2BElement::mono(1, 0, 1)) * GL2BElement::Yk(1));
}

TEST_CASE("satake closed form") {
  auto s10 = satake_closed_form_gl2(1, 0);
  CHECK(s10.value == gl2_x() + Q(1) * gl2_y());
  auto s11 = satake_closed_form_gl2(1, 1);
  CHECK(s11.value == gl2_x() * gl2_y());
  auto s20 = satake_closed_form_gl2(2, 0);
  CHECK(s20.value == gl2_mono(2, 0) + gl2_mono(1, 1, Q(1) - LaurentScalar(1)) + gl2_mono(0, 2, Q(2)));
  CHECK(s20.s_coords.at({2, 0}) == LaurentScalar(1));
  CHECK(s20.s_coords.at({1, 1}) == Q(1) - LaurentScalar(1));
  CHECK(s20.s_coords.size() == 2);
  CHECK_THROWS(satake_closed_form_gl2(0, 1));

  // S-basis expansion reconstitutes the value, and the triangular pattern holds
  for (int a = -1; a <= 3; ++a)
    for (int b = -3; b <= a; ++b) {
      auto cf = satake_closed_form_gl2(a, b);
      GroupAlgebraElement rebuilt(2);
      for (auto& [l, c] : cf.s_coords) {
        rebuilt = rebuilt + c * orbit_sum(l);
        CHECK(l[0] <= a);
        CHECK(l[0] + l[1] == a + b);
      }
      CHECK(rebuilt == cf.value);
      CHECK(is_star_invariant(cf.value));
    }
}

TEST_CASE("closed form equals the counting oracle at q = p") {
  for (int p : {2, 3})
    for (int a = 0; a <= 2; ++a)
      for (int b = std::max(a - 3, -1); b <= a; ++b) {
        GroupAlgebraElement counted = satake_counting_oracle({a, b}, p);
        GroupAlgebraElement closed(2);
        for (auto& [l, c] : satake_closed_form_gl2(a, b).value.terms) {
          Rat v = c.eval_at(p);
          closed.add_term(l, LaurentScalar(v.num));
        }
        CAPTURE(p);
        CAPTURE(a);
        CAPTURE(b);
        CHECK(counted == closed);
      }
}

TEST_CASE("counting oracle is covariant under central translation") {
  // (z * pi E) shifts every exponent by one; together with the spread-3 box
  // this covers all dominant classes with bounded spread
  for (int p : {2, 3})
    for (int a = 0; a <= 2; ++a)
      for (int b = a - 2; b <= a; ++b) {
        GroupAlgebraElement base = satake_counting_oracle({a, b}, p);
        GroupAlgebraElement shifted = satake_counting_oracle({a + 1, b + 1}, p);
        GroupAlgebraElement expect = base * GroupAlgebraElement::monomial({1, 1});
        CHECK(shifted == expect);
      }
}

TEST_CASE("counting oracle in GL3: the miniscule class") {
  GroupAlgebraElement v = satake_counting_oracle({1, 0, 0}, 2);
  CHECK(v.terms.size() == 3);
  CHECK(v.terms.at({1, 0, 0}) == LaurentScalar(1));
  CHECK(v.terms.at({0, 1, 0}) == LaurentScalar(2));
  CHECK(v.terms.at({0, 0, 1}) == LaurentScalar(4));
  GroupAlgebraElement one = satake_counting_oracle({0, 0, 0}, 3);
  CHECK(one == GroupAlgebraElement::one(3));
  CHECK_THROWS(satake_counting_oracle({0, 1}, 2));  // not dominant
}

TEST_CASE("satake_inverse round-trips and rejects non-images") {
  Rng rng(33);
  for (int t = 0; t < 12; ++t) {
    GL2GElement a = GL2GElement::mono(static_cast<int>(rng.next() % 4),
                                      static_cast<int>(rng.range(-3, 3)), Q(0, rng.range(-4, 4))) +
                    GL2GElement::mono(static_cast<int>(rng.next() % 4),
                                      static_cast<int>(rng.range(-3, 3)), Q(1));
    CHECK(satake_inverse(satake_of_spherical(a)) == a);
  }
  CHECK_THROWS(satake_inverse(gl2_x() + gl2_y()));  // not star-invariant, not an image
}

TEST_CASE("cone membership and sections") {
  CHECK(GL2BElement::mono(0, 2, -1).in_C_plus());
  CHECK_FALSE(GL2BElement::mono(1, 2, 0).in_C_plus());
  CHECK(GL2BElement::mono(3, 0, 2).in_C_minus());
  // Theta restricted to C^+ is injective on monomials: distinct images
  std::set<std::pair<int, int>> seen;
  for (int m = 0; m <= 3; ++m)
    for (int k = -3; k <= 3; ++k) {
      GroupAlgebraElement img = theta_BZ(GL2BElement::mono(0, m, k));
      REQUIRE(img.terms.size() == 1);
      auto l = img.terms.begin()->first;
      CHECK(seen.insert({l[0], l[1]}).second);
    }
  // sections invert Theta on the cones
  for (int m = 0; m <= 3; ++m)
    for (int k = -2; k <= 2; ++k) {
      GL2BElement cp = GL2BElement::mono(0, m, k, Q(1, 3));
      CHECK(lift_to_C_plus(theta_BZ(cp)) == cp);
      GL2BElement cm = GL2BElement::mono(m, 0, k, Q(2, 5));
      CHECK(lift_to_C_minus(theta_BZ(cm)) == cm);
    }
  CHECK_THROWS(lift_to_C_plus(gl2_mono(-1, 0)));
  CHECK_THROWS(lift_to_C_minus(gl2_mono(1, 0)));
}
