#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hwb/local_field.hpp>

using namespace hwb;

TEST_CASE("FpPoly arithmetic") {
  FpPoly a(3, {1, 2});      // 1 + 2pi
  FpPoly b(3, {2, 2, 1});   // 2 + 2pi + pi^2
  CHECK((a + b) == FpPoly(3, {0, 1, 1}));
  CHECK((a * b) == FpPoly(3, {2, 0, 2, 2}));
  CHECK((a - a).is_zero());
  FpPoly q, r;
  FpPoly::divmod(b, a, q, r);
  CHECK(b == q * a + r);
  CHECK(r.degree() < a.degree());
  // gcd is monic
  FpPoly g = FpPoly::gcd(a * b, a);
  CHECK(g.leading() == 1);
  FpPoly qq, rr;
  FpPoly::divmod(a, g, qq, rr);
  CHECK(rr.is_zero());
  CHECK(FpPoly(3, {1, 2}).str() == "1+2*pi");
  CHECK(FpPoly(2, {0, 0, 1}).str() == "pi^2");
}

TEST_CASE("LocalScalar valuation axioms") {
  int p = 5;
  // val(pi^3/(1+pi)) = 3
  LocalScalar x(FpPoly::monomial(p, 3), FpPoly(p, {1, 1}));
  CHECK(x.val() == 3);
  CHECK(LocalScalar::zero(p).val() == kValInfinity);
  CHECK(LocalScalar::pi_power(p, -4).val() == -4);

  Rng rng(17);
  auto sample = [&]() {
    std::vector<int> num(1 + rng.next() % 4), den(1 + rng.next() % 4);
    for (int& c : num) c = static_cast<int>(rng.next() % p);
    for (int& c : den) c = static_cast<int>(rng.next() % p);
    FpPoly d(p, den);
    if (d.is_zero()) d = FpPoly::constant(p, 1);
    return LocalScalar(FpPoly(p, num), d);
  };
  for (int t = 0; t < 200; ++t) {
    LocalScalar a = sample(), b = sample();
    if (!a.is_zero() && !b.is_zero()) CHECK((a * b).val() == a.val() + b.val());
    LocalScalar s = a + b;
    if (!s.is_zero()) CHECK(s.val() >= std::min(a.val(), b.val()));
    if (!a.is_zero()) {
      CHECK((a * a.inverse()) == LocalScalar::one(p));
      CHECK(a.inverse().val() == -a.val());
    }
    CHECK((a - a).is_zero());
    // normalized: denominator monic and coprime to numerator
    CHECK(s.den.leading() == 1);
    CHECK(FpPoly::gcd(s.num, s.den).degree() <= 0);
  }
}

TEST_CASE("LocalScalar exact division chain") {
  int p = 2;
  LocalScalar a(FpPoly(p, {1, 1, 1}), FpPoly::constant(p, 1));
  LocalScalar b(FpPoly(p, {1, 1}), FpPoly(p, {1, 0, 1}));
  LocalScalar c = (a / b) * b;
  CHECK(c == a);
  CHECK_THROWS(a / LocalScalar::zero(p));
}
