#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hwb/laurent.hpp>
#include <hwb/rational.hpp>

using namespace hwb;

TEST_CASE("rational arithmetic and normalization") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-2, -4) == Rat(1, 2));
  CHECK(Rat(2, -4) == Rat(-1, 2));
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(1, 2) * Rat(2, 3) == Rat(1, 3));
  CHECK(Rat(1, 2) / Rat(1, 4) == Rat(2));
  CHECK(Rat(7).str() == "7");
  CHECK(Rat(-1, 2).str() == "-1/2");
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK_THROWS(Rat(1, 0));
}

TEST_CASE("linear solver") {
  // x + y = 3, x - y = 1
  QMat a = {{Rat(1), Rat(1)}, {Rat(1), Rat(-1)}};
  QVec b = {Rat(3), Rat(1)};
  QVec x;
  REQUIRE(solve_linear(a, b, x));
  CHECK(x[0] == Rat(2));
  CHECK(x[1] == Rat(1));

  // inconsistent overdetermined system
  QMat a2 = {{Rat(1)}, {Rat(1)}};
  QVec b2 = {Rat(1), Rat(2)};
  CHECK_FALSE(solve_linear(a2, b2, x));
}

TEST_CASE("laurent scalars") {
  LaurentScalar q = LaurentScalar::q_power(1);
  LaurentScalar one(1);
  CHECK((q * LaurentScalar::q_power(-1)) == one);
  CHECK((q + q) == LaurentScalar::q_power(1, 2));
  CHECK((q - q).is_zero());
  LaurentScalar s = q * q - LaurentScalar(3) * q + LaurentScalar(2);
  CHECK(s.eval_at(2) == Rat(0));
  CHECK(s.eval_at(3) == Rat(2));
  CHECK(LaurentScalar::q_power(-2, 4).shift_div(-1, 2) == LaurentScalar::q_power(-1, 2));
  CHECK(s.str() == "q^2 - 3*q + 2");
  int e = 0;
  CHECK(q.is_q_power(&e));
  CHECK(e == 1);
  CHECK_FALSE(s.is_q_power());
}

TEST_CASE("seeded rng is deterministic") {
  Rng a(42), b(42);
  for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
  Rng c(7);
  for (int i = 0; i < 100; ++i) {
    auto v = c.range(-3, 3);
    CHECK(v >= -3);
    CHECK(v <= 3);
  }
}
