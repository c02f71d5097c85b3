#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hwb/json_io.hpp>

using namespace hwb;
using nlohmann::json;

TEST_CASE("root system and weyl serialization, frozen bytes for A1") {
  RootSystem a1 = build_root_system(CartanType::parse("A1"));
  std::string got = root_system_to_json(a1).dump();
  std::string expect =
      R"({"ambient_dim":2,"rank":1,"roots":[["-1","1"],["1","-1"]],)"
      R"("schema":"hwb/root-system/1","simple_roots":[["1","-1"]],"type":"A1"})";
  CHECK(got == expect);

  WeylElement w0 = longest_word(a1);
  std::string wgot = weyl_to_json(w0).dump();
  CHECK(wgot == R"({"matrix":[["0","1"],["1","0"]],"schema":"hwb/weyl/1","word":[1]})");
}

TEST_CASE("exact rationals serialize as num/den strings") {
  RootSystem e6 = build_root_system(CartanType::parse("E6"));
  json j = root_system_to_json(e6);
  bool found_half = false;
  for (const json& row : j["simple_roots"])
    for (const json& entry : row)
      if (entry.get<std::string>() == "1/2") found_half = true;
  CHECK(found_half);
}

TEST_CASE("group algebra elements round-trip through JSON") {
  GroupAlgebraElement x =
      gl2_mono(2, -1, LaurentScalar::q_power(-1, 3) + LaurentScalar(4)) + gl2_mono(0, 0);
  json j = group_algebra_to_json(x);
  CHECK(j["schema"] == "hwb/lambda-element/1");
  CHECK(group_algebra_from_json(j) == x);
  // canonical ordering: terms sorted lexicographically by lambda
  CHECK(j["terms"][0]["lambda"] == json::array({0, 0}));
  CHECK(j["terms"][1]["lambda"] == json::array({2, -1}));
}

TEST_CASE("matrix entries print with the uniformizer symbol") {
  GMatrix g(2, 3);
  g.at(0, 0) = LocalScalar(FpPoly(3, {1, 0, 0, 2}), FpPoly::constant(3, 1));  // 1 + 2 pi^3
  g.at(1, 1) = LocalScalar::one(3);
  json j = gmatrix_to_json(g);
  CHECK(j["p"] == 3);
  CHECK(j["entries"][0][0] == "1+2*\xcf\x80^3");
  CHECK(j["entries"][0][1] == "0");
}

TEST_CASE("hecke polynomial JSON round-trips on both carriers") {
  Gl2Chi chi = gl2_chi_borel();
  json sph = poly_to_json(chi.spherical);
  CHECK(sph["carrier"] == "gl2g");
  CHECK(spherical_poly_from_json(sph) == chi.spherical);
  json lam = poly_to_json(chi.tilde);
  CHECK(lam["carrier"] == "lambda");
  CHECK(lambda_poly_from_json(lam) == chi.tilde);
  json bor = poly_to_json(chi.embedded);
  CHECK(bor["carrier"] == "gl2b");
  std::vector<GL2BElement> back;
  for (const json& c : bor["coeffs"]) back.push_back(gl2b_from_json(c));
  CHECK(BorelPoly(back) == chi.embedded);
}

TEST_CASE("decompose request documents parse and run") {
  Gl2Chi chi = gl2_chi_borel();
  json req;
  req["d"] = poly_to_json(chi.spherical);
  req["f_tilde"] = poly_to_json(
      LambdaPoly({GroupAlgebraElement::one(2), -(LaurentScalar::q_power(-1) * gl2_y(-1))}));
  req["g_tilde"] = poly_to_json(LambdaPoly({GroupAlgebraElement::one(2), -gl2_x(-1)}));
  req["side"] = "minusC";
  SphericalPoly d = spherical_poly_from_json(req["d"]);
  LambdaPoly ft = lambda_poly_from_json(req["f_tilde"]);
  LambdaPoly gt = lambda_poly_from_json(req["g_tilde"]);
  DecomposeResult res = decompose(d, ft, gt, ConeSide::minusC);
  CHECK(res.f * res.g == chi.embedded);
  json out = decompose_result_to_json(res);
  CHECK(out["transcript"].size() >= 4);
}

TEST_CASE("laurent scalars round-trip") {
  LaurentScalar c = LaurentScalar::q_power(-2, 7) - LaurentScalar(5);
  CHECK(laurent_from_json(laurent_to_json(c)) == c);
  CHECK(laurent_to_json(LaurentScalar()).empty());
}
