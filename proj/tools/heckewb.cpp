#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include <hwb/json_io.hpp>
#include <hwb/satake_oracle.hpp>

using namespace hwb;
using nlohmann::json;

namespace {

std::string group_algebra_str(const GroupAlgebraElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = x.terms.rbegin(); it != x.terms.rend(); ++it) {
    const auto& [l, c] = *it;
    if (!first) out += " + ";
    first = false;
    out += "(" + c.str() + ")";
    static const char* names2[] = {"x", "y"};
    for (std::size_t i = 0; i < l.size(); ++i) {
      if (l[i] == 0) continue;
      out += "*";
      out += l.size() == 2 ? names2[i] : ("x" + std::to_string(i + 1));
      if (l[i] != 1) out += "^" + std::to_string(l[i]);
    }
  }
  return out;
}

std::string spherical_str(const GL2GElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto& [mo, c] : x.terms) {
    if (!first) out += " + ";
    first = false;
    out += "(" + c.str() + ")";
    if (mo.m) out += "*T^" + std::to_string(mo.m);
    if (mo.k) out += "*S^" + std::to_string(mo.k);
  }
  return out;
}

template <class Poly, class Str>
std::string poly_str(const Poly& f, Str coeff_str) {
  std::string out;
  for (int i = 0; i <= f.degree(); ++i) {
    if (i) out += " + ";
    out += "[" + coeff_str(f.coeff(i)) + "]";
    if (i) out += "*t^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::string cur;
  for (char ch : s + ",") {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  return out;
}

struct Emitter {
  bool as_json = false;
  bool with_timing = false;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void emit(const std::string& command, const json& results, const std::string& text,
            std::uint64_t seed = 0, bool have_seed = false) {
    if (as_json) {
      json env;
      env["schema"] = "hwb/run/1";
      env["command"] = command;
      if (have_seed) env["seed"] = seed;
      env["results"] = results;
      if (with_timing) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        env["timing_ms"] = ms;
      }
      std::cout << env.dump(2) << "\n";
    } else {
      std::cout << text;
    }
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hecke-workbench: exact computations in parabolic Hecke algebras over GL_n"};
  app.require_subcommand(1);
  bool as_json = false, with_timing = false;
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_flag("--timing", with_timing, "include timing in JSON output (breaks byte-stability)");

  // classify
  auto* cmd_classify = app.add_subcommand("classify", "non-obtuse classification of a Dynkin type");
  std::string type_str;
  cmd_classify->add_option("--type", type_str, "Cartan type, e.g. B4")->required();

  // satake
  auto* cmd_satake = app.add_subcommand("satake", "Satake image of a Cartan basis element");
  int sat_n = 2, sat_p = 0;
  std::string sat_lambda;
  bool sat_symbolic = false;
  cmd_satake->add_option("--gl", sat_n, "group GL_n, n in {2,3}")->required();
  cmd_satake->add_option("--lambda", sat_lambda, "dominant cocharacter a,b[,c]")->required();
  cmd_satake->add_option("-p", sat_p, "residue cardinality for the counting oracle");
  cmd_satake->add_flag("--symbolic", sat_symbolic, "closed form in q (GL_2 only)");

  // chi
  auto* cmd_chi = app.add_subcommand("chi", "the Hecke polynomial chi_{a_P}(t)");
  bool chi_gl2_borel = false;
  std::string chi_blocks, chi_lambda;
  int chi_p = 0;
  cmd_chi->add_flag("--gl2-borel", chi_gl2_borel, "the worked GL_2 Borel case");
  cmd_chi->add_option("--blocks", chi_blocks, "parabolic block sizes, e.g. 2,1");
  cmd_chi->add_option("--lambda-p", chi_lambda, "strictly M-positive lambda_P");
  cmd_chi->add_option("-p", chi_p, "lift coefficients through the counting oracle at p");

  // decompose
  auto* cmd_dec = app.add_subcommand("decompose", "decompose a spherical Hecke polynomial");
  std::string dec_fixture, dec_input;
  cmd_dec->add_option("--fixture", dec_fixture, "built-in input: ex521 or qpoly");
  cmd_dec->add_option("--input", dec_input, "JSON file with d, f_tilde, g_tilde, side");

  // reduce
  auto* cmd_red = app.add_subcommand("reduce", "run the coset reduction on a seeded instance");
  int red_n = 2, red_p = 2;
  std::uint64_t red_seed = 0;
  long red_count = 1;
  cmd_red->add_option("--gl", red_n, "group GL_n");
  cmd_red->add_option("-p", red_p, "residue cardinality");
  cmd_red->add_option("--seed", red_seed, "instance seed")->required();
  cmd_red->add_option("--count", red_count, "number of consecutive instances");

  // verify
  auto* cmd_ver = app.add_subcommand("verify", "run a named verification suite");
  std::string ver_suite = "all";
  std::uint64_t ver_seed = 0;
  cmd_ver->add_option("--suite", ver_suite,
                      "rootsys | nonobtuse | lambda | padic | reduction | hecke | all");
  cmd_ver->add_option("--seed", ver_seed, "suite seed")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Emitter out;
  out.as_json = as_json;
  out.with_timing = with_timing;

  try {
    if (*cmd_classify) {
      RootSystem sys = build_root_system(CartanType::parse(type_str));
      ClassificationReport rep = classify(sys);
      out.emit("classify", classification_to_json(rep), classification_to_text(rep));
      return 0;
    }

    if (*cmd_satake) {
      LambdaVector l = [&] {
        auto v = parse_int_list(sat_lambda);
        return LambdaVector(v.begin(), v.end());
      }();
      if (static_cast<int>(l.size()) != sat_n || (sat_n != 2 && sat_n != 3))
        throw std::invalid_argument("satake: need --gl in {2,3} matching --lambda length");
      if (!is_dominant_lambda(l)) throw std::invalid_argument("satake: lambda must be dominant");
      GroupAlgebraElement value;
      std::string mode;
      if (sat_n == 2 && (sat_symbolic || sat_p == 0)) {
        value = satake_closed_form_gl2(l[0], l[1]).value;
        mode = "symbolic";
      } else {
        if (sat_p == 0) throw std::invalid_argument("satake: GL_3 requires -p");
        value = satake_counting_oracle(l, sat_p);
        mode = "counted at p=" + std::to_string(sat_p);
      }
      json res;
      res["mode"] = mode;
      res["value"] = group_algebra_to_json(value);
      out.emit("satake", res, group_algebra_str(value) + "\n");
      return 0;
    }

    if (*cmd_chi) {
      if (chi_gl2_borel || chi_blocks.empty()) {
        Gl2Chi chi = gl2_chi_borel();
        json res;
        res["tilde"] = poly_to_json(chi.tilde);
        res["spherical"] = poly_to_json(chi.spherical);
        res["embedded"] = poly_to_json(chi.embedded);
        res["hypothesis_holds"] = hypothesis_check(chi.embedded);
        std::string text;
        text += "chi~(t)   = " + poly_str(chi.tilde, group_algebra_str) + "\n";
        text += "chi(t)    = " + poly_str(chi.spherical, spherical_str) + "\n";
        text += "in H(K_B,B): " +
                poly_str(chi.embedded, [](const GL2BElement& x) { return x.str(); }) + "\n";
        text += std::string("left root X_+: ") +
                (hypothesis_check(chi.embedded) ? "yes" : "NO") + "\n";
        out.emit("chi", res, text);
        return 0;
      }
      StandardParabolic par(parse_int_list(chi_blocks));
      auto lv = parse_int_list(chi_lambda);
      LambdaVector lp(lv.begin(), lv.end());
      LambdaPoly tilde = chi_tilde(par, lp);
      json res;
      res["tilde"] = poly_to_json(tilde);
      std::string text = "chi~(t) = " + poly_str(tilde, group_algebra_str) + "\n";
      if (chi_p) {
        json lifts = json::array();
        for (int i = 1; i <= tilde.degree(); ++i) {
          CartanCoords cc = cartan_coordinates_at_p(tilde.coeff(i), chi_p);
          json t = json::array();
          for (auto& [d, c] : cc.coeffs) t.push_back({{"class", d}, {"coeff", c.str()}});
          lifts.push_back(t);
          text += "X_" + std::to_string(i) + " in the Cartan basis at p=" +
                  std::to_string(chi_p) + ":";
          for (auto& [d, c] : cc.coeffs) {
            text += " + " + c.str() + "*(";
            for (std::size_t a = 0; a < d.size(); ++a)
              text += (a ? "," : "") + std::to_string(d[a]);
            text += ")_K";
          }
          text += "\n";
        }
        res["cartan_lift_p"] = chi_p;
        res["cartan_lifts"] = lifts;
      }
      out.emit("chi", res, text);
      return 0;
    }

    if (*cmd_dec) {
      SphericalPoly d;
      LambdaPoly f_tilde, g_tilde;
      ConeSide side = ConeSide::plusC;
      if (dec_fixture == "ex521") {
        Gl2Chi chi = gl2_chi_borel();
        d = chi.spherical;
        f_tilde = LambdaPoly({GroupAlgebraElement::one(2),
                              -(LaurentScalar::q_power(-1) * gl2_y(-1))});
        g_tilde = LambdaPoly({GroupAlgebraElement::one(2), -gl2_x(-1)});
      } else if (dec_fixture == "qpoly") {
        d = SphericalPoly({GL2GElement::one(), -GL2GElement::T(),
                           LaurentScalar::q_power(1) * GL2GElement::S()});
        f_tilde = LambdaPoly({GroupAlgebraElement::one(2), -gl2_x()});
        g_tilde = LambdaPoly({GroupAlgebraElement::one(2),
                              -(LaurentScalar::q_power(1) * gl2_y())});
      } else if (!dec_input.empty()) {
        std::ifstream in(dec_input);
        if (!in) throw std::invalid_argument("decompose: cannot open " + dec_input);
        json j = json::parse(in);
        d = spherical_poly_from_json(j.at("d"));
        f_tilde = lambda_poly_from_json(j.at("f_tilde"));
        g_tilde = lambda_poly_from_json(j.at("g_tilde"));
        if (j.value("side", "plusC") == std::string("minusC")) side = ConeSide::minusC;
      } else {
        throw std::invalid_argument("decompose: need --fixture or --input");
      }
      DecomposeResult res = decompose(d, f_tilde, g_tilde, side);
      std::string text;
      text += "f(t) = " + poly_str(res.f, [](const GL2BElement& x) { return x.str(); }) + "\n";
      text += "g(t) = " + poly_str(res.g, [](const GL2BElement& x) { return x.str(); }) + "\n";
      for (auto& [name, ok] : res.transcript)
        text += std::string(ok ? "ok   " : "FAIL ") + name + "\n";
      out.emit("decompose", decompose_result_to_json(res), text);
      return 0;
    }

    if (*cmd_red) {
      Rng rng(red_seed);
      json runs = json::array();
      std::string text;
      for (long t = 0; t < red_count; ++t) {
        GMatrix u = verify_detail::random_unipotent(rng, red_n, red_p, -3, 3);
        LambdaVector lp(red_n);
        for (int& x : lp) x = static_cast<int>(rng.range(-3, 3));
        GMatrix z_prime = GMatrix::diag_pi(lp, red_p);
        LambdaVector lz = z_minus_representative(u * z_prime);
        ReductionOptions opt;
        opt.check_cosets = true;
        ReductionTrace tr = run_reduction(u, z_prime, lz, opt);
        json r;
        r["instance"] = {{"u", gmatrix_to_json(u)}, {"z_prime", lp}, {"z", lz}};
        r["trace"] = trace_to_json(tr);
        runs.push_back(r);
        text += trace_to_text(tr);
      }
      json res;
      res["runs"] = runs;
      out.emit("reduce", res, text, red_seed, true);
      return 0;
    }

    if (*cmd_ver) {
      CheckReport rep = run_suite(ver_suite, ver_seed);
      std::string text = "suite " + rep.suite + ": " + std::to_string(rep.checks) + " checks, " +
                         std::to_string(rep.violations.size()) + " violations\n";
      for (const std::string& v : rep.violations) text += "  VIOLATION: " + v + "\n";
      out.emit("verify", check_report_to_json(rep), text, ver_seed, true);
      return rep.ok() ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
