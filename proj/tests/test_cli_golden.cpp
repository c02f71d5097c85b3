// Byte-stability and exit-code tests for the CLI, against frozen golden files.
// Usage: test_cli_golden <path-to-heckewb> <golden-dir>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <hwb/json_io.hpp>

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& cmd) {
  std::array<char, 4096> buf;
  std::string out;
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) return {-1, ""};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int failures = 0;

void check(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    std::cerr << "FAIL: " << what << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: test_cli_golden <heckewb> <golden-dir>\n";
    return 1;
  }
  std::string bin = argv[1];
  std::string dir = argv[2];

  struct Golden {
    const char* file;
    const char* args;
  };
  std::vector<Golden> goldens = {
      {"classify_g2.json", "--json classify --type G2"},
      {"satake_gl2_20.json", "--json satake --gl 2 --lambda 2,0"},
      {"chi_gl2_borel.json", "--json chi --gl2-borel"},
      {"decompose_ex521.json", "--json decompose --fixture ex521"},
      {"reduce_gl2_seed5.json", "--json reduce --gl 2 --seed 5"},
  };

  for (const Golden& g : goldens) {
    RunResult r1 = run(bin + " " + g.args);
    check(r1.exit_code == 0, std::string(g.args) + ": exit code " + std::to_string(r1.exit_code));
    std::string expect = slurp(dir + "/" + g.file);
    check(!expect.empty(), std::string(g.file) + ": golden file missing or empty");
    check(r1.output == expect, std::string(g.args) + ": output differs from " + g.file);
    // determinism: identical bytes on a second run
    RunResult r2 = run(bin + " " + g.args);
    check(r1.output == r2.output, std::string(g.args) + ": output not byte-stable");
  }

  // decompose --input: the parsed-document route matches the fixture bytes
  {
    using namespace hwb;
    Gl2Chi chi = gl2_chi_borel();
    nlohmann::json req;
    req["d"] = poly_to_json(chi.spherical);
    req["f_tilde"] = poly_to_json(
        LambdaPoly({GroupAlgebraElement::one(2), -(LaurentScalar::q_power(-1) * gl2_y(-1))}));
    req["g_tilde"] = poly_to_json(LambdaPoly({GroupAlgebraElement::one(2), -gl2_x(-1)}));
    req["side"] = "plusC";
    std::string tmp = dir + "/../.tmp_decompose_input.json";
    std::ofstream(tmp) << req.dump();
    RunResult r = run(bin + " --json decompose --input " + tmp);
    check(r.exit_code == 0, "decompose --input exit code");
    check(r.output == slurp(dir + "/decompose_ex521.json"),
          "decompose --input differs from the fixture output");
    req["side"] = "minusC";
    std::ofstream(tmp) << req.dump();
    check(run(bin + " decompose --input " + tmp).exit_code == 0, "decompose minusC side");
    std::remove(tmp.c_str());
  }

  // exit code contract: 2 on usage errors
  check(run(bin + " classify --type H9").exit_code == 2, "bad type should exit 2");
  check(run(bin + " verify --suite nope --seed 1").exit_code == 2, "bad suite should exit 2");
  check(run(bin + " decompose").exit_code == 2, "decompose without input should exit 2");
  check(run(bin + " satake --gl 3 --lambda 5,0,-5 -p 2").exit_code == 2,
        "oversized oracle request should exit 2");
  check(run(bin + " satake --gl 2 --lambda 0,1").exit_code == 2,
        "non-dominant lambda should exit 2");

  // the human-readable table is a rendering of the same data
  RunResult table = run(bin + " classify --type B4");
  check(table.exit_code == 0 && table.output.find("non-obtuse vertices: a1 a4") != std::string::npos,
        "classify table rendering");

  if (failures == 0) std::cout << "cli golden: all checks passed\n";
  return failures;
}
