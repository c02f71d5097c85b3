#pragma once

#include <json.hpp>

#include "coset_reduction.hpp"
#include "hecke_poly.hpp"
#include "nonobtuse.hpp"
#include "verify.hpp"

namespace hwb {

using nlohmann::json;

inline std::string rat_str(const Rat& r) { return r.str(); }

inline json qvec_to_json(const QVec& v) {
  json a = json::array();
  for (const Rat& x : v) a.push_back(x.str());
  return a;
}

inline json laurent_to_json(const LaurentScalar& c) {
  json o = json::object();
  for (auto& [e, v] : c.c) o[std::to_string(e)] = v;
  return o;
}

inline LaurentScalar laurent_from_json(const json& o) {
  LaurentScalar c;
  for (auto it = o.begin(); it != o.end(); ++it) {
    long long v = it.value().get<long long>();
    if (v != 0) c.c[std::stoi(it.key())] = v;
  }
  return c;
}

inline json root_system_to_json(const RootSystem& sys) {
  json j;
  j["schema"] = "hwb/root-system/1";
  j["type"] = sys.type.str();
  j["rank"] = sys.rank();
  j["ambient_dim"] = sys.ambient_dim;
  json simples = json::array();
  for (const QVec& a : sys.simple) simples.push_back(qvec_to_json(a));
  j["simple_roots"] = simples;
  json roots = json::array();
  for (const QVec& r : sys.roots) roots.push_back(qvec_to_json(r));
  j["roots"] = roots;
  return j;
}

inline json weyl_to_json(const WeylElement& w) {
  json j;
  j["schema"] = "hwb/weyl/1";
  json m = json::array();
  for (const QVec& row : w.matrix) m.push_back(qvec_to_json(row));
  j["matrix"] = m;
  if (w.word) {
    json ws = json::array();
    for (int i : *w.word) ws.push_back(i + 1);  // 1-based in documents
    j["word"] = ws;
  }
  return j;
}

inline json classification_to_json(const ClassificationReport& rep) {
  json j;
  j["schema"] = "hwb/classify/1";
  j["type"] = rep.type.str();
  json vs = json::array();
  for (const VertexReport& v : rep.vertices) {
    json e;
    e["vertex"] = v.i + 1;
    e["cond_i"] = v.cond_i;
    e["cond_ii"] = v.cond_ii;
    e["cond_iii"] = v.cond_iii;
    e["cond_iv"] = v.cond_iv;
    e["non_obtuse"] = v.non_obtuse;
    vs.push_back(e);
  }
  j["vertices"] = vs;
  return j;
}

// plain-text rendering of the same data, aligned columns
inline std::string classification_to_text(const ClassificationReport& rep) {
  std::string out = "type " + rep.type.str() + "\n";
  out += "vertex  cond_i  cond_ii  cond_iii  cond_iv  non_obtuse\n";
  auto cell = [](bool b, int w) {
    std::string s = b ? "yes" : "no";
    while (static_cast<int>(s.size()) < w) s += ' ';
    return s;
  };
  for (const VertexReport& v : rep.vertices) {
    std::string idx = "a" + std::to_string(v.i + 1);
    while (idx.size() < 8) idx += ' ';
    out += idx + cell(v.cond_i, 8) + cell(v.cond_ii, 9) + cell(v.cond_iii, 10) +
           cell(v.cond_iv, 9) + cell(v.non_obtuse, 0) + "\n";
  }
  out += "non-obtuse vertices:";
  bool any = false;
  for (int i : rep.non_obtuse_vertices()) {
    out += " a" + std::to_string(i + 1);
    any = true;
  }
  if (!any) out += " none";
  out += "\n";
  return out;
}

inline json group_algebra_to_json(const GroupAlgebraElement& x) {
  json j;
  j["schema"] = "hwb/lambda-element/1";
  j["n"] = x.n;
  json terms = json::array();
  for (auto& [l, c] : x.terms) {  // map order: lexicographic on lambda
    json t;
    t["lambda"] = l;
    t["coeff"] = laurent_to_json(c);
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

inline GroupAlgebraElement group_algebra_from_json(const json& j) {
  GroupAlgebraElement x(j.at("n").get<int>());
  for (const json& t : j.at("terms")) {
    LambdaVector l = t.at("lambda").get<std::vector<int>>();
    x.add_term(l, laurent_from_json(t.at("coeff")));
  }
  return x;
}

inline std::string local_scalar_str_pi(const LocalScalar& x) {
  std::string s = x.str();
  std::string out;
  for (std::size_t i = 0; i < s.size();) {
    if (s.compare(i, 2, "pi") == 0) {
      out += "\xcf\x80";  // UTF-8 pi
      i += 2;
    } else {
      out += s[i++];
    }
  }
  return out;
}

inline json gmatrix_to_json(const GMatrix& g) {
  json j;
  j["schema"] = "hwb/gmatrix/1";
  j["p"] = g.p;
  j["n"] = g.n;
  json rows = json::array();
  for (int i = 0; i < g.n; ++i) {
    json row = json::array();
    for (int c = 0; c < g.n; ++c) row.push_back(local_scalar_str_pi(g.at(i, c)));
    rows.push_back(row);
  }
  j["entries"] = rows;
  return j;
}

inline json trace_to_json(const ReductionTrace& tr) {
  json j;
  j["schema"] = "hwb/trace/1";
  json steps = json::array();
  for (const StepRecord& s : tr.steps) {
    json e;
    e["k"] = s.k;
    e["beta"] = {s.beta.first + 1, s.beta.second + 1};
    e["beta_positive"] = s.beta_positive;
    e["case"] = s.tag == AlgCase::Alg1 ? "Alg1" : s.tag == AlgCase::Alg2 ? "Alg2" : "Alg3";
    if (s.phi == kValInfinity) e["phi"] = nullptr;
    else e["phi"] = s.phi;
    if (s.f_k) e["f_k"] = *s.f_k;
    e["nu_z"] = s.nu_z;
    steps.push_back(e);
  }
  j["steps"] = steps;
  j["terminated"] = tr.terminated;
  j["final_nu"] = tr.final_nu;
  j["tallies"] = {{"alg1", tr.alg1}, {"alg2", tr.alg2}, {"alg3", tr.alg3}};
  return j;
}

inline std::string trace_to_text(const ReductionTrace& tr) {
  std::string out = "   k  case   beta      phi    f_k   nu(z)\n";
  for (const StepRecord& s : tr.steps) {
    char buf[160];
    std::string beta = "e" + std::to_string(s.beta.first + 1) + "-e" + std::to_string(s.beta.second + 1);
    std::string phi = s.phi == kValInfinity ? "inf" : std::to_string(s.phi);
    std::string fk = s.f_k ? std::to_string(*s.f_k) : "";
    std::string nus;
    for (int x : s.nu_z) nus += (nus.empty() ? "" : ",") + std::to_string(x);
    std::snprintf(buf, sizeof buf, "%4ld  %-5s  %-8s  %-5s  %-4s  (%s)\n", s.k,
                  s.tag == AlgCase::Alg1 ? "Alg1" : s.tag == AlgCase::Alg2 ? "Alg2" : "Alg3",
                  beta.c_str(), phi.c_str(), fk.c_str(), nus.c_str());
    out += buf;
  }
  std::string fin;
  for (int x : tr.final_nu) fin += (fin.empty() ? "" : ",") + std::to_string(x);
  out += "terminated with nu(z) = (" + fin + ")\n";
  return out;
}

inline json harness_report_to_json(const TheoremHarnessReport& rep) {
  json j;
  j["schema"] = "hwb/harness/1";
  j["samples"] = rep.samples;
  j["z_classes"] = rep.z_classes;
  j["tallies"] = {{"alg1", rep.alg1}, {"alg2", rep.alg2}, {"alg3", rep.alg3}};
  json vs = json::array();
  for (const HarnessViolation& v : rep.violations) {
    json e;
    e["what"] = v.what;
    e["seed"] = v.seed;
    e["z"] = v.z;
    vs.push_back(e);
  }
  j["violations"] = vs;
  return j;
}

// --- Hecke polynomials ------------------------------------------------------

inline json gl2b_to_json(const GL2BElement& x) {
  json terms = json::array();
  for (auto& [mo, c] : x.terms) {
    json t;
    t["n"] = mo.n;
    t["m"] = mo.m;
    t["k"] = mo.k;
    t["coeff"] = laurent_to_json(c);
    terms.push_back(t);
  }
  return terms;
}

inline GL2BElement gl2b_from_json(const json& terms) {
  GL2BElement x;
  for (const json& t : terms)
    x.add_term({t.at("n").get<int>(), t.at("m").get<int>(), t.at("k").get<int>()},
               laurent_from_json(t.at("coeff")));
  return x;
}

inline json gl2g_to_json(const GL2GElement& x) {
  json terms = json::array();
  for (auto& [mo, c] : x.terms) {
    json t;
    t["m"] = mo.m;
    t["k"] = mo.k;
    t["coeff"] = laurent_to_json(c);
    terms.push_back(t);
  }
  return terms;
}

inline GL2GElement gl2g_from_json(const json& terms) {
  GL2GElement x;
  for (const json& t : terms)
    x.add_term({t.at("m").get<int>(), t.at("k").get<int>()}, laurent_from_json(t.at("coeff")));
  return x;
}

inline json poly_to_json(const BorelPoly& f) {
  json j;
  j["schema"] = "hwb/hecke-poly/1";
  j["carrier"] = "gl2b";
  json cs = json::array();
  for (int i = 0; i <= f.degree(); ++i) cs.push_back(gl2b_to_json(f.coeff(i)));
  j["coeffs"] = cs;
  return j;
}

inline json poly_to_json(const SphericalPoly& f) {
  json j;
  j["schema"] = "hwb/hecke-poly/1";
  j["carrier"] = "gl2g";
  json cs = json::array();
  for (int i = 0; i <= f.degree(); ++i) cs.push_back(gl2g_to_json(f.coeff(i)));
  j["coeffs"] = cs;
  return j;
}

inline json poly_to_json(const LambdaPoly& f) {
  json j;
  j["schema"] = "hwb/hecke-poly/1";
  j["carrier"] = "lambda";
  json cs = json::array();
  for (int i = 0; i <= f.degree(); ++i) cs.push_back(group_algebra_to_json(f.coeff(i)));
  j["coeffs"] = cs;
  return j;
}

inline SphericalPoly spherical_poly_from_json(const json& j) {
  if (j.at("carrier") != "gl2g") throw std::invalid_argument("expected gl2g carrier");
  std::vector<GL2GElement> cs;
  for (const json& c : j.at("coeffs")) cs.push_back(gl2g_from_json(c));
  return SphericalPoly(std::move(cs));
}

inline LambdaPoly lambda_poly_from_json(const json& j) {
  if (j.at("carrier") != "lambda") throw std::invalid_argument("expected lambda carrier");
  std::vector<GroupAlgebraElement> cs;
  for (const json& c : j.at("coeffs")) cs.push_back(group_algebra_from_json(c));
  return LambdaPoly(std::move(cs));
}

inline json decompose_result_to_json(const DecomposeResult& res) {
  json j;
  j["schema"] = "hwb/decompose/1";
  j["f"] = poly_to_json(res.f);
  j["g"] = poly_to_json(res.g);
  json checks = json::array();
  for (auto& [name, ok] : res.transcript) checks.push_back({{"check", name}, {"ok", ok}});
  j["transcript"] = checks;
  return j;
}

inline json check_report_to_json(const CheckReport& rep) {
  json j;
  j["schema"] = "hwb/verify/1";
  j["suite"] = rep.suite;
  j["seed"] = rep.seed;
  j["checks"] = rep.checks;
  j["violations"] = rep.violations;
  j["ok"] = rep.ok();
  return j;
}

}  // namespace hwb
