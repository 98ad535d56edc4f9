#include <filesystem>
#include <fstream>
#include <sstream>

#include "app/commands.hpp"
#include "io/curve_spec.hpp"

namespace brsieve {
namespace {

struct Step {
  std::string subcommand;
  Json config;
};

struct Example {
  std::string name;
  std::string description;
  std::vector<Step> steps;
};

std::vector<Example> examples(const std::string& curves) {
  auto curve = [&](const char* name) { return curves + "/" + name + ".curve"; };
  return {
      {"index2",
       "index-2 genus-2 curve: Jacobian orders and the no-linear-factor scan",
       {{"curve jac-order", {{"curve", curve("index2")}, {"places", "3,5,17"}}},
        {"sieve hypex", {{"curve", curve("index2")}, {"primes", "2..20"}, {"assume_rank0", true}, {"assume_sha", true},
                         {"rank_provenance", "external 2-descent"}}}}},
      {"ef3",
       "y^2 = x^3 - x + 2 over F_3 and the two factor curves of C0",
       {{"curve count", {{"curve", curve("ef3")}, {"n", "1..2"}}},
        {"curve lpoly", {{"curve", curve("ess")}}},
        {"curve lpoly", {{"curve", curve("eord")}}}}},
      {"c0",
       "constant curve C0 over F_3: L-polynomial, thresholds, factor curves, D_m",
       {{"curve lpoly", {{"curve", curve("c0")}}},
        {"curve jac-order", {{"curve", curve("c0")}, {"n", "1..4"}}},
        {"constant threshold", {{"curve", curve("c0")}, {"ell", 2}, {"nmax", 12}}},
        {"constant brell", Json::object()},
        {"constant dm", {{"m", 3}}}}},
      {"hasse",
       "(x^2 + 3)(x^3 - 19): local solubility and the torsion-packet certificate",
       {{"sieve local", {{"poly", "(x^2+3)*(x^3-19)"}, {"place", "all<=200"}}},
        {"sieve packet", {{"F", "(x^2+3)*(x^3-19)"}, {"G", "2*(x^3+x+1)"}}}}},
      {"brodd",
       "odd-degree packet curve: projected sieve and the forced-torsion contrast",
       {{"sieve projected-demo", {{"F", "(x^2+3)*(x^3-19)"}, {"G", "2*(x^3+x+1)"}, {"primes", "5..59"}}},
        {"heuristic contrast",
         {{"F", "(x^2+3)*(x^3-19)"}, {"G", "2*(x^3+x+1)"}, {"bound", 60}, {"trials", 4000}, {"seed", 7}}}}},
      {"e67a1",
       "67.a1: coprime chains, torsion bound, 2-power torsion density, a cover check",
       {{"search coprime-chain", {{"curve", curve("e67a1")}, {"aux_prime", 17}, {"bound", 10000}, {"target", 5}}},
        {"search torsion-bound", {{"curve", curve("e67a1")}, {"places", "3,5,7,11,13"}}},
        {"heuristic torsion-density", {{"curve", curve("e67a1")}, {"ell", 2}, {"nmax", 8}, {"bound", 3000}}},
        {"sieve cover", {{"curve", curve("e67a1")}, {"fiber", "x^2-17"}, {"place", 3}}}}},
      {"frobenius",
       "finite-level Frobenius iteration over F_{3^4}",
       {{"constant frobenius", {{"field", "3,4"}, {"points_text", "2\n[2, 1]\n[0, 0, 1]; 1\n[1, 0, 0, 1]\n"}, {"nmax", 6}}}}},
  };
}

Json step_view(const Report& r) {
  Json j = report_json(r);
  Json out;
  out["subcommand"] = r.subcommand;
  for (const char* k : {"status", "result", "rows", "assumptions", "claims", "notes"}) out[k] = j[k];
  return out;
}

std::string short_json(const Json& j) {
  std::string s = j.dump();
  return s.size() > 120 ? s.substr(0, 117) + "..." : s;
}

}  // namespace

Report run_reproduce(const Json& config) {
  Report rep;
  rep.subcommand = "reproduce";
  const std::string root = config.value("root", std::string(BRSIEVE_SOURCE_ROOT));
  const std::string expected_dir = config.value("expected", root + "/data/expected");
  const std::string only = config.value("only", std::string());
  const bool update = config.value("update", false);
  for (const auto& [k, v] : config.items()) {
    (void)v;
    if (k != "root" && k != "expected" && k != "only" && k != "update" && k != "jobs" && k != "seed" && k != "budget") {
      fail(ErrorCode::kInvalidArgument, "option --" + k + " does not apply to 'reproduce'");
    }
  }
  rep.config = {{"root", root}, {"expected", expected_dir}, {"only", only}, {"update", update}};

  auto all = examples(root + "/curves");
  if (!only.empty()) {
    bool known = false;
    for (const auto& e : all) known = known || e.name == only;
    if (!known) fail(ErrorCode::kInvalidArgument, "unknown example '" + only + "'");
  }
  std::ostringstream text;
  text << "example     steps  status\n";
  bool all_pass = true;
  for (const auto& ex : all) {
    if (!only.empty() && ex.name != only) continue;
    Json actual;
    actual["example"] = ex.name;
    actual["description"] = ex.description;
    actual["steps"] = Json::array();
    for (const auto& st : ex.steps) actual["steps"].push_back(step_view(run_command(st.subcommand, st.config)));

    const std::string path = expected_dir + "/" + ex.name + ".json";
    std::string status = "pass";
    Json diff = Json::array();
    Json expected;
    if (update) {
      std::filesystem::create_directories(expected_dir);
      std::ofstream(path) << actual.dump(2) << '\n';
      status = "updated";
    } else if (!std::filesystem::exists(path)) {
      status = "fail";
      diff.push_back({{"op", "missing"}, {"path", path}});
    } else {
      try {
        expected = Json::parse(read_file(path));
      } catch (const Json::parse_error& e) {
        fail(ErrorCode::kParse, path + ": " + e.what());
      }
      rep.inputs.push_back(hash_input("expected", path));
      diff = Json::diff(expected, actual);
      if (!diff.empty()) status = "fail";
    }
    all_pass = all_pass && status != "fail";
    text << ex.name << std::string(ex.name.size() < 12 ? 12 - ex.name.size() : 1, ' ') << ex.steps.size()
         << std::string(7 - std::to_string(ex.steps.size()).size(), ' ') << status << '\n';
    for (const auto& d : diff) {
      std::string line = "    " + d.value("op", std::string()) + " " + d.value("path", std::string());
      if (d.contains("value")) {
        Json::json_pointer jp(d.value("path", std::string()));
        if (d["op"] == "replace" && expected.contains(jp)) {
          line += ": expected " + short_json(expected[jp]) + ", got " + short_json(d["value"]);
        } else {
          line += ": " + short_json(d["value"]);
        }
      }
      text << line << '\n';
    }
    rep.rows.push_back({{"example", ex.name}, {"steps", ex.steps.size()}, {"status", status}, {"differences", diff.size()}});
    if (!diff.empty()) rep.result[ex.name] = diff;
  }
  rep.status = all_pass ? "ok" : "mismatch";
  rep.exit_code = all_pass ? 0 : 1;
  text << (all_pass ? "all examples match\n" : "mismatch against expected outputs\n");
  rep.text = text.str();
  return rep;
}

}  // namespace brsieve
