// Command-line front end. Every subcommand flag is forwarded to brsieve_run as
// a JSON config entry; the library does all validation.
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "brsieve/brsieve.h"
#include "json.hpp"

namespace {

struct Spec {
  const char* group;
  const char* name;
  const char* help;
  std::vector<const char*> options;  // value-taking flags
  std::vector<const char*> switches;  // boolean flags
};

const std::vector<const char*> kCurve = {"--curve", "--curve-spec"};

std::vector<const char*> with_curve(std::vector<const char*> extra) {
  extra.insert(extra.begin(), kCurve.begin(), kCurve.end());
  return extra;
}

const std::vector<Spec>& specs() {
  static const std::vector<Spec> s = {
      {"curve", "count", "point counts over F_v^n or F_q^n", with_curve({"--n", "--places", "--primes"}), {}},
      {"curve", "lpoly", "L-polynomial and its functional equation", with_curve({"--places", "--primes"}), {}},
      {"curve", "jac-order", "Jacobian orders #J(F_v^n)", with_curve({"--n", "--places", "--primes"}), {}},
      {"curve", "reduce", "reduction type and reduced model at each place", with_curve({"--places", "--primes"}), {}},
      {"sieve", "hypex", "linear-factor scan with radical primes",
       with_curve({"--primes", "--torsion", "--rank-provenance"}), {"--assume-rank0", "--assume-sha"}},
      {"sieve", "cover", "image of a fibre in E(F_v) at one place",
       with_curve({"--fiber", "--place", "--torsion", "--rank-provenance"}), {"--assume-rank0", "--assume-sha"}},
      {"sieve", "local", "local solubility of a zero-dimensional scheme", {"--poly", "--place"}, {}},
      {"sieve", "packet", "torsion-packet certificate for y^2 = F(x) G(x)", {"--F", "--G", "--scan-bound"}, {}},
      {"sieve", "projected-demo", "prime-to-2 projected sieve on y^2 = F(x) G(x)", {"--F", "--G", "--primes"}, {}},
      {"search", "coprime-chain", "places with pairwise coprime #E(F_v)",
       with_curve({"--aux-prime", "--bound", "--target"}), {}},
      {"search", "torsion-bound", "gcd bound on E(Q)_tors", with_curve({"--places", "--primes"}), {}},
      {"heuristic", "emptying", "random-subset emptying probability",
       with_curve({"--bound", "--trials", "--d", "--mw-order"}), {}},
      {"heuristic", "contrast", "random model against the forced 2-torsion model",
       {"--F", "--G", "--bound", "--trials"}, {}},
      {"heuristic", "smooth", "smoothness of Jacobian orders", with_curve({"--bound", "--trials", "--u"}), {}},
      {"heuristic", "torsion-density", "density of ell^n | #E(F_v)", with_curve({"--ell", "--nmax", "--bound"}), {}},
      {"constant", "threshold", "first n where the size threshold holds", with_curve({"--ell", "--nmax"}), {}},
      {"constant", "point-search", "point of prime-to-ell order on the Jacobian", with_curve({"--ell", "--n"}), {}},
      {"constant", "dm", "affine points of D_m over F_{3^m}", {"--m", "--brute-max"}, {}},
      {"constant", "brell", "factorization of L(C0) and the quotient maps", {"--nmax", "--threshold-nmax"}, {}},
      {"constant", "frobenius", "Frobenius iteration on points over a finite field",
       {"--field", "--points", "--points-text", "--q", "--nmax"}, {}},
  };
  return s;
}

std::string key_of(const std::string& flag) {
  std::string k = flag.substr(2);
  for (auto& c : k) {
    if (c == '-') c = '_';
  }
  return k;
}

struct Bound {
  CLI::App* app;
  std::string command;
  std::map<std::string, std::string> values;
  std::map<std::string, bool> switches;
};

// Returns the process exit code.
int emit(brsieve_report* rep, const std::string& out) {
  char* s = nullptr;
  brsieve_status st;
  if (out == "csv") {
    st = brsieve_report_csv(rep, &s);
  } else if (out == "text") {
    st = brsieve_report_text(rep, &s);
    if (st == BRSIEVE_OK && (!s || !*s)) {
      brsieve_string_free(s);
      st = brsieve_report_json(rep, 2, &s);
    }
  } else {
    st = brsieve_report_json(rep, 2, &s);
  }
  if (st != BRSIEVE_OK) {
    std::cerr << "error: " << brsieve_last_error() << '\n';
    return brsieve_status_exit_code(st);
  }
  std::fputs(s, stdout);
  if (out != "text" && out != "csv") std::fputc('\n', stdout);
  brsieve_string_free(s);
  return brsieve_report_exit_code(rep);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sieve and obstruction toolkit for curves over number fields and finite fields", "brsieve"};
  app.set_version_flag("--version", std::string(brsieve_version()));
  app.require_subcommand(1);

  std::string out;
  std::string seed, jobs, budget;
  bool timing = false;
  app.add_option("--out", out, "report format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--seed", seed, "random seed (default 0)");
  app.add_option("--jobs", jobs, "worker threads; results do not depend on it (default 1)");
  app.add_option("--budget", budget, "largest field size enumerated when counting points (default 10^8)");
  app.add_flag("--timing", timing, "record wall-clock seconds in the manifest");

  std::vector<Bound> bound;
  bound.reserve(specs().size() + 1);
  std::map<std::string, CLI::App*> groups;
  for (const auto& s : specs()) {
    CLI::App*& g = groups[s.group];
    if (!g) {
      g = app.add_subcommand(s.group, std::string(s.group) + " subcommands");
      g->require_subcommand(1);
      g->fallthrough();
    }
    Bound b{g->add_subcommand(s.name, s.help), std::string(s.group) + " " + s.name, {}, {}};
    b.app->fallthrough();
    bound.push_back(std::move(b));
  }
  // Options bind into map entries, so attach them after the vector stops moving.
  size_t i = 0;
  for (const auto& s : specs()) {
    Bound& b = bound[i++];
    for (const char* f : s.options) b.app->add_option(f, b.values[f]);
    for (const char* f : s.switches) b.app->add_flag(f, b.switches[f]);
  }

  Bound repro{app.add_subcommand("reproduce", "rerun the shipped examples against expected outputs"), "reproduce", {}, {}};
  repro.app->fallthrough();
  repro.app->add_option("--only", repro.values["--only"], "run a single example");
  repro.app->add_option("--expected", repro.values["--expected"], "directory of expected JSON files");
  repro.app->add_option("--root", repro.values["--root"], "source tree holding curves/");
  repro.app->add_flag("--update", repro.switches["--update"], "rewrite the expected files");
  bound.push_back(std::move(repro));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  for (auto& b : bound) {
    if (!b.app->parsed()) continue;
    nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
    for (const auto& [flag, v] : b.values) {
      if (b.app->count(flag) > 0) cfg[key_of(flag)] = v;
    }
    for (const auto& [flag, v] : b.switches) {
      if (v) cfg[key_of(flag)] = true;
    }
    if (!seed.empty()) cfg["seed"] = seed;
    if (!jobs.empty()) cfg["jobs"] = jobs;
    if (!budget.empty()) cfg["budget"] = budget;
    if (timing && b.command != "reproduce") cfg["timing"] = true;

    brsieve_report* rep = nullptr;
    const brsieve_status st = brsieve_run(b.command.c_str(), cfg.dump().c_str(), &rep);
    if (st != BRSIEVE_OK) {
      std::cerr << "error: " << brsieve_last_error() << '\n';
      return brsieve_status_exit_code(st);
    }
    const int rc = emit(rep, out.empty() ? (b.command == "reproduce" ? "text" : "json") : out);
    brsieve_report_free(rep);
    return rc;
  }
  return 2;
}
