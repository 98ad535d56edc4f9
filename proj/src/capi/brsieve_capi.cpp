#include "brsieve/brsieve.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "app/commands.hpp"
#include "curves/lpoly.hpp"
#include "io/curve_spec.hpp"

struct brsieve_curve {
  brsieve::CurveSpec spec;
};

struct brsieve_report {
  brsieve::Report report;
};

namespace {

thread_local std::string g_last_error;

brsieve_status to_status(brsieve::ErrorCode c) { return static_cast<brsieve_status>(static_cast<int>(c)); }

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class Fn>
brsieve_status guard(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return BRSIEVE_OK;
  } catch (const brsieve::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const nlohmann::ordered_json::exception& e) {
    g_last_error = std::string("invalid JSON: ") + e.what();
    return BRSIEVE_PARSE_ERROR;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return BRSIEVE_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return BRSIEVE_INTERNAL;
  }
}

brsieve_status null_arg(const char* what) {
  g_last_error = std::string("null argument: ") + what;
  return BRSIEVE_INVALID_ARGUMENT;
}

template <class Fn>
auto with_curve(const brsieve::CurveSpec& s, std::uint64_t v, Fn&& fn) {
  using namespace brsieve;
  if (s.over_q()) {
    if (s.elliptic()) {
      auto red = good_reduction(s.elliptic_q(), v);
      if (!red.good) fail(ErrorCode::kInvalidArgument, "bad reduction at " + std::to_string(v) + ": " + red.reason);
      return fn(*red.curve);
    }
    auto red = good_reduction(s.hyperelliptic_q(), v);
    if (!red.good) fail(ErrorCode::kInvalidArgument, "bad reduction at " + std::to_string(v) + ": " + red.reason);
    return fn(*red.curve);
  }
  if (s.elliptic()) return fn(s.elliptic_fq());
  return fn(s.hyperelliptic_fq());
}

}  // namespace

extern "C" {

const char* brsieve_version(void) { return BRSIEVE_VERSION; }

const char* brsieve_last_error(void) { return g_last_error.c_str(); }

void brsieve_string_free(char* s) { std::free(s); }

brsieve_status brsieve_curve_parse(const char* text, brsieve_curve** out) {
  if (!text) return null_arg("text");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guard([&] { *out = new brsieve_curve{brsieve::parse_curve_spec(text)}; });
}

brsieve_status brsieve_curve_load(const char* path, brsieve_curve** out) {
  if (!path) return null_arg("path");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guard([&] { *out = new brsieve_curve{brsieve::load_curve_spec(path)}; });
}

void brsieve_curve_free(brsieve_curve* curve) { delete curve; }

brsieve_status brsieve_curve_serialize(const brsieve_curve* curve, char** out) {
  if (!curve) return null_arg("curve");
  if (!out) return null_arg("out");
  return guard([&] { *out = dup(brsieve::serialize_curve_spec(curve->spec)); });
}

brsieve_status brsieve_curve_genus(const brsieve_curve* curve, unsigned* out) {
  if (!curve) return null_arg("curve");
  if (!out) return null_arg("out");
  return guard([&] {
    const auto& s = curve->spec;
    *out = s.elliptic() ? 1u : s.over_q() ? s.hyperelliptic_q().genus() : s.hyperelliptic_fq().genus();
  });
}

brsieve_status brsieve_curve_count(const brsieve_curve* curve, uint64_t v, unsigned n, uint64_t* out) {
  if (!curve) return null_arg("curve");
  if (!out) return null_arg("out");
  return guard([&] { *out = with_curve(curve->spec, v, [&](const auto& c) { return brsieve::count_points_ext(c, n); }); });
}

brsieve_status brsieve_curve_jacobian_order(const brsieve_curve* curve, uint64_t v, unsigned n, char** out) {
  if (!curve) return null_arg("curve");
  if (!out) return null_arg("out");
  return guard([&] {
    brsieve::BigInt N = with_curve(curve->spec, v, [&](const auto& c) {
      return brsieve::jacobian_order(brsieve::lpolynomial(c), n);
    });
    *out = dup(N.get_str());
  });
}

brsieve_status brsieve_curve_lpolynomial(const brsieve_curve* curve, uint64_t v, char** out) {
  if (!curve) return null_arg("curve");
  if (!out) return null_arg("out");
  return guard([&] {
    *out = dup(with_curve(curve->spec, v, [&](const auto& c) { return brsieve::lpolynomial(c).format(); }));
  });
}

brsieve_status brsieve_run(const char* subcommand, const char* config_json, brsieve_report** out) {
  if (!subcommand) return null_arg("subcommand");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guard([&] {
    const brsieve::Json cfg =
        config_json && *config_json ? brsieve::Json::parse(config_json) : brsieve::Json::object();
    *out = new brsieve_report{brsieve::run_command(subcommand, cfg)};
  });
}

void brsieve_report_free(brsieve_report* report) { delete report; }

brsieve_status brsieve_report_json(const brsieve_report* report, int indent, char** out) {
  if (!report) return null_arg("report");
  if (!out) return null_arg("out");
  return guard([&] { *out = dup(brsieve::report_json(report->report).dump(indent < 0 ? -1 : indent)); });
}

brsieve_status brsieve_report_csv(const brsieve_report* report, char** out) {
  if (!report) return null_arg("report");
  if (!out) return null_arg("out");
  return guard([&] { *out = dup(brsieve::report_csv(report->report)); });
}

brsieve_status brsieve_report_text(const brsieve_report* report, char** out) {
  if (!report) return null_arg("report");
  if (!out) return null_arg("out");
  return guard([&] { *out = dup(report->report.text); });
}

int brsieve_report_exit_code(const brsieve_report* report) { return report ? report->report.exit_code : 2; }

int brsieve_status_exit_code(brsieve_status status) {
  switch (status) {
    case BRSIEVE_OK:
      return 0;
    case BRSIEVE_INVALID_ARGUMENT:
    case BRSIEVE_PARSE_ERROR:
    case BRSIEVE_UNSUPPORTED:
      return 2;
    case BRSIEVE_BUDGET_EXCEEDED:
      return 3;
    default:
      return 1;
  }
}

}  // extern "C"
