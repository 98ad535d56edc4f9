#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "common/claim.hpp"

namespace brsieve {

using Json = nlohmann::ordered_json;

struct InputFile {
  std::string role;  // "curve", "points", ...
  std::string path;
  std::string sha256;
};

// Everything a command produces. `result` holds the headline values, `rows`
// the per-place (or per-n) table that also feeds CSV output.
struct Report {
  std::string subcommand;
  Json config = Json::object();
  std::uint64_t seed = 0;
  std::vector<InputFile> inputs;
  std::optional<double> wall_seconds;

  Json result = Json::object();
  Json rows = Json::array();
  std::vector<std::string> assumptions;
  std::vector<Claim> claims;
  std::vector<std::string> notes;
  std::string status = "ok";  // "ok" or "mismatch"
  int exit_code = 0;
  std::string text;  // human-readable summary, used by reproduce
};

std::string version_string();
std::string sha256_hex(std::string_view data);
InputFile hash_input(const std::string& role, const std::string& path);

Json manifest_json(const Report& r);
Json report_json(const Report& r);
// Header from the union of row keys (first-seen order); nested values are
// written as compact JSON strings.
std::string report_csv(const Report& r);

Json claim_json(const Claim& c);

}  // namespace brsieve
