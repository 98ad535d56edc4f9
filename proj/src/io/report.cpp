#include "io/report.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <sstream>

#include "io/curve_spec.hpp"

namespace brsieve {

std::string version_string() { return BRSIEVE_VERSION; }

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    fail(ErrorCode::kInternal, "sha256 failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

InputFile hash_input(const std::string& role, const std::string& path) {
  return {role, path, sha256_hex(read_file(path))};
}

Json claim_json(const Claim& c) {
  Json j;
  j["statement"] = c.statement;
  j["criterion"] = c.criterion;
  j["assumptions"] = c.assumptions;
  return j;
}

Json manifest_json(const Report& r) {
  Json m;
  m["subcommand"] = r.subcommand;
  m["config"] = r.config;
  m["seed"] = r.seed;
  m["version"] = version_string();
  Json inputs = Json::array();
  for (const auto& in : r.inputs) inputs.push_back({{"role", in.role}, {"path", in.path}, {"sha256", in.sha256}});
  m["inputs"] = inputs;
  if (r.wall_seconds) m["wall_clock_seconds"] = *r.wall_seconds;
  return m;
}

Json report_json(const Report& r) {
  Json j;
  j["manifest"] = manifest_json(r);
  j["status"] = r.status;
  j["result"] = r.result;
  j["rows"] = r.rows;
  j["assumptions"] = r.assumptions;
  Json claims = Json::array();
  for (const auto& c : r.claims) claims.push_back(claim_json(c));
  j["claims"] = claims;
  j["notes"] = r.notes;
  return j;
}

namespace {

std::string csv_cell(const Json& v) {
  std::string s;
  if (v.is_null()) return "";
  if (v.is_string()) {
    s = v.get<std::string>();
  } else {
    s = v.dump();
  }
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

}  // namespace

std::string report_csv(const Report& r) {
  std::vector<std::string> header;
  for (const auto& row : r.rows) {
    for (const auto& [k, v] : row.items()) {
      (void)v;
      if (std::find(header.begin(), header.end(), k) == header.end()) header.push_back(k);
    }
  }
  std::ostringstream os;
  for (size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << '\n';
  for (const auto& row : r.rows) {
    for (size_t i = 0; i < header.size(); ++i) {
      if (i) os << ',';
      if (row.contains(header[i])) os << csv_cell(row[header[i]]);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace brsieve
