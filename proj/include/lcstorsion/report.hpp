// Verification reports and their JSON rendering.  Big integers are
// serialized as decimal strings so JSON consumers never see precision
// loss; an absent order prints as "infinite".

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lcstorsion/bigint.hpp"
#include "lcstorsion/freering.hpp"
#include "lcstorsion/zlinalg.hpp"

namespace lcs {

using Json = nlohmann::ordered_json;

inline std::string json_int(const BigInt& x) { return x.str(); }

inline std::string json_order(const std::optional<BigInt>& o) {
  return o ? o->str() : std::string("infinite");
}

inline Json json_row(const Row& r) {
  Json a = Json::array();
  for (const auto& x : r) a.push_back(x.str());
  return a;
}

inline Json json_matrix(const IntMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(json_row(m.row(i)));
  return a;
}

inline Json json_factors(const std::vector<BigInt>& fs) {
  Json a = Json::array();
  for (const auto& f : fs) a.push_back(f.str());
  return a;
}

struct VerificationReport {
  std::string claim;
  bool verified = false;
  bool skipped = false;
  Json witnesses = Json::object();
  std::vector<Json> records;  // per-component lines, emitted before the summary
  std::int64_t elapsed_ms = 0;

  const char* status() const {
    return skipped ? "skipped" : (verified ? "verified" : "failed");
  }

  Json summary_json() const {
    Json j;
    j["claim"] = claim;
    j["status"] = status();
    j["witnesses"] = witnesses;
    j["elapsed_ms"] = elapsed_ms;
    return j;
  }
};

}  // namespace lcs
