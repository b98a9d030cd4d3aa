#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "bardina/config.hpp"

namespace bardina {

inline constexpr const char* kToolVersion = "0.1.0";

/// Envelope written next to every CLI result.  The payload is the
/// deterministic part: identical config + seed reproduce it byte for byte;
/// the meta block carries the timestamp and config echo.
struct ReportDocument {
  std::string version = kToolVersion;
  std::string timestamp_utc;
  std::string config_echo;
  uint64_t seed = 0;
  nlohmann::json payload;

  nlohmann::json to_json() const;
  static ReportDocument from_json(const nlohmann::json& j);

  std::string payload_bytes() const { return payload.dump(); }
  void save(const std::string& path) const;
  static ReportDocument load(const std::string& path);
};

std::string utc_timestamp();

ReportDocument make_report(const RunConfig& cfg, nlohmann::json payload);

}  // namespace bardina
