#include "bardina/report.hpp"

#include <ctime>

#include "bardina/io.hpp"

namespace bardina {

using nlohmann::json;

std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

json ReportDocument::to_json() const {
  json j;
  j["meta"] = {{"version", version},
               {"timestamp_utc", timestamp_utc},
               {"config", config_echo},
               {"seed", seed}};
  j["payload"] = payload;
  return j;
}

ReportDocument ReportDocument::from_json(const json& j) {
  ReportDocument doc;
  const auto& meta = j.at("meta");
  doc.version = meta.at("version").get<std::string>();
  doc.timestamp_utc = meta.at("timestamp_utc").get<std::string>();
  doc.config_echo = meta.at("config").get<std::string>();
  doc.seed = meta.at("seed").get<uint64_t>();
  doc.payload = j.at("payload");
  return doc;
}

void ReportDocument::save(const std::string& path) const {
  write_text_file(path, to_json().dump(2) + "\n");
}

ReportDocument ReportDocument::load(const std::string& path) {
  return from_json(json::parse(read_text_file(path)));
}

ReportDocument make_report(const RunConfig& cfg, json payload) {
  ReportDocument doc;
  doc.timestamp_utc = utc_timestamp();
  doc.config_echo = cfg.to_text();
  doc.seed = cfg.seed;
  doc.payload = std::move(payload);
  return doc;
}

}  // namespace bardina
