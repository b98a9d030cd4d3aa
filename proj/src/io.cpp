#include "bardina/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace bardina {

using nlohmann::json;

json field_to_json(const SpectralField& f) {
  json j;
  j["d"] = f.lattice().dim;
  j["M"] = f.lattice().cutoff;
  j["flags"] = {{"zero_mean", f.flags.zero_mean},
                {"real_valued", f.flags.real_valued},
                {"divergence_free", f.flags.divergence_free}};
  json comps = json::array();
  for (int c = 0; c < f.components(); ++c) {
    json col = json::array();
    for (Eigen::Index i = 0; i < f.lattice().num_modes(); ++i)
      col.push_back({f.at(i, c).real(), f.at(i, c).imag()});
    comps.push_back(std::move(col));
  }
  j["components"] = std::move(comps);
  return j;
}

SpectralField field_from_json(const json& j) {
  const TorusLattice lat(j.at("d").get<int>(), j.at("M").get<int>());
  const auto& comps = j.at("components");
  if (!comps.is_array() || comps.empty())
    throw std::invalid_argument("field_from_json: missing components");
  FieldFlags flags;
  if (j.contains("flags")) {
    const auto& fl = j.at("flags");
    flags.zero_mean = fl.value("zero_mean", false);
    flags.real_valued = fl.value("real_valued", false);
    flags.divergence_free = fl.value("divergence_free", false);
  }
  SpectralField f(lat, static_cast<int>(comps.size()), flags);
  for (int c = 0; c < f.components(); ++c) {
    const auto& col = comps[c];
    if (static_cast<Eigen::Index>(col.size()) != lat.num_modes())
      throw std::invalid_argument("field_from_json: component length mismatch");
    for (Eigen::Index i = 0; i < lat.num_modes(); ++i)
      f.at(i, c) = {col[i][0].get<double>(), col[i][1].get<double>()};
  }
  return f;
}

void save_field(const SpectralField& f, const std::string& path) {
  write_text_file(path, field_to_json(f).dump());
}

SpectralField load_field(const std::string& path) {
  return field_from_json(json::parse(read_text_file(path)));
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  os << content;
}

std::string read_text_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open for reading: " + path);
  return {std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
}

std::string format_float(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace bardina
