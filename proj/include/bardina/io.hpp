#pragma once

#include <string>

#include <json.hpp>

#include "bardina/field.hpp"

namespace bardina {

/// Checkpoint format: {d, M, flags, components: [[re,im]...] in row-major k
/// order}, one coefficient list per component.
nlohmann::json field_to_json(const SpectralField& f);
SpectralField field_from_json(const nlohmann::json& j);

void save_field(const SpectralField& f, const std::string& path);
SpectralField load_field(const std::string& path);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

/// Floats in reports are serialized with 17 significant digits.
std::string format_float(double v);

}  // namespace bardina
