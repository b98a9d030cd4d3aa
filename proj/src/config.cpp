#include "bardina/config.hpp"

#include <cmath>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "bardina/io.hpp"

namespace bardina {

double parse_number(const std::string& text) {
  std::string t = text;
  double mult = 1.0;
  if (t.size() > 2 && t.compare(t.size() - 2, 2, "pi") == 0) {
    mult = EIGEN_PI;
    t = t.substr(0, t.size() - 2);
  } else if (t == "pi") {
    return EIGEN_PI;
  }
  std::size_t pos = 0;
  const double v = std::stod(t, &pos);
  if (pos != t.size()) throw std::invalid_argument("trailing characters in number: " + text);
  return v * mult;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) v.push_back(std::stoi(item));
  }
  return v;
}

std::string int_list_to_text(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

bool assign_key(RunConfig& cfg, const std::string& key, const std::string& value,
                std::vector<std::string>& errors) {
  try {
    if (key == "dim") cfg.dim = int(parse_number(value));
    else if (key == "M") cfg.M = int(parse_number(value));
    else if (key == "alpha") cfg.alpha = parse_number(value);
    else if (key == "gamma") cfg.gamma = parse_number(value);
    else if (key == "T") cfg.T = parse_number(value);
    else if (key == "dt") cfg.dt = parse_number(value);
    else if (key == "sample_stride") cfg.sample_stride = int(parse_number(value));
    else if (key == "initial") cfg.initial = value;
    else if (key == "forcing") cfg.forcing = value;
    else if (key == "forcing_scale") cfg.forcing_scale = parse_number(value);
    else if (key == "s") cfg.s = int(parse_number(value));
    else if (key == "lambda") cfg.lambda = parse_number(value);
    else if (key == "t_prime") cfg.t_prime = parse_number(value);
    else if (key == "r") cfg.r = int(parse_number(value));
    else if (key == "a") cfg.a = int(parse_number(value));
    else if (key == "b") cfg.b = int(parse_number(value));
    else if (key == "delta") cfg.delta = parse_number(value);
    else if (key == "c1") cfg.c1 = parse_number(value);
    else if (key == "c2") cfg.c2 = parse_number(value);
    else if (key == "c3") cfg.c3 = parse_number(value);
    else if (key == "c4") cfg.c4 = parse_number(value);
    else if (key == "s_list") cfg.s_list = parse_int_list(value);
    else if (key == "m_min") cfg.m_min = parse_number(value);
    else if (key == "m_max") cfg.m_max = parse_number(value);
    else if (key == "m_points") cfg.m_points = int(parse_number(value));
    else if (key == "tol") cfg.tol = parse_number(value);
    else if (key == "trials") cfg.trials = int(parse_number(value));
    else if (key == "pointwise_trials") cfg.pointwise_trials = (long long)parse_number(value);
    else if (key == "seed") cfg.seed = (uint64_t)std::stoull(value);
    else if (key == "out") cfg.out = value;
    else if (key == "quick") cfg.quick = (value == "true" || value == "1");
    else {
      errors.push_back("unknown key: " + key);
      return false;
    }
  } catch (const std::exception& e) {
    errors.push_back("bad value for " + key + ": " + value);
    return false;
  }
  return true;
}

}  // namespace

RunConfig parse_config_text(const std::string& text, std::vector<std::string>& errors) {
  RunConfig cfg;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      errors.push_back("not a key = value line: " + line);
      continue;
    }
    assign_key(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)), errors);
  }
  return cfg;
}

RunConfig parse_config_file(const std::string& path, std::vector<std::string>& errors) {
  std::string text;
  try {
    text = read_text_file(path);
  } catch (const std::exception& e) {
    errors.push_back(e.what());
    return RunConfig{};
  }
  return parse_config_text(text, errors);
}

void apply_overrides(RunConfig& cfg, const std::vector<std::string>& overrides,
                     std::vector<std::string>& errors) {
  for (const std::string& ov : overrides) {
    const auto eq = ov.find('=');
    if (eq == std::string::npos) {
      errors.push_back("override is not key=value: " + ov);
      continue;
    }
    assign_key(cfg, trim(ov.substr(0, eq)), trim(ov.substr(eq + 1)), errors);
  }
}

std::vector<std::string> RunConfig::validate() const {
  std::vector<std::string> v;
  const auto bad = [&](const std::string& key, const std::string& why) {
    v.push_back(key + ": " + why);
  };
  if (dim != 2 && dim != 3) bad("dim", "must be 2 or 3");
  if (M < 1) bad("M", "must be >= 1");
  if (!(alpha > 0)) bad("alpha", "must be > 0");
  if (!(gamma > 0)) bad("gamma", "must be > 0");
  if (!(T > 0)) bad("T", "must be > 0");
  if (sample_stride < 1) bad("sample_stride", "must be >= 1");
  if (s < 1) bad("s", "must be >= 1");
  if (!(delta > 0 && delta < 1.0 / std::sqrt(3.0))) bad("delta", "must lie in (0, 1/sqrt(3))");
  if (!(c1 > 0)) bad("c1", "must be > 0");
  if (!(c2 > 0)) bad("c2", "must be > 0");
  if (!(c3 > 0 && c3 <= c4)) bad("c3/c4", "need 0 < c3 <= c4");
  if (!(m_min > 0 && m_min <= m_max)) bad("m_min/m_max", "need 0 < m_min <= m_max");
  if (m_points < 1) bad("m_points", "must be >= 1");
  if (!(tol >= 1e-14)) bad("tol", "must be >= 1e-14");
  if (trials < 1) bad("trials", "must be >= 1");
  if (pointwise_trials < 1) bad("pointwise_trials", "must be >= 1");
  if (std::abs(r) >= s) bad("r", "need |r| < s");
  for (int sv : s_list)
    if (sv < 4) bad("s_list", "entries must be >= 4");
  return v;
}

std::string RunConfig::to_text() const {
  std::ostringstream os;
  os << "dim = " << dim << "\n";
  os << "M = " << M << "\n";
  os << "alpha = " << format_float(alpha) << "\n";
  os << "gamma = " << format_float(gamma) << "\n";
  os << "T = " << format_float(T) << "\n";
  os << "dt = " << format_float(dt) << "\n";
  os << "sample_stride = " << sample_stride << "\n";
  os << "initial = " << initial << "\n";
  os << "forcing = " << forcing << "\n";
  os << "forcing_scale = " << format_float(forcing_scale) << "\n";
  os << "s = " << s << "\n";
  os << "lambda = " << format_float(lambda) << "\n";
  os << "t_prime = " << format_float(t_prime) << "\n";
  os << "r = " << r << "\n";
  os << "a = " << a << "\n";
  os << "b = " << b << "\n";
  os << "delta = " << format_float(delta) << "\n";
  os << "c1 = " << format_float(c1) << "\n";
  os << "c2 = " << format_float(c2) << "\n";
  os << "c3 = " << format_float(c3) << "\n";
  os << "c4 = " << format_float(c4) << "\n";
  os << "s_list = " << int_list_to_text(s_list) << "\n";
  os << "m_min = " << format_float(m_min) << "\n";
  os << "m_max = " << format_float(m_max) << "\n";
  os << "m_points = " << m_points << "\n";
  os << "tol = " << format_float(tol) << "\n";
  os << "trials = " << trials << "\n";
  os << "pointwise_trials = " << pointwise_trials << "\n";
  os << "seed = " << seed << "\n";
  os << "out = " << out << "\n";
  os << "quick = " << (quick ? "true" : "false") << "\n";
  return os.str();
}

}  // namespace bardina
