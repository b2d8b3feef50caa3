#include "ldfoe/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "ldfoe/cases.hpp"
#include "ldfoe/error.hpp"

namespace ldfoe {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_double(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("bad number for '" + key + "': '" + text + "'");
  }
}

int parse_int(const std::string& key, const std::string& text) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError("bad integer for '" + key + "': '" + text + "'");
  }
  return v;
}

bool parse_bool(const std::string& key, const std::string& text) {
  if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
  if (text == "false" || text == "0" || text == "no" || text == "off") return false;
  throw ConfigError("bad boolean for '" + key + "': '" + text + "'");
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

OutputFormat parse_format(const std::string& text) {
  if (text == "csv") return OutputFormat::csv;
  if (text == "vtk") return OutputFormat::vtk;
  throw ConfigError("unknown output format '" + text + "' (csv|vtk)");
}

std::string to_string(OutputFormat format) {
  return format == OutputFormat::csv ? "csv" : "vtk";
}

std::vector<double> parse_time_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& item : split_commas(text)) out.push_back(parse_double("times", item));
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& item : split_commas(text)) out.push_back(parse_int("list", item));
  return out;
}

void apply_setting(RunConfig& config, const std::string& key,
                   const std::string& value) {
  if (key == "case" || key == "case_name") {
    config.case_name = value;
  } else if (key == "nx") {
    config.nx = parse_int(key, value);
  } else if (key == "ny") {
    config.ny = parse_int(key, value);
  } else if (key == "k") {
    config.k = parse_int(key, value);
  } else if (key == "cfl") {
    config.cfl = parse_double(key, value);
  } else if (key == "t_final") {
    config.t_final = parse_double(key, value);
  } else if (key == "snapshots") {
    config.snapshots = parse_time_list(value);
  } else if (key == "out" || key == "out_dir") {
    config.out_dir = value;
  } else if (key == "format") {
    config.format = parse_format(value);
  } else if (key == "oe_enabled") {
    config.oe_enabled = parse_bool(key, value);
  } else if (key == "ldf_enabled") {
    config.ldf_enabled = parse_bool(key, value);
  } else if (key == "workers") {
    config.workers = parse_int(key, value);
  } else if (key == "quad_points") {
    config.quad_points = parse_int(key, value);
  } else {
    throw ConfigError("unknown config key '" + key + "'");
  }
}

void load_config_text(RunConfig& config, const std::string& text) {
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    }
    apply_setting(config, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

void load_config_file(RunConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  load_config_text(config, buf.str());
}

void validate(const RunConfig& config) {
  const auto names = case_names();
  if (std::find(names.begin(), names.end(), config.case_name) == names.end()) {
    throw ConfigError("unknown case '" + config.case_name + "'");
  }
  if (config.nx < 0 || config.ny < 0) throw ConfigError("nx, ny must be positive");
  if (config.k < 0 || config.k > 2) throw ConfigError("k must be 0, 1 or 2");
  if (!(config.cfl > 0.0 && config.cfl < 1.0)) throw ConfigError("cfl must be in (0, 1)");
  if (config.t_final && *config.t_final < 0.0) throw ConfigError("t_final must be >= 0");
  if (config.workers < 1) throw ConfigError("workers must be >= 1");
  if (config.quad_points < 0) throw ConfigError("quad_points must be >= 0");
  for (double t : config.snapshots) {
    if (t < 0.0) throw ConfigError("snapshot times must be >= 0");
  }
}

}  // namespace ldfoe
