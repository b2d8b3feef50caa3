#ifndef LDFOE_CONFIG_HPP_
#define LDFOE_CONFIG_HPP_

#include <optional>
#include <string>
#include <vector>

namespace ldfoe {

enum class OutputFormat { csv, vtk };

struct RunConfig {
  std::string case_name;
  int nx = 0;  // 0: case default
  int ny = 0;
  int k = 2;
  double cfl = 0.15;
  std::optional<double> t_final;
  std::vector<double> snapshots;
  std::string out_dir = "out";
  OutputFormat format = OutputFormat::csv;
  bool oe_enabled = true;
  bool ldf_enabled = true;
  int workers = 1;
  // 0: k + 1 points per axis.
  int quad_points = 0;
};

OutputFormat parse_format(const std::string& text);
std::string to_string(OutputFormat format);

/// Comma-separated list of times, e.g. "0.5,2,3".
std::vector<double> parse_time_list(const std::string& text);
std::vector<int> parse_int_list(const std::string& text);

/// Applies one `key = value` setting. Throws ConfigError on an unknown key or
/// a malformed value.
void apply_setting(RunConfig& config, const std::string& key,
                   const std::string& value);

/// Reads a flat `key = value` file ('#' starts a comment) on top of config.
void load_config_file(RunConfig& config, const std::string& path);
void load_config_text(RunConfig& config, const std::string& text);

/// Checks ranges and the case name. Throws ConfigError.
void validate(const RunConfig& config);

}  // namespace ldfoe

#endif  // LDFOE_CONFIG_HPP_
