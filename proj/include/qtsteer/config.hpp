#ifndef QTSTEER_CONFIG_HPP
#define QTSTEER_CONFIG_HPP

// Sweep configuration text: one `key = value` per line, `#` starts a comment.
// Keys match the long command-line flags of the sweep subcommand:
//   scenario, p, r, phi, quantities, convention, format, out, workers

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qtsteer/sweep.hpp"

namespace qtsteer {

using Setting = std::pair<std::string, std::string>;

/// Throws ConfigError on malformed lines.
std::vector<Setting> parse_config_text(std::string_view text);
/// Throws IoError if the file cannot be read.
std::vector<Setting> read_config_file(const std::string& path);

/// Applies one setting; throws ConfigError for unknown keys or bad values.
void apply_setting(SweepConfig& config, std::string_view key, std::string_view value);

double parse_real(std::string_view text);
std::vector<double> parse_real_list(std::string_view text);
/// "start:end:steps" -> linspace(start, end, steps); a plain comma list is
/// taken literally.
std::vector<double> parse_grid(std::string_view text);

} // namespace qtsteer

#endif
