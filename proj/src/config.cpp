#include "qtsteer/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "qtsteer/errors.hpp"

namespace qtsteer {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return out;
}

} // namespace

double parse_real(std::string_view text)
{
    text = trim(text);
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc() || ptr != end) {
        throw ConfigError("not a number: '" + std::string(text) + "'");
    }
    return value;
}

std::vector<double> parse_real_list(std::string_view text)
{
    std::vector<double> out;
    for (auto item : split(text, ',')) {
        out.push_back(parse_real(item));
    }
    return out;
}

std::vector<double> parse_grid(std::string_view text)
{
    if (text.find(':') == std::string_view::npos) {
        return parse_real_list(text);
    }
    const auto parts = split(text, ':');
    if (parts.size() != 3) {
        throw ConfigError("grid '" + std::string(text) + "' is not start:end:steps");
    }
    const double steps = parse_real(parts[2]);
    if (steps < 1.0 || steps != static_cast<double>(static_cast<long>(steps))) {
        throw ConfigError("grid step count must be a positive integer");
    }
    return linspace(parse_real(parts[0]), parse_real(parts[1]), static_cast<std::size_t>(steps));
}

void apply_setting(SweepConfig& config, std::string_view key, std::string_view value)
{
    key = trim(key);
    value = trim(value);
    try {
        if (key == "scenario") {
            config.scenario = parse_scenario(value);
        } else if (key == "p") {
            config.p_values = parse_real_list(value);
        } else if (key == "r") {
            config.r_values = parse_grid(value);
        } else if (key == "phi") {
            config.phi = parse_real(value);
        } else if (key == "quantities") {
            config.quantities.clear();
            if (value == "all") {
                config.quantities = all_quantities();
            } else {
                for (auto name : split(value, ',')) {
                    config.quantities.push_back(parse_quantity(name));
                }
            }
        } else if (key == "convention") {
            config.convention = parse_convention(value);
        } else if (key == "format") {
            if (value == "csv") {
                config.format = OutputFormat::Csv;
            } else if (value == "json") {
                config.format = OutputFormat::Json;
            } else {
                throw ConfigError("unknown format '" + std::string(value) + "'");
            }
        } else if (key == "out") {
            config.output_path = std::string(value);
        } else if (key == "workers") {
            const double w = parse_real(value);
            if (w < 1.0 || w != static_cast<double>(static_cast<int>(w))) {
                throw ConfigError("workers must be a positive integer");
            }
            config.workers = static_cast<int>(w);
        } else {
            throw ConfigError("unknown configuration key '" + std::string(key) + "'");
        }
    } catch (const ParameterError& e) {
        throw ConfigError(e.what());
    }
}

std::vector<Setting> parse_config_text(std::string_view text)
{
    std::vector<Setting> out;
    std::size_t line_no = 0;
    for (auto line : split(text, '\n')) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = trim(line.substr(0, hash));
        }
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
        }
        out.emplace_back(std::string(trim(line.substr(0, eq))),
                         std::string(trim(line.substr(eq + 1))));
    }
    return out;
}

std::vector<Setting> read_config_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot read config file " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str());
}

} // namespace qtsteer
