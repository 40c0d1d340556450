// qtsteer: parameter sweeps, figure presets and self-verification for the
// accelerated qubit-qutrit model.
//
//   qtsteer sweep --scenario qutrit --p 0,0.01 --r 0:0.785398:101 --quantities steer_ab,steer_ba --out s.csv
//   qtsteer preset fig4a --out fig4a.csv
//   qtsteer verify
//
// Exit codes: 0 success, 1 config error, 2 verification failure, 3 I/O error.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "qtsteer/config.hpp"
#include "qtsteer/errors.hpp"
#include "qtsteer/output.hpp"
#include "qtsteer/sweep.hpp"
#include "qtsteer/trends.hpp"
#include "qtsteer/verify.hpp"

namespace {

enum ExitCode : int { kOk = 0, kConfigError = 1, kVerifyFailed = 2, kIoError = 3 };

int write_records(const qtsteer::SweepConfig& config)
{
    const auto records = qtsteer::run_sweep(config);
    if (config.output_path.empty() || config.output_path == "-") {
        std::cout << (config.format == qtsteer::OutputFormat::Json ? qtsteer::render_json(records)
                                                                   : qtsteer::render_csv(records));
    } else {
        qtsteer::write_output(records, config.output_path, config.format);
        std::cerr << "wrote " << records.size() << " records to " << config.output_path << '\n';
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Decoherence, LQU and steering of an accelerated qubit-qutrit pair"};
    app.require_subcommand(1);

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Evaluate quantities over a (p, r) grid");
    std::string config_file;
    std::map<std::string, std::string> flags;
    sweep->add_option("--config", config_file, "key = value file; flags override it");
    for (const auto& [key, help] : std::initializer_list<std::pair<const char*, const char*>>{
             {"scenario", "none, qubit, qutrit or both"},
             {"p", "comma-separated mixing parameters in [0, 0.5]"},
             {"r", "start:end:steps or comma list, within [0, pi/4]"},
             {"phi", "Unruh phase"},
             {"quantities", "comma list of quantities, or 'all'"},
             {"convention", "as-printed or deficit"},
             {"format", "csv or json"},
             {"out", "output path ('-' for stdout)"},
             {"workers", "number of worker threads"}}) {
        sweep->add_option_function<std::string>(
            std::string("--") + key, [&flags, k = std::string(key)](const std::string& v) { flags[k] = v; },
            help);
    }

    // preset
    auto* preset_cmd = app.add_subcommand("preset", "Run a figure preset");
    std::string preset_name, preset_out, preset_format = "csv";
    int preset_workers = 1;
    preset_cmd->add_option("name", preset_name, "fig1a..fig1d, fig2a..fig2c, fig3a..fig3f, "
                                                "fig4a..fig4c, fig5a..fig5c")
        ->required();
    preset_cmd->add_option("--out", preset_out, "output path ('-' for stdout)");
    preset_cmd->add_option("--format", preset_format, "csv or json");
    preset_cmd->add_option("--workers", preset_workers, "number of worker threads");

    auto* list_cmd = app.add_subcommand("list-presets", "Print the preset names");
    auto* verify_cmd = app.add_subcommand("verify", "Closed form vs oracle and invariant checks");
    auto* trends_cmd = app.add_subcommand("trends", "Compare steerability with the figure trends");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfigError;
    }

    try {
        if (*sweep) {
            qtsteer::SweepConfig config;
            if (!config_file.empty()) {
                for (const auto& [k, v] : qtsteer::read_config_file(config_file)) {
                    qtsteer::apply_setting(config, k, v);
                }
            }
            for (const auto& [k, v] : flags) {
                qtsteer::apply_setting(config, k, v);
            }
            config.validate();
            return write_records(config);
        }
        if (*preset_cmd) {
            auto config = qtsteer::preset(preset_name);
            if (!config) {
                std::cerr << "unknown preset '" << preset_name << "'\n";
                return kConfigError;
            }
            qtsteer::apply_setting(*config, "format", preset_format);
            if (preset_workers < 1) {
                throw qtsteer::ConfigError("workers must be a positive integer");
            }
            config->workers = preset_workers;
            config->output_path = preset_out;
            return write_records(*config);
        }
        if (*list_cmd) {
            for (const auto& name : qtsteer::preset_names()) {
                std::cout << name << '\n';
            }
            return kOk;
        }
        if (*verify_cmd) {
            const auto report = qtsteer::verify();
            std::cout << qtsteer::format_report(report);
            return report.passed() ? kOk : kVerifyFailed;
        }
        if (*trends_cmd) {
            std::cout << qtsteer::format_trend_report(qtsteer::analyze_figure_trends());
            return kOk;
        }
    } catch (const qtsteer::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const qtsteer::IoError& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kIoError;
    }
    return kOk;
}
