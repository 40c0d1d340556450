#ifndef QTSTEER_SWEEP_HPP
#define QTSTEER_SWEEP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qtsteer/rindler.hpp"
#include "qtsteer/steering.hpp"

namespace qtsteer {

enum class Quantity : std::uint8_t {
    DTotal,
    DQubit,
    DQutrit,
    Lqu,
    SAbOracle,
    SBaOracle,
    IAbClosed,
    IBaClosed,
    SteerAb,
    SteerBa,
    SteerDiff,
};

std::string_view quantity_name(Quantity q);
Quantity parse_quantity(std::string_view name);  // throws ConfigError
const std::vector<Quantity>& all_quantities();

enum class OutputFormat : std::uint8_t { Csv, Json };

struct SweepConfig {
    Scenario scenario = Scenario::None;
    std::vector<double> p_values;
    std::vector<double> r_values{0.0};
    double phi = 0.0;
    std::vector<Quantity> quantities;
    Convention convention = Convention::AsPrinted;
    std::string output_path;
    OutputFormat format = OutputFormat::Csv;
    int workers = 1;

    /// Throws ConfigError on empty grids, out-of-range values or workers < 1.
    void validate() const;
};

struct SweepRecord {
    std::string scenario;
    double p = 0.0;
    double r_q = 0.0;
    double r_t = 0.0;
    double phi = 0.0;
    std::string quantity;
    double value = 0.0;

    bool operator==(const SweepRecord&) const = default;
};

/// Values of `quantities` at one grid point, in the order given.
std::vector<double> evaluate_point(const ModelParams& params,
                                   const std::vector<Quantity>& quantities,
                                   Convention convention);

/// Evaluates the grid with an OpenMP team of `config.workers` threads.
/// Records are ordered by (p, r, quantity name); the result does not depend
/// on the worker count.
std::vector<SweepRecord> run_sweep(const SweepConfig& config);

/// Single-threaded reference for run_sweep.
std::vector<SweepRecord> run_sweep_serial(const SweepConfig& config);

/// n evenly spaced points from start to end inclusive.
std::vector<double> linspace(double start, double end, std::size_t n);

inline constexpr std::size_t kPresetGridPoints = 101;

const std::vector<std::string>& preset_names();
std::optional<SweepConfig> preset(std::string_view name);

} // namespace qtsteer

#endif
