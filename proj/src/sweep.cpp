#include "qtsteer/sweep.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include <omp.h>

#include "qtsteer/errors.hpp"
#include "qtsteer/measures.hpp"

namespace qtsteer {

namespace {

constexpr std::array<std::pair<Quantity, std::string_view>, 11> kQuantityNames = {{
    {Quantity::DTotal, "d_total"},
    {Quantity::DQubit, "d_qubit"},
    {Quantity::DQutrit, "d_qutrit"},
    {Quantity::Lqu, "lqu"},
    {Quantity::SAbOracle, "s_ab_oracle"},
    {Quantity::SBaOracle, "s_ba_oracle"},
    {Quantity::IAbClosed, "i_ab_closed"},
    {Quantity::IBaClosed, "i_ba_closed"},
    {Quantity::SteerAb, "steer_ab"},
    {Quantity::SteerBa, "steer_ba"},
    {Quantity::SteerDiff, "steer_diff"},
}};

} // namespace

std::string_view quantity_name(Quantity q)
{
    for (const auto& [value, name] : kQuantityNames) {
        if (value == q) {
            return name;
        }
    }
    return "unknown";
}

Quantity parse_quantity(std::string_view name)
{
    for (const auto& [value, known] : kQuantityNames) {
        if (known == name) {
            return value;
        }
    }
    throw ConfigError("unknown quantity '" + std::string(name) + "'");
}

const std::vector<Quantity>& all_quantities()
{
    static const std::vector<Quantity> all = [] {
        std::vector<Quantity> out;
        for (const auto& entry : kQuantityNames) {
            out.push_back(entry.first);
        }
        return out;
    }();
    return all;
}

void SweepConfig::validate() const
{
    if (p_values.empty()) {
        throw ConfigError("no p values given");
    }
    if (r_values.empty()) {
        throw ConfigError("no r values given");
    }
    if (quantities.empty()) {
        throw ConfigError("no quantities requested");
    }
    if (workers < 1) {
        throw ConfigError("workers must be a positive integer");
    }
    for (double p : p_values) {
        if (!(p >= 0.0 && p <= kMaxMixing)) {
            std::ostringstream msg;
            msg << "p = " << p << " outside [0, 0.5]";
            throw ConfigError(msg.str());
        }
    }
    for (double r : r_values) {
        if (!(r >= 0.0 && r <= kMaxAcceleration)) {
            std::ostringstream msg;
            msg << "r = " << r << " outside [0, pi/4]";
            throw ConfigError(msg.str());
        }
    }
    if (!std::isfinite(phi)) {
        throw ConfigError("phi must be finite");
    }
}

std::vector<double> linspace(double start, double end, std::size_t n)
{
    std::vector<double> out;
    if (n == 0) {
        return out;
    }
    if (n == 1) {
        return {start};
    }
    out.reserve(n);
    const double step = (end - start) / static_cast<double>(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        out.push_back(start + step * static_cast<double>(k));
    }
    out.push_back(end);
    return out;
}

std::vector<double> evaluate_point(const ModelParams& params,
                                   const std::vector<Quantity>& quantities,
                                   Convention convention)
{
    auto needs = [&](std::initializer_list<Quantity> set) {
        return std::any_of(quantities.begin(), quantities.end(), [&](Quantity q) {
            return std::find(set.begin(), set.end(), q) != set.end();
        });
    };

    const RegionIState state = model_state(params);

    DecoherenceReport decoherence;
    if (needs({Quantity::DTotal, Quantity::DQubit, Quantity::DQutrit})) {
        decoherence = decoherence_triple(state);
    }
    double lqu_value = 0.0;
    if (needs({Quantity::Lqu})) {
        lqu_value = lqu(state).value;
    }
    SteeringReport steering;
    if (needs({Quantity::SAbOracle, Quantity::SBaOracle, Quantity::IAbClosed,
               Quantity::IBaClosed, Quantity::SteerAb, Quantity::SteerBa,
               Quantity::SteerDiff})) {
        steering = steering_report(state, convention);
    }

    std::vector<double> out;
    out.reserve(quantities.size());
    for (Quantity q : quantities) {
        switch (q) {
        case Quantity::DTotal: out.push_back(decoherence.d_total); break;
        case Quantity::DQubit: out.push_back(decoherence.d_qubit); break;
        case Quantity::DQutrit: out.push_back(decoherence.d_qutrit); break;
        case Quantity::Lqu: out.push_back(lqu_value); break;
        case Quantity::SAbOracle: out.push_back(steering.s_ab_oracle); break;
        case Quantity::SBaOracle: out.push_back(steering.s_ba_oracle); break;
        case Quantity::IAbClosed: out.push_back(steering.i_ab_closed); break;
        case Quantity::IBaClosed: out.push_back(steering.i_ba_closed); break;
        case Quantity::SteerAb: out.push_back(steering.steer_ab); break;
        case Quantity::SteerBa: out.push_back(steering.steer_ba); break;
        case Quantity::SteerDiff:
            out.push_back(std::abs(steering.steer_ab - steering.steer_ba));
            break;
        }
    }
    return out;
}

namespace {

struct GridPoint {
    double p;
    double r;
};

// The sweep plan: sorted, de-duplicated axes and quantities in name order.
struct Plan {
    std::vector<GridPoint> points;
    std::vector<Quantity> quantities;
};

std::vector<double> sorted_unique(std::vector<double> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

Plan make_plan(const SweepConfig& config)
{
    config.validate();

    Plan plan;
    plan.quantities = config.quantities;
    std::sort(plan.quantities.begin(), plan.quantities.end(), [](Quantity a, Quantity b) {
        return quantity_name(a) < quantity_name(b);
    });
    plan.quantities.erase(std::unique(plan.quantities.begin(), plan.quantities.end()),
                          plan.quantities.end());

    // The inertial scenario has no acceleration axis.
    const std::vector<double> rs = config.scenario == Scenario::None
                                       ? std::vector<double>{0.0}
                                       : sorted_unique(config.r_values);
    for (double p : sorted_unique(config.p_values)) {
        for (double r : rs) {
            plan.points.push_back({p, r});
        }
    }
    return plan;
}

ModelParams params_at(const SweepConfig& config, const GridPoint& point)
{
    ModelParams params;
    params.p = point.p;
    params.phi = config.phi;
    params.scenario = config.scenario;
    if (config.scenario == Scenario::QubitOnly || config.scenario == Scenario::Both) {
        params.r_qubit = point.r;
    }
    if (config.scenario == Scenario::QutritOnly || config.scenario == Scenario::Both) {
        params.r_qutrit = point.r;
    }
    return params;
}

std::vector<SweepRecord> assemble(const SweepConfig& config, const Plan& plan,
                                  const std::vector<std::vector<double>>& values)
{
    std::vector<SweepRecord> records;
    records.reserve(plan.points.size() * plan.quantities.size());
    const std::string scenario(scenario_name(config.scenario));
    for (std::size_t k = 0; k < plan.points.size(); ++k) {
        const ModelParams params = params_at(config, plan.points[k]);
        for (std::size_t q = 0; q < plan.quantities.size(); ++q) {
            const double value = values[k][q];
            if (!std::isfinite(value)) {
                std::ostringstream msg;
                msg << quantity_name(plan.quantities[q]) << " is not finite at p = "
                    << params.p << ", r = " << plan.points[k].r;
                throw std::runtime_error(msg.str());
            }
            records.push_back({scenario, params.p, params.r_qubit, params.r_qutrit, params.phi,
                               std::string(quantity_name(plan.quantities[q])), value});
        }
    }
    return records;
}

} // namespace

std::vector<SweepRecord> run_sweep(const SweepConfig& config)
{
    const Plan plan = make_plan(config);
    const auto n = static_cast<std::ptrdiff_t>(plan.points.size());
    std::vector<std::vector<double>> values(plan.points.size());

    // Exceptions may not cross the parallel region; keep the first one.
    std::exception_ptr failure;
#pragma omp parallel for num_threads(config.workers) schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < n; ++k) {
        try {
            const auto idx = static_cast<std::size_t>(k);
            values[idx] = evaluate_point(params_at(config, plan.points[idx]), plan.quantities,
                                         config.convention);
        } catch (...) {
#pragma omp critical(qtsteer_sweep_failure)
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return assemble(config, plan, values);
}

std::vector<SweepRecord> run_sweep_serial(const SweepConfig& config)
{
    const Plan plan = make_plan(config);
    std::vector<std::vector<double>> values;
    values.reserve(plan.points.size());
    for (const auto& point : plan.points) {
        values.push_back(evaluate_point(params_at(config, point), plan.quantities,
                                        config.convention));
    }
    return assemble(config, plan, values);
}

// --- presets ---------------------------------------------------------------------

const std::vector<std::string>& preset_names()
{
    static const std::vector<std::string> names = {
        "fig1a", "fig1b", "fig1c", "fig1d", "fig2a", "fig2b", "fig2c",
        "fig3a", "fig3b", "fig3c", "fig3d", "fig3e", "fig3f",
        "fig4a", "fig4b", "fig4c", "fig5a", "fig5b", "fig5c",
    };
    return names;
}

std::optional<SweepConfig> preset(std::string_view name)
{
    const auto r_axis = linspace(0.0, kMaxAcceleration, kPresetGridPoints);
    constexpr std::array<Scenario, 3> panel_scenario = {Scenario::QubitOnly, Scenario::QutritOnly,
                                                        Scenario::Both};
    constexpr std::array<double, 3> steering_p = {0.0, 0.01, 0.05};

    if (name.size() != 5 || name.substr(0, 3) != "fig") {
        return std::nullopt;
    }
    const char figure = name[3];
    const int panel = name[4] - 'a';

    SweepConfig config;
    config.r_values = r_axis;
    switch (figure) {
    case '1':  // decoherence: inertial p sweep, then each accelerated subsystem at p = 0.1
        if (panel < 0 || panel > 3) return std::nullopt;
        config.quantities = {Quantity::DTotal, Quantity::DQubit, Quantity::DQutrit};
        if (panel == 0) {
            config.scenario = Scenario::None;
            config.p_values = linspace(0.0, kMaxMixing, kPresetGridPoints);
            config.r_values = {0.0};
        } else {
            config.scenario = panel_scenario[static_cast<std::size_t>(panel - 1)];
            config.p_values = {0.1};
        }
        return config;
    case '2':  // LQU for several mixings per accelerated subsystem
        if (panel < 0 || panel > 2) return std::nullopt;
        config.scenario = panel_scenario[static_cast<std::size_t>(panel)];
        config.p_values = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5};
        config.quantities = {Quantity::Lqu};
        return config;
    case '3':  // steering sums: (a,b) qubit, (c,d) qutrit, (e,f) both; even panels A->B
        if (panel < 0 || panel > 5) return std::nullopt;
        config.scenario = panel_scenario[static_cast<std::size_t>(panel / 2)];
        config.p_values = {0.1};
        config.quantities = panel % 2 == 0
                                ? std::vector<Quantity>{Quantity::IAbClosed, Quantity::SAbOracle}
                                : std::vector<Quantity>{Quantity::IBaClosed, Quantity::SBaOracle};
        return config;
    case '4':
    case '5':  // steerability degrees with the qubit (4) or the qutrit (5) accelerated
        if (panel < 0 || panel > 2) return std::nullopt;
        config.scenario = figure == '4' ? Scenario::QubitOnly : Scenario::QutritOnly;
        config.p_values = {steering_p[static_cast<std::size_t>(panel)]};
        config.quantities = {Quantity::SteerAb, Quantity::SteerBa, Quantity::SteerDiff};
        return config;
    default:
        return std::nullopt;
    }
}

} // namespace qtsteer
