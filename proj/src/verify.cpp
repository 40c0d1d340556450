#include "qtsteer/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>

#include "qtsteer/measures.hpp"
#include "qtsteer/rindler.hpp"
#include "qtsteer/steering.hpp"
#include "qtsteer/sweep.hpp"

namespace qtsteer {

bool VerificationReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.passed || c.known_discrepancy; });
}

const CheckResult* VerificationReport::find(const std::string& name) const
{
    for (const auto& c : checks) {
        if (c.name == name) {
            return &c;
        }
    }
    return nullptr;
}

namespace {

ModelParams params_for(Scenario s, double p, double r, double phi)
{
    ModelParams m;
    m.scenario = s;
    m.p = p;
    m.phi = phi;
    if (s == Scenario::QubitOnly || s == Scenario::Both) m.r_qubit = r;
    if (s == Scenario::QutritOnly || s == Scenario::Both) m.r_qutrit = r;
    return m;
}

// Running maximum of a deviation with the grid point where it occurred.
class Tracker {
public:
    Tracker(std::string name, double tolerance) : name_(std::move(name)), tolerance_(tolerance) {}

    void observe(double deviation, const ModelParams& at)
    {
        if (!(deviation <= worst_)) {  // also catches NaN
            worst_ = deviation;
            std::ostringstream where;
            where << "worst at " << scenario_name(at.scenario) << " p=" << at.p
                  << " r_q=" << at.r_qubit << " r_t=" << at.r_qutrit << " phi=" << at.phi;
            where_ = where.str();
        }
    }

    CheckResult result() const
    {
        CheckResult out;
        out.name = name_;
        out.max_deviation = worst_;
        out.tolerance = tolerance_;
        out.passed = worst_ < tolerance_;
        out.detail = where_;
        return out;
    }

private:
    std::string name_;
    double tolerance_;
    double worst_ = 0.0;
    std::string where_;
};

double trace_defect(const ComplexMatrix& m) { return std::abs(m.trace() - Complex(1.0, 0.0)); }

double min_eigenvalue(const ComplexMatrix& m)
{
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (m + m.adjoint()),
                                                        Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

constexpr std::array<Scenario, 3> kAccelerated = {Scenario::QubitOnly, Scenario::QutritOnly,
                                                  Scenario::Both};

} // namespace

VerificationReport verify(const VerifyGrid& grid)
{
    const auto start = std::chrono::steady_clock::now();
    const std::vector<double> rs = grid.r_values.empty()
                                       ? linspace(0.0, kMaxAcceleration, 9)
                                       : grid.r_values;

    Tracker closed_qubit("closed_vs_oracle[qubit]", 1e-12);
    Tracker closed_qutrit("closed_vs_oracle[qutrit]", 1e-12);
    Tracker composed_both("composed_vs_oracle[both]", 1e-12);
    Tracker trace("physicality_trace", 1e-12);
    Tracker hermitian("physicality_hermiticity", 1e-12);
    Tracker negativity("physicality_min_eigenvalue", 1e-10);
    Tracker r0("r0_reduction", 1e-14);
    Tracker phase("phi_independence", 1e-14);
    Tracker lqu_range("lqu_range", 1e-10);
    Tracker xi_symmetry("xi_symmetry", 1e-10);
    Tracker joint_norm("joint_normalization", 1e-12);
    Tracker steer_range("steerability_range", 1e-15);
    Tracker padding("oracle_padding_r0", 1e-12);

    double printed_trace_worst = 0.0;
    double printed_element_worst = 0.0;
    std::set<std::pair<int, int>> printed_elements;

    auto physical = [&](const RegionIState& s, const ModelParams& at) {
        trace.observe(trace_defect(s.matrix()), at);
        hermitian.observe(hermiticity_defect(s.matrix()), at);
        negativity.observe(std::max(0.0, -min_eigenvalue(s.matrix())), at);
    };

    auto derived = [&](const RegionIState& s, const ModelParams& at) {
        const LquReport u = lqu(s);
        lqu_range.observe(std::max(0.0, std::max(-u.value, u.value - 1.0)), at);
        xi_symmetry.observe((u.xi - u.xi.transpose()).cwiseAbs().maxCoeff(), at);

        const auto qubit = standard_observables(SpinSpace::Qubit);
        const auto qutrit = standard_observables(s.extended() ? SpinSpace::ExtendedQutrit
                                                              : SpinSpace::Qutrit);
        for (std::size_t k = 0; k < 3; ++k) {
            joint_norm.observe(std::abs(joint_distribution(s, qubit[k], qutrit[k]).probs.sum() - 1.0),
                               at);
        }
        for (Convention c : {Convention::AsPrinted, Convention::DeficitNormalized}) {
            const SteeringReport rep = steering_report(s, c);
            for (double v : {rep.steer_ab, rep.steer_ba}) {
                steer_range.observe(std::max(0.0, std::max(-v, v - 1.0)), at);
            }
        }
    };

    for (double p : grid.p_values) {
        const RegionIState inertial = initial_state(p);
        const RegionIState inertial_padded = inertial.padded();
        const ModelParams inertial_at = params_for(Scenario::None, p, 0.0, 0.0);
        physical(inertial, inertial_at);
        derived(inertial, inertial_at);
        for (Direction d : {Direction::AtoB, Direction::BtoA}) {
            padding.observe(std::abs(steering_sum_oracle(inertial, d) -
                                     steering_sum_oracle(inertial_padded, d)),
                            inertial_at);
        }

        for (Scenario s : kAccelerated) {
            for (double r : rs) {
                const RegionIState closed = accelerate_closed(params_for(s, p, r, 0.0));
                const RegionIState printed =
                    s == Scenario::Both
                        ? accelerate_closed(params_for(s, p, r, 0.0), BothForm::AsPrinted)
                        : closed;
                physical(closed, params_for(s, p, r, 0.0));
                derived(closed, params_for(s, p, r, 0.0));

                std::vector<RegionIState> oracles;
                for (double phi : grid.phi_values) {
                    const ModelParams at = params_for(s, p, r, phi);
                    RegionIState oracle = accelerate_oracle(at);
                    physical(oracle, at);

                    const double dev = max_abs_diff(closed.matrix(), oracle.matrix());
                    switch (s) {
                    case Scenario::QubitOnly: closed_qubit.observe(dev, at); break;
                    case Scenario::QutritOnly: closed_qutrit.observe(dev, at); break;
                    default: composed_both.observe(dev, at); break;
                    }
                    if (r == 0.0) {
                        r0.observe(max_abs_diff(oracle.matrix(), inertial_padded.matrix()), at);
                        r0.observe(max_abs_diff(closed.matrix(), inertial_padded.matrix()), at);
                    }
                    if (!oracles.empty()) {
                        phase.observe(max_abs_diff(oracles.front().matrix(), oracle.matrix()), at);
                    }
                    if (s == Scenario::Both) {
                        printed_trace_worst =
                            std::max(printed_trace_worst, trace_defect(printed.matrix()));
                        printed_element_worst = std::max(
                            printed_element_worst, max_abs_diff(printed.matrix(), oracle.matrix()));
                        for (int i = 1; i <= 8; ++i) {
                            for (int j = 1; j <= 8; ++j) {
                                const auto& ri = kElementTableOrder[static_cast<std::size_t>(i - 1)];
                                const auto& cj = kElementTableOrder[static_cast<std::size_t>(j - 1)];
                                if (std::abs(printed.at(ri, cj) - oracle.at(ri, cj)) > 1e-12) {
                                    printed_elements.insert({i, j});
                                }
                            }
                        }
                    }
                    oracles.push_back(std::move(oracle));
                }
            }
        }
    }

    VerificationReport report;
    for (const Tracker* t : {&closed_qubit, &closed_qutrit, &composed_both}) {
        report.checks.push_back(t->result());
    }

    CheckResult printed;
    printed.name = "as_printed_vs_oracle[both]";
    printed.max_deviation = printed_element_worst;
    printed.tolerance = 1e-12;
    printed.passed = printed_element_worst < 1e-12;
    printed.known_discrepancy = true;
    {
        std::ostringstream detail;
        detail << "trace deviation up to " << printed_trace_worst << "; differing elements:";
        for (const auto& [i, j] : printed_elements) {
            detail << " (" << i << "," << j << ")";
        }
        if (printed_elements.empty()) {
            detail << " none";
        }
        printed.detail = detail.str();
    }
    report.checks.push_back(printed);

    for (const Tracker* t : {&trace, &hermitian, &negativity, &r0, &phase, &lqu_range,
                             &xi_symmetry, &joint_norm, &steer_range, &padding}) {
        report.checks.push_back(t->result());
    }

    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string format_report(const VerificationReport& report)
{
    std::ostringstream out;
    for (const auto& c : report.checks) {
        const char* status = c.passed ? "PASS" : (c.known_discrepancy ? "KNOWN" : "FAIL");
        char line[160];
        std::snprintf(line, sizeof line, "%-5s %-30s max=%.3e tol=%.0e  ", status,
                      c.name.c_str(), c.max_deviation, c.tolerance);
        out << line << c.detail << '\n';
    }
    out << (report.passed() ? "verification passed" : "verification FAILED") << " in "
        << report.seconds << " s\n";
    return out.str();
}

} // namespace qtsteer
