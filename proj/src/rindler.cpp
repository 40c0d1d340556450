#include "qtsteer/rindler.hpp"

#include <cmath>
#include <sstream>

#include "qtsteer/errors.hpp"

namespace qtsteer {

std::string_view scenario_name(Scenario s)
{
    switch (s) {
    case Scenario::None: return "none";
    case Scenario::QubitOnly: return "qubit";
    case Scenario::QutritOnly: return "qutrit";
    case Scenario::Both: return "both";
    }
    return "unknown";
}

Scenario parse_scenario(std::string_view name)
{
    if (name == "none") return Scenario::None;
    if (name == "qubit") return Scenario::QubitOnly;
    if (name == "qutrit") return Scenario::QutritOnly;
    if (name == "both") return Scenario::Both;
    throw ParameterError("unknown scenario '" + std::string(name) +
                         "' (expected none, qubit, qutrit or both)");
}

namespace {

void check_range(const char* what, double value, double hi)
{
    if (!(value >= 0.0 && value <= hi)) {
        std::ostringstream msg;
        msg << what << " = " << value << " outside [0, " << hi << "]";
        throw ParameterError(msg.str());
    }
}

bool accelerates_qubit(Scenario s) { return s == Scenario::QubitOnly || s == Scenario::Both; }
bool accelerates_qutrit(Scenario s) { return s == Scenario::QutritOnly || s == Scenario::Both; }

// Shorthand for the element tables.
constexpr BasisLabel ket(int qubit, int qutrit) { return {qubit, static_cast<QutritLevel>(qutrit)}; }
constexpr int kPair = 3;

} // namespace

void ModelParams::validate() const
{
    check_range("p", p, kMaxMixing);
    if (accelerates_qubit(scenario)) {
        check_range("r_q", r_qubit, kMaxAcceleration);
    }
    if (accelerates_qutrit(scenario)) {
        check_range("r_t", r_qutrit, kMaxAcceleration);
    }
    if (!std::isfinite(phi)) {
        throw ParameterError("phi must be finite");
    }
}

std::string BasisLabel::to_string() const
{
    std::string out = "|" + std::to_string(qubit);
    out += qutrit == QutritLevel::Pair ? "ud" : std::to_string(static_cast<int>(qutrit));
    return out + ">";
}

// --- RegionIState ------------------------------------------------------------

RegionIState::RegionIState(ComplexMatrix matrix, bool extended)
    : matrix_(std::move(matrix)), qutrit_dim_(extended ? 4 : 3), shape_{2, qutrit_dim_}
{
    const auto n = static_cast<Eigen::Index>(dim());
    if (matrix_.rows() != n || matrix_.cols() != n) {
        throw DimensionError("RegionIState: expected a " + std::to_string(n) + "x" +
                             std::to_string(n) + " matrix");
    }
}

RegionIState RegionIState::zeros(bool extended)
{
    const Eigen::Index n = extended ? 8 : 6;
    return RegionIState(ComplexMatrix::Zero(n, n), extended);
}

std::vector<BasisLabel> RegionIState::basis() const
{
    std::vector<BasisLabel> out;
    out.reserve(dim());
    for (int q = 0; q < 2; ++q) {
        for (std::size_t t = 0; t < qutrit_dim_; ++t) {
            out.push_back({q, static_cast<QutritLevel>(t)});
        }
    }
    return out;
}

Eigen::Index RegionIState::index_of(BasisLabel label) const
{
    const auto t = static_cast<std::size_t>(label.qutrit);
    if (label.qubit < 0 || label.qubit > 1 || t >= qutrit_dim_) {
        throw DimensionError("basis label " + label.to_string() + " not in this state's space");
    }
    return static_cast<Eigen::Index>(static_cast<std::size_t>(label.qubit) * qutrit_dim_ + t);
}

Complex RegionIState::at(BasisLabel row, BasisLabel col) const
{
    return matrix_(index_of(row), index_of(col));
}

Complex RegionIState::element(BasisLabel row, BasisLabel col) const
{
    if (!extended() && (row.qutrit == QutritLevel::Pair || col.qutrit == QutritLevel::Pair)) {
        return {0.0, 0.0};
    }
    return at(row, col);
}

void RegionIState::set(BasisLabel row, BasisLabel col, Complex value)
{
    matrix_(index_of(row), index_of(col)) = value;
}

void RegionIState::set_hermitian(BasisLabel row, BasisLabel col, Complex value)
{
    set(row, col, value);
    set(col, row, std::conj(value));
}

RegionIState RegionIState::padded() const
{
    if (extended()) {
        return *this;
    }
    RegionIState out = zeros(true);
    for (const auto& row : basis()) {
        for (const auto& col : basis()) {
            out.set(row, col, at(row, col));
        }
    }
    return out;
}

// --- states ------------------------------------------------------------------

RegionIState initial_state(double p)
{
    check_range("p", p, kMaxMixing);
    RegionIState rho = RegionIState::zeros(false);

    const double mixed = p / 2.0;
    rho.set(ket(0, 0), ket(0, 0), mixed);
    rho.set(ket(0, 1), ket(0, 1), mixed);
    rho.set(ket(1, 1), ket(1, 1), mixed);
    rho.set(ket(1, 2), ket(1, 2), mixed);
    rho.set_hermitian(ket(1, 2), ket(0, 0), mixed);

    const double entangled = (1.0 - 2.0 * p) / 2.0;
    rho.set(ket(0, 2), ket(0, 2), entangled);
    rho.set(ket(1, 0), ket(1, 0), entangled);
    rho.set_hermitian(ket(0, 2), ket(1, 0), entangled);
    return rho;
}

namespace {

RegionIState qubit_closed(double p, double r)
{
    const double c = std::cos(r), s = std::sin(r);
    const double c2 = c * c, s2 = s * s;
    const double half_p = p / 2.0, half_q = (1.0 - 2.0 * p) / 2.0;

    RegionIState rho = RegionIState::zeros(true);
    rho.set(ket(0, 0), ket(0, 0), half_p * c2);
    rho.set(ket(0, 1), ket(0, 1), half_p * c2);
    rho.set(ket(0, 2), ket(0, 2), half_q * c2);
    rho.set(ket(1, 0), ket(1, 0), half_p * s2 + half_q);
    rho.set(ket(1, 1), ket(1, 1), half_p * (s2 + 1.0));
    rho.set(ket(1, 2), ket(1, 2), half_q * s2 + half_p);
    rho.set_hermitian(ket(0, 0), ket(1, 2), half_p * c);
    rho.set_hermitian(ket(0, 2), ket(1, 0), half_q * c);
    return rho;
}

RegionIState qutrit_closed(double p, double r)
{
    const double c = std::cos(r), s = std::sin(r);
    const double c2 = c * c, s2 = s * s;
    const double c3 = c2 * c, c4 = c2 * c2;

    RegionIState rho = RegionIState::zeros(true);
    rho.set(ket(0, 0), ket(0, 0), p / 2.0 * c4);
    rho.set(ket(0, 1), ket(0, 1), c2 * p / 2.0 * (s2 + 1.0));
    rho.set(ket(0, 2), ket(0, 2), c2 / 2.0 * (p * s2 - 2.0 * p + 1.0));
    rho.set(ket(1, 0), ket(1, 0), 0.5 * (1.0 - 2.0 * p) * c4);
    const double rho55 = c2 / 2.0 * ((1.0 - 2.0 * p) * s2 + p);
    rho.set(ket(1, 1), ket(1, 1), rho55);
    rho.set(ket(1, 2), ket(1, 2), rho55);
    rho.set(ket(0, kPair), ket(0, kPair), s2 / 2.0 * (p * s2 - p + 1.0));
    rho.set(ket(1, kPair), ket(1, kPair), s2 * ((1.0 - 2.0 * p) / 2.0 * s2 + p));

    rho.set_hermitian(ket(0, 0), ket(1, 2), p / 2.0 * c3);
    rho.set_hermitian(ket(0, 1), ket(1, kPair), -p / 2.0 * c * s2);
    rho.set_hermitian(ket(0, 2), ket(1, 0), (1.0 - 2.0 * p) / 2.0 * c3);
    rho.set_hermitian(ket(1, 1), ket(0, kPair), (2.0 * p - 1.0) / 2.0 * c * s2);
    return rho;
}

// Element table for two-sided acceleration exactly as published, built on
// the qutrit-only elements.
RegionIState both_as_printed(double p, double r_qubit, double r_qutrit)
{
    const RegionIState t = qutrit_closed(p, r_qutrit);
    const double c = std::cos(r_qubit), s = std::sin(r_qubit);
    const double c2 = c * c, s2 = s * s;
    auto e = [&](int i, int j) {
        return t.at(kElementTableOrder[i - 1], kElementTableOrder[j - 1]);
    };

    RegionIState rho = RegionIState::zeros(true);
    auto put = [&](int i, int j, Complex v) {
        rho.set_hermitian(kElementTableOrder[i - 1], kElementTableOrder[j - 1], v);
    };
    put(1, 1, c2 * e(1, 1));
    put(2, 2, c2 * e(2, 2));
    put(3, 3, c2 * e(3, 3));
    put(4, 4, e(5, 5) + s2 * e(1, 1));
    put(5, 5, e(5, 5) + s2 * e(2, 2));
    put(6, 6, e(6, 6) + s2 * e(3, 3));
    put(7, 7, c2 * e(7, 7));
    put(8, 8, e(8, 8) + s2 * e(7, 7));
    put(1, 6, c * e(1, 6));
    put(2, 8, c * e(2, 8));
    put(5, 7, c * e(5, 7));
    put(3, 4, c * e(3, 4));
    return rho;
}

} // namespace

RegionIState apply_qubit_channel(const RegionIState& state, double r_qubit)
{
    const double c = std::cos(r_qubit), s = std::sin(r_qubit);
    const RegionIState extended = state.padded();
    const ComplexMatrix& in = extended.matrix();
    const Eigen::Index n = 4;

    // Qubit blocks of the 2 (x) 4 matrix: [[A00, A01], [A10, A11]].
    ComplexMatrix out = ComplexMatrix::Zero(8, 8);
    out.block(0, 0, n, n) = c * c * in.block(0, 0, n, n);
    out.block(n, n, n, n) = in.block(n, n, n, n) + s * s * in.block(0, 0, n, n);
    out.block(0, n, n, n) = c * in.block(0, n, n, n);
    out.block(n, 0, n, n) = c * in.block(n, 0, n, n);
    return RegionIState(std::move(out), true);
}

RegionIState accelerate_closed(const ModelParams& params, BothForm both)
{
    params.validate();
    switch (params.scenario) {
    case Scenario::None:
        throw ParameterError("accelerate_closed: scenario none has no accelerated form; "
                             "use initial_state");
    case Scenario::QubitOnly:
        return qubit_closed(params.p, params.r_qubit);
    case Scenario::QutritOnly:
        return qutrit_closed(params.p, params.r_qutrit);
    case Scenario::Both:
        if (both == BothForm::AsPrinted) {
            return both_as_printed(params.p, params.r_qubit, params.r_qutrit);
        }
        return apply_qubit_channel(qutrit_closed(params.p, params.r_qutrit), params.r_qubit);
    }
    throw ParameterError("accelerate_closed: unknown scenario");
}

RegionIState model_state(const ModelParams& params)
{
    if (params.scenario == Scenario::None) {
        params.validate();
        return initial_state(params.p);
    }
    return accelerate_closed(params);
}

// --- oracle ------------------------------------------------------------------

std::array<ModeExpansion, 2> qubit_rindler_expansion(double r)
{
    const double c = std::cos(r), s = std::sin(r);
    return {{
        {{c, 0, 0}, {s, 1, 1}},
        {{1.0, 1, 0}},
    }};
}

std::array<ModeExpansion, 3> qutrit_rindler_expansion(double r, double phi)
{
    const double c = std::cos(r), s = std::sin(r);
    const Complex e1 = std::polar(1.0, phi);
    const Complex e2 = std::polar(1.0, 2.0 * phi);
    return {{
        {{c * c, 0, 0}, {e1 * c * s, 1, 2}, {e1 * c * s, 2, 1}, {e2 * s * s, kPair, kPair}},
        {{c, 1, 0}, {e1 * s, kPair, 1}},
        {{c, 2, 0}, {-e1 * s, kPair, 2}},
    }};
}

RegionIState accelerate_oracle(const ModelParams& params)
{
    params.validate();
    if (params.scenario == Scenario::None) {
        throw ParameterError("accelerate_oracle: scenario none has no accelerated form; "
                             "use initial_state");
    }

    // An inertial subsystem keeps its ket in region I and leaves region II
    // in a one-dimensional vacuum.
    std::array<ModeExpansion, 2> qubit_map = {{{{1.0, 0, 0}}, {{1.0, 1, 0}}}};
    std::size_t qubit_region2 = 1;
    if (accelerates_qubit(params.scenario)) {
        qubit_map = qubit_rindler_expansion(params.r_qubit);
        qubit_region2 = 2;
    }
    std::array<ModeExpansion, 3> qutrit_map = {{{{1.0, 0, 0}}, {{1.0, 1, 0}}, {{1.0, 2, 0}}}};
    std::size_t qutrit_region2 = 1;
    if (accelerates_qutrit(params.scenario)) {
        qutrit_map = qutrit_rindler_expansion(params.r_qutrit, params.phi);
        qutrit_region2 = 4;
    }

    // Isometry from the 2 (x) 3 Minkowski space onto
    // qubit_I (x) qutrit_I (x) qubit_II (x) qutrit_II, region II trailing.
    const TensorShape full{2, 4, qubit_region2, qutrit_region2};
    ComplexMatrix isometry = ComplexMatrix::Zero(static_cast<Eigen::Index>(full.dim()), 6);
    for (int a = 0; a < 2; ++a) {
        for (int j = 0; j < 3; ++j) {
            for (const auto& q : qubit_map[a]) {
                for (const auto& t : qutrit_map[j]) {
                    const auto row = ((static_cast<std::size_t>(q.region1) * 4 +
                                       static_cast<std::size_t>(t.region1)) * qubit_region2 +
                                      static_cast<std::size_t>(q.region2)) * qutrit_region2 +
                                     static_cast<std::size_t>(t.region2);
                    isometry(static_cast<Eigen::Index>(row), a * 3 + j) += q.amplitude * t.amplitude;
                }
            }
        }
    }

    const ComplexMatrix minkowski = initial_state(params.p).matrix();
    const ComplexMatrix global = isometry * minkowski * isometry.adjoint();
    return RegionIState(partial_trace(global, full, {0, 1}), true);
}

ComplexMatrix reduce_qubit(const RegionIState& state)
{
    return partial_trace(state.matrix(), state.shape(), {0});
}

ComplexMatrix reduce_qutrit(const RegionIState& state)
{
    return partial_trace(state.matrix(), state.shape(), {1});
}

} // namespace qtsteer
