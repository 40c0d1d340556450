#include "qtsteer/steering.hpp"

#include <algorithm>
#include <cmath>

#include "qtsteer/errors.hpp"
#include "qtsteer/measures.hpp"

namespace qtsteer {

namespace {

constexpr double kOutcomeMergeTol = 1e-9;
constexpr double kZeroProbability = 1e-15;

} // namespace

Observable::Observable(std::string name, ComplexMatrix matrix)
    : name_(std::move(name)), matrix_(std::move(matrix))
{
    const SpectralDecomposition spec = hermitian_eig(matrix_);
    eigenvectors_ = spec.eigenvectors;

    for (Eigen::Index k = 0; k < spec.eigenvalues.size(); ++k) {
        double value = spec.eigenvalues(k);
        // Spin spectra are integral; report them exactly.
        if (std::abs(value - std::round(value)) < kOutcomeMergeTol) {
            value = std::round(value);
        }
        const ComplexVector v = spec.eigenvectors.col(k);
        if (!spectrum_.empty() && std::abs(spectrum_.back().outcome - value) < kOutcomeMergeTol) {
            spectrum_.back().projector += v * v.adjoint();
        } else {
            spectrum_.push_back({value, v * v.adjoint()});
        }
    }
}

std::array<Observable, 3> standard_observables(SpinSpace space)
{
    const Complex i{0.0, 1.0};
    if (space == SpinSpace::Qubit) {
        const auto paulis = pauli_matrices();
        return {Observable("S_x^A", paulis[0]), Observable("S_y^A", paulis[1]),
                Observable("S_z^A", paulis[2])};
    }

    const Eigen::Index n = space == SpinSpace::ExtendedQutrit ? 4 : 3;
    auto generator = [&](Eigen::Index a, Eigen::Index b, Complex coefficient) {
        ComplexMatrix m = ComplexMatrix::Zero(n, n);
        m(a, b) = coefficient;
        m(b, a) = std::conj(coefficient);
        return m;
    };
    return {Observable("S_x^B", generator(1, 2, -i)),
            Observable("S_y^B", generator(0, 2, i)),
            Observable("S_z^B", generator(0, 1, -i))};
}

// --- joint statistics ----------------------------------------------------------

std::vector<double> JointDistribution::marginal_a() const
{
    std::vector<double> out(static_cast<std::size_t>(probs.rows()));
    for (Eigen::Index i = 0; i < probs.rows(); ++i) {
        out[static_cast<std::size_t>(i)] = probs.row(i).sum();
    }
    return out;
}

std::vector<double> JointDistribution::marginal_b() const
{
    std::vector<double> out(static_cast<std::size_t>(probs.cols()));
    for (Eigen::Index j = 0; j < probs.cols(); ++j) {
        out[static_cast<std::size_t>(j)] = probs.col(j).sum();
    }
    return out;
}

JointDistribution JointDistribution::transposed() const
{
    return {outcomes_b, outcomes_a, probs.transpose()};
}

JointDistribution joint_distribution(const RegionIState& state, const Observable& obs_a,
                                     const Observable& obs_b)
{
    if (obs_a.dim() != 2 || obs_b.dim() != state.qutrit_dim()) {
        throw DimensionError("joint_distribution: observables of dimension " +
                             std::to_string(obs_a.dim()) + " and " +
                             std::to_string(obs_b.dim()) + " do not fit a 2x" +
                             std::to_string(state.qutrit_dim()) + " state");
    }

    JointDistribution out;
    const auto& spec_a = obs_a.spectrum();
    const auto& spec_b = obs_b.spectrum();
    out.probs.resize(static_cast<Eigen::Index>(spec_a.size()),
                     static_cast<Eigen::Index>(spec_b.size()));
    for (const auto& pa : spec_a) {
        out.outcomes_a.push_back(pa.outcome);
    }
    for (const auto& pb : spec_b) {
        out.outcomes_b.push_back(pb.outcome);
    }
    for (std::size_t i = 0; i < spec_a.size(); ++i) {
        for (std::size_t j = 0; j < spec_b.size(); ++j) {
            const ComplexMatrix effect = kron(spec_a[i].projector, spec_b[j].projector);
            // Tr[rho E] without forming the product.
            const double p = (state.matrix().transpose().cwiseProduct(effect)).sum().real();
            out.probs(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = p;
        }
    }
    return out;
}

double shannon_entropy(std::span<const double> probs)
{
    double h = 0.0;
    for (double p : probs) {
        if (p > kZeroProbability) {
            h -= p * std::log2(p);
        }
    }
    return h;
}

double conditional_entropy(const JointDistribution& joint)
{
    std::vector<double> cells(joint.probs.data(), joint.probs.data() + joint.probs.size());
    const auto marginal = joint.marginal_a();
    return shannon_entropy(cells) - shannon_entropy(marginal);
}

double steering_sum_oracle(const RegionIState& state, Direction direction)
{
    const auto qubit = standard_observables(SpinSpace::Qubit);
    const auto qutrit = standard_observables(state.extended() ? SpinSpace::ExtendedQutrit
                                                              : SpinSpace::Qutrit);
    double sum = 0.0;
    for (std::size_t k = 0; k < 3; ++k) {
        const JointDistribution joint = joint_distribution(state, qubit[k], qutrit[k]);
        sum += conditional_entropy(direction == Direction::AtoB ? joint : joint.transposed());
    }
    return sum;
}

// --- closed forms --------------------------------------------------------------

namespace {

// x log2(scale * x) with 0 log 0 = 0. Arguments are non-negative for any PSD
// state up to rounding.
double xlog(double x, double scale = 1.0)
{
    return x > kZeroProbability ? x * std::log2(scale * x) : 0.0;
}

} // namespace

double steering_closed(const RegionIState& state, Direction direction)
{
    auto e = [&](int i, int j) {
        return state.element(kElementTableOrder[static_cast<std::size_t>(i - 1)],
                             kElementTableOrder[static_cast<std::size_t>(j - 1)])
            .real();
    };

    const double b = e(2, 2) + e(5, 5);
    const double coherence = e(1, 6) + e(3, 4);
    const double c_plus = 1.0 - b + 2.0 * coherence;
    const double c_minus = 1.0 - b - 2.0 * coherence;
    const double p12 = e(1, 1) + e(2, 2);
    const double p45 = e(4, 4) + e(5, 5);

    if (direction == Direction::AtoB) {
        const double a = e(1, 1) + e(4, 4);
        const double imbalance = e(1, 1) + e(2, 2) + e(3, 3) - e(4, 4) - e(5, 5) - e(6, 6);
        const double d_plus = 1.0 + imbalance;
        const double d_minus = 1.0 - imbalance;
        constexpr double k32 = 32.0;  // 2^5
        return xlog(1.0 - a) + xlog(a) + xlog(b) + 0.5 * xlog(c_plus) + 0.5 * xlog(c_minus) +
               xlog(p12, k32) + xlog(e(3, 3), k32) + xlog(e(6, 6), k32) + xlog(p45, k32) -
               0.5 * xlog(d_minus) - 0.5 * xlog(d_plus);
    }

    const double g = e(3, 3) + e(6, 6);
    return 0.5 * xlog(c_plus) + 0.5 * xlog(c_minus) + xlog(p12, 4.0) + xlog(e(3, 3), 4.0) +
           xlog(e(6, 6), 4.0) + xlog(p45, 4.0) - xlog(1.0 - b) - xlog(1.0 - g) - xlog(g);
}

// --- steerability ----------------------------------------------------------------

std::string_view convention_name(Convention c)
{
    return c == Convention::AsPrinted ? "as-printed" : "deficit";
}

Convention parse_convention(std::string_view name)
{
    if (name == "as-printed") return Convention::AsPrinted;
    if (name == "deficit") return Convention::DeficitNormalized;
    throw ParameterError("unknown convention '" + std::string(name) +
                         "' (expected as-printed or deficit)");
}

double steerability(double value, Direction direction, Convention convention)
{
    const bool ab = direction == Direction::AtoB;
    double degree = 0.0;
    if (convention == Convention::AsPrinted) {
        const double bound = ab ? SteeringBound::gamma_qutrit : SteeringBound::gamma_qubit;
        const double s_max = ab ? SteeringBound::s_max_ab : SteeringBound::s_max_ba;
        degree = (value - bound) / (s_max - bound);
    } else {
        const double gamma = ab ? SteeringBound::gamma_qutrit : SteeringBound::gamma_qubit;
        degree = (gamma - value) / gamma;
    }
    return std::clamp(degree, 0.0, 1.0);
}

SteeringReport steering_report(const RegionIState& state, Convention convention)
{
    SteeringReport out;
    out.convention = convention;
    out.s_ab_oracle = steering_sum_oracle(state, Direction::AtoB);
    out.s_ba_oracle = steering_sum_oracle(state, Direction::BtoA);
    out.i_ab_closed = steering_closed(state, Direction::AtoB);
    out.i_ba_closed = steering_closed(state, Direction::BtoA);

    const bool printed = convention == Convention::AsPrinted;
    out.steer_ab = steerability(printed ? out.i_ab_closed : out.s_ab_oracle, Direction::AtoB,
                                convention);
    out.steer_ba = steerability(printed ? out.i_ba_closed : out.s_ba_oracle, Direction::BtoA,
                                convention);
    return out;
}

OverlapBound overlap_bound(const Observable& first, const Observable& second)
{
    if (first.dim() != second.dim()) {
        throw DimensionError("overlap_bound: observables act on different spaces");
    }
    const double omega =
        (first.eigenvectors().adjoint() * second.eigenvectors()).cwiseAbs2().maxCoeff();
    const double log2_omega = std::log2(omega);
    return {omega, log2_omega, -log2_omega};
}

} // namespace qtsteer
