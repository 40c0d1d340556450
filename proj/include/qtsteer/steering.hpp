#ifndef QTSTEER_STEERING_HPP
#define QTSTEER_STEERING_HPP

/*
 * Entropic steering between the qubit (A) and the qutrit (B).
 *
 * Two routes to the steering sum are kept side by side:
 *   steering_sum_oracle - builds the joint outcome table of each spin pair
 *                         from projectors and adds up conditional Shannon
 *                         entropies
 *   steering_closed     - evaluates the published closed-form expressions
 *                         I_AB / I_BA from density matrix elements
 * The two are not the same function of the state; trend analysis compares
 * them (see trends.hpp).
 */

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qtsteer/linalg.hpp"
#include "qtsteer/rindler.hpp"

namespace qtsteer {

struct SpectralProjector {
    double outcome;
    ComplexMatrix projector;
};

/// Hermitian operator together with its spectral resolution. Spectrum entries
/// are ordered by descending outcome; degenerate eigenvalues share a projector.
class Observable {
public:
    Observable(std::string name, ComplexMatrix matrix);

    const std::string& name() const { return name_; }
    const ComplexMatrix& matrix() const { return matrix_; }
    const std::vector<SpectralProjector>& spectrum() const { return spectrum_; }
    std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }

    /// Orthonormal eigenvectors (columns), ordered like the spectrum.
    const ComplexMatrix& eigenvectors() const { return eigenvectors_; }

private:
    std::string name_;
    ComplexMatrix matrix_;
    ComplexMatrix eigenvectors_;
    std::vector<SpectralProjector> spectrum_;
};

enum class SpinSpace : std::uint8_t { Qubit, Qutrit, ExtendedQutrit };

/// {S_x, S_y, S_z} for the given space. The qutrit operators are the
/// antisymmetric generators -i(|1><2|-|2><1|), i(|0><2|-|2><0|),
/// -i(|0><1|-|1><0|); ExtendedQutrit pads them with an empty pair-state
/// row and column, which puts |ud> in the outcome-0 eigenspace.
std::array<Observable, 3> standard_observables(SpinSpace space);

/// probs(i, j) = p(outcomes_a[i], outcomes_b[j]).
struct JointDistribution {
    std::vector<double> outcomes_a;
    std::vector<double> outcomes_b;
    Eigen::MatrixXd probs;

    std::vector<double> marginal_a() const;
    std::vector<double> marginal_b() const;
    JointDistribution transposed() const;
};

/// p(a, b) = Tr[rho (P_a (x) P_b)], obs_a on the qubit and obs_b on the
/// qutrit factor of `state`.
JointDistribution joint_distribution(const RegionIState& state, const Observable& obs_a,
                                     const Observable& obs_b);

/// Shannon entropy in bits. Probabilities below 1e-15 count as zero.
double shannon_entropy(std::span<const double> probs);

/// H(B|A) = H(A,B) - H(A) in bits.
double conditional_entropy(const JointDistribution& joint);

enum class Direction : std::uint8_t { AtoB, BtoA };

/// Sum over i in {x,y,z} of H(S_i^B | S_i^A) (AtoB) or H(S_i^A | S_i^B) (BtoA).
double steering_sum_oracle(const RegionIState& state, Direction direction);

/// Published closed forms I_AB (AtoB) and I_BA (BtoA), evaluated term by term
/// from matrix elements addressed by basis label. 0 log 0 = 0.
double steering_closed(const RegionIState& state, Direction direction);

enum class Convention : std::uint8_t {
    /// clamp(v - 3) for AtoB and clamp(v - 2) for BtoA; normalizers
    /// S_max - 3 = 1 and S_max - 2 = 1.
    AsPrinted,
    /// max{0, (gamma - v) / gamma}, gamma = 3 (AtoB) or 2 (BtoA).
    DeficitNormalized,
};

std::string_view convention_name(Convention c);  // as-printed, deficit
Convention parse_convention(std::string_view name);

struct SteeringBound {
    static constexpr double gamma_qubit = 2.0;
    static constexpr double gamma_qutrit = 3.0;
    static constexpr double s_max_ab = 4.0;
    static constexpr double s_max_ba = 3.0;
};

/// Steerability degree in [0, 1] from a steering sum `value` (bits).
double steerability(double value, Direction direction, Convention convention);

struct SteeringReport {
    double s_ab_oracle = 0.0;
    double s_ba_oracle = 0.0;
    double i_ab_closed = 0.0;
    double i_ba_closed = 0.0;
    double steer_ab = 0.0;
    double steer_ba = 0.0;
    Convention convention = Convention::AsPrinted;
};

/// AsPrinted degrees are computed from the closed forms I_AB / I_BA, whose
/// range matches the S_max normalizers; DeficitNormalized degrees from the
/// oracle sums, which sit below the gamma bounds when steering is present.
SteeringReport steering_report(const RegionIState& state, Convention convention);

struct OverlapBound {
    double omega;
    double log2_omega;
    double neg_log2_omega;
};

/// Largest squared overlap between eigenvectors of two observables on the
/// same space. For degenerate spectra the value depends on the eigenbasis
/// the solver picks inside each degenerate subspace.
OverlapBound overlap_bound(const Observable& first, const Observable& second);

} // namespace qtsteer

#endif
