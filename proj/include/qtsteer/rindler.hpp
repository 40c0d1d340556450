#ifndef QTSTEER_RINDLER_HPP
#define QTSTEER_RINDLER_HPP

/*
 * One-parameter qubit-qutrit state and its region-I image when the qubit,
 * the qutrit, or both are uniformly accelerated.
 *
 * Two independent routes produce the accelerated state:
 *   accelerate_closed  - element-by-element closed forms
 *   accelerate_oracle  - substitute the Minkowski basis kets by their Rindler
 *                        expansions, build the full region-I x region-II
 *                        density matrix and trace region II out
 *
 * In region I the accelerated qutrit gains a fourth level, the pair state
 * |ud>, so accelerated states live on 2 (x) 4 with qutrit levels ordered
 * {|0>, |1>, |2>, |ud>}.
 */

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qtsteer/linalg.hpp"

namespace qtsteer {

enum class Scenario : std::uint8_t { None, QubitOnly, QutritOnly, Both };

std::string_view scenario_name(Scenario s);   // none, qubit, qutrit, both
Scenario parse_scenario(std::string_view name);  // throws ParameterError

inline constexpr double kMaxMixing = 0.5;
inline constexpr double kMaxAcceleration = 0.78539816339744830962;  // pi/4

struct ModelParams {
    double p = 0.0;
    double r_qubit = 0.0;
    double r_qutrit = 0.0;
    double phi = 0.0;
    Scenario scenario = Scenario::None;

    /// Throws ParameterError unless 0 <= p <= 1/2 and the accelerations that
    /// the scenario uses lie in [0, pi/4].
    void validate() const;
};

enum class QutritLevel : std::uint8_t { Zero = 0, One = 1, Two = 2, Pair = 3 };

struct BasisLabel {
    int qubit = 0;
    QutritLevel qutrit = QutritLevel::Zero;

    std::string to_string() const;  // e.g. "|12>", "|0ud>"
    bool operator==(const BasisLabel&) const = default;
};

/// The eight region-I kets in the order used by the closed-form element
/// tables: |00>,|01>,|02>,|10>,|11>,|12>,|0ud>,|1ud>. Entry k is the ket that
/// the tables call index k+1.
inline constexpr std::array<BasisLabel, 8> kElementTableOrder = {{
    {0, QutritLevel::Zero}, {0, QutritLevel::One}, {0, QutritLevel::Two},
    {1, QutritLevel::Zero}, {1, QutritLevel::One}, {1, QutritLevel::Two},
    {0, QutritLevel::Pair}, {1, QutritLevel::Pair},
}};

/// Density matrix of the qubit-qutrit pair in region I. The matrix is stored
/// in tensor order (qubit (x) qutrit); `basis()` names every row.
class RegionIState {
public:
    /// extended = false gives the 2 (x) 3 space, true the 2 (x) 4 space.
    RegionIState(ComplexMatrix matrix, bool extended);

    static RegionIState zeros(bool extended);

    const ComplexMatrix& matrix() const { return matrix_; }
    const TensorShape& shape() const { return shape_; }
    bool extended() const { return qutrit_dim_ == 4; }
    std::size_t qutrit_dim() const { return qutrit_dim_; }
    std::size_t dim() const { return 2 * qutrit_dim_; }
    std::vector<BasisLabel> basis() const;

    /// Row/column of a label in the stored matrix. Throws DimensionError for
    /// pair-state labels on a non-extended state.
    Eigen::Index index_of(BasisLabel label) const;

    Complex at(BasisLabel row, BasisLabel col) const;
    /// Element access that treats pair-state rows of a 2 (x) 3 state as zero.
    Complex element(BasisLabel row, BasisLabel col) const;
    void set(BasisLabel row, BasisLabel col, Complex value);
    /// Sets (row, col) and its Hermitian mirror.
    void set_hermitian(BasisLabel row, BasisLabel col, Complex value);

    /// 2 (x) 4 embedding with empty pair-state rows; identity on extended states.
    RegionIState padded() const;

private:
    ComplexMatrix matrix_;
    std::size_t qutrit_dim_;
    TensorShape shape_;
};

/// Which closed form is used for the two-sided acceleration.
enum class BothForm : std::uint8_t {
    /// Qubit channel applied to the qutrit-accelerated state (trace preserving).
    Composed,
    /// The published element table verbatim, including its rho_44 entry that
    /// carries the qutrit-only rho_55 instead of rho_44.
    AsPrinted,
};

RegionIState initial_state(double p);

RegionIState accelerate_closed(const ModelParams& params, BothForm both = BothForm::Composed);
RegionIState accelerate_oracle(const ModelParams& params);

/// initial_state for Scenario::None, accelerate_closed otherwise.
RegionIState model_state(const ModelParams& params);

/// Closed-form single-qubit Unruh channel on an extended state:
/// |0><0| -> c^2|0><0| + s^2|1><1|, |1><1| -> |1><1|, |0><1| -> c|0><1|.
RegionIState apply_qubit_channel(const RegionIState& state, double r_qubit);

ComplexMatrix reduce_qubit(const RegionIState& state);
ComplexMatrix reduce_qutrit(const RegionIState& state);

// Rindler expansion of one Minkowski basis ket: a sum of
// amplitude * |region1>_I |region2>_II.
struct ModeTerm {
    Complex amplitude;
    int region1;
    int region2;
};
using ModeExpansion = std::vector<ModeTerm>;

/// Qubit kets |0>, |1>; region-II dimension 2.
std::array<ModeExpansion, 2> qubit_rindler_expansion(double r);
/// Qutrit kets |0>, |1>, |2>; both regions use levels {0, 1, 2, ud}.
std::array<ModeExpansion, 3> qutrit_rindler_expansion(double r, double phi);

} // namespace qtsteer

#endif
