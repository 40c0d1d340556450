#ifndef QTSTEER_MEASURES_HPP
#define QTSTEER_MEASURES_HPP

#include <array>

#include "qtsteer/linalg.hpp"
#include "qtsteer/rindler.hpp"

namespace qtsteer {

/// Linear entropy 1 - Tr(m^2), clamped to [0, 1]. Throws PreconditionError
/// when |Tr m - 1| > 1e-9 or m is not Hermitian.
double linear_entropy(const ComplexMatrix& m);

struct DecoherenceReport {
    double d_total = 0.0;
    double d_qubit = 0.0;
    double d_qutrit = 0.0;
};

DecoherenceReport decoherence_triple(const RegionIState& state);

/// Pauli matrices, in x, y, z order.
std::array<ComplexMatrix, 3> pauli_matrices();

// Local quantum uncertainty on the qubit side. xi(i, j) is
// Tr[sqrt(rho) (S_i (x) 1) sqrt(rho) (S_j (x) 1)] over the Pauli matrices and
// value = 1 - max eigenvalue of xi.
struct LquReport {
    Eigen::Matrix3d xi = Eigen::Matrix3d::Zero();
    Eigen::Vector3d gammas = Eigen::Vector3d::Zero();  // descending
    double value = 0.0;
};

LquReport lqu(const RegionIState& state);

/// Same quantity for an arbitrary 2 (x) n density matrix.
LquReport lqu(const ComplexMatrix& rho, std::size_t other_dim);

} // namespace qtsteer

#endif
