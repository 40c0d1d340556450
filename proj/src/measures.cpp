#include "qtsteer/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qtsteer/errors.hpp"

namespace qtsteer {

double linear_entropy(const ComplexMatrix& m)
{
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw DimensionError("linear_entropy: density matrix must be square");
    }
    const Complex trace = m.trace();
    if (std::abs(trace - Complex(1.0, 0.0)) > 1e-9) {
        throw PreconditionError("linear_entropy: trace " + std::to_string(trace.real()) +
                                " is not 1");
    }
    if (hermiticity_defect(m) > kHermitianTol) {
        throw PreconditionError("linear_entropy: matrix is not Hermitian");
    }
    // Tr(m^2) = sum |m_ij|^2 for Hermitian m.
    const double purity = m.cwiseAbs2().sum();
    return std::clamp(1.0 - purity, 0.0, 1.0);
}

DecoherenceReport decoherence_triple(const RegionIState& state)
{
    return {
        linear_entropy(state.matrix()),
        linear_entropy(reduce_qubit(state)),
        linear_entropy(reduce_qutrit(state)),
    };
}

std::array<ComplexMatrix, 3> pauli_matrices()
{
    const Complex i{0.0, 1.0};
    ComplexMatrix x(2, 2), y(2, 2), z(2, 2);
    x << 0.0, 1.0, 1.0, 0.0;
    y << 0.0, -i, i, 0.0;
    z << 1.0, 0.0, 0.0, -1.0;
    return {x, y, z};
}

LquReport lqu(const ComplexMatrix& rho, std::size_t other_dim)
{
    const auto n = static_cast<Eigen::Index>(2 * other_dim);
    if (rho.rows() != n || rho.cols() != n) {
        throw DimensionError("lqu: expected a " + std::to_string(n) + "x" +
                             std::to_string(n) + " matrix");
    }

    const ComplexMatrix root = psd_sqrt(rho);
    const ComplexMatrix identity =
        ComplexMatrix::Identity(static_cast<Eigen::Index>(other_dim),
                                static_cast<Eigen::Index>(other_dim));

    std::array<ComplexMatrix, 3> lifted;
    const auto paulis = pauli_matrices();
    for (std::size_t k = 0; k < 3; ++k) {
        lifted[k] = kron(paulis[k], identity);
    }

    std::array<ComplexMatrix, 3> sandwiched;
    for (std::size_t k = 0; k < 3; ++k) {
        sandwiched[k] = root * lifted[k];
    }

    LquReport out;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            out.xi(i, j) = (sandwiched[static_cast<std::size_t>(i)] *
                            sandwiched[static_cast<std::size_t>(j)]).trace().real();
        }
    }

    const Eigen::Matrix3d symmetric = 0.5 * (out.xi + out.xi.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(symmetric, Eigen::EigenvaluesOnly);
    out.gammas = solver.eigenvalues().reverse();
    out.value = 1.0 - out.gammas(0);
    return out;
}

LquReport lqu(const RegionIState& state)
{
    return lqu(state.matrix(), state.qutrit_dim());
}

} // namespace qtsteer
