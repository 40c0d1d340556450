#ifndef QTSTEER_LINALG_HPP
#define QTSTEER_LINALG_HPP

/*
 * Small dense complex linear algebra used by the state model and the
 * correlation measures: Kronecker products, partial traces over labeled
 * tensor factors, Hermitian eigendecomposition and PSD square roots.
 *
 * Tensor convention is row-major: the leftmost factor is the most
 * significant digit of a composite index, so |a,b> sits at a*dim(B)+b.
 */

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include <Eigen/Dense>

namespace qtsteer {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kPsdClampTol = 1e-10;
// Relative eigenvalue resolution of the Hermitian solver (64 ulp).
inline constexpr double kEigResolution = 64 * 2.220446049250313e-16;

struct TensorShape {
    std::vector<std::size_t> factor_dims;

    TensorShape() = default;
    TensorShape(std::initializer_list<std::size_t> dims) : factor_dims(dims) {}
    explicit TensorShape(std::vector<std::size_t> dims) : factor_dims(std::move(dims)) {}

    std::size_t dim() const;
    std::size_t factors() const { return factor_dims.size(); }

    bool operator==(const TensorShape&) const = default;
};

struct SpectralDecomposition {
    Eigen::VectorXd eigenvalues;  // descending
    ComplexMatrix eigenvectors;   // column k pairs with eigenvalues(k)

    ComplexMatrix reconstruct() const;
};

/// Elementwise comparison with an absolute tolerance; false on shape mismatch.
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double abs_tol);

/// Largest elementwise |a - b|. Throws DimensionError on shape mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest |m - m^dagger| entry.
double hermiticity_defect(const ComplexMatrix& m);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Traces out every factor of `shape` not listed in `keep`. The kept factors
/// stay in their original relative order. `keep` must be a non-empty proper
/// subset of the factor indices.
ComplexMatrix partial_trace(const ComplexMatrix& m, const TensorShape& shape,
                            const std::vector<std::size_t>& keep);

/// Eigendecomposition of a Hermitian matrix, eigenvalues sorted descending.
/// Throws PreconditionError if m deviates from Hermitian by more than 1e-12.
SpectralDecomposition hermitian_eig(const ComplexMatrix& m);

/// Principal square root of a positive semidefinite matrix. Eigenvalues in
/// [-1e-10, 0) are treated as zero; anything lower throws NotPsdError.
/// Eigenvalues below kEigResolution * max(1, |lambda|max) are also zeroed.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

} // namespace qtsteer

#endif
