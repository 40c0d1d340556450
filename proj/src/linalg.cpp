#include "qtsteer/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "qtsteer/errors.hpp"

namespace qtsteer {

std::size_t TensorShape::dim() const
{
    return std::accumulate(factor_dims.begin(), factor_dims.end(), std::size_t{1},
                           std::multiplies<>());
}

ComplexMatrix SpectralDecomposition::reconstruct() const
{
    return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double abs_tol)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return false;
    }
    return max_abs_diff(a, b) <= abs_tol;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("max_abs_diff: shapes differ");
    }
    if (a.size() == 0) {
        return 0.0;
    }
    return (a - b).cwiseAbs().maxCoeff();
}

double hermiticity_defect(const ComplexMatrix& m)
{
    if (m.rows() != m.cols()) {
        throw DimensionError("hermiticity_defect: matrix is not square");
    }
    if (m.size() == 0) {
        return 0.0;
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b)
{
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

namespace {

// Mixed-radix digits of a composite index, most significant factor first.
void split_index(std::size_t index, const std::vector<std::size_t>& dims,
                 std::vector<std::size_t>& digits)
{
    for (std::size_t f = dims.size(); f-- > 0;) {
        digits[f] = index % dims[f];
        index /= dims[f];
    }
}

} // namespace

ComplexMatrix partial_trace(const ComplexMatrix& m, const TensorShape& shape,
                            const std::vector<std::size_t>& keep)
{
    const auto& dims = shape.factor_dims;
    if (m.rows() != m.cols() || dims.empty() ||
        static_cast<std::size_t>(m.rows()) != shape.dim()) {
        throw DimensionError("partial_trace: tensor shape of dimension " +
                             std::to_string(shape.dim()) + " does not match a " +
                             std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                             " matrix");
    }

    std::vector<bool> kept(dims.size(), false);
    for (auto f : keep) {
        if (f >= dims.size() || kept[f]) {
            throw DimensionError("partial_trace: invalid or repeated factor index " +
                                 std::to_string(f));
        }
        kept[f] = true;
    }
    if (keep.empty() || keep.size() == dims.size()) {
        throw DimensionError("partial_trace: keep must be a non-empty proper subset");
    }

    std::size_t kept_dim = 1;
    for (std::size_t f = 0; f < dims.size(); ++f) {
        if (kept[f]) {
            kept_dim *= dims[f];
        }
    }

    // Kept and traced sub-indices of every composite index, computed once.
    const std::size_t n = shape.dim();
    std::vector<std::size_t> kept_index(n), traced_index(n);
    std::vector<std::size_t> digits(dims.size());
    for (std::size_t i = 0; i < n; ++i) {
        split_index(i, dims, digits);
        std::size_t k = 0, t = 0;
        for (std::size_t f = 0; f < dims.size(); ++f) {
            if (kept[f]) {
                k = k * dims[f] + digits[f];
            } else {
                t = t * dims[f] + digits[f];
            }
        }
        kept_index[i] = k;
        traced_index[i] = t;
    }

    ComplexMatrix out = ComplexMatrix::Zero(static_cast<Eigen::Index>(kept_dim),
                                            static_cast<Eigen::Index>(kept_dim));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (traced_index[i] == traced_index[j]) {
                out(static_cast<Eigen::Index>(kept_index[i]),
                    static_cast<Eigen::Index>(kept_index[j])) +=
                    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            }
        }
    }
    return out;
}

SpectralDecomposition hermitian_eig(const ComplexMatrix& m)
{
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw DimensionError("hermitian_eig: matrix must be square and non-empty");
    }
    const double defect = hermiticity_defect(m);
    if (defect > kHermitianTol) {
        throw PreconditionError("hermitian_eig: input is not Hermitian (defect " +
                                std::to_string(defect) + ")");
    }

    const ComplexMatrix sym = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw PreconditionError("hermitian_eig: eigensolver did not converge");
    }

    // Eigen sorts ascending.
    SpectralDecomposition out;
    out.eigenvalues = solver.eigenvalues().reverse();
    out.eigenvectors = solver.eigenvectors().rowwise().reverse();
    return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m)
{
    SpectralDecomposition spec = hermitian_eig(m);
    const double lowest = spec.eigenvalues.minCoeff();
    if (lowest < -kPsdClampTol) {
        throw NotPsdError("psd_sqrt: eigenvalue " + std::to_string(lowest) +
                          " is below -1e-10");
    }
    // Eigenvalues below the solver's resolution are zero; their square roots
    // would otherwise turn rounding noise into O(1e-8) entries.
    const double floor = kEigResolution * std::max(1.0, spec.eigenvalues.cwiseAbs().maxCoeff());
    spec.eigenvalues = (spec.eigenvalues.array() < floor).select(0.0, spec.eigenvalues).cwiseSqrt();
    return spec.reconstruct();
}

} // namespace qtsteer
