#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qtsteer/errors.hpp"
#include "qtsteer/linalg.hpp"
#include "qtsteer/rindler.hpp"

using namespace qtsteer;

namespace {

ComplexMatrix diag(std::initializer_list<double> xs)
{
    ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(xs.size()),
                                          static_cast<Eigen::Index>(xs.size()));
    Eigen::Index k = 0;
    for (double x : xs) {
        m(k, k) = x;
        ++k;
    }
    return m;
}

} // namespace

TEST_CASE("kron")
{
    CHECK(approx_equal(kron(ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(3, 3)),
                       ComplexMatrix::Identity(6, 6), 0.0));
    CHECK(approx_equal(kron(diag({1, 0}), diag({1, 1, 1})), diag({1, 1, 1, 0, 0, 0}), 0.0));

    SUBCASE("swap on the first factor maps |00> to |10>")
    {
        ComplexMatrix swap(2, 2);
        swap << 0, 1, 1, 0;
        const ComplexMatrix op = kron(swap, ComplexMatrix::Identity(2, 2));
        ComplexVector ket00 = ComplexVector::Zero(4);
        ket00(0) = 1.0;
        ComplexVector ket10 = ComplexVector::Zero(4);
        ket10(2) = 1.0;
        CHECK((op * ket00 - ket10).norm() == 0.0);
    }

    SUBCASE("entry layout")
    {
        std::mt19937_64 rng(7);
        const ComplexMatrix a = oracle::random_hermitian(rng, 2);
        const ComplexMatrix b = oracle::random_hermitian(rng, 3);
        const ComplexMatrix k = kron(a, b);
        REQUIRE(k.rows() == 6);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int x = 0; x < 3; ++x)
                    for (int y = 0; y < 3; ++y)
                        CHECK(k(i * 3 + x, j * 3 + y) == a(i, j) * b(x, y));
    }
}

TEST_CASE("partial_trace of the inertial state")
{
    for (double p : {0.0, 0.1, 0.25, 0.5}) {
        const ComplexMatrix rho = initial_state(p).matrix();
        const ComplexMatrix qubit = partial_trace(rho, {2, 3}, {0});
        CHECK(approx_equal(qubit, 0.5 * ComplexMatrix::Identity(2, 2), 1e-15));

        const ComplexMatrix qutrit = partial_trace(rho, {2, 3}, {1});
        CHECK(approx_equal(qutrit, diag({(1 - p) / 2, p, (1 - p) / 2}), 1e-15));
    }
}

TEST_CASE("partial_trace matches the slice oracle and factorizes products")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix a = oracle::random_density(rng, 2, 2);
        const ComplexMatrix b = oracle::random_hermitian(rng, 4);
        const ComplexMatrix ab = kron(a, b);
        CHECK(approx_equal(partial_trace(ab, {2, 4}, {0}), b.trace() * a, 1e-12));
        CHECK(approx_equal(partial_trace(ab, {2, 4}, {1}), a.trace() * b, 1e-12));

        const ComplexMatrix rho = oracle::random_density(rng, 8, 8);
        CHECK(approx_equal(partial_trace(rho, {2, 4}, {0}), oracle::trace_second(rho, 2, 4), 1e-14));
        CHECK(approx_equal(partial_trace(rho, {2, 4}, {1}), oracle::trace_first(rho, 2, 4), 1e-14));

        const ComplexMatrix reduced = partial_trace(rho, {2, 2, 2}, {0, 2});
        CHECK(std::abs(reduced.trace() - rho.trace()) < 1e-14);
        CHECK(hermiticity_defect(reduced) < 1e-14);
    }
}

TEST_CASE("partial_trace keeps non-adjacent factors in order")
{
    std::mt19937_64 rng(3);
    const ComplexMatrix a = oracle::random_density(rng, 2, 2);
    const ComplexMatrix b = oracle::random_density(rng, 3, 3);
    const ComplexMatrix c = oracle::random_density(rng, 2, 2);
    const ComplexMatrix abc = kron(kron(a, b), c);
    CHECK(approx_equal(partial_trace(abc, {2, 3, 2}, {0, 2}), kron(a, c), 1e-14));
    CHECK(approx_equal(partial_trace(abc, {2, 3, 2}, {1}), b, 1e-14));
}

TEST_CASE("partial_trace errors")
{
    const ComplexMatrix m = ComplexMatrix::Identity(6, 6);
    CHECK_THROWS_AS(partial_trace(m, {2, 4}, {0}), DimensionError);
    CHECK_THROWS_AS(partial_trace(m, {2, 3}, {}), DimensionError);
    CHECK_THROWS_AS(partial_trace(m, {2, 3}, {0, 1}), DimensionError);
    CHECK_THROWS_AS(partial_trace(m, {2, 3}, {2}), DimensionError);
    CHECK_THROWS_AS(partial_trace(m, {2, 3}, {0, 0}), DimensionError);
}

TEST_CASE("hermitian_eig")
{
    SUBCASE("diagonal input sorts descending")
    {
        const auto spec = hermitian_eig(diag({3, 1, 2}));
        CHECK(spec.eigenvalues(0) == doctest::Approx(3.0));
        CHECK(spec.eigenvalues(1) == doctest::Approx(2.0));
        CHECK(spec.eigenvalues(2) == doctest::Approx(1.0));
    }

    SUBCASE("rank-one projector")
    {
        ComplexMatrix m(2, 2);
        m << 0.5, 0.5, 0.5, 0.5;
        const auto spec = hermitian_eig(m);
        CHECK(spec.eigenvalues(0) == doctest::Approx(1.0));
        CHECK(std::abs(spec.eigenvalues(1)) < 1e-15);
        const ComplexVector v = spec.eigenvectors.col(0);
        // Up to a global phase, v = (1, 1)/sqrt 2.
        CHECK(std::abs(std::abs(v(0)) - 1 / std::sqrt(2.0)) < 1e-14);
        CHECK(std::abs(v(0) - v(1)) < 1e-14);
    }

    SUBCASE("seeded random Hermitian matrices reconstruct")
    {
        std::mt19937_64 rng(2024);
        for (int trial = 0; trial < 200; ++trial) {
            const ComplexMatrix m = oracle::random_hermitian(rng, 8);
            const auto spec = hermitian_eig(m);
            CHECK(max_abs_diff(spec.reconstruct(), m) < 1e-12);
            const ComplexMatrix gram = spec.eigenvectors.adjoint() * spec.eigenvectors;
            CHECK(max_abs_diff(gram, ComplexMatrix::Identity(8, 8)) < 1e-12);
            CHECK(std::abs(spec.eigenvalues.sum() - m.trace().real()) < 1e-12);
            for (Eigen::Index k = 0; k + 1 < 8; ++k) {
                CHECK(spec.eigenvalues(k) >= spec.eigenvalues(k + 1));
            }
        }
    }

    SUBCASE("non-Hermitian input is rejected")
    {
        ComplexMatrix m(2, 2);
        m << 0, 1, 0, 0;
        CHECK_THROWS_AS(hermitian_eig(m), PreconditionError);
    }
}

TEST_CASE("psd_sqrt")
{
    CHECK(approx_equal(psd_sqrt(diag({4, 9, 0})), diag({2, 3, 0}), 1e-14));
    CHECK(approx_equal(psd_sqrt(ComplexMatrix::Identity(6, 6) / 6.0),
                       ComplexMatrix::Identity(6, 6) / std::sqrt(6.0), 1e-14));

    SUBCASE("pure projector is its own root")
    {
        ComplexVector psi(3);
        psi << Complex(0.6, 0.0), Complex(0.0, 0.8), 0.0;
        const ComplexMatrix proj = psi * psi.adjoint();
        CHECK(approx_equal(psd_sqrt(proj), proj, 1e-14));
    }

    SUBCASE("tiny negative eigenvalues are clamped, larger ones rejected")
    {
        CHECK(approx_equal(psd_sqrt(diag({1, -5e-11})), diag({1, 0}), 1e-15));
        CHECK_THROWS_AS(psd_sqrt(diag({1, -1e-9})), NotPsdError);
    }

    SUBCASE("random PSD matrices square back")
    {
        std::mt19937_64 rng(99);
        for (Eigen::Index n : {2, 3, 6, 8}) {
            std::uniform_int_distribution<Eigen::Index> rank(1, n);
            for (int trial = 0; trial < 250; ++trial) {
                const ComplexMatrix m = oracle::random_density(rng, n, rank(rng));
                const ComplexMatrix root = psd_sqrt(m);
                REQUIRE(max_abs_diff(root * root, m) < 1e-10);
                REQUIRE(hermiticity_defect(root) < 1e-12);
                REQUIRE(hermitian_eig(root).eigenvalues.minCoeff() > -1e-10);
            }
        }
    }
}
