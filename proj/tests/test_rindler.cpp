#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "qtsteer/errors.hpp"
#include "qtsteer/rindler.hpp"
#include "qtsteer/sweep.hpp"

using namespace qtsteer;

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;

BasisLabel table(int k) { return kElementTableOrder[static_cast<std::size_t>(k - 1)]; }

double el(const RegionIState& s, int i, int j) { return s.element(table(i), table(j)).real(); }

ModelParams make(Scenario s, double p, double r, double phi = 0.0)
{
    ModelParams m;
    m.scenario = s;
    m.p = p;
    m.phi = phi;
    if (s == Scenario::QubitOnly || s == Scenario::Both) m.r_qubit = r;
    if (s == Scenario::QutritOnly || s == Scenario::Both) m.r_qutrit = r;
    return m;
}

void check_physical(const RegionIState& s)
{
    CHECK(std::abs(s.matrix().trace() - Complex(1.0)) < 1e-12);
    CHECK(hermiticity_defect(s.matrix()) < 1e-12);
    CHECK(hermitian_eig(s.matrix()).eigenvalues.minCoeff() > -1e-10);
}

} // namespace

TEST_CASE("initial_state")
{
    SUBCASE("p = 0 is the pure state (|02> + |10>)/sqrt 2")
    {
        ComplexVector psi = ComplexVector::Zero(6);
        psi(2) = psi(3) = 1.0 / std::sqrt(2.0);
        CHECK(approx_equal(initial_state(0.0).matrix(), psi * psi.adjoint(), 1e-15));
    }

    SUBCASE("p = 0.5 keeps only the first brace")
    {
        const RegionIState s = initial_state(0.5);
        for (int k : {1, 2, 5, 6}) CHECK(el(s, k, k) == 0.25);
        CHECK(el(s, 1, 6) == 0.25);
        CHECK(el(s, 3, 3) == 0.0);
        CHECK(el(s, 4, 4) == 0.0);
        CHECK(el(s, 3, 4) == 0.0);
    }

    SUBCASE("p = 0.1 entries")
    {
        const RegionIState s = initial_state(0.1);
        const double expected[] = {0.05, 0.05, 0.4, 0.4, 0.05, 0.05};
        for (int k = 1; k <= 6; ++k) CHECK(el(s, k, k) == doctest::Approx(expected[k - 1]).epsilon(1e-15));
        CHECK(el(s, 1, 6) == doctest::Approx(0.05));
        CHECK(el(s, 6, 1) == doctest::Approx(0.05));
        CHECK(el(s, 3, 4) == doctest::Approx(0.4));
        CHECK(el(s, 4, 3) == doctest::Approx(0.4));
        int nonzero = 0;
        for (Eigen::Index i = 0; i < 6; ++i)
            for (Eigen::Index j = 0; j < 6; ++j)
                nonzero += s.matrix()(i, j) != Complex(0.0);
        CHECK(nonzero == 10);
        check_physical(s);
    }

    CHECK_THROWS_AS(initial_state(-0.01), ParameterError);
    CHECK_THROWS_AS(initial_state(0.51), ParameterError);
}

TEST_CASE("basis bookkeeping")
{
    const RegionIState s = RegionIState::zeros(true);
    const auto basis = s.basis();
    REQUIRE(basis.size() == 8);
    CHECK(basis[3] == BasisLabel{0, QutritLevel::Pair});
    CHECK(s.index_of(table(7)) == 3);
    CHECK(s.index_of(table(8)) == 7);
    CHECK(table(7).to_string() == "|0ud>");
    CHECK_THROWS_AS(initial_state(0.1).index_of(table(7)), DimensionError);
    CHECK(initial_state(0.1).element(table(7), table(7)) == Complex(0.0));
}

TEST_CASE("Rindler expansions are isometries")
{
    for (double r : linspace(0.0, kQuarterPi, 5)) {
        for (double phi : {0.0, 1.3}) {
            const auto q = qutrit_rindler_expansion(r, phi);
            for (std::size_t a = 0; a < 3; ++a) {
                for (std::size_t b = 0; b < 3; ++b) {
                    Complex overlap = 0.0;
                    for (const auto& x : q[a])
                        for (const auto& y : q[b])
                            if (x.region1 == y.region1 && x.region2 == y.region2)
                                overlap += std::conj(x.amplitude) * y.amplitude;
                    CHECK(std::abs(overlap - Complex(a == b ? 1.0 : 0.0)) < 1e-15);
                }
            }
        }
        const auto k = qubit_rindler_expansion(r);
        CHECK(std::norm(k[0][0].amplitude) + std::norm(k[0][1].amplitude) == doctest::Approx(1.0));
    }
}

TEST_CASE("accelerate_closed anchors")
{
    SUBCASE("qubit only, p = 0, r = pi/4")
    {
        const RegionIState s = accelerate_closed(make(Scenario::QubitOnly, 0.0, kQuarterPi));
        const double diag[] = {0, 0, 0.25, 0.5, 0, 0.25, 0, 0};
        for (int k = 1; k <= 8; ++k) CHECK(el(s, k, k) == doctest::Approx(diag[k - 1]).epsilon(1e-15));
        CHECK(el(s, 3, 4) == doctest::Approx(std::sqrt(2.0) / 4.0).epsilon(1e-15));
        CHECK(el(s, 4, 3) == doctest::Approx(0.3535534).epsilon(1e-7));
        for (int k : {7, 8}) {
            for (int j = 1; j <= 8; ++j) {
                CHECK(el(s, k, j) == 0.0);
            }
        }
    }

    SUBCASE("qutrit only, p = 0.1, r = pi/4: pair population")
    {
        const RegionIState s = accelerate_closed(make(Scenario::QutritOnly, 0.1, kQuarterPi));
        CHECK(el(s, 7, 7) == doctest::Approx(0.2375).epsilon(1e-14));
        CHECK(accelerate_oracle(make(Scenario::QutritOnly, 0.1, kQuarterPi)).at(table(7), table(7)).real() ==
              doctest::Approx(0.2375).epsilon(1e-14));
    }

    SUBCASE("r = 0 embeds the inertial state")
    {
        for (double p : {0.0, 0.1, 0.25, 0.4, 0.5}) {
            const ComplexMatrix padded = initial_state(p).padded().matrix();
            for (Scenario s : {Scenario::QubitOnly, Scenario::QutritOnly, Scenario::Both}) {
                CHECK(max_abs_diff(accelerate_closed(make(s, p, 0.0)).matrix(), padded) < 1e-14);
                CHECK(max_abs_diff(accelerate_oracle(make(s, p, 0.0, 0.7)).matrix(), padded) < 1e-14);
            }
        }
    }

    CHECK_THROWS_AS(accelerate_closed(make(Scenario::None, 0.1, 0.0)), ParameterError);
    CHECK_THROWS_AS(accelerate_oracle(make(Scenario::None, 0.1, 0.0)), ParameterError);
    CHECK_THROWS_AS(accelerate_closed(make(Scenario::QubitOnly, 0.1, 0.8)), ParameterError);
    CHECK_THROWS_AS(accelerate_closed(make(Scenario::QubitOnly, 0.6, 0.1)), ParameterError);

    SUBCASE("unused acceleration is ignored")
    {
        ModelParams m = make(Scenario::QubitOnly, 0.1, 0.3);
        m.r_qutrit = 5.0;
        CHECK_NOTHROW(accelerate_closed(m));
        ModelParams inertial = make(Scenario::None, 0.1, 0.0);
        inertial.r_qubit = inertial.r_qutrit = 9.0;
        CHECK_NOTHROW(model_state(inertial));
    }
}

TEST_CASE("closed forms agree with the basis-substitution oracle")
{
    const auto rs = linspace(0.0, kQuarterPi, 9);
    double worst_q = 0, worst_t = 0, worst_b = 0;
    for (double p : {0.0, 0.1, 0.25, 0.4, 0.5}) {
        for (double r : rs) {
            for (double phi : {0.0, 0.7, 2.1}) {
                worst_q = std::max(worst_q, max_abs_diff(accelerate_closed(make(Scenario::QubitOnly, p, r)).matrix(),
                                                         accelerate_oracle(make(Scenario::QubitOnly, p, r, phi)).matrix()));
                worst_t = std::max(worst_t, max_abs_diff(accelerate_closed(make(Scenario::QutritOnly, p, r)).matrix(),
                                                         accelerate_oracle(make(Scenario::QutritOnly, p, r, phi)).matrix()));
                worst_b = std::max(worst_b, max_abs_diff(accelerate_closed(make(Scenario::Both, p, r)).matrix(),
                                                         accelerate_oracle(make(Scenario::Both, p, r, phi)).matrix()));
            }
        }
    }
    CHECK(worst_q < 1e-12);
    CHECK(worst_t < 1e-12);
    CHECK(worst_b < 1e-12);
}

TEST_CASE("independent accelerations compose")
{
    ModelParams m;
    m.scenario = Scenario::Both;
    m.p = 0.25;
    m.r_qubit = 0.6;
    m.r_qutrit = 0.6;
    ModelParams t = m;
    t.scenario = Scenario::QutritOnly;
    const RegionIState composed = apply_qubit_channel(accelerate_closed(t), m.r_qubit);
    CHECK(max_abs_diff(accelerate_oracle(m).matrix(), composed.matrix()) < 1e-12);

    // Unequal accelerations as well.
    m.r_qubit = 0.2;
    m.r_qutrit = 0.7;
    CHECK(max_abs_diff(accelerate_oracle(m).matrix(), accelerate_closed(m).matrix()) < 1e-12);
}

TEST_CASE("as-printed two-sided table differs from the oracle only at (4,4)")
{
    for (double p : {0.1, 0.25}) {
        for (double r : {0.3, 0.7}) {
            const RegionIState printed = accelerate_closed(make(Scenario::Both, p, r), BothForm::AsPrinted);
            const RegionIState truth = accelerate_oracle(make(Scenario::Both, p, r));
            const RegionIState t = accelerate_closed(make(Scenario::QutritOnly, p, r));
            for (int i = 1; i <= 8; ++i) {
                for (int j = 1; j <= 8; ++j) {
                    const double d = std::abs(el(printed, i, j) - el(truth, i, j));
                    if (i == 4 && j == 4) {
                        CHECK(d == doctest::Approx(std::abs(el(t, 5, 5) - el(t, 4, 4))));
                        CHECK(d > 1e-6);
                    } else {
                        CHECK(d < 1e-12);
                    }
                }
            }
            const double trace = printed.matrix().trace().real();
            CHECK(trace - 1.0 == doctest::Approx(el(t, 5, 5) - el(t, 4, 4)));
        }
    }
}

TEST_CASE("oracle is independent of the Unruh phase")
{
    const auto base = accelerate_oracle(make(Scenario::QutritOnly, 0.1, 0.5, 0.0)).matrix();
    for (double phi : {0.7, 2.1}) {
        CHECK(max_abs_diff(base, accelerate_oracle(make(Scenario::QutritOnly, 0.1, 0.5, phi)).matrix()) < 1e-14);
    }
    const auto both = accelerate_oracle(make(Scenario::Both, 0.3, 0.77, 0.0)).matrix();
    CHECK(max_abs_diff(both, accelerate_oracle(make(Scenario::Both, 0.3, 0.77, 2.1)).matrix()) < 1e-14);
}

TEST_CASE("reductions")
{
    for (double p : {0.0, 0.2, 0.5}) {
        CHECK(approx_equal(reduce_qubit(initial_state(p)), 0.5 * ComplexMatrix::Identity(2, 2), 1e-15));
        const ComplexMatrix t = reduce_qutrit(initial_state(p));
        REQUIRE(t.rows() == 3);
        CHECK(t(0, 0).real() == doctest::Approx((1 - p) / 2));
        CHECK(t(1, 1).real() == doctest::Approx(p));
        CHECK(t(2, 2).real() == doctest::Approx((1 - p) / 2));
    }
    const ComplexMatrix t0 = reduce_qutrit(initial_state(0.0));
    CHECK(t0(0, 0).real() == 0.5);
    CHECK(t0(1, 1).real() == 0.0);

    const RegionIState s = accelerate_closed(make(Scenario::QubitOnly, 0.0, kQuarterPi));
    const ComplexMatrix q = reduce_qubit(s);
    CHECK(q(0, 0).real() == doctest::Approx(0.25));
    CHECK(q(1, 1).real() == doctest::Approx(0.75));
    CHECK(std::abs(q(0, 1)) < 1e-15);

    const ComplexMatrix t4 = reduce_qutrit(accelerate_closed(make(Scenario::Both, 0.3, 0.5)));
    REQUIRE(t4.rows() == 4);
    CHECK(t4.trace().real() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("every generated state is physical")
{
    for (double p : linspace(0.0, 0.5, 6)) {
        check_physical(initial_state(p));
        for (double r : linspace(0.0, kQuarterPi, 5)) {
            for (Scenario s : {Scenario::QubitOnly, Scenario::QutritOnly, Scenario::Both}) {
                check_physical(accelerate_closed(make(s, p, r)));
                check_physical(accelerate_oracle(make(s, p, r, 0.7)));
            }
        }
    }
    const ComplexMatrix pure = initial_state(0.0).matrix();
    CHECK(std::abs(oracle::trace_of_square(pure) - Complex(1.0)) < 1e-12);
}
