#include <gtest/gtest.h>

#include "nessfi/errors.hpp"
#include "nessfi/liouvillian.hpp"
#include "nessfi/verify/oracles.hpp"
#include "test_support.hpp"

using namespace nessfi;
using gen::max_abs;

namespace {

Operator anticommutator(const Operator& a, const Operator& b) { return a * b + b * a; }

} // namespace

TEST(ModeOperators, CanonicalAnticommutationRelations) {
    const auto ops = mode_operators();
    const Operator id = Operator::Identity();
    EXPECT_LT(max_abs(anticommutator(ops.zeta1, ops.zeta1_dag) - id), 1e-15);
    EXPECT_LT(max_abs(anticommutator(ops.zeta2, ops.zeta2_dag) - id), 1e-15);
    EXPECT_LT(max_abs(anticommutator(ops.zeta1, ops.zeta2_dag)), 1e-15);
    EXPECT_LT(max_abs(anticommutator(ops.zeta1, ops.zeta2)), 1e-15);
    EXPECT_LT(max_abs(ops.zeta1 * ops.zeta1), 1e-15);
}

TEST(ModeOperators, JordanWignerSigns) {
    const auto ops = mode_operators();
    // zeta_1^dag |01> = +|11>, zeta_2^dag |10> = -|11>
    EXPECT_EQ(ops.zeta1_dag(3, 2), cplx(1.0));
    EXPECT_EQ(ops.zeta2_dag(3, 1), cplx(-1.0));
    const Eigen::Vector4cd n = number_operator().diagonal();
    EXPECT_LT((n - Eigen::Vector4cd(0, 1, 1, 2)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Vectorization, RoundTripAndColumnStacking) {
    gen::Gen gen(21);
    const Operator x = gen.matrix();
    const StateVector v = vec(x);
    EXPECT_EQ(v(1), x(1, 0));
    EXPECT_EQ(v(4), x(0, 1));
    EXPECT_EQ(max_abs(unvec(v) - x), 0.0);
}

TEST(Vectorization, SuperoperatorsMatchMatrixProducts) {
    gen::Gen gen(22);
    for (int k = 0; k < 20; ++k) {
        const Operator a = gen.matrix(), b = gen.matrix(), x = gen.matrix();
        EXPECT_LT(max_abs(nessfi::apply(left_multiplication(a), x) - a * x), 1e-12);
        EXPECT_LT(max_abs(nessfi::apply(right_multiplication(b), x) - x * b), 1e-12);
        EXPECT_LT(max_abs(nessfi::apply(sandwich(a, b), x) - a * x * b), 1e-12);
    }
}

TEST(Liouvillian, PreservesTraceAndHermiticity) {
    gen::Gen gen(23);
    for (int k = 0; k < 100; ++k) {
        const auto p = gen.system();
        const auto l = build_liouvillian(p, gen.baths());
        const Superoperator total = l.total();
        EXPECT_LT((trace_functional() * total).cwiseAbs().maxCoeff(), 1e-14);
        // each bath piece is trace preserving on its own
        EXPECT_LT((trace_functional() * l.bath(0)).cwiseAbs().maxCoeff(), 1e-14);
        const Operator h = gen.matrix();
        const Operator x = h + h.adjoint();
        const Operator y = nessfi::apply(total, x);
        EXPECT_LT(max_abs(y - y.adjoint()), 1e-13);
    }
}

TEST(Liouvillian, SecularTermsVanishWithoutMixing) {
    // omega1 != omega2 and delta = 0: sin(theta) = 0, no mode mixing.
    const SystemParams p{0.9, 1.1, 0.0, 0.01, 0.02};
    const auto d = build_dissipators(diagonalize(p), {0.3, 0.5, 0.4, 0.8}, p);
    EXPECT_LT(d.s[0].cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LT(d.s[1].cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_GT(d.n[0].cwiseAbs().maxCoeff(), 0.0);
}

TEST(SteadyState, MatchesSvdNullVector) {
    gen::Gen gen(24);
    for (int k = 0; k < 100; ++k) {
        const auto p = gen.system();
        const auto l = build_liouvillian(p, gen.baths());
        const auto ness = steady_state(l);
        const DensityMatrix oracle = verify::steady_state_svd(l.total());
        EXPECT_LT(max_abs(ness.rho - oracle), 1e-10) << "draw " << k;
        EXPECT_LT(ness.residual, kResidualTolerance);
        EXPECT_GE(ness.min_eigenvalue, kPsdTolerance);
        EXPECT_NO_THROW(check_density_matrix(ness.rho));
    }
}

TEST(SteadyState, HasXFormWithVanishingOuterCoherence) {
    gen::Gen gen(25);
    for (int k = 0; k < 100; ++k) {
        const auto ness = steady_state(build_liouvillian(gen.system(), gen.baths()));
        EXPECT_TRUE(is_x_form(ness.rho));
    }
}

TEST(SteadyState, EquilibriumIsGibbs) {
    gen::Gen gen(26);
    for (int k = 0; k < 100; ++k) {
        const auto p = gen.system();
        const auto baths = gen.equilibrium();
        const auto basis = diagonalize(p);
        const auto ness = steady_state(build_liouvillian(basis, baths, p));
        const DensityMatrix gibbs = verify::gibbs_state(basis, baths.t1, baths.mu1);
        EXPECT_LT(max_abs(ness.rho - gibbs), 1e-12) << "draw " << k;
    }
}

TEST(SteadyState, UncoupledSystemIsAmbiguous) {
    const SystemParams p{1.0, 1.0, 0.01, 0.0, 0.0};
    try {
        steady_state(build_liouvillian(p, BathParams{}));
        FAIL() << "expected AmbiguityError";
    } catch (const AmbiguityError& e) {
        EXPECT_GE(e.null_dimension(), 2u);
    }
    EXPECT_GE(null_space_dimension(build_liouvillian(p, BathParams{}).total()), 2u);
}

TEST(SteadyState, UniqueForCoupledSystem) {
    const SystemParams p{1.0, 1.0, 0.005, 0.002, 0.002};
    EXPECT_EQ(null_space_dimension(build_liouvillian(p, {0.2, 0.8, 0.5, 0.5}).total()), 1u);
}

TEST(CheckDensityMatrix, RejectsInvalidStates) {
    DensityMatrix rho = DensityMatrix::Identity() / 4.0;
    EXPECT_NO_THROW(check_density_matrix(rho));
    DensityMatrix bad = rho;
    bad(0, 0) = 0.5;
    EXPECT_THROW(check_density_matrix(bad), DomainError);
    bad = rho;
    bad(0, 1) = cplx(0.0, 0.1);
    EXPECT_THROW(check_density_matrix(bad), DomainError);
    bad = DensityMatrix::Zero();
    bad(0, 0) = 1.2;
    bad(1, 1) = -0.2;
    EXPECT_THROW(check_density_matrix(bad), DomainError);
}

TEST(SiteBasis, MapsSiteNumberOperatorsToDiagonal) {
    gen::Gen gen(27);
    for (int k = 0; k < 50; ++k) {
        const auto basis = diagonalize(gen.system());
        const auto ops = mode_operators();
        const auto a = basis.site_amplitudes();
        const Operator eta1 = a[0][0] * ops.zeta1 + a[0][1] * ops.zeta2;
        const Operator eta2 = a[1][0] * ops.zeta1 + a[1][1] * ops.zeta2;
        const Operator n1 = to_site_basis(eta1.adjoint() * eta1, basis);
        const Operator n2 = to_site_basis(eta2.adjoint() * eta2, basis);
        Operator e1 = Operator::Zero(), e2 = Operator::Zero();
        e1(1, 1) = e1(3, 3) = 1.0;
        e2(2, 2) = e2(3, 3) = 1.0;
        EXPECT_LT(max_abs(n1 - e1), 1e-14);
        EXPECT_LT(max_abs(n2 - e2), 1e-14);
    }
}

TEST(SiteBasis, IsUnitary) {
    gen::Gen gen(28);
    const auto basis = diagonalize(gen.system());
    const DensityMatrix rho = gen.density_matrix();
    const DensityMatrix site = to_site_basis(rho, basis);
    EXPECT_NEAR(site.trace().real(), 1.0, 1e-14);
    EXPECT_NEAR((site * site).trace().real(), (rho * rho).trace().real(), 1e-14);
}
