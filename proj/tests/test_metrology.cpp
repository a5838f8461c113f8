#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "nessfi/errors.hpp"
#include "nessfi/liouvillian.hpp"
#include "nessfi/metrology.hpp"
#include "test_support.hpp"

using namespace nessfi;

namespace {

const SystemParams kWeak{1.0, 1.0, 0.005, 0.002, 0.002};
const BathParams kWeakBaths{0.2, 0.8, 0.5, 0.5};

// |psi(theta)> = cos(theta) |10> + e^{i theta} sin(theta) |01>,
// F = 4 (<d psi|d psi> - |<psi|d psi>|^2) = 4 (1 + sin^2 - sin^4).
DensityMatrix pure_family(double theta) {
    Eigen::Matrix<cplx, 4, 1> psi = Eigen::Matrix<cplx, 4, 1>::Zero();
    psi(1) = std::cos(theta);
    psi(2) = std::polar(std::sin(theta), theta);
    return psi * psi.adjoint();
}

double pure_family_qfi(double theta) {
    const double s2 = std::sin(theta) * std::sin(theta);
    return 4.0 * (1.0 + s2 - s2 * s2);
}

} // namespace

TEST(QfiSpectral, PartsAddUpAndAreNonNegative) {
    gen::Gen gen(41);
    for (int k = 0; k < 100; ++k) {
        const auto r = qfi_spectral(gen.system(), gen.baths());
        EXPECT_GE(r.f_e, 0.0);
        EXPECT_GE(r.f_n, 0.0);
        EXPECT_NEAR(r.f_total, r.f_e + r.f_n, 1e-9 * r.f_total);
    }
}

TEST(QfiSpectral, CoherencePartVanishesAtEquilibrium) {
    gen::Gen gen(42);
    for (int k = 0; k < 100; ++k) {
        const auto r = qfi_spectral(gen.system(), gen.equilibrium());
        EXPECT_LT(r.f_n, 1e-12 * std::max(1.0, r.f_total));
    }
}

TEST(QfiSpectral, DefaultStep) {
    EXPECT_DOUBLE_EQ(default_qfi_step(0.005), 1e-6);
    EXPECT_DOUBLE_EQ(default_qfi_step(0.1), 1e-5);
    EXPECT_DOUBLE_EQ(qfi_spectral(kWeak, kWeakBaths).step, 1e-6);
}

TEST(QfiSpectral, AgreesWithFidelityOracleAtWeakTunnelingPoint) {
    const double spectral = qfi_spectral(kWeak, kWeakBaths).f_total;
    const double oracle = qfi_fidelity_oracle(kWeak, kWeakBaths);
    EXPECT_NEAR(spectral / oracle, 1.0, 1e-4);
}

TEST(QfiSpectral, StepRobustAtWeakTunnelingPoint) {
    EXPECT_TRUE(qfi_step_consistent(kWeak, kWeakBaths, default_qfi_step(kWeak.delta)));
}

TEST(QfiSpectral, MatchesAnalyticPureFamilyOnCoherentBlock) {
    // The spectral formula applies to rank-deficient X states too.
    for (double theta : {0.3, 0.7, 1.1}) {
        const auto r = qfi_spectral(pure_family, theta, 1e-5);
        EXPECT_NEAR(r.f_total / pure_family_qfi(theta), 1.0, 1e-7);
    }
}

TEST(QfiSpectral, RejectsUnresolvableSteps) {
    EXPECT_THROW(qfi_spectral(kWeak, kWeakBaths, 0.0), StepError);
    EXPECT_THROW(qfi_spectral(kWeak, kWeakBaths, -1e-6), StepError);
    EXPECT_THROW(qfi_spectral(kWeak, kWeakBaths, 1e-300), StepError);
}

TEST(QfiSpectral, FlagsRankChange) {
    auto family = [](double t) {
        const double p = std::max(t, 0.0);
        DensityMatrix rho = DensityMatrix::Zero();
        rho(0, 0) = p;
        rho(3, 3) = 1.0 - p;
        return rho;
    };
    try {
        qfi_spectral(family, 0.0, 1e-4);
        FAIL() << "expected RankChangeError";
    } catch (const RankChangeError& e) {
        EXPECT_EQ(e.index(), 1);
        EXPECT_NEAR(e.derivative(), 0.5, 1e-12);
    }
}

TEST(QfiSpectral, DropsConstantZeroEigenvalues) {
    // p_1 = 0 and p_4 = 0 for all theta: those terms are dropped.
    const auto r = qfi_spectral(pure_family, 0.5, 1e-5);
    EXPECT_TRUE(std::isfinite(r.f_total));
}

TEST(FidelityOracle, PureFamily) {
    for (double theta : {0.2, 0.9, 1.4}) {
        const double f = qfi_fidelity_oracle(pure_family, theta, 1e-3);
        EXPECT_NEAR(f / pure_family_qfi(theta), 1.0, 1e-6);
    }
}

TEST(FidelityOracle, GenericRouteOnOuterBlock) {
    // |psi> = cos(theta)|00> + sin(theta)|11> has F = 4 and is not
    // block-diagonal, so 1 - fidelity() is used.
    auto family = [](double t) {
        Eigen::Matrix<cplx, 4, 1> psi = Eigen::Matrix<cplx, 4, 1>::Zero();
        psi(0) = std::cos(t);
        psi(3) = std::sin(t);
        return DensityMatrix(psi * psi.adjoint());
    };
    EXPECT_NEAR(qfi_fidelity_oracle(family, 0.4, 1e-2), 4.0, 4e-3);
}

TEST(FidelityOracle, ConstantFamilyHasZeroQfi) {
    auto family = [](double) { return DensityMatrix(DensityMatrix::Identity() / 4.0); };
    EXPECT_NEAR(qfi_fidelity_oracle(family, 0.3, 1e-3), 0.0, 1e-9);
}

TEST(Fidelity, BasicProperties) {
    gen::Gen gen(43);
    for (int k = 0; k < 50; ++k) {
        const DensityMatrix a = gen.density_matrix();
        const DensityMatrix b = gen.density_matrix();
        EXPECT_NEAR(fidelity(a, a), 1.0, 1e-7);
        EXPECT_NEAR(fidelity(a, b), fidelity(b, a), 1e-7);
        EXPECT_LE(fidelity(a, b), 1.0 + 1e-12);
    }
}

TEST(Infidelity, BlockFormMatchesGenericRoute) {
    gen::Gen gen(44);
    for (int k = 0; k < 200; ++k) {
        const auto p = gen.system();
        const auto baths = gen.baths();
        SystemParams q = p;
        q.delta *= gen.uniform(0.5, 1.5);
        const DensityMatrix a = steady_state(build_liouvillian(p, baths)).rho;
        const DensityMatrix b = steady_state(build_liouvillian(q, baths)).rho;
        EXPECT_NEAR(infidelity(a, b), 1.0 - fidelity(a, b), 1e-9);
    }
}

TEST(EquilibriumApprox, ClosedFormValue) {
    const SystemParams p{1.0, 1.0, 0.005, 1e-4, 1e-4};
    const double beta = 5.0;
    const double z = std::pow(1.0 + std::exp(beta * 0.5), 2);
    const double expected =
        beta * beta / z * (std::exp(beta * (1.005 - 0.5)) + std::exp(beta * (0.995 - 0.5)));
    EXPECT_NEAR(qfi_equilibrium_approx(p, 0.2, 0.5) / expected, 1.0, 1e-14);
    const double spectral = qfi_spectral(p, {0.2, 0.2, 0.5, 0.5}).f_total;
    EXPECT_NEAR(spectral / expected, 1.0, 1e-2);
}

TEST(EquilibriumApprox, ZeroTunnelingLimit) {
    const SystemParams p{1.0, 1.0, 0.0, 0.0, 0.0};
    const double beta = 4.0;
    const double z = std::pow(1.0 + std::exp(beta * 0.7), 2);
    EXPECT_NEAR(qfi_equilibrium_approx(p, 0.25, 0.3), 2 * beta * beta / z * std::exp(beta * 0.7),
                1e-14);
}

TEST(EquilibriumApprox, VanishesAtInfiniteTemperature) {
    EXPECT_LT(qfi_equilibrium_approx({1.0, 1.0, 0.005, 0.0, 0.0}, 1e8, 0.5), 1e-15);
}

TEST(EquilibriumApprox, RejectsAsymmetricJunction) {
    EXPECT_THROW(qfi_equilibrium_approx({1.0, 1.1, 0.005, 0.0, 0.0}, 0.2, 0.5), DomainError);
}

TEST(EquilibriumApprox, ApproachesFullQfiInWeakTunnelingLimit) {
    gen::Gen gen(45);
    for (int k = 0; k < 30; ++k) {
        const double delta = gen.log_uniform(1e-3, 1e-2);
        const SystemParams p{1.0, 1.0, delta, delta / 20.0, delta / 20.0};
        const double t = gen.uniform(0.1, 0.5);
        const double mu = gen.uniform(0.0, 2.0);
        const double full = qfi_spectral(p, {t, t, mu, mu}).f_total;
        EXPECT_NEAR(full / qfi_equilibrium_approx(p, t, mu), 1.0, 1e-2);
    }
}
