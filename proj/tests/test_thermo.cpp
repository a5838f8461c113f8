#include <gtest/gtest.h>

#include <cmath>

#include "nessfi/liouvillian.hpp"
#include "nessfi/thermo.hpp"
#include "nessfi/verify/oracles.hpp"
#include "test_support.hpp"

using namespace nessfi;

namespace {

struct Evaluated {
    DensityMatrix rho;
    ThermoReport report;
};

Evaluated evaluate(const SystemParams& p, const BathParams& b) {
    const auto basis = diagonalize(p);
    const auto l = build_liouvillian(basis, b, p);
    const auto rho = steady_state(l).rho;
    return {rho, thermo_report(rho, l, basis, b)};
}

const SystemParams kWeak{1.0, 1.0, 0.005, 0.002, 0.002};

} // namespace

TEST(Currents, VanishAtEquilibrium) {
    gen::Gen gen(51);
    for (int k = 0; k < 100; ++k) {
        const auto r = evaluate(gen.system(), gen.equilibrium()).report;
        EXPECT_NEAR(r.i1, 0.0, 1e-14);
        EXPECT_NEAR(r.j1, 0.0, 1e-14);
        EXPECT_NEAR(r.epr, 0.0, 1e-12);
    }
}

TEST(Currents, AreConserved) {
    gen::Gen gen(52);
    for (int k = 0; k < 200; ++k) {
        const auto r = evaluate(gen.system(), gen.baths()).report;
        EXPECT_LT(std::abs(r.i1 + r.i2), 1e-10);
        EXPECT_LT(std::abs(r.j1 + r.j2), 1e-10);
    }
}

TEST(Currents, ParticlesFlowDownTheChemicalPotential) {
    EXPECT_GT(evaluate(kWeak, {0.2, 0.2, 1.2, 0.8}).report.i1, 0.0);
    EXPECT_LT(evaluate(kWeak, {0.2, 0.2, 0.8, 1.2}).report.i1, 0.0);
}

TEST(Currents, HeatFlowsOutOfTheHotBath) {
    // mu below omega so that the hot bath holds more particles at omega.
    EXPECT_GT(evaluate(kWeak, {0.2, 0.6, 0.5, 0.5}).report.j2, 0.0);
}

TEST(Currents, EachParticleCarriesOmega) {
    const auto r = evaluate(kWeak, {0.2, 0.2, 1.2, 0.7}).report;
    EXPECT_NEAR(r.j1 / (1.0 * r.i1), 1.0, 1e-2);
}

TEST(Currents, SwappingBathsNegatesCurrents) {
    gen::Gen gen(53);
    for (int k = 0; k < 50; ++k) {
        const double d = gen.log_uniform(1e-3, 0.1);
        const SystemParams p{1.0, 1.0, d, 0.2 * d, 0.2 * d};
        const auto b = gen.baths();
        const auto fwd = evaluate(p, b).report;
        const auto rev = evaluate(p, {b.t2, b.t1, b.mu2, b.mu1}).report;
        const double scale = std::abs(fwd.i1) + std::abs(fwd.j1) + 1e-300;
        EXPECT_LT(std::abs(fwd.i1 + rev.i1) / scale, 1e-8);
        EXPECT_LT(std::abs(fwd.j1 + rev.j1) / scale, 1e-8);
        EXPECT_NEAR(fwd.epr, rev.epr, 1e-8 * std::abs(fwd.epr) + 1e-16);
    }
}

TEST(Currents, SaturateWithLargeBias) {
    // Once mu2 clears both levels by many T the current stops growing.
    std::vector<double> i1;
    for (int k = 0; k <= 20; ++k) {
        const double dmu = k / 20.0;
        i1.push_back(evaluate(kWeak, {0.1, 0.1, 0.5, 0.5 + dmu}).report.i1);
    }
    const double plateau = std::abs(i1.back());
    EXPECT_GT(plateau, 0.0);
    EXPECT_LT(std::abs(i1[20] - i1[19]), 0.01 * plateau);
}

TEST(EntropyProduction, Formula) {
    const BathParams b{0.2, 0.5, 0.3, 0.9};
    EXPECT_DOUBLE_EQ(entropy_production_rate(2.0, 3.0, b),
                     -2.0 * (1 / 0.2 - 1 / 0.5) + 3.0 * (0.3 / 0.2 - 0.9 / 0.5));
    EXPECT_EQ(entropy_production_rate(1.0, 1.0, {0.3, 0.3, 0.5, 0.5}), 0.0);
}

TEST(EntropyProduction, NonNegativeInWeakTunnelingRegime) {
    gen::Gen gen(54);
    for (int k = 0; k < 500; ++k) {
        const double d = gen.log_uniform(1e-3, 1e-2);
        const double g = gen.uniform(0.01, 0.5) * d;
        const SystemParams p{1.0, 1.0, d, g, g};
        ASSERT_TRUE(in_validated_epr_regime(p));
        const double t1 = gen.uniform(0.05, 0.5);
        const double mu = gen.uniform(0.0, 2.0);
        const BathParams b{t1, t1 + gen.uniform(0.0, 1.0), mu, mu + gen.uniform(0.0, 1.0)};
        EXPECT_GE(evaluate(p, b).report.epr, -1e-10);
    }
}

TEST(LeadingOrder, EquilibriumHasNoCoherence) {
    const SystemParams p{1.0, 1.0, 0.005, 0.0005, 0.0005};
    const auto basis = diagonalize(p);
    const auto lo = ness_leading_order(basis, {0.2, 0.2, 0.5, 0.5}, p);
    EXPECT_EQ(lo.rho(1, 2), cplx(0.0));
    EXPECT_NEAR(lo.rho.trace().real(), 1.0, 1e-15);
    EXPECT_FALSE(lo.large_g);
}

TEST(LeadingOrder, SaturatedBias) {
    const auto basis = diagonalize(kWeak);
    const auto lo = ness_leading_order(basis, {0.01, 0.01, 5.0, -5.0}, kWeak);
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(lo.rho(i, i).real(), 0.25, 1e-15);
    EXPECT_NEAR(lo.rho(1, 2).imag(), -0.5 * 0.4, 1e-15);
}

TEST(LeadingOrder, FlagsLargeG) {
    // the figure parameters already have g = 0.4
    const SystemParams p = kWeak;
    EXPECT_TRUE(ness_leading_order(diagonalize(p), {0.2, 0.5, 0.5, 0.5}, p).large_g);
}

TEST(LeadingOrder, ErrorIsSecondOrderInG) {
    const BathParams b{0.2, 0.8, 0.5, 0.5};
    auto deviation = [&](double gamma) {
        const SystemParams p{1.0, 1.0, 0.005, gamma, gamma};
        const auto basis = diagonalize(p);
        const auto exact = steady_state(build_liouvillian(basis, b, p)).rho;
        return gen::max_abs(exact - ness_leading_order(basis, b, p).rho);
    };
    const double ratio = deviation(0.001) / deviation(0.0005);
    EXPECT_GT(ratio, 3.0);
    EXPECT_LT(ratio, 5.0);
}

TEST(EprLeadingOrder, ZeroCases) {
    EXPECT_EQ(epr_leading_order({0.3, 0.3, 0.5, 0.5}, 1.0, 0.01), 0.0);
    // beta1 (mu1 - w) == beta2 (mu2 - w) with unequal baths
    const BathParams b{0.2, 0.4, 0.9, 0.8};
    EXPECT_NEAR(epr_leading_order(b, 1.0, 0.01), 0.0, 1e-18);
}

TEST(EprLeadingOrder, NonNegativeAndMatchesExponentialForm) {
    gen::Gen gen(55);
    for (int k = 0; k < 10000; ++k) {
        const BathParams b{gen.uniform(0.05, 2.0), gen.uniform(0.05, 2.0), gen.uniform(-2.0, 3.0),
                           gen.uniform(-2.0, 3.0)};
        const double w = gen.uniform(0.1, 3.0);
        const double v = epr_leading_order(b, w, 1.0);
        ASSERT_GE(v, 0.0);
        const double ref = verify::epr_exponential_form(b, w, 1.0);
        EXPECT_NEAR(v, ref, 1e-9 * std::abs(ref) + 1e-14);
    }
}

TEST(EprLeadingOrder, NumericEprConvergesAsGShrinks) {
    const BathParams b{0.2, 0.4, 0.5, 0.5};
    auto rel_error = [&](double gamma) {
        const SystemParams p{1.0, 1.0, 0.005, gamma, gamma};
        return std::abs(evaluate(p, b).report.epr / epr_leading_order(b, 1.0, gamma) - 1.0);
    };
    const double e1 = rel_error(0.001);
    const double e2 = rel_error(0.0005);
    EXPECT_LT(e1, 0.2);
    EXPECT_GT(e1 / e2, 3.0);
}
