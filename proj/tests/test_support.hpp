// Hand-rolled generators for the property tests. Every generator is seeded so
// failures reproduce.

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "nessfi/liouvillian.hpp"
#include "nessfi/model.hpp"

namespace nessfi::gen {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }
    double log_uniform(double a, double b) {
        return std::exp(uniform(std::log(a), std::log(b)));
    }
    bool coin(double p = 0.5) { return uniform(0.0, 1.0) < p; }

    // Symmetric or mildly asymmetric junction, weak to strong tunneling.
    SystemParams system() {
        SystemParams p;
        p.omega1 = 1.0;
        p.omega2 = coin(0.6) ? 1.0 : uniform(0.7, 1.3);
        p.delta = log_uniform(1e-3, 0.3);
        p.gamma1 = p.delta * log_uniform(0.01, 0.5);
        p.gamma2 = coin(0.7) ? p.gamma1 : p.delta * log_uniform(0.01, 0.5);
        return p;
    }

    BathParams baths() {
        return {uniform(0.05, 1.0), uniform(0.05, 1.0), uniform(0.0, 2.0), uniform(0.0, 2.0)};
    }

    BathParams equilibrium() {
        const double t = uniform(0.05, 1.0);
        const double mu = uniform(0.0, 2.0);
        return {t, t, mu, mu};
    }

    // Haar-ish random mixed state: G G^dag / Tr with complex Gaussian G.
    DensityMatrix density_matrix() {
        std::normal_distribution<double> n(0.0, 1.0);
        Operator g;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) g(i, j) = cplx(n(rng_), n(rng_));
        DensityMatrix rho = g * g.adjoint();
        return rho / rho.trace();
    }

    Operator matrix() {
        std::normal_distribution<double> n(0.0, 1.0);
        Operator m;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m(i, j) = cplx(n(rng_), n(rng_));
        return m;
    }

    std::uint64_t next() { return rng_(); }

private:
    std::mt19937_64 rng_;
};

inline double max_abs(const Operator& m) { return m.cwiseAbs().maxCoeff(); }

} // namespace nessfi::gen
