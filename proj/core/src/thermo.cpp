#include "nessfi/thermo.hpp"

#include <algorithm>
#include <cmath>

#include "nessfi/errors.hpp"

namespace nessfi {

double particle_current(const DensityMatrix& rho, const Superoperator& bath_dissipator) {
    return (apply(bath_dissipator, rho) * number_operator()).trace().real();
}

double energy_current(const DensityMatrix& rho, const Superoperator& bath_dissipator,
                      const Operator& hamiltonian) {
    return (apply(bath_dissipator, rho) * hamiltonian).trace().real();
}

double entropy_production_rate(double j1, double i1, const BathParams& baths) {
    return -j1 * (1.0 / baths.t1 - 1.0 / baths.t2) +
           i1 * (baths.mu1 / baths.t1 - baths.mu2 / baths.t2);
}

ThermoReport thermo_report(const DensityMatrix& rho, const Liouvillian& liouvillian,
                           const EigenBasis& basis, const BathParams& baths) {
    const double unitary = particle_current(rho, liouvillian.unitary);
    if (std::abs(unitary) > 1e-12) {
        throw SolverError("thermo_report: commutator term carries a particle current",
                          unitary);
    }
    const Operator h = system_hamiltonian(basis);
    ThermoReport r;
    r.i1 = particle_current(rho, liouvillian.bath(0));
    r.i2 = particle_current(rho, liouvillian.bath(1));
    r.j1 = energy_current(rho, liouvillian.bath(0), h);
    r.j2 = energy_current(rho, liouvillian.bath(1), h);
    r.epr = entropy_production_rate(r.j1, r.i1, baths);
    return r;
}

LeadingOrderNess ness_leading_order(const EigenBasis& basis, const BathParams& baths,
                                    const SystemParams& params) {
    if (params.delta == 0.0) {
        throw DomainError("ness_leading_order: expansion in gamma/delta needs delta != 0");
    }
    const auto n = occupation_moments(basis, baths);
    LeadingOrderNess out;
    out.g = 0.5 * (params.gamma1 + params.gamma2) / params.delta;
    out.large_g = std::abs(out.g) > 0.2;

    DensityMatrix& rho = out.rho;
    rho.setZero();
    rho(0, 0) = (1.0 - n.n1p) * (1.0 - n.n2p);
    rho(1, 1) = n.n1p - n.n1p * n.n2p;
    rho(2, 2) = n.n2p - n.n1p * n.n2p;
    rho(3, 3) = n.n1p * n.n2p;
    rho(1, 2) = cplx(0.0, -0.5 * (n.n1m + n.n2m) * out.g);
    rho(2, 1) = std::conj(rho(1, 2));
    return out;
}

double epr_leading_order(const BathParams& baths, double omega, double gamma) {
    validate(baths);
    // With x_l = beta_l (mu_l - omega) and n_l = 1 / (1 + e^{-x_l}) the
    // exponential bracket over its partition factors reduces to n_1 - n_2, and
    // the grouped factor is x_1 - x_2. Both carry the same sign.
    const double x1 = (baths.mu1 - omega) / baths.t1;
    const double x2 = (baths.mu2 - omega) / baths.t2;
    auto logistic = [](double x) {
        if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
        const double e = std::exp(x);
        return e / (1.0 + e);
    };
    return gamma * (x1 - x2) * (logistic(x1) - logistic(x2));
}

bool in_validated_epr_regime(const SystemParams& params) {
    const double gamma = std::max(params.gamma1, params.gamma2);
    return params.omega1 == params.omega2 && std::abs(params.delta) <= 0.01 * params.omega1 &&
           gamma <= 0.5 * std::abs(params.delta);
}

} // namespace nessfi
