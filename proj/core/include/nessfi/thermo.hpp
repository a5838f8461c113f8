// thermo.hpp: reservoir currents, entropy production, leading-order NESS
//
// Sign convention: currents are positive when they flow from reservoir l into
// the system.

#pragma once

#include "nessfi/liouvillian.hpp"
#include "nessfi/model.hpp"

namespace nessfi {

struct ThermoReport {
    double i1{0.0};
    double i2{0.0};
    double j1{0.0};
    double j2{0.0};
    double epr{0.0};
};

// I_l = Tr(D_l[rho] N_S)
double particle_current(const DensityMatrix& rho, const Superoperator& bath_dissipator);

// J_l = Tr(D_l[rho] H_S)
double energy_current(const DensityMatrix& rho, const Superoperator& bath_dissipator,
                      const Operator& hamiltonian);

// -J_1 (1/T_1 - 1/T_2) + I_1 (mu_1/T_1 - mu_2/T_2)
double entropy_production_rate(double j1, double i1, const BathParams& baths);

// Currents and EPR of rho under liouvillian. Throws SolverError if the
// commutator part carries a particle current (it must not, since
// [N_S, H_S] = 0).
ThermoReport thermo_report(const DensityMatrix& rho, const Liouvillian& liouvillian,
                           const EigenBasis& basis, const BathParams& baths);

struct LeadingOrderNess {
    DensityMatrix rho;
    double g{0.0};         // mean(gamma1, gamma2) / delta
    bool large_g{false};   // g > 0.2: first-order expansion is unreliable
};

// First order in g = gamma/delta:
//   rho_11 = (1 - n1p)(1 - n2p), rho_22 = n1p (1 - n2p), rho_33 = n2p (1 - n1p),
//   rho_44 = n1p n2p, rho_23 = -i (n1m + n2m) g / 2.
LeadingOrderNess ness_leading_order(const EigenBasis& basis, const BathParams& baths,
                                    const SystemParams& params);

// Leading-order EPR of the symmetric junction at site energy omega with decay
// rate gamma. With n_l = n(omega, T_l, mu_l) this is
//   gamma (beta1 (mu1 - omega) - beta2 (mu2 - omega)) (n_1 - n_2),
// a product of two factors with the same sign, so it is never negative.
double epr_leading_order(const BathParams& baths, double omega, double gamma);

// Regime in which the semi-classical EPR has been checked to be non-negative:
// symmetric junction, delta <= 0.01 omega and gamma <= delta / 2.
bool in_validated_epr_regime(const SystemParams& params);

} // namespace nessfi
