// model.hpp: junction parameters, eigenmode rotation, reservoir occupations
//
// Units: hbar = k_B = 1. Energies, temperatures and rates share one scale
// (typically the bare site frequency).

#pragma once

#include <array>

namespace nessfi {

// Two fermionic sites with bare energies omega1, omega2 coupled by a
// tunneling amplitude delta; gamma1, gamma2 are the Weisskopf-Wigner decay
// rates of the two eigenmodes.
struct SystemParams {
    double omega1{1.0};
    double omega2{1.0};
    double delta{0.0};
    double gamma1{0.0};
    double gamma2{0.0};
};

// Temperature and chemical potential of reservoir 1 (coupled to site 1) and
// reservoir 2 (coupled to site 2).
struct BathParams {
    double t1{1.0};
    double t2{1.0};
    double mu1{0.0};
    double mu2{0.0};
};

// Throws DomainError when an invariant is violated.
void validate(const SystemParams& params);
void validate(const BathParams& baths);

// Diagonalized single-particle problem. Mode zeta_1 carries omega_p1 (the
// larger eigenvalue), zeta_2 carries omega_p2. The site operators are
//
//   eta_1 = sin(theta/2) zeta_1 + cos(theta/2) zeta_2
//   eta_2 = cos(theta/2) zeta_1 - sin(theta/2) zeta_2
//
// with cos(theta) = (omega2 - omega1) / R, sin(theta) = 2 delta / R and
// R = sqrt((omega1 - omega2)^2 + 4 delta^2).
struct EigenBasis {
    double omega_p1{0.0};
    double omega_p2{0.0};
    double cos_theta{0.0};
    double sin_theta{1.0};
    // omega1 == omega2 and delta == 0: theta is fixed to pi/2 by convention.
    bool degenerate{false};

    double cos_half() const;
    double sin_half() const;

    // amplitudes[i][a]: coefficient of zeta_a in the site operator eta_i
    // (i = site / reservoir index, a = mode index, both zero-based).
    std::array<std::array<double, 2>, 2> site_amplitudes() const;

    // omega_p1 - omega_p2 >= 0
    double splitting() const { return omega_p1 - omega_p2; }
};

EigenBasis diagonalize(const SystemParams& params);

// Fermi-Dirac occupation 1 / (exp((omega - mu) / t) + 1). Requires t > 0.
double fermi_occupation(double omega, double t, double mu);

// n_{a,p} = (n(omega'_a, T1, mu1) + n(omega'_a, T2, mu2)) / 2 and
// n_{a,m} = (n(omega'_a, T1, mu1) - n(omega'_a, T2, mu2)) / 2.
struct OccupationMoments {
    double n1p{0.0};
    double n2p{0.0};
    double n1m{0.0};
    double n2m{0.0};
};

OccupationMoments occupation_moments(const EigenBasis& basis, const BathParams& baths);

} // namespace nessfi
