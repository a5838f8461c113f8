// metrology.hpp: quantum Fisher information with respect to the tunneling
// amplitude delta

#pragma once

#include <functional>
#include <optional>

#include "nessfi/liouvillian.hpp"
#include "nessfi/model.hpp"

namespace nessfi {

struct QfiReport {
    double f_total{0.0};
    double f_e{0.0};   // sum_i (dp_i)^2 / p_i
    double f_n{0.0};   // ((p2 - p3)^2 / (p2 + p3)) [(d alpha)^2 + (d phi)^2 sin^2 alpha]
    double step{0.0};
};

// A one-parameter family of X states theta -> rho(theta).
using StateFamily = std::function<DensityMatrix(double)>;

// max(1e-6, 1e-4 |delta|)
double default_qfi_step(double delta);

// max(1e-5, 1e-2 |delta|); see qfi_fidelity_oracle.
double default_oracle_step(double delta);

// Spectral QFI of an X-state family at theta, central differences with step h.
// Terms with p_i < 1e-12 are dropped when |dp_i| < 1e-8; otherwise a
// RankChangeError is thrown. Throws StepError when h cannot resolve theta.
QfiReport qfi_spectral(const StateFamily& family, double theta, double h);

// QFI of the NESS with respect to delta. h defaults to default_qfi_step.
QfiReport qfi_spectral(const SystemParams& params, const BathParams& baths,
                       std::optional<double> h = std::nullopt);

// Uhlmann fidelity Tr sqrt(sqrt(a) b sqrt(a)).
double fidelity(const DensityMatrix& a, const DensityMatrix& b);

// 1 - fidelity(a, b). For states that are block diagonal in
// {|00>}, {|10>, |01>}, {|11>} (the NESS shape) a closed form free of
// cancellation is used; otherwise 1 - fidelity(a, b).
double infidelity(const DensityMatrix& a, const DensityMatrix& b);

// Fidelity (Bures) estimate of the QFI. F(h) = 8 (1 - A(rho(theta), rho(theta + h))) / h^2
// is averaged over +h and -h, then Richardson-extrapolated over h and h/2.
// Works for any family, not only X states.
double qfi_fidelity_oracle(const StateFamily& family, double theta, double h);

double qfi_fidelity_oracle(const SystemParams& params, const BathParams& baths,
                           std::optional<double> h = std::nullopt);

// Weak-tunneling equilibrium QFI for a symmetric junction (omega1 == omega2 = omega)
// with both reservoirs at (t, mu):
//   (beta^2 / Z) (e^{beta(omega + delta - mu)} + e^{beta(omega - delta - mu)}),
//   Z = (1 + e^{beta(omega - mu)})^2.
// Accurate to ~1% for delta <= 0.01 omega, gamma << delta and beta delta <~ 0.1.
// Throws DomainError for an asymmetric junction.
double qfi_equilibrium_approx(const SystemParams& params, double t, double mu);

// True when qfi_spectral at h and h/2 agree within rel_tol.
bool qfi_step_consistent(const SystemParams& params, const BathParams& baths, double h,
                         double rel_tol = 1e-3);

} // namespace nessfi
