// observables.hpp: state-level quantities of the two-mode NESS
//
// Bipartition: subsystem A is eigenmode zeta_1 (index bit 0), subsystem B is
// eigenmode zeta_2 (index bit 1). Entropies are in bits.

#pragma once

#include <array>
#include <cstdint>

#include <Eigen/Dense>

#include "nessfi/liouvillian.hpp"

namespace nessfi {

// rho = sum_i p_i |psi_i><psi_i| with
//   psi_1 = |00>,  psi_4 = |11>,
//   psi_2 = cos(alpha/2) e^{i phi} |10> + sin(alpha/2) |01>,
//   psi_3 = sin(alpha/2) e^{i phi} |10> - cos(alpha/2) |01>,
// alpha = atan2(2 |rho_23|, rho_22 - rho_33) in [0, pi], phi = arg(rho_23).
struct SpectralDecomp {
    double p1{0.0};
    double p2{0.0};
    double p3{0.0};
    double p4{0.0};
    double alpha{0.0};
    double phi{0.0};

    std::array<double, 4> probabilities() const { return {p1, p2, p3, p4}; }
};

// Throws ShapeError unless rho is X-form with rho_14 = 0.
SpectralDecomp spectral_decompose(const DensityMatrix& rho);
DensityMatrix reconstruct(const SpectralDecomp& decomp);

// |rho_23|
double coherence(const DensityMatrix& rho);

// (4/3)(1 - Tr rho^2)
double linear_entropy(const DensityMatrix& rho);

// Concurrence. Uses 2 max(0, |rho_23| - sqrt(rho_11 rho_44),
// |rho_14| - sqrt(rho_22 rho_33)) on X states and falls back to the Wootters
// formula otherwise.
double concurrence(const DensityMatrix& rho);

// Wootters: max(0, l1 - l2 - l3 - l4) with l_i the square roots of the
// eigenvalues of sqrt(rho) (s_y (x) s_y) rho^* (s_y (x) s_y) sqrt(rho).
double concurrence_wootters(const DensityMatrix& rho);

// -sum p log2 p over the eigenvalues of a Hermitian matrix. Eigenvalues in
// [-1e-9, 0) are treated as zero; anything more negative throws DomainError.
double von_neumann_entropy(const Eigen::MatrixXcd& rho);
double entropy_of_spectrum(const Eigen::VectorXd& eigenvalues);

Eigen::Matrix2cd reduced_state_a(const DensityMatrix& rho);
Eigen::Matrix2cd reduced_state_b(const DensityMatrix& rho);

// S(rho_A) + S(rho_B) - S(rho)
double mutual_information(const DensityMatrix& rho);

// S(rho_A) - sum_k p_k S(rho_{A|k}) for the projective measurement on B along
// the Bloch direction (sin t cos f, sin t sin f, cos t).
double measured_information(const DensityMatrix& rho, double polar, double azimuth);

struct DiscordOptions {
    int grid{40};              // coarse grid is grid x grid over (polar, azimuth)
    double tolerance{1e-9};    // simplex refinement tolerance on the objective
    int max_iterations{5000};
    std::uint64_t seed{0};     // 0: unjittered grid; otherwise jitter offsets
};

struct DiscordResult {
    double qmi{0.0};
    double classical_corr{0.0};
    double discord{0.0};
    double polar{0.0};
    double azimuth{0.0};
    double grid_best{0.0};
    int evaluations{0};
};

// Classical correlation C = sup over projective measurements on B of
// measured_information, and discord Q = I - C. Throws OptimizerError when the
// refinement does not converge.
DiscordResult discord(const DensityMatrix& rho, const DiscordOptions& options = {});

struct CorrelationReport {
    double coherence{0.0};
    double linear_entropy{0.0};
    double concurrence{0.0};
    double qmi{0.0};
    double classical_corr{0.0};
    double discord{0.0};
};

// All measures on the eigenmode-basis NESS except the concurrence, which is
// evaluated between the two physical sites (to_site_basis). The eigenmode
// concurrence of this model's NESS vanishes identically.
CorrelationReport correlation_report(const DensityMatrix& rho, const EigenBasis& basis,
                                     const DiscordOptions& options = {});

} // namespace nessfi
