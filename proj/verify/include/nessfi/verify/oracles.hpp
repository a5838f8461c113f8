// oracles.hpp: reference implementations used to check the core library
//
// These deliberately take different numerical routes from the core code
// (SVD instead of LU, explicit projectors instead of index arithmetic,
// non-Hermitian eigenproblems instead of matrix square roots).

#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "nessfi/liouvillian.hpp"
#include "nessfi/model.hpp"

namespace nessfi::verify {

// Right singular vector of the smallest singular value, reshaped and
// normalized to unit trace.
DensityMatrix steady_state_svd(const Superoperator& generator);

// exp(-(H - mu N) / t) / Z built from the many-body energies 0, w1, w2, w1 + w2.
DensityMatrix gibbs_state(const EigenBasis& basis, double t, double mu);

// -Tr rho log2 rho via a general complex eigen-solver.
double entropy_bits(const Eigen::MatrixXcd& rho);

double mutual_information_oracle(const DensityMatrix& rho);

// Classical correlation for the projective measurement on B along the Bloch
// direction (polar, azimuth), using explicit projectors (P (x) I) rho (P (x) I).
double measured_information_oracle(const DensityMatrix& rho, double polar, double azimuth);

struct GridMax {
    double value{0.0};
    double polar{0.0};
    double azimuth{0.0};
};

// Exhaustive search over polar = j pi / n (j = 0..n) and azimuth = 2 pi k / n
// (k = 0..n-1).
GridMax classical_correlation_grid(const DensityMatrix& rho, int n = 400);

// Wootters concurrence from the eigenvalues of the non-Hermitian product
// rho (s_y (x) s_y) rho^* (s_y (x) s_y).
double concurrence_general(const DensityMatrix& rho);

// Leading-order EPR written with the raw exponentials
// (rescaled by the largest exponent so nothing overflows):
//   gamma [(mu1 b1 + w b2) - (mu2 b2 + w b1)] * bracket / (2 (e^{mu1 b1} + e^{w b1})^2 (e^{mu2 b2} + e^{w b2})^2)
double epr_exponential_form(const BathParams& baths, double omega, double gamma);

// Random X state with rho_14 = 0 (the shape of the NESS in the eigenmode basis).
DensityMatrix random_ness_shaped_state(std::uint64_t seed);

// Random X state with both coherences populated.
DensityMatrix random_x_state(std::uint64_t seed);

} // namespace nessfi::verify
