// liouvillian.hpp: Bloch-Redfield generator on the two-mode Fock space and
// its stationary state.
//
// Basis: {|00>, |10>, |01>, |11>} where the first digit is the occupation of
// eigenmode zeta_1 and the second that of zeta_2, i.e. index = n1 + 2 n2.
// |00> is the empty state g, |11> the doubly occupied state f.
//
// Jordan-Wigner ordering: zeta_1 acts on mode 1 alone, zeta_2 carries the
// parity string (-1)^{n1}. Consequently zeta_1^dag |01> = +|11> and
// zeta_2^dag |10> = -|11>.
//
// Vectorization is column stacking, vec(X)[i + 4 j] = X(i, j), so that
//   vec(A X B) = (B^T (x) A) vec(X),
//   vec(A X)   = (I (x) A) vec(X),
//   vec(X B)   = (B^T (x) I) vec(X).

#pragma once

#include <array>
#include <complex>
#include <cstddef>

#include <Eigen/Dense>

#include "nessfi/model.hpp"

namespace nessfi {

using cplx = std::complex<double>;
using Operator = Eigen::Matrix<cplx, 4, 4>;
using DensityMatrix = Operator;
using Superoperator = Eigen::Matrix<cplx, 16, 16>;
using StateVector = Eigen::Matrix<cplx, 16, 1>;

struct ModeOperators {
    Operator zeta1;
    Operator zeta2;
    Operator zeta1_dag;
    Operator zeta2_dag;
};

ModeOperators mode_operators();

// N_S = zeta_1^dag zeta_1 + zeta_2^dag zeta_2
Operator number_operator();

// H_S = omega'_1 zeta_1^dag zeta_1 + omega'_2 zeta_2^dag zeta_2
Operator system_hamiltonian(const EigenBasis& basis);

StateVector vec(const DensityMatrix& rho);
DensityMatrix unvec(const StateVector& v);

// Superoperators of X -> A X, X -> X B and X -> A X B.
Superoperator left_multiplication(const Operator& a);
Superoperator right_multiplication(const Operator& b);
Superoperator sandwich(const Operator& a, const Operator& b);

// Applies a superoperator to a density matrix.
DensityMatrix apply(const Superoperator& s, const DensityMatrix& rho);

// Per-reservoir pieces with the sign convention of
//   d rho / dt = i [rho, H_S] - sum_l (N_l[rho] + S_l[rho]),
// so N_l, S_l are the terms that are subtracted. N_l holds the population
// (same-mode) terms and S_l the mode-mixing terms that the secular
// approximation would drop; S_l vanishes when sin(theta) == 0.
struct Dissipators {
    std::array<Superoperator, 2> n;
    std::array<Superoperator, 2> s;

    // D_l = -(N_l + S_l): contribution of reservoir l to d rho / dt.
    Superoperator bath(std::size_t l) const { return -(n[l] + s[l]); }
};

Dissipators build_dissipators(const EigenBasis& basis, const BathParams& baths,
                              const SystemParams& params);

struct Liouvillian {
    Superoperator unitary;  // X -> i [X, H_S]
    Dissipators dissipators;

    Superoperator total() const;
    Superoperator bath(std::size_t l) const { return dissipators.bath(l); }
};

Liouvillian build_liouvillian(const EigenBasis& basis, const BathParams& baths,
                              const SystemParams& params);

// Convenience overload: diagonalizes params first.
Liouvillian build_liouvillian(const SystemParams& params, const BathParams& baths);

struct SteadyState {
    DensityMatrix rho;
    double residual{0.0};        // || L vec(rho) ||_2
    double min_eigenvalue{0.0};  // smallest eigenvalue of rho
};

inline constexpr double kResidualTolerance = 1e-10;
inline constexpr double kPsdTolerance = -1e-9;

// Solves L vec(rho) = 0 with Tr rho = 1 by replacing the rho_11 row of L with
// the trace functional. Throws AmbiguityError when the stationary state is not
// unique and SolverError when the residual exceeds kResidualTolerance.
SteadyState steady_state(const Liouvillian& liouvillian);
SteadyState steady_state(const Superoperator& generator);

// Number of singular values of the generator below rel_tol * ||L||_2.
std::size_t null_space_dimension(const Superoperator& generator, double rel_tol = 1e-10);

// Row functional of the trace: t^T vec(X) = Tr X.
Eigen::Matrix<cplx, 1, 16> trace_functional();

// X form with rho_14 = 0: only the diagonal and rho_23 / rho_32 nonzero.
bool is_x_form(const DensityMatrix& rho, double tol = 1e-10);

// Throws DomainError unless rho is Hermitian, unit trace and PSD within the
// documented tolerances.
void check_density_matrix(const DensityMatrix& rho);

// Re-expresses an eigenmode-basis state in the site-occupation basis
// {|00>, |10>, |01>, |11>}_site built from eta_1^dag, eta_2^dag.
DensityMatrix to_site_basis(const DensityMatrix& rho, const EigenBasis& basis);

} // namespace nessfi
