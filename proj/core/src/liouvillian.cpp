#include "nessfi/liouvillian.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nessfi/errors.hpp"

namespace nessfi {

namespace {

using Mat2 = Eigen::Matrix<cplx, 2, 2>;

// Kronecker product of two 4x4 operators, (a (x) b)(4 i + k, 4 j + l) = a(i, j) b(k, l).
Superoperator kron(const Operator& a, const Operator& b) {
    Superoperator out;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            out.block<4, 4>(4 * i, 4 * j) = a(i, j) * b;
        }
    }
    return out;
}

Operator kron2(const Mat2& major, const Mat2& minor) {
    Operator out;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            out.block<2, 2>(2 * i, 2 * j) = major(i, j) * minor;
        }
    }
    return out;
}

// coef * (A rho B) + h.c.
Superoperator hermitian_term(double coef, const Operator& a, const Operator& b) {
    return coef * (sandwich(a, b) + sandwich(b.adjoint(), a.adjoint()));
}

} // namespace

ModeOperators mode_operators() {
    Mat2 lower;
    lower << 0.0, 1.0, 0.0, 0.0;
    Mat2 parity;
    parity << 1.0, 0.0, 0.0, -1.0;
    const Mat2 id = Mat2::Identity();

    // index = n1 + 2 n2: mode 2 is the major tensor factor.
    ModeOperators ops;
    ops.zeta1 = kron2(id, lower);
    ops.zeta2 = kron2(lower, parity);
    ops.zeta1_dag = ops.zeta1.adjoint();
    ops.zeta2_dag = ops.zeta2.adjoint();
    return ops;
}

Operator number_operator() {
    const auto ops = mode_operators();
    return ops.zeta1_dag * ops.zeta1 + ops.zeta2_dag * ops.zeta2;
}

Operator system_hamiltonian(const EigenBasis& basis) {
    const auto ops = mode_operators();
    return basis.omega_p1 * ops.zeta1_dag * ops.zeta1 +
           basis.omega_p2 * ops.zeta2_dag * ops.zeta2;
}

StateVector vec(const DensityMatrix& rho) {
    return Eigen::Map<const StateVector>(rho.data());
}

DensityMatrix unvec(const StateVector& v) {
    return Eigen::Map<const DensityMatrix>(v.data());
}

Superoperator left_multiplication(const Operator& a) {
    return kron(Operator::Identity(), a);
}

Superoperator right_multiplication(const Operator& b) {
    return kron(b.transpose(), Operator::Identity());
}

Superoperator sandwich(const Operator& a, const Operator& b) {
    return kron(b.transpose(), a);
}

DensityMatrix apply(const Superoperator& s, const DensityMatrix& rho) {
    return unvec(s * vec(rho));
}

Dissipators build_dissipators(const EigenBasis& basis, const BathParams& baths,
                              const SystemParams& params) {
    validate(params);
    validate(baths);

    const auto ops = mode_operators();
    const std::array<Operator, 2> zeta{ops.zeta1, ops.zeta2};
    const std::array<double, 2> rate{params.gamma1, params.gamma2};
    const std::array<double, 2> freq{basis.omega_p1, basis.omega_p2};
    const std::array<double, 2> temp{baths.t1, baths.t2};
    const std::array<double, 2> chem{baths.mu1, baths.mu2};
    const auto amp = basis.site_amplitudes();

    Dissipators d;
    for (std::size_t l = 0; l < 2; ++l) {
        d.n[l].setZero();
        d.s[l].setZero();
        for (std::size_t a = 0; a < 2; ++a) {
            for (std::size_t b = 0; b < 2; ++b) {
                const double k = amp[l][a] * amp[l][b] * rate[b];
                if (k == 0.0) continue;
                const double occ = fermi_occupation(freq[b], temp[l], chem[l]);
                const Operator& za = zeta[a];
                const Operator& zb = zeta[b];
                const Operator za_dag = za.adjoint();
                const Operator zb_dag = zb.adjoint();
                const Operator id = Operator::Identity();

                // Contribution to d rho / dt:
                //   (1 - n)(z_b rho z_a^+ - z_a^+ z_b rho)
                // + n (z_b^+ rho z_a - z_a z_b^+ rho) + h.c.
                Superoperator term = hermitian_term(1.0 - occ, zb, za_dag) -
                                     hermitian_term(1.0 - occ, za_dag * zb, id) +
                                     hermitian_term(occ, zb_dag, za) -
                                     hermitian_term(occ, za * zb_dag, id);
                if (a == b) {
                    d.n[l] -= k * term;
                } else {
                    d.s[l] -= k * term;
                }
            }
        }
    }
    return d;
}

Superoperator Liouvillian::total() const {
    return unitary + dissipators.bath(0) + dissipators.bath(1);
}

Liouvillian build_liouvillian(const EigenBasis& basis, const BathParams& baths,
                              const SystemParams& params) {
    const Operator h = system_hamiltonian(basis);
    Liouvillian l;
    // i [rho, H] = i rho H - i H rho
    l.unitary = cplx(0.0, 1.0) * (right_multiplication(h) - left_multiplication(h));
    l.dissipators = build_dissipators(basis, baths, params);
    return l;
}

Liouvillian build_liouvillian(const SystemParams& params, const BathParams& baths) {
    return build_liouvillian(diagonalize(params), baths, params);
}

Eigen::Matrix<cplx, 1, 16> trace_functional() {
    Eigen::Matrix<cplx, 1, 16> t = Eigen::Matrix<cplx, 1, 16>::Zero();
    for (int i = 0; i < 4; ++i) t(0, 5 * i) = 1.0;
    return t;
}

std::size_t null_space_dimension(const Superoperator& generator, double rel_tol) {
    Eigen::JacobiSVD<Superoperator> svd(generator);
    const auto& sv = svd.singularValues();
    const double cutoff = rel_tol * sv(0);
    std::size_t count = 0;
    for (int i = 0; i < sv.size(); ++i) {
        if (sv(i) <= cutoff) ++count;
    }
    return count;
}

SteadyState steady_state(const Superoperator& generator) {
    Superoperator system = generator;
    system.row(0) = trace_functional();
    StateVector rhs = StateVector::Zero();
    rhs(0) = 1.0;

    Eigen::FullPivLU<Superoperator> lu(system);
    if (!lu.isInvertible()) {
        const std::size_t dim = std::max<std::size_t>(null_space_dimension(generator), 2);
        std::ostringstream msg;
        msg << "steady_state: stationary state is not unique (null space dimension "
            << dim << ")";
        throw AmbiguityError(msg.str(), dim);
    }

    DensityMatrix rho = unvec(lu.solve(rhs));
    rho = 0.5 * (rho + rho.adjoint()).eval();
    rho /= rho.trace().real();

    SteadyState out;
    out.rho = rho;
    out.residual = (generator * vec(rho)).norm();
    if (!(out.residual <= kResidualTolerance)) {
        std::ostringstream msg;
        msg << "steady_state: residual " << out.residual << " exceeds tolerance "
            << kResidualTolerance;
        throw SolverError(msg.str(), out.residual);
    }
    Eigen::SelfAdjointEigenSolver<Operator> eig(rho, Eigen::EigenvaluesOnly);
    out.min_eigenvalue = eig.eigenvalues()(0);
    return out;
}

SteadyState steady_state(const Liouvillian& liouvillian) {
    return steady_state(liouvillian.total());
}

bool is_x_form(const DensityMatrix& rho, double tol) {
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (i == j) continue;
            const bool inner = (i == 1 && j == 2) || (i == 2 && j == 1);
            if (!inner && std::abs(rho(i, j)) > tol) return false;
        }
    }
    return true;
}

void check_density_matrix(const DensityMatrix& rho) {
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
        throw DomainError("density matrix is not Hermitian");
    }
    if (std::abs(rho.trace() - cplx(1.0)) > 1e-10) {
        throw DomainError("density matrix does not have unit trace");
    }
    Eigen::SelfAdjointEigenSolver<Operator> eig(rho, Eigen::EigenvaluesOnly);
    if (eig.eigenvalues()(0) < kPsdTolerance) {
        throw DomainError("density matrix is not positive semidefinite");
    }
}

DensityMatrix to_site_basis(const DensityMatrix& rho, const EigenBasis& basis) {
    const auto ops = mode_operators();
    const auto amp = basis.site_amplitudes();
    const Operator eta1_dag = amp[0][0] * ops.zeta1_dag + amp[0][1] * ops.zeta2_dag;
    const Operator eta2_dag = amp[1][0] * ops.zeta1_dag + amp[1][1] * ops.zeta2_dag;

    Eigen::Matrix<cplx, 4, 1> vacuum = Eigen::Matrix<cplx, 4, 1>::Zero();
    vacuum(0) = 1.0;
    Operator w;
    w.col(0) = vacuum;
    w.col(1) = eta1_dag * vacuum;
    w.col(2) = eta2_dag * vacuum;
    w.col(3) = eta1_dag * (eta2_dag * vacuum);
    return w.adjoint() * rho * w;
}

} // namespace nessfi
