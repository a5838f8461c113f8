#include "nessfi/observables.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "nessfi/errors.hpp"
#include "nessfi/nelder_mead.hpp"

namespace nessfi {

namespace {

constexpr double kClip = 1e-9;

double xlog2x(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

// Eigenvalues of a 2x2 Hermitian matrix.
std::array<double, 2> eig2(const Eigen::Matrix2cd& m) {
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const double r = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(m(0, 1)));
    return {0.5 * (a + d) + r, 0.5 * (a + d) - r};
}

double entropy2(const Eigen::Matrix2cd& m) {
    const auto ev = eig2(m);
    double s = 0.0;
    for (double p : ev) {
        if (p < -kClip) throw DomainError("entropy: state has a negative eigenvalue");
        s -= xlog2x(std::max(p, 0.0));
    }
    return s;
}

} // namespace

SpectralDecomp spectral_decompose(const DensityMatrix& rho) {
    if (!is_x_form(rho)) {
        throw ShapeError("spectral_decompose: state is not X-form with rho_14 = 0");
    }
    const double r22 = rho(1, 1).real();
    const double r33 = rho(2, 2).real();
    const cplx c = rho(1, 2);
    const double radius = std::sqrt(0.25 * (r22 - r33) * (r22 - r33) + std::norm(c));

    SpectralDecomp d;
    d.p1 = rho(0, 0).real();
    d.p2 = 0.5 * (r22 + r33) + radius;
    d.p3 = 0.5 * (r22 + r33) - radius;
    d.p4 = rho(3, 3).real();
    d.alpha = std::atan2(2.0 * std::abs(c), r22 - r33);
    d.phi = std::arg(c);
    if (d.phi == -std::numbers::pi) d.phi = std::numbers::pi;
    return d;
}

DensityMatrix reconstruct(const SpectralDecomp& d) {
    using Vec4 = Eigen::Matrix<cplx, 4, 1>;
    const cplx phase = std::polar(1.0, d.phi);
    const double c = std::cos(0.5 * d.alpha);
    const double s = std::sin(0.5 * d.alpha);
    Vec4 psi2 = Vec4::Zero();
    psi2(1) = c * phase;
    psi2(2) = s;
    Vec4 psi3 = Vec4::Zero();
    psi3(1) = s * phase;
    psi3(2) = -c;

    DensityMatrix rho = DensityMatrix::Zero();
    rho(0, 0) = d.p1;
    rho(3, 3) = d.p4;
    rho += d.p2 * psi2 * psi2.adjoint() + d.p3 * psi3 * psi3.adjoint();
    return rho;
}

double coherence(const DensityMatrix& rho) { return std::abs(rho(1, 2)); }

double linear_entropy(const DensityMatrix& rho) {
    const double purity = (rho * rho).trace().real();
    return 4.0 / 3.0 * (1.0 - purity);
}

double concurrence(const DensityMatrix& rho) {
    const bool x_shape = [&] {
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                const bool on_x = i == j || i + j == 3;
                if (!on_x && std::abs(rho(i, j)) > 1e-12) return false;
            }
        }
        return true;
    }();
    if (!x_shape) return concurrence_wootters(rho);

    auto diag = [&](int i) { return std::max(rho(i, i).real(), 0.0); };
    const double inner = std::abs(rho(1, 2)) - std::sqrt(diag(0) * diag(3));
    const double outer = std::abs(rho(0, 3)) - std::sqrt(diag(1) * diag(2));
    return 2.0 * std::max({0.0, inner, outer});
}

double concurrence_wootters(const DensityMatrix& rho) {
    // s_y (x) s_y in the computational basis.
    Operator flip = Operator::Zero();
    flip(0, 3) = -1.0;
    flip(3, 0) = -1.0;
    flip(1, 2) = 1.0;
    flip(2, 1) = 1.0;
    const Operator tilde = flip * rho.conjugate() * flip;

    Eigen::SelfAdjointEigenSolver<Operator> eig(rho);
    Eigen::Vector4d roots = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    const Operator sqrt_rho =
        eig.eigenvectors() * roots.cast<cplx>().asDiagonal() * eig.eigenvectors().adjoint();
    const Operator r = sqrt_rho * tilde * sqrt_rho;
    Eigen::SelfAdjointEigenSolver<Operator> er(0.5 * (r + r.adjoint()), Eigen::EigenvaluesOnly);

    std::array<double, 4> l{};
    for (int i = 0; i < 4; ++i) l[i] = std::sqrt(std::max(er.eigenvalues()(i), 0.0));
    std::sort(l.begin(), l.end(), std::greater<>());
    return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

double entropy_of_spectrum(const Eigen::VectorXd& eigenvalues) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
        const double p = eigenvalues(i);
        if (p < -kClip) throw DomainError("entropy: state has a negative eigenvalue");
        s -= xlog2x(std::max(p, 0.0));
    }
    return s;
}

double von_neumann_entropy(const Eigen::MatrixXcd& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(rho, Eigen::EigenvaluesOnly);
    return entropy_of_spectrum(eig.eigenvalues());
}

Eigen::Matrix2cd reduced_state_a(const DensityMatrix& rho) {
    Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
    for (int a = 0; a < 2; ++a)
        for (int ap = 0; ap < 2; ++ap)
            for (int b = 0; b < 2; ++b) out(a, ap) += rho(a + 2 * b, ap + 2 * b);
    return out;
}

Eigen::Matrix2cd reduced_state_b(const DensityMatrix& rho) {
    Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
    for (int b = 0; b < 2; ++b)
        for (int bp = 0; bp < 2; ++bp)
            for (int a = 0; a < 2; ++a) out(b, bp) += rho(a + 2 * b, a + 2 * bp);
    return out;
}

double mutual_information(const DensityMatrix& rho) {
    const double i = entropy2(reduced_state_a(rho)) + entropy2(reduced_state_b(rho)) -
                     von_neumann_entropy(rho);
    return std::max(i, 0.0);
}

double measured_information(const DensityMatrix& rho, double polar, double azimuth) {
    const double nx = std::sin(polar) * std::cos(azimuth);
    const double ny = std::sin(polar) * std::sin(azimuth);
    const double nz = std::cos(polar);

    double conditional = 0.0;
    for (int sign : {1, -1}) {
        // Projector (I + sign n.sigma) / 2 on subsystem B.
        Eigen::Matrix2cd proj;
        proj(0, 0) = 0.5 * (1.0 + sign * nz);
        proj(1, 1) = 0.5 * (1.0 - sign * nz);
        proj(0, 1) = 0.5 * sign * cplx(nx, -ny);
        proj(1, 0) = 0.5 * sign * cplx(nx, ny);

        // sigma_k(a, a') = sum_{b, b'} proj(b, b') rho(a + 2 b', a' + 2 b)
        Eigen::Matrix2cd sigma = Eigen::Matrix2cd::Zero();
        for (int a = 0; a < 2; ++a)
            for (int ap = 0; ap < 2; ++ap)
                for (int b = 0; b < 2; ++b)
                    for (int bp = 0; bp < 2; ++bp)
                        sigma(a, ap) += proj(b, bp) * rho(a + 2 * bp, ap + 2 * b);
        const double p = sigma.trace().real();
        if (p <= 0.0) continue;
        conditional += p * entropy2(sigma / p);
    }
    return entropy2(reduced_state_a(rho)) - conditional;
}

DiscordResult discord(const DensityMatrix& rho, const DiscordOptions& options) {
    const int grid = std::max(options.grid, 2);
    double jitter_polar = 0.0;
    double jitter_azimuth = 0.0;
    if (options.seed != 0) {
        std::mt19937_64 rng(options.seed);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        jitter_polar = u(rng);
        jitter_azimuth = u(rng);
    }

    DiscordResult out;
    auto objective = [&](double t, double f) {
        ++out.evaluations;
        return measured_information(rho, t, f);
    };

    struct Candidate {
        double value, polar, azimuth;
    };
    std::vector<Candidate> candidates;
    candidates.reserve(static_cast<std::size_t>(grid * grid));
    for (int i = 0; i < grid; ++i) {
        const double t = (i + jitter_polar) * std::numbers::pi / grid;
        for (int j = 0; j < grid; ++j) {
            const double f = (j + jitter_azimuth) * 2.0 * std::numbers::pi / grid;
            candidates.push_back({objective(t, f), t, f});
        }
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Candidate& a, const Candidate& b) { return a.value > b.value; });
    out.grid_best = candidates.front().value;

    NelderMeadOptions nm;
    nm.initial_step = 0.5 * std::numbers::pi / grid;
    nm.f_tol = options.tolerance;
    nm.max_iterations = options.max_iterations;

    Candidate best = candidates.front();
    const std::size_t starts = std::min<std::size_t>(3, candidates.size());
    for (std::size_t k = 0; k < starts; ++k) {
        const auto res = nelder_mead(
            [&](const std::vector<double>& x) { return -objective(x[0], x[1]); },
            {candidates[k].polar, candidates[k].azimuth}, nm);
        if (!res.converged) {
            throw OptimizerError("discord: measurement optimizer did not converge",
                                 std::max(best.value, -res.value), out.grid_best,
                                 res.iterations);
        }
        if (-res.value > best.value) best = {-res.value, res.x[0], res.x[1]};
    }

    out.qmi = mutual_information(rho);
    out.classical_corr = best.value;
    out.polar = best.polar;
    out.azimuth = best.azimuth;
    double q = out.qmi - out.classical_corr;
    // rounding only; C <= I holds analytically
    if (q < 0.0 && q > -1e-10) q = 0.0;
    out.discord = q;
    return out;
}

CorrelationReport correlation_report(const DensityMatrix& rho, const EigenBasis& basis,
                                     const DiscordOptions& options) {
    CorrelationReport r;
    r.coherence = coherence(rho);
    r.linear_entropy = linear_entropy(rho);
    r.concurrence = concurrence(to_site_basis(rho, basis));
    const auto d = discord(rho, options);
    r.qmi = d.qmi;
    r.classical_corr = d.classical_corr;
    r.discord = d.discord;
    return r;
}

} // namespace nessfi
