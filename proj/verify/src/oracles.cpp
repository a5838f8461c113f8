#include "nessfi/verify/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

namespace nessfi::verify {

DensityMatrix steady_state_svd(const Superoperator& generator) {
    Eigen::JacobiSVD<Superoperator> svd(generator, Eigen::ComputeFullV);
    const StateVector v = svd.matrixV().col(15);
    DensityMatrix rho = unvec(v);
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return rho / rho.trace();
}

DensityMatrix gibbs_state(const EigenBasis& basis, double t, double mu) {
    const double energies[4] = {0.0, basis.omega_p1, basis.omega_p2,
                                basis.omega_p1 + basis.omega_p2};
    const int particles[4] = {0, 1, 1, 2};
    double weights[4];
    double shift = 0.0;
    for (int i = 0; i < 4; ++i) shift = std::min(shift, (energies[i] - mu * particles[i]) / t);
    double z = 0.0;
    for (int i = 0; i < 4; ++i) {
        weights[i] = std::exp(-(energies[i] - mu * particles[i]) / t + shift);
        z += weights[i];
    }
    DensityMatrix rho = DensityMatrix::Zero();
    for (int i = 0; i < 4; ++i) rho(i, i) = weights[i] / z;
    return rho;
}

double entropy_bits(const Eigen::MatrixXcd& rho) {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> eig(rho, false);
    double s = 0.0;
    for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) {
        const double p = eig.eigenvalues()(i).real();
        if (p > 1e-300) s -= p * std::log(p) / std::numbers::ln2;
    }
    return s;
}

namespace {

Eigen::Matrix2cd trace_out_b(const DensityMatrix& rho) {
    // index = a + 2 b, so B is the major Kronecker factor: rho = sum rho_B (x) rho_A.
    Eigen::Matrix2cd out;
    out = rho.block<2, 2>(0, 0) + rho.block<2, 2>(2, 2);
    return out;
}

Eigen::Matrix2cd trace_out_a(const DensityMatrix& rho) {
    Eigen::Matrix2cd out;
    for (int b = 0; b < 2; ++b)
        for (int bp = 0; bp < 2; ++bp)
            out(b, bp) = rho(2 * b, 2 * bp) + rho(2 * b + 1, 2 * bp + 1);
    return out;
}

Operator kron_b(const Eigen::Matrix2cd& p) {
    Operator out = Operator::Zero();
    for (int b = 0; b < 2; ++b)
        for (int bp = 0; bp < 2; ++bp)
            out.block<2, 2>(2 * b, 2 * bp) = p(b, bp) * Eigen::Matrix2cd::Identity();
    return out;
}

} // namespace

double mutual_information_oracle(const DensityMatrix& rho) {
    return entropy_bits(trace_out_b(rho)) + entropy_bits(trace_out_a(rho)) - entropy_bits(rho);
}

double measured_information_oracle(const DensityMatrix& rho, double polar, double azimuth) {
    using Vec2 = Eigen::Vector2cd;
    const Vec2 up(std::cos(0.5 * polar), std::polar(std::sin(0.5 * polar), azimuth));
    const Vec2 down(-std::polar(std::sin(0.5 * polar), -azimuth), std::cos(0.5 * polar));

    double conditional = 0.0;
    for (const Vec2& v : {up, down}) {
        const Operator proj = kron_b(v * v.adjoint());
        const DensityMatrix post = proj * rho * proj;
        const double p = post.trace().real();
        if (p < 1e-15) continue;
        conditional += p * entropy_bits(trace_out_b(post) / p);
    }
    return entropy_bits(trace_out_b(rho)) - conditional;
}

GridMax classical_correlation_grid(const DensityMatrix& rho, int n) {
    GridMax best{-1.0, 0.0, 0.0};
    for (int j = 0; j <= n; ++j) {
        const double polar = j * std::numbers::pi / n;
        // The azimuth is irrelevant at the poles.
        const int kmax = (j == 0 || j == n) ? 1 : n;
        for (int k = 0; k < kmax; ++k) {
            const double azimuth = 2.0 * std::numbers::pi * k / n;
            const double v = measured_information_oracle(rho, polar, azimuth);
            if (v > best.value) best = {v, polar, azimuth};
        }
    }
    return best;
}

double concurrence_general(const DensityMatrix& rho) {
    Operator sy2 = Operator::Zero();
    sy2(0, 3) = -1.0;
    sy2(3, 0) = -1.0;
    sy2(1, 2) = 1.0;
    sy2(2, 1) = 1.0;
    const Operator r = rho * sy2 * rho.conjugate() * sy2;
    Eigen::ComplexEigenSolver<Operator> eig(r, false);
    std::vector<double> l;
    for (int i = 0; i < 4; ++i) l.push_back(std::sqrt(std::max(0.0, eig.eigenvalues()(i).real())));
    std::sort(l.begin(), l.end(), std::greater<>());
    return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

double epr_exponential_form(const BathParams& baths, double w, double gamma) {
    const double b1 = 1.0 / baths.t1;
    const double b2 = 1.0 / baths.t2;
    const double m1 = baths.mu1;
    const double m2 = baths.mu2;
    // Exponents of the six bracket terms and of the denominator factors.
    const double e[6] = {2 * m1 * b1 + (m2 + w) * b2, m1 * b1 + w * b1 + 2 * w * b2,
                         2 * m2 * b2 + (m1 + w) * b1, m2 * b2 + b1 * w + (b1 + b2) * w,
                         2 * m1 * b1 + 2 * w * b2,     2 * m2 * b2 + 2 * w * b1};
    const double sign[6] = {2, 2, -2, -2, 2, -2};
    const double d1 = std::max(m1 * b1, w * b1);
    const double d2 = std::max(m2 * b2, w * b2);
    const double scale = 2.0 * d1 + 2.0 * d2;  // bracket terms all carry this total weight
    double bracket = 0.0;
    for (int i = 0; i < 6; ++i) bracket += sign[i] * std::exp(e[i] - scale);
    const double f1 = std::exp(m1 * b1 - d1) + std::exp(w * b1 - d1);
    const double f2 = std::exp(m2 * b2 - d2) + std::exp(w * b2 - d2);
    const double grouped = (m1 * b1 + w * b2) - (m2 * b2 + w * b1);
    return gamma * grouped * bracket / (2.0 * f1 * f1 * f2 * f2);
}

namespace {

std::array<double, 4> random_simplex(std::mt19937_64& rng) {
    std::exponential_distribution<double> ex(1.0);
    std::array<double, 4> p{};
    double sum = 0.0;
    for (double& x : p) sum += (x = ex(rng));
    for (double& x : p) x /= sum;
    return p;
}

} // namespace

DensityMatrix random_ness_shaped_state(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const auto p = random_simplex(rng);
    DensityMatrix rho = DensityMatrix::Zero();
    for (int i = 0; i < 4; ++i) rho(i, i) = p[i];
    const double mag = u(rng) * std::sqrt(p[1] * p[2]);
    rho(1, 2) = std::polar(mag, 2.0 * std::numbers::pi * u(rng));
    rho(2, 1) = std::conj(rho(1, 2));
    return rho;
}

DensityMatrix random_x_state(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    DensityMatrix rho = random_ness_shaped_state(rng());
    const double mag = u(rng) * std::sqrt(rho(0, 0).real() * rho(3, 3).real());
    rho(0, 3) = std::polar(mag, 2.0 * std::numbers::pi * u(rng));
    rho(3, 0) = std::conj(rho(0, 3));
    return rho;
}

} // namespace nessfi::verify
