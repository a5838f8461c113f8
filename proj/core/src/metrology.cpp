#include "nessfi/metrology.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "nessfi/errors.hpp"
#include "nessfi/observables.hpp"

namespace nessfi {

namespace {

constexpr double kDropProbability = 1e-12;
constexpr double kDropDerivative = 1e-8;

void check_step(double theta, double h) {
    if (!(h > 0.0) || !std::isfinite(h)) {
        throw StepError("QFI step must be a positive finite number");
    }
    if (theta + h == theta || theta - h == theta || h < 1e-13 * std::abs(theta)) {
        std::ostringstream os;
        os << "QFI step " << h << " does not resolve a change at " << theta
           << "; use a larger step";
        throw StepError(os.str());
    }
}

// Bring b within pi of a.
double unwrap_to(double a, double b) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    while (b - a > std::numbers::pi) b -= two_pi;
    while (b - a < -std::numbers::pi) b += two_pi;
    return b;
}

StateFamily ness_family(const SystemParams& params, const BathParams& baths) {
    return [params, baths](double delta) {
        SystemParams p = params;
        p.delta = delta;
        return steady_state(build_liouvillian(p, baths)).rho;
    };
}

Operator sqrt_psd(const Operator& a) {
    Eigen::SelfAdjointEigenSolver<Operator> eig(0.5 * (a + a.adjoint()));
    const Eigen::Vector4d roots = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return eig.eigenvectors() * roots.cast<cplx>().asDiagonal() * eig.eigenvectors().adjoint();
}

} // namespace

double default_qfi_step(double delta) { return std::max(1e-6, 1e-4 * std::abs(delta)); }

double default_oracle_step(double delta) { return std::max(1e-5, 1e-2 * std::abs(delta)); }

QfiReport qfi_spectral(const StateFamily& family, double theta, double h) {
    check_step(theta, h);
    const auto lo = spectral_decompose(family(theta - h));
    const auto mid = spectral_decompose(family(theta));
    const auto hi = spectral_decompose(family(theta + h));

    const auto p_lo = lo.probabilities();
    const auto p_mid = mid.probabilities();
    const auto p_hi = hi.probabilities();

    QfiReport r;
    r.step = h;
    for (int i = 0; i < 4; ++i) {
        const double dp = (p_hi[i] - p_lo[i]) / (2.0 * h);
        if (p_mid[i] < kDropProbability) {
            if (std::abs(dp) < kDropDerivative) continue;
            throw RankChangeError("QFI: eigenvalue vanishes while its derivative does not",
                                  i + 1, p_mid[i], dp);
        }
        r.f_e += dp * dp / p_mid[i];
    }

    const double sum23 = p_mid[1] + p_mid[2];
    if (sum23 > kDropProbability) {
        const double dalpha = (hi.alpha - lo.alpha) / (2.0 * h);
        const double phi_lo = unwrap_to(mid.phi, lo.phi);
        const double phi_hi = unwrap_to(mid.phi, hi.phi);
        const double dphi = (phi_hi - phi_lo) / (2.0 * h);
        const double gap = p_mid[1] - p_mid[2];
        const double s = std::sin(mid.alpha);
        r.f_n = gap * gap / sum23 * (dalpha * dalpha + dphi * dphi * s * s);
    }
    r.f_total = r.f_e + r.f_n;
    return r;
}

QfiReport qfi_spectral(const SystemParams& params, const BathParams& baths,
                       std::optional<double> h) {
    validate(params);
    validate(baths);
    return qfi_spectral(ness_family(params, baths), params.delta,
                        h.value_or(default_qfi_step(params.delta)));
}

double fidelity(const DensityMatrix& a, const DensityMatrix& b) {
    const Operator sa = sqrt_psd(a);
    const Operator m = sa * b * sa;
    Eigen::SelfAdjointEigenSolver<Operator> eig(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
    double sum = 0.0;
    for (int i = 0; i < 4; ++i) sum += std::sqrt(std::max(eig.eigenvalues()(i), 0.0));
    return sum;
}

double infidelity(const DensityMatrix& a, const DensityMatrix& b) {
    if (!is_x_form(a, 0.0) || !is_x_form(b, 0.0)) return 1.0 - fidelity(a, b);

    // Both states are block diagonal: {|00>}, {|10>, |01>}, {|11>}. With unit
    // traces, 1 - A = sum over blocks of (tr a_B + tr b_B) / 2 - A_B, and each
    // summand is rewritten in terms of d = b - a so that nothing cancels.
    auto scalar_block = [](double x, double y) {
        x = std::max(x, 0.0);
        y = std::max(y, 0.0);
        const double root_sum = std::sqrt(x) + std::sqrt(y);
        if (root_sum == 0.0) return 0.0;
        const double diff = (y - x) / root_sum;
        return 0.5 * diff * diff;
    };

    // 2x2 block: A_B^2 = Y = Tr(ab) + 2 sqrt(det a det b) and X = (tr a + tr b) / 2.
    // X^2 - Y = (sqrt(det b) - sqrt(det a))^2 + (d11 - d22)^2 / 4 + |d12|^2.
    const Eigen::Matrix2cd ma = a.block<2, 2>(1, 1);
    const Eigen::Matrix2cd mb = b.block<2, 2>(1, 1);
    const Eigen::Matrix2cd d = mb - ma;
    const double det_a = std::max(ma.determinant().real(), 0.0);
    const double det_b = std::max(mb.determinant().real(), 0.0);
    Eigen::Matrix2cd adj_a;
    adj_a << ma(1, 1), -ma(0, 1), -ma(1, 0), ma(0, 0);
    const double q = (adj_a * d).trace().real() + d.determinant().real();
    const double root_sum = std::sqrt(det_a) + std::sqrt(det_b);
    const double det_gap = root_sum > 0.0 ? q / root_sum : 0.0;
    const double dd = d(0, 0).real() - d(1, 1).real();
    const double x2_minus_y = det_gap * det_gap + 0.25 * dd * dd + std::norm(d(0, 1));
    const double x = 0.5 * (ma.trace().real() + mb.trace().real());
    const double y = std::max((ma * mb).trace().real() + 2.0 * std::sqrt(det_a * det_b), 0.0);
    const double middle = x + std::sqrt(y) > 0.0 ? x2_minus_y / (x + std::sqrt(y)) : 0.0;

    return scalar_block(a(0, 0).real(), b(0, 0).real()) + middle +
           scalar_block(a(3, 3).real(), b(3, 3).real());
}

double qfi_fidelity_oracle(const StateFamily& family, double theta, double h) {
    check_step(theta, 0.5 * h);
    const DensityMatrix center = family(theta);
    auto symmetric = [&](double step) {
        const double plus = infidelity(center, family(theta + step));
        const double minus = infidelity(center, family(theta - step));
        return 4.0 * (plus + minus) / (step * step);
    };
    const double coarse = symmetric(h);
    const double fine = symmetric(0.5 * h);
    return (4.0 * fine - coarse) / 3.0;
}

double qfi_fidelity_oracle(const SystemParams& params, const BathParams& baths,
                           std::optional<double> h) {
    validate(params);
    validate(baths);
    return qfi_fidelity_oracle(ness_family(params, baths), params.delta,
                               h.value_or(default_oracle_step(params.delta)));
}

double qfi_equilibrium_approx(const SystemParams& params, double t, double mu) {
    validate(params);
    if (params.omega1 != params.omega2) {
        throw DomainError("qfi_equilibrium_approx: requires omega1 == omega2");
    }
    if (!(t > 0.0)) throw DomainError("qfi_equilibrium_approx: temperature must be > 0");
    const double beta = 1.0 / t;
    // (beta^2 / Z) e^{beta x} 2 cosh(beta delta) with x = omega - mu and
    // Z = (1 + e^{beta x})^2, i.e. beta^2 cosh(beta delta) / (2 cosh^2(beta x / 2)).
    const double half = 0.5 * beta * (params.omega1 - mu);
    const double ch = std::cosh(half);
    return beta * beta * std::cosh(beta * params.delta) / (2.0 * ch * ch);
}

bool qfi_step_consistent(const SystemParams& params, const BathParams& baths, double h,
                         double rel_tol) {
    const double full = qfi_spectral(params, baths, h).f_total;
    const double half = qfi_spectral(params, baths, 0.5 * h).f_total;
    const double scale = std::max(std::abs(full), std::abs(half));
    if (scale == 0.0) return true;
    return std::abs(full - half) <= rel_tol * scale;
}

} // namespace nessfi
