#include "nessfi/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nessfi/errors.hpp"

namespace nessfi {

namespace {

bool finite(double x) { return std::isfinite(x); }

} // namespace

void validate(const SystemParams& p) {
    if (!finite(p.omega1) || !finite(p.omega2) || !finite(p.delta) ||
        !finite(p.gamma1) || !finite(p.gamma2)) {
        throw DomainError("SystemParams: all fields must be finite");
    }
    if (p.omega1 <= 0.0 || p.omega2 <= 0.0) {
        throw DomainError("SystemParams: omega1 and omega2 must be > 0");
    }
    if (p.gamma1 < 0.0 || p.gamma2 < 0.0) {
        throw DomainError("SystemParams: gamma1 and gamma2 must be >= 0");
    }
}

void validate(const BathParams& b) {
    if (!finite(b.t1) || !finite(b.t2) || !finite(b.mu1) || !finite(b.mu2)) {
        throw DomainError("BathParams: all fields must be finite");
    }
    if (b.t1 <= 0.0 || b.t2 <= 0.0) {
        throw DomainError("BathParams: temperatures must be > 0");
    }
}

double EigenBasis::cos_half() const {
    return std::sqrt(std::max(0.0, 0.5 * (1.0 + cos_theta)));
}

double EigenBasis::sin_half() const {
    const double s = std::sqrt(std::max(0.0, 0.5 * (1.0 - cos_theta)));
    return sin_theta < 0.0 ? -s : s;
}

std::array<std::array<double, 2>, 2> EigenBasis::site_amplitudes() const {
    const double c = cos_half();
    const double s = sin_half();
    return {{{s, c}, {c, -s}}};
}

EigenBasis diagonalize(const SystemParams& params) {
    validate(params);
    const double diff = params.omega2 - params.omega1;
    const double radius = std::hypot(diff, 2.0 * params.delta);
    const double mean = 0.5 * (params.omega1 + params.omega2);

    EigenBasis basis;
    basis.omega_p1 = mean + 0.5 * radius;
    basis.omega_p2 = mean - 0.5 * radius;
    if (radius == 0.0) {
        basis.cos_theta = 0.0;
        basis.sin_theta = 1.0;
        basis.degenerate = true;
        return basis;
    }
    // theta = atan2(2 delta, omega2 - omega1); use the ratios directly so the
    // symmetric junction gives cos_theta == 0 exactly.
    basis.cos_theta = diff / radius;
    basis.sin_theta = 2.0 * params.delta / radius;
    return basis;
}

double fermi_occupation(double omega, double t, double mu) {
    if (!(t > 0.0)) {
        throw DomainError("fermi_occupation: temperature must be > 0, got " +
                          std::to_string(t));
    }
    const double x = (omega - mu) / t;
    if (x >= 0.0) {
        const double e = std::exp(-x);
        return e / (1.0 + e);
    }
    return 1.0 / (1.0 + std::exp(x));
}

OccupationMoments occupation_moments(const EigenBasis& basis, const BathParams& baths) {
    validate(baths);
    const double a1 = fermi_occupation(basis.omega_p1, baths.t1, baths.mu1);
    const double a2 = fermi_occupation(basis.omega_p1, baths.t2, baths.mu2);
    const double b1 = fermi_occupation(basis.omega_p2, baths.t1, baths.mu1);
    const double b2 = fermi_occupation(basis.omega_p2, baths.t2, baths.mu2);
    return {0.5 * (a1 + a2), 0.5 * (b1 + b2), 0.5 * (a1 - a2), 0.5 * (b1 - b2)};
}

} // namespace nessfi
