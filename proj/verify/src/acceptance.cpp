#include "nessfi/verify/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>

#include "nessfi/emit.hpp"
#include "nessfi/liouvillian.hpp"
#include "nessfi/metrology.hpp"
#include "nessfi/observables.hpp"
#include "nessfi/sweep.hpp"
#include "nessfi/thermo.hpp"
#include "nessfi/verify/oracles.hpp"

namespace nessfi::verify {

namespace {

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

std::string fixed3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = a + (b - a) * i / (n - 1);
    out.back() = b;
    return out;
}

SystemParams symmetric(double delta, double gamma, double omega = 1.0) {
    return {omega, omega, delta, gamma, gamma};
}

CriterionResult result(int id, const std::string& name, bool passed, const std::string& detail) {
    return {id, name, passed, detail};
}

// Grid shared by criteria 3 and 4: T1 = 0.2, T2 = T1 + dT with dT in [0, 1],
// mu1 = mu2 = mu in [0, 2], 21 x 21 points.
std::vector<BathParams> figure_grid() {
    std::vector<BathParams> out;
    for (double dt : linspace(0.0, 1.0, 21))
        for (double mu : linspace(0.0, 2.0, 21)) out.push_back({0.2, 0.2 + dt, mu, mu});
    return out;
}

struct WeakSweepRow {
    double dmu;
    QfiReport qfi;
    ThermoReport thermo;
    double qmi;
    double discord;
    double concurrence;
};

// Criterion 6 configuration: delta = 0.005, gamma = 0.002, T1 = T2 = 0.1,
// mu1 = 0.5, mu2 = 0.5 + dmu with dmu in [0, 1].
std::vector<WeakSweepRow> weak_tunneling_sweep() {
    const SystemParams params = symmetric(0.005, 0.002);
    const EigenBasis basis = diagonalize(params);
    std::vector<WeakSweepRow> rows;
    for (double dmu : linspace(0.0, 1.0, 21)) {
        const BathParams baths{0.1, 0.1, 0.5, 0.5 + dmu};
        const Liouvillian l = build_liouvillian(basis, baths, params);
        const DensityMatrix rho = steady_state(l).rho;
        const auto d = discord(rho);
        rows.push_back({dmu, qfi_spectral(params, baths), thermo_report(rho, l, basis, baths),
                        d.qmi, d.discord, concurrence(to_site_basis(rho, basis))});
    }
    return rows;
}

} // namespace

CriterionResult gibbs_recovery() {
    const SystemParams params = symmetric(0.005, 0.0002);
    const BathParams baths{0.2, 0.2, 0.5, 0.5};
    const EigenBasis basis = diagonalize(params);
    const DensityMatrix rho = steady_state(build_liouvillian(basis, baths, params)).rho;
    const DensityMatrix gibbs = gibbs_state(basis, 0.2, 0.5);

    double worst = 0.0;
    for (int i = 0; i < 4; ++i) {
        worst = std::max(worst, std::abs(rho(i, i).real() / gibbs(i, i).real() - 1.0));
    }
    const double coh = std::abs(rho(1, 2));
    const bool ok = worst < 1e-4 && coh < 1e-8;
    return result(1, "equilibrium Gibbs recovery", ok,
                  "max diag rel err " + sci(worst) + " (< 1e-4), |rho23| " + sci(coh) + " (< 1e-8)");
}

CriterionResult leading_order_slope() {
    const std::array<double, 3> gammas{0.002, 0.001, 0.0005};
    std::array<double, 3> dev{};
    for (std::size_t k = 0; k < gammas.size(); ++k) {
        const SystemParams params = symmetric(0.005, gammas[k]);
        const EigenBasis basis = diagonalize(params);
        for (double dt : linspace(0.0, 1.0, 5)) {
            for (double dmu : linspace(0.0, 1.0, 5)) {
                const BathParams baths{0.2, 0.2 + dt, 0.5 + 0.5 * dmu, 0.5 - 0.5 * dmu};
                const DensityMatrix exact = steady_state(build_liouvillian(basis, baths, params)).rho;
                const DensityMatrix lead = ness_leading_order(basis, baths, params).rho;
                dev[k] = std::max(dev[k], (exact - lead).cwiseAbs().maxCoeff());
            }
        }
    }
    // least-squares slope of log(dev) against log(gamma)
    double mx = 0.0, my = 0.0;
    for (std::size_t k = 0; k < 3; ++k) {
        mx += std::log(gammas[k]) / 3.0;
        my += std::log(dev[k]) / 3.0;
    }
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t k = 0; k < 3; ++k) {
        sxy += (std::log(gammas[k]) - mx) * (std::log(dev[k]) - my);
        sxx += (std::log(gammas[k]) - mx) * (std::log(gammas[k]) - mx);
    }
    const double slope = sxy / sxx;
    const bool ok = std::abs(slope - 2.0) <= 0.3;
    return result(2, "leading-order NESS scaling", ok,
                  "log-log slope " + fixed3(slope) + " (2 +/- 0.3), max dev " + sci(dev[0]) + ", " +
                      sci(dev[1]) + ", " + sci(dev[2]));
}

CriterionResult current_conservation() {
    std::ostringstream detail;
    bool ok = true;
    for (double delta : {0.005, 0.05}) {
        const SystemParams params = symmetric(delta, 0.002);
        const EigenBasis basis = diagonalize(params);
        double worst_i = 0.0, worst_j = 0.0;
        std::size_t count = 0;
        for (const auto& baths : figure_grid()) {
            const Liouvillian l = build_liouvillian(basis, baths, params);
            const auto t = thermo_report(steady_state(l).rho, l, basis, baths);
            worst_i = std::max(worst_i, std::abs(t.i1 + t.i2));
            worst_j = std::max(worst_j, std::abs(t.j1 + t.j2));
            ++count;
        }
        ok = ok && worst_i < 1e-10 && worst_j < 1e-10 && count >= 400;
        detail << "delta=" << delta << ": " << count << " pts, max|I1+I2| " << sci(worst_i)
               << ", max|J1+J2| " << sci(worst_j) << "; ";
    }
    std::string d = detail.str();
    d.resize(d.size() - 2);
    return result(3, "current conservation", ok, d);
}

CriterionResult epr_positivity() {
    const SystemParams params = symmetric(0.005, 0.002);
    const EigenBasis basis = diagonalize(params);
    double min_epr = INFINITY;
    for (const auto& baths : figure_grid()) {
        const Liouvillian l = build_liouvillian(basis, baths, params);
        min_epr = std::min(min_epr, thermo_report(steady_state(l).rho, l, basis, baths).epr);
    }

    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> temp(0.05, 2.0), mu(-2.0, 3.0), omega(0.1, 3.0),
        lg(std::log(1e-4), std::log(1e-2));
    double min_lead = INFINITY;
    double worst_form = 0.0;
    for (int k = 0; k < 10000; ++k) {
        const BathParams b{temp(rng), temp(rng), mu(rng), mu(rng)};
        const double w = omega(rng);
        const double g = std::exp(lg(rng));
        const double v = epr_leading_order(b, w, g);
        min_lead = std::min(min_lead, v);
        const double ref = epr_exponential_form(b, w, g);
        const double scale = std::max(std::abs(ref), 1e-300);
        if (std::abs(ref) > 1e-12 * g) worst_form = std::max(worst_form, std::abs(v - ref) / scale);
    }
    const bool ok = min_epr >= -1e-10 && min_lead >= 0.0 && worst_form < 1e-8;
    return result(4, "EPR positivity", ok,
                  "min grid EPR " + sci(min_epr) + " (>= -1e-10), min leading-order EPR over 1e4 draws " +
                      sci(min_lead) + " (>= 0), closed form vs exponential form rel " + sci(worst_form));
}

CriterionResult qfi_cross_validation() {
    std::mt19937_64 rng(424242);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    auto log_uniform = [&](double a, double b) {
        return std::exp(std::log(a) + u(rng) * (std::log(b) - std::log(a)));
    };

    double worst = 0.0;
    int weak = 0, strong = 0;
    for (int k = 0; k < 100; ++k) {
        const double delta = log_uniform(1e-3, 0.3);
        const double gamma = delta * log_uniform(0.01, 0.5);
        const double omega2 = u(rng) < 0.7 ? 1.0 : 1.0 + 0.4 * (u(rng) - 0.5);
        const SystemParams params{1.0, omega2, delta, gamma, gamma};
        const BathParams baths{0.1 + 0.9 * u(rng), 0.1 + 0.9 * u(rng), 2.0 * u(rng), 2.0 * u(rng)};
        const double spectral = qfi_spectral(params, baths).f_total;
        const double oracle = qfi_fidelity_oracle(params, baths);
        worst = std::max(worst, std::abs(spectral - oracle) / std::abs(spectral));
        (delta <= 0.01 ? weak : strong)++;
    }

    double worst_eq = 0.0;
    for (int k = 0; k < 20; ++k) {
        const double delta = log_uniform(1e-3, 1e-2);
        const double gamma = delta / 10.0 * (0.1 + 0.9 * u(rng));
        const double t = 0.1 + 0.4 * u(rng);
        const double mu = 2.0 * u(rng);
        const SystemParams params = symmetric(delta, gamma);
        const BathParams baths{t, t, mu, mu};
        const double approx = qfi_equilibrium_approx(params, t, mu);
        const double spectral = qfi_spectral(params, baths).f_total;
        const double oracle = qfi_fidelity_oracle(params, baths);
        worst_eq = std::max({worst_eq, std::abs(spectral / approx - 1.0),
                             std::abs(oracle / approx - 1.0)});
    }
    const bool ok = worst < 1e-3 && worst_eq < 1e-2;
    return result(5, "QFI cross-validation", ok,
                  "spectral vs fidelity max rel " + sci(worst) + " over 100 pts (" +
                      std::to_string(weak) + " weak, " + std::to_string(strong) +
                      " strong) (< 1e-3); equilibrium approx max rel " + sci(worst_eq) +
                      " over 20 pts (< 1e-2)");
}

CriterionResult weak_tunneling_enhancement() {
    auto rows = weak_tunneling_sweep();
    std::stable_sort(rows.begin(), rows.end(), [](const WeakSweepRow& a, const WeakSweepRow& b) {
        return a.thermo.epr < b.thermo.epr;
    });
    bool monotone = true;
    for (std::size_t k = 1; k < rows.size(); ++k) {
        if (rows[k].qfi.f_total < rows[k - 1].qfi.f_total - 1e-9) monotone = false;
    }
    double min_fn = INFINITY;
    for (const auto& r : rows) {
        if (r.dmu > 0.0) min_fn = std::min(min_fn, r.qfi.f_n);
    }
    const bool ok = monotone && min_fn > 0.0;
    return result(6, "weak-tunneling QFI enhancement", ok,
                  std::string("QFI along EPR order ") + (monotone ? "nondecreasing" : "NOT monotone") +
                      " (" + sci(rows.front().qfi.f_total) + " -> " + sci(rows.back().qfi.f_total) +
                      "), min F^N for dmu>0 " + sci(min_fn) + " (> 0)");
}

CriterionResult strong_tunneling_suppression() {
    const SystemParams params = symmetric(0.05, 0.002);
    const double at_eq = qfi_spectral(params, {0.1, 0.1, 0.5, 0.5}).f_total;
    const double biased = qfi_spectral(params, {0.1, 1.1, 0.5, 0.5}).f_total;
    return result(7, "strong-tunneling QFI suppression", biased < at_eq,
                  "QFI(dT=1) " + sci(biased) + " < QFI(dT=0) " + sci(at_eq));
}

CriterionResult correlation_structure() {
    auto rows = weak_tunneling_sweep();
    const auto zero = std::min_element(rows.begin(), rows.end(), [](auto& a, auto& b) {
        return std::abs(a.thermo.epr) < std::abs(b.thermo.epr);
    });
    const auto top = std::max_element(rows.begin(), rows.end(), [](auto& a, auto& b) {
        return a.thermo.epr < b.thermo.epr;
    });
    double max_conc_weak = 0.0;
    for (const auto& r : rows) max_conc_weak = std::max(max_conc_weak, r.concurrence);

    const SystemParams strong = symmetric(0.1, 0.002);
    const EigenBasis basis = diagonalize(strong);
    double max_conc_strong = 0.0;
    for (double mu : linspace(0.0, 2.0, 21)) {
        for (double dmu : linspace(0.0, 1.0, 21)) {
            const BathParams baths{0.1, 0.1, mu + dmu, mu};
            const DensityMatrix rho = steady_state(build_liouvillian(basis, baths, strong)).rho;
            max_conc_strong = std::max(max_conc_strong, concurrence(to_site_basis(rho, basis)));
        }
    }

    const bool zero_ok = std::abs(zero->qmi) <= 1e-9 && std::abs(zero->discord) <= 1e-9;
    const bool top_ok = top->qmi > 0.0 && top->discord > 0.0;
    const bool ok = zero_ok && top_ok && max_conc_weak == 0.0 && max_conc_strong > 0.0;
    return result(8, "correlation structure", ok,
                  "at zero EPR I " + sci(zero->qmi) + ", Q " + sci(zero->discord) +
                      "; at max EPR I " + sci(top->qmi) + ", Q " + sci(top->discord) +
                      "; weak-sweep max E " + sci(max_conc_weak) + "; delta=0.1 grid max E " +
                      sci(max_conc_strong));
}

CriterionResult discord_oracle() {
    double worst = 0.0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const DensityMatrix rho = random_ness_shaped_state(seed);
        const double opt = discord(rho).classical_corr;
        const double grid = classical_correlation_grid(rho, 400).value;
        worst = std::max(worst, std::abs(opt - grid));
    }
    return result(9, "discord optimizer vs 400x400 grid", worst <= 1e-6,
                  "max |C_opt - C_grid| " + sci(worst) + " over 20 states (<= 1e-6)");
}

CriterionResult determinism() {
    SweepSpec spec;
    spec.fixed = {{"omega", 1.0}, {"delta", 0.005}, {"gamma", 0.002}, {"t1", 0.2}};
    spec.axes = {{"dT", 0.0, 1.0, 4, Scale::linear}, {"mu", 0.0, 2.0, 4, Scale::linear}};
    spec.seed = 7;

    auto render = [&](int threads) {
        SweepSpec s = spec;
        s.threads = threads;
        const SweepTable table = run_sweep(s);
        std::ostringstream csv, jsonl;
        write_csv(csv, table);
        write_jsonl(jsonl, table);
        return csv.str() + jsonl.str();
    };
    const std::string first = render(1);
    const std::string second = render(1);
    const std::string parallel = render(4);
    const bool sweep_ok = first == second && first == parallel;

    const bool verify_ok = format_result(strong_tunneling_suppression()) ==
                               format_result(strong_tunneling_suppression()) &&
                           format_result(gibbs_recovery()) == format_result(gibbs_recovery());
    return result(10, "determinism", sweep_ok && verify_ok,
                  std::string("sweep serial/serial/4-thread outputs ") +
                      (sweep_ok ? "identical" : "DIFFER") + " (" + std::to_string(first.size()) +
                      " bytes); repeated checks " + (verify_ok ? "identical" : "DIFFER"));
}

const std::vector<Criterion>& acceptance_criteria() {
    static const std::vector<Criterion> list = {
        {1, "equilibrium Gibbs recovery", 1.0, gibbs_recovery},
        {2, "leading-order NESS scaling", 10.0, leading_order_slope},
        {3, "current conservation", 60.0, current_conservation},
        {4, "EPR positivity", 30.0, epr_positivity},
        {5, "QFI cross-validation", 120.0, qfi_cross_validation},
        {6, "weak-tunneling QFI enhancement", 0.0, weak_tunneling_enhancement},
        {7, "strong-tunneling QFI suppression", 0.0, strong_tunneling_suppression},
        {8, "correlation structure", 0.0, correlation_structure},
        {9, "discord optimizer vs 400x400 grid", 60.0, discord_oracle},
        {10, "determinism", 0.0, determinism},
    };
    return list;
}

std::string format_result(const CriterionResult& r) {
    std::ostringstream os;
    os << (r.passed ? "PASS" : "FAIL") << ' ' << (r.id < 10 ? " " : "") << r.id << ' ' << r.name
       << ": " << r.detail;
    return os.str();
}

} // namespace nessfi::verify
