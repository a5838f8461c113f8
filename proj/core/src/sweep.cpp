#include "nessfi/sweep.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "nessfi/errors.hpp"

namespace nessfi {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<std::vector<double>> grid_points(const SweepSpec& spec) {
    std::vector<std::vector<double>> values;
    for (const auto& axis : spec.axes) values.push_back(axis.values());

    std::vector<std::vector<double>> points;
    if (values.empty()) {
        points.emplace_back();
    } else if (values.size() == 1) {
        for (double a : values[0]) points.push_back({a});
    } else {
        for (double a : values[0])
            for (double b : values[1]) points.push_back({a, b});
    }
    return points;
}

} // namespace

ObservableRow evaluate_point(const SystemParams& params, const BathParams& baths,
                             const SweepSpec& options) {
    ObservableRow row;
    row.params = params;
    row.baths = baths;
    try {
        const EigenBasis basis = diagonalize(params);
        const Liouvillian liouvillian = build_liouvillian(basis, baths, params);
        const SteadyState ness = steady_state(liouvillian);
        row.rho = ness.rho;
        row.residual = ness.residual;

        if (params.delta != 0.0 &&
            std::abs(0.5 * (params.gamma1 + params.gamma2) / params.delta) > 0.2) {
            row.flags.push_back("large_g");
        }

        const auto& sel = options.observables;
        if (sel.qfi) {
            const double h = options.qfi_step.value_or(default_qfi_step(params.delta));
            row.qfi = qfi_spectral(params, baths, h);
            const double half = qfi_spectral(params, baths, 0.5 * h).f_total;
            const double scale = std::max(std::abs(row.qfi->f_total), std::abs(half));
            if (scale > 0.0 && std::abs(row.qfi->f_total - half) > 1e-3 * scale) {
                row.flags.push_back("qfi_step_sensitive");
            }
        }
        if (sel.correlations || sel.discord) {
            CorrelationReport c;
            c.coherence = coherence(ness.rho);
            c.linear_entropy = linear_entropy(ness.rho);
            c.concurrence = concurrence(to_site_basis(ness.rho, basis));
            c.qmi = mutual_information(ness.rho);
            c.classical_corr = kNaN;
            c.discord = kNaN;
            if (sel.discord) {
                DiscordOptions dopt;
                dopt.grid = options.discord_grid;
                dopt.seed = options.seed;
                const auto d = discord(ness.rho, dopt);
                c.classical_corr = d.classical_corr;
                c.discord = d.discord;
                if (d.discord < -1e-9) row.flags.push_back("discord_exceeds_qmi");
            }
            row.correlations = c;
        }
        if (sel.thermo) {
            row.thermo = thermo_report(ness.rho, liouvillian, basis, baths);
            if (!in_validated_epr_regime(params)) row.flags.push_back("epr_unvalidated");
            if (row.thermo->epr < -1e-10) row.flags.push_back("epr_negative");
        }
        row.ok = true;
    } catch (const std::exception& e) {
        row.ok = false;
        row.error = e.what();
    }
    return row;
}

SweepTable run_sweep(const SweepSpec& spec) {
    validate(spec);

    SweepTable table;
    for (const auto& axis : spec.axes) table.axis_names.push_back(axis.name);

    const auto points = grid_points(spec);
    table.rows.resize(points.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < points.size(); i = next++) {
            const auto [params, baths] = resolve_point(spec, points[i]);
            ObservableRow row = evaluate_point(params, baths, spec);
            row.index = i;
            row.axis_values = points[i];
            table.rows[i] = std::move(row);
        }
    };

    const std::size_t n_threads =
        std::min<std::size_t>(static_cast<std::size_t>(spec.threads), points.size());
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return table;
}

} // namespace nessfi
