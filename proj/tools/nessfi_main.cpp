// nessfi command-line driver
//
//   nessfi sweep <config> [--out path] [--format csv|jsonl] [--threads n] [--seed n] [--set k=v]...
//   nessfi point <config> [--seed n] [--set k=v]...
//   nessfi verify
//
// Exit codes: 0 success, 1 validation error, 2 solver failure (point mode) or
// failed verification.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "nessfi/config.hpp"
#include "nessfi/emit.hpp"
#include "nessfi/errors.hpp"
#include "nessfi/sweep.hpp"
#include "nessfi/verify/acceptance.hpp"

namespace {

struct CommonOptions {
    std::string config;
    std::vector<std::string> overrides;
    std::optional<std::uint64_t> seed;
};

nessfi::SweepSpec load(const CommonOptions& opts) {
    auto spec = nessfi::load_sweep_spec(opts.config);
    for (const auto& o : opts.overrides) nessfi::apply_override(spec, o);
    if (opts.seed) spec.seed = *opts.seed;
    nessfi::validate(spec);
    return spec;
}

int run_sweep(const CommonOptions& common, const std::optional<std::string>& out,
              const std::optional<std::string>& format, const std::optional<int>& threads) {
    auto spec = load(common);
    if (out) spec.output = *out;
    if (format) spec.format = nessfi::parse_output_format(*format);
    if (threads) spec.threads = *threads;
    nessfi::validate(spec);

    const auto table = nessfi::run_sweep(spec);
    if (spec.output.empty() || spec.output == "-") {
        nessfi::write_table(std::cout, table, spec.format);
    } else {
        nessfi::write_table_file(spec.output, table, spec.format);
    }
    std::size_t failed = 0;
    for (const auto& row : table.rows) failed += row.ok ? 0 : 1;
    if (failed) std::cerr << failed << " of " << table.rows.size() << " points failed\n";
    return 0;
}

int run_point(const CommonOptions& common) {
    auto spec = load(common);
    if (!spec.axes.empty()) {
        throw nessfi::ValidationError("point mode needs a config without axes");
    }
    const auto [params, baths] = nessfi::resolve_point(spec, {});
    const auto row = nessfi::evaluate_point(params, baths, spec);
    std::cout << nessfi::format_point_report(row);
    return row.ok ? 0 : 2;
}

int run_verify() {
    bool all = true;
    for (const auto& c : nessfi::verify::acceptance_criteria()) {
        nessfi::verify::CriterionResult r;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r = {c.id, c.name, false, std::string("threw: ") + e.what()};
        }
        all = all && r.passed;
        std::cout << nessfi::verify::format_result(r) << std::endl;
    }
    return all ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nonequilibrium steady states, QFI and correlations of a two-site fermionic junction"};
    app.require_subcommand(1);

    CommonOptions sweep_opts;
    std::optional<std::string> out;
    std::optional<std::string> format;
    std::optional<int> threads;
    auto* sweep = app.add_subcommand("sweep", "Evaluate observables over a parameter grid");
    sweep->add_option("config", sweep_opts.config, "YAML sweep config")->required();
    sweep->add_option("--out", out, "Output path ('-' for stdout)");
    sweep->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "jsonl"}));
    sweep->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    sweep->add_option("--seed", sweep_opts.seed, "Discord optimizer grid jitter seed (0: none)");
    sweep->add_option("--set", sweep_opts.overrides, "Override key=value (repeatable)");

    CommonOptions point_opts;
    auto* point = app.add_subcommand("point", "Evaluate a single parameter point");
    point->add_option("config", point_opts.config, "YAML config without axes")->required();
    point->add_option("--seed", point_opts.seed, "Discord optimizer grid jitter seed (0: none)");
    point->add_option("--set", point_opts.overrides, "Override key=value (repeatable)");

    auto* verify = app.add_subcommand("verify", "Run the acceptance checks and print pass/fail");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*sweep) return run_sweep(sweep_opts, out, format, threads);
        if (*point) return run_point(point_opts);
        if (*verify) return run_verify();
    } catch (const nessfi::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return 1;
    } catch (const nessfi::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
