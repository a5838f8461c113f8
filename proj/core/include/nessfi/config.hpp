// config.hpp: sweep specification and its YAML representation
//
// Schema (see docs/config_schema.md):
//
//   fixed:            # parameter name -> value
//     omega: 1.0
//     delta: 0.005
//   axes:             # zero, one or two swept parameters, row-major order
//     - {name: dT, start: 0.0, stop: 1.0, count: 21, scale: linear}
//   observables: [qfi, correlations, discord, thermo]
//   bias: split       # how dmu is applied: split | bath1 | bath2
//   qfi_step: 1e-7    # optional; default max(1e-6, 1e-4 |delta|)
//   discord_grid: 40
//   output: out.csv
//   format: csv       # csv | jsonl
//   threads: 1
//   seed: 0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nessfi/model.hpp"

namespace nessfi {

enum class Scale { linear, log };
enum class BiasMode { split, bath1, bath2 };
enum class OutputFormat { csv, jsonl };

struct Axis {
    std::string name;
    double start{0.0};
    double stop{0.0};
    int count{2};
    Scale scale{Scale::linear};

    // Grid values; endpoints are exact.
    std::vector<double> values() const;
};

struct ObservableSelection {
    bool qfi{true};
    bool correlations{true};  // coherence, linear entropy, concurrence, QMI
    bool discord{true};       // classical correlation and discord
    bool thermo{true};        // currents and EPR
};

struct SweepSpec {
    std::map<std::string, double> fixed;
    std::vector<Axis> axes;
    ObservableSelection observables;
    std::optional<double> qfi_step;
    BiasMode bias{BiasMode::split};
    int discord_grid{40};
    std::string output;
    OutputFormat format{OutputFormat::csv};
    int threads{1};
    std::uint64_t seed{0};
};

// Recognized parameter names. The first nine set one field each; the rest are
// shorthands:
//   omega  -> omega1 = omega2        gamma -> gamma1 = gamma2
//   t      -> t1 = t2                mu    -> mu1 = mu2
//   dT     -> t2 = t1 + dT           dmu   -> shift mu per `bias`
const std::vector<std::string>& parameter_names();

// Throws ValidationError with a message naming the offending key.
SweepSpec parse_sweep_spec(const std::string& yaml_text);
SweepSpec load_sweep_spec(const std::string& path);

// Applies `key=value`. Parameter names go to `fixed` (replacing an axis of the
// same name is an error); the scalar options above are also accepted.
void apply_override(SweepSpec& spec, const std::string& assignment);

// Checks axis sanity, name disjointness and that every parameter resolves.
void validate(const SweepSpec& spec);

// Merges fixed values with one value per axis and resolves the shorthands.
std::pair<SystemParams, BathParams> resolve_point(const SweepSpec& spec,
                                                  const std::vector<double>& axis_values);

std::string to_string(BiasMode mode);
std::string to_string(OutputFormat format);
OutputFormat parse_output_format(const std::string& text);

} // namespace nessfi
