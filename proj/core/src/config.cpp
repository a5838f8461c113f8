#include "nessfi/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "nessfi/errors.hpp"

namespace nessfi {

namespace {

const std::set<std::string> kTopLevelKeys = {
    "fixed", "axes", "observables", "bias", "qfi_step", "discord_grid",
    "output", "format", "threads", "seed"};

bool is_parameter(const std::string& name) {
    const auto& names = parameter_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

double parse_double(const std::string& text, const std::string& key) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
        throw ValidationError("'" + key + "': expected a finite number, got '" + text + "'");
    }
    return value;
}

template <typename T>
T scalar(const YAML::Node& node, const std::string& key) {
    if (!node.IsScalar()) throw ValidationError("'" + key + "' must be a scalar");
    try {
        return node.as<T>();
    } catch (const YAML::Exception&) {
        throw ValidationError("'" + key + "' has an invalid value '" + node.Scalar() + "'");
    }
}

double number(const YAML::Node& node, const std::string& key) {
    if (!node.IsScalar()) throw ValidationError("'" + key + "' must be a number");
    return parse_double(node.Scalar(), key);
}

Scale parse_scale(const std::string& text) {
    if (text == "linear") return Scale::linear;
    if (text == "log") return Scale::log;
    throw ValidationError("axis scale must be 'linear' or 'log', got '" + text + "'");
}

BiasMode parse_bias(const std::string& text) {
    if (text == "split") return BiasMode::split;
    if (text == "bath1") return BiasMode::bath1;
    if (text == "bath2") return BiasMode::bath2;
    throw ValidationError("bias must be 'split', 'bath1' or 'bath2', got '" + text + "'");
}

ObservableSelection parse_observables(const YAML::Node& node) {
    if (!node.IsSequence()) throw ValidationError("'observables' must be a list");
    ObservableSelection sel{false, false, false, false};
    for (const auto& item : node) {
        const auto name = scalar<std::string>(item, "observables");
        if (name == "qfi") sel.qfi = true;
        else if (name == "correlations") sel.correlations = true;
        else if (name == "discord") sel.discord = true;
        else if (name == "thermo") sel.thermo = true;
        else if (name == "all") sel = ObservableSelection{};
        else throw ValidationError("unknown observable '" + name + "'");
    }
    return sel;
}

int parse_int(const std::string& text, const std::string& key) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ValidationError("'" + key + "': expected an integer, got '" + text + "'");
    }
    return value;
}

std::uint64_t parse_seed(const std::string& text) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ValidationError("'seed': expected a non-negative integer, got '" + text + "'");
    }
    return value;
}

} // namespace

const std::vector<std::string>& parameter_names() {
    static const std::vector<std::string> names = {
        "omega1", "omega2", "delta", "gamma1", "gamma2", "t1", "t2", "mu1", "mu2",
        "omega", "gamma", "t", "mu", "dT", "dmu"};
    return names;
}

std::vector<double> Axis::values() const {
    std::vector<double> out(static_cast<std::size_t>(std::max(count, 0)));
    if (count == 1) {
        out[0] = start;
        return out;
    }
    for (int i = 0; i < count; ++i) {
        const double f = static_cast<double>(i) / (count - 1);
        if (scale == Scale::linear) {
            out[i] = start + f * (stop - start);
        } else {
            out[i] = std::exp(std::log(start) + f * (std::log(stop) - std::log(start)));
        }
    }
    if (count > 1) {
        out.front() = start;
        out.back() = stop;
    }
    return out;
}

SweepSpec parse_sweep_spec(const std::string& yaml_text) {
    YAML::Node root;
    try {
        root = YAML::Load(yaml_text);
    } catch (const YAML::Exception& e) {
        throw ValidationError(std::string("config is not valid YAML: ") + e.what());
    }
    if (!root.IsMap()) throw ValidationError("config must be a YAML mapping");

    SweepSpec spec;
    for (const auto& kv : root) {
        const auto key = kv.first.as<std::string>();
        if (!kTopLevelKeys.count(key)) throw ValidationError("unknown config key '" + key + "'");
    }

    if (const auto fixed = root["fixed"]) {
        if (!fixed.IsMap()) throw ValidationError("'fixed' must be a mapping");
        for (const auto& kv : fixed) {
            const auto name = kv.first.as<std::string>();
            if (!is_parameter(name)) throw ValidationError("unknown parameter '" + name + "'");
            spec.fixed[name] = number(kv.second, "fixed." + name);
        }
    }
    if (const auto axes = root["axes"]) {
        if (!axes.IsSequence()) throw ValidationError("'axes' must be a list");
        for (const auto& node : axes) {
            if (!node.IsMap()) throw ValidationError("each axis must be a mapping");
            for (const auto& kv : node) {
                const auto k = kv.first.as<std::string>();
                if (k != "name" && k != "start" && k != "stop" && k != "count" && k != "scale") {
                    throw ValidationError("unknown axis key '" + k + "'");
                }
            }
            if (!node["name"] || !node["start"] || !node["stop"] || !node["count"]) {
                throw ValidationError("axis needs name, start, stop and count");
            }
            Axis axis;
            axis.name = scalar<std::string>(node["name"], "axes.name");
            axis.start = number(node["start"], "axes." + axis.name + ".start");
            axis.stop = number(node["stop"], "axes." + axis.name + ".stop");
            axis.count = parse_int(node["count"].Scalar(), "axes." + axis.name + ".count");
            if (node["scale"]) axis.scale = parse_scale(scalar<std::string>(node["scale"], "scale"));
            spec.axes.push_back(axis);
        }
    }
    if (const auto obs = root["observables"]) spec.observables = parse_observables(obs);
    if (const auto n = root["bias"]) spec.bias = parse_bias(scalar<std::string>(n, "bias"));
    if (const auto n = root["qfi_step"]) spec.qfi_step = number(n, "qfi_step");
    if (const auto n = root["discord_grid"]) spec.discord_grid = parse_int(n.Scalar(), "discord_grid");
    if (const auto n = root["output"]) spec.output = scalar<std::string>(n, "output");
    if (const auto n = root["format"]) spec.format = parse_output_format(scalar<std::string>(n, "format"));
    if (const auto n = root["threads"]) spec.threads = parse_int(n.Scalar(), "threads");
    if (const auto n = root["seed"]) spec.seed = parse_seed(n.Scalar());

    validate(spec);
    return spec;
}

SweepSpec load_sweep_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open config '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_sweep_spec(buf.str());
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

void apply_override(SweepSpec& spec, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw ValidationError("override '" + assignment + "' must look like key=value");
    }
    const std::string key = assignment.substr(0, eq);
    const std::string value = assignment.substr(eq + 1);

    if (is_parameter(key)) {
        const bool swept = std::any_of(spec.axes.begin(), spec.axes.end(),
                                       [&](const Axis& a) { return a.name == key; });
        if (swept) throw ValidationError("cannot fix '" + key + "': it is a sweep axis");
        spec.fixed[key] = parse_double(value, key);
    } else if (key == "qfi_step") {
        spec.qfi_step = parse_double(value, key);
    } else if (key == "bias") {
        spec.bias = parse_bias(value);
    } else if (key == "discord_grid") {
        spec.discord_grid = parse_int(value, key);
    } else if (key == "output") {
        spec.output = value;
    } else if (key == "format") {
        spec.format = parse_output_format(value);
    } else if (key == "threads") {
        spec.threads = parse_int(value, key);
    } else if (key == "seed") {
        spec.seed = parse_seed(value);
    } else {
        throw ValidationError("unknown override key '" + key + "'");
    }
}

void validate(const SweepSpec& spec) {
    if (spec.axes.size() > 2) throw ValidationError("at most two axes are supported");
    std::set<std::string> seen;
    for (const auto& axis : spec.axes) {
        if (!is_parameter(axis.name)) throw ValidationError("unknown axis parameter '" + axis.name + "'");
        if (!seen.insert(axis.name).second) throw ValidationError("axis '" + axis.name + "' repeated");
        if (spec.fixed.count(axis.name)) {
            throw ValidationError("'" + axis.name + "' is both fixed and swept");
        }
        if (axis.count < 2) throw ValidationError("axis '" + axis.name + "' needs count >= 2");
        if (axis.scale == Scale::log && (axis.start <= 0.0 || axis.stop <= 0.0)) {
            throw ValidationError("log axis '" + axis.name + "' needs positive endpoints");
        }
    }
    if (spec.qfi_step && !(*spec.qfi_step > 0.0)) throw ValidationError("qfi_step must be > 0");
    if (spec.discord_grid < 2) throw ValidationError("discord_grid must be >= 2");
    if (spec.threads < 1) throw ValidationError("threads must be >= 1");

    // Resolve every grid point so that domain problems surface before any
    // computation starts.
    std::vector<std::vector<double>> values;
    for (const auto& axis : spec.axes) values.push_back(axis.values());
    std::vector<double> point(spec.axes.size());
    const std::size_t n0 = values.empty() ? 1 : values[0].size();
    const std::size_t n1 = values.size() < 2 ? 1 : values[1].size();
    for (std::size_t i = 0; i < n0; ++i) {
        for (std::size_t j = 0; j < n1; ++j) {
            if (!values.empty()) point[0] = values[0][i];
            if (values.size() > 1) point[1] = values[1][j];
            resolve_point(spec, point);
        }
    }
}

std::pair<SystemParams, BathParams> resolve_point(const SweepSpec& spec,
                                                  const std::vector<double>& axis_values) {
    if (axis_values.size() != spec.axes.size()) {
        throw ValidationError("resolve_point: expected one value per axis");
    }
    std::map<std::string, double> merged = spec.fixed;
    for (std::size_t k = 0; k < spec.axes.size(); ++k) merged[spec.axes[k].name] = axis_values[k];

    auto get = [&](const std::string& name) -> std::optional<double> {
        const auto it = merged.find(name);
        if (it == merged.end()) return std::nullopt;
        return it->second;
    };
    auto exclusive = [&](const std::string& shorthand, const std::string& a, const std::string& b) {
        if (get(shorthand) && (get(a) || get(b))) {
            throw ValidationError("'" + shorthand + "' conflicts with '" + a + "'/'" + b + "'");
        }
    };
    auto require = [&](const std::string& name, const std::string& alt) {
        if (auto v = get(name)) return *v;
        if (auto v = get(alt)) return *v;
        throw ValidationError("missing parameter '" + name + "' (or '" + alt + "')");
    };

    exclusive("omega", "omega1", "omega2");
    exclusive("gamma", "gamma1", "gamma2");
    exclusive("t", "t1", "t2");
    exclusive("mu", "mu1", "mu2");
    if (get("dT") && get("t2")) throw ValidationError("'dT' conflicts with 't2'");

    SystemParams p;
    p.omega1 = require("omega1", "omega");
    p.omega2 = require("omega2", "omega");
    p.gamma1 = require("gamma1", "gamma");
    p.gamma2 = require("gamma2", "gamma");
    if (auto d = get("delta")) p.delta = *d;
    else throw ValidationError("missing parameter 'delta'");

    BathParams b;
    b.t1 = require("t1", "t");
    b.t2 = get("t2") ? *get("t2") : b.t1 + get("dT").value_or(0.0);
    b.mu1 = require("mu1", "mu");
    b.mu2 = require("mu2", "mu");
    if (auto dmu = get("dmu")) {
        switch (spec.bias) {
        case BiasMode::split:
            b.mu1 += 0.5 * *dmu;
            b.mu2 -= 0.5 * *dmu;
            break;
        case BiasMode::bath1:
            b.mu1 += *dmu;
            break;
        case BiasMode::bath2:
            b.mu2 += *dmu;
            break;
        }
    }

    try {
        validate(p);
        validate(b);
    } catch (const DomainError& e) {
        throw ValidationError(e.what());
    }
    return {p, b};
}

std::string to_string(BiasMode mode) {
    switch (mode) {
    case BiasMode::split: return "split";
    case BiasMode::bath1: return "bath1";
    case BiasMode::bath2: return "bath2";
    }
    return "split";
}

std::string to_string(OutputFormat format) {
    return format == OutputFormat::csv ? "csv" : "jsonl";
}

OutputFormat parse_output_format(const std::string& text) {
    if (text == "csv") return OutputFormat::csv;
    if (text == "jsonl") return OutputFormat::jsonl;
    throw ValidationError("format must be 'csv' or 'jsonl', got '" + text + "'");
}

} // namespace nessfi
