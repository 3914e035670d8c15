#include "ftqc/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "ftqc/scenario.hpp"
#include "ftqc/serialize.hpp"
#include "ftqc/strategies.hpp"
#include "ftqc/sweep.hpp"
#include "ftqc/util.hpp"

namespace ftqc {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;

struct CommonFlags {
    std::string scenario;
    std::string cc;
    std::string rt;
    double p = 1e-3;
    std::optional<double> topo_budget;
    std::optional<double> dist_budget;
    std::optional<std::uint64_t> depth;
    std::optional<double> depth_fraction;
    std::optional<double> density;
    std::string format = "json";
};

struct StrategyFlags {
    std::string strategy = "autoccz";
    std::string factories = "auto";
    std::string units = "auto";
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool needs_profile = true) {
    cmd->add_option("--scenario", flags.scenario, "preset name or scenario file path")->required();
    auto* cc = cmd->add_option("--cc", flags.cc, "code cycle time (seconds or us/ms/s suffix)");
    if (needs_profile) {
        cc->required();
    }
    cmd->add_option("--rt", flags.rt,
                    "reaction time override; derived as cc/4 + 10us when omitted");
    cmd->add_option("--p", flags.p, "base physical error rate")->required();
    cmd->add_option("--topo-budget", flags.topo_budget, "allowed topological error (default 0.01)");
    cmd->add_option("--dist-budget", flags.dist_budget, "allowed distillation error (default 0.05)");
    cmd->add_option("--depth", flags.depth, "absolute measurement depth override");
    cmd->add_option("--depth-fraction", flags.depth_fraction,
                    "measurement depth as a fraction of the non-Clifford gate count");
    cmd->add_option("--density", flags.density, "device area per physical qubit in m^2");
    cmd->add_option("--format", flags.format, "output format: json or table")
        ->check(CLI::IsMember({"json", "table"}));
}

std::optional<std::uint64_t> parse_count_or_auto(const std::string& text, const char* what) {
    if (text == "auto") {
        return std::nullopt;
    }
    try {
        const long long value = std::stoll(text);
        if (value < 1) {
            throw ValidationError(std::string(what) + " must be >= 1 or 'auto'");
        }
        return static_cast<std::uint64_t>(value);
    } catch (const ValidationError&) {
        throw;
    } catch (const std::exception&) {
        throw ValidationError(std::string("cannot parse ") + what + " '" + text + "'");
    }
}

StrategyConfig resolve_strategy(const StrategyFlags& flags) {
    StrategyConfig config;
    if (flags.strategy == "beat") {
        config.kind = StrategyKind::BeatLimited;
    } else if (flags.strategy == "gosc") {
        config.kind = StrategyKind::GoscUnits;
        config.count = parse_count_or_auto(flags.units, "--units");
    } else if (flags.strategy == "autoccz") {
        config.kind = StrategyKind::AutoCcz;
        config.count = parse_count_or_auto(flags.factories, "--factories");
    } else {
        throw ValidationError("unknown strategy '" + flags.strategy +
                              "' (use beat, gosc, or autoccz)");
    }
    return config;
}

struct ResolvedInputs {
    Scenario scenario;
    HardwareProfile profile;
    ErrorBudget budget;
};

ResolvedInputs resolve_inputs(const CommonFlags& flags) {
    ResolvedInputs inputs;
    inputs.scenario = load_scenario(flags.scenario);
    if (flags.depth) {
        inputs.scenario.logical.measurement_depth = flags.depth;
        inputs.scenario.logical.depth_fraction.reset();
    }
    if (flags.depth_fraction) {
        inputs.scenario.logical.depth_fraction = flags.depth_fraction;
        if (flags.depth) {
            throw ValidationError("--depth and --depth-fraction are mutually exclusive");
        }
        inputs.scenario.logical.measurement_depth.reset();
    }

    inputs.profile.code_cycle_time_s = flags.cc.empty() ? 1e-6 : parse_duration_s(flags.cc);
    if (!flags.rt.empty()) {
        inputs.profile.reaction_time_s = parse_duration_s(flags.rt);
    }
    inputs.profile.physical_error_rate = flags.p;
    inputs.profile.qubit_area_m2 = flags.density;
    inputs.profile.validate();

    inputs.budget = inputs.scenario.budget;
    if (flags.topo_budget) {
        inputs.budget.topological = *flags.topo_budget;
    }
    if (flags.dist_budget) {
        inputs.budget.distillation = *flags.dist_budget;
    }
    inputs.budget.validate();
    return inputs;
}

void emit(const json& doc, const std::string& format, std::ostream& out) {
    if (format == "table") {
        out << format_table(doc);
    } else {
        out << doc.dump(2) << "\n";
    }
}

json envelope(const char* command, const ResolvedInputs& inputs) {
    json doc{{"command", command},
             {"scenario", inputs.scenario.name},
             {"profile", to_json(inputs.profile)}};
    return doc;
}

void attach_estimate(json& doc, const PhysicalEstimate& est, const ResolvedInputs& inputs) {
    doc["estimate"] = to_json(est);
    if (inputs.profile.qubit_area_m2) {
        doc["device_side_m"] = device_side_length_m(
            static_cast<double>(est.total_physical_qubits), *inputs.profile.qubit_area_m2);
    }
}

void write_csv_if_requested(const SweepSeries& series, const std::string& out_path) {
    if (out_path.empty()) {
        return;
    }
    std::ofstream out(out_path);
    if (!out) {
        throw ValidationError(out_path + ": cannot open for writing");
    }
    out << to_csv(series);
}

int dispatch(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App app{"Surface-code resource estimator for fault-tolerant quantum algorithms"};
    app.require_subcommand(1);

    CommonFlags common;
    StrategyFlags strategy_flags;

    // estimate
    auto* estimate_cmd = app.add_subcommand("estimate", "physical qubits and runtime for a fixed configuration");
    add_common(estimate_cmd, common);
    estimate_cmd->add_option("--strategy", strategy_flags.strategy, "beat, gosc, or autoccz")->required();
    estimate_cmd->add_option("--factories", strategy_flags.factories, "AutoCCZ factory count or 'auto'");
    estimate_cmd->add_option("--units", strategy_flags.units, "GoSC unit count or 'auto'");

    // min-qubits
    std::string target_text;
    auto* min_qubits_cmd = app.add_subcommand("min-qubits", "fewest qubits reaching a target runtime");
    add_common(min_qubits_cmd, common);
    min_qubits_cmd->add_option("--strategy", strategy_flags.strategy, "beat, gosc, or autoccz");
    min_qubits_cmd->add_option("--target", target_text, "target runtime (seconds or suffix)")->required();

    // max-speed
    double qubit_budget = 0.0;
    auto* max_speed_cmd = app.add_subcommand("max-speed", "fastest runtime within a qubit budget");
    add_common(max_speed_cmd, common);
    max_speed_cmd->add_option("--strategy", strategy_flags.strategy, "beat, gosc, or autoccz");
    max_speed_cmd->add_option("--qubit-budget", qubit_budget, "available physical qubits")->required();

    // sweep-cc
    std::string cc_min_text, cc_max_text, out_path;
    int points_per_decade = 60;
    bool parallel = false;
    auto* sweep_cc_cmd = app.add_subcommand("sweep-cc", "qubit requirement vs code cycle time");
    add_common(sweep_cc_cmd, common, /*needs_profile=*/false);
    sweep_cc_cmd->add_option("--strategy", strategy_flags.strategy, "beat, gosc, or autoccz");
    sweep_cc_cmd->add_option("--cc-min", cc_min_text, "grid start")->required();
    sweep_cc_cmd->add_option("--cc-max", cc_max_text, "grid end")->required();
    sweep_cc_cmd->add_option("--target", target_text, "target runtime")->required();
    sweep_cc_cmd->add_option("--points-per-decade", points_per_decade, "grid density (default 60)");
    sweep_cc_cmd->add_option("--out", out_path, "write samples as CSV to this path");
    sweep_cc_cmd->add_flag("--parallel", parallel, "evaluate grid points concurrently");

    // sweep-error
    double p_min = 0.0, p_max = 0.0;
    auto* sweep_error_cmd = app.add_subcommand("sweep-error", "qubit requirement vs physical error rate");
    add_common(sweep_error_cmd, common);
    sweep_error_cmd->add_option("--strategy", strategy_flags.strategy, "beat, gosc, or autoccz");
    sweep_error_cmd->add_option("--p-min", p_min, "grid start")->required();
    sweep_error_cmd->add_option("--p-max", p_max, "grid end")->required();
    sweep_error_cmd->add_option("--target", target_text, "target runtime")->required();
    sweep_error_cmd->add_option("--points-per-decade", points_per_decade, "grid density (default 60)");
    sweep_error_cmd->add_option("--out", out_path, "write samples as CSV to this path");
    sweep_error_cmd->add_flag("--parallel", parallel, "evaluate grid points concurrently");

    // optimize-depth
    double opt_n = 0, opt_t_count = 0;
    std::string opt_cc, opt_rt;
    double opt_p = 1e-3;
    std::string opt_format = "json";
    auto* optimize_cmd = app.add_subcommand("optimize-depth",
                                            "measurement depth minimizing qubits for the unit strategy");
    optimize_cmd->add_option("--n", opt_n, "logical qubit count")->required();
    optimize_cmd->add_option("--t-count", opt_t_count, "total T gate count")->required();
    optimize_cmd->add_option("--cc", opt_cc, "code cycle time")->required();
    optimize_cmd->add_option("--rt", opt_rt, "reaction time override");
    optimize_cmd->add_option("--p", opt_p, "base physical error rate")->required();
    optimize_cmd->add_option("--target", target_text, "target runtime")->required();
    optimize_cmd->add_option("--points-per-decade", points_per_decade, "grid density (default 60)");
    optimize_cmd->add_option("--format", opt_format, "output format: json or table")
        ->check(CLI::IsMember({"json", "table"}));

    // calibrate-factory
    std::string factory_type = "autoccz";
    double cal_p = 1e-3, cal_budget = 0.0;
    std::string cal_format = "json";
    auto* calibrate_cmd = app.add_subcommand("calibrate-factory",
                                             "volume-minimizing factory for a per-state budget");
    calibrate_cmd->add_option("--type", factory_type, "autoccz, t, or t-stack")
        ->check(CLI::IsMember({"autoccz", "t", "t-stack"}));
    calibrate_cmd->add_option("--p", cal_p, "base physical error rate")->required();
    calibrate_cmd->add_option("--per-state-budget", cal_budget, "allowed error per magic state")->required();
    calibrate_cmd->add_option("--format", cal_format, "output format: json or table")
        ->check(CLI::IsMember({"json", "table"}));

    // area
    double area_qubits = 0.0, area_density = 0.0;
    std::string area_format = "json";
    auto* area_cmd = app.add_subcommand("area", "device side length for a qubit count");
    area_cmd->add_option("--qubits", area_qubits, "physical qubit count")->required();
    area_cmd->add_option("--density", area_density, "area per physical qubit in m^2")->required();
    area_cmd->add_option("--format", area_format, "output format: json or table")
        ->check(CLI::IsMember({"json", "table"}));

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("ftqc");
    for (const auto& arg : args) {
        argv.push_back(arg.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, out);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const FactoryConstants fc = model_config_from_env();

    if (estimate_cmd->parsed()) {
        const ResolvedInputs inputs = resolve_inputs(common);
        const StrategyConfig strategy = resolve_strategy(strategy_flags);
        const PhysicalEstimate est =
            estimate(inputs.scenario.logical, inputs.profile, strategy, inputs.budget, fc);
        json doc = envelope("estimate", inputs);
        doc["strategy"] = strategy_name(strategy.kind);
        attach_estimate(doc, est, inputs);
        emit(doc, common.format, out);
        return kExitOk;
    }
    if (min_qubits_cmd->parsed()) {
        const ResolvedInputs inputs = resolve_inputs(common);
        const StrategyConfig strategy = resolve_strategy(strategy_flags);
        const double target_s = parse_duration_s(target_text);
        const PhysicalEstimate est = min_qubits_for_runtime(inputs.scenario.logical, inputs.profile,
                                                            target_s, strategy, inputs.budget, fc);
        json doc = envelope("min-qubits", inputs);
        doc["strategy"] = strategy_name(strategy.kind);
        doc["target_s"] = target_s;
        attach_estimate(doc, est, inputs);
        emit(doc, common.format, out);
        return kExitOk;
    }
    if (max_speed_cmd->parsed()) {
        const ResolvedInputs inputs = resolve_inputs(common);
        const StrategyConfig strategy = resolve_strategy(strategy_flags);
        const PhysicalEstimate est = runtime_for_qubit_budget(
            inputs.scenario.logical, inputs.profile,
            static_cast<std::uint64_t>(qubit_budget), strategy, inputs.budget, fc);
        json doc = envelope("max-speed", inputs);
        doc["strategy"] = strategy_name(strategy.kind);
        doc["qubit_budget"] = static_cast<std::uint64_t>(qubit_budget);
        attach_estimate(doc, est, inputs);
        emit(doc, common.format, out);
        return kExitOk;
    }
    if (sweep_cc_cmd->parsed()) {
        const ResolvedInputs inputs = resolve_inputs(common);
        const StrategyConfig strategy = resolve_strategy(strategy_flags);
        const double target_s = parse_duration_s(target_text);
        SweepOptions opts;
        opts.points_per_decade = points_per_decade;
        opts.parallel = parallel;
        const auto grid =
            log_grid(parse_duration_s(cc_min_text), parse_duration_s(cc_max_text), points_per_decade);
        const SweepSeries series = sweep_code_cycle(inputs.scenario.logical, inputs.profile, grid,
                                                    target_s, strategy, inputs.budget, fc, opts);
        write_csv_if_requested(series, out_path);
        json doc = envelope("sweep-cc", inputs);
        doc["strategy"] = strategy_name(strategy.kind);
        doc["target_s"] = target_s;
        doc["series"] = to_json(series);
        emit(doc, common.format, out);
        return kExitOk;
    }
    if (sweep_error_cmd->parsed()) {
        const ResolvedInputs inputs = resolve_inputs(common);
        const StrategyConfig strategy = resolve_strategy(strategy_flags);
        const double target_s = parse_duration_s(target_text);
        SweepOptions opts;
        opts.points_per_decade = points_per_decade;
        opts.parallel = parallel;
        const auto grid = log_grid(p_min, p_max, points_per_decade);
        const SweepSeries series = sweep_physical_error(inputs.scenario.logical, inputs.profile,
                                                        grid, target_s, strategy, inputs.budget, fc,
                                                        opts);
        write_csv_if_requested(series, out_path);
        json doc = envelope("sweep-error", inputs);
        doc["strategy"] = strategy_name(strategy.kind);
        doc["target_s"] = target_s;
        doc["series"] = to_json(series);
        emit(doc, common.format, out);
        return kExitOk;
    }
    if (optimize_cmd->parsed()) {
        HardwareProfile hw;
        hw.code_cycle_time_s = parse_duration_s(opt_cc);
        if (!opt_rt.empty()) {
            hw.reaction_time_s = parse_duration_s(opt_rt);
        }
        hw.physical_error_rate = opt_p;
        hw.validate();
        const double target_s = parse_duration_s(target_text);
        if (!(opt_n >= 1.0) || !(opt_t_count >= 1.0)) {
            throw ValidationError("--n and --t-count must be at least 1");
        }
        SweepOptions opts;
        opts.points_per_decade = points_per_decade;
        const TLayerOptimum optimum =
            optimal_t_layer(static_cast<std::uint64_t>(opt_n),
                            static_cast<std::uint64_t>(opt_t_count), hw, target_s, {}, fc, opts);
        json doc{{"command", "optimize-depth"},
                 {"profile", to_json(hw)},
                 {"target_s", target_s},
                 {"optimal_t_layer", optimum.t_layer},
                 {"optimal_depth_ratio",
                  optimum.t_layer > 0.0
                      ? static_cast<double>(optimum.estimate.measurement_depth) / opt_t_count
                      : 0.0},
                 {"phase", phase_name(optimum.phase)},
                 {"estimate", to_json(optimum.estimate)}};
        emit(doc, opt_format, out);
        return kExitOk;
    }
    if (calibrate_cmd->parsed()) {
        json doc{{"command", "calibrate-factory"},
                 {"type", factory_type},
                 {"physical_error_rate", cal_p},
                 {"per_state_budget", cal_budget}};
        if (factory_type == "autoccz") {
            doc["design"] = to_json(calibrate_autoccz(cal_p, cal_budget, fc));
        } else if (factory_type == "t") {
            doc["design"] = to_json(calibrate_t_factory(cal_p, cal_budget, fc));
        } else {
            doc["design"] = to_json(calibrate_t_factory_stack(cal_p, cal_budget, fc));
        }
        emit(doc, cal_format, out);
        return kExitOk;
    }
    if (area_cmd->parsed()) {
        const double side = device_side_length_m(area_qubits, area_density);
        json doc{{"command", "area"},
                 {"qubits", area_qubits},
                 {"area_per_qubit_m2", area_density},
                 {"side_m", side},
                 {"area_m2", side * side}};
        emit(doc, area_format, out);
        return kExitOk;
    }
    return kExitUsage;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out);
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InfeasibleError& e) {
        err << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    }
}

}  // namespace ftqc
