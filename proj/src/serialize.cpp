#include "ftqc/serialize.hpp"

#include <charconv>
#include <sstream>

namespace ftqc {

namespace {

using nlohmann::json;

// Shortest representation that round-trips, matching the JSON emitter.
std::string format_double(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    (void)ec;
    return std::string(buf, end);
}

void flatten(const json& node, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& rows) {
    if (node.is_object()) {
        for (const auto& [key, value] : node.items()) {
            flatten(value, prefix.empty() ? key : prefix + "." + key, rows);
        }
    } else if (node.is_array()) {
        std::size_t i = 0;
        for (const auto& value : node) {
            flatten(value, prefix + "[" + std::to_string(i++) + "]", rows);
        }
    } else if (node.is_string()) {
        rows.emplace_back(prefix, node.get<std::string>());
    } else {
        rows.emplace_back(prefix, node.dump());
    }
}

}  // namespace

std::string strategy_name(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::BeatLimited:
            return "beat_limited";
        case StrategyKind::GoscUnits:
            return "gosc_units";
        case StrategyKind::AutoCcz:
            return "autoccz";
    }
    return "unknown";
}

std::string regime_name(LimitingRegime regime) {
    switch (regime) {
        case LimitingRegime::Beat:
            return "beat";
        case LimitingRegime::Tick:
            return "tick";
        case LimitingRegime::Reaction:
            return "reaction";
    }
    return "unknown";
}

std::string termination_name(SweepTermination termination) {
    switch (termination) {
        case SweepTermination::GridExhausted:
            return "grid_exhausted";
        case SweepTermination::TimeOptimalLimit:
            return "time_optimal_limit";
        case SweepTermination::CalibrationInfeasible:
            return "calibration_infeasible";
    }
    return "unknown";
}

std::string phase_name(TLayerPhase phase) {
    switch (phase) {
        case TLayerPhase::NoParallelization:
            return "no_parallelization";
        case TLayerPhase::Oscillating:
            return "oscillating";
        case TLayerPhase::Equilibrium:
            return "equilibrium";
        case TLayerPhase::Saturated:
            return "saturated";
    }
    return "unknown";
}

json to_json(const FailureAccount& failure) {
    return {{"topological_error", failure.topological_error},
            {"distillation_error", failure.distillation_error},
            {"total", failure.total}};
}

json to_json(const TFactoryDesign& design) {
    return {{"distance", design.distance.value()},
            {"levels", design.levels},
            {"footprint_tiles", design.footprint_tiles},
            {"footprint_physical_qubits", design.footprint_physical_qubits},
            {"duration_cycles", design.duration_cycles},
            {"output_error", design.output_error}};
}

json to_json(const AutoCCZDesign& design) {
    return {{"d1", design.d1.value()},
            {"d2", design.d2.value()},
            {"footprint_physical_qubits", design.footprint_physical_qubits},
            {"duration_cycles", design.duration_cycles},
            {"output_error", design.output_error}};
}

json to_json(const GoscUnitGeometry& geometry) {
    return {{"unit_tiles", geometry.unit_tiles},
            {"unit_time_beats", geometry.unit_time_beats},
            {"factories_per_unit", geometry.factories_per_unit}};
}

json to_json(const HardwareProfile& hw) {
    json doc{{"code_cycle_time_s", hw.code_cycle_time_s},
             {"reaction_time_s", hw.reaction_time()},
             {"physical_error_rate", hw.physical_error_rate}};
    if (hw.qubit_area_m2) {
        doc["qubit_area_m2"] = *hw.qubit_area_m2;
    }
    if (hw.max_physical_qubits) {
        doc["max_physical_qubits"] = *hw.max_physical_qubits;
    }
    return doc;
}

json to_json(const PhysicalEstimate& estimate) {
    json doc{{"strategy", strategy_name(estimate.strategy)},
             {"total_physical_qubits", estimate.total_physical_qubits},
             {"runtime_s", estimate.runtime_s},
             {"total_cycles", estimate.total_cycles},
             {"data_distance", estimate.data_distance.value()},
             {"data_tiles", estimate.data_tiles},
             {"factory_count", estimate.factory_count},
             {"unit_count", estimate.unit_count},
             {"limiting_regime", regime_name(estimate.limiting_regime)},
             {"failure", to_json(estimate.failure)},
             {"measurement_depth", estimate.measurement_depth},
             {"t_per_layer", estimate.t_per_layer},
             {"time_optimal_floor_s", estimate.time_optimal_floor_s},
             {"max_parallelism", estimate.max_parallelism},
             {"calibration_iterations", estimate.calibration_iterations}};
    if (estimate.t_factory) {
        doc["t_factory"] = to_json(*estimate.t_factory);
    }
    if (estimate.autoccz_factory) {
        doc["autoccz_factory"] = to_json(*estimate.autoccz_factory);
    }
    if (estimate.unit_geometry) {
        doc["unit_geometry"] = to_json(*estimate.unit_geometry);
    }
    return doc;
}

json to_json(const SweepSeries& series) {
    json samples = json::array();
    for (const auto& sample : series.samples) {
        samples.push_back({{"x", sample.x}, {"estimate", to_json(sample.estimate)}});
    }
    json doc{{"axis_name", series.axis_name},
             {"samples", samples},
             {"termination", termination_name(series.termination)}};
    if (series.termination_x) {
        doc["termination_x"] = *series.termination_x;
    }
    return doc;
}

json to_json(const PowerLawFit& fit) {
    return {{"coefficient", fit.coefficient}, {"exponent", fit.exponent}, {"residual", fit.residual}};
}

std::string format_table(const json& doc) {
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(doc, "", rows);
    std::size_t width = 0;
    for (const auto& [key, value] : rows) {
        width = std::max(width, key.size());
    }
    std::ostringstream out;
    for (const auto& [key, value] : rows) {
        out << key;
        out << std::string(width - key.size() + 2, ' ');
        out << value << "\n";
    }
    return out.str();
}

std::string to_csv(const SweepSeries& series) {
    std::ostringstream out;
    out << "x,total_physical_qubits,runtime_s,data_distance,factory_count,unit_count,regime,"
           "topo_error,dist_error\n";
    for (const auto& sample : series.samples) {
        const PhysicalEstimate& e = sample.estimate;
        out << format_double(sample.x) << "," << e.total_physical_qubits << ","
            << format_double(e.runtime_s) << "," << e.data_distance.value() << ","
            << e.factory_count << "," << e.unit_count << "," << regime_name(e.limiting_regime)
            << "," << format_double(e.failure.topological_error) << ","
            << format_double(e.failure.distillation_error) << "\n";
    }
    return out.str();
}

}  // namespace ftqc
