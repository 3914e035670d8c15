#pragma once

#include <string>

#include <json.hpp>

#include "ftqc/strategies.hpp"
#include "ftqc/sweep.hpp"

namespace ftqc {

std::string strategy_name(StrategyKind kind);
std::string regime_name(LimitingRegime regime);
std::string termination_name(SweepTermination termination);
std::string phase_name(TLayerPhase phase);

nlohmann::json to_json(const FailureAccount& failure);
nlohmann::json to_json(const TFactoryDesign& design);
nlohmann::json to_json(const AutoCCZDesign& design);
nlohmann::json to_json(const GoscUnitGeometry& geometry);
nlohmann::json to_json(const HardwareProfile& hw);
nlohmann::json to_json(const PhysicalEstimate& estimate);
nlohmann::json to_json(const SweepSeries& series);
nlohmann::json to_json(const PowerLawFit& fit);

/// Flattens a JSON document into an aligned two-column table. Every value in
/// the JSON appears in the table and vice versa.
std::string format_table(const nlohmann::json& doc);

/// CSV with columns: x, total_physical_qubits, runtime_s, data_distance,
/// factory_count, unit_count, regime, topo_error, dist_error.
std::string to_csv(const SweepSeries& series);

}  // namespace ftqc
