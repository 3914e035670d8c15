#pragma once

#include <cstdint>
#include <optional>

#include "ftqc/core_model.hpp"
#include "ftqc/factories.hpp"
#include "ftqc/logical_spec.hpp"

namespace ftqc {

/// What limits the computation rate: magic-state consumption by the data
/// block (beat), magic-state production by the factories (tick), or the
/// one-reaction-time-per-layer floor (reaction).
enum class LimitingRegime { Beat, Tick, Reaction };

enum class StrategyKind { BeatLimited, GoscUnits, AutoCcz };

struct StrategyConfig {
    StrategyKind kind = StrategyKind::AutoCcz;
    /// Factory count (AutoCCZ) or unit count (GoSC). Empty means "auto":
    /// time-optimal for direct estimates, searched for the inverse solvers.
    std::optional<std::uint64_t> count;
};

struct GoscUnitGeometry {
    std::uint64_t unit_tiles = 0;
    std::uint64_t unit_time_beats = 0;
    std::uint64_t factories_per_unit = 0;
};

struct PhysicalEstimate {
    StrategyKind strategy = StrategyKind::AutoCcz;
    std::uint64_t total_physical_qubits = 0;
    double runtime_s = 0.0;
    double total_cycles = 0.0;
    CodeDistance data_distance{3};
    std::uint64_t data_tiles = 0;
    std::optional<TFactoryDesign> t_factory;
    std::optional<AutoCCZDesign> autoccz_factory;
    std::uint64_t factory_count = 0;
    std::uint64_t unit_count = 1;
    std::optional<GoscUnitGeometry> unit_geometry;
    LimitingRegime limiting_regime = LimitingRegime::Tick;
    FailureAccount failure;
    std::uint64_t measurement_depth = 1;
    double t_per_layer = 0.0;
    double time_optimal_floor_s = 0.0;
    /// Factory count (AutoCCZ) or unit count (GoSC) at the time-optimal limit.
    std::uint64_t max_parallelism = 0;
    int calibration_iterations = 0;
};

/// Fast-data-block size: 2n + ceil(sqrt(8n)) + 1 tiles.
std::uint64_t beat_limited_data_tiles(std::uint64_t logical_qubits);

/// Unit footprint: 4n + 4 ceil(sqrt(n)) + 1 data tiles plus 2 ceil(T_layer)
/// storage tiles.
std::uint64_t gosc_unit_tiles(std::uint64_t logical_qubits, double t_layer);

/// Time for one unit to process a measurement layer: ceil(T_layer + sqrt(n) + 3) beats.
std::uint64_t gosc_unit_time_beats(std::uint64_t logical_qubits, double t_layer);

/// The floor no strategy can beat: one reaction time per measurement layer.
double time_optimal_runtime(const LogicalRequirements& spec, const HardwareProfile& hw);

/// Single fast data block consuming one T state per beat, with enough
/// factories to match that rate.
PhysicalEstimate estimate_beat_limited(const LogicalRequirements& spec,
                                       const HardwareProfile& hw,
                                       const ErrorBudget& budget = {},
                                       const FactoryConstants& fc = {});

/// Unit parallelization: `units` copies of the data block pipeline the
/// measurement layers. Empty unit count selects the time-optimal maximum.
PhysicalEstimate estimate_gosc_units(const LogicalRequirements& spec,
                                     const HardwareProfile& hw,
                                     std::optional<std::uint64_t> units,
                                     const ErrorBudget& budget = {},
                                     const FactoryConstants& fc = {});

/// Single data block fed by `factories` AutoCCZ factories; all Toffoli gates
/// in a layer can run in parallel. Empty count selects the time-optimal
/// maximum.
PhysicalEstimate estimate_autoccz(const LogicalRequirements& spec,
                                  const HardwareProfile& hw,
                                  std::optional<std::uint64_t> factories,
                                  const ErrorBudget& budget = {},
                                  const FactoryConstants& fc = {});

PhysicalEstimate estimate(const LogicalRequirements& spec, const HardwareProfile& hw,
                          const StrategyConfig& strategy, const ErrorBudget& budget = {},
                          const FactoryConstants& fc = {});

/// Smallest factory/unit count whose runtime meets the target; the result is
/// verified minimal (count - 1 misses the target).
PhysicalEstimate min_qubits_for_runtime(const LogicalRequirements& spec,
                                        const HardwareProfile& hw, double target_runtime_s,
                                        const StrategyConfig& strategy,
                                        const ErrorBudget& budget = {},
                                        const FactoryConstants& fc = {});

/// Largest parallelization fitting in the qubit budget; minimal runtime under
/// that constraint.
PhysicalEstimate runtime_for_qubit_budget(const LogicalRequirements& spec,
                                          const HardwareProfile& hw,
                                          std::uint64_t qubit_budget,
                                          const StrategyConfig& strategy,
                                          const ErrorBudget& budget = {},
                                          const FactoryConstants& fc = {});

}  // namespace ftqc
