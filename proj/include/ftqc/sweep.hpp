#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ftqc/strategies.hpp"

namespace ftqc {

enum class SweepTermination { GridExhausted, TimeOptimalLimit, CalibrationInfeasible };

struct SweepSample {
    double x = 0.0;
    PhysicalEstimate estimate;
};

struct SweepSeries {
    std::string axis_name;
    std::vector<SweepSample> samples;
    SweepTermination termination = SweepTermination::GridExhausted;
    /// Grid point at which the sweep ended early, when it did.
    std::optional<double> termination_x;
};

struct SweepOptions {
    int points_per_decade = 60;
    bool parallel = false;
    /// Unit count at the optimum above which the T-layer study counts as
    /// settled into its equilibrium phase.
    std::uint64_t equilibrium_min_units = 15;
};

struct PowerLawFit {
    double coefficient = 0.0;
    double exponent = 0.0;
    /// RMS residual of the underlying log-log least squares.
    double residual = 0.0;
};

enum class TLayerPhase { NoParallelization, Oscillating, Equilibrium, Saturated };

struct TLayerOptimum {
    /// Optimal T gates per layer; 0 when no parallelization is needed.
    double t_layer = 0.0;
    PhysicalEstimate estimate;
    TLayerPhase phase = TLayerPhase::Equilibrium;
};

/// Qubit requirement per code cycle time, holding the target runtime fixed.
/// The series ends early with TimeOptimalLimit once the reaction floor
/// exceeds the target. A profile without an explicit reaction time re-derives
/// it at every grid point.
SweepSeries sweep_code_cycle(const LogicalRequirements& spec, const HardwareProfile& profile_template,
                             const std::vector<double>& cc_grid_s, double target_runtime_s,
                             const StrategyConfig& strategy, const ErrorBudget& budget = {},
                             const FactoryConstants& fc = {}, const SweepOptions& opts = {});

/// Qubit requirement per base physical error rate. Ends early with
/// CalibrationInfeasible once the factory can no longer reach the
/// distillation budget.
SweepSeries sweep_physical_error(const LogicalRequirements& spec, const HardwareProfile& profile_template,
                                 const std::vector<double>& p_grid, double target_runtime_s,
                                 const StrategyConfig& strategy, const ErrorBudget& budget = {},
                                 const FactoryConstants& fc = {}, const SweepOptions& opts = {});

/// Scans T_layer over a log grid (depth = t_count / T_layer) and returns the
/// unit-parallelized configuration minimizing qubits under the runtime
/// target, with the behavioural phase it sits in.
TLayerOptimum optimal_t_layer(std::uint64_t logical_qubits, std::uint64_t t_count,
                              const HardwareProfile& hw, double target_runtime_s,
                              const ErrorBudget& budget = {}, const FactoryConstants& fc = {},
                              const SweepOptions& opts = {});

/// Least squares on (log N, log T_layer); needs at least 3 positive points.
PowerLawFit equilibrium_fit(const std::vector<std::pair<double, double>>& points);

}  // namespace ftqc
