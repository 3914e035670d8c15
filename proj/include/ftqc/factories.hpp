#pragma once

#include <cstdint>

#include "ftqc/core_model.hpp"

namespace ftqc {

/// Geometry and error-model constants for the factory designs. The defaults
/// reproduce the headline anchors of the published estimates; every value can
/// be overridden through a model-config file (see scenario.hpp).
struct FactoryConstants {
    int grid_d_min = 3;
    int grid_d_max = 49;

    /// Single global knob scaling factory footprints (qubits only, never
    /// durations or error rates).
    double footprint_multiplier = 1.0;

    // AutoCCZ factory: two distillation levels, footprint quoted at the
    // level-2 distance.
    double autoccz_footprint_tiles = 120.0;
    double autoccz_duration_per_d2 = 5.5;
    double autoccz_level1_tiles = 11.0;
    double autoccz_level1_duration_per_d1 = 11.0;

    // 15-to-1 T factory block.
    double t_factory_tiles = 11.0;
    double t_factory_duration_per_d = 11.0;
    int t_factory_max_levels = 3;

    /// Leading term of one 15-to-1 round: 35 e_in^3.
    double t_distillation_coeff = 35.0;
    /// Second-order pair term of the CCZ stage: 28 e1^2. Together with the
    /// T coefficient this gives the 34300 p^6 asymptote (28 * 35^2 = 34300).
    double ccz_combine_coeff = 28.0;

    void validate() const;
};

/// A calibrated T factory: one or more cascaded 15-to-1 stages at a common
/// distance. Stages beyond the first each consume 15 outputs of the previous
/// stage, so the footprint grows geometrically while the output rate is
/// pipelined at one state per stage duration.
struct TFactoryDesign {
    CodeDistance distance{3};
    int levels = 1;
    std::uint64_t footprint_tiles = 0;
    std::uint64_t footprint_physical_qubits = 0;
    std::uint64_t duration_cycles = 1;
    double output_error = 0.0;
};

/// A calibrated AutoCCZ factory, characterized by its two code distances.
struct AutoCCZDesign {
    CodeDistance d1{3};
    CodeDistance d2{3};
    std::uint64_t footprint_physical_qubits = 0;
    std::uint64_t duration_cycles = 1;
    double output_error = 0.0;
};

/// Total distillation budget spread uniformly over the required states.
struct DistillationBudget {
    double total_budget = 0.05;
    double state_count = 1.0;
    double per_state() const;
};

double per_state_budget(double total_budget, double state_count);

std::uint64_t autoccz_duration_cycles(CodeDistance d2, const FactoryConstants& fc = {});
std::uint64_t autoccz_footprint_physical(CodeDistance d2, const FactoryConstants& fc = {});

/// Output error per CCZ state for the two-level model:
///   e1 = 35 p^3 + V1(d1) p_L(p, d1)
///   out = 28 e1^2 + V2(d2) p_L(p, d2)
/// with V1, V2 the tile*cycle volumes of each stage. With unconstrained
/// distances this converges to 34300 p^6.
double autoccz_output_error(double p, CodeDistance d1, CodeDistance d2,
                            const FactoryConstants& fc = {});

/// Exhaustive scan over the odd-distance grid; among the pairs meeting the
/// per-state budget, returns the one minimizing footprint * duration. Ties
/// break toward smaller d2, then smaller d1.
AutoCCZDesign calibrate_autoccz(double p, double per_state_budget_value,
                                const FactoryConstants& fc = {});

/// Single 15-to-1 stage: 35 p^3 + V(d_f) p_L(p, d_f).
double t_factory_error(double p, CodeDistance d_f, const FactoryConstants& fc = {});

/// Error after `levels` cascaded 15-to-1 stages at a common distance.
double t_factory_error_staged(double p, CodeDistance d_f, int levels,
                              const FactoryConstants& fc = {});

/// Volume-minimizing single-level design meeting the per-state budget.
/// Infeasible whenever the budget is below the 35 p^3 floor.
TFactoryDesign calibrate_t_factory(double p, double per_state_budget_value,
                                   const FactoryConstants& fc = {});

/// Like calibrate_t_factory but allowed to cascade stages (up to
/// t_factory_max_levels) when one stage cannot reach the budget.
TFactoryDesign calibrate_t_factory_stack(double p, double per_state_budget_value,
                                         const FactoryConstants& fc = {});

/// Qubit overhead reserved for routing states between factories and the data
/// block: 1.01 for one factory, growing linearly to 1.5 at the time-optimal
/// factory count.
double routing_factor(std::uint64_t n_factories, std::uint64_t n_factories_at_time_optimal);

}  // namespace ftqc
