#include "ftqc/factories.hpp"

#include <cmath>
#include <sstream>

namespace ftqc {

namespace {

// Stage count of a 15-to-1 cascade: each stage feeds 15 outputs into the
// next, so a k-level pipeline contains 1 + 15 + ... + 15^(k-1) blocks.
std::uint64_t cascade_blocks(int levels) {
    std::uint64_t blocks = 0;
    std::uint64_t layer = 1;
    for (int i = 0; i < levels; ++i) {
        blocks += layer;
        layer *= 15;
    }
    return blocks;
}

}  // namespace

void FactoryConstants::validate() const {
    if (grid_d_min < 3 || grid_d_min % 2 == 0 || grid_d_max < grid_d_min) {
        throw ValidationError("factory distance grid must span odd distances >= 3");
    }
    if (!(footprint_multiplier > 0.0)) {
        throw ValidationError("footprint multiplier must be positive");
    }
    if (!(autoccz_footprint_tiles > 0.0) || !(autoccz_duration_per_d2 > 0.0) ||
        !(autoccz_level1_tiles > 0.0) || !(autoccz_level1_duration_per_d1 > 0.0) ||
        !(t_factory_tiles > 0.0) || !(t_factory_duration_per_d > 0.0)) {
        throw ValidationError("factory geometry constants must be positive");
    }
    if (t_factory_max_levels < 1) {
        throw ValidationError("the T factory needs at least one distillation level");
    }
    if (!(t_distillation_coeff > 0.0) || !(ccz_combine_coeff > 0.0)) {
        throw ValidationError("distillation coefficients must be positive");
    }
}

double DistillationBudget::per_state() const {
    return per_state_budget(total_budget, state_count);
}

double per_state_budget(double total_budget, double state_count) {
    if (!(total_budget > 0.0)) {
        throw ValidationError("distillation budget must be positive");
    }
    if (!(state_count >= 1.0)) {
        throw ValidationError("magic state count must be at least 1");
    }
    return total_budget / state_count;
}

std::uint64_t autoccz_duration_cycles(CodeDistance d2, const FactoryConstants& fc) {
    return static_cast<std::uint64_t>(std::llround(fc.autoccz_duration_per_d2 * d2));
}

std::uint64_t autoccz_footprint_physical(CodeDistance d2, const FactoryConstants& fc) {
    const double tiles = fc.autoccz_footprint_tiles;
    const double qubits = fc.footprint_multiplier * tiles * 2.0 * d2 * d2;
    return static_cast<std::uint64_t>(std::llround(qubits));
}

double autoccz_output_error(double p, CodeDistance d1, CodeDistance d2,
                            const FactoryConstants& fc) {
    const double level1_volume = fc.autoccz_level1_tiles * fc.autoccz_level1_duration_per_d1 * d1;
    const double e1 = fc.t_distillation_coeff * p * p * p +
                      level1_volume * logical_error_rate(p, d1);
    const double level2_volume =
        fc.autoccz_footprint_tiles * static_cast<double>(autoccz_duration_cycles(d2, fc));
    return fc.ccz_combine_coeff * e1 * e1 + level2_volume * logical_error_rate(p, d2);
}

AutoCCZDesign calibrate_autoccz(double p, double per_state_budget_value,
                                const FactoryConstants& fc) {
    fc.validate();
    if (!(per_state_budget_value > 0.0)) {
        throw ValidationError("per-state budget must be positive");
    }

    bool found = false;
    double best_volume = 0.0;
    int best_d1 = 0;
    int best_d2 = 0;
    for (int d2 = fc.grid_d_min; d2 <= fc.grid_d_max; d2 += 2) {
        const CodeDistance cd2{d2};
        const double volume = static_cast<double>(autoccz_footprint_physical(cd2, fc)) *
                              static_cast<double>(autoccz_duration_cycles(cd2, fc));
        for (int d1 = fc.grid_d_min; d1 <= fc.grid_d_max; d1 += 2) {
            if (autoccz_output_error(p, CodeDistance{d1}, cd2, fc) > per_state_budget_value) {
                continue;
            }
            // Tie order: volume, then d2, then d1. The ascending scan makes the
            // first strict improvement the winner.
            if (!found || volume < best_volume ||
                (volume == best_volume && (d2 < best_d2 || (d2 == best_d2 && d1 < best_d1)))) {
                found = true;
                best_volume = volume;
                best_d1 = d1;
                best_d2 = d2;
            }
        }
    }
    if (!found) {
        std::ostringstream msg;
        msg << "no AutoCCZ distance pair in the grid [" << fc.grid_d_min << ", " << fc.grid_d_max
            << "] reaches a per-state error of " << per_state_budget_value << " at p = " << p;
        throw CalibrationInfeasible(msg.str());
    }

    AutoCCZDesign design;
    design.d1 = CodeDistance{best_d1};
    design.d2 = CodeDistance{best_d2};
    design.duration_cycles = autoccz_duration_cycles(design.d2, fc);
    design.footprint_physical_qubits = autoccz_footprint_physical(design.d2, fc);
    design.output_error = autoccz_output_error(p, design.d1, design.d2, fc);
    return design;
}

double t_factory_error(double p, CodeDistance d_f, const FactoryConstants& fc) {
    return t_factory_error_staged(p, d_f, 1, fc);
}

double t_factory_error_staged(double p, CodeDistance d_f, int levels, const FactoryConstants& fc) {
    if (levels < 1) {
        throw ValidationError("a T factory needs at least one distillation level");
    }
    const double stage_volume = fc.t_factory_tiles * fc.t_factory_duration_per_d * d_f;
    const double topological = stage_volume * logical_error_rate(p, d_f);
    double error = p;
    for (int level = 0; level < levels; ++level) {
        error = fc.t_distillation_coeff * error * error * error + topological;
    }
    return error;
}

namespace {

TFactoryDesign make_t_factory(double p, CodeDistance d_f, int levels, const FactoryConstants& fc) {
    TFactoryDesign design;
    design.distance = d_f;
    design.levels = levels;
    design.footprint_tiles =
        static_cast<std::uint64_t>(std::llround(fc.t_factory_tiles)) * cascade_blocks(levels);
    design.footprint_physical_qubits = static_cast<std::uint64_t>(std::llround(
        fc.footprint_multiplier * static_cast<double>(design.footprint_tiles) * 2.0 * d_f * d_f));
    design.duration_cycles =
        static_cast<std::uint64_t>(std::llround(fc.t_factory_duration_per_d * d_f));
    design.output_error = t_factory_error_staged(p, d_f, levels, fc);
    return design;
}

TFactoryDesign calibrate_t_levels(double p, double budget, int max_levels,
                                  const FactoryConstants& fc) {
    fc.validate();
    if (!(budget > 0.0)) {
        throw ValidationError("per-state budget must be positive");
    }

    bool found = false;
    TFactoryDesign best;
    double best_volume = 0.0;
    for (int levels = 1; levels <= max_levels; ++levels) {
        for (int d = fc.grid_d_min; d <= fc.grid_d_max; d += 2) {
            const CodeDistance cd{d};
            if (t_factory_error_staged(p, cd, levels, fc) > budget) {
                continue;
            }
            TFactoryDesign candidate = make_t_factory(p, cd, levels, fc);
            const double volume = static_cast<double>(candidate.footprint_physical_qubits) *
                                  static_cast<double>(candidate.duration_cycles);
            if (!found || volume < best_volume) {
                found = true;
                best = candidate;
                best_volume = volume;
            }
        }
    }
    if (!found) {
        std::ostringstream msg;
        msg << "no T factory with up to " << max_levels << " level(s) and distance <= "
            << fc.grid_d_max << " reaches a per-state error of " << budget << " at p = " << p;
        throw CalibrationInfeasible(msg.str());
    }
    return best;
}

}  // namespace

TFactoryDesign calibrate_t_factory(double p, double per_state_budget_value,
                                   const FactoryConstants& fc) {
    return calibrate_t_levels(p, per_state_budget_value, 1, fc);
}

TFactoryDesign calibrate_t_factory_stack(double p, double per_state_budget_value,
                                         const FactoryConstants& fc) {
    return calibrate_t_levels(p, per_state_budget_value, fc.t_factory_max_levels, fc);
}

double routing_factor(std::uint64_t n_factories, std::uint64_t n_factories_at_time_optimal) {
    if (n_factories < 1 || n_factories > n_factories_at_time_optimal) {
        std::ostringstream msg;
        msg << "factory count " << n_factories << " outside [1, "
            << n_factories_at_time_optimal << "]";
        throw ValidationError(msg.str());
    }
    const double span = static_cast<double>(std::max<std::uint64_t>(1, n_factories_at_time_optimal - 1));
    return 1.01 + 0.49 * static_cast<double>(n_factories - 1) / span;
}

}  // namespace ftqc
