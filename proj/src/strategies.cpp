#include "ftqc/strategies.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "ftqc/util.hpp"

namespace ftqc {

namespace {

constexpr int kFixedPointMaxIterations = 12;
constexpr int kFixedPointInitialDistance = 25;

struct DataCalibration {
    CodeDistance distance{3};
    double tiles = 0.0;
    double cycles = 0.0;
    int iterations = 0;
};

// Runtime and distance are mutually dependent: the distance is set by the
// total tile*cycle volume, and for some strategies the cycle count grows with
// the distance. Iterate until the calibrated distance reproduces itself.
// The map is monotone in d, so the iteration settles in a handful of steps.
DataCalibration calibrate_data_distance(
    const std::function<std::pair<double, double>(CodeDistance)>& tiles_and_cycles, double p,
    double topological_budget, int d_max = kDefaultMaxDataDistance) {
    int d = std::min(kFixedPointInitialDistance, d_max);
    for (int iteration = 1; iteration <= kFixedPointMaxIterations; ++iteration) {
        const CodeDistance current{d};
        const auto [tiles, cycles] = tiles_and_cycles(current);
        const CodeDistance next = calibrate_code_distance(tiles, cycles, p, topological_budget, d_max);
        if (next.value() == d) {
            return {next, tiles, cycles, iteration};
        }
        d = next.value();
    }
    std::ostringstream msg;
    msg << "data-distance calibration did not settle within " << kFixedPointMaxIterations
        << " iterations";
    throw FixedPointDivergence(msg.str());
}

FailureAccount recompute_failure(double p, CodeDistance d, double tiles, double cycles,
                                 double states, double per_state_error) {
    const double topological = tiles * cycles * logical_error_rate(p, d);
    const double distillation = states * per_state_error;
    return failure_account(std::min(1.0, topological), std::min(1.0, distillation));
}

}  // namespace

std::uint64_t beat_limited_data_tiles(std::uint64_t logical_qubits) {
    const double n = static_cast<double>(logical_qubits);
    return 2 * logical_qubits + static_cast<std::uint64_t>(std::ceil(std::sqrt(8.0 * n))) + 1;
}

std::uint64_t gosc_unit_tiles(std::uint64_t logical_qubits, double t_layer) {
    const double n = static_cast<double>(logical_qubits);
    const auto sqrt_tiles = static_cast<std::uint64_t>(std::ceil(std::sqrt(n)));
    const auto storage = 2 * static_cast<std::uint64_t>(std::ceil(t_layer));
    return 4 * logical_qubits + 4 * sqrt_tiles + 1 + storage;
}

std::uint64_t gosc_unit_time_beats(std::uint64_t logical_qubits, double t_layer) {
    const double n = static_cast<double>(logical_qubits);
    return static_cast<std::uint64_t>(std::ceil(t_layer + std::sqrt(n) + 3.0));
}

double time_optimal_runtime(const LogicalRequirements& spec, const HardwareProfile& hw) {
    spec.validate();
    hw.validate();
    return static_cast<double>(resolved_measurement_depth(spec)) * hw.reaction_time();
}

PhysicalEstimate estimate_beat_limited(const LogicalRequirements& spec, const HardwareProfile& hw,
                                       const ErrorBudget& budget, const FactoryConstants& fc) {
    spec.validate();
    hw.validate();
    budget.validate();

    const double p = hw.physical_error_rate;
    const double cc = hw.code_cycle_time_s;
    const std::uint64_t t_eff = effective_count(spec, GateCurrency::TGate);
    const std::uint64_t depth = resolved_measurement_depth(spec);
    const double floor_s = static_cast<double>(depth) * hw.reaction_time();

    const TFactoryDesign factory =
        calibrate_t_factory_stack(p, per_state_budget(budget.distillation, static_cast<double>(t_eff)), fc);

    const std::uint64_t data_tiles = beat_limited_data_tiles(spec.logical_qubits);
    const auto calibration = calibrate_data_distance(
        [&](CodeDistance d) {
            // One T state per beat: the consumption-limited runtime is
            // T_count beats of d cycles each.
            const double beat_runtime = static_cast<double>(t_eff) * d * cc;
            const double runtime = std::max(beat_runtime, floor_s);
            return std::pair<double, double>{static_cast<double>(data_tiles), runtime / cc};
        },
        p, budget.topological);

    const CodeDistance d = calibration.distance;
    const double beat_runtime = static_cast<double>(t_eff) * d * cc;
    const double runtime = std::max(beat_runtime, floor_s);
    const std::uint64_t factories = static_cast<std::uint64_t>(
        std::ceil(static_cast<double>(factory.duration_cycles) / static_cast<double>(d.value())));

    PhysicalEstimate est;
    est.strategy = StrategyKind::BeatLimited;
    est.data_distance = d;
    est.data_tiles = data_tiles;
    est.t_factory = factory;
    est.factory_count = factories;
    est.unit_count = 1;
    est.runtime_s = runtime;
    est.total_cycles = calibration.cycles;
    est.total_physical_qubits = data_tiles * physical_qubits_per_tile(d) +
                                factories * factory.footprint_physical_qubits;
    est.limiting_regime =
        beat_runtime >= floor_s ? LimitingRegime::Beat : LimitingRegime::Reaction;
    est.failure = recompute_failure(p, d, static_cast<double>(data_tiles), calibration.cycles,
                                    static_cast<double>(t_eff), factory.output_error);
    est.measurement_depth = depth;
    est.t_per_layer = t_per_layer(spec, GateCurrency::TGate);
    est.time_optimal_floor_s = floor_s;
    est.max_parallelism = factories;
    est.calibration_iterations = calibration.iterations;
    return est;
}

PhysicalEstimate estimate_gosc_units(const LogicalRequirements& spec, const HardwareProfile& hw,
                                     std::optional<std::uint64_t> units, const ErrorBudget& budget,
                                     const FactoryConstants& fc) {
    spec.validate();
    hw.validate();
    budget.validate();

    const double p = hw.physical_error_rate;
    const double cc = hw.code_cycle_time_s;
    const double rt = hw.reaction_time();
    const std::uint64_t t_eff = effective_count(spec, GateCurrency::TGate);
    const std::uint64_t depth = resolved_measurement_depth(spec);
    const double layer = t_per_layer(spec, GateCurrency::TGate);
    const double floor_s = static_cast<double>(depth) * rt;

    const std::uint64_t unit_tiles = gosc_unit_tiles(spec.logical_qubits, layer);
    const std::uint64_t beats = gosc_unit_time_beats(spec.logical_qubits, layer);

    const TFactoryDesign factory =
        calibrate_t_factory_stack(p, per_state_budget(budget.distillation, static_cast<double>(t_eff)), fc);

    const auto max_units_at = [&](CodeDistance d) {
        const double unit_time_s = static_cast<double>(beats) * d * cc;
        return static_cast<std::uint64_t>(std::floor(unit_time_s / rt)) + 1;
    };
    const auto units_at = [&](CodeDistance d) {
        return units ? *units : std::max<std::uint64_t>(3, max_units_at(d));
    };

    const auto calibration = calibrate_data_distance(
        [&](CodeDistance d) {
            const double unit_time_s = static_cast<double>(beats) * d * cc;
            const std::uint64_t u = units_at(d);
            const double runtime =
                static_cast<double>(depth) * std::max(unit_time_s / static_cast<double>(u), rt);
            const double tiles = static_cast<double>(u) * static_cast<double>(unit_tiles);
            return std::pair<double, double>{tiles, runtime / cc};
        },
        p, budget.topological);

    const CodeDistance d = calibration.distance;
    const double unit_time_s = static_cast<double>(beats) * d * cc;
    const std::uint64_t n_u_max = max_units_at(d);
    const std::uint64_t u = units_at(d);
    if (u < 3 || u > n_u_max) {
        std::ostringstream msg;
        msg << "unit count " << u << " outside [3, " << n_u_max
            << "] (time-optimal limit at distance " << d.value() << ")";
        throw UnitCountOutOfRange(msg.str());
    }

    const double runtime =
        static_cast<double>(depth) * std::max(unit_time_s / static_cast<double>(u), rt);
    // Enough factories per unit to supply T_layer states per unit time.
    const std::uint64_t factories_per_unit = static_cast<std::uint64_t>(std::ceil(
        layer * static_cast<double>(factory.duration_cycles) /
        (static_cast<double>(beats) * static_cast<double>(d.value()))));

    GoscUnitGeometry geometry{unit_tiles, beats, factories_per_unit};

    PhysicalEstimate est;
    est.strategy = StrategyKind::GoscUnits;
    est.data_distance = d;
    est.data_tiles = u * unit_tiles;
    est.t_factory = factory;
    est.unit_geometry = geometry;
    est.factory_count = u * factories_per_unit;
    est.unit_count = u;
    est.runtime_s = runtime;
    est.total_cycles = calibration.cycles;
    est.total_physical_qubits =
        u * (unit_tiles * physical_qubits_per_tile(d) +
             factories_per_unit * factory.footprint_physical_qubits);
    est.limiting_regime = unit_time_s / static_cast<double>(u) <= rt ? LimitingRegime::Reaction
                                                                     : LimitingRegime::Tick;
    est.failure = recompute_failure(p, d, static_cast<double>(est.data_tiles), calibration.cycles,
                                    static_cast<double>(t_eff), factory.output_error);
    est.measurement_depth = depth;
    est.t_per_layer = layer;
    est.time_optimal_floor_s = floor_s;
    est.max_parallelism = n_u_max;
    est.calibration_iterations = calibration.iterations;
    return est;
}

PhysicalEstimate estimate_autoccz(const LogicalRequirements& spec, const HardwareProfile& hw,
                                  std::optional<std::uint64_t> factories, const ErrorBudget& budget,
                                  const FactoryConstants& fc) {
    spec.validate();
    hw.validate();
    budget.validate();

    const double p = hw.physical_error_rate;
    const double cc = hw.code_cycle_time_s;
    const double rt = hw.reaction_time();
    const std::uint64_t ccz = required_ccz_states(spec);
    const std::uint64_t depth = resolved_measurement_depth(spec);
    if (depth > ccz) {
        throw ValidationError("measurement depth exceeds the CCZ state count");
    }
    const double layer = t_per_layer(spec, GateCurrency::CCZState);
    const double floor_s = static_cast<double>(depth) * rt;

    const DistillationBudget distillation{budget.distillation, static_cast<double>(ccz)};
    const AutoCCZDesign design = calibrate_autoccz(p, distillation.per_state(), fc);
    const double duration = static_cast<double>(design.duration_cycles);

    // Production matches one layer per reaction time at this factory count.
    const std::uint64_t n_f_max =
        static_cast<std::uint64_t>(std::ceil(layer * duration * cc / rt));
    const std::uint64_t f = factories ? *factories : n_f_max;
    if (f < 1 || f > n_f_max) {
        std::ostringstream msg;
        msg << "factory count " << f << " outside [1, " << n_f_max << "]";
        throw FactoryCountOutOfRange(msg.str());
    }

    const double production_s = static_cast<double>(ccz) * duration * cc / static_cast<double>(f);
    const double runtime = std::max(production_s, floor_s);

    const auto calibration = calibrate_data_distance(
        [&](CodeDistance) {
            return std::pair<double, double>{static_cast<double>(spec.logical_qubits),
                                             runtime / cc};
        },
        p, budget.topological);
    const CodeDistance d = calibration.distance;

    const double routing = routing_factor(f, n_f_max);
    const double raw_qubits =
        static_cast<double>(spec.logical_qubits * physical_qubits_per_tile(d) +
                            f * design.footprint_physical_qubits);

    PhysicalEstimate est;
    est.strategy = StrategyKind::AutoCcz;
    est.data_distance = d;
    est.data_tiles = spec.logical_qubits;
    est.autoccz_factory = design;
    est.factory_count = f;
    est.unit_count = 1;
    est.runtime_s = runtime;
    est.total_cycles = calibration.cycles;
    est.total_physical_qubits = static_cast<std::uint64_t>(std::llround(raw_qubits * routing));
    est.limiting_regime = production_s > floor_s ? LimitingRegime::Tick : LimitingRegime::Reaction;
    est.failure = recompute_failure(p, d, static_cast<double>(spec.logical_qubits),
                                    calibration.cycles, static_cast<double>(ccz),
                                    design.output_error);
    est.measurement_depth = depth;
    est.t_per_layer = layer;
    est.time_optimal_floor_s = floor_s;
    est.max_parallelism = n_f_max;
    est.calibration_iterations = calibration.iterations;
    return est;
}

PhysicalEstimate estimate(const LogicalRequirements& spec, const HardwareProfile& hw,
                          const StrategyConfig& strategy, const ErrorBudget& budget,
                          const FactoryConstants& fc) {
    switch (strategy.kind) {
        case StrategyKind::BeatLimited:
            return estimate_beat_limited(spec, hw, budget, fc);
        case StrategyKind::GoscUnits:
            return estimate_gosc_units(spec, hw, strategy.count, budget, fc);
        case StrategyKind::AutoCcz:
            return estimate_autoccz(spec, hw, strategy.count, budget, fc);
    }
    throw ValidationError("unknown strategy");
}

namespace {

// Smallest count in [lo, hi] whose runtime meets the target, assuming the
// runtime is non-increasing in the count. Counts the estimator rejects as out
// of range behave like feasible ones so the search is pushed downward.
PhysicalEstimate search_min_count(
    std::uint64_t lo, std::uint64_t hi, double target_s,
    const std::function<PhysicalEstimate(std::uint64_t)>& eval) {
    const auto reaches = [&](std::uint64_t count) {
        try {
            return eval(count).runtime_s <= target_s;
        } catch (const UnitCountOutOfRange&) {
            return true;
        } catch (const FactoryCountOutOfRange&) {
            return true;
        }
    };

    const std::uint64_t floor_count = lo;
    while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (reaches(mid)) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    PhysicalEstimate best = eval(lo);
    // Verify minimality; walk down if a distance step made the curve locally
    // non-monotone.
    while (lo > floor_count && reaches(lo - 1)) {
        PhysicalEstimate candidate = eval(lo - 1);
        if (candidate.runtime_s > target_s) {
            break;
        }
        best = candidate;
        --lo;
    }
    return best;
}

// Largest count in [lo, hi] whose qubit total fits the budget. The qubit
// curve can dip before it rises, so bracket by doubling, bisect, then nudge.
PhysicalEstimate search_max_count_within_qubits(
    std::uint64_t lo, std::uint64_t hi, std::uint64_t qubit_budget,
    const std::function<PhysicalEstimate(std::uint64_t)>& eval) {
    const auto fits = [&](std::uint64_t count) {
        try {
            return eval(count).total_physical_qubits <= qubit_budget;
        } catch (const UnitCountOutOfRange&) {
            return false;
        } catch (const FactoryCountOutOfRange&) {
            return false;
        }
    };

    std::uint64_t known_ok = lo;
    std::uint64_t step = 1;
    std::uint64_t probe = lo;
    while (probe < hi) {
        probe = std::min(hi, probe + step);
        if (fits(probe)) {
            known_ok = probe;
            step *= 2;
        } else {
            break;
        }
    }
    std::uint64_t bad_above = (known_ok == hi) ? hi + 1 : probe;
    std::uint64_t lo_b = known_ok;
    std::uint64_t hi_b = bad_above;
    while (lo_b + 1 < hi_b) {
        const std::uint64_t mid = lo_b + (hi_b - lo_b) / 2;
        if (mid > hi || !fits(mid)) {
            hi_b = mid;
        } else {
            lo_b = mid;
        }
    }
    while (lo_b < hi && fits(lo_b + 1)) {
        ++lo_b;
    }
    return eval(lo_b);
}

}  // namespace

PhysicalEstimate min_qubits_for_runtime(const LogicalRequirements& spec, const HardwareProfile& hw,
                                        double target_runtime_s, const StrategyConfig& strategy,
                                        const ErrorBudget& budget, const FactoryConstants& fc) {
    if (!(target_runtime_s > 0.0)) {
        throw ValidationError("target runtime must be positive");
    }

    switch (strategy.kind) {
        case StrategyKind::BeatLimited: {
            PhysicalEstimate est = estimate_beat_limited(spec, hw, budget, fc);
            if (est.runtime_s > target_runtime_s) {
                std::ostringstream msg;
                msg << "beat-limited runtime " << est.runtime_s << " s exceeds target "
                    << target_runtime_s << " s";
                throw TargetUnreachable(msg.str());
            }
            return est;
        }
        case StrategyKind::AutoCcz: {
            PhysicalEstimate fastest = estimate_autoccz(spec, hw, std::nullopt, budget, fc);
            if (fastest.runtime_s > target_runtime_s) {
                std::ostringstream msg;
                msg << "even the reaction-limited configuration needs " << fastest.runtime_s
                    << " s (target " << target_runtime_s << " s)";
                throw TargetUnreachable(msg.str());
            }
            return search_min_count(1, fastest.factory_count, target_runtime_s,
                                    [&](std::uint64_t f) {
                                        return estimate_autoccz(spec, hw, f, budget, fc);
                                    });
        }
        case StrategyKind::GoscUnits: {
            PhysicalEstimate fastest = estimate_gosc_units(spec, hw, std::nullopt, budget, fc);
            if (fastest.runtime_s > target_runtime_s) {
                std::ostringstream msg;
                msg << "even the time-optimal unit count needs " << fastest.runtime_s
                    << " s (target " << target_runtime_s << " s)";
                throw TargetUnreachable(msg.str());
            }
            return search_min_count(3, fastest.unit_count, target_runtime_s,
                                    [&](std::uint64_t u) {
                                        return estimate_gosc_units(spec, hw, u, budget, fc);
                                    });
        }
    }
    throw ValidationError("unknown strategy");
}

PhysicalEstimate runtime_for_qubit_budget(const LogicalRequirements& spec,
                                          const HardwareProfile& hw, std::uint64_t qubit_budget,
                                          const StrategyConfig& strategy, const ErrorBudget& budget,
                                          const FactoryConstants& fc) {
    if (qubit_budget == 0) {
        throw ValidationError("qubit budget must be positive");
    }

    const auto require_fits = [&](const PhysicalEstimate& minimal) {
        if (minimal.total_physical_qubits > qubit_budget) {
            std::ostringstream msg;
            msg << "minimal configuration needs " << minimal.total_physical_qubits
                << " qubits (budget " << qubit_budget << ")";
            throw BudgetTooSmall(msg.str());
        }
    };

    switch (strategy.kind) {
        case StrategyKind::BeatLimited: {
            PhysicalEstimate est = estimate_beat_limited(spec, hw, budget, fc);
            require_fits(est);
            return est;
        }
        case StrategyKind::AutoCcz: {
            PhysicalEstimate minimal = estimate_autoccz(spec, hw, 1, budget, fc);
            require_fits(minimal);
            return search_max_count_within_qubits(1, minimal.max_parallelism, qubit_budget,
                                                  [&](std::uint64_t f) {
                                                      return estimate_autoccz(spec, hw, f, budget, fc);
                                                  });
        }
        case StrategyKind::GoscUnits: {
            PhysicalEstimate minimal = estimate_gosc_units(spec, hw, 3, budget, fc);
            require_fits(minimal);
            return search_max_count_within_qubits(3, minimal.max_parallelism, qubit_budget,
                                                  [&](std::uint64_t u) {
                                                      return estimate_gosc_units(spec, hw, u, budget, fc);
                                                  });
        }
    }
    throw ValidationError("unknown strategy");
}

}  // namespace ftqc
