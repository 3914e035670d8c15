#include "ftqc/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

#include "ftqc/util.hpp"

namespace ftqc {

namespace {

struct PointOutcome {
    std::optional<PhysicalEstimate> estimate;
    std::optional<SweepTermination> termination;
};

// Evaluates every grid point and truncates at the first failure. Points are
// independent, so parallel evaluation yields the same series as a sequential
// run that stops early.
template <typename Eval>
SweepSeries run_grid(std::string axis_name, const std::vector<double>& grid, Eval eval,
                     bool parallel) {
    std::vector<PointOutcome> outcomes(grid.size());
    const auto run_one = [&](std::size_t i) {
        try {
            outcomes[i].estimate = eval(grid[i]);
        } catch (const TargetUnreachable&) {
            outcomes[i].termination = SweepTermination::TimeOptimalLimit;
        } catch (const CalibrationInfeasible&) {
            outcomes[i].termination = SweepTermination::CalibrationInfeasible;
        }
    };

    if (parallel && grid.size() > 1) {
        const std::size_t workers =
            std::min<std::size_t>(grid.size(), std::max(1u, std::thread::hardware_concurrency()));
        std::vector<std::future<void>> futures;
        futures.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            futures.push_back(std::async(std::launch::async, [&, w] {
                for (std::size_t i = w; i < grid.size(); i += workers) {
                    run_one(i);
                }
            }));
        }
        for (auto& f : futures) {
            f.get();
        }
    } else {
        for (std::size_t i = 0; i < grid.size(); ++i) {
            run_one(i);
        }
    }

    SweepSeries series;
    series.axis_name = std::move(axis_name);
    series.termination = SweepTermination::GridExhausted;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (outcomes[i].termination) {
            series.termination = *outcomes[i].termination;
            series.termination_x = grid[i];
            break;
        }
        series.samples.push_back({grid[i], std::move(*outcomes[i].estimate)});
    }
    return series;
}

}  // namespace

SweepSeries sweep_code_cycle(const LogicalRequirements& spec, const HardwareProfile& profile_template,
                             const std::vector<double>& cc_grid_s, double target_runtime_s,
                             const StrategyConfig& strategy, const ErrorBudget& budget,
                             const FactoryConstants& fc, const SweepOptions& opts) {
    if (cc_grid_s.empty() || !std::is_sorted(cc_grid_s.begin(), cc_grid_s.end())) {
        throw ValidationError("code cycle grid must be non-empty and ascending");
    }
    return run_grid(
        "code_cycle_time_s", cc_grid_s,
        [&](double cc) {
            HardwareProfile hw = profile_template;
            hw.code_cycle_time_s = cc;
            return min_qubits_for_runtime(spec, hw, target_runtime_s, strategy, budget, fc);
        },
        opts.parallel);
}

SweepSeries sweep_physical_error(const LogicalRequirements& spec, const HardwareProfile& profile_template,
                                 const std::vector<double>& p_grid, double target_runtime_s,
                                 const StrategyConfig& strategy, const ErrorBudget& budget,
                                 const FactoryConstants& fc, const SweepOptions& opts) {
    if (p_grid.empty() || !std::is_sorted(p_grid.begin(), p_grid.end())) {
        throw ValidationError("error-rate grid must be non-empty and ascending");
    }
    if (!(p_grid.front() > 0.0) || p_grid.back() >= kErrorThreshold) {
        throw ValidationError("error-rate grid must lie within (0, 0.01)");
    }
    return run_grid(
        "physical_error_rate", p_grid,
        [&](double p) {
            HardwareProfile hw = profile_template;
            hw.physical_error_rate = p;
            return min_qubits_for_runtime(spec, hw, target_runtime_s, strategy, budget, fc);
        },
        opts.parallel);
}

TLayerOptimum optimal_t_layer(std::uint64_t logical_qubits, std::uint64_t t_count,
                              const HardwareProfile& hw, double target_runtime_s,
                              const ErrorBudget& budget, const FactoryConstants& fc,
                              const SweepOptions& opts) {
    if (logical_qubits == 0 || t_count == 0) {
        throw ValidationError("logical qubit and T counts must be positive");
    }
    if (!(target_runtime_s > 0.0)) {
        throw ValidationError("target runtime must be positive");
    }

    LogicalRequirements base;
    base.logical_qubits = logical_qubits;
    base.t_count = t_count;

    // When the single fast data block already reaches the target, the
    // measurement depth is irrelevant; the optimum is reported as 0.
    base.measurement_depth = t_count;
    const PhysicalEstimate beat = estimate_beat_limited(base, hw, budget, fc);
    if (beat.runtime_s <= target_runtime_s) {
        return {0.0, beat, TLayerPhase::NoParallelization};
    }

    const std::vector<double> layer_grid =
        log_grid(1.0, static_cast<double>(logical_qubits), opts.points_per_decade);

    bool any_unreachable_below = false;
    bool unreachable_before_best = false;
    bool found = false;
    double best_layer = 0.0;
    PhysicalEstimate best;
    std::uint64_t previous_depth = 0;
    bool last_was_unreachable = false;

    for (double layer : layer_grid) {
        const auto depth = static_cast<std::uint64_t>(
            std::ceil(static_cast<double>(t_count) / layer));
        if (depth == previous_depth) {
            continue;
        }
        previous_depth = depth;

        LogicalRequirements candidate = base;
        candidate.measurement_depth = std::max<std::uint64_t>(1, depth);
        try {
            PhysicalEstimate est = min_qubits_for_runtime(
                candidate, hw, target_runtime_s, {StrategyKind::GoscUnits, std::nullopt}, budget, fc);
            const double actual_layer = static_cast<double>(t_count) / static_cast<double>(depth);
            if (!found || est.total_physical_qubits < best.total_physical_qubits) {
                found = true;
                best = est;
                best_layer = actual_layer;
                unreachable_before_best = last_was_unreachable;
            }
            last_was_unreachable = false;
        } catch (const TargetUnreachable&) {
            any_unreachable_below = true;
            last_was_unreachable = true;
            continue;
        }
    }

    if (!found) {
        throw TargetUnreachable("no measurement depth reaches the target runtime");
    }

    TLayerPhase phase;
    if (any_unreachable_below && unreachable_before_best) {
        // The optimum sits on the feasibility boundary set by the reaction
        // floor: forced parallelism, not a free optimum.
        phase = TLayerPhase::Saturated;
    } else if (best.unit_count >= opts.equilibrium_min_units) {
        phase = TLayerPhase::Equilibrium;
    } else {
        phase = TLayerPhase::Oscillating;
    }
    return {best_layer, best, phase};
}

PowerLawFit equilibrium_fit(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 3) {
        throw ValidationError("power-law fit needs at least 3 points");
    }
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto& [x, y] : points) {
        if (!(x > 0.0) || !(y > 0.0)) {
            throw ValidationError("power-law fit needs strictly positive points");
        }
        const double lx = std::log(x);
        const double ly = std::log(y);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double n = static_cast<double>(points.size());
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) {
        throw ValidationError("power-law fit is degenerate: all x identical");
    }
    const double exponent = (n * sxy - sx * sy) / denom;
    const double intercept = (sy - exponent * sx) / n;

    double sse = 0.0;
    for (const auto& [x, y] : points) {
        const double r = std::log(y) - (intercept + exponent * std::log(x));
        sse += r * r;
    }
    return {std::exp(intercept), exponent, std::sqrt(sse / n)};
}

}  // namespace ftqc
