// Acceptance suite: every headline anchor and property gate, one line each.
// Exits nonzero if any criterion fails.

#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "ftqc/strategies.hpp"
#include "ftqc/sweep.hpp"
#include "ftqc/util.hpp"

using namespace ftqc;

namespace {

int g_failures = 0;

void report(const std::string& id, bool pass, const std::string& detail) {
    std::printf("[%s] %s: %s\n", pass ? "PASS" : "FAIL", id.c_str(), detail.c_str());
    if (!pass) {
        ++g_failures;
    }
}

bool in_band(double value, double lo, double hi) {
    return value >= lo && value <= hi;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

LogicalRequirements femoco(double depth_fraction = 0.01) {
    LogicalRequirements spec;
    spec.logical_qubits = 2196;
    spec.toffoli_count = 6'700'000'000ull;
    spec.depth_fraction = depth_fraction;
    return spec;
}

LogicalRequirements bitcoin() {
    LogicalRequirements spec;
    spec.logical_qubits = 2871;
    spec.t_count = 5'760'000'000ull;
    spec.measurement_depth = 18'800'000ull;
    return spec;
}

HardwareProfile profile(double cc, double p = 1e-3) {
    HardwareProfile hw;
    hw.code_cycle_time_s = cc;
    hw.physical_error_rate = p;
    return hw;
}

constexpr double kDay = 86400.0;

// --- criteria -------------------------------------------------------------

PhysicalEstimate c1_femoco_single_factory() {
    const PhysicalEstimate est = estimate_autoccz(femoco(), profile(1e-6), 1);
    const double days = est.runtime_s / kDay;
    const double qubits = static_cast<double>(est.total_physical_qubits);
    const bool pass = in_band(days, 6.0, 14.0) && in_band(qubits, 2.7e6, 6.3e6);
    report("C1", pass,
           "femoco 1 AutoCCZ @ cc=1us: runtime " + fmt(days) + " days (want 10 +-40%), qubits " +
               fmt(qubits) + " (want 4.5e6 +-40%)");
    return est;
}

void c2_femoco_slow_cycle(const PhysicalEstimate& fast) {
    const PhysicalEstimate est = estimate_autoccz(femoco(), profile(235e-6), 1);
    const double days = est.runtime_s / kDay;
    const double ratio = static_cast<double>(est.total_physical_qubits) /
                         static_cast<double>(fast.total_physical_qubits);
    const bool pass = in_band(days, 1440.0, 3360.0) && in_band(ratio, 0.9, 1.1);
    report("C2", pass,
           "femoco 1 AutoCCZ @ cc=235us: runtime " + fmt(days) +
               " days (want 2400 +-40%), qubit ratio vs C1 " + fmt(ratio) + " (want 1 +-10%)");
}

void c3_femoco_ten_days() {
    const PhysicalEstimate est = min_qubits_for_runtime(femoco(), profile(235e-6), 10.0 * kDay,
                                                        {StrategyKind::AutoCcz, std::nullopt});
    const double qubits = static_cast<double>(est.total_physical_qubits);
    const bool pass = in_band(qubits, 22.5e6, 67.5e6);
    report("C3", pass,
           "femoco @ cc=235us, target 10 days: " + fmt(qubits) + " qubits with " +
               fmt(static_cast<double>(est.factory_count)) + " factories (want 45e6 +-50%)");
}

void c4_bitcoin_headlines() {
    const PhysicalEstimate hour = min_qubits_for_runtime(bitcoin(), profile(1e-6), 3600.0,
                                                         {StrategyKind::AutoCcz, std::nullopt});
    const PhysicalEstimate ten_min = min_qubits_for_runtime(bitcoin(), profile(1e-6), 600.0,
                                                            {StrategyKind::AutoCcz, std::nullopt});
    const double q_hour = static_cast<double>(hour.total_physical_qubits);
    const double q_ten = static_cast<double>(ten_min.total_physical_qubits);
    const bool pass = in_band(q_hour, 21e6, 49e6) && in_band(q_ten, 105e6, 245e6);
    report("C4", pass,
           "bitcoin @ cc=1us: 1h -> " + fmt(q_hour) + " qubits (want 35e6 +-40%), 10min -> " +
               fmt(q_ten) + " (want 175e6 +-40%)");
}

void c5_bitcoin_error_scaling() {
    const auto qubits_at = [](double p) {
        return static_cast<double>(min_qubits_for_runtime(bitcoin(), profile(1e-6, p), 3600.0,
                                                          {StrategyKind::AutoCcz, std::nullopt})
                                       .total_physical_qubits);
    };
    const double q3 = qubits_at(1e-3);
    const double q4 = qubits_at(1e-4);
    const double q23 = qubits_at(2e-3);
    const double q24 = qubits_at(2e-4);
    const double ratio7 = q3 / q4;
    const double ratio15 = q23 / q24;
    const bool pass =
        in_band(q4, 2.5e6, 7.5e6) && in_band(ratio7, 5.0, 9.0) && in_band(ratio15, 11.0, 19.0);
    report("C5", pass,
           "bitcoin 1h: p=1e-4 -> " + fmt(q4) + " qubits (want 5e6 +-50%); ratios " + fmt(ratio7) +
               " (want [5,9]) and " + fmt(ratio15) + " (want [11,19])");
}

void c6_error_sweep_termination() {
    const auto grid = log_grid(1e-4, 8e-3, 120);
    std::vector<double> usable;
    for (double p : grid) {
        if (p < kErrorThreshold) {
            usable.push_back(p);
        }
    }
    const SweepSeries series = sweep_physical_error(bitcoin(), profile(1e-6), usable, 3600.0,
                                                    {StrategyKind::AutoCcz, std::nullopt});
    const double analytic = std::pow(0.05 / 2.88e9 / 34300.0, 1.0 / 6.0);
    const bool terminated = series.termination == SweepTermination::CalibrationInfeasible &&
                            series.termination_x.has_value();
    const double x = terminated ? *series.termination_x : 0.0;
    const bool pass = terminated && in_band(x, 2.5e-3, 3.1e-3) && in_band(analytic, 2.5e-3, 3.1e-3);
    report("C6", pass,
           "bitcoin 1h error sweep ends at p = " + fmt(x) + " (want 2.8e-3 +-0.3e-3); analytic " +
               "34300p^6 cutoff " + fmt(analytic));
}

void c7_autoccz_asymptote() {
    double worst = 0.0;
    for (double p : {1e-5, 3e-5, 1e-4, 3e-4, 1e-3}) {
        const double model = autoccz_output_error(p, CodeDistance{49}, CodeDistance{49});
        const double fit = 34300.0 * std::pow(p, 6);
        worst = std::max(worst, std::abs(model / fit - 1.0));
    }
    report("C7", worst <= 1.0,
           "max |autoccz_error/(34300 p^6) - 1| over p grid = " + fmt(worst) + " (want <= 1)");
}

void c8_gosc_time_optimal_units() {
    double best_dev = 1e9;
    double best_units = 0.0;
    for (double rt : {68.75e-6, 70e-6}) {
        HardwareProfile hw = profile(235e-6);
        hw.reaction_time_s = rt;
        const PhysicalEstimate est = estimate_gosc_units(femoco(), hw, std::nullopt);
        const double units = static_cast<double>(est.unit_count);
        const double dev = std::abs(units - 49207.0) / 49207.0;
        if (dev < best_dev) {
            best_dev = dev;
            best_units = units;
        }
    }
    report("C8", best_dev <= 0.10,
           "femoco time-optimal units @ cc=235us: " + fmt(best_units) + " (want 49207 +-10%, dev " +
               fmt(best_dev) + ")");
}

void c9_beat_vs_autoccz(const PhysicalEstimate& autoccz_single) {
    const PhysicalEstimate beat = estimate_beat_limited(femoco(), profile(1e-6));
    const double ratio = static_cast<double>(beat.total_physical_qubits) /
                         static_cast<double>(autoccz_single.total_physical_qubits);
    report("C9", in_band(ratio, 1.5, 3.0),
           "beat-limited / single-AutoCCZ qubit ratio on femoco = " + fmt(ratio) +
               " (want [1.5, 3.0])");
}

void c10_equilibrium_fit() {
    const HardwareProfile hw = profile(1e-6);
    SweepOptions opts;
    opts.points_per_decade = 30;
    std::vector<std::pair<double, double>> points;
    bool all_equilibrium = true;
    for (double n : {100.0, 200.0, 500.0, 1000.0, 2000.0, 10000.0}) {
        const auto qubits = static_cast<std::uint64_t>(n);
        const auto t_count = static_cast<std::uint64_t>(5e13 / n);
        LogicalRequirements probe;
        probe.logical_qubits = qubits;
        probe.t_count = t_count;
        probe.measurement_depth = t_count;
        const double beat_runtime = estimate_beat_limited(probe, hw).runtime_s;
        // Average the optimum over a window of targets inside the
        // equilibrium phase.
        double log_sum = 0.0;
        int count = 0;
        for (double divisor : {30.0, 40.0, 50.0}) {
            const TLayerOptimum opt =
                optimal_t_layer(qubits, t_count, hw, beat_runtime / divisor, {}, {}, opts);
            if (opt.phase != TLayerPhase::Equilibrium) {
                all_equilibrium = false;
            }
            log_sum += std::log(opt.t_layer);
            ++count;
        }
        points.emplace_back(n, std::exp(log_sum / count));
    }
    const PowerLawFit fit = equilibrium_fit(points);
    const bool pass = all_equilibrium && in_band(fit.exponent, 0.63, 0.77) &&
                      in_band(fit.coefficient, 1.0, 3.0);
    report("C10", pass,
           "equilibrium fit T_layer = " + fmt(fit.coefficient) + " * N^" + fmt(fit.exponent) +
               " (want coeff [1,3], exp [0.63,0.77]); residual " + fmt(fit.residual));
}

void c11_property_suites() {
    std::mt19937_64 rng(0x1157);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    // (a) runtime floor on 1000 randomized specs.
    int floor_checked = 0;
    bool floor_ok = true;
    int attempts = 0;
    while (floor_checked < 1000 && attempts < 6000) {
        ++attempts;
        LogicalRequirements spec;
        spec.logical_qubits = 2 + static_cast<std::uint64_t>(std::pow(10.0, 3.3 * unit(rng)));
        const auto gates = static_cast<std::uint64_t>(std::pow(10.0, 4.0 + 5.0 * unit(rng)));
        if (unit(rng) < 0.5) {
            spec.toffoli_count = gates;
        } else {
            spec.t_count = gates;
        }
        spec.measurement_depth = std::max<std::uint64_t>(
            1, static_cast<std::uint64_t>(
                   std::pow(static_cast<double>(gates), 0.3 + 0.7 * unit(rng))));
        HardwareProfile hw;
        hw.code_cycle_time_s = std::pow(10.0, -7.0 + 3.0 * unit(rng));
        hw.physical_error_rate = std::pow(10.0, -4.3 + 1.6 * unit(rng));
        try {
            PhysicalEstimate est;
            const double which = unit(rng);
            if (which < 0.34) {
                est = estimate_beat_limited(spec, hw);
            } else if (which < 0.67) {
                est = estimate_autoccz(spec, hw, std::nullopt);
            } else {
                est = estimate_gosc_units(spec, hw, std::nullopt);
            }
            floor_ok = floor_ok && est.runtime_s >= est.time_optimal_floor_s * (1.0 - 1e-12);
            floor_ok = floor_ok && est.failure.topological_error <= 0.01 + 1e-12 &&
                       est.failure.distillation_error <= 0.05 + 1e-12;
            ++floor_checked;
        } catch (const InfeasibleError&) {
        } catch (const ValidationError&) {
        }
    }
    floor_ok = floor_ok && floor_checked == 1000;

    // (b) monotone runtime in the factory count.
    bool monotone_ok = true;
    for (std::uint64_t f = 1; f <= 64; ++f) {
        const double a = estimate_autoccz(bitcoin(), profile(1e-6), f).runtime_s;
        const double b = estimate_autoccz(bitcoin(), profile(1e-6), f + 1).runtime_s;
        monotone_ok = monotone_ok && b <= a * (1.0 + 1e-12);
    }
    for (std::uint64_t u = 3; u <= 40; ++u) {
        const double a = estimate_gosc_units(femoco(), profile(235e-6), u).runtime_s;
        const double b = estimate_gosc_units(femoco(), profile(235e-6), u + 1).runtime_s;
        monotone_ok = monotone_ok && b <= a * (1.0 + 1e-12);
    }

    // (c) tick-limited runtime is linear in the code cycle to 1e-12 relative.
    bool linear_ok = true;
    for (double scale : {2.0, 10.0, 235.0}) {
        const PhysicalEstimate a = estimate_autoccz(bitcoin(), profile(1e-6), 4);
        const PhysicalEstimate b = estimate_autoccz(bitcoin(), profile(scale * 1e-6), 4);
        linear_ok = linear_ok && a.limiting_regime == LimitingRegime::Tick &&
                    b.limiting_regime == LimitingRegime::Tick &&
                    std::abs(b.runtime_s / a.runtime_s / scale - 1.0) <= 1e-12;
    }

    // (d) distance-calibration minimality against a brute-force oracle.
    bool minimal_ok = true;
    for (int i = 0; i < 200; ++i) {
        const double tiles = std::pow(10.0, 9.0 * unit(rng));
        const double cycles = std::pow(10.0, 3.0 + 11.0 * unit(rng));
        const double p = std::pow(10.0, -5.0 + 2.9 * unit(rng));
        const double budget = std::pow(10.0, -3.0 + 2.5 * unit(rng));
        int expected = -1;
        for (int d = 3; d <= 99; d += 2) {
            if (tiles * cycles * logical_error_rate(p, CodeDistance{d}) <= budget) {
                expected = d;
                break;
            }
        }
        try {
            const CodeDistance got = calibrate_code_distance(tiles, cycles, p, budget);
            minimal_ok = minimal_ok && got.value() == expected;
        } catch (const CalibrationInfeasible&) {
            minimal_ok = minimal_ok && expected == -1;
        }
    }

    // (e) budgets recomputed from returned distances never overflow.
    bool budget_ok = true;
    for (std::uint64_t f : {1ull, 32ull, 128ull, 768ull}) {
        const PhysicalEstimate est = estimate_autoccz(bitcoin(), profile(1e-6), f);
        const double topo = static_cast<double>(est.data_tiles) * est.total_cycles *
                            logical_error_rate(1e-3, est.data_distance);
        const double dist = 2.88e9 * est.autoccz_factory->output_error;
        budget_ok = budget_ok && topo <= 0.01 + 1e-12 && dist <= 0.05 + 1e-12;
    }

    const bool pass = floor_ok && monotone_ok && linear_ok && minimal_ok && budget_ok;
    report("C11", pass,
           std::string("properties: floor(1000 specs) ") + (floor_ok ? "ok" : "FAIL") +
               ", monotone runtime " + (monotone_ok ? "ok" : "FAIL") + ", cc-linearity " +
               (linear_ok ? "ok" : "FAIL") + ", distance minimality (200) " +
               (minimal_ok ? "ok" : "FAIL") + ", budget recompute " + (budget_ok ? "ok" : "FAIL"));
}

void c12_conversions() {
    const double p = worst_case_physical_error(0.999995, 4);
    const double side_large = device_side_length_m(2e9, 5.36e-6);
    const double side_small = device_side_length_m(40e6, 5.36e-6);
    const bool pass = std::abs(p - 0.01) <= 1e-9 &&
                      std::abs(side_large / 103.5 - 1.0) <= 0.05 &&
                      std::abs(side_small / 14.0 - 1.0) <= 0.05;
    report("C12", pass,
           "worst-case p(F=0.999995, dim 4) = " + fmt(p) + " (want 0.01); device sides " +
               fmt(side_large) + " m (want ~103.5) and " + fmt(side_small) + " m (want ~14)");
}

}  // namespace

int main() {
    const PhysicalEstimate femoco_single = c1_femoco_single_factory();
    c2_femoco_slow_cycle(femoco_single);
    c3_femoco_ten_days();
    c4_bitcoin_headlines();
    c5_bitcoin_error_scaling();
    c6_error_sweep_termination();
    c7_autoccz_asymptote();
    c8_gosc_time_optimal_units();
    c9_beat_vs_autoccz(femoco_single);
    c10_equilibrium_fit();
    c11_property_suites();
    c12_conversions();

    std::printf("RESULT: %d/12 criteria passed\n", 12 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
