#include <cmath>
#include <optional>

#include <doctest.h>

#include "ftqc/factories.hpp"

using namespace ftqc;

namespace {

// Full-grid rescans, independent of the tie-break bookkeeping in the library.
std::optional<std::pair<int, int>> oracle_autoccz(double p, double budget,
                                                  const FactoryConstants& fc = {}) {
    std::optional<std::pair<int, int>> best;
    double best_volume = 0.0;
    for (int d2 = fc.grid_d_min; d2 <= fc.grid_d_max; d2 += 2) {
        for (int d1 = fc.grid_d_min; d1 <= fc.grid_d_max; d1 += 2) {
            if (autoccz_output_error(p, CodeDistance{d1}, CodeDistance{d2}, fc) > budget) {
                continue;
            }
            const double volume =
                static_cast<double>(autoccz_footprint_physical(CodeDistance{d2}, fc)) *
                static_cast<double>(autoccz_duration_cycles(CodeDistance{d2}, fc));
            if (!best || volume < best_volume ||
                (volume == best_volume &&
                 (d2 < best->second || (d2 == best->second && d1 < best->first)))) {
                best = {d1, d2};
                best_volume = volume;
            }
        }
    }
    return best;
}

}  // namespace

TEST_CASE("per-state budget") {
    CHECK(per_state_budget(0.05, 2.88e9) == doctest::Approx(1.736e-11).epsilon(1e-3));
    CHECK(per_state_budget(0.05, 1) == doctest::Approx(0.05));
    CHECK(per_state_budget(0.05, 6.7e9) == doctest::Approx(7.46e-12).epsilon(1e-3));
    CHECK_THROWS_AS(per_state_budget(0.05, 0.5), ValidationError);

    DistillationBudget db{0.05, 2.88e9};
    CHECK(db.per_state() == doctest::Approx(0.05 / 2.88e9));
}

TEST_CASE("autoccz output error asymptote") {
    // With unconstrained distances the model collapses to 34300 p^6.
    const CodeDistance dmax{49};
    for (double p : {1e-5, 3e-5, 1e-4, 3e-4, 1e-3}) {
        const double fit = 34300.0 * std::pow(p, 6);
        const double model = autoccz_output_error(p, dmax, dmax);
        CHECK(std::abs(model / fit - 1.0) <= 1.0);
    }
    CHECK(autoccz_output_error(1e-3, dmax, dmax) == doctest::Approx(3.43e-14).epsilon(0.01));
    CHECK(autoccz_output_error(1e-4, dmax, dmax) == doctest::Approx(3.43e-20).epsilon(0.01));

    // Small distances leave the topological terms dominant.
    CHECK(autoccz_output_error(1e-3, CodeDistance{7}, CodeDistance{11}) > 3.43e-14);
    CHECK_THROWS_AS(autoccz_output_error(0.01, dmax, dmax), ValidationError);
}

TEST_CASE("autoccz output error monotonicity") {
    for (int d = 3; d <= 47; d += 2) {
        CHECK(autoccz_output_error(1e-3, CodeDistance{d + 2}, CodeDistance{31}) <=
              autoccz_output_error(1e-3, CodeDistance{d}, CodeDistance{31}));
        CHECK(autoccz_output_error(1e-3, CodeDistance{31}, CodeDistance{d + 2}) <=
              autoccz_output_error(1e-3, CodeDistance{31}, CodeDistance{d}));
    }
    double previous = 0.0;
    for (double p : {1e-5, 1e-4, 1e-3, 3e-3}) {
        const double e = autoccz_output_error(p, CodeDistance{25}, CodeDistance{25});
        CHECK(e > previous);
        previous = e;
    }
}

TEST_CASE("autoccz calibration matches brute force") {
    const double femoco_budget = 0.05 / 6.7e9;
    const auto expected = oracle_autoccz(1e-3, femoco_budget);
    REQUIRE(expected.has_value());
    const AutoCCZDesign design = calibrate_autoccz(1e-3, femoco_budget);
    CHECK(design.d1.value() == expected->first);
    CHECK(design.d2.value() == expected->second);
    CHECK(design.output_error <= femoco_budget);
    CHECK(design.duration_cycles == autoccz_duration_cycles(design.d2));

    // Tiny base error: the scan settles on small distances.
    const auto tiny = oracle_autoccz(1e-5, 1e-6);
    REQUIRE(tiny.has_value());
    const AutoCCZDesign tiny_design = calibrate_autoccz(1e-5, 1e-6);
    CHECK(tiny_design.d1.value() == tiny->first);
    CHECK(tiny_design.d2.value() == tiny->second);
}

TEST_CASE("autoccz calibration minimality") {
    const double budget = 0.05 / 2.88e9;
    const AutoCCZDesign design = calibrate_autoccz(1e-3, budget);
    const double chosen_volume = static_cast<double>(design.footprint_physical_qubits) *
                                 static_cast<double>(design.duration_cycles);
    FactoryConstants fc;
    for (int d2 = fc.grid_d_min; d2 <= fc.grid_d_max; d2 += 2) {
        const double volume =
            static_cast<double>(autoccz_footprint_physical(CodeDistance{d2}, fc)) *
            static_cast<double>(autoccz_duration_cycles(CodeDistance{d2}, fc));
        if (volume >= chosen_volume) {
            continue;
        }
        for (int d1 = fc.grid_d_min; d1 <= fc.grid_d_max; d1 += 2) {
            CHECK(autoccz_output_error(1e-3, CodeDistance{d1}, CodeDistance{d2}, fc) > budget);
        }
    }
}

TEST_CASE("autoccz calibration infeasible near the fit cutoff") {
    // Solving 34300 p^6 = 0.05 / 2.88e9 puts the asymptotic cutoff at
    // p ~ 2.8e-3; the bounded grid gives out slightly earlier.
    CHECK_THROWS_AS(calibrate_autoccz(2.9e-3, 0.05 / 2.88e9), CalibrationInfeasible);
    CHECK_NOTHROW(calibrate_autoccz(1e-3, 0.05 / 2.88e9));
}

TEST_CASE("t factory error") {
    CHECK(t_factory_error(1e-3, CodeDistance{49}) == doctest::Approx(3.5e-8).epsilon(0.01));
    CHECK(t_factory_error(1e-4, CodeDistance{49}) == doctest::Approx(3.5e-11).epsilon(0.01));
    CHECK(t_factory_error(1e-3, CodeDistance{3}) > 3.5e-8);
    CHECK_THROWS_AS(t_factory_error(0.02, CodeDistance{9}), ValidationError);
}

TEST_CASE("t factory calibration") {
    // Budget above the 35 p^3 floor: the smallest distance whose topological
    // term fits wins.
    const TFactoryDesign design = calibrate_t_factory(1e-3, 1e-7);
    CHECK(design.levels == 1);
    CHECK(design.output_error <= 1e-7);
    int expected = -1;
    for (int d = 3; d <= 49; d += 2) {
        if (t_factory_error(1e-3, CodeDistance{d}) <= 1e-7) {
            expected = d;
            break;
        }
    }
    CHECK(design.distance.value() == expected);

    // Below the floor a single level can never reach the budget.
    CHECK_THROWS_AS(calibrate_t_factory(1e-3, 1e-9), CalibrationInfeasible);
    CHECK_NOTHROW(calibrate_t_factory(1e-4, 1e-9));
}

TEST_CASE("t factory stack cascades below the single-level floor") {
    const TFactoryDesign stacked = calibrate_t_factory_stack(1e-3, 1e-9);
    CHECK(stacked.levels == 2);
    CHECK(stacked.output_error <= 1e-9);
    CHECK(stacked.footprint_tiles == 16 * 11);

    // When one level suffices, the stack calibration agrees with the plain one.
    const TFactoryDesign single = calibrate_t_factory_stack(1e-4, 1e-9);
    CHECK(single.levels == 1);
    CHECK(single.distance.value() == calibrate_t_factory(1e-4, 1e-9).distance.value());

    // Error shrinks with each added level.
    CHECK(t_factory_error_staged(1e-3, CodeDistance{31}, 2) <
          t_factory_error_staged(1e-3, CodeDistance{31}, 1));
}

TEST_CASE("routing factor") {
    CHECK(routing_factor(1, 100) == doctest::Approx(1.01).epsilon(1e-12));
    CHECK(routing_factor(100, 100) == doctest::Approx(1.50).epsilon(1e-12));
    CHECK(routing_factor(50, 100) == doctest::Approx(1.01 + 0.49 * 49.0 / 99.0).epsilon(1e-12));
    CHECK(routing_factor(50, 100) == doctest::Approx(1.2525).epsilon(1e-4));
    CHECK(routing_factor(1, 1) == doctest::Approx(1.01).epsilon(1e-12));
    CHECK_THROWS_AS(routing_factor(0, 10), ValidationError);
    CHECK_THROWS_AS(routing_factor(11, 10), ValidationError);

    double previous = 0.0;
    for (std::uint64_t f = 1; f <= 200; ++f) {
        const double r = routing_factor(f, 200);
        CHECK(r >= previous);
        CHECK(r >= 1.01);
        CHECK(r <= 1.5);
        previous = r;
    }
}

TEST_CASE("footprint multiplier scales qubits only") {
    FactoryConstants scaled;
    scaled.footprint_multiplier = 0.5;
    const AutoCCZDesign base = calibrate_autoccz(1e-3, 1e-10);
    const AutoCCZDesign half = calibrate_autoccz(1e-3, 1e-10, scaled);
    CHECK(half.duration_cycles == base.duration_cycles);
    CHECK(half.output_error == base.output_error);
    CHECK(half.footprint_physical_qubits * 2 == base.footprint_physical_qubits);
}
