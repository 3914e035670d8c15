#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "ftqc/errors.hpp"

namespace ftqc {

inline std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) {
    return (a + b - 1) / b;
}

// Geometric grid from lo to hi with ~points_per_decade samples per factor-10
// span. Both endpoints are always included.
inline std::vector<double> log_grid(double lo, double hi, int points_per_decade) {
    if (!(lo > 0.0) || !(hi >= lo)) {
        throw ValidationError("log_grid: bounds must satisfy 0 < lo <= hi");
    }
    if (points_per_decade < 1) {
        throw ValidationError("log_grid: points_per_decade must be >= 1");
    }
    if (hi == lo) {
        return {lo};
    }
    const double decades = std::log10(hi / lo);
    const std::size_t n =
        std::max<std::size_t>(2, static_cast<std::size_t>(std::llround(decades * points_per_decade)) + 1);
    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i) {
        grid[i] = lo * std::pow(hi / lo, static_cast<double>(i) / static_cast<double>(n - 1));
    }
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

}  // namespace ftqc
