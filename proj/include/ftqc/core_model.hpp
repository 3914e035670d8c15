#pragma once

#include <cstdint>
#include <optional>

#include "ftqc/errors.hpp"

namespace ftqc {

/// Error threshold of the surface code. Physical error rates must stay
/// strictly below this for the logical suppression formula to hold; at or
/// above it, increasing the distance makes the logical error worse.
inline constexpr double kErrorThreshold = 0.01;

/// Default cap for data-block distance calibration. Beyond this the physical
/// overhead is absurd and the suppression formula is extrapolated too far.
inline constexpr int kDefaultMaxDataDistance = 99;

/// Surface-code distance: an odd positive integer. Distances below 3 protect
/// nothing but are accepted where the raw formulas are exercised directly.
class CodeDistance {
  public:
    explicit CodeDistance(int d);
    operator int() const noexcept { return d_; }
    int value() const noexcept { return d_; }

  private:
    int d_;
};

/// Hardware characteristics an estimate is computed against.
struct HardwareProfile {
    double code_cycle_time_s = 1e-6;
    /// Measurement + decode + feed-forward latency. Derived from the code
    /// cycle via default_reaction_time() when absent.
    std::optional<double> reaction_time_s;
    double physical_error_rate = 1e-3;
    std::optional<double> qubit_area_m2;
    std::optional<std::uint64_t> max_physical_qubits;

    double reaction_time() const;
    void validate() const;
};

/// Allowed failure probability, split between the data block (topological)
/// and the magic-state supply (distillation).
struct ErrorBudget {
    double topological = 0.01;
    double distillation = 0.05;
    void validate() const;
};

struct FailureAccount {
    double topological_error = 0.0;
    double distillation_error = 0.0;
    double total = 0.0;
};

/// RT = CC/4 + 10us. The quantum measurement is a fraction of the code cycle;
/// the 10us constant stands in for hardware-independent classical processing.
double default_reaction_time(double code_cycle_s);

/// p_L = 0.1 * (100 p)^((d+1)/2), per logical qubit per code cycle.
/// Rejects p outside (0, kErrorThreshold).
double logical_error_rate(double physical_error_rate, CodeDistance d);

/// One logical tile costs 2 d^2 physical qubits (data + ancilla).
std::uint64_t physical_qubits_per_tile(CodeDistance d);

/// Worst-case conversion from gate fidelity to physical error rate for a
/// gate acting on a Hilbert space of the given dimension: coherent errors can
/// interfere, so p = sqrt(dim (dim+1) (1-F)).
double worst_case_physical_error(double fidelity, int hilbert_dim);

/// Smallest odd d >= 3 with n_tiles * total_cycles * p_L(p, d) <= budget.
/// Throws CalibrationInfeasible when no d <= d_max works.
CodeDistance calibrate_code_distance(double n_tiles, double total_cycles,
                                     double physical_error_rate, double budget,
                                     int d_max = kDefaultMaxDataDistance);

/// Side length of a square device holding `qubits` at the given area density.
double device_side_length_m(double qubits, double area_per_qubit_m2);

/// Final failure probability is the linear sum of the two contributions,
/// clamped to 1 (the linear sum is only meaningful for small errors).
FailureAccount failure_account(double topological, double distillation);

}  // namespace ftqc
