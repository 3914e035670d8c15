#include "ftqc/core_model.hpp"

#include <cmath>
#include <sstream>

namespace ftqc {

namespace {

void require_below_threshold(double p) {
    if (!(p > 0.0) || p >= kErrorThreshold) {
        std::ostringstream msg;
        msg << "physical error rate must lie in (0, " << kErrorThreshold << "), got " << p;
        throw ValidationError(msg.str());
    }
}

}  // namespace

CodeDistance::CodeDistance(int d) : d_(d) {
    if (d < 1 || d % 2 == 0) {
        std::ostringstream msg;
        msg << "code distance must be an odd positive integer, got " << d;
        throw ValidationError(msg.str());
    }
}

double HardwareProfile::reaction_time() const {
    return reaction_time_s ? *reaction_time_s : default_reaction_time(code_cycle_time_s);
}

void HardwareProfile::validate() const {
    if (!(code_cycle_time_s > 0.0)) {
        throw ValidationError("code cycle time must be positive");
    }
    if (reaction_time_s && !(*reaction_time_s > 0.0)) {
        throw ValidationError("reaction time must be positive when given");
    }
    require_below_threshold(physical_error_rate);
    if (qubit_area_m2 && !(*qubit_area_m2 > 0.0)) {
        throw ValidationError("qubit area must be positive when given");
    }
    if (max_physical_qubits && *max_physical_qubits == 0) {
        throw ValidationError("max physical qubits must be positive when given");
    }
}

void ErrorBudget::validate() const {
    if (!(topological > 0.0) || topological >= 1.0 || !(distillation > 0.0) || distillation >= 1.0) {
        throw ValidationError("error budgets must lie in (0, 1)");
    }
    if (topological + distillation >= 1.0) {
        throw ValidationError("topological + distillation budget must be below 1");
    }
}

double default_reaction_time(double code_cycle_s) {
    if (code_cycle_s < 0.0) {
        throw ValidationError("code cycle time must be non-negative");
    }
    return code_cycle_s / 4.0 + 10e-6;
}

double logical_error_rate(double physical_error_rate, CodeDistance d) {
    require_below_threshold(physical_error_rate);
    const int exponent = (d + 1) / 2;
    return 0.1 * std::pow(100.0 * physical_error_rate, exponent);
}

std::uint64_t physical_qubits_per_tile(CodeDistance d) {
    const auto dv = static_cast<std::uint64_t>(d.value());
    return 2 * dv * dv;
}

double worst_case_physical_error(double fidelity, int hilbert_dim) {
    if (!(fidelity >= 0.0) || fidelity > 1.0) {
        throw ValidationError("fidelity must lie in [0, 1]");
    }
    if (hilbert_dim < 2 || (hilbert_dim & (hilbert_dim - 1)) != 0) {
        throw ValidationError("Hilbert dimension must be a power of two >= 2");
    }
    const double dim = hilbert_dim;
    return std::sqrt(dim * (dim + 1.0) * (1.0 - fidelity));
}

CodeDistance calibrate_code_distance(double n_tiles, double total_cycles,
                                     double physical_error_rate, double budget, int d_max) {
    if (!(n_tiles > 0.0) || !(total_cycles > 0.0) || !(budget > 0.0)) {
        throw ValidationError("tile count, cycle count, and budget must be positive");
    }
    require_below_threshold(physical_error_rate);
    for (int d = 3; d <= d_max; d += 2) {
        const CodeDistance cd{d};
        if (n_tiles * total_cycles * logical_error_rate(physical_error_rate, cd) <= budget) {
            return cd;
        }
    }
    std::ostringstream msg;
    msg << "no code distance <= " << d_max << " holds " << n_tiles << " tiles over "
        << total_cycles << " cycles within a budget of " << budget << " at p = "
        << physical_error_rate;
    throw CalibrationInfeasible(msg.str());
}

double device_side_length_m(double qubits, double area_per_qubit_m2) {
    if (qubits < 0.0) {
        throw ValidationError("qubit count must be non-negative");
    }
    if (!(area_per_qubit_m2 > 0.0)) {
        throw ValidationError("area per qubit must be positive");
    }
    return std::sqrt(qubits * area_per_qubit_m2);
}

FailureAccount failure_account(double topological, double distillation) {
    if (topological < 0.0 || topological > 1.0 || distillation < 0.0 || distillation > 1.0) {
        throw ValidationError("failure probabilities must lie in [0, 1]");
    }
    return {topological, distillation, std::min(1.0, topological + distillation)};
}

}  // namespace ftqc
