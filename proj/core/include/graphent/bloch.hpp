#pragma once

#include <algorithm>
#include <cmath>
#include <optional>

namespace graphent {

enum class Axis { X, Y, Z };

/// Pauli expectation values of one qubit. Norm 1 means the qubit is in a
/// pure reduced state (unentangled with the rest); norm < 1 means entangled.
struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

enum class EstimateSource { Analytic, ExactSim, Shots };

/// Geometric measure of entanglement of one qubit with the rest,
/// E = (1 - |<sigma>|)/2, clamped into [0, 1/2].
struct EntanglementEstimate {
    double value = 0.0;
    EstimateSource source = EstimateSource::Analytic;
    std::optional<double> std_error;
    /// Set when |<sigma>| is too small for first-order error propagation
    /// to mean anything (near-maximal entanglement).
    bool std_error_unreliable = false;
};

inline double entanglement_from_bloch(const BlochVector& b) {
    return std::clamp(0.5 * (1.0 - b.norm()), 0.0, 0.5);
}

} // namespace graphent
