#pragma once

#include <cstdint>

#include "graphent/bloch.hpp"
#include "graphent/graph.hpp"
#include "graphent/statevector.hpp"

namespace graphent {

/// Basis-change gate applied to the measured qubit right before the
/// standard-basis measurement: X -> RY(-pi/2), Y -> RX(pi/2), Z -> identity.
struct AxisRotation {
    enum class Gate { Identity, RxHalfPi, RyMinusHalfPi };

    Axis axis = Axis::Z;
    Gate gate = Gate::Identity;
};

AxisRotation basis_rotation(Axis axis) noexcept;

void apply_basis_rotation(StateVector& state, int qubit, const AxisRotation& rotation);

/// Sample mean of +-1 outcomes with its binomial standard error.
struct MeanEstimate {
    double mean = 0.0;      // (n0 - n1) / shots
    double std_error = 0.0; // sqrt((1 - mean^2) / shots)
    std::uint64_t shots = 0;
};

MeanEstimate estimate_mean(const ShotCounts& counts);

/// Shot-based entanglement estimate for qubit k: three circuits, one per
/// axis, each freshly prepared, rotated with basis_rotation, and sampled on
/// an independent sub-stream of `seed`. E = (1 - |m|)/2 clamped to [0, 1/2];
/// the standard error is first-order propagated and flagged unreliable when
/// |m| is within sampling noise of zero (near-maximal entanglement).
EntanglementEstimate estimate_entanglement(const GraphStateSpec& spec, int k,
                                           std::uint64_t shots, std::uint64_t seed);

} // namespace graphent
