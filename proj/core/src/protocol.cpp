#include "graphent/protocol.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace graphent {

namespace {

// First-order error propagation through E = (1 - |m|)/2 degenerates as
// |m| -> 0 (the gradient direction is undefined at maximal entanglement);
// below kUnreliableScale / sqrt(shots) the reported error bar is flagged.
constexpr double kNormFloor = 1e-9;
constexpr double kUnreliableScale = 10.0;

std::uint64_t axis_stream(Axis axis) {
    switch (axis) {
    case Axis::X: return 0;
    case Axis::Y: return 1;
    case Axis::Z: return 2;
    }
    return 2;
}

} // namespace

AxisRotation basis_rotation(Axis axis) noexcept {
    switch (axis) {
    case Axis::X: return AxisRotation{Axis::X, AxisRotation::Gate::RyMinusHalfPi};
    case Axis::Y: return AxisRotation{Axis::Y, AxisRotation::Gate::RxHalfPi};
    case Axis::Z: return AxisRotation{Axis::Z, AxisRotation::Gate::Identity};
    }
    return AxisRotation{Axis::Z, AxisRotation::Gate::Identity};
}

void apply_basis_rotation(StateVector& state, int qubit, const AxisRotation& rotation) {
    switch (rotation.gate) {
    case AxisRotation::Gate::Identity:
        break;
    case AxisRotation::Gate::RxHalfPi:
        state.apply_rx(qubit, std::numbers::pi / 2.0);
        break;
    case AxisRotation::Gate::RyMinusHalfPi:
        state.apply_ry(qubit, -std::numbers::pi / 2.0);
        break;
    }
}

MeanEstimate estimate_mean(const ShotCounts& counts) {
    const std::uint64_t shots = counts.shots();
    if (shots == 0) {
        throw std::invalid_argument("cannot estimate a mean from zero shots");
    }
    MeanEstimate estimate;
    estimate.shots = shots;
    estimate.mean =
        (static_cast<double>(counts.n0) - static_cast<double>(counts.n1)) / static_cast<double>(shots);
    estimate.std_error =
        std::sqrt(std::max(0.0, 1.0 - estimate.mean * estimate.mean) / static_cast<double>(shots));
    return estimate;
}

EntanglementEstimate estimate_entanglement(const GraphStateSpec& spec, int k,
                                           std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw std::invalid_argument("shot count must be at least 1");
    }
    std::array<MeanEstimate, 3> means;
    for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
        // One circuit per axis, freshly prepared, on its own shot stream.
        StateVector state = prepare_state(spec);
        apply_basis_rotation(state, k, basis_rotation(axis));
        const ShotCounts counts =
            sample_marginal(state, k, shots, derive_seed(seed, axis_stream(axis)));
        means[axis_stream(axis)] = estimate_mean(counts);
    }

    double norm_sq = 0.0;
    double weighted_var = 0.0;
    for (const MeanEstimate& m : means) {
        norm_sq += m.mean * m.mean;
        weighted_var += m.mean * m.mean * m.std_error * m.std_error;
    }
    const double norm = std::sqrt(norm_sq);

    EntanglementEstimate estimate;
    estimate.value = std::clamp(0.5 * (1.0 - norm), 0.0, 0.5);
    estimate.source = EstimateSource::Shots;
    estimate.std_error = 0.5 * std::sqrt(weighted_var) / std::max(norm, kNormFloor);
    estimate.std_error_unreliable =
        norm < kUnreliableScale / std::sqrt(static_cast<double>(shots));
    return estimate;
}

} // namespace graphent
