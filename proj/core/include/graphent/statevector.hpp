#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "graphent/bloch.hpp"
#include "graphent/graph.hpp"

namespace graphent {

/// Outcome counts of repeated standard-basis measurements of one qubit.
struct ShotCounts {
    std::uint64_t n0 = 0;
    std::uint64_t n1 = 0;
    std::uint64_t seed = 0;

    std::uint64_t shots() const noexcept { return n0 + n1; }
};

/// Dense statevector over num_qubits qubits. Basis-state index convention:
/// qubit k is bit k of the index (qubit 0 = least significant bit).
class StateVector {
public:
    static constexpr int kMaxQubits = 24; // 2^24 amplitudes = 256 MiB

    explicit StateVector(int num_qubits); // starts in |0...0>

    int num_qubits() const noexcept { return num_qubits_; }
    std::size_t dimension() const noexcept { return amps_.size(); }
    std::complex<double> amplitude(std::size_t index) const { return amps_.at(index); }
    std::span<const std::complex<double>> amplitudes() const noexcept { return amps_; }

    void apply_rx(int qubit, double beta);
    void apply_ry(int qubit, double beta);
    void apply_rz(int qubit, double beta);

    /// exp(-i phi X_i X_j / 2): amplitude pairs related by flipping bits i
    /// and j map as (a, b) -> (c a - i s b, -i s a + c b) with c = cos(phi/2),
    /// s = sin(phi/2). Symmetric in (i, j); all such gates commute.
    void apply_rxx(int i, int j, double phi);

    /// Exact probability of measuring qubit k as 0 in the standard basis.
    double marginal_p0(int qubit) const;

    /// Exact <sigma_k> along one axis. Z is read off the amplitudes; X and Y
    /// pre-rotate a copy with RY(-pi/2) / RX(pi/2) and then read Z, the same
    /// identities the shot-based protocol relies on.
    double expect_pauli(int qubit, Axis axis) const;

    BlochVector reduced_bloch(int qubit) const;

    double norm_squared() const;

private:
    void apply_one_qubit(int qubit, const std::complex<double> u[2][2]);
    void check_qubit(int qubit) const;

    int num_qubits_;
    std::vector<std::complex<double>> amps_;
};

/// Build |psi_G>: RY(theta_k) then RZ(alpha_k) on every qubit of |0...0>
/// (global phases dropped), then one RXX per arc in normalized arc order.
StateVector prepare_state(const GraphStateSpec& spec);

/// Convenience wrapper: prepare the state and score qubit k from its exact
/// Bloch vector. The brute-force cross-check for the closed forms.
EntanglementEstimate entanglement_exact(const GraphStateSpec& spec, int k);

/// Draw `shots` standard-basis outcomes of qubit k from its exact marginal.
/// Deterministic: mt19937_64 seeded with `seed`, 53-bit uniforms compared
/// against the exact p0. Throws std::invalid_argument when shots == 0.
ShotCounts sample_marginal(const StateVector& state, int qubit, std::uint64_t shots,
                           std::uint64_t seed);

/// Deterministic sub-stream seed derivation (splitmix64 of the master seed
/// xor a stream-indexed odd constant). Used for per-axis and per-grid-point
/// shot streams.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) noexcept;

} // namespace graphent
