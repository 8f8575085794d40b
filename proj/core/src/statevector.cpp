#include "graphent/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace graphent {

namespace {

constexpr std::complex<double> kMinusI(0.0, -1.0);

} // namespace

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw std::invalid_argument("qubit count " + std::to_string(num_qubits) +
                                    " outside [1, " + std::to_string(kMaxQubits) + "]");
    }
    amps_.assign(std::size_t{1} << num_qubits, {0.0, 0.0});
    amps_[0] = {1.0, 0.0};
}

void StateVector::check_qubit(int qubit) const {
    if (qubit < 0 || qubit >= num_qubits_) {
        throw std::out_of_range("qubit index " + std::to_string(qubit) + " outside [0, " +
                                std::to_string(num_qubits_) + ")");
    }
}

void StateVector::apply_one_qubit(int qubit, const std::complex<double> u[2][2]) {
    const std::size_t mask = std::size_t{1} << qubit;
    const std::size_t lo = mask - 1;
    const std::size_t hi = ~lo;
    const std::size_t half = amps_.size() >> 1;
    for (std::size_t i = 0; i < half; ++i) {
        const std::size_t i0 = ((i & hi) << 1) | (i & lo);
        const std::size_t i1 = i0 | mask;
        const std::complex<double> a = amps_[i0];
        const std::complex<double> b = amps_[i1];
        amps_[i0] = u[0][0] * a + u[0][1] * b;
        amps_[i1] = u[1][0] * a + u[1][1] * b;
    }
}

void StateVector::apply_rx(int qubit, double beta) {
    check_qubit(qubit);
    const double c = std::cos(beta / 2.0);
    const double s = std::sin(beta / 2.0);
    const std::complex<double> u[2][2] = {{{c, 0.0}, {0.0, -s}}, {{0.0, -s}, {c, 0.0}}};
    apply_one_qubit(qubit, u);
}

void StateVector::apply_ry(int qubit, double beta) {
    check_qubit(qubit);
    const double c = std::cos(beta / 2.0);
    const double s = std::sin(beta / 2.0);
    const std::complex<double> u[2][2] = {{{c, 0.0}, {-s, 0.0}}, {{s, 0.0}, {c, 0.0}}};
    apply_one_qubit(qubit, u);
}

void StateVector::apply_rz(int qubit, double beta) {
    check_qubit(qubit);
    const std::complex<double> phase0 = std::polar(1.0, -beta / 2.0);
    const std::complex<double> phase1 = std::polar(1.0, beta / 2.0);
    const std::size_t mask = std::size_t{1} << qubit;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        amps_[i] *= (i & mask) ? phase1 : phase0;
    }
}

void StateVector::apply_rxx(int i, int j, double phi) {
    check_qubit(i);
    check_qubit(j);
    if (i == j) {
        throw std::invalid_argument("rxx needs two distinct qubits, got " + std::to_string(i) +
                                    " twice");
    }
    const std::complex<double> c(std::cos(phi / 2.0), 0.0);
    const std::complex<double> ms = kMinusI * std::sin(phi / 2.0);
    const std::size_t mi = std::size_t{1} << i;
    const std::size_t flip = mi | (std::size_t{1} << j);
    const std::size_t lo = mi - 1;
    const std::size_t hi = ~lo;
    const std::size_t half = amps_.size() >> 1;
    // Enumerate the orbit representatives with bit i clear; the partner has
    // both bits flipped, so every pair is visited exactly once.
    for (std::size_t t = 0; t < half; ++t) {
        const std::size_t x = ((t & hi) << 1) | (t & lo);
        const std::size_t y = x ^ flip;
        const std::complex<double> a = amps_[x];
        const std::complex<double> b = amps_[y];
        amps_[x] = c * a + ms * b;
        amps_[y] = ms * a + c * b;
    }
}

double StateVector::marginal_p0(int qubit) const {
    check_qubit(qubit);
    const std::size_t mask = std::size_t{1} << qubit;
    double p0 = 0.0;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (!(i & mask)) p0 += std::norm(amps_[i]);
    }
    return std::clamp(p0, 0.0, 1.0);
}

double StateVector::expect_pauli(int qubit, Axis axis) const {
    check_qubit(qubit);
    switch (axis) {
    case Axis::Z:
        return 2.0 * marginal_p0(qubit) - 1.0;
    case Axis::X: {
        StateVector rotated = *this;
        rotated.apply_ry(qubit, -std::numbers::pi / 2.0);
        return 2.0 * rotated.marginal_p0(qubit) - 1.0;
    }
    case Axis::Y: {
        StateVector rotated = *this;
        rotated.apply_rx(qubit, std::numbers::pi / 2.0);
        return 2.0 * rotated.marginal_p0(qubit) - 1.0;
    }
    }
    return 0.0; // unreachable
}

BlochVector StateVector::reduced_bloch(int qubit) const {
    return BlochVector{expect_pauli(qubit, Axis::X), expect_pauli(qubit, Axis::Y),
                       expect_pauli(qubit, Axis::Z)};
}

double StateVector::norm_squared() const {
    double total = 0.0;
    for (const std::complex<double>& a : amps_) total += std::norm(a);
    return total;
}

StateVector prepare_state(const GraphStateSpec& spec) {
    if (spec.num_qubits() > StateVector::kMaxQubits) {
        throw std::invalid_argument("graph has " + std::to_string(spec.num_qubits()) +
                                    " qubits, simulator ceiling is " +
                                    std::to_string(StateVector::kMaxQubits));
    }
    StateVector state(spec.num_qubits());
    for (int k = 0; k < spec.num_qubits(); ++k) {
        const QubitPrep& p = spec.prep(k);
        state.apply_ry(k, p.theta);
        state.apply_rz(k, p.alpha);
    }
    for (const Arc& arc : spec.arcs()) {
        state.apply_rxx(arc.from, arc.to, arc.weight);
    }
    return state;
}

EntanglementEstimate entanglement_exact(const GraphStateSpec& spec, int k) {
    EntanglementEstimate estimate;
    estimate.value = entanglement_from_bloch(prepare_state(spec).reduced_bloch(k));
    estimate.source = EstimateSource::ExactSim;
    return estimate;
}

ShotCounts sample_marginal(const StateVector& state, int qubit, std::uint64_t shots,
                           std::uint64_t seed) {
    if (shots == 0) {
        throw std::invalid_argument("shot count must be at least 1");
    }
    const double p0 = state.marginal_p0(qubit);
    std::mt19937_64 rng(seed);
    ShotCounts counts;
    counts.seed = seed;
    for (std::uint64_t s = 0; s < shots; ++s) {
        // 53-bit uniform in [0, 1); avoids std::bernoulli_distribution so the
        // stream is identical across standard libraries.
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (u < p0) {
            ++counts.n0;
        } else {
            ++counts.n1;
        }
    }
    return counts;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) noexcept {
    std::uint64_t x = master ^ (0x9E3779B97F4A7C15ull * (stream + 1));
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

} // namespace graphent
