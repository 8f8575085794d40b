#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "graphent/analytic.hpp"
#include "graphent/statevector.hpp"
#include "test_support.hpp"

using namespace graphent;
using test_support::chain3;
using test_support::kPi;
using test_support::max_amplitude_diff;

TEST_CASE("fresh state is |0...0> and the qubit ceiling is enforced") {
    const StateVector state(3);
    CHECK(state.dimension() == 8);
    CHECK(state.amplitude(0) == std::complex<double>(1.0, 0.0));
    for (std::size_t i = 1; i < 8; ++i) CHECK(std::abs(state.amplitude(i)) == 0.0);

    CHECK_THROWS_AS(StateVector(0), std::invalid_argument);
    CHECK_THROWS_AS(StateVector(25), std::invalid_argument);
    CHECK_THROWS_AS(prepare_state(GraphStateSpec(25, {}, {})), std::invalid_argument);
}

TEST_CASE("qubit 0 is the least significant bit of the basis index") {
    const GraphStateSpec spec(2, {}, {QubitPrep{0.0, kPi}, QubitPrep{0.0, 0.0}});
    const StateVector state = prepare_state(spec); // flips qubit 0 only
    CHECK(std::abs(state.amplitude(0b01)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(state.amplitude(0b10)) == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("prepare_state single-qubit cases") {
    SUBCASE("zero angles give |0>") {
        const StateVector state = prepare_state(GraphStateSpec(1, {}, {}));
        CHECK(std::abs(state.amplitude(0) - 1.0) < 1e-15);
        CHECK(std::abs(state.amplitude(1)) < 1e-15);
    }
    SUBCASE("theta = pi gives |1>") {
        const StateVector state =
            prepare_state(GraphStateSpec(1, {}, {QubitPrep{0.0, kPi}}));
        CHECK(std::abs(state.amplitude(0)) < 1e-12);
        CHECK(std::abs(state.amplitude(1)) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("general preparation matches cos/sin halves") {
        const double alpha = 0.9;
        const double theta = 1.7;
        const StateVector state =
            prepare_state(GraphStateSpec(1, {}, {QubitPrep{alpha, theta}}));
        // global phase exp(-i alpha/2) relative to cos(t/2)|0> + e^{i a} sin(t/2)|1>
        CHECK(std::abs(state.amplitude(0)) == doctest::Approx(std::cos(theta / 2)).epsilon(1e-12));
        CHECK(std::abs(state.amplitude(1)) ==
              doctest::Approx(std::sin(theta / 2)).epsilon(1e-12));
        const std::complex<double> relative = state.amplitude(1) / state.amplitude(0);
        CHECK(std::arg(relative) == doctest::Approx(alpha).epsilon(1e-12));
    }
}

TEST_CASE("prepare_state entangles a pair through one rxx arc") {
    const StateVector state =
        prepare_state(GraphStateSpec(2, {Arc{0, 1, kPi / 2}}, {}));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(state.amplitude(0b00).real() == doctest::Approx(inv_sqrt2).epsilon(1e-12));
    CHECK(std::abs(state.amplitude(0b00).imag()) < 1e-15);
    CHECK(std::abs(state.amplitude(0b01)) < 1e-15);
    CHECK(std::abs(state.amplitude(0b10)) < 1e-15);
    CHECK(state.amplitude(0b11).imag() == doctest::Approx(-inv_sqrt2).epsilon(1e-12));
    CHECK(std::abs(state.amplitude(0b11).real()) < 1e-15);
}

TEST_CASE("single-qubit rotations") {
    SUBCASE("ry(pi) maps |0> to |1>") {
        StateVector state(1);
        state.apply_ry(0, kPi);
        CHECK(std::abs(state.amplitude(1)) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("rz changes no probability") {
        std::mt19937_64 rng(11);
        StateVector state = test_support::random_state(rng, 4);
        const StateVector before = state;
        state.apply_rz(2, 0.77);
        for (std::size_t i = 0; i < state.dimension(); ++i) {
            CHECK(std::norm(state.amplitude(i)) ==
                  doctest::Approx(std::norm(before.amplitude(i))).scale(1.0).epsilon(1e-14));
        }
    }
    SUBCASE("rx(pi/2) then rx(-pi/2) is the identity") {
        std::mt19937_64 rng(12);
        StateVector state = test_support::random_state(rng, 4);
        const StateVector before = state;
        state.apply_rx(1, kPi / 2);
        state.apply_rx(1, -kPi / 2);
        CHECK(max_amplitude_diff(state, before) < 1e-12);
    }
    SUBCASE("index checks") {
        StateVector state(2);
        CHECK_THROWS_AS(state.apply_rx(2, 1.0), std::out_of_range);
        CHECK_THROWS_AS(state.apply_ry(-1, 1.0), std::out_of_range);
    }
}

TEST_CASE("rxx gate") {
    SUBCASE("phi = 0 is the identity") {
        std::mt19937_64 rng(13);
        StateVector state = test_support::random_state(rng, 5);
        const StateVector before = state;
        state.apply_rxx(1, 3, 0.0);
        CHECK(max_amplitude_diff(state, before) < 1e-15);
    }
    SUBCASE("angles add on the same pair") {
        std::mt19937_64 rng(14);
        for (int trial = 0; trial < 10; ++trial) {
            StateVector split = test_support::random_state(rng, 4);
            StateVector joined = split;
            std::uniform_real_distribution<double> angle(-kPi, kPi);
            const double a = angle(rng);
            const double b = angle(rng);
            split.apply_rxx(0, 2, a);
            split.apply_rxx(0, 2, b);
            joined.apply_rxx(0, 2, a + b);
            CHECK(max_amplitude_diff(split, joined) < 1e-12);
        }
    }
    SUBCASE("symmetric in its two qubits") {
        std::mt19937_64 rng(15);
        StateVector ij = test_support::random_state(rng, 5);
        StateVector ji = ij;
        ij.apply_rxx(1, 4, 0.83);
        ji.apply_rxx(4, 1, 0.83);
        CHECK(max_amplitude_diff(ij, ji) < 1e-15);
    }
    SUBCASE("distinct in-range qubits required") {
        StateVector state(3);
        CHECK_THROWS_AS(state.apply_rxx(1, 1, 0.5), std::invalid_argument);
        CHECK_THROWS_AS(state.apply_rxx(0, 3, 0.5), std::out_of_range);
    }
}

TEST_CASE("every gate preserves the norm") {
    std::mt19937_64 rng(16);
    StateVector state = test_support::random_state(rng, 6);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    std::uniform_int_distribution<int> qubit(0, 5);
    for (int step = 0; step < 100; ++step) {
        const int q = qubit(rng);
        switch (step % 4) {
        case 0: state.apply_rx(q, angle(rng)); break;
        case 1: state.apply_ry(q, angle(rng)); break;
        case 2: state.apply_rz(q, angle(rng)); break;
        default: {
            int r = qubit(rng);
            if (r == q) r = (r + 1) % 6;
            state.apply_rxx(q, r, angle(rng));
        }
        }
        CHECK(std::abs(state.norm_squared() - 1.0) < 1e-12);
    }
}

TEST_CASE("arc application order is irrelevant") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        const GraphStateSpec spec = test_support::random_spec(rng, 3, 6);
        const StateVector reference = prepare_state(spec);

        std::vector<Arc> shuffled = spec.arcs();
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        StateVector permuted(spec.num_qubits());
        for (int k = 0; k < spec.num_qubits(); ++k) {
            permuted.apply_ry(k, spec.prep(k).theta);
            permuted.apply_rz(k, spec.prep(k).alpha);
        }
        for (const Arc& arc : shuffled) permuted.apply_rxx(arc.from, arc.to, arc.weight);

        CHECK(max_amplitude_diff(reference, permuted) < 1e-12);
    }
}

TEST_CASE("pauli expectations") {
    SUBCASE("ground state") {
        const StateVector state(3);
        CHECK(state.expect_pauli(1, Axis::Z) == doctest::Approx(1.0));
        CHECK(state.expect_pauli(1, Axis::X) == doctest::Approx(0.0).scale(1.0));
        CHECK(state.expect_pauli(1, Axis::Y) == doctest::Approx(0.0).scale(1.0));
    }
    SUBCASE("chain middle at half-pi vanishes on every axis") {
        const StateVector state = prepare_state(chain3(kPi / 2, kPi / 2));
        for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
            CHECK(std::abs(state.expect_pauli(1, axis)) < 1e-12);
        }
    }
    SUBCASE("values stay in [-1, 1]") {
        std::mt19937_64 rng(18);
        const StateVector state = test_support::random_state(rng, 5);
        for (int q = 0; q < 5; ++q) {
            for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
                const double v = state.expect_pauli(q, axis);
                CHECK(v >= -1.0 - 1e-12);
                CHECK(v <= 1.0 + 1e-12);
            }
        }
    }
}

TEST_CASE("reduced_bloch") {
    SUBCASE("product-state qubits sit on the sphere") {
        const GraphStateSpec spec(2, {}, {QubitPrep{0.4, 1.1}, QubitPrep{-2.2, 0.6}});
        const StateVector state = prepare_state(spec);
        CHECK(state.reduced_bloch(0).norm() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(state.reduced_bloch(1).norm() == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("chain middle at quarter-pi") {
        const BlochVector b = prepare_state(chain3(kPi / 4, kPi / 4)).reduced_bloch(1);
        CHECK(std::abs(b.x) < 1e-12);
        CHECK(std::abs(b.y) < 1e-12);
        CHECK(b.z == doctest::Approx(0.5).epsilon(1e-12));
    }
}

TEST_CASE("merging parallel arcs leaves the prepared state unchanged") {
    // The parser folds "arc 0 1 a" + "arc 0 1 b" into one arc of weight a+b;
    // applying the two couplings separately must produce the same state.
    const GraphStateSpec merged = parse_graph(
        "qubits 3\narc 0 1 0.5\narc 0 1 0.25\narc 1 2 -0.9\nprep 0 0.3 1.1\n");
    REQUIRE(merged.arcs().size() == 2);
    const StateVector from_merged = prepare_state(merged);

    StateVector unmerged(3);
    unmerged.apply_ry(0, 1.1);
    unmerged.apply_rz(0, 0.3);
    unmerged.apply_rxx(0, 1, 0.5);
    unmerged.apply_rxx(0, 1, 0.25);
    unmerged.apply_rxx(1, 2, -0.9);

    CHECK(max_amplitude_diff(from_merged, unmerged) < 1e-12);
    for (int k = 0; k < 3; ++k) {
        CHECK(entanglement_from_bloch(from_merged.reduced_bloch(k)) ==
              doctest::Approx(entanglement_from_bloch(unmerged.reduced_bloch(k)))
                  .scale(1.0)
                  .epsilon(1e-12));
    }
}

TEST_CASE("exact simulation agrees with the closed form on random digraphs") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 50; ++trial) {
        const GraphStateSpec spec = test_support::random_spec(rng);
        const StateVector state = prepare_state(spec);
        for (int k = 0; k < spec.num_qubits(); ++k) {
            const BlochVector sim = state.reduced_bloch(k);
            const BlochVector analytic = bloch_vector_analytic(spec, k);
            CHECK(std::abs(sim.x - analytic.x) < 1e-10);
            CHECK(std::abs(sim.y - analytic.y) < 1e-10);
            CHECK(std::abs(sim.z - analytic.z) < 1e-10);
            CHECK(std::abs(entanglement_exact(spec, k).value -
                           entanglement_analytic(spec, k).value) < 1e-10);
        }
    }
}

TEST_CASE("sample_marginal") {
    SUBCASE("certain outcome") {
        const StateVector state(4);
        const ShotCounts counts = sample_marginal(state, 2, 1024, 99);
        CHECK(counts.n0 == 1024);
        CHECK(counts.n1 == 0);
        CHECK(counts.shots() == 1024);
        CHECK(counts.seed == 99);
    }
    SUBCASE("impossible outcome") {
        StateVector state(1);
        state.apply_ry(0, kPi);
        const ShotCounts counts = sample_marginal(state, 0, 512, 3);
        CHECK(counts.n0 == 0);
        CHECK(counts.n1 == 512);
    }
    SUBCASE("same seed reproduces the counts exactly") {
        StateVector state(2);
        state.apply_ry(0, kPi / 2);
        const ShotCounts a = sample_marginal(state, 0, 1024, 7);
        const ShotCounts b = sample_marginal(state, 0, 1024, 7);
        CHECK(a.n0 == b.n0);
        CHECK(a.n1 == b.n1);
        const ShotCounts c = sample_marginal(state, 0, 1024, 10);
        CHECK((c.n0 != a.n0 || c.n1 != a.n1));
    }
    SUBCASE("balanced marginal lands within five sigma") {
        StateVector state(1);
        state.apply_ry(0, kPi / 2); // p0 = 1/2
        const ShotCounts counts = sample_marginal(state, 0, 1024, 7);
        CHECK(counts.n0 >= 432); // 512 - 5 * 16
        CHECK(counts.n0 <= 592); // 512 + 5 * 16
    }
    SUBCASE("zero shots rejected") {
        const StateVector state(1);
        CHECK_THROWS_AS(sample_marginal(state, 0, 0, 1), std::invalid_argument);
    }
}

TEST_CASE("sampled frequencies track the exact marginal across random states") {
    std::mt19937_64 rng(20);
    for (int trial = 0; trial < 10; ++trial) {
        const StateVector state = test_support::random_state(rng, 4);
        const int qubit = trial % 4;
        const double p0 = state.marginal_p0(qubit);
        const std::uint64_t shots = 4096;
        const ShotCounts counts = sample_marginal(state, qubit, shots, 1000 + trial);
        const double freq = static_cast<double>(counts.n0) / static_cast<double>(shots);
        const double sigma = std::sqrt(p0 * (1.0 - p0) / static_cast<double>(shots));
        CHECK(std::abs(freq - p0) <= 5.0 * sigma + 1e-12);
    }
}

TEST_CASE("derive_seed separates streams deterministically") {
    CHECK(derive_seed(7, 0) == derive_seed(7, 0));
    CHECK(derive_seed(7, 0) != derive_seed(7, 1));
    CHECK(derive_seed(7, 0) != derive_seed(8, 0));
}
