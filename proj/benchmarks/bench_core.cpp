#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "graphent/analytic.hpp"
#include "graphent/graph.hpp"
#include "graphent/protocol.hpp"
#include "graphent/statevector.hpp"
#include "graphent/sweep.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

graphent::GraphStateSpec chain_spec(int qubits, double phi) {
    std::vector<graphent::Arc> arcs;
    for (int k = 0; k + 1 < qubits; ++k) arcs.push_back(graphent::Arc{k, k + 1, phi});
    return graphent::GraphStateSpec(qubits, std::move(arcs), {});
}

graphent::GraphStateSpec random_digraph(int qubits, double arc_probability, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<graphent::Arc> arcs;
    for (int i = 0; i < qubits; ++i) {
        for (int j = 0; j < qubits; ++j) {
            if (i != j && coin(rng) < arc_probability) {
                arcs.push_back(graphent::Arc{i, j, angle(rng)});
            }
        }
    }
    std::vector<graphent::QubitPrep> preps;
    for (int k = 0; k < qubits; ++k) preps.push_back({angle(rng), angle(rng)});
    return graphent::GraphStateSpec(qubits, std::move(arcs), std::move(preps));
}

void BM_ApplyRxx(benchmark::State& state) {
    const int qubits = static_cast<int>(state.range(0));
    graphent::StateVector sv(qubits);
    int i = 0;
    for (auto _ : state) {
        sv.apply_rxx(i % qubits, (i + qubits / 2) % qubits, 0.3);
        ++i;
        benchmark::DoNotOptimize(sv.amplitudes().data());
    }
    state.SetItemsProcessed(state.iterations() * (int64_t{1} << qubits));
}
BENCHMARK(BM_ApplyRxx)->Arg(12)->Arg(16)->Arg(20);

void BM_ApplyRy(benchmark::State& state) {
    const int qubits = static_cast<int>(state.range(0));
    graphent::StateVector sv(qubits);
    int k = 0;
    for (auto _ : state) {
        sv.apply_ry(k++ % qubits, 0.7);
        benchmark::DoNotOptimize(sv.amplitudes().data());
    }
    state.SetItemsProcessed(state.iterations() * (int64_t{1} << qubits));
}
BENCHMARK(BM_ApplyRy)->Arg(12)->Arg(16)->Arg(20);

void BM_PrepareChain(benchmark::State& state) {
    const auto spec = chain_spec(static_cast<int>(state.range(0)), kPi / 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(graphent::prepare_state(spec).amplitudes().data());
    }
}
BENCHMARK(BM_PrepareChain)->Arg(10)->Arg(16)->Arg(20);

void BM_ReducedBloch(benchmark::State& state) {
    const auto spec = chain_spec(static_cast<int>(state.range(0)), kPi / 3);
    const graphent::StateVector sv = graphent::prepare_state(spec);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sv.reduced_bloch(1));
    }
}
BENCHMARK(BM_ReducedBloch)->Arg(10)->Arg(16);

void BM_AnalyticEntanglement(benchmark::State& state) {
    const auto spec = random_digraph(static_cast<int>(state.range(0)), 0.1, 99);
    for (auto _ : state) {
        for (int k = 0; k < spec.num_qubits(); ++k) {
            benchmark::DoNotOptimize(graphent::entanglement_analytic(spec, k).value);
        }
    }
    state.SetItemsProcessed(state.iterations() * spec.num_qubits());
}
BENCHMARK(BM_AnalyticEntanglement)->Arg(16)->Arg(128)->Arg(512);

void BM_SampleMarginal(benchmark::State& state) {
    const auto spec = chain_spec(10, kPi / 3);
    const graphent::StateVector sv = graphent::prepare_state(spec);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(graphent::sample_marginal(sv, 5, state.range(0), ++seed).n0);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleMarginal)->Arg(1024)->Arg(1 << 20);

void BM_EstimateEntanglement(benchmark::State& state) {
    const auto spec = chain_spec(3, kPi / 2);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            graphent::estimate_entanglement(spec, 1, state.range(0), ++seed).value);
    }
}
BENCHMARK(BM_EstimateEntanglement)->Arg(1024)->Arg(1 << 16);

void BM_WeightSweepGrid(benchmark::State& state) {
    const auto spec = chain_spec(3, 0.0);
    graphent::SweepSpec sweep;
    sweep.targets = {graphent::SweepTarget::parse("arc:0:1"),
                     graphent::SweepTarget::parse("arc:1:2")};
    sweep.from = 0.0;
    sweep.to = kPi;
    sweep.step = kPi / 16;
    for (auto _ : state) {
        benchmark::DoNotOptimize(graphent::run_sweep(spec, 1, sweep, {}).size());
    }
}
BENCHMARK(BM_WeightSweepGrid);

} // namespace

BENCHMARK_MAIN();
