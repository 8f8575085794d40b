// Command-line surface for graph-state entanglement: closed-form evaluation,
// exact simulation, the shot-based measurement protocol, and CSV parameter
// sweeps over arc weights and preparation angles.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "graphent/analytic.hpp"
#include "graphent/graph.hpp"
#include "graphent/protocol.hpp"
#include "graphent/statevector.hpp"
#include "graphent/sweep.hpp"

namespace {

constexpr int kExitCompareFailed = 1;
constexpr int kExitError = 2;

using graphent::format_number;

std::string format_bloch(const graphent::BlochVector& b) {
    return "(" + format_number(b.x) + ", " + format_number(b.y) + ", " + format_number(b.z) + ")";
}

std::string format_neighbors(const std::vector<graphent::WeightedNeighbor>& list) {
    std::string out = "[";
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(list[i].vertex) + " (" + format_number(list[i].weight) + ")";
    }
    return out + "]";
}

std::string format_bidirected(const std::vector<graphent::BidirectedNeighbor>& list) {
    std::string out = "[";
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(list[i].vertex) + " (" + format_number(list[i].weight_in) + " in, " +
               format_number(list[i].weight_out) + " out)";
    }
    return out + "]";
}

void print_shot_estimate(const graphent::EntanglementEstimate& est) {
    std::cout << "E_shots: " << format_number(est.value) << " +/- "
              << format_number(est.std_error.value_or(0.0)) << '\n';
    if (est.std_error_unreliable) {
        std::cout << "note: stderr unreliable near maximal entanglement\n";
    }
}

int run_analytic(const std::string& graph_path, int qubit) {
    const graphent::GraphStateSpec spec = graphent::load_graph_file(graph_path);
    const graphent::NeighborClassification nbrs = graphent::classify_neighbors(spec, qubit);
    const graphent::Degrees deg = graphent::degrees(spec, qubit);
    const graphent::BlochVector bloch = graphent::bloch_vector_analytic(spec, qubit);

    std::cout << "qubit: " << qubit << '\n';
    std::cout << "indegree: " << deg.in << '\n';
    std::cout << "outdegree: " << deg.out << '\n';
    std::cout << "ingoing: " << format_neighbors(nbrs.ingoing) << '\n';
    std::cout << "outgoing: " << format_neighbors(nbrs.outgoing) << '\n';
    std::cout << "bidirected: " << format_bidirected(nbrs.bidirected) << '\n';
    std::cout << "bloch: " << format_bloch(bloch) << '\n';
    std::cout << "E_analytic: " << format_number(graphent::entanglement_analytic(spec, qubit).value)
              << '\n';
    return 0;
}

int run_simulate(const std::string& graph_path, int qubit, std::uint64_t shots,
                 std::uint64_t seed) {
    const graphent::GraphStateSpec spec = graphent::load_graph_file(graph_path);
    const graphent::EntanglementEstimate shot_est =
        graphent::estimate_entanglement(spec, qubit, shots, seed);

    std::cout << "qubit: " << qubit << '\n';
    std::cout << "shots: " << shots << '\n';
    std::cout << "seed: " << seed << '\n';
    print_shot_estimate(shot_est);
    std::cout << "E_exact: " << format_number(graphent::entanglement_exact(spec, qubit).value)
              << '\n';
    std::cout << "E_analytic: " << format_number(graphent::entanglement_analytic(spec, qubit).value)
              << '\n';
    return 0;
}

int run_sweep_cmd(const std::string& graph_path, int qubit,
                  const std::vector<std::string>& vary, const std::string& from_token,
                  const std::string& to_token, const std::string& step_token,
                  std::optional<std::uint64_t> shots, std::uint64_t seed,
                  const std::string& out_path) {
    if (vary.empty() || vary.size() > 2) {
        throw std::invalid_argument("sweep takes one or two --vary targets, got " +
                                    std::to_string(vary.size()));
    }
    const graphent::GraphStateSpec spec = graphent::load_graph_file(graph_path);

    graphent::SweepSpec sweep;
    for (const std::string& token : vary) {
        sweep.targets.push_back(graphent::SweepTarget::parse(token));
    }
    sweep.from = graphent::parse_angle(from_token);
    sweep.to = graphent::parse_angle(to_token);
    sweep.step = graphent::parse_angle(step_token);

    graphent::SweepOptions options;
    options.shots = shots;
    options.seed = seed;

    const std::vector<graphent::SweepRow> rows =
        graphent::run_sweep(spec, qubit, sweep, options);

    std::ofstream out(out_path);
    if (!out) {
        throw std::runtime_error("cannot write '" + out_path + "'");
    }
    graphent::write_sweep_csv(out, rows);
    if (!out.flush()) {
        throw std::runtime_error("write to '" + out_path + "' failed");
    }
    std::cout << "wrote " << rows.size() << " rows to " << out_path << '\n';
    return 0;
}

int run_compare(const std::string& graph_path, int qubit, std::uint64_t shots,
                std::uint64_t seed, double analytic_bias) {
    const graphent::GraphStateSpec spec = graphent::load_graph_file(graph_path);
    const double e_analytic =
        graphent::entanglement_analytic(spec, qubit).value + analytic_bias;
    const double e_exact = graphent::entanglement_exact(spec, qubit).value;
    const graphent::EntanglementEstimate shot_est =
        graphent::estimate_entanglement(spec, qubit, shots, seed);

    std::cout << "E_analytic: " << format_number(e_analytic) << '\n';
    std::cout << "E_exact: " << format_number(e_exact) << '\n';
    print_shot_estimate(shot_est);

    const double closed_form_diff = std::abs(e_analytic - e_exact);
    const double shot_diff = std::abs(shot_est.value - e_exact);
    const double shot_bound = 5.0 * shot_est.std_error.value_or(0.0);

    bool ok = true;
    std::cout << "analytic vs exact: |diff| = " << format_number(closed_form_diff)
              << " (tolerance 1e-10)\n";
    if (closed_form_diff > 1e-10) ok = false;
    std::cout << "shots vs exact: |diff| = " << format_number(shot_diff)
              << " (bound 5*stderr = " << format_number(shot_bound) << ")\n";
    if (shot_diff > shot_bound) ok = false;

    std::cout << (ok ? "PASS" : "FAIL") << '\n';
    return ok ? 0 : kExitCompareFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entanglement of graph states built from RXX couplings on a directed "
                 "weighted graph"};
    app.require_subcommand(1);

    std::string graph_path;
    int qubit = 0;
    std::uint64_t shots = 1024;
    std::uint64_t seed = 7;
    std::vector<std::string> vary;
    std::string from_token = "0";
    std::string to_token = "pi";
    std::string step_token = "pi/16";
    std::string out_path;
    double analytic_bias = 0.0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--graph", graph_path, "graph file")->required();
        cmd->add_option("--qubit", qubit, "qubit index")->required();
    };

    CLI::App* analytic = app.add_subcommand("analytic", "closed-form entanglement of one qubit");
    add_common(analytic);

    CLI::App* simulate =
        app.add_subcommand("simulate", "shot-based protocol vs exact simulation");
    add_common(simulate);
    simulate->add_option("--shots", shots, "shots per axis")->check(CLI::PositiveNumber);
    simulate->add_option("--seed", seed, "master seed");

    CLI::App* sweep = app.add_subcommand("sweep", "parameter sweep to CSV");
    add_common(sweep);
    sweep->add_option("--vary", vary, "sweep target: arc:i:j | alpha:k | theta:k | alpha:* | theta:*");
    sweep->add_option("--from", from_token, "range start (angle token)");
    sweep->add_option("--to", to_token, "range end (angle token)");
    sweep->add_option("--step", step_token, "grid step (angle token)");
    std::uint64_t sweep_shots = 0;
    CLI::Option* sweep_shots_opt =
        sweep->add_option("--shots", sweep_shots, "also run the shot protocol per grid point")
            ->check(CLI::PositiveNumber);
    sweep->add_option("--seed", seed, "master seed");
    sweep->add_option("--out", out_path, "output CSV path")->required();

    CLI::App* compare = app.add_subcommand("compare", "cross-check the three paths; exit 0 on agreement");
    add_common(compare);
    compare->add_option("--shots", shots, "shots per axis")->check(CLI::PositiveNumber);
    compare->add_option("--seed", seed, "master seed");
    compare->add_option("--inject-analytic-bias", analytic_bias)->group(""); // test hook

    CLI11_PARSE(app, argc, argv);

    try {
        if (analytic->parsed()) return run_analytic(graph_path, qubit);
        if (simulate->parsed()) return run_simulate(graph_path, qubit, shots, seed);
        if (sweep->parsed()) {
            std::optional<std::uint64_t> maybe_shots;
            if (sweep_shots_opt->count() > 0) maybe_shots = sweep_shots;
            return run_sweep_cmd(graph_path, qubit, vary, from_token, to_token, step_token,
                                 maybe_shots, seed, out_path);
        }
        if (compare->parsed()) return run_compare(graph_path, qubit, shots, seed, analytic_bias);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
