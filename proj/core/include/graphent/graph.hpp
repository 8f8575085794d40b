#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace graphent {

/// Directed arc i -> j carrying a coupling angle in radians.
struct Arc {
    int from = 0;
    int to = 0;
    double weight = 0.0;
};

/// Single-qubit preparation angles: RZ(alpha) RY(theta) |0>.
struct QubitPrep {
    double alpha = 0.0;
    double theta = 0.0;
};

struct WeightedNeighbor {
    int vertex = 0;
    double weight = 0.0;
};

/// Vertex connected by a pair of antiparallel arcs; the pair acts as a
/// single coupling of angle weight_in + weight_out.
struct BidirectedNeighbor {
    int vertex = 0;
    double weight_in = 0.0;
    double weight_out = 0.0;
};

/// Partition of the arcs incident to a fixed vertex k. The three vertex
/// sets are pairwise disjoint and never contain k itself.
struct NeighborClassification {
    std::vector<WeightedNeighbor> ingoing;      // arc m->k only
    std::vector<WeightedNeighbor> outgoing;     // arc k->n only
    std::vector<BidirectedNeighbor> bidirected; // both l->k and k->l
};

struct Degrees {
    int in = 0;
    int out = 0;
};

/// Parse failure with the 1-based line number of the offending input line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// Directed weighted graph plus per-qubit preparation angles; the complete
/// description of a graph state. Immutable after construction: the
/// constructor validates (no self-loops, indices in range, finite weights)
/// and normalizes (parallel same-direction arcs merged by weight summation,
/// arcs sorted by (from, to)).
class GraphStateSpec {
public:
    GraphStateSpec(int num_qubits, std::vector<Arc> arcs, std::vector<QubitPrep> preps);

    int num_qubits() const noexcept { return num_qubits_; }
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }
    const std::vector<QubitPrep>& preps() const noexcept { return preps_; }
    const QubitPrep& prep(int k) const;

    /// Copy with the weight of an existing arc replaced; throws
    /// std::invalid_argument if no arc from->to is present.
    GraphStateSpec with_arc_weight(int from, int to, double weight) const;
    GraphStateSpec with_alpha(int k, double alpha) const;
    GraphStateSpec with_theta(int k, double theta) const;

private:
    int num_qubits_;
    std::vector<Arc> arcs_;
    std::vector<QubitPrep> preps_;
};

/// Parse the line-oriented graph file format:
///
///   # comment
///   qubits <V>
///   prep <k> <alpha> <theta>     (optional, defaults to 0 0)
///   arc <i> <j> <phi>            (directed i->j, weight phi radians)
///
/// Angle tokens are decimal floats or pi fractions (pi, -pi/2, pi/16, ...).
/// The qubits header must precede every prep/arc line.
GraphStateSpec parse_graph(std::string_view text);

GraphStateSpec load_graph_file(const std::string& path);

/// Write the normalized form (merged arcs sorted by (from, to); prep lines
/// only for qubits with nonzero angles). parse(serialize(s)) == s.
std::string serialize_graph(const GraphStateSpec& spec);

/// Angle token parser shared by the file format and the CLI: "pi",
/// "pi/<d>", "-pi/<d>" or a decimal float. Throws std::invalid_argument.
double parse_angle(std::string_view token);

NeighborClassification classify_neighbors(const GraphStateSpec& spec, int k);

Degrees degrees(const GraphStateSpec& spec, int k);

} // namespace graphent
