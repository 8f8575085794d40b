#include "graphent/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <utility>

namespace graphent {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
        std::size_t start = pos;
        while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
        if (pos > start) fields.push_back(line.substr(start, pos - start));
    }
    return fields;
}

int parse_index(std::string_view token, int line) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0) {
        throw ParseError(line, "expected a nonnegative integer, got '" + std::string(token) + "'");
    }
    return value;
}

double parse_angle_at(std::string_view token, int line) {
    try {
        return parse_angle(token);
    } catch (const std::invalid_argument& e) {
        throw ParseError(line, e.what());
    }
}

} // namespace

double parse_angle(std::string_view token) {
    std::string_view rest = token;
    double sign = 1.0;
    if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
        if (rest.front() == '-') sign = -1.0;
        rest.remove_prefix(1);
    }
    if (rest == "pi") return sign * std::numbers::pi;
    if (rest.size() > 3 && rest.substr(0, 3) == "pi/") {
        std::string_view denom = rest.substr(3);
        double d = 0.0;
        auto [ptr, ec] = std::from_chars(denom.data(), denom.data() + denom.size(), d);
        if (ec != std::errc{} || ptr != denom.data() + denom.size() || d == 0.0) {
            throw std::invalid_argument("bad pi fraction '" + std::string(token) + "'");
        }
        return sign * std::numbers::pi / d;
    }
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
    if (ec != std::errc{} || ptr != rest.data() + rest.size()) {
        throw std::invalid_argument("bad angle token '" + std::string(token) + "'");
    }
    if (!std::isfinite(value)) {
        throw std::invalid_argument("angle must be finite, got '" + std::string(token) + "'");
    }
    return sign * value;
}

GraphStateSpec::GraphStateSpec(int num_qubits, std::vector<Arc> arcs, std::vector<QubitPrep> preps)
    : num_qubits_(num_qubits), preps_(std::move(preps)) {
    if (num_qubits_ < 1) {
        throw std::invalid_argument("graph needs at least one qubit");
    }
    if (preps_.empty()) {
        preps_.resize(static_cast<std::size_t>(num_qubits_));
    }
    if (preps_.size() != static_cast<std::size_t>(num_qubits_)) {
        throw std::invalid_argument("prep list length does not match qubit count");
    }
    for (const QubitPrep& p : preps_) {
        if (!std::isfinite(p.alpha) || !std::isfinite(p.theta)) {
            throw std::invalid_argument("preparation angles must be finite");
        }
    }

    // Merge parallel same-direction arcs: RXX(a) RXX(b) = RXX(a+b).
    std::map<std::pair<int, int>, double> merged;
    for (const Arc& arc : arcs) {
        if (arc.from == arc.to) {
            throw std::invalid_argument("self-loop on vertex " + std::to_string(arc.from));
        }
        if (arc.from < 0 || arc.from >= num_qubits_ || arc.to < 0 || arc.to >= num_qubits_) {
            throw std::invalid_argument("arc " + std::to_string(arc.from) + "->" +
                                        std::to_string(arc.to) + " references a vertex outside [0, " +
                                        std::to_string(num_qubits_) + ")");
        }
        if (!std::isfinite(arc.weight)) {
            throw std::invalid_argument("arc weight must be finite");
        }
        merged[{arc.from, arc.to}] += arc.weight;
    }
    arcs_.reserve(merged.size());
    for (const auto& [key, weight] : merged) {
        arcs_.push_back(Arc{key.first, key.second, weight});
    }
}

const QubitPrep& GraphStateSpec::prep(int k) const {
    if (k < 0 || k >= num_qubits_) {
        throw std::out_of_range("qubit index " + std::to_string(k) + " outside [0, " +
                                std::to_string(num_qubits_) + ")");
    }
    return preps_[static_cast<std::size_t>(k)];
}

GraphStateSpec GraphStateSpec::with_arc_weight(int from, int to, double weight) const {
    std::vector<Arc> arcs = arcs_;
    auto it = std::find_if(arcs.begin(), arcs.end(),
                           [&](const Arc& a) { return a.from == from && a.to == to; });
    if (it == arcs.end()) {
        throw std::invalid_argument("no arc " + std::to_string(from) + "->" + std::to_string(to));
    }
    it->weight = weight;
    return GraphStateSpec(num_qubits_, std::move(arcs), preps_);
}

GraphStateSpec GraphStateSpec::with_alpha(int k, double alpha) const {
    prep(k); // range check
    std::vector<QubitPrep> preps = preps_;
    preps[static_cast<std::size_t>(k)].alpha = alpha;
    return GraphStateSpec(num_qubits_, arcs_, std::move(preps));
}

GraphStateSpec GraphStateSpec::with_theta(int k, double theta) const {
    prep(k);
    std::vector<QubitPrep> preps = preps_;
    preps[static_cast<std::size_t>(k)].theta = theta;
    return GraphStateSpec(num_qubits_, arcs_, std::move(preps));
}

GraphStateSpec parse_graph(std::string_view text) {
    int num_qubits = -1;
    std::vector<Arc> arcs;
    std::vector<QubitPrep> preps;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (std::size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        std::vector<std::string_view> fields = split_fields(line);
        if (fields.empty()) continue;

        std::string_view keyword = fields[0];
        if (keyword == "qubits") {
            if (num_qubits >= 0) throw ParseError(line_no, "duplicate qubits header");
            if (fields.size() != 2) throw ParseError(line_no, "usage: qubits <V>");
            num_qubits = parse_index(fields[1], line_no);
            if (num_qubits < 1) throw ParseError(line_no, "qubit count must be positive");
            preps.assign(static_cast<std::size_t>(num_qubits), QubitPrep{});
        } else if (keyword == "prep") {
            if (num_qubits < 0) throw ParseError(line_no, "missing qubits header");
            if (fields.size() != 4) throw ParseError(line_no, "usage: prep <k> <alpha> <theta>");
            int k = parse_index(fields[1], line_no);
            if (k >= num_qubits) {
                throw ParseError(line_no, "qubit " + std::to_string(k) + " outside [0, " +
                                              std::to_string(num_qubits) + ")");
            }
            preps[static_cast<std::size_t>(k)] = QubitPrep{parse_angle_at(fields[2], line_no),
                                                           parse_angle_at(fields[3], line_no)};
        } else if (keyword == "arc") {
            if (num_qubits < 0) throw ParseError(line_no, "missing qubits header");
            if (fields.size() != 4) throw ParseError(line_no, "usage: arc <i> <j> <phi>");
            int i = parse_index(fields[1], line_no);
            int j = parse_index(fields[2], line_no);
            double phi = parse_angle_at(fields[3], line_no);
            if (i == j) throw ParseError(line_no, "self-loop on vertex " + std::to_string(i));
            if (i >= num_qubits || j >= num_qubits) {
                throw ParseError(line_no, "arc " + std::to_string(i) + "->" + std::to_string(j) +
                                              " references a vertex outside [0, " +
                                              std::to_string(num_qubits) + ")");
            }
            arcs.push_back(Arc{i, j, phi});
        } else {
            throw ParseError(line_no, "unknown keyword '" + std::string(keyword) + "'");
        }
    }

    if (num_qubits < 0) throw ParseError(line_no, "missing qubits header");
    return GraphStateSpec(num_qubits, std::move(arcs), std::move(preps));
}

GraphStateSpec load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open graph file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
}

std::string serialize_graph(const GraphStateSpec& spec) {
    std::ostringstream out;
    out.precision(17);
    out << "qubits " << spec.num_qubits() << '\n';
    for (int k = 0; k < spec.num_qubits(); ++k) {
        const QubitPrep& p = spec.prep(k);
        if (p.alpha != 0.0 || p.theta != 0.0) {
            out << "prep " << k << ' ' << p.alpha << ' ' << p.theta << '\n';
        }
    }
    for (const Arc& arc : spec.arcs()) {
        out << "arc " << arc.from << ' ' << arc.to << ' ' << arc.weight << '\n';
    }
    return out.str();
}

NeighborClassification classify_neighbors(const GraphStateSpec& spec, int k) {
    spec.prep(k); // range check
    NeighborClassification result;
    // Arcs are normalized, so each ordered pair appears at most once.
    std::map<int, double> in_weight;
    std::map<int, double> out_weight;
    for (const Arc& arc : spec.arcs()) {
        if (arc.to == k) in_weight[arc.from] = arc.weight;
        if (arc.from == k) out_weight[arc.to] = arc.weight;
    }
    for (const auto& [vertex, weight] : in_weight) {
        auto out = out_weight.find(vertex);
        if (out != out_weight.end()) {
            result.bidirected.push_back(BidirectedNeighbor{vertex, weight, out->second});
        } else {
            result.ingoing.push_back(WeightedNeighbor{vertex, weight});
        }
    }
    for (const auto& [vertex, weight] : out_weight) {
        if (!in_weight.contains(vertex)) {
            result.outgoing.push_back(WeightedNeighbor{vertex, weight});
        }
    }
    return result;
}

Degrees degrees(const GraphStateSpec& spec, int k) {
    spec.prep(k); // range check
    Degrees d;
    for (const Arc& arc : spec.arcs()) {
        if (arc.to == k) ++d.in;
        if (arc.from == k) ++d.out;
    }
    return d;
}

} // namespace graphent
