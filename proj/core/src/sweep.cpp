#include "graphent/sweep.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "graphent/analytic.hpp"
#include "graphent/protocol.hpp"
#include "graphent/statevector.hpp"

namespace graphent {

namespace {

constexpr double kCrossCheckTolerance = 1e-10;

int parse_target_index(std::string_view token) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0) {
        throw std::invalid_argument("bad vertex index '" + std::string(token) + "' in sweep target");
    }
    return value;
}

} // namespace

SweepTarget SweepTarget::parse(std::string_view token) {
    const std::size_t colon = token.find(':');
    if (colon == std::string_view::npos) {
        throw std::invalid_argument("sweep target '" + std::string(token) +
                                    "' (expected arc:i:j, alpha:k, theta:k, alpha:* or theta:*)");
    }
    const std::string_view head = token.substr(0, colon);
    const std::string_view rest = token.substr(colon + 1);

    SweepTarget target;
    if (head == "arc") {
        const std::size_t second = rest.find(':');
        if (second == std::string_view::npos) {
            throw std::invalid_argument("arc sweep target needs two indices, got '" +
                                        std::string(token) + "'");
        }
        target.kind = Kind::ArcWeight;
        target.from = parse_target_index(rest.substr(0, second));
        target.to = parse_target_index(rest.substr(second + 1));
        if (target.from == target.to) {
            throw std::invalid_argument("arc sweep target is a self-loop");
        }
        return target;
    }
    if (head == "alpha" || head == "theta") {
        const bool is_alpha = head == "alpha";
        if (rest == "*") {
            target.kind = is_alpha ? Kind::AllAlpha : Kind::AllTheta;
            return target;
        }
        target.kind = is_alpha ? Kind::Alpha : Kind::Theta;
        target.qubit = parse_target_index(rest);
        return target;
    }
    throw std::invalid_argument("unknown sweep target kind '" + std::string(head) + "'");
}

std::string SweepTarget::label() const {
    switch (kind) {
    case Kind::ArcWeight:
        return "arc:" + std::to_string(from) + ":" + std::to_string(to);
    case Kind::Alpha:
        return "alpha:" + std::to_string(qubit);
    case Kind::Theta:
        return "theta:" + std::to_string(qubit);
    case Kind::AllAlpha:
        return "alpha:*";
    case Kind::AllTheta:
        return "theta:*";
    }
    return {};
}

GraphStateSpec SweepTarget::apply(const GraphStateSpec& spec, double value) const {
    switch (kind) {
    case Kind::ArcWeight:
        return spec.with_arc_weight(from, to, value);
    case Kind::Alpha:
        return spec.with_alpha(qubit, value);
    case Kind::Theta:
        return spec.with_theta(qubit, value);
    case Kind::AllAlpha: {
        GraphStateSpec out = spec;
        for (int k = 0; k < spec.num_qubits(); ++k) out = out.with_alpha(k, value);
        return out;
    }
    case Kind::AllTheta: {
        GraphStateSpec out = spec;
        for (int k = 0; k < spec.num_qubits(); ++k) out = out.with_theta(k, value);
        return out;
    }
    }
    return spec;
}

std::vector<double> grid_values(double from, double to, double step) {
    if (step <= 0.0) throw std::invalid_argument("sweep step must be positive");
    if (from > to) throw std::invalid_argument("sweep range has from > to");
    // Relative slack so an exactly-dividing step lands on the far endpoint.
    const std::size_t count =
        static_cast<std::size_t>(std::floor((to - from) / step + 1e-9)) + 1;
    std::vector<double> values;
    values.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        values.push_back(from + static_cast<double>(i) * step);
    }
    return values;
}

std::vector<SweepRow> run_sweep(const GraphStateSpec& spec, int k, const SweepSpec& sweep,
                                const SweepOptions& options) {
    if (sweep.targets.empty() || sweep.targets.size() > 2) {
        throw std::invalid_argument("sweep needs one or two targets, got " +
                                    std::to_string(sweep.targets.size()));
    }
    spec.prep(k); // range check

    const std::vector<double> values = grid_values(sweep.from, sweep.to, sweep.step);
    const bool two_dim = sweep.targets.size() == 2;
    const std::size_t inner = two_dim ? values.size() : 1;

    std::vector<SweepRow> rows;
    rows.reserve(values.size() * inner);
    for (std::size_t i = 0; i < values.size(); ++i) {
        const GraphStateSpec outer_spec = sweep.targets[0].apply(spec, values[i]);
        for (std::size_t j = 0; j < inner; ++j) {
            const GraphStateSpec point_spec =
                two_dim ? sweep.targets[1].apply(outer_spec, values[j]) : outer_spec;

            SweepRow row;
            row.param1 = values[i];
            if (two_dim) row.param2 = values[j];
            row.e_analytic = entanglement_analytic(point_spec, k).value;
            row.e_exact = entanglement_exact(point_spec, k).value;
            if (std::abs(row.e_analytic - row.e_exact) > kCrossCheckTolerance) {
                throw std::runtime_error(
                    "closed form and exact simulation disagree at grid point (" +
                    format_number(row.param1) +
                    (row.param2 ? ", " + format_number(*row.param2) : std::string{}) +
                    "): " + format_number(row.e_analytic) + " vs " + format_number(row.e_exact));
            }
            if (options.shots) {
                const std::uint64_t point_seed =
                    derive_seed(options.seed, i * inner + j);
                const EntanglementEstimate est =
                    estimate_entanglement(point_spec, k, *options.shots, point_seed);
                row.e_shots = est.value;
                row.std_error = est.std_error;
            }
            rows.push_back(row);
        }
    }
    return rows;
}

std::string format_number(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    if (rows.empty()) return;
    const bool two_dim = rows.front().param2.has_value();
    const bool with_shots = rows.front().e_shots.has_value();
    os << "param1";
    if (two_dim) os << ",param2";
    os << ",E_analytic,E_exact";
    if (with_shots) os << ",E_shots,stderr";
    os << '\n';
    for (const SweepRow& row : rows) {
        os << format_number(row.param1);
        if (two_dim) os << ',' << format_number(*row.param2);
        os << ',' << format_number(row.e_analytic) << ',' << format_number(row.e_exact);
        if (with_shots) {
            os << ',' << format_number(*row.e_shots) << ','
               << format_number(row.std_error.value_or(0.0));
        }
        os << '\n';
    }
}

} // namespace graphent
