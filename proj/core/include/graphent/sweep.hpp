#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "graphent/graph.hpp"

namespace graphent {

/// One swept parameter: an arc weight, a single qubit's preparation angle,
/// or the same preparation angle on every qubit at once.
struct SweepTarget {
    enum class Kind { ArcWeight, Alpha, Theta, AllAlpha, AllTheta };

    Kind kind = Kind::ArcWeight;
    int from = -1; // ArcWeight
    int to = -1;   // ArcWeight
    int qubit = -1; // Alpha / Theta

    /// Token syntax: "arc:i:j" | "alpha:k" | "theta:k" | "alpha:*" | "theta:*".
    static SweepTarget parse(std::string_view token);

    std::string label() const;

    GraphStateSpec apply(const GraphStateSpec& spec, double value) const;
};

/// 1-D or 2-D grid over [from, to] with the given step, both endpoints
/// included when the step divides the range.
struct SweepSpec {
    std::vector<SweepTarget> targets; // 1 or 2
    double from = 0.0;
    double to = 0.0;
    double step = 0.0;
};

struct SweepRow {
    double param1 = 0.0;
    std::optional<double> param2;
    double e_analytic = 0.0;
    double e_exact = 0.0;
    std::optional<double> e_shots;
    std::optional<double> std_error;
};

struct SweepOptions {
    std::optional<std::uint64_t> shots; // shot columns emitted only when set
    std::uint64_t seed = 0;
};

std::vector<double> grid_values(double from, double to, double step);

/// Evaluate every grid point, rows ordered by (param1, param2). Each row is
/// cross-checked on the fly: |E_analytic - E_exact| <= 1e-10 or the sweep
/// aborts with std::runtime_error.
std::vector<SweepRow> run_sweep(const GraphStateSpec& spec, int k, const SweepSpec& sweep,
                                const SweepOptions& options);

/// CSV with 12-significant-digit values and LF line endings. Header is
/// param1[,param2],E_analytic,E_exact[,E_shots,stderr] depending on the
/// sweep arity and whether shots were requested.
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

/// %.12g formatting shared by the CSV writer and the CLI reports.
std::string format_number(double value);

} // namespace graphent
