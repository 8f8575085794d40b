#include "graphent/analytic.hpp"

#include <cmath>

namespace graphent {

namespace {

// |cos w + i sin w c|^2 for one arc, with c = cos(alpha) sin(theta) of the
// far endpoint.
double arc_attenuation_sq(double weight, double far_cs) {
    const double c = std::cos(weight);
    const double s = std::sin(weight);
    return c * c + s * s * far_cs * far_cs;
}

std::complex<double> arc_factor(double weight, const QubitPrep& far) {
    return {std::cos(weight), std::sin(weight) * std::cos(far.alpha) * std::sin(far.theta)};
}

double clamp_entanglement(double e) {
    return std::clamp(e, 0.0, 0.5);
}

} // namespace

double mean_sigma_x(const QubitPrep& prep) noexcept {
    return std::cos(prep.alpha) * std::sin(prep.theta);
}

std::complex<double> yz_coherence(const GraphStateSpec& spec, int k) {
    const QubitPrep& p = spec.prep(k);
    std::complex<double> z(std::sin(p.alpha) * std::sin(p.theta), std::cos(p.theta));
    z *= 0.5;
    const NeighborClassification nbrs = classify_neighbors(spec, k);
    for (const WeightedNeighbor& in : nbrs.ingoing) {
        z *= arc_factor(in.weight, spec.prep(in.vertex));
    }
    for (const WeightedNeighbor& out : nbrs.outgoing) {
        z *= arc_factor(out.weight, spec.prep(out.vertex));
    }
    for (const BidirectedNeighbor& bi : nbrs.bidirected) {
        z *= arc_factor(bi.weight_in + bi.weight_out, spec.prep(bi.vertex));
    }
    return z;
}

BlochVector bloch_vector_analytic(const GraphStateSpec& spec, int k) {
    const std::complex<double> z = yz_coherence(spec, k);
    return BlochVector{mean_sigma_x(spec.prep(k)), 2.0 * z.real(), 2.0 * z.imag()};
}

EntanglementEstimate entanglement_analytic(const GraphStateSpec& spec, int k) {
    EntanglementEstimate estimate;
    estimate.value = entanglement_from_bloch(bloch_vector_analytic(spec, k));
    estimate.source = EstimateSource::Analytic;
    return estimate;
}

double entanglement_uniform(double phi_in, double phi_out, int n_in, int n_out,
                            double alpha, double theta) noexcept {
    const double cs = std::cos(alpha) * std::sin(theta);
    const double cs2 = cs * cs;
    const double ct = std::cos(theta);
    const double ss = std::sin(alpha) * std::sin(theta);
    const double bracket = cs2 + (ct * ct + ss * ss) *
                                     std::pow(arc_attenuation_sq(phi_in, cs), n_in) *
                                     std::pow(arc_attenuation_sq(phi_out, cs), n_out);
    return clamp_entanglement(0.5 - 0.5 * std::sqrt(bracket));
}

double entanglement_undirected(double phi, int degree, double alpha, double theta) noexcept {
    const double cs = std::cos(alpha) * std::sin(theta);
    const double cs2 = cs * cs;
    const double ct = std::cos(theta);
    const double ss = std::sin(alpha) * std::sin(theta);
    const double bracket =
        cs2 + (ct * ct + ss * ss) * std::pow(arc_attenuation_sq(phi, cs), degree);
    return clamp_entanglement(0.5 - 0.5 * std::sqrt(bracket));
}

double entanglement_zero_state(double phi, int degree) noexcept {
    return clamp_entanglement(0.5 * (1.0 - std::pow(std::abs(std::cos(phi)), degree)));
}

} // namespace graphent
