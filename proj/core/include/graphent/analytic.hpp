#pragma once

#include <complex>

#include "graphent/bloch.hpp"
#include "graphent/graph.hpp"

namespace graphent {

/// <sigma^x_k> = cos(alpha) sin(theta). Depends only on qubit k's own
/// preparation, never on the arcs.
double mean_sigma_x(const QubitPrep& prep) noexcept;

/// Complex coherence factor for qubit k: <sigma^y_k> = 2 Re, <sigma^z_k> = 2 Im.
///
/// z = (sin a_k sin t_k + i cos t_k)/2
///     * prod over ingoing-only arcs m->k of (cos w + i sin w cos a_m sin t_m)
///     * prod over outgoing-only arcs k->n of (cos w + i sin w cos a_n sin t_n)
///     * prod over bidirected pairs l<->k of the same factor at the summed
///       angle w_lk + w_kl.
///
/// Empty products are 1, so an isolated vertex reduces to the prefactor.
std::complex<double> yz_coherence(const GraphStateSpec& spec, int k);

/// Closed-form Bloch vector of qubit k, evaluated directly from the graph.
BlochVector bloch_vector_analytic(const GraphStateSpec& spec, int k);

EntanglementEstimate entanglement_analytic(const GraphStateSpec& spec, int k);

/// Special case: every ingoing arc of k has weight phi_in, every outgoing
/// arc weight phi_out, no bidirected pairs, and all qubits share the same
/// (alpha, theta). Depends on the graph only through the in/out degrees.
double entanglement_uniform(double phi_in, double phi_out, int n_in, int n_out,
                            double alpha, double theta) noexcept;

/// Special case of an unweighted undirected graph: each edge realized as a
/// single arc of common weight phi, all preparations equal. Depends on the
/// graph only through the vertex degree.
double entanglement_undirected(double phi, int degree, double alpha, double theta) noexcept;

/// Special case alpha = theta = 0 (initial state |0...0>):
/// E = (1 - |cos phi|^degree)/2.
double entanglement_zero_state(double phi, int degree) noexcept;

} // namespace graphent
