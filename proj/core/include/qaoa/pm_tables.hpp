#pragma once

#include <vector>

#include "qaoa/pm_engine.hpp"

// Closed forms specialized to named mixers and problems. Each is an
// independent evaluation path checked against the general engine.
namespace qaoa::tables {

// Vanilla mixer, r = (1, 0, 0).
double vanilla_a_vertex(Pauli p, double beta);
double vanilla_a_pair(Pauli p, Pauli q, double beta_u, double beta_v);

// Warm-start mixer, r = (-sin θ, 0, -cos θ).
double ws_a_vertex(Pauli p, double beta, double theta);
double ws_a_pair(Pauli p, Pauli q, double beta_u, double theta_u, double beta_v, double theta_v);

// Free-axis mixer, r = (cos θ, -sin θ, 0).
double fam_a_vertex(Pauli p, double beta, double theta);
double fam_a_pair(Pauli p, Pauli q, double beta_u, double theta_u, double beta_v, double theta_v);

// Weighted MaxCut: R-products use cos(w γ). Only XX, YY, YZ, ZY are nonzero.
double maxcut_xi_pair(Pauli p, Pauli q, int u, int v, const std::vector<double>& w,
                      const std::vector<double>& gamma_edge, const GraphView& g);
// Unweighted single-angle MaxCut rows.
double maxcut_xi_pair_unweighted(Pauli p, Pauli q, int d, int e, int f, double gamma);

// ⟨C_uv⟩ for weighted MaxCut from the closed form with its own a/ξ expressions.
double maxcut_closed_form_edge(int u, int v, const std::vector<double>& w, const PmParams& params,
                           const MixerAxes& axes, const GraphView& g);
// Vanilla weighted multi-angle form.
double maxcut_vanilla_edge(int u, int v, const std::vector<double>& w, const PmParams& params,
                           const GraphView& g);
// Vanilla unweighted single-angle form.
double maxcut_vanilla_fast_edge(int d, int e, int f, double beta, double gamma);

// MIS phase parameters.
struct MisPhase {
    double lambda1_p = 0.0;
    double lambda2_p = 0.0;
    std::vector<double> s_p;
};

double mis_xi_vertex(Pauli p, int u, int v_anchor, const MisPhase& mis, const PmParams& params,
                     const GraphView& g);
double mis_xi_pair(Pauli p, Pauli q, int u, int v, const MisPhase& mis, const PmParams& params,
                   const GraphView& g);
// Unit vertex weights, single γ.
double mis_xi_vertex_unweighted(Pauli p, int degree_u, double lambda1_p, double lambda2_p,
                                double gamma);
double mis_xi_pair_unweighted(Pauli p, Pauli q, int degree_u, int degree_v, int f,
                              double lambda1_p, double lambda2_p, double gamma);

}  // namespace qaoa::tables
