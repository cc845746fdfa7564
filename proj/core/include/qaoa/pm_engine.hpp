#pragma once

#include <array>
#include <vector>

#include "qaoa/hypergraph.hpp"

namespace qaoa {

enum class Pauli { X, Y, Z };
inline constexpr std::array<Pauli, 3> kPaulis{Pauli::X, Pauli::Y, Pauli::Z};

using Axis = std::array<double, 3>;  // (r^X, r^Y, r^Z)

struct MixerAxes {
    std::vector<Axis> r;
    // Throws InvalidInput unless there are n unit vectors (tolerance 1e-12).
    void validate(int n) const;
};

// Cost (a, h, J) and phase (a', h', J') weights; J is keyed by graph edge order.
struct IsingWeights {
    double a = 0.0;
    std::vector<double> h;
    std::vector<double> J;
    double a_p = 0.0;
    std::vector<double> h_p;
    std::vector<double> J_p;
    void validate(int n, int m) const;
};

struct PmParams {
    std::vector<double> beta;          // per vertex
    std::vector<double> gamma_vertex;  // per vertex
    std::vector<double> gamma_edge;    // per edge
    double gamma_const = 0.0;          // multiplies a'I; a global phase, ignored
    static PmParams uniform(int n, int m, double beta, double gamma);
    void validate(int n, int m) const;
};

enum class Variant { Vanilla, WarmStart, FreeAxis };

// Vanilla: (1,0,0). WarmStart: (-sin θ, 0, -cos θ). FreeAxis: (cos θ, -sin θ, 0).
MixerAxes variant_axes(Variant variant, const std::vector<double>& theta, int n);

// a^P(β) for one vertex.
double a_vertex(Pauli p, double beta, const Axis& r);
// a^{PQ}_{uv}(β) from the per-vertex parameters of u and v.
double a_pair(Pauli p, Pauli q, double beta_u, const Axis& r_u, double beta_v, const Axis& r_v);

double a_coeff_vertex(Pauli p, int u, const PmParams& params, const MixerAxes& axes);
double a_coeff_pair(Pauli p, Pauli q, int u, int v, const PmParams& params,
                    const MixerAxes& axes);

// Phase-side building blocks for one edge {u, v}.
struct PairFactors {
    double cu = 1, su = 0, cv = 1, sv = 0;  // cos/sin(2 h' γ) at u and v
    double c_uv = 1, s_uv = 0;              // cos/sin(2 J'_uv γ_uv)
    double r_minus_uv = 1, r_minus_vu = 1;  // R^\_uv, R^\_vu
    double r_bb_uv = 1, r_bb_vu = 1;        // R^⫫_uv, R^⫫_vu
    double r_m = 1, r_p = 1;                // R^-_uv, R^+_uv
};

PairFactors pair_factors(const NeighborhoodDecomposition& nb, const IsingWeights& w,
                         const PmParams& params, const GraphView& g);

double xi_from_factors(Pauli p, Pauli q, const PairFactors& f);

// Table entry relative to the anchor edge {u, v_anchor}. Throws NotAnEdge.
double xi_coeff_vertex(Pauli p, int u, int v_anchor, const IsingWeights& w,
                       const PmParams& params, const GraphView& g);
// cos/sin(2h'γ_u) times the product over all edges at u. Defined for isolated u.
double xi_vertex_free(Pauli p, int u, const IsingWeights& w, const PmParams& params,
                      const GraphView& g);
double xi_coeff_pair(Pauli p, Pauli q, int u, int v, const IsingWeights& w,
                     const PmParams& params, const GraphView& g);

// F_u and F_uv.
double expectation_vertex(int u, const IsingWeights& w, const PmParams& params,
                          const MixerAxes& axes, const GraphView& g);
double expectation_edge(int u, int v, const IsingWeights& w, const PmParams& params,
                        const MixerAxes& axes, const GraphView& g);
// a + Σ h_u F_u + Σ J_uv F_uv.
double expectation_total(const IsingWeights& w, const PmParams& params, const MixerAxes& axes,
                         const GraphView& g);

struct PmTerms {
    std::vector<double> vertex;  // F_u
    std::vector<double> edge;    // F_uv in edge order
    double total = 0.0;
};
PmTerms expectation_terms(const IsingWeights& w, const PmParams& params, const MixerAxes& axes,
                          const GraphView& g);

// Unweighted MaxCut ⟨C_uv⟩ from (d, e, f) with one shared γ.
double maxcut_fast_edge(int d, int e, int f, double beta_u, double beta_v, double gamma,
                        const Axis& r_u, const Axis& r_v);

}  // namespace qaoa
