#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "qaoa/hypergraph.hpp"

namespace qaoa {

using cplx = std::complex<double>;

// |Ω(λ, ω)⟩ = ⊗_u R_Z(λ_u) R_Y(ω_u)|0⟩. |s⟩ is λ = 0, ω = π/2.
struct ProductStateParams {
    std::vector<double> lambda;
    std::vector<double> omega;

    static ProductStateParams s_state(int n);
    // λ into [0, 2π), ω into [0, π]. ω in (π, 2π) maps to (λ + π, 2π - ω),
    // the same state up to a global phase.
    ProductStateParams canonical() const;
    void validate(int n) const;
};

// gamma[l][e] for layer l (0-based) and edge e; beta[l] per layer.
struct GmParams {
    std::vector<std::vector<double>> gamma;
    std::vector<double> beta;

    int p() const { return static_cast<int>(beta.size()); }
    void validate(int m) const;
};

enum class GmMode {
    L,  // initial state |s⟩, structural factor L
    T   // initial state |Ω⟩, structural factor T
};

struct GmOptions {
    int dimension_cap = kDefaultDimensionCap;  // 2^dim bound for L
    int t_edge_cap = 26;                       // 2^m bound for T
    bool trailing_zero_shortcut = true;        // L mode only
};

// Trajectory bit strings hold f_l in bit l-1.
using Trajectory = std::uint32_t;

// L^e_G(γ). family is the even family of G. e may be ∅ even if absent from G.
cplx structural_factor_L(const WeightedHypergraph& g, const Edge& e,
                         const std::vector<double>& gamma, const SubhypergraphFamily& family,
                         int cap = kDefaultDimensionCap);
// T^e_G(γ), full enumeration with parity pruning.
cplx structural_factor_T(const WeightedHypergraph& g, const Edge& e,
                         const std::vector<double>& gamma, const ProductStateParams& state,
                         int edge_cap = 26);

// Σ_e w_e L^e_G(γ) and Σ_e w_e T^e_G(γ).
cplx super_factor_L(const WeightedHypergraph& g, const std::vector<double>& gamma,
                    const SubhypergraphFamily& family, int cap = kDefaultDimensionCap);
cplx super_factor_T(const WeightedHypergraph& g, const std::vector<double>& gamma,
                    const ProductStateParams& state, int edge_cap = 26);

// Σ_k N(k)[k (i sin γ)^{k-1} cos^{m-k+1} γ + (m-k)(i sin γ)^{k+1} cos^{m-k-1} γ].
cplx unweighted_fast_super_L(const WeightedHypergraph& g, double gamma,
                             const std::vector<std::uint64_t>& counts);

// Forest closed form: e = ∅ gives ∏ cos, e ≠ ∅ gives i sin(γ_e w'_e) ∏_{f≠e} cos.
cplx forest_L(const WeightedHypergraph& g, const Edge& e, const std::vector<double>& gamma);

// 1-based indices of set bits of f.
std::vector<int> trajectory_indices(Trajectory f, int p);
// Γ(f): wt(f) + 1 per-edge angle sums over inter-marker layer intervals.
std::vector<std::vector<double>> gamma_blocks(Trajectory f, const GmParams& params);

// Evaluator with a memo of structural factors keyed by rounded angle blocks.
class GmEvaluator {
public:
    GmEvaluator(const WeightedHypergraph& g, GmMode mode, ProductStateParams state = {},
                GmOptions options = {});

    const WeightedHypergraph& graph() const { return g_; }
    GmMode mode() const { return mode_; }

    // Φ^e(γ) for edge index e, or -1 for the empty edge, or -2 for the super factor.
    cplx factor(int edge, const std::vector<double>& gamma);

    cplx trajectory_contribution(Trajectory f, Trajectory g, int edge, const GmParams& params);
    // Full 2^p × 2^p matrix, row f, column g.
    std::vector<std::vector<cplx>> q_matrix(int edge, const GmParams& params);

    // ⟨Z_e⟩ for edge index e (-1 for ∅) by the trajectory sum.
    double expectation_z(int edge, const GmParams& params);
    // Σ_e w_e ⟨Z_e⟩ by the Q̄ trajectory sum.
    double expectation_total(const GmParams& params);

    // p = 1 closed forms.
    double single_layer_z(int edge, double beta, const std::vector<double>& gamma);
    double single_layer_total(double beta, const std::vector<double>& gamma);

private:
    cplx compute_factor(int edge, const std::vector<double>& gamma);
    cplx phi_at_empty_edge(const std::vector<double>& gamma);

    const WeightedHypergraph& g_;
    GmMode mode_;
    ProductStateParams state_;
    GmOptions opt_;
    SubhypergraphFamily family_;
    bool have_family_ = false;
    std::map<std::pair<int, std::vector<long long>>, cplx> memo_;
};

// One-shot wrappers.
double expectation_edge_p(const Edge& e, const WeightedHypergraph& g, const GmParams& params,
                          GmMode mode, const ProductStateParams& state = {},
                          const GmOptions& options = {});
double expectation_total_p(const WeightedHypergraph& g, const GmParams& params, GmMode mode,
                           const ProductStateParams& state = {}, const GmOptions& options = {});

// MaxCut on a weighted simple graph: w_∅ = w'_∅ = W/2, w_uv = w'_uv = -w_uv/2.
WeightedHypergraph maxcut_gm_encode(const WeightedHypergraph& maxcut_graph);

}  // namespace qaoa
