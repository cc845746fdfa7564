#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qaoa/gm_engine.hpp"
#include "qaoa/hypergraph.hpp"
#include "qaoa/pm_engine.hpp"

namespace qaoa {

// 2^n amplitudes, little-endian: qubit u is bit u of the basis index.
struct StateVector {
    int n = 0;
    std::vector<cplx> amp;

    double norm() const;
    cplx inner(const StateVector& other) const;  // ⟨this|other⟩
};

struct OracleOptions {
    int qubit_cap = 16;
    // Apply the a'I and ∅-edge terms, which only contribute a global phase.
    bool include_global_phase = false;
};

StateVector prepare_product_state(const ProductStateParams& state);
StateVector uniform_state(int n);

// x ↦ x · exp(-i Σ_e γ_e w'_e (-1)^{parity of x on e}). ∅ edges skipped unless asked.
void apply_phase(StateVector& psi, const WeightedHypergraph& g, const std::vector<double>& gamma,
                 bool include_empty = false);
// ∏_u (cos β_u I - i sin β_u r_u·P_u).
void apply_product_mixer(StateVector& psi, const MixerAxes& axes, const std::vector<double>& beta);
// ψ + (e^{-iβ} - 1)⟨Ω|ψ⟩|Ω⟩.
void apply_grover_mixer(StateVector& psi, const StateVector& omega, double beta);
void apply_grover_mixer(StateVector& psi, const ProductStateParams& state, double beta);

double measure_z_edge(const StateVector& psi, const Edge& e);

struct PmOracleResult {
    std::vector<double> vertex;  // ⟨Z_u⟩
    std::vector<double> edge;    // ⟨Z_u Z_v⟩ in edge order
    double total = 0.0;          // a + Σ h ⟨Z_u⟩ + Σ J ⟨Z_u Z_v⟩
};

struct GmOracleResult {
    std::vector<double> edge;  // ⟨Z_e⟩ in edge order
    double total = 0.0;        // Σ_e w_e ⟨Z_e⟩
};

// Throws TooManyQubits.
PmOracleResult run_pm(const GraphView& g, const IsingWeights& w, const PmParams& params,
                      const MixerAxes& axes, const OracleOptions& options = {});
GmOracleResult run_gm(const WeightedHypergraph& g, const GmParams& params, GmMode mode,
                      const ProductStateParams& state = {}, const OracleOptions& options = {});

}  // namespace qaoa
