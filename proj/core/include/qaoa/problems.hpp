#pragma once

#include <cstdint>
#include <vector>

#include "qaoa/hypergraph.hpp"
#include "qaoa/pm_engine.hpp"

namespace qaoa {

// Graph plus Ising weights keyed by its edge order.
struct IsingProblem {
    WeightedHypergraph graph;
    IsingWeights weights;
};

// MaxCut instance: a simple graph; w is the cost weight, wp the phase weight.
using MaxCutInstance = WeightedHypergraph;

struct MisInstance {
    WeightedHypergraph graph;  // edge weights unused
    std::vector<double> s;
    std::vector<double> s_p;
    double lambda1 = 1.0, lambda2 = 1.0;
    double lambda1_p = 1.0, lambda2_p = 1.0;
};

struct QuboInstance {
    int n = 0;
    std::vector<double> q;  // n × n row-major; entries below the diagonal must be 0
    std::vector<double> linear;
    double offset = 0.0;
};

// a = W/2, h = 0, J = -w/2; primed analogues from the phase weights.
IsingWeights maxcut_to_ising(const MaxCutInstance& inst);
// a = λ1 Σs - λ2 m, h_u = λ2 D_u - λ1 s_u, J = -λ2; primed from primed parameters.
IsingWeights mis_to_ising(const MisInstance& inst);
// Substitutes x_u = (1 - Z_u)/2. Edges are the nonzero off-diagonal pairs in row-major order.
IsingProblem qubo_to_ising(const QuboInstance& inst);

// Σ_{uv} w_uv (x_u xor x_v); bit u of x is x_u.
double maxcut_cost(const MaxCutInstance& inst, std::uint64_t x);
// 2λ1 Σ s_u x_u - 4λ2 Σ x_u x_v: the value the MIS Hamiltonian assigns to x.
double mis_cost(const MisInstance& inst, std::uint64_t x);
double qubo_cost(const QuboInstance& inst, std::uint64_t x);
// a + Σ h_u z_u + Σ J_uv z_u z_v with z_u = 1 - 2 x_u.
double ising_diagonal(const GraphView& g, const IsingWeights& w, std::uint64_t x);

// Cost-side hypergraph of an Ising problem: pair edges in graph order, then nonzero
// singletons, then ∅ when a or a' is nonzero.
WeightedHypergraph ising_to_hypergraph(const GraphView& g, const IsingWeights& w);

}  // namespace qaoa
