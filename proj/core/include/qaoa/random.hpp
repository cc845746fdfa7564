#pragma once

#include <cstdint>
#include <vector>

#include "qaoa/gm_engine.hpp"
#include "qaoa/hypergraph.hpp"
#include "qaoa/pm_engine.hpp"

namespace qaoa {

// SplitMix64: state += 0x9E3779B97F4A7C15; z = state;
// z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9; z = (z ^ (z >> 27)) * 0x94D049BB133111EB;
// return z ^ (z >> 31). Doubles take the top 53 bits.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    double uniform();                     // [0, 1)
    double uniform(double lo, double hi);  // [lo, hi)
    int integer(int lo, int hi);           // [lo, hi]

private:
    std::uint64_t state_;
};

// G(n, p) with cost and phase weights drawn from U(w_lo, w_hi) independently.
WeightedHypergraph random_graph(SplitMix64& rng, int n, double p, double w_lo = -2.0,
                                double w_hi = 2.0);
// m distinct edges of arity 0..max_arity.
WeightedHypergraph random_hypergraph(SplitMix64& rng, int n, int m, int max_arity,
                                     double w_lo = -2.0, double w_hi = 2.0);

IsingWeights random_ising(SplitMix64& rng, const GraphView& g, double lo = -2.0, double hi = 2.0);
PmParams random_pm_params(SplitMix64& rng, int n, int m);
MixerAxes random_axes(SplitMix64& rng, int n);
GmParams random_gm_params(SplitMix64& rng, int m, int p);
ProductStateParams random_product_state(SplitMix64& rng, int n);

}  // namespace qaoa
