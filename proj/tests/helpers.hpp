#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "qaoa/random.hpp"

namespace testing_support {

using qaoa::SplitMix64;

// Random connected-ish simple graph with at least one edge.
inline qaoa::WeightedHypergraph graph_with_edges(SplitMix64& rng, int n_lo, int n_hi, double p) {
    for (;;) {
        const int n = rng.integer(n_lo, n_hi);
        auto g = qaoa::random_graph(rng, n, p);
        if (g.m() > 0) return g;
    }
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

}  // namespace testing_support
