#include "qaoa/random.hpp"

#include <cmath>
#include <numbers>
#include <set>

namespace qaoa {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double SplitMix64::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double SplitMix64::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

int SplitMix64::integer(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(next() % span);
}

WeightedHypergraph random_graph(SplitMix64& rng, int n, double p, double w_lo, double w_hi) {
    std::vector<WeightedEdge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.uniform() < p) {
                const double w = rng.uniform(w_lo, w_hi);
                const double wp = rng.uniform(w_lo, w_hi);
                edges.push_back({Edge{u, v}, w, wp});
            }
    return WeightedHypergraph(n, std::move(edges));
}

WeightedHypergraph random_hypergraph(SplitMix64& rng, int n, int m, int max_arity, double w_lo,
                                     double w_hi) {
    std::set<Edge> seen;
    std::vector<WeightedEdge> edges;
    int attempts = 0;
    while (static_cast<int>(edges.size()) < m && attempts++ < 100000) {
        const int k = rng.integer(0, std::min(max_arity, n));
        std::set<int> vs;
        while (static_cast<int>(vs.size()) < k) vs.insert(rng.integer(0, n - 1));
        Edge e(vs.begin(), vs.end());
        if (!seen.insert(e).second) continue;
        const double w = rng.uniform(w_lo, w_hi);
        const double wp = rng.uniform(w_lo, w_hi);
        edges.push_back({std::move(e), w, wp});
    }
    return WeightedHypergraph(n, std::move(edges));
}

IsingWeights random_ising(SplitMix64& rng, const GraphView& g, double lo, double hi) {
    IsingWeights w;
    w.a = rng.uniform(lo, hi);
    w.a_p = rng.uniform(lo, hi);
    for (int u = 0; u < g.n(); ++u) {
        w.h.push_back(rng.uniform(lo, hi));
        w.h_p.push_back(rng.uniform(lo, hi));
    }
    for (int i = 0; i < g.m(); ++i) {
        w.J.push_back(rng.uniform(lo, hi));
        w.J_p.push_back(rng.uniform(lo, hi));
    }
    return w;
}

PmParams random_pm_params(SplitMix64& rng, int n, int m) {
    constexpr double pi = std::numbers::pi;
    PmParams p;
    for (int u = 0; u < n; ++u) p.beta.push_back(rng.uniform(-pi, pi));
    for (int u = 0; u < n; ++u) p.gamma_vertex.push_back(rng.uniform(-pi, pi));
    for (int i = 0; i < m; ++i) p.gamma_edge.push_back(rng.uniform(-pi, pi));
    p.gamma_const = rng.uniform(-pi, pi);
    return p;
}

MixerAxes random_axes(SplitMix64& rng, int n) {
    constexpr double pi = std::numbers::pi;
    MixerAxes axes;
    for (int u = 0; u < n; ++u) {
        const double z = rng.uniform(-1.0, 1.0);
        const double phi = rng.uniform(0.0, 2 * pi);
        const double s = std::sqrt(1.0 - z * z);
        axes.r.push_back({s * std::cos(phi), s * std::sin(phi), z});
    }
    return axes;
}

GmParams random_gm_params(SplitMix64& rng, int m, int p) {
    constexpr double pi = std::numbers::pi;
    GmParams params;
    for (int l = 0; l < p; ++l) {
        std::vector<double> g;
        for (int i = 0; i < m; ++i) g.push_back(rng.uniform(-pi, pi));
        params.gamma.push_back(std::move(g));
        params.beta.push_back(rng.uniform(-pi, pi));
    }
    return params;
}

ProductStateParams random_product_state(SplitMix64& rng, int n) {
    constexpr double pi = std::numbers::pi;
    ProductStateParams s;
    for (int u = 0; u < n; ++u) {
        s.lambda.push_back(rng.uniform(0.0, 2 * pi));
        s.omega.push_back(rng.uniform(0.0, pi));
    }
    return s;
}

}  // namespace qaoa
