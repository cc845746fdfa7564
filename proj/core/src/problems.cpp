#include "qaoa/problems.hpp"

#include <cmath>
#include <string>

namespace qaoa {

IsingWeights maxcut_to_ising(const MaxCutInstance& inst) {
    if (!inst.is_simple_graph()) throw NotASimpleGraph("MaxCut requires a simple graph");
    IsingWeights w;
    w.h.assign(inst.n(), 0.0);
    w.h_p.assign(inst.n(), 0.0);
    for (const auto& e : inst.edges()) {
        if (!std::isfinite(e.w) || !std::isfinite(e.wp)) throw InvalidInput("non-finite weight");
        w.a += 0.5 * e.w;
        w.a_p += 0.5 * e.wp;
        w.J.push_back(-0.5 * e.w);
        w.J_p.push_back(-0.5 * e.wp);
    }
    return w;
}

IsingWeights mis_to_ising(const MisInstance& inst) {
    const GraphView g(inst.graph);
    const int n = g.n(), m = g.m();
    if (static_cast<int>(inst.s.size()) != n || static_cast<int>(inst.s_p.size()) != n)
        throw InvalidInput("MIS vertex weights must have one entry per vertex");
    if (!(inst.lambda2 > 0.0) || !(inst.lambda2_p > 0.0))
        throw InvalidInput("MIS penalty lambda2 must be positive");
    IsingWeights w;
    double s_sum = 0.0, sp_sum = 0.0;
    for (int u = 0; u < n; ++u) {
        s_sum += inst.s[u];
        sp_sum += inst.s_p[u];
    }
    w.a = inst.lambda1 * s_sum - inst.lambda2 * m;
    w.a_p = inst.lambda1_p * sp_sum - inst.lambda2_p * m;
    w.h.resize(n);
    w.h_p.resize(n);
    for (int u = 0; u < n; ++u) {
        w.h[u] = inst.lambda2 * g.degree(u) - inst.lambda1 * inst.s[u];
        w.h_p[u] = inst.lambda2_p * g.degree(u) - inst.lambda1_p * inst.s_p[u];
    }
    w.J.assign(m, -inst.lambda2);
    w.J_p.assign(m, -inst.lambda2_p);
    return w;
}

IsingProblem qubo_to_ising(const QuboInstance& inst) {
    const int n = inst.n;
    if (n < 1) throw InvalidInput("QUBO needs at least one variable");
    if (static_cast<int>(inst.q.size()) != n * n) throw InvalidInput("Q must be n x n");
    if (static_cast<int>(inst.linear.size()) != n) throw InvalidInput("linear must have length n");
    IsingWeights w;
    w.a = inst.offset;
    w.h.assign(n, 0.0);
    std::vector<WeightedEdge> edges;
    for (int u = 0; u < n; ++u) {
        // x_u = (1 - Z_u)/2; Q_uu acts linearly since x_u^2 = x_u.
        const double lin = inst.linear[u] + inst.q[u * n + u];
        w.a += 0.5 * lin;
        w.h[u] -= 0.5 * lin;
        for (int v = 0; v < n; ++v) {
            const double qv = inst.q[u * n + v];
            if (v < u && qv != 0.0) throw InvalidInput("Q must be upper triangular");
            if (v <= u || qv == 0.0) continue;
            // x_u x_v = (1 - Z_u - Z_v + Z_u Z_v)/4
            w.a += 0.25 * qv;
            w.h[u] -= 0.25 * qv;
            w.h[v] -= 0.25 * qv;
            w.J.push_back(0.25 * qv);
            edges.push_back({Edge{u, v}, 0.25 * qv, 0.25 * qv});
        }
    }
    w.a_p = w.a;
    w.h_p = w.h;
    w.J_p = w.J;
    return {WeightedHypergraph(n, std::move(edges)), std::move(w)};
}

namespace {
int bit(std::uint64_t x, int u) { return static_cast<int>((x >> u) & 1u); }
}  // namespace

double maxcut_cost(const MaxCutInstance& inst, std::uint64_t x) {
    double c = 0.0;
    for (const auto& e : inst.edges()) c += e.w * (bit(x, e.v[0]) ^ bit(x, e.v[1]));
    return c;
}

double mis_cost(const MisInstance& inst, std::uint64_t x) {
    double c = 0.0;
    for (int u = 0; u < inst.graph.n(); ++u) c += 2.0 * inst.lambda1 * inst.s[u] * bit(x, u);
    for (const auto& e : inst.graph.edges())
        c -= 4.0 * inst.lambda2 * bit(x, e.v[0]) * bit(x, e.v[1]);
    return c;
}

double qubo_cost(const QuboInstance& inst, std::uint64_t x) {
    double c = inst.offset;
    for (int u = 0; u < inst.n; ++u) {
        if (!bit(x, u)) continue;
        c += inst.linear[u];
        for (int v = u; v < inst.n; ++v)
            if (bit(x, v)) c += inst.q[u * inst.n + v];
    }
    return c;
}

double ising_diagonal(const GraphView& g, const IsingWeights& w, std::uint64_t x) {
    double c = w.a;
    for (int u = 0; u < g.n(); ++u) c += w.h[u] * (1 - 2 * bit(x, u));
    for (int i = 0; i < g.m(); ++i) {
        auto [u, v] = g.ends(i);
        c += w.J[i] * (1 - 2 * bit(x, u)) * (1 - 2 * bit(x, v));
    }
    return c;
}

WeightedHypergraph ising_to_hypergraph(const GraphView& g, const IsingWeights& w) {
    w.validate(g.n(), g.m());
    std::vector<WeightedEdge> edges;
    for (int i = 0; i < g.m(); ++i) {
        auto [u, v] = g.ends(i);
        edges.push_back({Edge{u, v}, w.J[i], w.J_p[i]});
    }
    for (int u = 0; u < g.n(); ++u)
        if (w.h[u] != 0.0 || w.h_p[u] != 0.0) edges.push_back({Edge{u}, w.h[u], w.h_p[u]});
    if (w.a != 0.0 || w.a_p != 0.0) edges.push_back({Edge{}, w.a, w.a_p});
    return WeightedHypergraph(g.n(), std::move(edges));
}

}  // namespace qaoa
