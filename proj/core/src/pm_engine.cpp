#include "qaoa/pm_engine.hpp"

#include <cmath>
#include <string>

namespace qaoa {

namespace {

double ipow(double x, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

int idx(Pauli p) { return static_cast<int>(p); }

// Θ^{PQ,±}(β) = cos β r^P ± sin β r^Q r^Z
double theta_fn(int p, int q, double sign, double beta, const Axis& r) {
    return std::cos(beta) * r[p] + sign * std::sin(beta) * r[q] * r[2];
}

double theta_yx_minus(double beta, const Axis& r) { return theta_fn(1, 0, -1.0, beta, r); }
double theta_xy_plus(double beta, const Axis& r) { return theta_fn(0, 1, +1.0, beta, r); }

double xz_entry(double bu, const Axis& ru, double bv, const Axis& rv) {
    const double s2v = std::sin(bv) * std::sin(bv);
    const double c2v = std::cos(bv) * std::cos(bv);
    return 2.0 * std::sin(bu) * std::sin(bu) * ru[0] * ru[2] *
               (std::cos(2.0 * bv) + 2.0 * s2v * rv[2] * rv[2]) +
           std::sin(2.0 * bu) * ru[1] * (s2v * (1.0 - 2.0 * rv[2] * rv[2]) - c2v);
}

double yz_entry(double bu, const Axis& ru, double bv, const Axis& rv) {
    const double s2v = std::sin(bv) * std::sin(bv);
    const double c2v = std::cos(bv) * std::cos(bv);
    return 2.0 * std::sin(bu) * theta_xy_plus(bu, ru) * (c2v - s2v * (1.0 - 2.0 * rv[2] * rv[2]));
}

void check_len(const std::vector<double>& v, std::size_t n, const char* what) {
    if (v.size() != n)
        throw InvalidInput(std::string(what) + " has length " + std::to_string(v.size()) +
                           ", expected " + std::to_string(n));
}

}  // namespace

void MixerAxes::validate(int n) const {
    if (static_cast<int>(r.size()) != n) throw InvalidInput("mixer axes length mismatch");
    for (const auto& a : r) {
        double norm = std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
        if (std::abs(norm - 1.0) > 1e-12) throw InvalidInput("mixer axis is not a unit vector");
    }
}

void IsingWeights::validate(int n, int m) const {
    check_len(h, n, "h");
    check_len(h_p, n, "h'");
    check_len(J, m, "J");
    check_len(J_p, m, "J'");
}

PmParams PmParams::uniform(int n, int m, double beta, double gamma) {
    PmParams p;
    p.beta.assign(n, beta);
    p.gamma_vertex.assign(n, gamma);
    p.gamma_edge.assign(m, gamma);
    return p;
}

void PmParams::validate(int n, int m) const {
    check_len(beta, n, "beta");
    check_len(gamma_vertex, n, "gamma_vertex");
    check_len(gamma_edge, m, "gamma_edge");
}

MixerAxes variant_axes(Variant variant, const std::vector<double>& theta, int n) {
    MixerAxes axes;
    axes.r.resize(n);
    if (variant != Variant::Vanilla) check_len(theta, n, "theta");
    for (int u = 0; u < n; ++u) {
        switch (variant) {
            case Variant::Vanilla: axes.r[u] = {1.0, 0.0, 0.0}; break;
            case Variant::WarmStart:
                axes.r[u] = {-std::sin(theta[u]), 0.0, -std::cos(theta[u])};
                break;
            case Variant::FreeAxis:
                axes.r[u] = {std::cos(theta[u]), -std::sin(theta[u]), 0.0};
                break;
        }
    }
    return axes;
}

double a_vertex(Pauli p, double beta, const Axis& r) {
    const double s = std::sin(beta);
    switch (p) {
        case Pauli::X: return 2.0 * s * s * r[0] * r[2] - std::sin(2.0 * beta) * r[1];
        case Pauli::Y: return 2.0 * s * s * r[1] * r[2] + std::sin(2.0 * beta) * r[0];
        case Pauli::Z: {
            const double c = std::cos(beta);
            return c * c - s * s * (1.0 - 2.0 * r[2] * r[2]);
        }
    }
    return 0.0;
}

double a_pair(Pauli p, Pauli q, double bu, const Axis& ru, double bv, const Axis& rv) {
    // Per-vertex halves multiplied last, so swapping (P, u) with (Q, v) is bitwise exact.
    auto yx = [](double b, const Axis& r) { return 2.0 * std::sin(b) * theta_yx_minus(b, r); };
    auto xy = [](double b, const Axis& r) { return 2.0 * std::sin(b) * theta_xy_plus(b, r); };
    const int key = idx(p) * 3 + idx(q);
    switch (key) {
        case 0: return yx(bu, ru) * yx(bv, rv);     // XX
        case 1: return -yx(bu, ru) * xy(bv, rv);    // XY
        case 3: return -xy(bu, ru) * yx(bv, rv);    // YX
        case 4: return xy(bu, ru) * xy(bv, rv);     // YY
        case 2: return xz_entry(bu, ru, bv, rv);
        case 6: return xz_entry(bv, rv, bu, ru);
        case 5: return yz_entry(bu, ru, bv, rv);
        case 7: return yz_entry(bv, rv, bu, ru);
        case 8: return a_vertex(Pauli::Z, bu, ru) * a_vertex(Pauli::Z, bv, rv);
    }
    return 0.0;
}

double a_coeff_vertex(Pauli p, int u, const PmParams& params, const MixerAxes& axes) {
    return a_vertex(p, params.beta.at(u), axes.r.at(u));
}

double a_coeff_pair(Pauli p, Pauli q, int u, int v, const PmParams& params,
                    const MixerAxes& axes) {
    return a_pair(p, q, params.beta.at(u), axes.r.at(u), params.beta.at(v), axes.r.at(v));
}

PairFactors pair_factors(const NeighborhoodDecomposition& nb, const IsingWeights& w,
                         const PmParams& params, const GraphView& g) {
    const int u = nb.u, v = nb.v;
    auto phase = [&](int a, int b) {
        int id = g.edge_id(a, b);
        return 2.0 * w.J_p[id] * params.gamma_edge[id];
    };
    auto prod_cos = [&](int a, const std::vector<int>& set) {
        double r = 1.0;
        for (int x : set) r *= std::cos(phase(a, x));
        return r;
    };
    PairFactors f;
    f.cu = std::cos(2.0 * w.h_p[u] * params.gamma_vertex[u]);
    f.su = std::sin(2.0 * w.h_p[u] * params.gamma_vertex[u]);
    f.cv = std::cos(2.0 * w.h_p[v] * params.gamma_vertex[v]);
    f.sv = std::sin(2.0 * w.h_p[v] * params.gamma_vertex[v]);
    f.c_uv = std::cos(phase(u, v));
    f.s_uv = std::sin(phase(u, v));
    f.r_minus_uv = prod_cos(u, nb.u_minus_v);
    f.r_minus_vu = prod_cos(v, nb.v_minus_u);
    f.r_bb_uv = prod_cos(u, nb.u_bbslash_v);
    f.r_bb_vu = prod_cos(v, nb.v_bbslash_u);
    for (int x : nb.uv) {
        f.r_m *= std::cos(phase(u, x) - phase(v, x));
        f.r_p *= std::cos(phase(u, x) + phase(v, x));
    }
    return f;
}

double xi_from_factors(Pauli p, Pauli q, const PairFactors& f) {
    const double half_bb = 0.5 * f.r_bb_uv * f.r_bb_vu;
    const double sum = f.r_m + f.r_p, diff = f.r_m - f.r_p;
    switch (idx(p) * 3 + idx(q)) {
        case 0: return half_bb * (f.cu * f.cv * sum + f.su * f.sv * diff);
        case 1: return half_bb * (f.cu * f.sv * sum - f.su * f.cv * diff);
        case 3: return half_bb * (f.cv * f.su * sum - f.sv * f.cu * diff);
        case 4: return half_bb * (f.cu * f.cv * diff + f.su * f.sv * sum);
        case 2: return -f.su * f.s_uv * f.r_minus_uv;
        case 6: return -f.sv * f.s_uv * f.r_minus_vu;
        case 5: return f.cu * f.s_uv * f.r_minus_uv;
        case 7: return f.cv * f.s_uv * f.r_minus_vu;
    }
    return 0.0;  // ZZ
}

double xi_coeff_vertex(Pauli p, int u, int v_anchor, const IsingWeights& w,
                       const PmParams& params, const GraphView& g) {
    NeighborhoodDecomposition nb = neighborhoods(g, u, v_anchor);
    if (p == Pauli::Z) return 0.0;
    PairFactors f = pair_factors(nb, w, params, g);
    const double lead = p == Pauli::X ? f.cu : f.su;
    return lead * f.c_uv * f.r_minus_uv;
}

double xi_vertex_free(Pauli p, int u, const IsingWeights& w, const PmParams& params,
                      const GraphView& g) {
    if (p == Pauli::Z) return 0.0;
    const double arg = 2.0 * w.h_p.at(u) * params.gamma_vertex.at(u);
    double r = p == Pauli::X ? std::cos(arg) : std::sin(arg);
    for (auto [x, id] : g.adj(u)) {
        (void)x;
        r *= std::cos(2.0 * w.J_p[id] * params.gamma_edge[id]);
    }
    return r;
}

double xi_coeff_pair(Pauli p, Pauli q, int u, int v, const IsingWeights& w,
                     const PmParams& params, const GraphView& g) {
    NeighborhoodDecomposition nb = neighborhoods(g, u, v);
    return xi_from_factors(p, q, pair_factors(nb, w, params, g));
}

double expectation_vertex(int u, const IsingWeights& w, const PmParams& params,
                          const MixerAxes& axes, const GraphView& g) {
    double s = 0.0;
    for (Pauli p : {Pauli::X, Pauli::Y})
        s += a_coeff_vertex(p, u, params, axes) * xi_vertex_free(p, u, w, params, g);
    return s;
}

double expectation_edge(int u, int v, const IsingWeights& w, const PmParams& params,
                        const MixerAxes& axes, const GraphView& g) {
    PairFactors f = pair_factors(neighborhoods(g, u, v), w, params, g);
    double s = 0.0;
    for (Pauli p : kPaulis)
        for (Pauli q : kPaulis) {
            if (p == Pauli::Z && q == Pauli::Z) continue;
            s += a_coeff_pair(p, q, u, v, params, axes) * xi_from_factors(p, q, f);
        }
    return s;
}

PmTerms expectation_terms(const IsingWeights& w, const PmParams& params, const MixerAxes& axes,
                          const GraphView& g) {
    w.validate(g.n(), g.m());
    params.validate(g.n(), g.m());
    axes.validate(g.n());
    PmTerms t;
    t.vertex.resize(g.n());
    t.edge.resize(g.m());
    t.total = w.a;
    for (int u = 0; u < g.n(); ++u) {
        t.vertex[u] = expectation_vertex(u, w, params, axes, g);
        t.total += w.h[u] * t.vertex[u];
    }
    for (int i = 0; i < g.m(); ++i) {
        auto [u, v] = g.ends(i);
        t.edge[i] = expectation_edge(u, v, w, params, axes, g);
        t.total += w.J[i] * t.edge[i];
    }
    return t;
}

double expectation_total(const IsingWeights& w, const PmParams& params, const MixerAxes& axes,
                         const GraphView& g) {
    return expectation_terms(w, params, axes, g).total;
}

double maxcut_fast_edge(int d, int e, int f, double beta_u, double beta_v, double gamma,
                        const Axis& r_u, const Axis& r_v) {
    const double axx = a_pair(Pauli::X, Pauli::X, beta_u, r_u, beta_v, r_v);
    const double ayy = a_pair(Pauli::Y, Pauli::Y, beta_u, r_u, beta_v, r_v);
    const double ayz = a_pair(Pauli::Y, Pauli::Z, beta_u, r_u, beta_v, r_v);
    const double azy = a_pair(Pauli::Z, Pauli::Y, beta_u, r_u, beta_v, r_v);
    const double c = std::cos(gamma);
    const double base = ipow(c, d + e - 2 * f);
    const double cf = ipow(std::cos(2.0 * gamma), f);
    const double sg = std::sin(gamma);
    return 0.5 * (1.0 - 0.5 * axx * base * (1.0 + cf) - 0.5 * ayy * base * (1.0 - cf) +
                  ayz * sg * ipow(c, d) + azy * sg * ipow(c, e));
}

}  // namespace qaoa
