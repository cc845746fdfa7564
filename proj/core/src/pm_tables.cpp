#include "qaoa/pm_tables.hpp"

#include <cmath>

namespace qaoa::tables {

namespace {

int key(Pauli p, Pauli q) { return static_cast<int>(p) * 3 + static_cast<int>(q); }

double ipow(double x, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

double sq(double x) { return x * x; }

}  // namespace

double vanilla_a_vertex(Pauli p, double beta) {
    switch (p) {
        case Pauli::X: return 0.0;
        case Pauli::Y: return std::sin(2.0 * beta);
        case Pauli::Z: return std::cos(2.0 * beta);
    }
    return 0.0;
}

double vanilla_a_pair(Pauli p, Pauli q, double bu, double bv) {
    switch (key(p, q)) {
        case 4: return std::sin(2.0 * bu) * std::sin(2.0 * bv);
        case 5: return std::sin(2.0 * bu) * std::cos(2.0 * bv);
        case 7: return std::cos(2.0 * bu) * std::sin(2.0 * bv);
        case 8: return std::cos(2.0 * bu) * std::cos(2.0 * bv);
    }
    return 0.0;
}

double ws_a_vertex(Pauli p, double beta, double theta) {
    switch (p) {
        case Pauli::X: return sq(std::sin(beta)) * std::sin(2.0 * theta);
        case Pauli::Y: return -std::sin(2.0 * beta) * std::sin(theta);
        case Pauli::Z: return sq(std::cos(beta)) + sq(std::sin(beta)) * std::cos(2.0 * theta);
    }
    return 0.0;
}

double ws_a_pair(Pauli p, Pauli q, double bu, double tu, double bv, double tv) {
    const double zu = sq(std::cos(bu)) + std::cos(2.0 * tu) * sq(std::sin(bu));
    const double zv = sq(std::cos(bv)) + std::cos(2.0 * tv) * sq(std::sin(bv));
    switch (key(p, q)) {
        case 0:
            return sq(std::sin(bu)) * sq(std::sin(bv)) * std::sin(2.0 * tu) * std::sin(2.0 * tv);
        case 1:
            return -sq(std::sin(bu)) * std::sin(2.0 * bv) * std::sin(2.0 * tu) * std::sin(tv);
        case 3:
            return -sq(std::sin(bv)) * std::sin(2.0 * bu) * std::sin(2.0 * tv) * std::sin(tu);
        case 4: return std::sin(2.0 * bu) * std::sin(2.0 * bv) * std::sin(tu) * std::sin(tv);
        case 2: return sq(std::sin(bu)) * std::sin(2.0 * tu) * zv;
        case 6: return sq(std::sin(bv)) * std::sin(2.0 * tv) * zu;
        case 5: return -std::sin(2.0 * bu) * std::sin(tu) * zv;
        case 7: return -std::sin(2.0 * bv) * std::sin(tv) * zu;
        case 8: return zu * zv;
    }
    return 0.0;
}

double fam_a_vertex(Pauli p, double beta, double theta) {
    switch (p) {
        case Pauli::X: return std::sin(2.0 * beta) * std::sin(theta);
        case Pauli::Y: return std::sin(2.0 * beta) * std::cos(theta);
        case Pauli::Z: return std::cos(2.0 * beta);
    }
    return 0.0;
}

double fam_a_pair(Pauli p, Pauli q, double bu, double tu, double bv, double tv) {
    const double ss = std::sin(2.0 * bu) * std::sin(2.0 * bv);
    switch (key(p, q)) {
        case 0: return ss * std::sin(tu) * std::sin(tv);
        case 1: return ss * std::sin(tu) * std::cos(tv);
        case 3: return ss * std::cos(tu) * std::sin(tv);
        case 4: return ss * std::cos(tu) * std::cos(tv);
        case 2: return std::sin(2.0 * bu) * std::cos(2.0 * bv) * std::sin(tu);
        case 6: return std::sin(2.0 * bv) * std::cos(2.0 * bu) * std::sin(tv);
        case 5: return std::sin(2.0 * bu) * std::cos(2.0 * bv) * std::cos(tu);
        case 7: return std::sin(2.0 * bv) * std::cos(2.0 * bu) * std::cos(tv);
        // Asymmetric extra term in the printed ZZ entry dropped; see ledger.
        case 8: return std::cos(2.0 * bu) * std::cos(2.0 * bv);
    }
    return 0.0;
}

double maxcut_xi_pair(Pauli p, Pauli q, int u, int v, const std::vector<double>& w,
                      const std::vector<double>& gamma_edge, const GraphView& g) {
    NeighborhoodDecomposition nb = neighborhoods(g, u, v);
    auto ang = [&](int a, int b) {
        int id = g.edge_id(a, b);
        return w[id] * gamma_edge[id];
    };
    auto prod = [&](int a, const std::vector<int>& set) {
        double r = 1.0;
        for (int x : set) r *= std::cos(ang(a, x));
        return r;
    };
    double rm = 1.0, rp = 1.0;
    for (int x : nb.uv) {
        rm *= std::cos(ang(u, x) - ang(v, x));
        rp *= std::cos(ang(u, x) + ang(v, x));
    }
    const double bb = 0.5 * prod(u, nb.u_bbslash_v) * prod(v, nb.v_bbslash_u);
    switch (key(p, q)) {
        case 0: return bb * (rm + rp);
        case 4: return bb * (rm - rp);
        case 5: return -std::sin(ang(u, v)) * prod(u, nb.u_minus_v);
        case 7: return -std::sin(ang(u, v)) * prod(v, nb.v_minus_u);
    }
    return 0.0;
}

double maxcut_xi_pair_unweighted(Pauli p, Pauli q, int d, int e, int f, double gamma) {
    const double base = ipow(std::cos(gamma), d + e - 2 * f);
    const double cf = ipow(std::cos(2.0 * gamma), f);
    switch (key(p, q)) {
        case 0: return 0.5 * base * (1.0 + cf);
        case 4: return 0.5 * base * (1.0 - cf);
        case 5: return -std::sin(gamma) * ipow(std::cos(gamma), d);
        case 7: return -std::sin(gamma) * ipow(std::cos(gamma), e);
    }
    return 0.0;
}

double maxcut_closed_form_edge(int u, int v, const std::vector<double>& w, const PmParams& params,
                           const MixerAxes& axes, const GraphView& g) {
    const double bu = params.beta[u], bv = params.beta[v];
    const Axis& ru = axes.r[u];
    const Axis& rv = axes.r[v];
    auto theta = [](double b, const Axis& r, int pi, int qi, double sign) {
        return std::cos(b) * r[pi] + sign * std::sin(b) * r[qi] * r[2];
    };
    const double ss = 4.0 * std::sin(bu) * std::sin(bv);
    const double axx = ss * theta(bu, ru, 1, 0, -1.0) * theta(bv, rv, 1, 0, -1.0);
    const double ayy = ss * theta(bu, ru, 0, 1, +1.0) * theta(bv, rv, 0, 1, +1.0);
    auto ayz = [&](double b1, const Axis& r1, double b2, const Axis& r2) {
        return 2.0 * std::sin(b1) * theta(b1, r1, 0, 1, +1.0) *
               (sq(std::cos(b2)) - sq(std::sin(b2)) * (1.0 - 2.0 * r2[2] * r2[2]));
    };
    const int id = g.edge_id(u, v);
    return 0.5 * w[id] *
           (1.0 - axx * maxcut_xi_pair(Pauli::X, Pauli::X, u, v, w, params.gamma_edge, g) -
            ayy * maxcut_xi_pair(Pauli::Y, Pauli::Y, u, v, w, params.gamma_edge, g) -
            ayz(bu, ru, bv, rv) * maxcut_xi_pair(Pauli::Y, Pauli::Z, u, v, w, params.gamma_edge, g) -
            ayz(bv, rv, bu, ru) * maxcut_xi_pair(Pauli::Z, Pauli::Y, u, v, w, params.gamma_edge, g));
}

double maxcut_vanilla_edge(int u, int v, const std::vector<double>& w, const PmParams& params,
                           const GraphView& g) {
    const double bu = params.beta[u], bv = params.beta[v];
    const int id = g.edge_id(u, v);
    const auto& ge = params.gamma_edge;
    return 0.5 * w[id] *
           (1.0 -
            std::sin(2.0 * bu) * std::sin(2.0 * bv) * maxcut_xi_pair(Pauli::Y, Pauli::Y, u, v, w, ge, g) -
            std::sin(2.0 * bu) * std::cos(2.0 * bv) * maxcut_xi_pair(Pauli::Y, Pauli::Z, u, v, w, ge, g) -
            std::cos(2.0 * bu) * std::sin(2.0 * bv) * maxcut_xi_pair(Pauli::Z, Pauli::Y, u, v, w, ge, g));
}

double maxcut_vanilla_fast_edge(int d, int e, int f, double beta, double gamma) {
    return 0.5 * (1.0 -
                  0.5 * sq(std::sin(2.0 * beta)) * ipow(std::cos(gamma), d + e - 2 * f) *
                      (1.0 - ipow(std::cos(2.0 * gamma), f)) +
                  0.5 * std::sin(4.0 * beta) * std::sin(gamma) *
                      (ipow(std::cos(gamma), d) + ipow(std::cos(gamma), e)));
}

namespace {

struct MisFactors {
    double cu, su, cv, sv;
    double r_minus_uv = 1, r_minus_vu = 1, r_bb_uv = 1, r_bb_vu = 1, r_m = 1, r_p = 1;
    double l2g_uv;
};

MisFactors mis_factors(int u, int v, const MisPhase& mis, const PmParams& params,
                       const GraphView& g) {
    NeighborhoodDecomposition nb = neighborhoods(g, u, v);
    const double l2 = mis.lambda2_p;
    auto gam = [&](int a, int b) { return params.gamma_edge[g.edge_id(a, b)]; };
    auto lead = [&](int x) {
        return 2.0 * params.gamma_vertex[x] * (l2 * g.degree(x) - mis.lambda1_p * mis.s_p[x]);
    };
    auto prod = [&](int a, const std::vector<int>& set) {
        double r = 1.0;
        for (int x : set) r *= std::cos(2.0 * l2 * gam(a, x));
        return r;
    };
    MisFactors f{};
    f.cu = std::cos(lead(u));
    f.su = std::sin(lead(u));
    f.cv = std::cos(lead(v));
    f.sv = std::sin(lead(v));
    f.r_minus_uv = prod(u, nb.u_minus_v);
    f.r_minus_vu = prod(v, nb.v_minus_u);
    f.r_bb_uv = prod(u, nb.u_bbslash_v);
    f.r_bb_vu = prod(v, nb.v_bbslash_u);
    f.r_m = f.r_p = 1.0;
    for (int x : nb.uv) {
        f.r_m *= std::cos(2.0 * l2 * (gam(u, x) - gam(v, x)));
        f.r_p *= std::cos(2.0 * l2 * (gam(u, x) + gam(v, x)));
    }
    f.l2g_uv = 2.0 * l2 * gam(u, v);
    return f;
}

}  // namespace

double mis_xi_vertex(Pauli p, int u, int v_anchor, const MisPhase& mis, const PmParams& params,
                     const GraphView& g) {
    MisFactors f = mis_factors(u, v_anchor, mis, params, g);
    if (p == Pauli::Z) return 0.0;
    const double lead = p == Pauli::X ? f.cu : f.su;
    return lead * std::cos(f.l2g_uv) * f.r_minus_uv;
}

double mis_xi_pair(Pauli p, Pauli q, int u, int v, const MisPhase& mis, const PmParams& params,
                   const GraphView& g) {
    MisFactors f = mis_factors(u, v, mis, params, g);
    const double bb = 0.5 * f.r_bb_uv * f.r_bb_vu;
    const double sum = f.r_m + f.r_p, diff = f.r_m - f.r_p;
    switch (key(p, q)) {
        case 0: return bb * (f.cu * f.cv * sum + f.su * f.sv * diff);
        case 1: return bb * (f.cu * f.sv * sum - f.su * f.cv * diff);
        case 3: return bb * (f.cv * f.su * sum - f.sv * f.cu * diff);
        case 4: return bb * (f.cu * f.cv * diff + f.su * f.sv * sum);
        case 2: return f.su * std::sin(f.l2g_uv) * f.r_minus_uv;
        case 6: return f.sv * std::sin(f.l2g_uv) * f.r_minus_vu;
        case 5: return -f.cu * std::sin(f.l2g_uv) * f.r_minus_uv;
        case 7: return -f.cv * std::sin(f.l2g_uv) * f.r_minus_vu;
    }
    return 0.0;
}

double mis_xi_vertex_unweighted(Pauli p, int degree_u, double l1, double l2, double gamma) {
    if (p == Pauli::Z) return 0.0;
    const double lead = 2.0 * gamma * (l2 * degree_u - l1);
    // d + 1 = deg(u)
    const double r = ipow(std::cos(2.0 * l2 * gamma), degree_u);
    return (p == Pauli::X ? std::cos(lead) : std::sin(lead)) * r;
}

double mis_xi_pair_unweighted(Pauli p, Pauli q, int degree_u, int degree_v, int f, double l1,
                              double l2, double gamma) {
    const int d = degree_u - 1, e = degree_v - 1;
    const double lu = 2.0 * gamma * (l2 * degree_u - l1);
    const double lv = 2.0 * gamma * (l2 * degree_v - l1);
    const double cu = std::cos(lu), su = std::sin(lu), cv = std::cos(lv), sv = std::sin(lv);
    const double c2 = std::cos(2.0 * l2 * gamma);
    const double base = 0.5 * ipow(c2, d + e - 2 * f);
    const double cf = ipow(std::cos(4.0 * l2 * gamma), f);
    const double plus = 1.0 + cf, minus = 1.0 - cf;
    const double s2 = std::sin(2.0 * l2 * gamma);
    switch (key(p, q)) {
        case 0: return base * (cu * cv * plus + su * sv * minus);
        case 1: return base * (cu * sv * plus - su * cv * minus);
        case 3: return base * (cv * su * plus - sv * cu * minus);
        case 4: return base * (cu * cv * minus + su * sv * plus);
        case 2: return su * s2 * ipow(c2, d);
        case 6: return sv * s2 * ipow(c2, e);
        case 5: return -cu * s2 * ipow(c2, d);
        case 7: return -cv * s2 * ipow(c2, e);
    }
    return 0.0;
}

}  // namespace qaoa::tables
