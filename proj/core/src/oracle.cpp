#include "qaoa/oracle.hpp"

#include <bit>
#include <cmath>

namespace qaoa {

namespace {

std::uint64_t mask_of(const Edge& e) {
    std::uint64_t m = 0;
    for (int u : e) m |= std::uint64_t{1} << u;
    return m;
}

double sign_of(std::uint64_t x, std::uint64_t mask) {
    return (std::popcount(x & mask) & 1) ? -1.0 : 1.0;
}

void check_cap(int n, const OracleOptions& o) {
    if (n > o.qubit_cap) throw TooManyQubits(n, o.qubit_cap);
}

}  // namespace

double StateVector::norm() const {
    double s = 0.0;
    for (const auto& a : amp) s += std::norm(a);
    return std::sqrt(s);
}

cplx StateVector::inner(const StateVector& other) const {
    cplx s = 0.0;
    for (std::size_t i = 0; i < amp.size(); ++i) s += std::conj(amp[i]) * other.amp[i];
    return s;
}

StateVector prepare_product_state(const ProductStateParams& state) {
    const int n = static_cast<int>(state.omega.size());
    state.validate(n);
    StateVector psi;
    psi.n = n;
    psi.amp.assign(std::size_t{1} << n, 1.0);
    for (int u = 0; u < n; ++u) {
        const cplx a0 = std::polar(std::cos(state.omega[u] / 2), -state.lambda[u] / 2);
        const cplx a1 = std::polar(std::sin(state.omega[u] / 2), state.lambda[u] / 2);
        for (std::size_t x = 0; x < psi.amp.size(); ++x) psi.amp[x] *= ((x >> u) & 1u) ? a1 : a0;
    }
    return psi;
}

StateVector uniform_state(int n) {
    StateVector psi;
    psi.n = n;
    psi.amp.assign(std::size_t{1} << n, std::pow(2.0, -0.5 * n));
    return psi;
}

void apply_phase(StateVector& psi, const WeightedHypergraph& g, const std::vector<double>& gamma,
                 bool include_empty) {
    if (static_cast<int>(gamma.size()) != g.m()) throw InvalidInput("gamma length mismatch");
    std::vector<std::uint64_t> masks;
    std::vector<double> coef;
    for (int f = 0; f < g.m(); ++f) {
        if (g.edge(f).empty() && !include_empty) continue;
        masks.push_back(mask_of(g.edge(f)));
        coef.push_back(gamma[f] * g.wp(f));
    }
    for (std::size_t x = 0; x < psi.amp.size(); ++x) {
        double phase = 0.0;
        for (std::size_t k = 0; k < masks.size(); ++k) phase += coef[k] * sign_of(x, masks[k]);
        psi.amp[x] *= std::polar(1.0, -phase);
    }
}

void apply_product_mixer(StateVector& psi, const MixerAxes& axes, const std::vector<double>& beta) {
    const cplx i(0.0, 1.0);
    for (int u = 0; u < psi.n; ++u) {
        const double c = std::cos(beta[u]), s = std::sin(beta[u]);
        const auto& r = axes.r[u];
        const cplx u00 = c - i * s * r[2];
        const cplx u01 = -i * s * cplx(r[0], -r[1]);
        const cplx u10 = -i * s * cplx(r[0], r[1]);
        const cplx u11 = c + i * s * r[2];
        const std::size_t bit = std::size_t{1} << u;
        for (std::size_t x = 0; x < psi.amp.size(); ++x) {
            if (x & bit) continue;
            const cplx a0 = psi.amp[x], a1 = psi.amp[x | bit];
            psi.amp[x] = u00 * a0 + u01 * a1;
            psi.amp[x | bit] = u10 * a0 + u11 * a1;
        }
    }
}

void apply_grover_mixer(StateVector& psi, const StateVector& omega, double beta) {
    const cplx k = (std::polar(1.0, -beta) - 1.0) * omega.inner(psi);
    for (std::size_t x = 0; x < psi.amp.size(); ++x) psi.amp[x] += k * omega.amp[x];
}

void apply_grover_mixer(StateVector& psi, const ProductStateParams& state, double beta) {
    apply_grover_mixer(psi, prepare_product_state(state), beta);
}

double measure_z_edge(const StateVector& psi, const Edge& e) {
    const std::uint64_t mask = mask_of(e);
    double s = 0.0;
    for (std::size_t x = 0; x < psi.amp.size(); ++x) s += std::norm(psi.amp[x]) * sign_of(x, mask);
    return s;
}

PmOracleResult run_pm(const GraphView& g, const IsingWeights& w, const PmParams& params,
                      const MixerAxes& axes, const OracleOptions& options) {
    check_cap(g.n(), options);
    w.validate(g.n(), g.m());
    params.validate(g.n(), g.m());
    axes.validate(g.n());

    std::vector<WeightedEdge> terms;
    std::vector<double> gamma;
    for (int u = 0; u < g.n(); ++u) {
        terms.push_back({Edge{u}, w.h[u], w.h_p[u]});
        gamma.push_back(params.gamma_vertex[u]);
    }
    for (int i = 0; i < g.m(); ++i) {
        auto [u, v] = g.ends(i);
        terms.push_back({Edge{u, v}, w.J[i], w.J_p[i]});
        gamma.push_back(params.gamma_edge[i]);
    }
    terms.push_back({Edge{}, w.a, w.a_p});
    gamma.push_back(params.gamma_const);
    const WeightedHypergraph phase_graph(g.n(), std::move(terms));

    StateVector psi = uniform_state(g.n());
    apply_phase(psi, phase_graph, gamma, options.include_global_phase);
    apply_product_mixer(psi, axes, params.beta);

    PmOracleResult r;
    r.total = w.a;
    for (int u = 0; u < g.n(); ++u) {
        r.vertex.push_back(measure_z_edge(psi, Edge{u}));
        r.total += w.h[u] * r.vertex.back();
    }
    for (int i = 0; i < g.m(); ++i) {
        auto [u, v] = g.ends(i);
        r.edge.push_back(measure_z_edge(psi, Edge{u, v}));
        r.total += w.J[i] * r.edge.back();
    }
    return r;
}

GmOracleResult run_gm(const WeightedHypergraph& g, const GmParams& params, GmMode mode,
                      const ProductStateParams& state, const OracleOptions& options) {
    check_cap(g.n(), options);
    params.validate(g.m());
    const ProductStateParams init =
        (mode == GmMode::L || state.omega.empty()) ? ProductStateParams::s_state(g.n()) : state;
    const StateVector omega = prepare_product_state(init);
    StateVector psi = omega;
    for (int l = 0; l < params.p(); ++l) {
        apply_phase(psi, g, params.gamma[l], options.include_global_phase);
        apply_grover_mixer(psi, omega, params.beta[l]);
    }
    GmOracleResult r;
    for (int f = 0; f < g.m(); ++f) {
        r.edge.push_back(measure_z_edge(psi, g.edge(f)));
        r.total += g.w(f) * r.edge.back();
    }
    return r;
}

}  // namespace qaoa
