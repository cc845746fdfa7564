#include "qaoa/gm_engine.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

namespace qaoa {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};

void check_gamma(const WeightedHypergraph& g, const std::vector<double>& gamma) {
    if (static_cast<int>(gamma.size()) != g.m())
        throw InvalidInput("gamma has length " + std::to_string(gamma.size()) + ", expected " +
                           std::to_string(g.m()));
}

// Per-edge (cos, i sin) of γ_f w'_f.
struct EdgeTrig {
    std::vector<double> c;
    std::vector<cplx> is;
};

EdgeTrig edge_trig(const WeightedHypergraph& g, const std::vector<double>& gamma) {
    EdgeTrig t;
    t.c.resize(g.m());
    t.is.resize(g.m());
    for (int f = 0; f < g.m(); ++f) {
        const double x = gamma[f] * g.wp(f);
        t.c[f] = std::cos(x);
        t.is[f] = cplx(0.0, std::sin(x));
    }
    return t;
}

cplx subset_term(const EdgeTrig& t, const Bits& h) {
    cplx r = 1.0;
    for (std::size_t f = 0; f < t.c.size(); ++f) {
        if (h.test(f)) r *= t.is[f];
        else r *= t.c[f];
    }
    return r;
}

std::uint64_t vertex_mask(const Edge& e) {
    std::uint64_t m = 0;
    for (int u : e) m |= std::uint64_t{1} << u;
    return m;
}

// Angles rounded to 1e-15; adding 0.0 folds -0 into +0.
long long angle_key(double x) { return std::bit_cast<long long>(std::nearbyint(x * 1e15) + 0.0); }

long long mirror_key(long long k) { return std::bit_cast<long long>(-std::bit_cast<double>(k) + 0.0); }

std::vector<double> negate(std::vector<double> v) {
    for (auto& x : v) x = -x;
    return v;
}

std::vector<double> difference(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

int trailing_zeros(Trajectory f, int p) {
    if (f == 0) return p;
    return p - (std::bit_width(f));
}

double empty_edge_weight(const WeightedHypergraph& g) {
    auto i = g.find(Edge{});
    return i ? g.w(*i) : 0.0;
}

}  // namespace

ProductStateParams ProductStateParams::s_state(int n) {
    ProductStateParams s;
    s.lambda.assign(n, 0.0);
    s.omega.assign(n, kPi / 2);
    return s;
}

ProductStateParams ProductStateParams::canonical() const {
    ProductStateParams c = *this;
    for (std::size_t u = 0; u < c.omega.size(); ++u) {
        double w = std::fmod(c.omega[u], 2 * kPi);
        if (w < 0) w += 2 * kPi;
        if (w > kPi) {
            w = 2 * kPi - w;
            c.lambda[u] += kPi;
        }
        c.omega[u] = w;
        double l = std::fmod(c.lambda[u], 2 * kPi);
        if (l < 0) l += 2 * kPi;
        c.lambda[u] = l;
    }
    return c;
}

void ProductStateParams::validate(int n) const {
    if (static_cast<int>(lambda.size()) != n || static_cast<int>(omega.size()) != n)
        throw InvalidInput("product state angles must have one entry per vertex");
}

void GmParams::validate(int m) const {
    if (beta.empty()) throw InvalidInput("at least one layer is required");
    if (gamma.size() != beta.size()) throw InvalidInput("gamma and beta layer counts differ");
    if (beta.size() > 20) throw InvalidInput("layer count above 20 is not supported");
    for (const auto& layer : gamma)
        if (static_cast<int>(layer.size()) != m)
            throw InvalidInput("per-layer gamma length must equal the edge count");
}

cplx structural_factor_L(const WeightedHypergraph& g, const Edge& e,
                         const std::vector<double>& gamma, const SubhypergraphFamily& family,
                         int cap) {
    check_gamma(g, gamma);
    SubhypergraphFamily coset = coset_family(family, e, g);
    const EdgeTrig t = edge_trig(g, gamma);
    cplx sum = 0.0;
    coset.for_each([&](const Bits& h) { sum += subset_term(t, h); }, cap);
    return sum;
}

cplx super_factor_L(const WeightedHypergraph& g, const std::vector<double>& gamma,
                    const SubhypergraphFamily& family, int cap) {
    check_gamma(g, gamma);
    const int m = g.m();
    const EdgeTrig t = edge_trig(g, gamma);
    std::vector<cplx> fac(m), prefix(m + 1), suffix(m + 1);
    cplx sum = 0.0;
    // Σ_e w_e Σ_{H ∈ C_G} term(H △ {e}), each toggled term from prefix/suffix products.
    family.for_each(
        [&](const Bits& h) {
            for (int f = 0; f < m; ++f) fac[f] = h.test(f) ? t.is[f] : cplx(t.c[f]);
            prefix[0] = 1.0;
            for (int f = 0; f < m; ++f) prefix[f + 1] = prefix[f] * fac[f];
            suffix[m] = 1.0;
            for (int f = m - 1; f >= 0; --f) suffix[f] = suffix[f + 1] * fac[f];
            for (int f = 0; f < m; ++f) {
                if (g.w(f) == 0.0) continue;
                const cplx flipped = h.test(f) ? cplx(t.c[f]) : t.is[f];
                sum += g.w(f) * prefix[f] * flipped * suffix[f + 1];
            }
        },
        cap);
    return sum;
}

cplx structural_factor_T(const WeightedHypergraph& g, const Edge& e,
                         const std::vector<double>& gamma, const ProductStateParams& state,
                         int edge_cap) {
    check_gamma(g, gamma);
    state.validate(g.n());
    if (!e.empty()) g.index_of(e);
    const int n = g.n(), m = g.m();
    if (m > edge_cap) throw FamilyTooLarge(m, edge_cap);
    if (n > 64) throw InvalidInput("T enumeration supports at most 64 vertices");

    const EdgeTrig t = edge_trig(g, gamma);
    std::vector<double> cw(n);
    for (int u = 0; u < n; ++u) cw[u] = std::cos(state.omega[u]);

    std::vector<int> last(n, -1);
    std::vector<std::uint64_t> emask(m);
    for (int f = 0; f < m; ++f) {
        emask[f] = vertex_mask(g.edge(f));
        for (int u : g.edge(f)) last[u] = f;
    }
    std::vector<std::vector<int>> closes(m);
    const std::uint64_t start = vertex_mask(e);
    double fixed = 1.0;
    for (int u = 0; u < n; ++u) {
        if (last[u] >= 0) closes[last[u]].push_back(u);
        else if ((start >> u) & 1u) fixed *= cw[u];
    }
    if (fixed == 0.0) return 0.0;

    cplx sum = 0.0;
    auto close = [&](int f, std::uint64_t mask, cplx amp) {
        for (int u : closes[f])
            if ((mask >> u) & 1u) amp *= cw[u];
        return amp;
    };
    // Depth-first over include/exclude decisions; a vertex's parity is fixed once
    // its last incident edge is decided, so zero factors prune whole subtrees.
    auto dfs = [&](auto&& self, int f, std::uint64_t mask, cplx amp) -> void {
        if (f == m) {
            sum += amp;
            return;
        }
        cplx a0 = close(f, mask, amp * t.c[f]);
        if (a0 != 0.0) self(self, f + 1, mask, a0);
        const std::uint64_t m1 = mask ^ emask[f];
        cplx a1 = close(f, m1, amp * t.is[f]);
        if (a1 != 0.0) self(self, f + 1, m1, a1);
    };
    dfs(dfs, 0, start, cplx(fixed));
    return sum;
}

cplx super_factor_T(const WeightedHypergraph& g, const std::vector<double>& gamma,
                    const ProductStateParams& state, int edge_cap) {
    cplx sum = 0.0;
    for (int f = 0; f < g.m(); ++f)
        if (g.w(f) != 0.0) sum += g.w(f) * structural_factor_T(g, g.edge(f), gamma, state, edge_cap);
    return sum;
}

cplx unweighted_fast_super_L(const WeightedHypergraph& g, double gamma,
                             const std::vector<std::uint64_t>& counts) {
    for (int f = 0; f < g.m(); ++f)
        if (g.w(f) != 1.0 || g.wp(f) != 1.0)
            throw NonUnitWeights("fast path requires unit cost and phase weights");
    const int m = g.m();
    if (static_cast<int>(counts.size()) != m + 1)
        throw InvalidInput("counts must have m + 1 entries");
    const cplx is(0.0, std::sin(gamma));
    const double c = std::cos(gamma);
    cplx sum = 0.0;
    for (int k = 0; k <= m; ++k) {
        if (counts[k] == 0) continue;
        cplx term = 0.0;
        if (k > 0) term += double(k) * std::pow(is, k - 1) * std::pow(c, m - k + 1);
        if (k < m) term += double(m - k) * std::pow(is, k + 1) * std::pow(c, m - k - 1);
        sum += double(counts[k]) * term;
    }
    return sum;
}

cplx forest_L(const WeightedHypergraph& g, const Edge& e, const std::vector<double>& gamma) {
    check_gamma(g, gamma);
    auto empty = g.find(Edge{});
    SubhypergraphFamily fam = even_subhypergraph_basis(g);
    if (fam.dimension != (empty ? 1 : 0)) throw InvalidInput("hypergraph is not a forest");
    int ei = e.empty() ? -1 : g.index_of(e);
    cplx r = 1.0;
    for (int f = 0; f < g.m(); ++f) {
        const double x = gamma[f] * g.wp(f);
        if (f == ei) r *= cplx(0.0, std::sin(x));
        else if (empty && f == *empty) r *= std::exp(kI * x);
        else r *= std::cos(x);
    }
    return r;
}

std::vector<int> trajectory_indices(Trajectory f, int p) {
    std::vector<int> out;
    for (int l = 1; l <= p; ++l)
        if ((f >> (l - 1)) & 1u) out.push_back(l);
    return out;
}

std::vector<std::vector<double>> gamma_blocks(Trajectory f, const GmParams& params) {
    const int p = params.p();
    const std::size_t m = params.gamma.empty() ? 0 : params.gamma[0].size();
    std::vector<std::vector<double>> blocks;
    int start = 1;
    auto block = [&](int lo, int hi) {
        std::vector<double> s(m, 0.0);
        for (int l = lo; l <= hi; ++l)
            for (std::size_t i = 0; i < m; ++i) s[i] += params.gamma[l - 1][i];
        return s;
    };
    for (int k : trajectory_indices(f, p)) {
        blocks.push_back(block(start, k));
        start = k + 1;
    }
    blocks.push_back(block(start, p));
    return blocks;
}

GmEvaluator::GmEvaluator(const WeightedHypergraph& g, GmMode mode, ProductStateParams state,
                         GmOptions options)
    : g_(g), mode_(mode), state_(std::move(state)), opt_(options) {
    if (mode_ == GmMode::L) {
        family_ = even_subhypergraph_basis(g_);
        if (family_.dimension > opt_.dimension_cap)
            throw FamilyTooLarge(family_.dimension, opt_.dimension_cap);
        have_family_ = true;
    } else {
        if (state_.omega.empty()) state_ = ProductStateParams::s_state(g_.n());
        state_.validate(g_.n());
        state_ = state_.canonical();
        if (g_.m() > opt_.t_edge_cap) throw FamilyTooLarge(g_.m(), opt_.t_edge_cap);
    }
}

cplx GmEvaluator::compute_factor(int edge, const std::vector<double>& gamma) {
    if (mode_ == GmMode::L) {
        if (edge == -2) return super_factor_L(g_, gamma, family_, opt_.dimension_cap);
        const Edge e = edge < 0 ? Edge{} : g_.edge(edge);
        return structural_factor_L(g_, e, gamma, family_, opt_.dimension_cap);
    }
    if (edge == -2) return super_factor_T(g_, gamma, state_, opt_.t_edge_cap);
    const Edge e = edge < 0 ? Edge{} : g_.edge(edge);
    return structural_factor_T(g_, e, gamma, state_, opt_.t_edge_cap);
}

cplx GmEvaluator::factor(int edge, const std::vector<double>& gamma) {
    std::vector<long long> key(gamma.size());
    for (std::size_t i = 0; i < gamma.size(); ++i) key[i] = angle_key(gamma[i]);
    auto k = std::make_pair(edge, std::move(key));
    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second;
    cplx v = compute_factor(edge, gamma);
    // Φ(-γ) = conj Φ(γ); storing both keeps Q exactly Hermitian even when nearby
    // angles share a key.
    auto mirrored = k;
    for (auto& x : mirrored.second) x = mirror_key(x);
    memo_.emplace(std::move(k), v);
    memo_.emplace(std::move(mirrored), std::conj(v));
    return v;
}

cplx GmEvaluator::phi_at_empty_edge(const std::vector<double>& gamma) { return factor(-1, gamma); }

cplx GmEvaluator::trajectory_contribution(Trajectory f, Trajectory gt, int edge,
                                          const GmParams& params) {
    params.validate(g_.m());
    auto r = [&](Trajectory t, std::vector<std::vector<double>>& blocks) {
        blocks = gamma_blocks(t, params);
        cplx v = 1.0;
        for (int l = 0; l < params.p(); ++l)
            if ((t >> l) & 1u) v *= std::exp(kI * params.beta[l]) - 1.0;
        for (std::size_t k = 0; k + 1 < blocks.size(); ++k) v *= phi_at_empty_edge(blocks[k]);
        return v;
    };
    std::vector<std::vector<double>> bf, bg;
    const cplx rf = r(f, bf);
    const cplx rg = r(gt, bg);
    return rf * std::conj(rg) * factor(edge, difference(bf.back(), bg.back()));
}

std::vector<std::vector<cplx>> GmEvaluator::q_matrix(int edge, const GmParams& params) {
    const Trajectory n = Trajectory{1} << params.p();
    std::vector<std::vector<cplx>> q(n, std::vector<cplx>(n));
    for (Trajectory f = 0; f < n; ++f)
        for (Trajectory gt = 0; gt < n; ++gt) q[f][gt] = trajectory_contribution(f, gt, edge, params);
    return q;
}

double GmEvaluator::expectation_z(int edge, const GmParams& params) {
    params.validate(g_.m());
    const int p = params.p();
    const Trajectory n = Trajectory{1} << p;

    std::vector<cplx> r(n);
    std::vector<std::vector<double>> last(n);
    for (Trajectory f = 0; f < n; ++f) {
        auto blocks = gamma_blocks(f, params);
        cplx v = 1.0;
        for (int l = 0; l < p; ++l)
            if ((f >> l) & 1u) v *= std::exp(kI * params.beta[l]) - 1.0;
        for (std::size_t k = 0; k + 1 < blocks.size(); ++k) v *= phi_at_empty_edge(blocks[k]);
        r[f] = v;
        last[f] = std::move(blocks.back());
    }

    // In s mode Φ(0) vanishes for nonempty edges and for the super factor when w_∅ = 0,
    // so pairs whose remainder blocks coincide contribute nothing.
    bool shortcut = false;
    if (mode_ == GmMode::L && opt_.trailing_zero_shortcut) {
        if (edge >= 0) shortcut = !g_.edge(edge).empty();
        else if (edge == -2) shortcut = empty_edge_weight(g_) == 0.0;
    }

    cplx diag = 0.0;
    double off = 0.0;
    for (Trajectory f = 0; f < n; ++f) {
        const int tf = trailing_zeros(f, p);
        if (!shortcut) diag += r[f] * std::conj(r[f]) * factor(edge, difference(last[f], last[f]));
        for (Trajectory gt = 0; gt < f; ++gt) {
            if (shortcut && trailing_zeros(gt, p) == tf) continue;
            off += (r[f] * std::conj(r[gt]) * factor(edge, difference(last[f], last[gt]))).real();
        }
    }
    if (std::abs(diag.imag()) > 1e-10)
        throw ComplexResidue("imaginary residue " + std::to_string(diag.imag()) +
                             " in trajectory sum");
    return diag.real() + 2.0 * off;
}

double GmEvaluator::expectation_total(const GmParams& params) { return expectation_z(-2, params); }

double GmEvaluator::single_layer_z(int edge, double beta, const std::vector<double>& gamma) {
    const cplx phase = std::exp(kI * beta) - 1.0;
    const cplx phi0 = phi_at_empty_edge(gamma);
    if (mode_ == GmMode::L) {
        if (edge == -1 || g_.edge(edge).empty()) return 1.0;
        return 2.0 * (phase * phi0 * factor(edge, negate(gamma))).real();
    }
    const double at_zero = factor(edge, std::vector<double>(gamma.size(), 0.0)).real();
    return (1.0 + 2.0 * (1.0 - std::cos(beta)) * std::norm(phi0)) * at_zero +
           2.0 * (phase * phi0 * factor(edge, negate(gamma))).real();
}

double GmEvaluator::single_layer_total(double beta, const std::vector<double>& gamma) {
    const cplx phase = std::exp(kI * beta) - 1.0;
    const cplx phi0 = phi_at_empty_edge(gamma);
    const double at_zero = mode_ == GmMode::L
                               ? empty_edge_weight(g_)
                               : factor(-2, std::vector<double>(gamma.size(), 0.0)).real();
    return (1.0 + 2.0 * (1.0 - std::cos(beta)) * std::norm(phi0)) * at_zero +
           2.0 * (phase * phi0 * factor(-2, negate(gamma))).real();
}

double expectation_edge_p(const Edge& e, const WeightedHypergraph& g, const GmParams& params,
                          GmMode mode, const ProductStateParams& state,
                          const GmOptions& options) {
    GmEvaluator ev(g, mode, state, options);
    return ev.expectation_z(e.empty() && !g.contains(e) ? -1 : g.index_of(e), params);
}

double expectation_total_p(const WeightedHypergraph& g, const GmParams& params, GmMode mode,
                           const ProductStateParams& state, const GmOptions& options) {
    GmEvaluator ev(g, mode, state, options);
    return ev.expectation_total(params);
}

WeightedHypergraph maxcut_gm_encode(const WeightedHypergraph& maxcut_graph) {
    if (!maxcut_graph.is_simple_graph())
        throw NotASimpleGraph("MaxCut encoding requires a simple graph");
    std::vector<WeightedEdge> edges;
    double w_total = 0.0, wp_total = 0.0;
    for (const auto& e : maxcut_graph.edges()) {
        edges.push_back({e.v, -0.5 * e.w, -0.5 * e.wp});
        w_total += e.w;
        wp_total += e.wp;
    }
    edges.push_back({Edge{}, 0.5 * w_total, 0.5 * wp_total});
    return WeightedHypergraph(maxcut_graph.n(), std::move(edges));
}

}  // namespace qaoa
