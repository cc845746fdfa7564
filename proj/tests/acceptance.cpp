// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "commands.hpp"
#include "qaoa/gm_engine.hpp"
#include "qaoa/oracle.hpp"
#include "qaoa/pm_engine.hpp"
#include "qaoa/pm_tables.hpp"
#include "qaoa/problems.hpp"
#include "qaoa/random.hpp"

using namespace qaoa;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;
using Clock = std::chrono::steady_clock;

int g_failures = 0;
std::string g_fixtures = "fixtures";

void report(bool ok, const char* name, const std::string& detail) {
    std::printf("%s  %-28s %s\n", ok ? "PASS" : "FAIL", name, detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

std::string fmt(const char* f, double a) {
    char buf[96];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

std::string fmt2(const char* f, double a, double b) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

WeightedHypergraph graph_with_edges(SplitMix64& rng, int n_lo, int n_hi, double p) {
    for (;;) {
        auto g = random_graph(rng, rng.integer(n_lo, n_hi), p);
        if (g.m() > 0) return g;
    }
}

WeightedHypergraph unit_weights(const WeightedHypergraph& g) {
    auto es = g.edges();
    for (auto& e : es) e.w = e.wp = 1.0;
    return WeightedHypergraph(g.n(), es);
}

WeightedHypergraph equal_phase_weights(const WeightedHypergraph& g) {
    auto es = g.edges();
    for (auto& e : es) e.wp = e.w;
    return WeightedHypergraph(g.n(), es);
}

WeightedHypergraph gm_instance(SplitMix64& rng, int n_max, int m_max) {
    for (;;) {
        auto g = random_hypergraph(rng, rng.integer(2, n_max), rng.integer(1, m_max), 3);
        if (g.m() > 0) return g;
    }
}

// ---------------------------------------------------------------------------

void pm_oracle_equivalence() {
    const auto t0 = Clock::now();
    SplitMix64 rng(0x5eed0001);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        auto g = random_graph(rng, rng.integer(2, 10), 0.5);
        GraphView gv(g);
        auto w = random_ising(rng, gv);
        auto params = random_pm_params(rng, gv.n(), gv.m());
        auto axes = random_axes(rng, gv.n());
        PmTerms t = expectation_terms(w, params, axes, gv);
        auto ref = run_pm(gv, w, params, axes);
        worst = std::max(worst, std::abs(t.total - ref.total));
        for (int u = 0; u < gv.n(); ++u) worst = std::max(worst, std::abs(t.vertex[u] - ref.vertex[u]));
        for (int i = 0; i < gv.m(); ++i) worst = std::max(worst, std::abs(t.edge[i] - ref.edge[i]));
    }
    const double secs = seconds_since(t0);
    report(worst < 1e-10 && secs < 60.0, "pm-oracle-equivalence",
           fmt2("50 graphs, max_err=%.3g (<1e-10), time=%.2fs (<60s)", worst, secs));
}

void pm_variant_coherence() {
    SplitMix64 rng(0x5eed0002);
    double worst = 0.0;
    for (Variant v : {Variant::Vanilla, Variant::WarmStart, Variant::FreeAxis}) {
        for (int trial = 0; trial < 20; ++trial) {
            auto g = graph_with_edges(rng, 2, 8, 0.5);
            GraphView gv(g);
            auto params = random_pm_params(rng, gv.n(), gv.m());
            std::vector<double> theta;
            for (int u = 0; u < gv.n(); ++u) theta.push_back(rng.uniform(-kPi, kPi));
            auto axes = variant_axes(v, theta, gv.n());
            auto table_vertex = [&](Pauli p, int u) {
                const double b = params.beta[u];
                if (v == Variant::Vanilla) return tables::vanilla_a_vertex(p, b);
                if (v == Variant::WarmStart) return tables::ws_a_vertex(p, b, theta[u]);
                return tables::fam_a_vertex(p, b, theta[u]);
            };
            auto table_pair = [&](Pauli p, Pauli q, int u, int w) {
                const double bu = params.beta[u], bw = params.beta[w];
                if (v == Variant::Vanilla) return tables::vanilla_a_pair(p, q, bu, bw);
                if (v == Variant::WarmStart) return tables::ws_a_pair(p, q, bu, theta[u], bw, theta[w]);
                return tables::fam_a_pair(p, q, bu, theta[u], bw, theta[w]);
            };
            for (int u = 0; u < gv.n(); ++u)
                for (Pauli p : kPaulis)
                    worst = std::max(worst, std::abs(table_vertex(p, u) - a_coeff_vertex(p, u, params, axes)));
            for (int i = 0; i < gv.m(); ++i) {
                auto [u, w] = gv.ends(i);
                for (Pauli p : kPaulis)
                    for (Pauli q : kPaulis)
                        worst = std::max(worst, std::abs(table_pair(p, q, u, w) -
                                                         a_coeff_pair(p, q, u, w, params, axes)));
            }
        }
    }
    report(worst < 1e-12, "pm-variant-coherence",
           fmt("3 variants x 20 instances, all a-channels, max_err=%.3g (<1e-12)", worst));
}

void maxcut_specialization() {
    SplitMix64 rng(0x5eed0003);
    std::vector<std::pair<std::string, WeightedHypergraph>> graphs;
    auto complete = [](int n) {
        std::vector<WeightedEdge> es;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) es.push_back({Edge{u, v}, 1.0, 1.0});
        return WeightedHypergraph(n, es);
    };
    graphs.push_back({"K3", complete(3)});
    graphs.push_back({"K4", complete(4)});
    for (int k = 0; k < 4; ++k) graphs.push_back({"random10", random_graph(rng, 10, 1.0 / 3.0, 0.5, 2.0)});

    double worst = 0.0;
    for (const auto& [name, base] : graphs) {
        // Unweighted, single angle: fast paths against the general engine and the oracle.
        {
            auto g = unit_weights(base);
            GraphView gv(g);
            auto w = maxcut_to_ising(g);
            const double beta = rng.uniform(-kPi, kPi), gamma = rng.uniform(-kPi, kPi);
            auto params = PmParams::uniform(gv.n(), gv.m(), beta, gamma);
            auto vanilla = variant_axes(Variant::Vanilla, {}, gv.n());
            auto axes = random_axes(rng, gv.n());
            auto ref_v = run_pm(gv, w, params, vanilla);
            auto ref_a = run_pm(gv, w, params, axes);
            std::vector<double> wv(gv.m(), 1.0);
            for (int i = 0; i < gv.m(); ++i) {
                auto [u, v] = gv.ends(i);
                auto nb = neighborhoods(gv, u, v);
                const double oracle_v = 0.5 * (1.0 - ref_v.edge[i]);
                const double oracle_a = 0.5 * (1.0 - ref_a.edge[i]);
                const double vals_v[] = {
                    tables::maxcut_vanilla_fast_edge(nb.d(), nb.e(), nb.f(), beta, gamma),
                    tables::maxcut_vanilla_edge(u, v, wv, params, gv),
                    tables::maxcut_closed_form_edge(u, v, wv, params, vanilla, gv),
                    0.5 * (1.0 - expectation_edge(u, v, w, params, vanilla, gv))};
                for (double x : vals_v) worst = std::max(worst, std::abs(x - oracle_v));
                const double vals_a[] = {
                    maxcut_fast_edge(nb.d(), nb.e(), nb.f(), beta, beta, gamma, axes.r[u], axes.r[v]),
                    tables::maxcut_closed_form_edge(u, v, wv, params, axes, gv),
                    0.5 * (1.0 - expectation_edge(u, v, w, params, axes, gv))};
                for (double x : vals_a) worst = std::max(worst, std::abs(x - oracle_a));
            }
        }
        // Weighted, per-term angles: closed form against the general engine and the oracle.
        {
            SplitMix64 wr(rng.next());
            std::vector<WeightedEdge> es = base.edges();
            for (auto& e : es) e.w = wr.uniform(-2, 2);
            auto g = equal_phase_weights(WeightedHypergraph(base.n(), es));
            GraphView gv(g);
            auto w = maxcut_to_ising(g);
            auto params = random_pm_params(rng, gv.n(), gv.m());
            auto axes = random_axes(rng, gv.n());
            auto ref = run_pm(gv, w, params, axes);
            std::vector<double> wv;
            for (int i = 0; i < gv.m(); ++i) wv.push_back(g.w(i));
            for (int i = 0; i < gv.m(); ++i) {
                auto [u, v] = gv.ends(i);
                const double oracle = 0.5 * wv[i] * (1.0 - ref.edge[i]);
                worst = std::max(worst, std::abs(tables::maxcut_closed_form_edge(u, v, wv, params, axes, gv) - oracle));
                worst = std::max(worst, std::abs(0.5 * wv[i] * (1.0 - expectation_edge(u, v, w, params, axes, gv)) - oracle));
            }
        }
    }
    report(worst < 1e-10, "maxcut-specialization",
           fmt("K3, K4, 4 random n=10; closed/fast/general/oracle max_err=%.3g (<1e-10)", worst));
}

void mis_specialization() {
    SplitMix64 rng(0x5eed0004);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        auto g = graph_with_edges(rng, 3, 9, 0.5);
        GraphView gv(g);
        const bool unweighted = trial % 2 == 1;
        MisInstance mis{g, {}, {}, rng.uniform(0.2, 2), rng.uniform(0.2, 2), rng.uniform(0.2, 2),
                        rng.uniform(0.2, 2)};
        for (int u = 0; u < g.n(); ++u) {
            mis.s.push_back(unweighted ? 1.0 : rng.uniform(0, 2));
            mis.s_p.push_back(unweighted ? 1.0 : rng.uniform(0, 2));
        }
        auto w = mis_to_ising(mis);
        const double gamma = rng.uniform(-kPi, kPi);
        auto params = unweighted ? PmParams::uniform(gv.n(), gv.m(), 0.3, gamma)
                                 : random_pm_params(rng, gv.n(), gv.m());
        tables::MisPhase ph{mis.lambda1_p, mis.lambda2_p, mis.s_p};
        for (int i = 0; i < gv.m(); ++i) {
            auto [u, v] = gv.ends(i);
            for (Pauli p : kPaulis) {
                const double general = xi_coeff_vertex(p, u, v, w, params, gv);
                worst = std::max(worst, std::abs(tables::mis_xi_vertex(p, u, v, ph, params, gv) - general));
                if (unweighted)
                    worst = std::max(worst, std::abs(tables::mis_xi_vertex_unweighted(
                                                         p, gv.degree(u), mis.lambda1_p, mis.lambda2_p, gamma) -
                                                     xi_vertex_free(p, u, w, params, gv)));
                for (Pauli q : kPaulis) {
                    const double gp = xi_coeff_pair(p, q, u, v, w, params, gv);
                    worst = std::max(worst, std::abs(tables::mis_xi_pair(p, q, u, v, ph, params, gv) - gp));
                    if (unweighted) {
                        auto nb = neighborhoods(gv, u, v);
                        worst = std::max(worst, std::abs(tables::mis_xi_pair_unweighted(
                                                             p, q, gv.degree(u), gv.degree(v), nb.f(),
                                                             mis.lambda1_p, mis.lambda2_p, gamma) - gp));
                    }
                }
            }
        }
    }
    report(worst < 1e-12, "mis-specialization",
           fmt("20 instances (10 unit-weight), all xi channels, max_err=%.3g (<1e-12)", worst));
}

void gm_single_layer() {
    SplitMix64 rng(0x5eed0005);
    double alg = 0.0, orc = 0.0;
    for (int trial = 0; trial < 30; ++trial) {
        auto g = gm_instance(rng, 8, 10);
        auto params = random_gm_params(rng, g.m(), 1);
        auto omega = random_product_state(rng, g.n());
        for (GmMode mode : {GmMode::L, GmMode::T}) {
            GmEvaluator ev(g, mode, omega);
            auto ref = run_gm(g, params, mode, omega);
            for (int f = 0; f < g.m(); ++f) {
                const double th = ev.single_layer_z(f, params.beta[0], params.gamma[0]);
                alg = std::max(alg, std::abs(th - ev.expectation_z(f, params)));
                orc = std::max(orc, std::abs(th - ref.edge[f]));
            }
            const double tot = ev.single_layer_total(params.beta[0], params.gamma[0]);
            alg = std::max(alg, std::abs(tot - ev.expectation_total(params)));
            orc = std::max(orc, std::abs(tot - ref.total));
        }
    }
    report(alg < 1e-13 && orc < 1e-9, "gm-single-layer",
           fmt2("30 hypergraphs, |s> and |Omega>; closed form vs p=1 sum %.3g (<1e-13), vs oracle %.3g (<1e-9)", alg, orc));
}

void gm_multi_layer() {
    const auto t0 = Clock::now();
    SplitMix64 rng(0x5eed0006);
    double worst = 0.0;
    for (int p : {2, 3}) {
        for (int trial = 0; trial < 20; ++trial) {
            auto g = gm_instance(rng, 8, 10);
            auto params = random_gm_params(rng, g.m(), p);
            auto omega = random_product_state(rng, g.n());
            const GmMode mode = trial % 2 ? GmMode::T : GmMode::L;
            GmEvaluator ev(g, mode, omega);
            auto ref = run_gm(g, params, mode, omega);
            for (int f = 0; f < g.m(); ++f)
                worst = std::max(worst, std::abs(ev.expectation_z(f, params) - ref.edge[f]));
            worst = std::max(worst, std::abs(ev.expectation_total(params) - ref.total));
        }
    }
    const double secs = seconds_since(t0);
    report(worst < 1e-9 && secs < 300.0, "gm-multi-layer",
           fmt2("p=2,3 x 20 instances, max_err=%.3g (<1e-9), time=%.2fs (<300s)", worst, secs));
}

void structural_identities() {
    SplitMix64 rng(0x5eed0007);
    double conj_err = 0, zero_err = 0, reduce_err = 0, fast_err = 0, forest_err = 0;
    for (int trial = 0; trial < 10; ++trial) {
        auto g = gm_instance(rng, 7, 9);
        auto fam = even_subhypergraph_basis(g);
        auto omega = random_product_state(rng, g.n());
        auto s = ProductStateParams::s_state(g.n());
        std::vector<double> gamma, neg, zero(g.m(), 0.0);
        for (int f = 0; f < g.m(); ++f) gamma.push_back(rng.uniform(-kPi, kPi));
        for (double x : gamma) neg.push_back(-x);
        for (int f = -1; f < g.m(); ++f) {
            const Edge e = f < 0 ? Edge{} : g.edge(f);
            conj_err = std::max(conj_err, std::abs(structural_factor_L(g, e, neg, fam) -
                                                   std::conj(structural_factor_L(g, e, gamma, fam))));
            conj_err = std::max(conj_err, std::abs(structural_factor_T(g, e, neg, omega) -
                                                   std::conj(structural_factor_T(g, e, gamma, omega))));
            zero_err = std::max(zero_err, std::abs(structural_factor_L(g, e, zero, fam) - (e.empty() ? 1.0 : 0.0)));
            double prod = 1.0;
            for (int u : e) prod *= std::cos(omega.omega[u]);
            zero_err = std::max(zero_err, std::abs(structural_factor_T(g, e, zero, omega) - prod));
            reduce_err = std::max(reduce_err, std::abs(structural_factor_T(g, e, gamma, s) -
                                                       structural_factor_L(g, e, gamma, fam)));
        }
        auto ie = g.find(Edge{});
        const double w_empty = ie ? g.w(*ie) : 0.0;
        zero_err = std::max(zero_err, std::abs(super_factor_L(g, zero, fam) - w_empty));
        auto ug = unit_weights(g);
        auto ufam = even_subhypergraph_basis(ug);
        const double gu = rng.uniform(-kPi, kPi);
        fast_err = std::max(fast_err, std::abs(unweighted_fast_super_L(ug, gu, count_even_by_size(ug)) -
                                               super_factor_L(ug, std::vector<double>(ug.m(), gu), ufam)));
    }
    for (int trial = 0; trial < 10; ++trial) {
        // Random forest: each new vertex attaches to an earlier one; optional ∅ edge.
        const int n = rng.integer(2, 9);
        std::vector<WeightedEdge> es;
        for (int v = 1; v < n; ++v)
            if (rng.uniform() < 0.8) es.push_back({Edge{rng.integer(0, v - 1), v}, rng.uniform(-2, 2), rng.uniform(-2, 2)});
        if (trial % 2) es.push_back({Edge{}, rng.uniform(-2, 2), rng.uniform(-2, 2)});
        WeightedHypergraph forest(n, es);
        auto fam = even_subhypergraph_basis(forest);
        std::vector<double> gamma;
        for (int f = 0; f < forest.m(); ++f) gamma.push_back(rng.uniform(-kPi, kPi));
        for (int f = -1; f < forest.m(); ++f) {
            const Edge e = f < 0 ? Edge{} : forest.edge(f);
            forest_err = std::max(forest_err, std::abs(forest_L(forest, e, gamma) -
                                                       structural_factor_L(forest, e, gamma, fam)));
        }
    }
    const double worst = std::max({conj_err, zero_err, reduce_err, fast_err, forest_err});
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "conj=%.2g zero=%.2g T->L=%.2g N(k)=%.2g forest=%.2g (each <1e-13, 10 inputs)",
                  conj_err, zero_err, reduce_err, fast_err, forest_err);
    report(worst < 1e-13, "structural-identities", buf);
}

void symmetry_hermiticity() {
    SplitMix64 rng(0x5eed0008);
    long long checks = 0, broken = 0;
    for (int trial = 0; trial < 10; ++trial) {
        auto g = graph_with_edges(rng, 3, 8, 0.6);
        GraphView gv(g);
        auto w = random_ising(rng, gv);
        auto params = random_pm_params(rng, gv.n(), gv.m());
        auto axes = random_axes(rng, gv.n());
        for (int i = 0; i < gv.m(); ++i) {
            auto [u, v] = gv.ends(i);
            for (Pauli p : kPaulis)
                for (Pauli q : kPaulis) {
                    checks += 2;
                    broken += a_coeff_pair(p, q, u, v, params, axes) != a_coeff_pair(q, p, v, u, params, axes);
                    broken += xi_coeff_pair(p, q, u, v, w, params, gv) != xi_coeff_pair(q, p, v, u, w, params, gv);
                }
        }
    }
    for (int trial = 0; trial < 10; ++trial) {
        auto g = gm_instance(rng, 6, 8);
        auto params = random_gm_params(rng, g.m(), rng.integer(1, 4));
        const GmMode mode = trial % 2 ? GmMode::T : GmMode::L;
        GmEvaluator ev(g, mode, random_product_state(rng, g.n()));
        for (int edge = -2; edge < g.m(); ++edge) {
            auto q = ev.q_matrix(edge, params);
            for (std::size_t a = 0; a < q.size(); ++a)
                for (std::size_t b = 0; b < q.size(); ++b) {
                    ++checks;
                    broken += q[a][b] != std::conj(q[b][a]);
                }
        }
    }
    report(broken == 0, "symmetry-hermiticity",
           fmt2("%.0f exact comparisons (a, xi index swap; Q = Q^H), %.0f broken", double(checks), double(broken)));
}

nlohmann::json read_json(const std::string& path) {
    std::ifstream in(path);
    return nlohmann::json::parse(in);
}

MaxCutInstance load_maxcut(const std::string& path) {
    auto j = read_json(path);
    std::vector<WeightedEdge> es;
    for (const auto& e : j.at("edges")) es.push_back({make_edge(e.get<std::vector<int>>()), 1.0, 1.0});
    return MaxCutInstance(j.at("n").get<int>(), es);
}

void non_locality() {
    auto a = load_maxcut(g_fixtures + "/nonlocal_path.json");
    auto b = load_maxcut(g_fixtures + "/nonlocal_path_cycle.json");
    auto angles = read_json(g_fixtures + "/nonlocal_angles.json");
    const double beta = angles.at("beta").get<double>(), gamma = angles.at("gamma").get<double>();
    const Edge e{0, 1};

    auto pm = [&](const MaxCutInstance& g) {
        GraphView gv(g);
        auto w = maxcut_to_ising(g);
        auto params = PmParams::uniform(gv.n(), gv.m(), beta, gamma);
        return 0.5 * (1.0 - expectation_edge(0, 1, w, params, variant_axes(Variant::Vanilla, {}, gv.n()), gv));
    };
    auto gm = [&](const MaxCutInstance& g) {
        auto h = maxcut_gm_encode(g);
        GmParams params{{std::vector<double>(h.m(), gamma)}, {beta}};
        GmEvaluator ev(h, GmMode::L);
        return 0.5 * (1.0 - ev.single_layer_z(h.index_of(e), beta, params.gamma[0]));
    };
    const double pm_diff = std::abs(pm(a) - pm(b));
    const double gm_diff = std::abs(gm(a) - gm(b));
    report(pm_diff < 1e-12 && gm_diff > 1e-6, "non-locality",
           fmt2("edge {0,1}, remote triangle: |dPM|=%.3g (<1e-12), |dGM|=%.3g (>1e-6)", pm_diff, gm_diff));
}

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult cli(std::vector<std::string> args) {
    args.insert(args.begin(), "qaoa-exact");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void cli_contract() {
    const std::string F = g_fixtures + "/";
    std::vector<std::string> failed;
    auto expect_eq = [&](bool ok, const std::string& what) {
        if (!ok) failed.push_back(what);
    };

    auto k3 = cli({"expect", F + "k3_maxcut.json", F + "k3_zero_angles.json"});
    expect_eq(k3.code == 0 && k3.out == slurp(F + "golden/k3_zero_expect.json"), "expect K3 golden");
    if (k3.code == 0) expect_eq(nlohmann::json::parse(k3.out).at("total").get<double>() == 1.5, "K3 total 1.5");

    auto gm = cli({"expect", "--mode", "gm", "--state", "omega", F + "gm_sample_problem.json", F + "gm_p2_params.json"});
    expect_eq(gm.code == 0 && gm.out == slurp(F + "golden/gm_p2_expect.json"), "expect GM p=2 golden");
    if (gm.code == 0) {
        auto oracle = read_json(F + "golden/gm_p2_verify.json").at("instances")[0].at("oracle_total").get<double>();
        expect_eq(std::abs(nlohmann::json::parse(gm.out).at("total").get<double>() - oracle) < 1e-9,
                  "GM p=2 total vs oracle golden");
    }

    auto bad = cli({"expect", F + "malformed.json", F + "k3_pm_params.json"});
    expect_eq(bad.code == 2 && !bad.err.empty(), "malformed JSON exit 2");

    const fs::path tmp = fs::temp_directory_path() / "qaoa_acceptance_scan.csv";
    auto scan = cli({"scan", F + "k3_maxcut.json", F + "k3_pm_params.json", "--axis", "beta:0:1.5707963267948966:33",
                     "--axis", "gamma:0:3.1415926535897931:33", "--output", tmp.string()});
    expect_eq(scan.code == 0, "scan K3 33x33 exit 0");
    if (scan.code == 0) {
        const std::string digest = nlohmann::json::parse(scan.out).at("output_digest").get<std::string>();
        std::string golden = slurp(F + "golden/k3_scan_33x33.fnv1a64");
        while (!golden.empty() && std::isspace(static_cast<unsigned char>(golden.back()))) golden.pop_back();
        expect_eq(digest == golden, "scan K3 golden checksum");
    }
    fs::remove(tmp);
    auto nodir = cli({"scan", F + "k3_maxcut.json", F + "k3_pm_params.json", "--axis", "beta:0:1:2", "--output",
                      (fs::temp_directory_path() / "qaoa_no_such_dir" / "x.csv").string()});
    expect_eq(nodir.code == 2, "scan missing directory exit 2");
    auto toomany = cli({"scan", F + "k3_maxcut.json", F + "k3_pm_params.json", "--axis", "beta:0:1:3000",
                        "--axis", "gamma:0:1:3000", "--output", tmp.string()});
    expect_eq(toomany.code == 3, "scan TooManyPoints exit 3");
    fs::remove(tmp);

    expect_eq(cli({"verify", F + "k3_maxcut.json", F + "k3_pm_params.json"}).code == 0, "verify K3 exit 0");
    expect_eq(cli({"verify", F + "ising_problem.json", F + "ising_pm_params.json"}).code == 0, "verify ising exit 0");
    expect_eq(cli({"verify", "--mode", "gm", "--state", "omega", F + "gm_sample_problem.json", F + "gm_p2_params.json"}).code == 0,
              "verify GM exit 0");
    expect_eq(cli({"verify", "--perturb", "1e-6", F + "k3_maxcut.json", F + "k3_pm_params.json"}).code == 1,
              "verify --perturb exit 1");
    expect_eq(cli({"verify", "--seed", "7", "--count", "20"}).code == 0, "verify PM seed sweep");
    expect_eq(cli({"verify", "--mode", "gm", "--state", "omega", "--layers", "2", "--seed", "7", "--count", "20"}).code == 0,
              "verify GM seed sweep");
    expect_eq(cli({"verify", "--oracle-cap", "2", F + "k3_maxcut.json", F + "k3_pm_params.json"}).code == 3,
              "verify oracle cap exit 3");

    std::string detail = "expect/scan goldens, verify exit codes incl. --perturb";
    if (!failed.empty()) {
        detail = "failed:";
        for (const auto& f : failed) detail += " [" + f + "]";
    }
    report(failed.empty(), "cli-contract", detail);
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--fixtures") g_fixtures = argv[i + 1];

    const std::vector<std::function<void()>> suites = {
        pm_oracle_equivalence, pm_variant_coherence, maxcut_specialization, mis_specialization,
        gm_single_layer,       gm_multi_layer,       structural_identities, symmetry_hermiticity,
        non_locality,          cli_contract};
    for (const auto& s : suites) {
        try {
            s();
        } catch (const std::exception& e) {
            report(false, "exception", e.what());
        }
    }
    std::printf("%d criteria failed\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
