#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "json_out.hpp"
#include "qaoa/optimize.hpp"
#include "qaoa/oracle.hpp"
#include "qaoa/random.hpp"
#include "schema.hpp"

namespace qaoa::cli {

namespace {

struct Options {
    std::string problem_path;
    std::string params_path;
    std::string mode = "pm";
    std::string state = "s";
    int layers = 0;  // 0: take from params
    int oracle_cap = 16;
    int family_cap = kDefaultDimensionCap;
    double threshold = 1e-9;
    bool have_seed = false;
    std::uint64_t seed = 0;
    int count = 1;
    std::string format;
    double perturb = 0.0;
    std::vector<std::string> axes;
    std::string output;
    std::vector<std::string> vars;
    double tol = 1e-8;
    double step = 0.1;
    bool timing = false;
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

GmMode gm_mode(const Options& o) { return o.state == "omega" ? GmMode::T : GmMode::L; }

GmOptions gm_options(const Options& o) {
    GmOptions g;
    g.dimension_cap = o.family_cap;
    return g;
}

// Per-term expectations in report order plus the total.
struct Evaluation {
    std::vector<std::vector<int>> vertices;
    std::vector<double> weights;
    std::vector<double> values;
    double constant = 0.0;
    double total = 0.0;
};

Evaluation pm_evaluation(const GraphView& gv, const IsingWeights& w, const std::vector<double>& fu,
                         const std::vector<double>& fuv) {
    Evaluation ev;
    ev.constant = w.a;
    ev.total = w.a;
    for (int u = 0; u < gv.n(); ++u) {
        ev.vertices.push_back({u});
        ev.weights.push_back(w.h[u]);
        ev.values.push_back(fu[u]);
        ev.total += w.h[u] * fu[u];
    }
    for (int i = 0; i < gv.m(); ++i) {
        auto [u, v] = gv.ends(i);
        ev.vertices.push_back({u, v});
        ev.weights.push_back(w.J[i]);
        ev.values.push_back(fuv[i]);
        ev.total += w.J[i] * fuv[i];
    }
    return ev;
}

Evaluation gm_evaluation(const WeightedHypergraph& g, const std::vector<double>& z) {
    Evaluation ev;
    for (int f = 0; f < g.m(); ++f) {
        ev.vertices.push_back(g.edge(f));
        ev.weights.push_back(g.w(f));
        ev.values.push_back(z[f]);
        ev.total += g.w(f) * z[f];
    }
    return ev;
}

Evaluation analytic_pm(const GraphView& gv, const IsingWeights& w, const PmSettings& s) {
    PmTerms t = expectation_terms(w, s.params, s.axes, gv);
    return pm_evaluation(gv, w, t.vertex, t.edge);
}

Evaluation oracle_pm(const GraphView& gv, const IsingWeights& w, const PmSettings& s, int cap) {
    OracleOptions oo;
    oo.qubit_cap = cap;
    PmOracleResult r = run_pm(gv, w, s.params, s.axes, oo);
    return pm_evaluation(gv, w, r.vertex, r.edge);
}

Evaluation analytic_gm(const WeightedHypergraph& g, const GmSettings& s, const Options& o) {
    GmEvaluator ev(g, gm_mode(o), s.state, gm_options(o));
    std::vector<double> z;
    for (int f = 0; f < g.m(); ++f) z.push_back(ev.expectation_z(f, s.params));
    return gm_evaluation(g, z);
}

Evaluation oracle_gm(const WeightedHypergraph& g, const GmSettings& s, const Options& o) {
    OracleOptions oo;
    oo.qubit_cap = o.oracle_cap;
    GmOracleResult r = run_gm(g, s.params, gm_mode(o), s.state, oo);
    return gm_evaluation(g, r.edge);
}

double max_error(const Evaluation& a, const Evaluation& b) {
    double e = std::abs(a.total - b.total);
    for (std::size_t i = 0; i < a.values.size(); ++i) e = std::max(e, std::abs(a.values[i] - b.values[i]));
    return e;
}

nlohmann::json load_params(const std::string& path) { return parse_json(read_file(path), path); }

void check_layers(const Options& o, const GmSettings& s) {
    if (o.layers > 0 && o.layers != s.params.p())
        throw SchemaError("--layers " + std::to_string(o.layers) + " does not match the " +
                          std::to_string(s.params.p()) + " layers in " + o.params_path);
}

void write_terms(JsonOut& j, const Evaluation& ev) {
    j.key("terms").begin_array();
    for (std::size_t i = 0; i < ev.values.size(); ++i) {
        j.begin_object();
        j.key("vertices").values(ev.vertices[i]);
        j.key("weight").value(ev.weights[i]);
        j.key("expectation").value(ev.values[i]);
        j.end_object();
    }
    j.end_array();
}

// ---- expect ----

int cmd_expect(const Options& o, std::ostream& out) {
    const auto t0 = Clock::now();
    Problem prob = load_problem(o.problem_path);
    auto pj = load_params(o.params_path);
    Evaluation ev;
    int layers = 0;
    if (o.mode == "pm") {
        PmSettings s = pm_settings_from_json(pj, prob);
        ev = analytic_pm(GraphView(*prob.graph), prob.ising, s);
    } else {
        GmSettings s = gm_settings_from_json(pj, prob, o.state);
        check_layers(o, s);
        layers = s.params.p();
        ev = analytic_gm(prob.hyper, s, o);
    }
    if (o.format == "csv") {
        out << "vertices,weight,expectation\n";
        for (std::size_t i = 0; i < ev.values.size(); ++i) {
            std::string vs;
            for (std::size_t k = 0; k < ev.vertices[i].size(); ++k)
                vs += (k ? " " : "") + std::to_string(ev.vertices[i][k]);
            out << vs << ',' << format_double(ev.weights[i]) << ',' << format_double(ev.values[i]) << '\n';
        }
        out << "total," << ',' << format_double(ev.total) << '\n';
        return kOk;
    }
    JsonOut j;
    j.begin_object();
    j.key("command").value("expect");
    j.key("input_digest").value(prob.digest);
    j.key("problem").value(prob.type);
    j.key("mode").value(o.mode);
    if (o.mode == "gm") {
        j.key("state").value(o.state);
        j.key("layers").value(layers);
    } else {
        j.key("constant").value(ev.constant);
    }
    write_terms(j, ev);
    j.key("total").value(ev.total);
    if (o.timing) j.key("timing_ms").value(ms_since(t0));
    j.end_object();
    out << j.str() << '\n';
    return kOk;
}

// ---- verify ----

struct VerifyCase {
    std::string id;
    Evaluation analytic;
    Evaluation oracle;
};

VerifyCase verify_files(const Options& o) {
    Problem prob = load_problem(o.problem_path);
    auto pj = load_params(o.params_path);
    VerifyCase c;
    c.id = prob.digest;
    if (o.mode == "pm") {
        PmSettings s = pm_settings_from_json(pj, prob);
        GraphView gv(*prob.graph);
        if (gv.n() > o.oracle_cap) throw TooManyQubits(gv.n(), o.oracle_cap);
        c.analytic = analytic_pm(gv, prob.ising, s);
        c.oracle = oracle_pm(gv, prob.ising, s, o.oracle_cap);
    } else {
        GmSettings s = gm_settings_from_json(pj, prob, o.state);
        check_layers(o, s);
        if (prob.hyper.n() > o.oracle_cap) throw TooManyQubits(prob.hyper.n(), o.oracle_cap);
        c.analytic = analytic_gm(prob.hyper, s, o);
        c.oracle = oracle_gm(prob.hyper, s, o);
    }
    return c;
}

VerifyCase verify_random(const Options& o, int k) {
    SplitMix64 rng(o.seed + static_cast<std::uint64_t>(k));
    VerifyCase c;
    c.id = "seed:" + std::to_string(o.seed + static_cast<std::uint64_t>(k));
    if (o.mode == "pm") {
        const int n = rng.integer(2, std::max(2, std::min(8, o.oracle_cap)));
        WeightedHypergraph g = random_graph(rng, n, 0.5);
        GraphView gv(g);
        PmSettings s;
        IsingWeights w = random_ising(rng, gv);
        s.params = random_pm_params(rng, gv.n(), gv.m());
        s.axes = random_axes(rng, gv.n());
        c.analytic = analytic_pm(gv, w, s);
        c.oracle = oracle_pm(gv, w, s, o.oracle_cap);
    } else {
        const int n = rng.integer(2, std::max(2, std::min(6, o.oracle_cap)));
        const int m = rng.integer(1, 8);
        WeightedHypergraph g = random_hypergraph(rng, n, m, 3);
        GmSettings s;
        s.params = random_gm_params(rng, g.m(), o.layers > 0 ? o.layers : 1);
        s.state = o.state == "omega" ? random_product_state(rng, n) : ProductStateParams::s_state(n);
        c.analytic = analytic_gm(g, s, o);
        c.oracle = oracle_gm(g, s, o);
    }
    return c;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const auto t0 = Clock::now();
    std::vector<VerifyCase> cases;
    if (!o.problem_path.empty()) {
        if (o.params_path.empty()) throw SchemaError("verify: a params file is required with a problem file");
        cases.push_back(verify_files(o));
    } else if (o.have_seed) {
        if (o.count < 1) throw SchemaError("--count must be positive");
        for (int k = 0; k < o.count; ++k) cases.push_back(verify_random(o, k));
    } else {
        throw SchemaError("verify: give problem and params files, or --seed");
    }
    JsonOut j;
    j.begin_object();
    j.key("command").value("verify");
    j.key("mode").value(o.mode);
    if (o.mode == "gm") j.key("state").value(o.state);
    j.key("threshold").value(o.threshold);
    if (o.perturb != 0.0) j.key("perturb").value(o.perturb);
    j.key("instances").begin_array();
    double worst = 0.0;
    bool pass = true;
    for (auto& c : cases) {
        // Negative control: shift the analytic constant (empty-edge) weight.
        c.analytic.total += o.perturb;
        const double err = max_error(c.analytic, c.oracle);
        const bool ok = err < o.threshold;
        worst = std::max(worst, err);
        pass = pass && ok;
        j.begin_object();
        j.key("id").value(c.id);
        j.key("analytic_total").value(c.analytic.total);
        j.key("oracle_total").value(c.oracle.total);
        j.key("max_abs_error").value(err);
        j.key("pass").value(ok);
        j.end_object();
    }
    j.end_array();
    j.key("max_abs_error").value(worst);
    j.key("pass").value(pass);
    if (o.timing) j.key("timing_ms").value(ms_since(t0));
    j.end_object();
    out << j.str() << '\n';
    return pass ? kOk : kMismatch;
}

// ---- scan / refine ----

// Sets one named angle group; names are beta, gamma, gamma_vertex, gamma_edge for pm and
// beta, gamma, betaL, gammaL (layer L, 1-based) for gm.
using Setter = std::function<void(double)>;

struct Objective {
    std::function<double()> eval;
    std::function<Setter(const std::string&)> setter;
};

Objective make_objective(const Options& o, Problem& prob, PmSettings& pm, GmSettings& gm,
                         std::unique_ptr<GmEvaluator>& gev) {
    Objective obj;
    if (o.mode == "pm") {
        auto gv = std::make_shared<GraphView>(*prob.graph);
        obj.eval = [&prob, &pm, gv] { return expectation_total(prob.ising, pm.params, pm.axes, *gv); };
        obj.setter = [&pm](const std::string& name) -> Setter {
            if (name == "beta") return [&pm](double x) { std::fill(pm.params.beta.begin(), pm.params.beta.end(), x); };
            if (name == "gamma")
                return [&pm](double x) {
                    std::fill(pm.params.gamma_vertex.begin(), pm.params.gamma_vertex.end(), x);
                    std::fill(pm.params.gamma_edge.begin(), pm.params.gamma_edge.end(), x);
                };
            if (name == "gamma_vertex")
                return [&pm](double x) { std::fill(pm.params.gamma_vertex.begin(), pm.params.gamma_vertex.end(), x); };
            if (name == "gamma_edge")
                return [&pm](double x) { std::fill(pm.params.gamma_edge.begin(), pm.params.gamma_edge.end(), x); };
            throw SchemaError("unknown parameter '" + name + "' (pm: beta, gamma, gamma_vertex, gamma_edge)");
        };
        return obj;
    }
    gev = std::make_unique<GmEvaluator>(prob.hyper, gm_mode(o), gm.state, gm_options(o));
    GmEvaluator* ev = gev.get();
    obj.eval = [ev, &gm] { return ev->expectation_total(gm.params); };
    obj.setter = [&gm](const std::string& name) -> Setter {
        const int p = gm.params.p();
        auto layer_of = [&](const std::string& prefix) -> int {
            if (name.rfind(prefix, 0) != 0 || name.size() == prefix.size()) return -1;
            const std::string rest = name.substr(prefix.size());
            if (!std::all_of(rest.begin(), rest.end(), ::isdigit)) return -1;
            const int l = std::stoi(rest);
            if (l < 1 || l > p) throw SchemaError("parameter '" + name + "': layer out of range");
            return l - 1;
        };
        auto set_gamma = [&gm](int l, double x) { std::fill(gm.params.gamma[l].begin(), gm.params.gamma[l].end(), x); };
        if (name == "beta") return [&gm](double x) { std::fill(gm.params.beta.begin(), gm.params.beta.end(), x); };
        if (name == "gamma")
            return [&gm, set_gamma](double x) {
                for (int l = 0; l < gm.params.p(); ++l) set_gamma(l, x);
            };
        if (name.rfind("gamma", 0) == 0) {
            const int l = layer_of("gamma");
            if (l >= 0) return [set_gamma, l](double x) { set_gamma(l, x); };
        } else if (name.rfind("beta", 0) == 0) {
            const int l = layer_of("beta");
            if (l >= 0) return [&gm, l](double x) { gm.params.beta[l] = x; };
        }
        throw SchemaError("unknown parameter '" + name + "' (gm: beta, gamma, betaL, gammaL)");
    };
    return obj;
}

AxisSpec parse_axis(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 4) throw SchemaError("--axis " + s + ": expected name:lo:hi:count");
    AxisSpec a;
    a.name = parts[0];
    try {
        std::size_t pos = 0;
        a.lo = std::stod(parts[1], &pos);
        if (pos != parts[1].size()) throw std::invalid_argument("lo");
        a.hi = std::stod(parts[2], &pos);
        if (pos != parts[2].size()) throw std::invalid_argument("hi");
        a.points = std::stoi(parts[3], &pos);
        if (pos != parts[3].size()) throw std::invalid_argument("count");
    } catch (const std::logic_error&) {
        throw SchemaError("--axis " + s + ": expected name:lo:hi:count with numeric bounds");
    }
    return a;
}

struct Loaded {
    Problem prob;
    PmSettings pm;
    GmSettings gm;
};

Loaded load_for_objective(const Options& o) {
    Loaded l;
    l.prob = load_problem(o.problem_path);
    auto pj = load_params(o.params_path);
    if (o.mode == "pm") {
        l.pm = pm_settings_from_json(pj, l.prob);
    } else {
        l.gm = gm_settings_from_json(pj, l.prob, o.state);
        check_layers(o, l.gm);
    }
    return l;
}

int cmd_scan(const Options& o, std::ostream& out) {
    const auto t0 = Clock::now();
    Loaded l = load_for_objective(o);
    std::vector<AxisSpec> axes;
    for (const auto& a : o.axes) axes.push_back(parse_axis(a));
    if (axes.empty() || axes.size() > 3) throw SchemaError("scan: give 1 to 3 --axis flags");
    std::unique_ptr<GmEvaluator> gev;
    Objective obj = make_objective(o, l.prob, l.pm, l.gm, gev);
    std::vector<Setter> setters;
    for (const auto& a : axes) setters.push_back(obj.setter(a.name));

    const auto dir = std::filesystem::path(o.output).parent_path();
    if (!dir.empty() && !std::filesystem::is_directory(dir))
        throw SchemaError(o.output + ": directory does not exist");

    Landscape land = grid_scan(
        [&](const std::vector<double>& x) {
            for (std::size_t k = 0; k < x.size(); ++k) setters[k](x[k]);
            return obj.eval();
        },
        axes);
    std::ostringstream body;
    if (o.format == "json") land.write_json(body);
    else land.write_csv(body);
    std::ofstream file(o.output, std::ios::binary);
    if (!file) throw SchemaError(o.output + ": cannot open for writing");
    file << body.str();
    file.close();
    if (!file) throw SchemaError(o.output + ": write failed");

    const std::size_t best = land.argmax();
    JsonOut j;
    j.begin_object();
    j.key("command").value("scan");
    j.key("input_digest").value(l.prob.digest);
    j.key("mode").value(o.mode);
    j.key("points").value(static_cast<long long>(land.size()));
    j.key("argmax").values(land.point(best));
    j.key("max").value(land.values[best]);
    j.key("output").value(o.output);
    j.key("output_digest").value(fnv1a64_hex(body.str()));
    if (o.timing) j.key("timing_ms").value(ms_since(t0));
    j.end_object();
    out << j.str() << '\n';
    return kOk;
}

int cmd_refine(const Options& o, std::ostream& out) {
    const auto t0 = Clock::now();
    Loaded l = load_for_objective(o);
    if (o.vars.empty()) throw SchemaError("refine: give at least one --var name=start");
    std::unique_ptr<GmEvaluator> gev;
    Objective obj = make_objective(o, l.prob, l.pm, l.gm, gev);
    std::vector<std::string> names;
    std::vector<double> start;
    std::vector<Setter> setters;
    for (const auto& v : o.vars) {
        const auto eq = v.find('=');
        if (eq == std::string::npos) throw SchemaError("--var " + v + ": expected name=start");
        names.push_back(v.substr(0, eq));
        try {
            std::size_t pos = 0;
            start.push_back(std::stod(v.substr(eq + 1), &pos));
            if (pos != v.size() - eq - 1) throw std::invalid_argument(v);
        } catch (const std::logic_error&) {
            throw SchemaError("--var " + v + ": start is not a number");
        }
        setters.push_back(obj.setter(names.back()));
    }
    if (!(o.tol > 0.0)) throw SchemaError("--tol must be positive");
    RefineResult r = refine(
        [&](const std::vector<double>& x) {
            for (std::size_t k = 0; k < x.size(); ++k) setters[k](x[k]);
            return obj.eval();
        },
        start, o.tol, o.step);
    JsonOut j;
    j.begin_object();
    j.key("command").value("refine");
    j.key("input_digest").value(l.prob.digest);
    j.key("mode").value(o.mode);
    j.key("names").begin_array();
    for (const auto& n : names) j.value(n);
    j.end_array();
    j.key("start").values(start);
    j.key("point").values(r.point);
    j.key("value").value(r.value);
    j.key("evaluations").value(r.evaluations);
    if (o.timing) j.key("timing_ms").value(ms_since(t0));
    j.end_object();
    out << j.str() << '\n';
    return kOk;
}

void add_shared(CLI::App* sub, Options& o) {
    sub->add_option("--mode", o.mode, "pm or gm")->check(CLI::IsMember({"pm", "gm"}));
    sub->add_option("--state", o.state, "gm initial state: s or omega")->check(CLI::IsMember({"s", "omega"}));
    sub->add_option("--layers", o.layers, "gm layer count")->check(CLI::Range(1, 20));
    sub->add_option("--oracle-cap", o.oracle_cap, "largest qubit count for the statevector")->check(CLI::Range(1, 30));
    sub->add_option("--family-cap", o.family_cap, "largest even-family dimension")->check(CLI::Range(0, 40));
    sub->add_option("--threshold", o.threshold, "verify tolerance");
    sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_flag("--timing", o.timing, "include wall-clock time in the report");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact QAOA expectation values"};
    app.require_subcommand(1);

    auto* expect = app.add_subcommand("expect", "evaluate an expectation report");
    expect->add_option("problem", o.problem_path)->required();
    expect->add_option("params", o.params_path)->required();
    add_shared(expect, o);

    auto* verify = app.add_subcommand("verify", "compare analytic and statevector results");
    verify->add_option("problem", o.problem_path);
    verify->add_option("params", o.params_path);
    verify->add_option("--seed", o.seed, "random instances from this seed");
    verify->add_option("--count", o.count, "number of random instances");
    verify->add_option("--perturb", o.perturb, "add this to the analytic constant weight");
    add_shared(verify, o);

    auto* scan = app.add_subcommand("scan", "evaluate <C> on a grid");
    scan->add_option("problem", o.problem_path)->required();
    scan->add_option("params", o.params_path)->required();
    scan->add_option("--axis", o.axes, "name:lo:hi:count")->required();
    scan->add_option("--output", o.output, "landscape file")->required();
    add_shared(scan, o);

    auto* refine_cmd = app.add_subcommand("refine", "pattern-search maximization of <C>");
    refine_cmd->add_option("problem", o.problem_path)->required();
    refine_cmd->add_option("params", o.params_path)->required();
    refine_cmd->add_option("--var", o.vars, "name=start")->required();
    refine_cmd->add_option("--tol", o.tol, "final step size");
    refine_cmd->add_option("--step", o.step, "initial step size");
    add_shared(refine_cmd, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kSchema;
    }
    o.have_seed = verify->count("--seed") > 0;

    try {
        if (*expect) return cmd_expect(o, out);
        if (*verify) return cmd_verify(o, out);
        if (*scan) return cmd_scan(o, out);
        if (*refine_cmd) return cmd_refine(o, out);
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kCap;
    } catch (const SchemaError& e) {
        err << "error: " << e.what() << '\n';
        return kSchema;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return kSchema;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << '\n';
        return kSchema;
    } catch (const ComplexResidue& e) {
        err << "error: " << e.what() << '\n';
        return kMismatch;
    }
    return kSchema;
}

}  // namespace qaoa::cli
