#include "schema.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "qaoa/problems.hpp"

namespace qaoa::cli {

using nlohmann::json;

namespace {

void require_object(const json& j, const std::string& where) {
    if (!j.is_object()) throw SchemaError(where + ": expected an object");
}

void check_keys(const json& j, const std::string& where, const std::set<std::string>& allowed) {
    for (const auto& [k, _] : j.items())
        if (!allowed.count(k)) throw SchemaError(where + "." + k + ": unknown field");
}

double number(const json& j, const std::string& where) {
    if (!j.is_number()) throw SchemaError(where + ": expected a number");
    return j.get<double>();
}

double number_or(const json& j, const std::string& key, double fallback, const std::string& where) {
    return j.contains(key) ? number(j.at(key), where + "." + key) : fallback;
}

int integer(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw SchemaError(where + ": expected an integer");
    return j.get<int>();
}

std::vector<double> numbers(const json& j, const std::string& where) {
    if (!j.is_array()) throw SchemaError(where + ": expected an array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(number(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

// Scalar broadcast to `len` or an array of exactly `len` numbers.
std::vector<double> broadcast(const json& j, std::size_t len, const std::string& where) {
    if (j.is_number()) return std::vector<double>(len, j.get<double>());
    auto v = numbers(j, where);
    if (v.size() != len)
        throw SchemaError(where + ": expected " + std::to_string(len) + " entries, got " +
                          std::to_string(v.size()));
    return v;
}

std::vector<double> sized_or(const json& j, const std::string& key, std::size_t len,
                             std::vector<double> fallback, const std::string& where) {
    return j.contains(key) ? broadcast(j.at(key), len, where + "." + key) : fallback;
}

std::vector<Edge> edge_list(const json& j, int n, const std::string& where, bool pairs_only) {
    if (!j.is_array()) throw SchemaError(where + ": expected an array of edges");
    std::vector<Edge> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string w = where + "[" + std::to_string(i) + "]";
        if (!j[i].is_array()) throw SchemaError(w + ": expected an array of vertex ids");
        std::vector<int> vs;
        for (std::size_t k = 0; k < j[i].size(); ++k) {
            const int v = integer(j[i][k], w + "[" + std::to_string(k) + "]");
            if (v < 0 || v >= n) throw SchemaError(w + ": vertex " + std::to_string(v) + " out of range");
            vs.push_back(v);
        }
        if (pairs_only && vs.size() != 2) throw SchemaError(w + ": expected exactly two vertices");
        try {
            out.push_back(make_edge(vs));
        } catch (const InvalidInput& e) {
            throw SchemaError(w + ": " + e.what());
        }
    }
    return out;
}

WeightedHypergraph build(int n, const std::vector<Edge>& edges, const std::vector<double>& w,
                         const std::vector<double>& wp, const std::string& where) {
    std::vector<WeightedEdge> es;
    for (std::size_t i = 0; i < edges.size(); ++i) es.push_back({edges[i], w[i], wp[i]});
    try {
        return WeightedHypergraph(n, std::move(es));
    } catch (const InvalidInput& e) {
        throw SchemaError(where + ": " + e.what());
    }
}

int vertex_count(const json& j) {
    if (!j.contains("n")) throw SchemaError("problem.n: missing");
    const int n = integer(j.at("n"), "problem.n");
    if (n < 1 || n > 64) throw SchemaError("problem.n: must be in [1, 64]");
    return n;
}

}  // namespace

std::string fnv1a64_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError(path + ": cannot open");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_json(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // The parser message carries the line and column.
        throw SchemaError(what + ": malformed JSON: " + e.what());
    }
}

Problem load_problem(const std::string& path) {
    const std::string text = read_file(path);
    return problem_from_json(parse_json(text, path), fnv1a64_hex(text));
}

Problem problem_from_json(const json& j, const std::string& digest) {
    require_object(j, "problem");
    if (!j.contains("type") || !j.at("type").is_string())
        throw SchemaError("problem.type: expected one of maxcut, mis, qubo, ising, hypergraph");
    Problem p;
    p.type = j.at("type").get<std::string>();
    p.digest = digest;
    const std::string W = "problem";

    if (p.type == "maxcut") {
        check_keys(j, W, {"type", "n", "edges", "weights", "phase_weights"});
        const int n = vertex_count(j);
        auto edges = edge_list(j.at("edges"), n, W + ".edges", true);
        auto w = sized_or(j, "weights", edges.size(), std::vector<double>(edges.size(), 1.0), W);
        auto wp = sized_or(j, "phase_weights", edges.size(), w, W);
        p.graph = build(n, edges, w, wp, W + ".edges");
        p.ising = maxcut_to_ising(*p.graph);
        p.hyper = maxcut_gm_encode(*p.graph);
    } else if (p.type == "mis") {
        check_keys(j, W, {"type", "n", "edges", "s", "s_phase", "lambda1", "lambda2",
                          "lambda1_phase", "lambda2_phase"});
        const int n = vertex_count(j);
        auto edges = edge_list(j.at("edges"), n, W + ".edges", true);
        std::vector<double> ones(edges.size(), 1.0);
        MisInstance mis;
        mis.graph = build(n, edges, ones, ones, W + ".edges");
        mis.s = sized_or(j, "s", n, std::vector<double>(n, 1.0), W);
        mis.s_p = sized_or(j, "s_phase", n, mis.s, W);
        mis.lambda1 = number_or(j, "lambda1", 1.0, W);
        mis.lambda2 = number_or(j, "lambda2", 1.0, W);
        mis.lambda1_p = number_or(j, "lambda1_phase", mis.lambda1, W);
        mis.lambda2_p = number_or(j, "lambda2_phase", mis.lambda2, W);
        try {
            p.ising = mis_to_ising(mis);
        } catch (const InvalidInput& e) {
            throw SchemaError(W + ": " + e.what());
        }
        p.graph = mis.graph;
    } else if (p.type == "qubo") {
        check_keys(j, W, {"type", "n", "q", "linear", "offset"});
        const int n = vertex_count(j);
        QuboInstance q;
        q.n = n;
        if (!j.contains("q") || !j.at("q").is_array() || j.at("q").size() != std::size_t(n))
            throw SchemaError(W + ".q: expected " + std::to_string(n) + " rows");
        for (int r = 0; r < n; ++r) {
            auto row = broadcast(j.at("q")[r], n, W + ".q[" + std::to_string(r) + "]");
            q.q.insert(q.q.end(), row.begin(), row.end());
        }
        q.linear = sized_or(j, "linear", n, std::vector<double>(n, 0.0), W);
        q.offset = number_or(j, "offset", 0.0, W);
        IsingProblem ip;
        try {
            ip = qubo_to_ising(q);
        } catch (const InvalidInput& e) {
            throw SchemaError(W + ".q: " + e.what());
        }
        p.graph = ip.graph;
        p.ising = ip.weights;
    } else if (p.type == "ising") {
        check_keys(j, W, {"type", "n", "edges", "a", "h", "J", "a_phase", "h_phase", "J_phase"});
        const int n = vertex_count(j);
        auto edges = edge_list(j.at("edges"), n, W + ".edges", true);
        std::vector<double> ones(edges.size(), 1.0);
        p.graph = build(n, edges, ones, ones, W + ".edges");
        auto& w = p.ising;
        w.a = number_or(j, "a", 0.0, W);
        w.h = sized_or(j, "h", n, std::vector<double>(n, 0.0), W);
        w.J = sized_or(j, "J", edges.size(), ones, W);
        w.a_p = number_or(j, "a_phase", w.a, W);
        w.h_p = sized_or(j, "h_phase", n, w.h, W);
        w.J_p = sized_or(j, "J_phase", edges.size(), w.J, W);
    } else if (p.type == "hypergraph") {
        check_keys(j, W, {"type", "n", "edges", "weights", "phase_weights"});
        const int n = vertex_count(j);
        auto edges = edge_list(j.at("edges"), n, W + ".edges", false);
        auto w = sized_or(j, "weights", edges.size(), std::vector<double>(edges.size(), 1.0), W);
        auto wp = sized_or(j, "phase_weights", edges.size(), w, W);
        p.hyper = build(n, edges, w, wp, W + ".edges");
    } else {
        throw SchemaError("problem.type: unknown type '" + p.type + "'");
    }
    if (p.graph && p.type != "maxcut") p.hyper = ising_to_hypergraph(GraphView(*p.graph), p.ising);
    return p;
}

PmSettings pm_settings_from_json(const json& j, const Problem& problem) {
    require_object(j, "params");
    if (!problem.graph) throw SchemaError("problem: type '" + problem.type + "' has no product-mixer form");
    check_keys(j, "params", {"beta", "gamma", "gamma_vertex", "gamma_edge", "gamma_const", "mixer"});
    const int n = problem.graph->n(), m = problem.graph->m();
    PmSettings s;
    if (!j.contains("beta")) throw SchemaError("params.beta: missing");
    s.params.beta = broadcast(j.at("beta"), n, "params.beta");
    if (j.contains("gamma")) {
        const double g = number(j.at("gamma"), "params.gamma");
        s.params.gamma_vertex.assign(n, g);
        s.params.gamma_edge.assign(m, g);
        s.params.gamma_const = g;
    }
    if (j.contains("gamma_vertex"))
        s.params.gamma_vertex = broadcast(j.at("gamma_vertex"), n, "params.gamma_vertex");
    if (j.contains("gamma_edge"))
        s.params.gamma_edge = broadcast(j.at("gamma_edge"), m, "params.gamma_edge");
    s.params.gamma_const = number_or(j, "gamma_const", s.params.gamma_const, "params");
    if (s.params.gamma_vertex.empty() && n > 0)
        throw SchemaError("params.gamma_vertex: missing (or give params.gamma)");
    if (s.params.gamma_edge.size() != std::size_t(m))
        throw SchemaError("params.gamma_edge: missing (or give params.gamma)");

    s.axes = variant_axes(Variant::Vanilla, {}, n);
    if (j.contains("mixer")) {
        const json& mx = j.at("mixer");
        require_object(mx, "params.mixer");
        check_keys(mx, "params.mixer", {"variant", "theta", "axes"});
        if (mx.contains("axes")) {
            if (mx.contains("variant")) throw SchemaError("params.mixer: give either variant or axes");
            const json& a = mx.at("axes");
            if (!a.is_array() || a.size() != std::size_t(n))
                throw SchemaError("params.mixer.axes: expected " + std::to_string(n) + " unit vectors");
            s.axes.r.clear();
            for (int u = 0; u < n; ++u) {
                auto v = numbers(a[u], "params.mixer.axes[" + std::to_string(u) + "]");
                if (v.size() != 3) throw SchemaError("params.mixer.axes[" + std::to_string(u) + "]: expected 3 numbers");
                s.axes.r.push_back({v[0], v[1], v[2]});
            }
        } else {
            const std::string variant = mx.value("variant", std::string("vanilla"));
            std::vector<double> theta = sized_or(mx, "theta", n, std::vector<double>(n, 0.0), "params.mixer");
            if (variant == "vanilla") s.axes = variant_axes(Variant::Vanilla, {}, n);
            else if (variant == "warm_start") s.axes = variant_axes(Variant::WarmStart, theta, n);
            else if (variant == "free_axis") s.axes = variant_axes(Variant::FreeAxis, theta, n);
            else throw SchemaError("params.mixer.variant: expected vanilla, warm_start or free_axis");
        }
    }
    try {
        s.axes.validate(n);
    } catch (const InvalidInput& e) {
        throw SchemaError(std::string("params.mixer.axes: ") + e.what());
    }
    return s;
}

std::vector<double> expand_gm_gamma(const json& j, const WeightedHypergraph& g,
                                    const std::string& field) {
    const std::size_t m = g.m();
    const bool trailing_empty = m > 0 && g.edge(m - 1).empty();
    if (j.is_number()) return std::vector<double>(m, j.get<double>());
    auto v = numbers(j, field);
    if (trailing_empty && v.size() + 1 == m) v.push_back(0.0);
    if (v.size() != m)
        throw SchemaError(field + ": expected " + std::to_string(m) + " entries, got " +
                          std::to_string(v.size()));
    return v;
}

GmSettings gm_settings_from_json(const json& j, const Problem& problem,
                                 const std::string& state_mode) {
    require_object(j, "params");
    check_keys(j, "params", {"layers", "lambda", "omega"});
    const int n = problem.hyper.n();
    GmSettings s;
    if (!j.contains("layers") || !j.at("layers").is_array() || j.at("layers").empty())
        throw SchemaError("params.layers: expected a nonempty array");
    const json& layers = j.at("layers");
    for (std::size_t l = 0; l < layers.size(); ++l) {
        const std::string W = "params.layers[" + std::to_string(l) + "]";
        require_object(layers[l], W);
        check_keys(layers[l], W, {"gamma", "beta"});
        if (!layers[l].contains("gamma") || !layers[l].contains("beta"))
            throw SchemaError(W + ": needs gamma and beta");
        s.params.gamma.push_back(expand_gm_gamma(layers[l].at("gamma"), problem.hyper, W + ".gamma"));
        s.params.beta.push_back(number(layers[l].at("beta"), W + ".beta"));
    }
    if (s.params.p() > 20) throw SchemaError("params.layers: at most 20 layers");
    if (state_mode == "omega") {
        if (!j.contains("omega")) throw SchemaError("params.omega: required for --state omega");
        s.state.omega = broadcast(j.at("omega"), n, "params.omega");
        s.state.lambda = sized_or(j, "lambda", n, std::vector<double>(n, 0.0), "params");
    } else {
        s.state = ProductStateParams::s_state(n);
    }
    return s;
}

}  // namespace qaoa::cli
