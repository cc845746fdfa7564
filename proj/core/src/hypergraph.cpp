#include "qaoa/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace qaoa {

Edge make_edge(std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] < 0) throw InvalidInput("negative vertex id in edge");
        if (i > 0 && vertices[i] == vertices[i - 1])
            throw InvalidInput("duplicate vertex " + std::to_string(vertices[i]) + " in edge");
    }
    return vertices;
}

WeightedHypergraph::WeightedHypergraph(int n, std::vector<WeightedEdge> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n < 1) throw InvalidInput("vertex count must be positive");
    for (int i = 0; i < m(); ++i) {
        const Edge& e = edges_[i].v;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] < 0 || e[k] >= n)
                throw InvalidInput("edge " + std::to_string(i) + " has vertex out of range");
            if (k > 0 && e[k] <= e[k - 1])
                throw InvalidInput("edge " + std::to_string(i) +
                                   " vertices must be strictly increasing");
        }
        if (!index_.emplace(e, i).second)
            throw InvalidInput("edge " + std::to_string(i) + " repeats an earlier edge");
    }
}

std::optional<int> WeightedHypergraph::find(const Edge& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int WeightedHypergraph::index_of(const Edge& e) const {
    auto i = find(e);
    if (!i) throw EdgeNotInHypergraph("edge is not in the hypergraph");
    return *i;
}

bool WeightedHypergraph::is_simple_graph() const {
    return std::all_of(edges_.begin(), edges_.end(),
                       [](const WeightedEdge& e) { return e.v.size() == 2; });
}

double WeightedHypergraph::total_weight() const {
    double s = 0.0;
    for (const auto& e : edges_) s += e.w;
    return s;
}

GraphView::GraphView(const WeightedHypergraph& g) : n_(g.n()), adj_(g.n()) {
    ends_.reserve(g.m());
    for (int i = 0; i < g.m(); ++i) {
        const Edge& e = g.edge(i);
        if (e.size() != 2)
            throw NotASimpleGraph("edge " + std::to_string(i) + " does not have two vertices");
        ends_.emplace_back(e[0], e[1]);
        adj_[e[0]].emplace_back(e[1], i);
        adj_[e[1]].emplace_back(e[0], i);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

int GraphView::edge_id(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return -1;
    const auto& a = adj_[u];
    auto it = std::lower_bound(a.begin(), a.end(), std::make_pair(v, -1));
    return (it != a.end() && it->first == v) ? it->second : -1;
}

NeighborhoodDecomposition neighborhoods(const GraphView& g, int u, int v) {
    if (g.edge_id(u, v) < 0) throw NotAnEdge("{u, v} is not an edge of the graph");
    NeighborhoodDecomposition nb;
    nb.u = u;
    nb.v = v;
    auto split = [&](int a, int b, std::vector<int>& minus, std::vector<int>& bbslash,
                     std::vector<int>* common) {
        for (auto [x, id] : g.adj(a)) {
            (void)id;
            if (x == b) continue;
            minus.push_back(x);
            if (g.edge_id(b, x) >= 0) {
                if (common) common->push_back(x);
            } else {
                bbslash.push_back(x);
            }
        }
    };
    split(u, v, nb.u_minus_v, nb.u_bbslash_v, &nb.uv);
    split(v, u, nb.v_minus_u, nb.v_bbslash_u, nullptr);
    return nb;
}

NeighborhoodDecomposition neighborhoods(const WeightedHypergraph& g, int u, int v) {
    return neighborhoods(GraphView(g), u, v);
}

void SubhypergraphFamily::for_each(const std::function<void(const Bits&)>& visit,
                                   int cap) const {
    if (dimension > cap) throw FamilyTooLarge(dimension, cap);
    Bits cur = shift ? *shift : Bits(m);
    visit(cur);
    const std::uint64_t total = size();
    for (std::uint64_t k = 1; k < total; ++k) {
        cur ^= basis[std::countr_zero(k)];
        visit(cur);
    }
}

SubhypergraphFamily even_subhypergraph_basis(const WeightedHypergraph& g) {
    const int n = g.n(), m = g.m();
    std::vector<Bits> rows(n, Bits(m));
    for (int j = 0; j < m; ++j)
        for (int u : g.edge(j)) rows[u].set(j);

    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < m && r < n; ++c) {
        int p = -1;
        for (int i = r; i < n; ++i)
            if (rows[i].test(c)) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(rows[r], rows[p]);
        for (int i = 0; i < n; ++i)
            if (i != r && rows[i].test(c)) rows[i] ^= rows[r];
        pivot_col.push_back(c);
        ++r;
    }

    std::vector<char> is_pivot(m, 0);
    for (int c : pivot_col) is_pivot[c] = 1;

    SubhypergraphFamily fam;
    fam.m = m;
    for (int free = 0; free < m; ++free) {
        if (is_pivot[free]) continue;
        Bits b(m);
        b.set(free);
        for (int i = 0; i < r; ++i)
            if (rows[i].test(free)) b.set(pivot_col[i]);
        fam.basis.push_back(std::move(b));
    }
    fam.dimension = static_cast<int>(fam.basis.size());
    return fam;
}

SubhypergraphFamily coset_family(const SubhypergraphFamily& base, const Edge& e,
                                 const WeightedHypergraph& g) {
    SubhypergraphFamily fam = base;
    Bits s = base.shift ? *base.shift : Bits(base.m);
    if (!e.empty()) s.flip(g.index_of(e));
    fam.shift = s.any() ? std::optional<Bits>(s) : std::nullopt;
    return fam;
}

std::vector<std::uint64_t> count_even_by_size(const WeightedHypergraph& g, int cap) {
    SubhypergraphFamily fam = even_subhypergraph_basis(g);
    std::vector<std::uint64_t> counts(g.m() + 1, 0);
    fam.for_each([&](const Bits& h) { ++counts[h.count()]; }, cap);
    return counts;
}

Bits vertex_parity(const WeightedHypergraph& g, const Bits& h) {
    Bits par(g.n());
    for (int j : h.ones())
        for (int u : g.edge(j)) par.flip(u);
    return par;
}

}  // namespace qaoa
