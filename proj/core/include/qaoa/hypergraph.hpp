#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qaoa/bits.hpp"
#include "qaoa/errors.hpp"

namespace qaoa {

// Strictly increasing vertex ids. The empty edge is a valid value.
using Edge = std::vector<int>;

// Sorts and checks for duplicates; throws InvalidInput on repeats or negatives.
Edge make_edge(std::vector<int> vertices);

struct WeightedEdge {
    Edge v;
    double w = 0.0;   // cost weight
    double wp = 0.0;  // phase weight
};

// Vertex count plus an edge set with independent cost and phase weights.
// Edge order is the construction order and indexes every per-edge sequence.
class WeightedHypergraph {
public:
    WeightedHypergraph() = default;
    WeightedHypergraph(int n, std::vector<WeightedEdge> edges);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<WeightedEdge>& edges() const { return edges_; }
    const Edge& edge(int i) const { return edges_[i].v; }
    double w(int i) const { return edges_[i].w; }
    double wp(int i) const { return edges_[i].wp; }

    std::optional<int> find(const Edge& e) const;
    // Throws EdgeNotInHypergraph.
    int index_of(const Edge& e) const;
    bool contains(const Edge& e) const { return find(e).has_value(); }

    bool is_simple_graph() const;
    double total_weight() const;

private:
    int n_ = 0;
    std::vector<WeightedEdge> edges_;
    std::map<Edge, int> index_;
};

// Adjacency view of a hypergraph whose edges all have exactly two vertices.
class GraphView {
public:
    // Throws NotASimpleGraph.
    explicit GraphView(const WeightedHypergraph& g);

    int n() const { return n_; }
    int m() const { return static_cast<int>(ends_.size()); }
    std::pair<int, int> ends(int edge) const { return ends_[edge]; }
    // (neighbor, edge index) pairs sorted by neighbor.
    const std::vector<std::pair<int, int>>& adj(int u) const { return adj_[u]; }
    int degree(int u) const { return static_cast<int>(adj_[u].size()); }
    // Edge index or -1.
    int edge_id(int u, int v) const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> ends_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
};

struct NeighborhoodDecomposition {
    int u = 0;
    int v = 0;
    std::vector<int> u_minus_v;     // N_{u\v}
    std::vector<int> u_bbslash_v;   // N_{u⫫v}
    std::vector<int> uv;            // N_{uv}
    std::vector<int> v_minus_u;     // N_{v\u}
    std::vector<int> v_bbslash_u;   // N_{v⫫u}

    int d() const { return static_cast<int>(u_minus_v.size()); }
    int e() const { return static_cast<int>(v_minus_u.size()); }
    int f() const { return static_cast<int>(uv.size()); }
};

// Throws NotAnEdge, NotASimpleGraph.
NeighborhoodDecomposition neighborhoods(const GraphView& g, int u, int v);
NeighborhoodDecomposition neighborhoods(const WeightedHypergraph& g, int u, int v);

// GF(2) family of edge-index bit strings: span(basis) optionally shifted.
struct SubhypergraphFamily {
    int m = 0;
    std::vector<Bits> basis;
    int dimension = 0;
    std::optional<Bits> shift;

    std::uint64_t size() const { return std::uint64_t{1} << dimension; }
    // Visits every member once in Gray-code order. Throws FamilyTooLarge.
    void for_each(const std::function<void(const Bits&)>& visit, int cap = 24) const;
};

inline constexpr int kDefaultDimensionCap = 24;

// Nullspace of the vertex-edge incidence parity matrix.
SubhypergraphFamily even_subhypergraph_basis(const WeightedHypergraph& g);

// C^e_G. e = ∅ gives a zero shift. Throws EdgeNotInHypergraph.
SubhypergraphFamily coset_family(const SubhypergraphFamily& base, const Edge& e,
                                 const WeightedHypergraph& g);

// N_G(k) for k = 0..m, indexed by k. Throws FamilyTooLarge.
std::vector<std::uint64_t> count_even_by_size(const WeightedHypergraph& g,
                                              int cap = kDefaultDimensionCap);

// Vertex parity of the edge subset H (bit u set iff u has odd degree in H).
Bits vertex_parity(const WeightedHypergraph& g, const Bits& h);

}  // namespace qaoa
