#pragma once

#include <packlab/vertex_set.hpp>

#include <cstdint>
#include <utility>
#include <vector>

namespace packlab {

/// Largest order a Graph may have. Keeps adjacency memory (n²/8 bytes) explicit.
inline constexpr int max_graph_order = 4096;

/// Undirected simple graph on vertices 0..n-1 with one adjacency bitset per vertex.
///
/// Adjacency is kept symmetric and irreflexive by every mutator, so the
/// invariants hold for any value a caller can observe.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int order() const { return static_cast<int>(adjacency_.size()); }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    bool adjacent(int u, int v) const { return adjacency_[static_cast<std::size_t>(u)].contains(v); }
    const VertexSet & neighbours(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return neighbours(v).size(); }

    std::int64_t edge_count() const;
    int min_degree() const;
    int max_degree() const;

    /// Edges (u, v) with u < v, ordered by u then v.
    std::vector<std::pair<int, int>> edges() const;

    VertexSet all_vertices() const { return VertexSet::full(order()); }
    VertexSet empty_set() const { return VertexSet(order()); }

    bool operator==(const Graph &) const = default;

private:
    void check_vertex(int v) const;

    std::vector<VertexSet> adjacency_;
};

Graph complement(const Graph & g);

/// Degrees sorted ascending.
std::vector<int> degree_sequence(const Graph & g);

/// Graph induced on `keep`, relabelled to 0..|keep|-1 in increasing order.
Graph induced_subgraph(const Graph & g, const VertexSet & keep);

/// Disjoint union; vertices of `b` are shifted by a.order().
Graph disjoint_union(const Graph & a, const Graph & b);

bool is_clique(const Graph & g, const VertexSet & s);
bool is_independent(const Graph & g, const VertexSet & s);

/// Number of unordered pairs, m choose 2.
constexpr std::int64_t pairs(std::int64_t m)
{
    return m < 2 ? 0 : m * (m - 1) / 2;
}

} // namespace packlab
