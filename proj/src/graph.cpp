#include <packlab/errors.hpp>
#include <packlab/graph.hpp>

#include <algorithm>
#include <string>

namespace packlab {

Graph::Graph(int n)
{
    if (n < 0)
        throw RangeError("graph order must be nonnegative, got " + std::to_string(n));
    if (n > max_graph_order)
        throw CapExceeded("graph order " + std::to_string(n) + " exceeds cap " + std::to_string(max_graph_order));
    adjacency_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

void Graph::check_vertex(int v) const
{
    if (v < 0 || v >= order())
        throw RangeError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(order()));
}

void Graph::add_edge(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw RangeError("self-loop at vertex " + std::to_string(u));
    adjacency_[static_cast<std::size_t>(u)].insert(v);
    adjacency_[static_cast<std::size_t>(v)].insert(u);
}

void Graph::remove_edge(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    adjacency_[static_cast<std::size_t>(u)].erase(v);
    adjacency_[static_cast<std::size_t>(v)].erase(u);
}

std::int64_t Graph::edge_count() const
{
    std::int64_t total = 0;
    for (const auto & row : adjacency_)
        total += row.size();
    return total / 2;
}

int Graph::min_degree() const
{
    int best = order() == 0 ? 0 : order();
    for (int v = 0; v < order(); ++v)
        best = std::min(best, degree(v));
    return best;
}

int Graph::max_degree() const
{
    int best = 0;
    for (int v = 0; v < order(); ++v)
        best = std::max(best, degree(v));
    return best;
}

std::vector<std::pair<int, int>> Graph::edges() const
{
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < order(); ++u)
        for (int v = neighbours(u).next(u); v != -1; v = neighbours(u).next(v))
            out.emplace_back(u, v);
    return out;
}

Graph complement(const Graph & g)
{
    Graph c(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (! g.adjacent(u, v))
                c.add_edge(u, v);
    return c;
}

std::vector<int> degree_sequence(const Graph & g)
{
    std::vector<int> seq(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v)
        seq[static_cast<std::size_t>(v)] = g.degree(v);
    std::sort(seq.begin(), seq.end());
    return seq;
}

Graph induced_subgraph(const Graph & g, const VertexSet & keep)
{
    auto kept = keep.members();
    std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < kept.size(); ++i)
        index[static_cast<std::size_t>(kept[i])] = static_cast<int>(i);

    Graph out(static_cast<int>(kept.size()));
    for (std::size_t i = 0; i < kept.size(); ++i)
        for (int w : g.neighbours(kept[i]) & keep)
            if (index[static_cast<std::size_t>(w)] > static_cast<int>(i))
                out.add_edge(static_cast<int>(i), index[static_cast<std::size_t>(w)]);
    return out;
}

Graph disjoint_union(const Graph & a, const Graph & b)
{
    Graph out(a.order() + b.order());
    for (auto [u, v] : a.edges())
        out.add_edge(u, v);
    for (auto [u, v] : b.edges())
        out.add_edge(u + a.order(), v + a.order());
    return out;
}

bool is_clique(const Graph & g, const VertexSet & s)
{
    for (int v : s) {
        auto others = s;
        others.erase(v);
        if (! others.is_subset_of(g.neighbours(v)))
            return false;
    }
    return true;
}

bool is_independent(const Graph & g, const VertexSet & s)
{
    for (int v : s)
        if (g.neighbours(v).intersects(s))
            return false;
    return true;
}

} // namespace packlab
