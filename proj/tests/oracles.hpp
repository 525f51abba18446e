#pragma once

// Brute-force reference answers used by the tests. They only read adjacency
// and share nothing with the solvers under test.

#include <packlab/graph.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using packlab::Graph;

// Labeled graph with edge slots (0,1),(0,2),(1,2),(0,3),... taken from mask.
inline Graph from_mask(int n, std::uint64_t mask)
{
    Graph g(n);
    int bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if (mask >> bit & 1U)
                g.add_edge(u, v);
    return g;
}

inline void for_all_graphs(int n, const std::function<void(const Graph &, std::uint64_t)> & fn)
{
    const int slots = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots); ++mask)
        fn(from_mask(n, mask), mask);
}

inline Graph random_graph(int n, double p, std::mt19937_64 & rng)
{
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                g.add_edge(u, v);
    return g;
}

inline int edges(const Graph & g)
{
    int count = 0;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            count += g.adjacent(u, v) ? 1 : 0;
    return count;
}

inline std::vector<int> sorted_degrees(const Graph & g)
{
    std::vector<int> out;
    for (int u = 0; u < g.order(); ++u) {
        int d = 0;
        for (int v = 0; v < g.order(); ++v)
            d += u != v && g.adjacent(u, v) ? 1 : 0;
        out.push_back(d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

inline bool cover(const Graph & g, std::vector<bool> & used, int r)
{
    const int n = g.order();
    int first = 0;
    while (first < n && used[static_cast<std::size_t>(first)])
        ++first;
    if (first == n)
        return true;
    std::vector<int> others;
    for (int v = first + 1; v < n; ++v)
        if (! used[static_cast<std::size_t>(v)])
            others.push_back(v);
    if (static_cast<int>(others.size()) < r - 1)
        return false;
    // every (r-1)-subset of the other unused vertices
    std::vector<bool> pick(others.size(), false);
    std::fill(pick.begin(), pick.begin() + (r - 1), true);
    do {
        std::vector<int> block{first};
        for (std::size_t i = 0; i < others.size(); ++i)
            if (pick[i])
                block.push_back(others[i]);
        bool clique = true;
        for (std::size_t a = 0; a < block.size() && clique; ++a)
            for (std::size_t b = a + 1; b < block.size() && clique; ++b)
                clique = g.adjacent(block[a], block[b]);
        if (! clique)
            continue;
        for (int v : block)
            used[static_cast<std::size_t>(v)] = true;
        if (cover(g, used, r))
            return true;
        for (int v : block)
            used[static_cast<std::size_t>(v)] = false;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return false;
}

} // namespace detail

inline bool has_clique_partition(const Graph & g, int r)
{
    if (g.order() % r != 0)
        return false;
    std::vector<bool> used(static_cast<std::size_t>(g.order()), false);
    return detail::cover(g, used, r);
}

inline bool has_perfect_matching(const Graph & g)
{
    return has_clique_partition(g, 2);
}

// Tries all k^n colour assignments.
inline bool has_equitable_colouring(const Graph & g, int k)
{
    const int n = g.order();
    std::vector<int> colour(static_cast<std::size_t>(n), 0);
    for (;;) {
        std::vector<int> sizes(static_cast<std::size_t>(k), 0);
        for (int c : colour)
            ++sizes[static_cast<std::size_t>(c)];
        auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
        bool ok = *hi - *lo <= 1;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                ok = ! (g.adjacent(u, v) && colour[static_cast<std::size_t>(u)] == colour[static_cast<std::size_t>(v)]);
        if (ok)
            return true;
        int i = 0;
        while (i < n && ++colour[static_cast<std::size_t>(i)] == k)
            colour[static_cast<std::size_t>(i++)] = 0;
        if (i == n)
            return false;
    }
}

inline bool has_hamilton_path(const Graph & g)
{
    std::vector<int> order(static_cast<std::size_t>(g.order()));
    std::iota(order.begin(), order.end(), 0);
    if (order.empty())
        return false;
    do {
        bool ok = true;
        for (std::size_t i = 1; i < order.size() && ok; ++i)
            ok = g.adjacent(order[i - 1], order[i]);
        if (ok)
            return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

// Cyclic order in which vertices at distance 1 or 2 are adjacent.
inline bool has_square_hamilton_cycle(const Graph & g)
{
    const int n = g.order();
    if (n < 3)
        return false;
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int step = 1; step <= 2 && ok; ++step) {
                int a = order[static_cast<std::size_t>(i)], b = order[static_cast<std::size_t>((i + step) % n)];
                ok = a == b || g.adjacent(a, b);
            }
        if (ok)
            return true;
    } while (std::next_permutation(order.begin() + 1, order.end()));
    return false;
}

inline bool has_clique(const Graph & g, int size)
{
    const int n = g.order();
    if (size > n)
        return false;
    std::vector<bool> pick(static_cast<std::size_t>(n), false);
    std::fill(pick.begin(), pick.begin() + size, true);
    do {
        std::vector<int> s;
        for (int v = 0; v < n; ++v)
            if (pick[static_cast<std::size_t>(v)])
                s.push_back(v);
        bool clique = true;
        for (std::size_t a = 0; a < s.size() && clique; ++a)
            for (std::size_t b = a + 1; b < s.size() && clique; ++b)
                clique = g.adjacent(s[a], s[b]);
        if (clique)
            return true;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return false;
}

inline std::int64_t choose2(std::int64_t m)
{
    return m * (m - 1) / 2;
}

// Edge count of the complete s-partite graph on m vertices with near-equal
// classes, counted pair by pair.
inline std::int64_t turan_edges(int m, int s)
{
    std::vector<int> part(static_cast<std::size_t>(m));
    for (int v = 0; v < m; ++v)
        part[static_cast<std::size_t>(v)] = v % s;
    std::int64_t count = 0;
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v)
            count += part[static_cast<std::size_t>(u)] != part[static_cast<std::size_t>(v)] ? 1 : 0;
    return count;
}

} // namespace oracle
