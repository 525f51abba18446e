#include <packlab/degree_conditions.hpp>
#include <packlab/errors.hpp>
#include <packlab/solvers.hpp>

#include <string>

namespace packlab {

namespace {

std::string params(int n, int r)
{
    return "(n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")";
}

// deg * r >= (r-1) * order, i.e. deg >= (r-1)order/r without rounding.
bool is_high(std::int64_t deg, int r, std::int64_t order)
{
    return deg * r >= static_cast<std::int64_t>(r - 1) * order;
}

} // namespace

SolveOutcome krfree_greedy_packing(const Graph & g, int r, const SearchLimits & limits)
{
    const int n = g.order();
    if (r < 2 || n % r != 0)
        throw RangeError("greedy packing needs r >= 2 and r | n, got " + params(n, r));

    auto check_degrees = [&](const Graph & current) {
        auto cond = packing_degree_condition(current.order(), r);
        auto failing = cond.failing_clauses(degree_sequence(current));
        if (! failing.empty())
            throw HypothesisViolated("degree condition " + failing.front() + " fails on " + params(current.order(), r));
    };
    if (n == 0)
        return {true, PackingCertificate{}, 0};
    check_degrees(g);

    SolveOutcome out;
    PackingCertificate cert;
    VertexSet alive = g.all_vertices();

    while (! alive.empty()) {
        const std::int64_t m = alive.size();
        auto deg = [&](int v) { return static_cast<std::int64_t>(g.neighbours(v).intersection_size(alive)); };

        int lowest = -1;
        for (int v : alive)
            if (lowest == -1 || deg(v) < deg(lowest))
                lowest = v;

        if (is_high(deg(lowest), r, m)) {
            // minimum degree (r-1)m/r: a packing exists, found by exact search
            auto kept = alive.members();
            auto rest = perfect_clique_packing(induced_subgraph(g, alive), r, limits);
            out.nodes_explored += rest.nodes_explored;
            if (! rest.found)
                throw HypothesisViolated("no packing of the high minimum-degree remainder on " + params(int(m), r));
            for (const auto & block : std::get<PackingCertificate>(rest.certificate).blocks) {
                VertexSet mapped(n);
                for (int v : block)
                    mapped.insert(kept[static_cast<std::size_t>(v)]);
                cert.blocks.push_back(std::move(mapped));
            }
            break;
        }

        VertexSet clique(n);
        clique.insert(lowest);
        VertexSet common = g.neighbours(lowest) & alive;
        for (int step = 2; step <= r; ++step) {
            ++out.nodes_explored;
            int pick = -1;
            for (int u : common)
                if (is_high(deg(u), r, m)) {
                    pick = u;
                    break;
                }
            // only the last vertex may have low degree
            if (pick == -1 && step == r)
                pick = common.first();
            if (pick == -1)
                throw HypothesisViolated("cannot extend vertex " + std::to_string(lowest) + " to an r-clique through "
                    + "high-degree neighbours on " + params(int(m), r));
            clique.insert(pick);
            common &= g.neighbours(pick);
        }
        if (! common.empty())
            throw HypothesisViolated("vertex " + std::to_string(lowest) + " of degree " + std::to_string(deg(lowest))
                + " lies in a K_{r+1} with vertex " + std::to_string(common.first()));

        cert.blocks.push_back(clique);
        alive -= clique;
        if (! alive.empty())
            check_degrees(induced_subgraph(g, alive));
    }

    out.found = true;
    out.certificate = std::move(cert);
    return out;
}

std::vector<VertexSet> turan_partition(const Graph & g, int r, const SearchLimits & limits)
{
    const int n = g.order();
    if (r < 1 || n < r || n % r != 0)
        throw RangeError("Turan partition needs r >= 1, n >= r and r | n, got " + params(n, r));
    const int part = n / r;

    auto seq = degree_sequence(g);
    if (! is_high(seq[static_cast<std::size_t>(part - 1)], r, n))
        throw HypothesisViolated("d_{n/r} = " + std::to_string(seq[static_cast<std::size_t>(part - 1)])
            + " is below (r-1)n/r on " + params(n, r));
    if (auto clique = find_clique(g, r + 1, g.all_vertices(), limits))
        throw HypothesisViolated("graph contains a K_{r+1} on " + params(n, r));

    VertexSet high(n);
    for (int v = 0; v < n; ++v)
        if (is_high(g.degree(v), r, n))
            high.insert(v);

    // Extends `clique` to r-1 high-degree vertices inside `common` and returns
    // the common neighbourhood of the result.
    auto grow = [&](VertexSet clique, VertexSet common) {
        while (clique.size() < r - 1) {
            int pick = (common & high).first();
            if (pick == -1)
                throw HypothesisViolated("no high-degree vertex extends the clique on " + params(n, r));
            clique.insert(pick);
            common &= g.neighbours(pick);
        }
        return common;
    };
    auto take_class = [&](const VertexSet & common) {
        if (common.size() < part)
            throw HypothesisViolated("common neighbourhood smaller than n/r on " + params(n, r));
        VertexSet cls(n);
        for (int v = common.first(); cls.size() < part; v = common.next(v))
            cls.insert(v);
        return cls;
    };

    std::vector<VertexSet> classes;
    {
        VertexSet clique(n), common = g.all_vertices();
        if (r >= 2) {
            int seed = high.first();
            clique.insert(seed);
            common = g.neighbours(seed);
        }
        classes.push_back(take_class(grow(clique, common)));
    }

    for (int j = 1; j < r; ++j) {
        VertexSet clique(n), common = g.all_vertices();
        for (int k = 0; k < j; ++k) {
            int x = (classes[static_cast<std::size_t>(k)] & high).first();
            if (x == -1)
                throw HypothesisViolated("class " + std::to_string(k) + " has no high-degree vertex on " + params(n, r));
            if (! (clique - g.neighbours(x)).empty())
                throw HypothesisViolated("class representatives are not pairwise adjacent on " + params(n, r));
            clique.insert(x);
            common &= g.neighbours(x);
        }
        common = grow(clique, common);
        for (const auto & earlier : classes)
            if (common.intersects(earlier))
                throw HypothesisViolated("new class overlaps an earlier one on " + params(n, r));
        classes.push_back(take_class(common));
    }

    for (const auto & cls : classes)
        if (! is_independent(g, cls))
            throw HypothesisViolated("constructed class is not independent on " + params(n, r));
    return classes;
}

} // namespace packlab
