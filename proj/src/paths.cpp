#include <packlab/degree_conditions.hpp>
#include <packlab/errors.hpp>
#include <packlab/solvers.hpp>

#include <array>
#include <bit>
#include <string>

namespace packlab {

bool chvatal_hamilton_path_condition(const Graph & g)
{
    return hamilton_path_degree_condition(g.order()).satisfied_by(degree_sequence(g));
}

namespace {

class PathSearch {
public:
    PathSearch(const Graph & g, const SearchLimits & limits) : limits_(limits), n_(g.order())
    {
        for (int v = 0; v < n_; ++v) {
            std::uint32_t row = 0;
            for (int w : g.neighbours(v))
                row |= 1U << w;
            adj_[static_cast<std::size_t>(v)] = row;
        }
    }

    bool from(int v, std::uint32_t visited)
    {
        order.push_back(v);
        if (std::popcount(visited) == n_)
            return true;
        if (++nodes > limits_.node_cap)
            throw SearchAborted("Hamilton path search exceeded node cap " + std::to_string(limits_.node_cap));
        if ((nodes & 1023U) == 1 && limits_.stop.stop_requested())
            throw SearchAborted("Hamilton path search cancelled");

        for (std::uint32_t next = adj_[static_cast<std::size_t>(v)] & ~visited; next; next &= next - 1) {
            int w = std::countr_zero(next);
            if (from(w, visited | (1U << w)))
                return true;
        }
        order.pop_back();
        return false;
    }

    std::vector<int> order;
    std::uint64_t nodes = 0;

private:
    const SearchLimits & limits_;
    int n_;
    std::array<std::uint32_t, 32> adj_{};
};

} // namespace

SolveOutcome hamilton_path_exact(const Graph & g, int order_cap, const SearchLimits & limits)
{
    if (order_cap > 31)
        throw RangeError("Hamilton path order cap must be at most 31");
    if (g.order() > order_cap)
        throw CapExceeded("Hamilton path search limited to " + std::to_string(order_cap) + " vertices, got "
            + std::to_string(g.order()));

    SolveOutcome out;
    if (g.order() == 0)
        return out;
    // a disconnected graph or three or more leaves rules a path out at once
    int leaves = 0;
    for (int v = 0; v < g.order(); ++v) {
        if (g.order() > 1 && g.degree(v) == 0)
            return out;
        leaves += g.degree(v) == 1 ? 1 : 0;
    }
    if (leaves > 2)
        return out;

    PathSearch search(g, limits);
    for (int start = 0; start < g.order(); ++start) {
        if (search.from(start, 1U << start)) {
            out.found = true;
            out.certificate = HamiltonPath{search.order};
            break;
        }
    }
    out.nodes_explored = search.nodes;
    return out;
}

bool neighbourhood_has_three_edge_path(const Graph & g, int x)
{
    const auto & around = g.neighbours(x);
    for (int b : around) {
        auto from_b = g.neighbours(b) & around;
        for (int c : from_b) {
            // path a-b-c-d inside N(x)
            auto ends_a = from_b;
            ends_a.erase(c);
            auto ends_d = g.neighbours(c) & around;
            ends_d.erase(b);
            if (! ends_a.empty() && ! ends_d.empty() && (ends_a | ends_d).size() >= 2)
                return true;
        }
    }
    return false;
}

std::vector<int> square_cycle_violations(const Graph & g)
{
    std::vector<int> out;
    for (int x = 0; x < g.order(); ++x)
        if (! neighbourhood_has_three_edge_path(g, x))
            out.push_back(x);
    return out;
}

} // namespace packlab
