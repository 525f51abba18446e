#include <packlab/errors.hpp>
#include <packlab/solvers.hpp>

#include <string>

namespace packlab {

namespace {

class NodeCounter {
public:
    explicit NodeCounter(const SearchLimits & limits) : limits_(limits) {}

    void tick()
    {
        if (++nodes_ > limits_.node_cap)
            throw SearchAborted("search exceeded node cap " + std::to_string(limits_.node_cap));
        if ((nodes_ & 1023U) == 1 && limits_.stop.stop_requested())
            throw SearchAborted("search cancelled");
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    const SearchLimits & limits_;
    std::uint64_t nodes_ = 0;
};

class CliquePacker {
public:
    CliquePacker(const Graph & g, int r, const SearchLimits & limits) : g_(g), r_(r), counter_(limits) {}

    bool solve(const VertexSet & uncovered)
    {
        if (uncovered.empty())
            return true;
        counter_.tick();
        for (int v : uncovered)
            if (g_.neighbours(v).intersection_size(uncovered) < r_ - 1)
                return false;

        int v = uncovered.first();
        VertexSet block(g_.order());
        block.insert(v);
        return extend(uncovered, block, g_.neighbours(v) & uncovered, r_ - 1);
    }

    std::vector<VertexSet> blocks;
    std::uint64_t nodes() const { return counter_.nodes(); }

private:
    // Grow `block` by `need` more vertices from `candidates`, in increasing order.
    bool extend(const VertexSet & uncovered, VertexSet & block, const VertexSet & candidates, int need)
    {
        if (need == 0) {
            blocks.push_back(block);
            if (solve(uncovered - block))
                return true;
            blocks.pop_back();
            return false;
        }
        int remaining = candidates.size();
        for (int u : candidates) {
            if (remaining-- < need)
                break;
            auto next = candidates & g_.neighbours(u);
            for (int w = next.first(); w != -1 && w < u; w = next.next(w))
                next.erase(w);
            block.insert(u);
            if (extend(uncovered, block, next, need - 1))
                return true;
            block.erase(u);
        }
        return false;
    }

    const Graph & g_;
    int r_;
    NodeCounter counter_;
};

class CliqueFinder {
public:
    CliqueFinder(const Graph & g, const SearchLimits & limits) : g_(g), counter_(limits) {}

    bool extend(VertexSet & clique, const VertexSet & candidates, int need)
    {
        counter_.tick();
        if (need == 0)
            return true;
        if (candidates.size() < need)
            return false;
        for (int u : candidates) {
            auto next = candidates & g_.neighbours(u);
            for (int w = next.first(); w != -1 && w < u; w = next.next(w))
                next.erase(w);
            clique.insert(u);
            if (extend(clique, next, need - 1))
                return true;
            clique.erase(u);
        }
        return false;
    }

private:
    const Graph & g_;
    NodeCounter counter_;
};

class EquitableFiller {
public:
    std::vector<VertexSet> classes;

    EquitableFiller(const Graph & g, int k, const SearchLimits & limits) :
        classes(static_cast<std::size_t>(k), VertexSet(g.order())),
        g_(g),
        small_(g.order() / k),
        big_quota_(g.order() % k),
        counter_(limits)
    {
    }

    bool assign(int v)
    {
        if (v == g_.order())
            return true;
        counter_.tick();
        bool tried_empty = false;
        for (auto & cls : classes) {
            int size = cls.size();
            if (size == 0) {
                // empty classes are interchangeable
                if (tried_empty)
                    continue;
                tried_empty = true;
            }
            if (size > small_ || (size == small_ && big_used_ == big_quota_))
                continue;
            if (g_.neighbours(v).intersects(cls))
                continue;
            bool grows_big = size == small_;
            cls.insert(v);
            big_used_ += grows_big ? 1 : 0;
            if (assign(v + 1))
                return true;
            big_used_ -= grows_big ? 1 : 0;
            cls.erase(v);
        }
        return false;
    }

    std::uint64_t nodes() const { return counter_.nodes(); }

private:
    const Graph & g_;
    int small_, big_quota_, big_used_ = 0;
    NodeCounter counter_;
};

} // namespace

SolveOutcome perfect_clique_packing(const Graph & g, int r, const SearchLimits & limits)
{
    if (r < 1)
        throw RangeError("clique packing needs r >= 1, got " + std::to_string(r));
    SolveOutcome out;
    if (g.order() % r != 0)
        return out;

    CliquePacker packer(g, r, limits);
    out.found = packer.solve(g.all_vertices());
    out.nodes_explored = packer.nodes();
    if (out.found)
        out.certificate = PackingCertificate{std::move(packer.blocks)};
    return out;
}

SolveOutcome equitable_colouring(const Graph & g, int k, const SearchLimits & limits)
{
    if (k < 1)
        throw RangeError("equitable colouring needs k >= 1, got " + std::to_string(k));
    const int n = g.order();
    SolveOutcome out;

    if (n % k == 0 && n / k >= 2) {
        auto packed = perfect_clique_packing(complement(g), n / k, limits);
        out.found = packed.found;
        out.nodes_explored = packed.nodes_explored;
        if (packed.found)
            out.certificate = ColouringCertificate{std::get<PackingCertificate>(packed.certificate).blocks};
        return out;
    }

    EquitableFiller filler(g, k, limits);
    out.found = filler.assign(0);
    out.nodes_explored = filler.nodes();
    if (out.found)
        out.certificate = ColouringCertificate{std::move(filler.classes)};
    return out;
}

bool hajnal_szemeredi_guarantee(const Graph & g, int r)
{
    if (r < 1 || g.order() % r != 0)
        throw RangeError("Hajnal-Szemeredi guarantee needs r | n");
    return static_cast<std::int64_t>(g.min_degree()) * r >= static_cast<std::int64_t>(r - 1) * g.order();
}

std::optional<VertexSet> find_clique(const Graph & g, int size, const VertexSet & within, const SearchLimits & limits)
{
    if (size < 0)
        throw RangeError("clique size must be nonnegative");
    CliqueFinder finder(g, limits);
    VertexSet clique(g.order());
    if (finder.extend(clique, within, size))
        return clique;
    return std::nullopt;
}

std::vector<int> low_degree_vertices_in_larger_clique(const Graph & g, int r, const SearchLimits & limits)
{
    std::vector<int> out;
    const std::int64_t n = g.order();
    for (int v = 0; v < g.order(); ++v)
        if (static_cast<std::int64_t>(g.degree(v)) * r < (r - 1) * n && find_clique(g, r, g.neighbours(v), limits))
            out.push_back(v);
    return out;
}

} // namespace packlab
