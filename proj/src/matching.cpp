#include <packlab/errors.hpp>
#include <packlab/solvers.hpp>

#include <algorithm>
#include <cstdlib>
#include <queue>

namespace packlab {

std::uint64_t default_node_cap()
{
    if (const char * env = std::getenv("PACKLAB_NODE_CAP")) {
        char * end = nullptr;
        unsigned long long value = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && value > 0)
            return value;
    }
    return 50'000'000;
}

namespace {

// Edmonds' blossom algorithm with explicit base tracking; O(n^3).
class Blossom {
public:
    explicit Blossom(const Graph & g) :
        g_(g),
        n_(g.order()),
        match_(static_cast<std::size_t>(n_), -1),
        parent_(static_cast<std::size_t>(n_), -1),
        base_(static_cast<std::size_t>(n_), 0),
        used_(static_cast<std::size_t>(n_), false),
        in_blossom_(static_cast<std::size_t>(n_), false)
    {
    }

    int run()
    {
        int size = 0;
        for (int v = 0; v < n_; ++v)
            if (match_[idx(v)] == -1)
                for (int w : g_.neighbours(v))
                    if (match_[idx(w)] == -1) {
                        match_[idx(v)] = w;
                        match_[idx(w)] = v;
                        ++size;
                        break;
                    }
        for (int root = 0; root < n_; ++root) {
            if (match_[idx(root)] != -1)
                continue;
            int end = find_augmenting_path(root);
            if (end == -1)
                continue;
            ++size;
            while (end != -1) {
                int pv = parent_[idx(end)], next = match_[idx(pv)];
                match_[idx(end)] = pv;
                match_[idx(pv)] = end;
                end = next;
            }
        }
        return size;
    }

    int mate(int v) const { return match_[idx(v)]; }
    std::uint64_t steps() const { return steps_; }

private:
    static std::size_t idx(int v) { return static_cast<std::size_t>(v); }

    int lowest_common_base(int a, int b)
    {
        std::vector<bool> seen(static_cast<std::size_t>(n_), false);
        while (true) {
            a = base_[idx(a)];
            seen[idx(a)] = true;
            if (match_[idx(a)] == -1)
                break;
            a = parent_[idx(match_[idx(a)])];
        }
        while (true) {
            b = base_[idx(b)];
            if (seen[idx(b)])
                return b;
            b = parent_[idx(match_[idx(b)])];
        }
    }

    void mark_path(int v, int b, int child)
    {
        while (base_[idx(v)] != b) {
            in_blossom_[idx(base_[idx(v)])] = true;
            in_blossom_[idx(base_[idx(match_[idx(v)])])] = true;
            parent_[idx(v)] = child;
            child = match_[idx(v)];
            v = parent_[idx(match_[idx(v)])];
        }
    }

    int find_augmenting_path(int root)
    {
        std::fill(used_.begin(), used_.end(), false);
        std::fill(parent_.begin(), parent_.end(), -1);
        for (int i = 0; i < n_; ++i)
            base_[idx(i)] = i;

        used_[idx(root)] = true;
        std::queue<int> q;
        q.push(root);
        while (! q.empty()) {
            int v = q.front();
            q.pop();
            ++steps_;
            for (int to : g_.neighbours(v)) {
                if (base_[idx(v)] == base_[idx(to)] || match_[idx(v)] == to)
                    continue;
                if (to == root || (match_[idx(to)] != -1 && parent_[idx(match_[idx(to)])] != -1)) {
                    int b = lowest_common_base(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), false);
                    mark_path(v, b, to);
                    mark_path(to, b, v);
                    for (int i = 0; i < n_; ++i)
                        if (in_blossom_[idx(base_[idx(i)])]) {
                            base_[idx(i)] = b;
                            if (! used_[idx(i)]) {
                                used_[idx(i)] = true;
                                q.push(i);
                            }
                        }
                }
                else if (parent_[idx(to)] == -1) {
                    parent_[idx(to)] = v;
                    if (match_[idx(to)] == -1)
                        return to;
                    used_[idx(match_[idx(to)])] = true;
                    q.push(match_[idx(to)]);
                }
            }
        }
        return -1;
    }

    const Graph & g_;
    int n_;
    std::vector<int> match_, parent_, base_;
    std::vector<bool> used_, in_blossom_;
    std::uint64_t steps_ = 0;
};

} // namespace

SolveOutcome perfect_matching(const Graph & g)
{
    SolveOutcome out;
    if (g.order() % 2 != 0)
        return out;
    Blossom blossom(g);
    int size = blossom.run();
    out.nodes_explored = blossom.steps();
    if (2 * size != g.order())
        return out;

    PackingCertificate cert;
    for (int v = 0; v < g.order(); ++v)
        if (v < blossom.mate(v))
            cert.blocks.push_back(VertexSet(g.order(), {v, blossom.mate(v)}));
    out.found = true;
    out.certificate = std::move(cert);
    return out;
}

} // namespace packlab
