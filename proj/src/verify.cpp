#include <packlab/constructions.hpp>
#include <packlab/degree_conditions.hpp>
#include <packlab/errors.hpp>
#include <packlab/families.hpp>
#include <packlab/graph_io.hpp>
#include <packlab/solvers.hpp>
#include <packlab/thresholds.hpp>
#include <packlab/verify.hpp>

#include "parallel.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <set>

namespace packlab {

namespace {

constexpr std::array predicate_tokens{
    std::pair{Predicate::matching, std::string_view{"matching"}},
    std::pair{Predicate::colouring, std::string_view{"t1"}},
    std::pair{Predicate::packing, std::string_view{"mainthm1"}},
    std::pair{Predicate::packing_degrees, std::string_view{"conj1"}},
    std::pair{Predicate::packing_chvatal, std::string_view{"ques1"}},
    std::pair{Predicate::hamilton_path, std::string_view{"chvatal"}},
};

constexpr std::size_t witness_list_cap = 256;
constexpr std::uint64_t mask_chunk = 4096;
constexpr std::uint64_t sample_block = 4096;

enum class Direction { none, minimise, maximise };

// One parameter value of a predicate.
struct CaseSpec {
    std::string label;
    std::string filter;
    int param = 0;
    std::optional<std::int64_t> threshold;
    Direction direction = Direction::none;
    std::function<bool(const std::vector<int> &)> member; // on ascending degrees
    std::int64_t window_lo = 0, window_hi = 0;           // sampled edge-count window
    std::optional<Graph> construction;                   // boundary witness for sampled runs
};

struct PredicatePlan {
    std::vector<CaseSpec> cases;
    std::function<bool(const Graph &, const SearchLimits &)> lacks;
};

struct CaseTally {
    std::uint64_t examined = 0;
    std::uint64_t violation_count = 0;
    std::vector<std::string> violations;
    std::optional<std::pair<std::int64_t, std::uint64_t>> best; // (edges, mask)
};

bool violates(const CaseSpec & c, std::int64_t edges)
{
    switch (c.direction) {
    case Direction::none: return true;
    case Direction::minimise: return edges < *c.threshold;
    case Direction::maximise: return edges > *c.threshold;
    }
    return false;
}

// Ties go to the smaller mask when minimising and the larger when maximising,
// so a witness and its complement are chosen consistently.
bool better(Direction d, std::pair<std::int64_t, std::uint64_t> a, std::pair<std::int64_t, std::uint64_t> b)
{
    if (d == Direction::maximise)
        return a > b;
    return a < b;
}

void record(CaseTally & t, const CaseSpec & c, const Graph & g, std::int64_t edges, std::uint64_t mask, bool lacks)
{
    ++t.examined;
    if (! lacks)
        return;
    if (violates(c, edges)) {
        ++t.violation_count;
        if (t.violations.size() < witness_list_cap)
            t.violations.push_back(encode_graph6(g));
    }
    if (c.direction != Direction::none) {
        std::pair candidate{edges, mask};
        if (! t.best || better(c.direction, candidate, *t.best))
            t.best = candidate;
    }
}

void merge(CaseTally & into, CaseTally && part, Direction d)
{
    into.examined += part.examined;
    into.violation_count += part.violation_count;
    for (auto & w : part.violations)
        if (into.violations.size() < witness_list_cap)
            into.violations.push_back(std::move(w));
    if (part.best && (! into.best || better(d, *part.best, *into.best)))
        into.best = part.best;
}

void evaluate(const PredicatePlan & plan, const Graph & g, std::uint64_t mask, const SearchLimits & limits,
    std::vector<CaseTally> & tallies)
{
    auto degrees = degree_sequence(g);
    const std::int64_t edges = g.edge_count();
    std::optional<bool> lacks;
    for (std::size_t i = 0; i < plan.cases.size(); ++i) {
        const auto & c = plan.cases[i];
        if (! c.member(degrees))
            continue;
        if (! lacks)
            lacks = plan.lacks(g, limits);
        record(tallies[i], c, g, edges, mask, *lacks);
    }
}

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

using u128 = unsigned __int128;

// Uniform integer in [0, bound) by rejection of the biased low range.
u128 uniform_below(std::mt19937_64 & rng, u128 bound)
{
    if (bound <= std::numeric_limits<std::uint64_t>::max()) {
        const std::uint64_t b = static_cast<std::uint64_t>(bound);
        const std::uint64_t reject_below = (0 - b) % b;
        for (;;) {
            std::uint64_t x = rng();
            if (x >= reject_below)
                return x % b;
        }
    }
    const u128 reject_below = (u128(0) - bound) % bound;
    for (;;) {
        u128 x = (u128(rng()) << 64) | rng();
        if (x >= reject_below)
            return x % bound;
    }
}

u128 binomial(int n, int k)
{
    u128 out = 1;
    for (int i = 1; i <= k; ++i)
        out = out * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    return out;
}

// Draws graphs uniformly from the labeled graphs whose edge count lies in a
// window: the edge count m is chosen with weight C(N, m), then a uniform
// m-subset of the N slots.
class WindowSampler {
public:
    WindowSampler(int n, std::int64_t lo, std::int64_t hi) : n_(n), lo_(lo)
    {
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u)
                slots_.push_back({u, v});
        u128 total = 0;
        for (std::int64_t m = lo; m <= hi; ++m) {
            total += binomial(static_cast<int>(slots_.size()), static_cast<int>(m));
            cumulative_.push_back(total);
        }
    }

    // Fills `edges` and the ascending `degrees` of the next proposal.
    void draw(std::mt19937_64 & rng, std::vector<std::pair<int, int>> & edges, std::vector<int> & degrees)
    {
        u128 pick = uniform_below(rng, cumulative_.back());
        auto m = static_cast<std::size_t>(std::upper_bound(cumulative_.begin(), cumulative_.end(), pick)
            - cumulative_.begin()) + static_cast<std::size_t>(lo_);
        edges.clear();
        degrees.assign(static_cast<std::size_t>(n_), 0);
        for (std::size_t i = 0; i < m; ++i) {
            auto j = i + static_cast<std::size_t>(uniform_below(rng, slots_.size() - i));
            std::swap(slots_[i], slots_[j]);
            edges.push_back(slots_[i]);
            ++degrees[static_cast<std::size_t>(slots_[i].first)];
            ++degrees[static_cast<std::size_t>(slots_[i].second)];
        }
        std::sort(degrees.begin(), degrees.end());
    }

private:
    int n_;
    std::int64_t lo_;
    std::vector<std::pair<int, int>> slots_;
    std::vector<u128> cumulative_;
};

// Boundary witnesses are optional, so an out-of-range construction is skipped.
std::optional<Graph> try_build(const ConstructionSpec & spec)
{
    try {
        return build(spec);
    }
    catch (const RangeError &) {
        return std::nullopt;
    }
}

std::int64_t window_floor(const DegreeCondition & cond)
{
    auto sum = cond.min_degree_sum();
    if (! sum)
        return pairs(cond.order) + 1; // unsatisfiable: empty window
    return (*sum + 1) / 2;
}

PredicatePlan plan_for(const EnumerationTask & task)
{
    const int n = task.n, r = task.r;
    const std::int64_t slots = pairs(n);
    PredicatePlan plan;

    auto min_at_least = [](const std::vector<int> & degrees, int bound) {
        return degrees.empty() || degrees.front() >= bound;
    };

    switch (task.predicate) {
    case Predicate::matching: {
        if (n < 4 || n % 2 != 0)
            throw RangeError("matching verification needs n even and at least 4");
        for (int d = 1; d < n / 2; ++d) {
            auto t = matching_threshold(n, d);
            CaseSpec c{"d=" + std::to_string(d), "min_degree>=" + std::to_string(d), d, t.value, Direction::maximise};
            c.member = [=](const std::vector<int> & deg) { return min_at_least(deg, d); };
            c.window_lo = t.value + 1;
            c.window_hi = slots;
            c.construction = build_split_unmatchable(n, t.branch == Branch::second ? n / 2 - 1 : d);
            plan.cases.push_back(std::move(c));
        }
        plan.lacks = [](const Graph & g, const SearchLimits &) { return ! perfect_matching(g).found; };
        break;
    }
    case Predicate::colouring: {
        if (r < 3 || n % r != 0)
            throw RangeError("colouring verification needs r >= 3 and r | n");
        for (int big = n / r; big <= n - r; ++big) {
            auto t = colouring_threshold(n, r, big);
            CaseSpec c{"D=" + std::to_string(big), "max_degree<=" + std::to_string(big), big, t.value,
                Direction::minimise};
            c.member = [=](const std::vector<int> & deg) { return deg.empty() || deg.back() <= big; };
            c.window_lo = 0;
            c.window_hi = t.value - 1;
            c.construction = t.branch == Branch::second ? try_build({Family::star_and_cliques, n, r, big})
                                                        : try_build({Family::clique_and_isolated, n, r});
            plan.cases.push_back(std::move(c));
        }
        plan.lacks = [k = n / r](const Graph & g, const SearchLimits & limits) {
            return ! equitable_colouring(g, k, limits).found;
        };
        break;
    }
    case Predicate::packing: {
        if (r < 3 || n % r != 0)
            throw RangeError("packing verification needs r >= 3 and r | n");
        for (int low = r - 1; low <= (r - 1) * n / r - 1; ++low) {
            auto t = packing_threshold(n, r, low);
            CaseSpec c{"D=" + std::to_string(low), "min_degree>=" + std::to_string(low), low, t.value,
                Direction::maximise};
            c.member = [=](const std::vector<int> & deg) { return min_at_least(deg, low); };
            c.window_lo = t.value + 1;
            c.window_hi = slots;
            // complement of the colouring boundary witness at n-1-D
            const int big = n - 1 - low;
            auto dual = colouring_threshold(n, r, big);
            auto witness = dual.branch == Branch::second ? try_build({Family::star_and_cliques, n, r, big})
                                                         : try_build({Family::clique_and_isolated, n, r});
            if (witness)
                c.construction = complement(*witness);
            plan.cases.push_back(std::move(c));
        }
        plan.lacks = [r](const Graph & g, const SearchLimits & limits) {
            return ! perfect_clique_packing(g, r, limits).found;
        };
        break;
    }
    case Predicate::packing_degrees:
    case Predicate::packing_chvatal: {
        if (r < 2 || n <= 0 || n % r != 0)
            throw RangeError("packing condition search needs r >= 2 and r | n");
        auto cond = task.predicate == Predicate::packing_degrees ? packing_degree_condition(n, r)
                                                                  : packing_chvatal_condition(n, r);
        CaseSpec c{"r=" + std::to_string(r), task.predicate == Predicate::packing_degrees ? "alpha and beta"
                                                                                          : "chvatal-type packing condition",
            r, std::nullopt, Direction::none};
        c.member = [cond](const std::vector<int> & deg) { return cond.satisfied_by(deg); };
        c.window_lo = window_floor(cond);
        c.window_hi = slots;
        plan.cases.push_back(std::move(c));
        plan.lacks = [r](const Graph & g, const SearchLimits & limits) {
            return ! perfect_clique_packing(g, r, limits).found;
        };
        break;
    }
    case Predicate::hamilton_path: {
        if (n < 2)
            throw RangeError("Hamilton path verification needs n >= 2");
        auto cond = hamilton_path_degree_condition(n);
        CaseSpec c{"n=" + std::to_string(n), "chvatal path condition", n, std::nullopt, Direction::none};
        c.member = [cond](const std::vector<int> & deg) { return cond.satisfied_by(deg); };
        c.window_lo = window_floor(cond);
        c.window_hi = slots;
        plan.cases.push_back(std::move(c));
        plan.lacks = [](const Graph & g, const SearchLimits & limits) {
            return ! hamilton_path_exact(g, 31, limits).found;
        };
        break;
    }
    }

    if (task.param) {
        auto it = std::find_if(plan.cases.begin(), plan.cases.end(), [&](const CaseSpec & c) { return c.param == *task.param; });
        if (it == plan.cases.end() || task.predicate == Predicate::packing_degrees
            || task.predicate == Predicate::packing_chvatal || task.predicate == Predicate::hamilton_path)
            throw RangeError("parameter " + std::to_string(*task.param) + " outside the range of " +
                std::string(predicate_token(task.predicate)) + " at n=" + std::to_string(n));
        CaseSpec only = std::move(*it);
        plan.cases.clear();
        plan.cases.push_back(std::move(only));
    }
    return plan;
}

Graph mask_graph(int n, const std::vector<std::pair<int, int>> & slots, std::uint64_t mask)
{
    Graph g(n);
    for (; mask; mask &= mask - 1)
        g.add_edge(slots[std::countr_zero(mask)].first, slots[std::countr_zero(mask)].second);
    return g;
}

std::vector<std::pair<int, int>> slot_order(int n)
{
    std::vector<std::pair<int, int>> slots;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            slots.push_back({u, v});
    return slots;
}

std::vector<CaseTally> run_exhaustive(const EnumerationTask & task, const PredicatePlan & plan,
    const SearchLimits & limits, std::uint64_t & examined)
{
    const auto slots = slot_order(task.n);
    const std::uint64_t total = std::uint64_t{1} << slots.size();
    const std::uint64_t chunks = (total + mask_chunk - 1) / mask_chunk;
    examined = total;

    auto parts = parallel_chunks<std::vector<CaseTally>>(chunks, task.workers, limits,
        [&](std::uint64_t chunk, const SearchLimits & chunk_limits) {
            std::vector<CaseTally> tallies(plan.cases.size());
            const std::uint64_t end = std::min(total, (chunk + 1) * mask_chunk);
            for (std::uint64_t mask = chunk * mask_chunk; mask < end; ++mask)
                evaluate(plan, mask_graph(task.n, slots, mask), mask, chunk_limits, tallies);
            return tallies;
        });

    std::vector<CaseTally> out(plan.cases.size());
    for (auto & part : parts)
        for (std::size_t i = 0; i < out.size(); ++i)
            merge(out[i], std::move(part[i]), plan.cases[i].direction);
    return out;
}

std::vector<CaseTally> run_sampled(const EnumerationTask & task, const PredicatePlan & plan, const SearchLimits & limits,
    std::uint64_t & proposals)
{
    const std::int64_t slots = pairs(task.n);
    std::vector<CaseTally> out(plan.cases.size());
    proposals = 0;

    for (std::size_t ci = 0; ci < plan.cases.size(); ++ci) {
        const auto & c = plan.cases[ci];
        const std::int64_t lo = std::max<std::int64_t>(c.window_lo, 0), hi = std::min(c.window_hi, slots);
        if (lo > hi)
            continue; // no graph in the window, nothing can violate
        const std::uint64_t blocks = (task.samples + sample_block - 1) / sample_block;
        const std::uint64_t proposal_cap = task.proposal_factor * sample_block;

        struct BlockResult {
            CaseTally tally;
            std::uint64_t proposals = 0;
        };
        auto parts = parallel_chunks<BlockResult>(blocks, task.workers, limits,
            [&](std::uint64_t block, const SearchLimits & block_limits) {
                std::mt19937_64 rng(splitmix64(*task.seed ^ (std::uint64_t{ci} << 32) ^ block));
                WindowSampler sampler(task.n, lo, hi);
                const std::uint64_t want = std::min(sample_block, task.samples - block * sample_block);
                BlockResult result;
                std::vector<std::pair<int, int>> edges;
                std::vector<int> degrees;
                while (result.tally.examined < want) {
                    if (++result.proposals > proposal_cap)
                        throw SearchAborted("sampler exceeded " + std::to_string(proposal_cap) + " proposals in block "
                            + std::to_string(block) + " of case " + c.label);
                    sampler.draw(rng, edges, degrees);
                    if (! c.member(degrees))
                        continue;
                    Graph g(task.n);
                    for (auto [u, v] : edges)
                        g.add_edge(u, v);
                    record(result.tally, c, g, g.edge_count(), 0, plan.lacks(g, block_limits));
                }
                return result;
            });
        for (auto & part : parts) {
            proposals += part.proposals;
            merge(out[ci], std::move(part.tally), Direction::none);
        }
    }
    return out;
}

std::string describe_sequence(const std::vector<std::string> & labels)
{
    std::string out = "{";
    for (std::size_t i = 0; i < labels.size(); ++i)
        out += (i ? "," : "") + labels[i];
    return out + "}";
}

// Side assertions on the sharpness constructions of the condition searches.
void check_sharpness(const EnumerationTask & task, const SearchLimits & limits, std::vector<std::string> & checks)
{
    const int n = task.n, r = task.r;
    auto expect_failing = [&](const Graph & g, const DegreeCondition & cond, const std::vector<std::string> & want,
                              const std::string & name) {
        auto failing = cond.failing_clauses(degree_sequence(g));
        if (failing != want)
            checks.push_back(name + " fails " + describe_sequence(failing) + ", expected " + describe_sequence(want));
        if (n <= sampled_order_cap && perfect_clique_packing(g, r, limits).found)
            checks.push_back(name + " has a perfect packing");
    };
    if (task.predicate == Predicate::packing_degrees) {
        auto cond = packing_degree_condition(n, r);
        for (int k = 1; k < n / r; ++k)
            expect_failing(build_degree_band(n, r, k), cond, {"alpha_" + std::to_string(k)},
                "extremal1 k=" + std::to_string(k));
        if (n >= r)
            expect_failing(t_star(n, r), cond, {"beta"}, "t_star");
    }
    if (task.predicate == Predicate::packing_chvatal) {
        auto cond = packing_chvatal_condition(n, r);
        for (int k = 1; k <= n / r; ++k)
            expect_failing(build_chvatal_band(n, r, k), cond, {"i=" + std::to_string(k)},
                "extremal2 k=" + std::to_string(k));
    }
}

nlohmann::ordered_json task_echo(const EnumerationTask & task, std::uint64_t node_cap)
{
    nlohmann::ordered_json t;
    t["predicate"] = predicate_token(task.predicate);
    t["n"] = task.n;
    if (task.predicate != Predicate::matching && task.predicate != Predicate::hamilton_path)
        t["r"] = task.r;
    t["mode"] = task.mode == Mode::exhaustive ? "exhaustive" : "sampled";
    if (task.mode == Mode::sampled) {
        t["samples"] = task.samples;
        t["seed"] = *task.seed;
        t["rng"] = sampler_algorithm;
    }
    if (task.param)
        t["param"] = *task.param;
    t["node_cap"] = node_cap;
    return t;
}

} // namespace

std::string_view predicate_token(Predicate p)
{
    for (auto [pred, token] : predicate_tokens)
        if (pred == p)
            return token;
    return "?";
}

std::optional<Predicate> predicate_from_token(std::string_view token)
{
    for (auto [pred, name] : predicate_tokens)
        if (name == token)
            return pred;
    if (token == "hampath")
        return Predicate::hamilton_path;
    return std::nullopt;
}

std::string_view to_string(Status s)
{
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::aborted: return "aborted";
    }
    return "?";
}

Graph graph_from_mask(int n, std::uint64_t mask)
{
    auto slots = slot_order(n);
    if (slots.size() < 64 && (mask >> slots.size()) != 0)
        throw RangeError("mask has bits beyond the " + std::to_string(slots.size()) + " edge slots");
    return mask_graph(n, slots, mask);
}

VerificationReport run_verification(const EnumerationTask & task)
{
    const auto started = std::chrono::steady_clock::now();
    if (task.n < 0)
        throw RangeError("order must be nonnegative");
    if (task.workers < 1)
        throw RangeError("workers must be positive");
    if (task.mode == Mode::exhaustive) {
        if (task.exhaustive_cap < 1 || task.exhaustive_cap > 11)
            throw RangeError("exhaustive cap must lie in 1..11");
        if (task.n > task.exhaustive_cap)
            throw CapExceeded("exhaustive enumeration capped at n=" + std::to_string(task.exhaustive_cap) + ", got n="
                + std::to_string(task.n));
    }
    else {
        if (! task.seed)
            throw RangeError("sampled mode needs an explicit seed");
        if (task.samples == 0)
            throw RangeError("sampled mode needs a positive sample count");
        if (task.n > sampled_order_cap)
            throw CapExceeded("sampled mode capped at n=" + std::to_string(sampled_order_cap));
    }

    SearchLimits limits;
    if (task.node_cap)
        limits.node_cap = task.node_cap;
    PredicatePlan plan = plan_for(task);

    VerificationReport report;
    report.task = task_echo(task, limits.node_cap);
    std::vector<CaseTally> tallies;
    std::uint64_t examined = 0;
    try {
        tallies = task.mode == Mode::exhaustive ? run_exhaustive(task, plan, limits, examined)
                                                : run_sampled(task, plan, limits, examined);
        check_sharpness(task, limits, report.checks);
    }
    catch (const SearchAborted & e) {
        report.status = Status::aborted;
        report.abort_reason = e.what();
        return report;
    }
    if (task.mode == Mode::exhaustive) {
        report.examined = examined;
    }
    else {
        // `examined` counted proposals; the report counts accepted samples
        report.task["proposals"] = examined;
        for (const auto & t : tallies)
            report.examined += t.examined;
    }

    const auto slots = slot_order(task.n);
    std::set<std::string> seen;
    for (std::size_t i = 0; i < plan.cases.size(); ++i) {
        const auto & spec = plan.cases[i];
        auto & tally = tallies[i];
        CaseReport c;
        c.label = spec.label;
        c.filter = spec.filter;
        c.threshold = spec.threshold;
        c.examined = tally.examined;
        c.violations = std::move(tally.violations);
        if (tally.violation_count > c.violations.size())
            c.defects.push_back(std::to_string(tally.violation_count) + " violations, list truncated");

        if (task.mode == Mode::exhaustive && spec.direction != Direction::none) {
            if (tally.best) {
                c.extremal = ExtremalWitness{tally.best->first, encode_graph6(mask_graph(task.n, slots, tally.best->second))};
            }
            if (! c.extremal || c.extremal->edges != *spec.threshold)
                c.defects.push_back("no graph lacking the property has exactly " + std::to_string(*spec.threshold)
                    + " edges at the extreme");
        }
        if (task.mode == Mode::sampled && spec.construction) {
            const Graph & w = *spec.construction;
            bool member = spec.member(degree_sequence(w));
            bool lacks = false;
            try {
                lacks = plan.lacks(w, limits);
            }
            catch (const SearchAborted &) {
                c.defects.push_back("boundary witness could not be solved within the node cap");
            }
            if (member && lacks && w.edge_count() == *spec.threshold)
                c.extremal = ExtremalWitness{w.edge_count(), encode_graph6(w)};
            else
                c.defects.push_back("boundary construction does not meet the threshold");
        }
        for (const auto & v : c.violations)
            if (seen.insert(v).second)
                report.violations.push_back(v);
        report.cases.push_back(std::move(c));
    }
    if (! report.cases.empty())
        report.extremal = report.cases.front().extremal;

    // the packing threshold is the complement image of the colouring threshold
    if (task.predicate == Predicate::packing && task.mode == Mode::exhaustive) {
        EnumerationTask dual = task;
        dual.predicate = Predicate::colouring;
        dual.param.reset();
        auto colour = run_verification(dual);
        for (const auto & c : report.cases) {
            const int low = std::stoi(c.label.substr(2));
            auto it = std::find_if(colour.cases.begin(), colour.cases.end(),
                [&](const CaseReport & d) { return d.label == "D=" + std::to_string(task.n - 1 - low); });
            bool ok = it != colour.cases.end() && it->examined == c.examined
                && it->violations.size() == c.violations.size() && it->extremal.has_value() == c.extremal.has_value();
            if (ok && c.extremal) {
                ok = it->extremal->edges + c.extremal->edges == pairs(task.n)
                    && encode_graph6(complement(decode_graph6(c.extremal->graph6))) == it->extremal->graph6;
            }
            if (! ok)
                report.checks.push_back("complement duality with the colouring run fails at " + c.label);
        }
    }

    bool failed = ! report.violations.empty() || ! report.checks.empty();
    for (const auto & c : report.cases)
        failed = failed || ! c.defects.empty();
    report.status = failed ? Status::fail : Status::pass;
    if (task.timing)
        report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started)
                                .count();
    return report;
}

nlohmann::ordered_json to_json(const VerificationReport & report)
{
    auto witness = [](const std::optional<ExtremalWitness> & w) -> nlohmann::ordered_json {
        if (! w)
            return nullptr;
        return {{"edges", w->edges}, {"graph6", w->graph6}};
    };
    nlohmann::ordered_json j;
    j["task"] = report.task;
    j["examined"] = report.examined;
    j["violations"] = report.violations;
    j["extremal"] = witness(report.extremal);
    j["status"] = to_string(report.status);
    j["elapsed_ms"] = report.elapsed_ms;
    auto cases = nlohmann::ordered_json::array();
    for (const auto & c : report.cases) {
        nlohmann::ordered_json e;
        e["param"] = c.label;
        e["filter"] = c.filter;
        e["threshold"] = c.threshold ? nlohmann::ordered_json(*c.threshold) : nlohmann::ordered_json(nullptr);
        e["examined"] = c.examined;
        e["violations"] = c.violations;
        e["extremal"] = witness(c.extremal);
        e["defects"] = c.defects;
        cases.push_back(std::move(e));
    }
    j["cases"] = std::move(cases);
    if (report.status == Status::aborted)
        j["abort_reason"] = report.abort_reason;
    j["checks"] = report.checks;
    return j;
}

} // namespace packlab
