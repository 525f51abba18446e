#include <packlab/degree_conditions.hpp>
#include <packlab/errors.hpp>

#include <algorithm>

namespace packlab {

namespace {

bool holds(const DegreeAtom & atom, const std::vector<int> & seq)
{
    return seq[static_cast<std::size_t>(atom.position - 1)] >= atom.bound;
}

void check_packing_params(int n, int r)
{
    if (r < 2 || n <= 0 || n % r != 0)
        throw RangeError("degree condition needs r >= 2 and r | n, got n=" + std::to_string(n) + " r=" + std::to_string(r));
}

} // namespace

bool DegreeCondition::satisfied_by(const std::vector<int> & seq) const
{
    if (static_cast<int>(seq.size()) != order)
        throw RangeError("degree sequence length does not match condition order");
    return std::all_of(clauses.begin(), clauses.end(), [&](const DegreeClause & c) {
        return std::any_of(c.atoms.begin(), c.atoms.end(), [&](const DegreeAtom & a) { return holds(a, seq); });
    });
}

std::vector<std::string> DegreeCondition::failing_clauses(const std::vector<int> & seq) const
{
    if (static_cast<int>(seq.size()) != order)
        throw RangeError("degree sequence length does not match condition order");
    std::vector<std::string> out;
    for (const auto & c : clauses)
        if (std::none_of(c.atoms.begin(), c.atoms.end(), [&](const DegreeAtom & a) { return holds(a, seq); }))
            out.push_back(c.label);
    return out;
}

std::optional<std::int64_t> DegreeCondition::min_degree_sum() const
{
    // Choosing one atom per clause, every ascending sequence meeting the
    // chosen atoms dominates the running maximum of their bounds.
    std::optional<std::int64_t> best;
    std::vector<std::size_t> choice(clauses.size(), 0);
    std::uint64_t combos = 1;
    for (const auto & c : clauses) {
        if (c.atoms.empty())
            return std::nullopt;
        combos *= c.atoms.size();
        if (combos > (1U << 20))
            return std::int64_t{0};
    }
    for (std::uint64_t k = 0; k < combos; ++k) {
        std::vector<std::int64_t> floor_at(static_cast<std::size_t>(order) + 1, 0);
        bool feasible = true;
        for (std::size_t c = 0; c < clauses.size(); ++c) {
            const auto & atom = clauses[c].atoms[choice[c]];
            if (atom.bound > order - 1)
                feasible = false;
            auto & slot = floor_at[static_cast<std::size_t>(atom.position)];
            slot = std::max(slot, atom.bound);
        }
        if (feasible) {
            std::vector<std::int64_t> least(static_cast<std::size_t>(order));
            std::int64_t running = 0, total = 0;
            for (int p = 1; p <= order; ++p) {
                running = std::max(running, floor_at[static_cast<std::size_t>(p)]);
                least[static_cast<std::size_t>(p - 1)] = running;
                total += running;
            }
            // The top s vertices send at least (their degree sum - s(s-1))
            // edge ends to the others, which bounds the others' degree sum.
            std::int64_t sum = total, top = 0;
            for (int s = 1; s <= order; ++s) {
                top += least[static_cast<std::size_t>(order - s)];
                std::int64_t rest = total - top;
                sum = std::max(sum, top + std::max(rest, top - std::int64_t{s} * (s - 1)));
            }
            if (! best || sum < *best)
                best = sum;
        }
        for (std::size_t c = 0; c < clauses.size(); ++c) {
            if (++choice[c] < clauses[c].atoms.size())
                break;
            choice[c] = 0;
        }
    }
    return best;
}

DegreeCondition packing_degree_condition(int n, int r)
{
    check_packing_params(n, r);
    const int part = n / r;
    DegreeCondition cond;
    cond.order = n;
    for (int i = 1; i < part; ++i)
        cond.clauses.push_back({"alpha_" + std::to_string(i), {{i, static_cast<std::int64_t>(r - 2) * part + i}}});
    if (part + 1 <= n)
        cond.clauses.push_back({"beta", {{part + 1, static_cast<std::int64_t>(r - 1) * part}}});
    return cond;
}

DegreeCondition packing_chvatal_condition(int n, int r)
{
    check_packing_params(n, r);
    const int part = n / r;
    DegreeCondition cond;
    cond.order = n;
    for (int i = 1; i <= part; ++i)
        cond.clauses.push_back({"i=" + std::to_string(i),
            {{i, static_cast<std::int64_t>(r - 2) * part + i}, {n - i * (r - 1) + 1, n - i}}});
    return cond;
}

DegreeCondition hamilton_path_degree_condition(int n)
{
    if (n < 2)
        throw RangeError("Hamilton path degree condition needs n >= 2");
    DegreeCondition cond;
    cond.order = n;
    for (int i = 1; 2 * i <= n; ++i)
        cond.clauses.push_back({"i=" + std::to_string(i), {{i, i}, {n - i + 1, n - i}}});
    return cond;
}

} // namespace packlab
