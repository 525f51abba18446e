#include <packlab/errors.hpp>
#include <packlab/thresholds.hpp>

#include <stdexcept>
#include <string>

namespace packlab {

namespace {

std::int64_t mul(std::int64_t a, std::int64_t b)
{
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("threshold arithmetic overflow");
    return out;
}

std::int64_t add(std::int64_t a, std::int64_t b)
{
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("threshold arithmetic overflow");
    return out;
}

std::int64_t choose2(std::int64_t m)
{
    if (m < 2)
        return 0;
    // one of m, m-1 is even
    return m % 2 == 0 ? mul(m / 2, m - 1) : mul(m, (m - 1) / 2);
}

ThresholdValue pick(std::int64_t first, std::int64_t second, bool take_max)
{
    if (first == second)
        return {first, Branch::tie, first, second};
    bool first_wins = take_max ? first > second : first < second;
    return {first_wins ? first : second, first_wins ? Branch::first : Branch::second, first, second};
}

std::string describe(std::int64_t n, std::int64_t r, std::int64_t d)
{
    return "(n=" + std::to_string(n) + ", r=" + std::to_string(r) + ", D=" + std::to_string(d) + ")";
}

} // namespace

std::string_view to_string(Branch b)
{
    switch (b) {
    case Branch::first: return "first";
    case Branch::second: return "second";
    case Branch::tie: return "tie";
    }
    return "?";
}

bool in_matching_range(std::int64_t n, std::int64_t d)
{
    return n >= 4 && n % 2 == 0 && d >= 1 && 2 * d < n;
}

bool in_packing_range(std::int64_t n, std::int64_t r, std::int64_t min_degree)
{
    return r >= 3 && n > 0 && n % r == 0 && min_degree >= r - 1 && min_degree <= (r - 1) * (n / r) - 1;
}

bool in_colouring_range(std::int64_t n, std::int64_t r, std::int64_t max_degree)
{
    return r >= 3 && n > 0 && n % r == 0 && max_degree >= n / r && max_degree <= n - r;
}

std::int64_t turan_edges(std::int64_t m, std::int64_t s)
{
    if (m < 0 || s < 1)
        throw RangeError("turan_edges needs m >= 0 and s >= 1");
    if (m <= s)
        return choose2(m);
    const std::int64_t q = m / s, a = m % s;
    return choose2(m) - add(mul(a, choose2(q + 1)), mul(s - a, choose2(q)));
}

std::int64_t turan_complement_edges(std::int64_t m, std::int64_t s)
{
    return choose2(m) - turan_edges(m, s);
}

std::int64_t matching_construction_edges(std::int64_t n, std::int64_t d)
{
    if (n < 2 || n % 2 != 0 || d < 0 || 2 * d >= n)
        throw RangeError("matching construction needs even n and 0 <= d < n/2, got n=" + std::to_string(n)
            + " d=" + std::to_string(d));
    return add(choose2(n - d - 1), mul(d, d + 1));
}

ThresholdValue matching_threshold(std::int64_t n, std::int64_t d)
{
    if (! in_matching_range(n, d))
        throw RangeError("matching threshold needs even n >= 4 and 1 <= d < n/2, got n=" + std::to_string(n)
            + " d=" + std::to_string(d));
    return pick(matching_construction_edges(n, d), matching_construction_edges(n, n / 2 - 1), true);
}

ThresholdValue packing_threshold(std::int64_t n, std::int64_t r, std::int64_t min_degree)
{
    if (! in_packing_range(n, r, min_degree))
        throw RangeError("packing threshold needs r >= 3, r | n, r-1 <= D <= (r-1)n/r - 1, got "
            + describe(n, r, min_degree));
    const std::int64_t d = min_degree;
    const std::int64_t first = choose2(n) - choose2(n / r + 1);
    const std::int64_t second = add(add(mul(d, n - d), choose2(n - 1 - d)), turan_edges(d, r - 2));
    return pick(first, second, true);
}

ThresholdValue colouring_threshold(std::int64_t n, std::int64_t r, std::int64_t max_degree)
{
    if (! in_colouring_range(n, r, max_degree))
        throw RangeError("colouring threshold needs r >= 3, r | n, n/r <= D <= n-r, got " + describe(n, r, max_degree));
    const std::int64_t d = max_degree;
    const std::int64_t first = choose2(n / r + 1);
    const std::int64_t second = add(d, turan_complement_edges(n - d - 1, r - 2));
    return pick(first, second, false);
}

bool threshold_duality_holds(std::int64_t n, std::int64_t r, std::int64_t min_degree)
{
    auto g = packing_threshold(n, r, min_degree);
    auto f = colouring_threshold(n, r, n - 1 - min_degree);
    return add(g.value, f.value) == choose2(n);
}

bool colouring_threshold_first_branch(std::int64_t n, std::int64_t r, std::int64_t max_degree)
{
    return colouring_threshold(n, r, max_degree).branch != Branch::second;
}

double relaxed_second_branch(std::int64_t n, std::int64_t r, double x)
{
    if (r < 3)
        throw RangeError("relaxed_second_branch needs r >= 3");
    const double rest = static_cast<double>(n) - x - 1.0;
    return x + rest * rest / (2.0 * static_cast<double>(r - 2)) - rest / 2.0;
}

bool relaxed_second_branch_decreasing(std::int64_t n, std::int64_t r)
{
    if (r < 3 || n % r != 0 || n < 2 * r)
        throw RangeError("relaxed_second_branch_decreasing needs r >= 3, r | n, n >= 2r, got n=" + std::to_string(n)
            + " r=" + std::to_string(r));
    constexpr double step = 1.0 / 16.0;
    auto decreasing_on = [&](double upper) {
        double prev = relaxed_second_branch(n, r, 0.0);
        for (long k = 1;; ++k) {
            double x = static_cast<double>(k) * step;
            bool last = x >= upper;
            if (last)
                x = upper;
            double cur = relaxed_second_branch(n, r, x);
            if (! (cur < prev))
                return false;
            prev = cur;
            if (last)
                return true;
        }
    };
    const double nd = static_cast<double>(n), rd = static_cast<double>(r);
    if (! decreasing_on(nd / (rd - 1.0)))
        return false;
    if (n >= 3 * r && ! decreasing_on((nd + rd) / (rd - 1.0)))
        return false;
    return true;
}

} // namespace packlab
