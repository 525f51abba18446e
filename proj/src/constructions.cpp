#include <packlab/constructions.hpp>
#include <packlab/errors.hpp>
#include <packlab/families.hpp>
#include <packlab/thresholds.hpp>

#include <algorithm>
#include <array>

namespace packlab {

namespace {

struct Range {
    int lo, hi; // [lo, hi)
    int size() const { return hi - lo; }
};

// Hands out consecutive vertex ranges in declaration order.
class Layout {
public:
    Range next(int size)
    {
        Range r{cursor_, cursor_ + size};
        cursor_ += size;
        return r;
    }
    int total() const { return cursor_; }

private:
    int cursor_ = 0;
};

void make_clique(Graph & g, Range a)
{
    for (int u = a.lo; u < a.hi; ++u)
        for (int v = u + 1; v < a.hi; ++v)
            g.add_edge(u, v);
}

void join(Graph & g, Range a, Range b)
{
    for (int u = a.lo; u < a.hi; ++u)
        for (int v = b.lo; v < b.hi; ++v)
            g.add_edge(u, v);
}

void require(bool ok, const ConstructionSpec & spec, const char * what)
{
    if (! ok)
        throw RangeError(spec.describe() + ": " + what);
}

void append(std::vector<int> & out, int value, std::int64_t count)
{
    out.insert(out.end(), static_cast<std::size_t>(std::max<std::int64_t>(count, 0)), value);
}

std::int64_t half_sum(const std::vector<int> & degrees)
{
    std::int64_t total = 0;
    for (int d : degrees)
        total += d;
    return total / 2;
}

constexpr std::array family_tokens{
    std::pair{Family::split_unmatchable, std::string_view{"H"}},
    std::pair{Family::clique_and_isolated, std::string_view{"G1"}},
    std::pair{Family::star_and_cliques, std::string_view{"G2"}},
    std::pair{Family::exception_clique, std::string_view{"AF_exception_i"}},
    std::pair{Family::exception_star, std::string_view{"AF_exception_ii"}},
    std::pair{Family::degree_band, std::string_view{"extremal1"}},
    std::pair{Family::unbalanced_multipartite, std::string_view{"t_star"}},
    std::pair{Family::chvatal_band, std::string_view{"extremal2"}},
    std::pair{Family::square_counterexample, std::string_view{"square_cx"}},
};

struct SquareShape {
    int second, third; // |V_2|, |V_3|
    std::vector<int> star_sizes;
};

SquareShape square_shape(const ConstructionSpec & s)
{
    SquareShape shape{s.n / 3 + s.spread + 1, 2 * s.n / 3 - s.spread - 2, {}};
    shape.star_sizes = balanced_parts(shape.second, s.stars);
    return shape;
}

} // namespace

std::string_view family_token(Family f)
{
    for (auto [family, token] : family_tokens)
        if (family == f)
            return token;
    return "?";
}

std::optional<Family> family_from_token(std::string_view token)
{
    for (auto [family, name] : family_tokens)
        if (name == token)
            return family;
    return std::nullopt;
}

const std::vector<Family> & all_families()
{
    static const std::vector<Family> families = [] {
        std::vector<Family> out;
        for (auto [family, token] : family_tokens)
            out.push_back(family);
        return out;
    }();
    return families;
}

std::string ConstructionSpec::describe() const
{
    std::string out(family_token(family));
    auto field = [&](const char * name, int value) { out += std::string(" ") + name + "=" + std::to_string(value); };
    field("n", n);
    switch (family) {
    case Family::split_unmatchable: field("d", degree); break;
    case Family::clique_and_isolated:
    case Family::exception_clique:
    case Family::unbalanced_multipartite: field("r", r); break;
    case Family::star_and_cliques:
        field("r", r);
        field("D", degree);
        break;
    case Family::exception_star:
        field("r", r);
        field("j", j);
        break;
    case Family::degree_band:
    case Family::chvatal_band:
        field("r", r);
        field("k", k);
        break;
    case Family::square_counterexample:
        field("C", spread);
        field("K", stars);
        break;
    }
    return out;
}

void validate(const ConstructionSpec & s)
{
    const int n = s.n, r = s.r;
    auto divides = [&] { return r >= 1 && n > 0 && n % r == 0; };
    switch (s.family) {
    case Family::split_unmatchable:
        require(n >= 2 && n % 2 == 0, s, "needs n even and positive");
        require(s.degree >= 0 && 2 * s.degree < n, s, "needs 0 <= d < n/2");
        break;
    case Family::clique_and_isolated:
        require(r >= 3 && divides(), s, "needs r >= 3 and r | n");
        break;
    case Family::star_and_cliques:
        require(r >= 3 && divides() && n / r >= 2, s, "needs r >= 3 and n = kr with k >= 2");
        require(static_cast<std::int64_t>(s.degree) * (r - 1) >= n && s.degree <= n - r, s,
            "needs n/(r-1) <= D <= n-r");
        break;
    case Family::exception_clique:
        require(r >= 2 && divides(), s, "needs r >= 2 and r | n");
        break;
    case Family::exception_star:
        require(r >= 3 && divides(), s, "needs r >= 3 and r | n");
        require(s.j >= 1 && s.j <= r - 2, s, "needs 1 <= j <= r-2");
        require(n >= r + s.j, s, "needs n >= r+j so the star has a leaf");
        break;
    case Family::degree_band:
        require(r >= 2 && divides(), s, "needs r >= 2 and r | n");
        require(s.k >= 1 && s.k < n / r, s, "needs 1 <= k < n/r");
        break;
    case Family::unbalanced_multipartite:
        require(r >= 2 && divides(), s, "needs r >= 2 and r | n");
        break;
    case Family::chvatal_band:
        require(r >= 2 && divides(), s, "needs r >= 2 and r | n");
        require(s.k >= 1 && s.k <= n / r, s, "needs 1 <= k <= n/r");
        break;
    case Family::square_counterexample: {
        require(n > 0 && n % 3 == 0, s, "needs 3 | n");
        require(s.spread >= 1 && s.stars >= 1, s, "needs C >= 1 and K >= 1");
        auto shape = square_shape(s);
        require(shape.third >= 0, s, "needs 2n/3 - C - 2 >= 0");
        require(s.stars <= shape.second, s, "needs K <= |V_2|");
        require(s.spread < s.stars, s, "needs C < K");
        // the two degree estimates that make the band d_i >= n/3+C+i hold
        require(n / 3 + s.spread - s.stars + 1 <= n / 3 - 2 * s.spread - 1, s,
            "needs n/3+C-K+1 <= n/3-2C-1 (K >= 3C+2)");
        require(2 * n / 3 - s.spread - 2 + shape.second / s.stars >= 2 * n / 3 + s.spread + 1, s,
            "needs 2n/3-C-2+floor(|V_2|/K) >= 2n/3+C+1");
        break;
    }
    }
}

ConstructionClaims claims_for(const ConstructionSpec & s)
{
    validate(s);
    const int n = s.n, r = s.r;
    ConstructionClaims c;
    switch (s.family) {
    case Family::split_unmatchable: {
        const int d = s.degree;
        c.edges = matching_construction_edges(n, d);
        append(c.degrees, d, d + 1);
        append(c.degrees, n - d - 2, n - 2 * d - 1);
        append(c.degrees, n - 1, d);
        c.obstruction = Obstruction::perfect_matching;
        c.obstruction_param = 2;
        c.min_degree = d;
        break;
    }
    case Family::clique_and_isolated:
        c.edges = pairs(n / r + 1);
        append(c.degrees, 0, n - n / r - 1);
        append(c.degrees, n / r, n / r + 1);
        c.obstruction = Obstruction::equitable_colouring;
        c.obstruction_param = n / r;
        c.max_degree = n / r;
        break;
    case Family::star_and_cliques: {
        const int big = s.degree;
        c.edges = big + turan_complement_edges(n - big - 1, r - 2);
        append(c.degrees, 1, big);
        append(c.degrees, big, 1);
        for (int size : balanced_parts(n - big - 1, r - 2))
            append(c.degrees, size - 1, size);
        std::sort(c.degrees.begin(), c.degrees.end());
        c.obstruction = Obstruction::equitable_colouring;
        c.obstruction_param = n / r;
        c.max_degree = big;
        break;
    }
    case Family::exception_clique:
        c.edges = pairs(n) - pairs(n / r + 1);
        append(c.degrees, n - 1 - n / r, n / r + 1);
        append(c.degrees, n - 1, n - n / r - 1);
        c.obstruction = Obstruction::clique_packing;
        c.obstruction_param = r;
        break;
    case Family::exception_star: {
        const int leaves = n - r - s.j + 1;
        c.edges = pairs(n) - (n - r + 1);
        append(c.degrees, n - 1 - leaves, 1);
        append(c.degrees, n - 2, leaves + 2 * s.j);
        append(c.degrees, n - 1, r - s.j - 2);
        std::sort(c.degrees.begin(), c.degrees.end());
        c.obstruction = Obstruction::clique_packing;
        c.obstruction_param = r;
        break;
    }
    case Family::degree_band: {
        const int part = n / r, k = s.k;
        append(c.degrees, (r - 2) * part + k - 1, k);
        append(c.degrees, (r - 1) * part, (r - 2) * part);
        append(c.degrees, n - k - 1, n - k + 1 - ((r - 2) * part + k));
        append(c.degrees, n - 1, k - 1);
        c.edges = half_sum(c.degrees);
        c.obstruction = Obstruction::clique_packing;
        c.obstruction_param = r;
        break;
    }
    case Family::unbalanced_multipartite: {
        const int part = n / r;
        c.edges = pairs(n) - (r - 2) * pairs(part) - pairs(part - 1) - pairs(part + 1);
        append(c.degrees, n - part - 1, part + 1);
        append(c.degrees, n - part, (r - 2) * part);
        append(c.degrees, n - part + 1, part - 1);
        c.obstruction = Obstruction::clique_packing;
        c.obstruction_param = r;
        break;
    }
    case Family::chvatal_band: {
        const int k = s.k;
        append(c.degrees, (r - 1) * k - 1, k);
        append(c.degrees, n - k - 1, n - r * k + 1);
        append(c.degrees, n - 1, (r - 1) * k - 1);
        c.edges = half_sum(c.degrees);
        c.obstruction = Obstruction::clique_packing;
        c.obstruction_param = r;
        break;
    }
    case Family::square_counterexample: {
        auto shape = square_shape(s);
        std::int64_t star_edges = 0;
        append(c.degrees, shape.second, 1);
        for (int size : shape.star_sizes) {
            star_edges += size - 1;
            append(c.degrees, 1 + shape.third + size - 1, 1);
            append(c.degrees, 1 + shape.third + 1, size - 1);
        }
        append(c.degrees, n - 2, shape.third);
        std::sort(c.degrees.begin(), c.degrees.end());
        c.edges = shape.second + static_cast<std::int64_t>(shape.second) * shape.third + pairs(shape.third) + star_edges;
        c.obstruction = Obstruction::square_hamilton_cycle;
        c.obstruction_param = 3;
        break;
    }
    }
    return c;
}

Graph build_split_unmatchable(int n, int d)
{
    validate({Family::split_unmatchable, n, 0, d});
    Layout layout;
    auto a = layout.next(d + 1), b = layout.next(d), c = layout.next(n - 2 * d - 1);
    Graph g(layout.total());
    make_clique(g, {b.lo, c.hi});
    join(g, a, b);
    return g;
}

Graph build_clique_and_isolated(int n, int r)
{
    validate({Family::clique_and_isolated, n, r});
    Graph g(n);
    make_clique(g, {0, n / r + 1});
    return g;
}

Graph build_star_and_cliques(int n, int r, int max_degree)
{
    validate({Family::star_and_cliques, n, r, max_degree});
    return disjoint_union(star_graph(max_degree), turan_complement(n - max_degree - 1, r - 2));
}

Graph build_exception_clique(int n, int r)
{
    validate({Family::exception_clique, n, r});
    Graph co(n);
    make_clique(co, {0, n / r + 1});
    return complement(co);
}

Graph build_exception_star(int n, int r, int j)
{
    ConstructionSpec spec{Family::exception_star, n, r};
    spec.j = j;
    validate(spec);
    Layout layout;
    auto star = layout.next(n - r - j + 2);
    Graph co(n);
    for (int v = star.lo + 1; v < star.hi; ++v)
        co.add_edge(star.lo, v);
    for (int e = 0; e < j; ++e) {
        auto pair = layout.next(2);
        co.add_edge(pair.lo, pair.lo + 1);
    }
    return complement(co);
}

Graph build_degree_band(int n, int r, int k)
{
    ConstructionSpec spec{Family::degree_band, n, r};
    spec.k = k;
    validate(spec);
    const int part = n / r;
    Layout layout;
    auto low = layout.next(k);
    std::vector<Range> parts;
    for (int i = 0; i < r - 2; ++i)
        parts.push_back(layout.next(part));
    auto wide = layout.next(2 * part - 2 * k + 1);
    auto narrow = layout.next(k - 1);

    Graph g(layout.total());
    for (std::size_t a = 0; a < parts.size(); ++a) {
        for (std::size_t b = a + 1; b < parts.size(); ++b)
            join(g, parts[a], parts[b]);
        join(g, parts[a], low);
        join(g, parts[a], wide);
        join(g, parts[a], narrow);
    }
    make_clique(g, {wide.lo, narrow.hi});
    join(g, low, narrow);
    return g;
}

Graph build_unbalanced_multipartite(int n, int r)
{
    return t_star(n, r);
}

Graph build_chvatal_band(int n, int r, int k)
{
    ConstructionSpec spec{Family::chvatal_band, n, r};
    spec.k = k;
    validate(spec);
    Layout layout;
    auto first = layout.next(k), second = layout.next((r - 1) * k - 1), third = layout.next(n - r * k + 1);
    Graph g(layout.total());
    join(g, first, second);
    join(g, second, third);
    make_clique(g, second);
    make_clique(g, third);
    return g;
}

Graph build_square_counterexample(int n, int spread, int stars)
{
    ConstructionSpec spec{Family::square_counterexample, n};
    spec.spread = spread;
    spec.stars = stars;
    validate(spec);
    auto shape = square_shape(spec);

    Layout layout;
    auto hub = layout.next(1), second = layout.next(shape.second), third = layout.next(shape.third);
    Graph g(layout.total());
    join(g, hub, second);
    join(g, second, third);
    make_clique(g, third);
    int start = second.lo;
    for (int size : shape.star_sizes) {
        for (int v = start + 1; v < start + size; ++v)
            g.add_edge(start, v);
        start += size;
    }

    auto seq = degree_sequence(g);
    for (int i = 1; i <= n / 3; ++i)
        if (seq[static_cast<std::size_t>(i - 1)] < n / 3 + spread + i)
            throw RangeError(spec.describe() + ": degree band d_" + std::to_string(i) + " >= n/3+C+i fails");
    return g;
}

Graph build(const ConstructionSpec & s)
{
    switch (s.family) {
    case Family::split_unmatchable: return build_split_unmatchable(s.n, s.degree);
    case Family::clique_and_isolated: return build_clique_and_isolated(s.n, s.r);
    case Family::star_and_cliques: return build_star_and_cliques(s.n, s.r, s.degree);
    case Family::exception_clique: return build_exception_clique(s.n, s.r);
    case Family::exception_star: return build_exception_star(s.n, s.r, s.j);
    case Family::degree_band: return build_degree_band(s.n, s.r, s.k);
    case Family::unbalanced_multipartite: validate(s); return t_star(s.n, s.r);
    case Family::chvatal_band: return build_chvatal_band(s.n, s.r, s.k);
    case Family::square_counterexample: return build_square_counterexample(s.n, s.spread, s.stars);
    }
    throw RangeError("unknown family");
}

std::vector<ConstructionSpec> parameter_sweep(Family family, int max_n)
{
    std::vector<ConstructionSpec> out;
    auto keep = [&](ConstructionSpec s) {
        try {
            validate(s);
            out.push_back(s);
        }
        catch (const RangeError &) {
        }
    };
    for (int n = 1; n <= max_n; ++n) {
        switch (family) {
        case Family::split_unmatchable:
            for (int d = 0; 2 * d < n; ++d)
                keep({family, n, 0, d});
            break;
        case Family::star_and_cliques:
            for (int r = 3; r <= n; ++r)
                for (int d = 0; d <= n; ++d)
                    keep({family, n, r, d});
            break;
        case Family::clique_and_isolated:
        case Family::exception_clique:
        case Family::unbalanced_multipartite:
            for (int r = 2; r <= n; ++r)
                keep({family, n, r});
            break;
        case Family::exception_star:
            for (int r = 3; r <= n; ++r)
                for (int j = 1; j <= r - 2; ++j) {
                    ConstructionSpec s{family, n, r};
                    s.j = j;
                    keep(s);
                }
            break;
        case Family::degree_band:
        case Family::chvatal_band:
            for (int r = 2; r <= n; ++r)
                for (int k = 1; k * r <= n; ++k) {
                    ConstructionSpec s{family, n, r};
                    s.k = k;
                    keep(s);
                }
            break;
        case Family::square_counterexample:
            if (n % 3 != 0)
                break;
            for (int c = 1; c <= n; ++c)
                for (int k = 1; k <= n; ++k) {
                    ConstructionSpec s{family, n};
                    s.spread = c;
                    s.stars = k;
                    keep(s);
                }
            break;
        }
    }
    return out;
}

} // namespace packlab
