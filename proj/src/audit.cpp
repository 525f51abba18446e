#include <packlab/constructions.hpp>
#include <packlab/errors.hpp>
#include <packlab/graph_io.hpp>
#include <packlab/solvers.hpp>
#include <packlab/verify.hpp>

#include <algorithm>

namespace packlab {

namespace {

constexpr std::size_t defect_list_cap = 64;

} // namespace

std::optional<std::string> construction_defect(const ConstructionSpec & spec, const Graph & g, int solver_max_n,
    const SearchLimits & limits)
{
    auto claims = claims_for(spec);
    if (g.order() != spec.n)
        return "order " + std::to_string(g.order());
    if (g.edge_count() != claims.edges)
        return "edge count " + std::to_string(g.edge_count()) + ", claimed " + std::to_string(claims.edges);
    if (degree_sequence(g) != claims.degrees)
        return std::string("degree sequence differs from the claimed bands");
    if (claims.min_degree && g.min_degree() < *claims.min_degree)
        return "minimum degree " + std::to_string(g.min_degree()) + " below " + std::to_string(*claims.min_degree);
    if (claims.max_degree && g.max_degree() > *claims.max_degree)
        return "maximum degree " + std::to_string(g.max_degree()) + " above " + std::to_string(*claims.max_degree);

    switch (claims.obstruction) {
    case Obstruction::perfect_matching:
        if (perfect_matching(g).found)
            return std::string("has a perfect matching");
        break;
    case Obstruction::clique_packing:
        if (g.order() <= solver_max_n && perfect_clique_packing(g, claims.obstruction_param, limits).found)
            return "has a perfect K_" + std::to_string(claims.obstruction_param) + "-packing";
        break;
    case Obstruction::equitable_colouring:
        if (g.order() <= solver_max_n && equitable_colouring(g, claims.obstruction_param, limits).found)
            return "has an equitable " + std::to_string(claims.obstruction_param) + "-colouring";
        break;
    case Obstruction::square_hamilton_cycle: {
        auto flagged = square_cycle_violations(g);
        if (std::find(flagged.begin(), flagged.end(), 0) == flagged.end())
            return std::string("vertex 0 has a three-edge path in its neighbourhood");
        break;
    }
    }
    return std::nullopt;
}

VerificationReport audit_constructions(int max_n, int solver_max_n)
{
    if (max_n < 1)
        throw RangeError("audit needs max_n >= 1");
    if (solver_max_n > 16)
        throw CapExceeded("audit solver checks capped at n=16");

    VerificationReport report;
    report.task["predicate"] = "audit";
    report.task["max_n"] = max_n;
    report.task["solver_max_n"] = solver_max_n;
    SearchLimits limits;

    try {
        for (Family family : all_families()) {
            CaseReport c;
            c.label = std::string(family_token(family));
            c.filter = "n<=" + std::to_string(max_n);
            for (const auto & spec : parameter_sweep(family, max_n)) {
                ++c.examined;
                std::optional<std::string> defect;
                std::optional<Graph> g;
                try {
                    g = build(spec);
                    defect = construction_defect(spec, *g, solver_max_n, limits);
                }
                catch (const RangeError & e) {
                    defect = std::string("builder rejected valid parameters: ") + e.what();
                }
                if (! defect)
                    continue;
                if (c.defects.size() < defect_list_cap)
                    c.defects.push_back(spec.describe() + ": " + *defect);
                if (g && c.violations.size() < defect_list_cap)
                    c.violations.push_back(encode_graph6(*g));
            }
            report.examined += c.examined;
            report.cases.push_back(std::move(c));
        }
    }
    catch (const SearchAborted & e) {
        report.status = Status::aborted;
        report.abort_reason = e.what();
        return report;
    }

    // the clique exception is the complement of the clique-plus-isolated graph
    for (int n = 3; n <= max_n; ++n)
        for (int r = 3; r <= n; ++r)
            if (n % r == 0 && build_clique_and_isolated(n, r) != complement(build_exception_clique(n, r)))
                report.checks.push_back("G1 differs from the complement of AF_exception_i at n=" + std::to_string(n)
                    + " r=" + std::to_string(r));

    bool failed = ! report.checks.empty();
    for (const auto & c : report.cases) {
        failed = failed || ! c.defects.empty();
        for (const auto & v : c.violations)
            report.violations.push_back(v);
    }
    report.status = failed ? Status::fail : Status::pass;
    return report;
}

} // namespace packlab
