#include "oracles.hpp"

#include <packlab/constructions.hpp>
#include <packlab/degree_conditions.hpp>
#include <packlab/errors.hpp>
#include <packlab/families.hpp>
#include <packlab/graph_io.hpp>
#include <packlab/solvers.hpp>
#include <packlab/thresholds.hpp>
#include <packlab/verify.hpp>

#include <doctest.h>

using namespace packlab;

TEST_CASE("family tokens round trip")
{
    for (Family f : all_families())
        CHECK(family_from_token(family_token(f)) == f);
    CHECK_FALSE(family_from_token("nope"));
    CHECK(all_families().size() == 9);
}

TEST_CASE("split graph without a perfect matching")
{
    Graph h62 = build_split_unmatchable(6, 2);
    CHECK(h62.edge_count() == 9);
    CHECK(oracle::sorted_degrees(h62) == std::vector<int>{2, 2, 2, 2, 5, 5});
    CHECK_FALSE(oracle::has_perfect_matching(h62));

    Graph h41 = build_split_unmatchable(4, 1);
    CHECK(h41.edge_count() == 3);
    CHECK(oracle::sorted_degrees(h41) == std::vector<int>{1, 1, 1, 3});

    Graph h60 = build_split_unmatchable(6, 0);
    CHECK(h60 == disjoint_union(Graph(1), complete_graph(5)));

    CHECK_THROWS_AS(build_split_unmatchable(5, 1), RangeError);
    CHECK_THROWS_AS(build_split_unmatchable(6, 3), RangeError);
}

TEST_CASE("clique plus isolated vertices and its complement")
{
    Graph g = build_clique_and_isolated(6, 3);
    CHECK(encode_graph6(g) == "Ew??");
    CHECK(g.edge_count() == 3);
    CHECK(is_independent(g, VertexSet(6, {3, 4, 5})));
    CHECK_FALSE(is_independent(g, VertexSet(6, {0, 1, 2})));
    CHECK_FALSE(oracle::has_equitable_colouring(g, 2));

    CHECK(build_clique_and_isolated(9, 3).edge_count() == 6);
    CHECK(build_clique_and_isolated(9, 3).max_degree() == 3);
    CHECK(build_clique_and_isolated(12, 4).edge_count() == 6);

    Graph af = build_exception_clique(6, 3);
    CHECK(af == complement(g));
    CHECK_FALSE(oracle::has_clique_partition(af, 3));
}

TEST_CASE("star plus cliques")
{
    Graph g = build_star_and_cliques(24, 3, 21);
    CHECK(g.edge_count() == 22);
    CHECK(g.edge_count() == colouring_threshold(24, 3, 21).value);
    CHECK(g.max_degree() == 21);

    Graph h = build_star_and_cliques(12, 3, 8);
    CHECK(h.edge_count() == 11);
    CHECK_FALSE(oracle::has_equitable_colouring(h, 4));

    Graph k = build_star_and_cliques(12, 3, 6);
    CHECK(k == disjoint_union(star_graph(6), complete_graph(5)));
    CHECK(k.max_degree() == 6);

    CHECK_THROWS_AS(build_star_and_cliques(12, 3, 5), RangeError); // D < n/(r-1)
    CHECK_THROWS_AS(build_star_and_cliques(12, 3, 10), RangeError); // D > n-r
}

TEST_CASE("star exception")
{
    Graph a = build_exception_star(8, 4, 1);
    Graph co = complement(a);
    CHECK(co.edge_count() == 5);
    CHECK(oracle::sorted_degrees(co) == std::vector<int>{0, 1, 1, 1, 1, 1, 1, 4});
    CHECK_FALSE(oracle::has_clique_partition(a, 4));

    Graph b = complement(build_exception_star(8, 4, 2));
    CHECK(oracle::sorted_degrees(b) == std::vector<int>{1, 1, 1, 1, 1, 1, 1, 3});
    CHECK_FALSE(oracle::has_clique_partition(complement(b), 4));
    CHECK_THROWS_AS(build_exception_star(8, 4, 3), RangeError);
}

TEST_CASE("single-index failure of the packing degree condition")
{
    Graph g = build_degree_band(6, 3, 1);
    CHECK(oracle::sorted_degrees(g) == std::vector<int>{2, 4, 4, 4, 4, 4});
    CHECK_FALSE(oracle::has_clique_partition(g, 3));
    // the V_0 vertex lies in no triangle
    CHECK_FALSE(find_clique(g, 2, g.neighbours(0)));

    for (auto [n, r, k] : {std::tuple{6, 3, 1}, {9, 3, 1}, {9, 3, 2}, {12, 3, 3}}) {
        Graph e = build_degree_band(n, r, k);
        CHECK_FALSE(oracle::has_clique_partition(e, r));
        CHECK(packing_degree_condition(n, r).failing_clauses(degree_sequence(e))
            == std::vector<std::string>{"alpha_" + std::to_string(k)});
    }

    // r = 2: no multipartite block
    Graph e2 = build_degree_band(8, 2, 3);
    auto seq = oracle::sorted_degrees(e2);
    CHECK(seq == std::vector<int>{2, 2, 2, 4, 4, 4, 7, 7});
    CHECK_FALSE(oracle::has_perfect_matching(e2));
}

TEST_CASE("single-index failure of the Chvatal-type packing condition")
{
    Graph g = build_chvatal_band(6, 3, 1);
    CHECK(oracle::sorted_degrees(g) == std::vector<int>{1, 4, 4, 4, 4, 5});
    auto cond = packing_chvatal_condition(6, 3);
    CHECK(cond.failing_clauses(degree_sequence(g)) == std::vector<std::string>{"i=1"});
    CHECK_FALSE(oracle::has_clique_partition(g, 3));

    CHECK_FALSE(oracle::has_clique_partition(build_chvatal_band(9, 3, 2), 3));
    CHECK(oracle::sorted_degrees(build_chvatal_band(12, 4, 2))
        == std::vector<int>{5, 5, 9, 9, 9, 9, 9, 11, 11, 11, 11, 11});
}

TEST_CASE("square counterexample")
{
    // the smallest orders for C = 1 need K >= 5 stars with at least 2C+3 vertices each
    Graph g = build_square_counterexample(69, 1, 5);
    CHECK(g.degree(0) == 69 / 3 + 1 + 1);
    auto flagged = square_cycle_violations(g);
    CHECK(std::find(flagged.begin(), flagged.end(), 0) != flagged.end());
    for (int x = g.order() - (2 * 69 / 3 - 3); x < g.order(); ++x)
        CHECK(g.degree(x) == 69 - 2);
    auto seq = degree_sequence(g);
    for (int i = 1; i <= 23; ++i)
        CHECK(seq[static_cast<std::size_t>(i - 1)] >= 23 + 1 + i);

    // with four stars the band fails at d_7 (15 < 16)
    CHECK_THROWS_AS(build_square_counterexample(24, 1, 4), RangeError);
    CHECK(parameter_sweep(Family::square_counterexample, 66).empty());
    CHECK_FALSE(parameter_sweep(Family::square_counterexample, 69).empty());
}

TEST_CASE("claims match every construction for small orders")
{
    for (Family f : all_families())
        for (const auto & spec : parameter_sweep(f, 14)) {
            Graph g = build(spec);
            auto claims = claims_for(spec);
            INFO(spec.describe());
            REQUIRE(oracle::edges(g) == claims.edges);
            REQUIRE(oracle::sorted_degrees(g) == claims.degrees);
            REQUIRE_FALSE(construction_defect(spec, g, 10));
        }
}

TEST_CASE("sweeps contain only valid parameters")
{
    for (Family f : all_families()) {
        auto sweep = parameter_sweep(f, 30);
        CHECK_FALSE((sweep.empty() && f != Family::square_counterexample));
        for (const auto & spec : sweep)
            CHECK_NOTHROW(validate(spec));
    }
}
