#include "oracles.hpp"

#include <packlab/degree_conditions.hpp>
#include <packlab/errors.hpp>
#include <packlab/graph_io.hpp>
#include <packlab/solvers.hpp>
#include <packlab/verify.hpp>

#include <doctest.h>

using namespace packlab;

namespace {

EnumerationTask task_for(Predicate p, int n, int r = 0)
{
    EnumerationTask t;
    t.predicate = p;
    t.n = n;
    t.r = r;
    return t;
}

} // namespace

TEST_CASE("masks follow the graph6 slot order")
{
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 100; ++trial) {
        std::uint64_t mask = rng() & ((std::uint64_t{1} << 21) - 1);
        CHECK(graph_from_mask(7, mask) == oracle::from_mask(7, mask));
    }
    CHECK(graph_from_mask(4, 0b000111) == disjoint_union(oracle::from_mask(3, 7), Graph(1)));
    CHECK_THROWS_AS(graph_from_mask(3, 8), RangeError);
}

TEST_CASE("edge-count floor of a degree condition is a lower bound")
{
    std::vector<DegreeCondition> conditions{packing_degree_condition(6, 3), packing_degree_condition(6, 2),
        packing_chvatal_condition(6, 3), packing_chvatal_condition(6, 2), hamilton_path_degree_condition(6)};
    for (const auto & cond : conditions) {
        auto floor = cond.min_degree_sum();
        REQUIRE(floor.has_value());
        oracle::for_all_graphs(6, [&](const Graph & g, std::uint64_t) {
            if (cond.satisfied_by(oracle::sorted_degrees(g)))
                REQUIRE(2 * oracle::edges(g) >= *floor);
        });
    }
}

TEST_CASE("matching verification at n = 4")
{
    auto report = run_verification(task_for(Predicate::matching, 4));
    CHECK(report.status == Status::pass);
    CHECK(report.examined == 64);
    REQUIRE(report.extremal);
    CHECK(report.extremal->edges == 3);
}

TEST_CASE("exhaustive reports are identical across worker counts")
{
    auto t = task_for(Predicate::colouring, 6, 3);
    auto serial = to_json(run_verification(t)).dump();
    t.workers = 3;
    CHECK(to_json(run_verification(t)).dump() == serial);
    t.workers = 8;
    CHECK(to_json(run_verification(t)).dump() == serial);
}

TEST_CASE("sampled reports depend only on seed and sample count")
{
    auto t = task_for(Predicate::packing_degrees, 12, 3);
    t.mode = Mode::sampled;
    t.samples = 6000;
    t.seed = 7;
    auto first = to_json(run_verification(t)).dump();
    CHECK(to_json(run_verification(t)).dump() == first);
    t.workers = 2;
    CHECK(to_json(run_verification(t)).dump() == first);
    t.seed = 8;
    CHECK(to_json(run_verification(t)).dump() != first);
}

TEST_CASE("extremal witnesses re-validate after decoding")
{
    auto colour = run_verification(task_for(Predicate::colouring, 6, 3));
    auto pack = run_verification(task_for(Predicate::packing, 6, 3));
    REQUIRE(colour.status == Status::pass);
    REQUIRE(pack.status == Status::pass);
    for (const auto & c : colour.cases) {
        REQUIRE(c.extremal);
        Graph g = decode_graph6(c.extremal->graph6);
        CHECK(oracle::edges(g) == c.extremal->edges);
        CHECK_FALSE(oracle::has_equitable_colouring(g, 2));
    }
    for (const auto & c : pack.cases) {
        REQUIRE(c.extremal);
        Graph g = decode_graph6(c.extremal->graph6);
        CHECK(oracle::edges(g) == c.extremal->edges);
        CHECK_FALSE(oracle::has_clique_partition(g, 3));
    }
    // the two runs are complement images of each other
    REQUIRE(colour.cases.size() == pack.cases.size());
    for (std::size_t i = 0; i < pack.cases.size(); ++i) {
        const auto & p = pack.cases[i];
        const auto & c = colour.cases[colour.cases.size() - 1 - i];
        CHECK(p.examined == c.examined);
        CHECK(complement(decode_graph6(p.extremal->graph6)) == decode_graph6(c.extremal->graph6));
    }
    CHECK(decode_graph6(colour.cases.front().extremal->graph6) == oracle::from_mask(6, 7));
}

TEST_CASE("violations are reported and re-validate")
{
    // with a tiny sample the sharpness witness still meets the threshold
    auto t = task_for(Predicate::colouring, 12, 3);
    t.mode = Mode::sampled;
    t.samples = 500;
    t.seed = 42;
    t.param = 4;
    auto report = run_verification(t);
    CHECK(report.status == Status::pass);
    REQUIRE(report.extremal);
    CHECK(report.extremal->edges == 10);
    CHECK_FALSE(equitable_colouring(decode_graph6(report.extremal->graph6), 4).found);
    CHECK(report.task["rng"] == std::string(sampler_algorithm));
}

TEST_CASE("task validation")
{
    auto t = task_for(Predicate::colouring, 6, 3);
    t.mode = Mode::sampled;
    t.samples = 10;
    CHECK_THROWS_AS(run_verification(t), RangeError); // no seed

    CHECK_THROWS_AS(run_verification(task_for(Predicate::matching, 8)), CapExceeded);
    CHECK_THROWS_AS(run_verification(task_for(Predicate::matching, 5)), RangeError);
    CHECK_THROWS_AS(run_verification(task_for(Predicate::colouring, 6, 4)), RangeError);

    auto p = task_for(Predicate::colouring, 6, 3);
    p.param = 7;
    CHECK_THROWS_AS(run_verification(p), RangeError);
}

TEST_CASE("node cap hits abort the task")
{
    auto t = task_for(Predicate::packing_degrees, 6, 3);
    t.node_cap = 1;
    auto report = run_verification(t);
    CHECK(report.status == Status::aborted);
    CHECK(to_json(report)["status"] == "aborted");
}

TEST_CASE("condition searches check their sharpness constructions")
{
    auto conj = run_verification(task_for(Predicate::packing_degrees, 6, 3));
    CHECK(conj.status == Status::pass);
    CHECK(conj.checks.empty());
    auto ques = run_verification(task_for(Predicate::packing_chvatal, 6, 3));
    CHECK(ques.status == Status::pass);
    CHECK(ques.violations.empty());
}

TEST_CASE("report schema")
{
    auto j = to_json(run_verification(task_for(Predicate::matching, 4)));
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it)
        keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"task", "examined", "violations", "extremal", "status", "elapsed_ms", "cases",
                      "checks"});
    CHECK(j["elapsed_ms"] == 0);
    CHECK(j["extremal"]["edges"] == 3);
}

TEST_CASE("construction audit for small orders")
{
    auto report = audit_constructions(20, 10);
    CHECK(report.status == Status::pass);
    CHECK(report.examined > 500);
    for (const auto & c : report.cases)
        CHECK_MESSAGE(c.defects.empty(), c.label);
}
