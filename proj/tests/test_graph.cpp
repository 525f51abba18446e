#include "oracles.hpp"

#include <packlab/errors.hpp>
#include <packlab/families.hpp>
#include <packlab/graph.hpp>
#include <packlab/graph_io.hpp>

#include <doctest.h>

using namespace packlab;

TEST_CASE("vertex set algebra")
{
    VertexSet a(130, {0, 5, 64, 129});
    VertexSet b(130, {5, 64, 100});
    CHECK(a.size() == 4);
    CHECK((a & b).members() == std::vector<int>{5, 64});
    CHECK((a | b).size() == 5);
    CHECK((a - b).members() == std::vector<int>{0, 129});
    CHECK(a.intersection_size(b) == 2);
    CHECK(a.first() == 0);
    CHECK(a.next(5) == 64);
    CHECK(a.next(129) == -1);
    CHECK(a.complement().size() == 126);
    CHECK(VertexSet::range(130, 3, 7).members() == std::vector<int>{3, 4, 5, 6});
    CHECK(VertexSet(130).first() == -1);
    CHECK((a & b).is_subset_of(a));
    CHECK_FALSE(a.is_subset_of(b));
}

TEST_CASE("graph mutators keep adjacency symmetric")
{
    Graph g(5);
    g.add_edge(0, 3);
    g.add_edge(3, 4);
    CHECK(g.adjacent(3, 0));
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(3) == 2);
    g.remove_edge(3, 0);
    CHECK_FALSE(g.adjacent(0, 3));
    CHECK_THROWS_AS(g.add_edge(1, 1), RangeError);
    CHECK_THROWS_AS(g.add_edge(0, 5), RangeError);
    CHECK_THROWS_AS(Graph(-1), RangeError);
    CHECK_THROWS_AS(Graph(max_graph_order + 1), CapExceeded);
}

TEST_CASE("complement is an involution and splits the pairs")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        int n = static_cast<int>(rng() % 30);
        Graph g = oracle::random_graph(n, 0.4, rng);
        Graph co = complement(g);
        CHECK(complement(co) == g);
        CHECK(g.edge_count() + co.edge_count() == pairs(n));
    }
}

TEST_CASE("families")
{
    CHECK(complete_graph(5).edge_count() == 10);
    CHECK(path_graph(4).edge_count() == 3);
    CHECK(cycle_graph(5).min_degree() == 2);
    CHECK(star_graph(4).degree(0) == 4);
    CHECK(balanced_parts(7, 3) == std::vector<int>{3, 2, 2});
    CHECK(balanced_parts(2, 5) == std::vector<int>{1, 1});
    CHECK(turan_graph(3, 5) == complete_graph(3));

    for (int m = 0; m <= 20; ++m)
        for (int s = 1; s <= 7; ++s) {
            CHECK(turan_graph(m, s).edge_count() == oracle::turan_edges(m, s));
            CHECK(turan_complement(m, s) == complement(turan_graph(m, s)));
        }

    Graph t = t_star(12, 3);
    CHECK(degree_sequence(t) == std::vector<int>{7, 7, 7, 7, 7, 8, 8, 8, 8, 9, 9, 9});
    CHECK_THROWS_AS(t_star(10, 3), RangeError);
}

TEST_CASE("induced subgraph and disjoint union")
{
    Graph g = cycle_graph(6);
    Graph h = induced_subgraph(g, VertexSet(6, {0, 1, 2, 4}));
    CHECK(h.order() == 4);
    CHECK(h.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    Graph u = disjoint_union(complete_graph(3), path_graph(2));
    CHECK(u.order() == 5);
    CHECK(u.adjacent(3, 4));
    CHECK_FALSE(u.adjacent(2, 3));
}

TEST_CASE("graph6 reference strings")
{
    CHECK(encode_graph6(complete_graph(4)) == "C~");
    CHECK(encode_graph6(path_graph(5)) == "DhC");
    CHECK(encode_graph6(cycle_graph(5)) == "Dhc");
    CHECK(encode_graph6(star_graph(3)) == "Cs");
    CHECK(encode_graph6(Graph(0)) == "?");
    CHECK(encode_graph6(Graph(1)) == "@");
    auto long_path = encode_graph6(path_graph(63));
    CHECK(long_path.size() == 330);
    CHECK(long_path.substr(0, 8) == "~??~hCGG");
    CHECK(decode_graph6(">>graph6<<C~\n") == complete_graph(4));
}

TEST_CASE("graph6 round trip on random graphs")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = static_cast<int>(rng() % 41);
        double p = static_cast<double>(rng() % 101) / 100.0;
        Graph g = oracle::random_graph(n, p, rng);
        REQUIRE(decode_graph6(encode_graph6(g)) == g);
        REQUIRE(decode_edge_list(encode_edge_list(g)) == g);
    }
}

TEST_CASE("graph6 rejects malformed input")
{
    CHECK_THROWS_AS(decode_graph6(""), ParseError);
    CHECK_THROWS_AS(decode_graph6("C"), ParseError);     // missing edge byte
    CHECK_THROWS_AS(decode_graph6("C~~"), ParseError);   // extra byte
    CHECK_THROWS_AS(decode_graph6("C\x7f"), ParseError); // out of range
    CHECK(decode_graph6("B?") == Graph(3));
    CHECK_THROWS_AS(decode_graph6("BA"), ParseError);    // padding bit set
    CHECK_THROWS_AS(decode_graph6("~?"), ParseError);    // truncated long header
}

TEST_CASE("edge list and automatic format detection")
{
    Graph g = decode_graph("# a comment\nn=4\n0 1\n\n2 3\n");
    CHECK(g.order() == 4);
    CHECK(g.edge_count() == 2);
    CHECK(decode_graph("C~\n") == complete_graph(4));
    CHECK(decode_graph("n=2\n0 1\n", GraphFormat::edge_list) == complete_graph(2));
    CHECK_THROWS_AS(decode_edge_list("0 1\n"), ParseError);
    CHECK_THROWS_AS(decode_edge_list("n=3\n0 3\n"), ParseError);
    CHECK_THROWS_AS(decode_edge_list("n=3\n1 1\n"), ParseError);
}
