#pragma once

#include <packlab/certificates.hpp>
#include <packlab/graph.hpp>

#include <cstdint>
#include <optional>
#include <stop_token>
#include <variant>
#include <vector>

namespace packlab {

/// Node cap used when none is given: the PACKLAB_NODE_CAP environment
/// variable if set to a positive integer, otherwise 50 million.
std::uint64_t default_node_cap();

/// Bounds on an exponential search. Hitting either raises SearchAborted.
struct SearchLimits {
    std::uint64_t node_cap = default_node_cap();
    std::stop_token stop;
};

using Certificate = std::variant<std::monostate, PackingCertificate, ColouringCertificate, HamiltonPath>;

/// Outcome of an exact decision procedure. A certificate is present exactly
/// when the answer is yes.
struct SolveOutcome {
    bool found = false;
    Certificate certificate;
    std::uint64_t nodes_explored = 0;
};

/// Exact perfect matching via Edmonds' blossom algorithm. The certificate is
/// a PackingCertificate of 2-vertex blocks.
SolveOutcome perfect_matching(const Graph & g);

/// Exact perfect K_r-packing by backtracking: the lowest uncovered vertex is
/// covered by each r-clique through it among uncovered vertices, in
/// lexicographic order. Branches where some uncovered vertex has fewer than
/// r-1 uncovered neighbours are cut. If r does not divide n the answer is no.
SolveOutcome perfect_clique_packing(const Graph & g, int r, const SearchLimits & limits = {});

/// Exact equitable k-colouring. For k | n this is a perfect (n/k)-clique
/// packing of the complement; otherwise classes are filled by backtracking
/// under the size caps ceil(n/k) and floor(n/k).
SolveOutcome equitable_colouring(const Graph & g, int k, const SearchLimits & limits = {});

/// delta(G) >= (r-1)n/r, which guarantees a perfect K_r-packing when r | n.
bool hajnal_szemeredi_guarantee(const Graph & g, int r);

/// A clique of the given size contained in `within`, if one exists.
std::optional<VertexSet> find_clique(const Graph & g, int size, const VertexSet & within, const SearchLimits & limits = {});

/// Vertices with degree < (r-1)n/r that lie in a copy of K_{r+1}.
std::vector<int> low_degree_vertices_in_larger_clique(const Graph & g, int r, const SearchLimits & limits = {});

/// Perfect K_r-packing for graphs whose degree sequence satisfies
/// d_i >= (r-2)n/r + i (i < n/r) and d_{n/r+1} >= (r-1)n/r, and in which no
/// vertex of degree below (r-1)n/r lies in a K_{r+1}.
///
/// Repeatedly takes a minimum-degree vertex, extends it to an r-clique through
/// high-degree common neighbours and removes that clique. Once every remaining
/// degree reaches (r-1)n'/r the rest is delegated to perfect_clique_packing.
/// Throws HypothesisViolated if the degree conditions fail, or if a removed
/// clique turns out to lie in a K_{r+1}.
SolveOutcome krfree_greedy_packing(const Graph & g, int r, const SearchLimits & limits = {});

/// Splits a K_{r+1}-free graph with d_{n/r} >= (r-1)n/r into r independent
/// classes of size n/r, witnessing G ⊆ T(n, r). Throws HypothesisViolated if
/// the graph contains a K_{r+1} or the degree condition fails.
std::vector<VertexSet> turan_partition(const Graph & g, int r, const SearchLimits & limits = {});

/// d_i >= i or d_{n-i+1} >= n-i for all 1 <= i <= n/2. Needs n >= 2.
bool chvatal_hamilton_path_condition(const Graph & g);

/// Largest order hamilton_path_exact accepts by default.
inline constexpr int default_hamilton_order_cap = 14;

/// Exact Hamilton path search by backtracking. Throws CapExceeded above
/// `order_cap` vertices.
SolveOutcome hamilton_path_exact(const Graph & g, int order_cap = default_hamilton_order_cap,
    const SearchLimits & limits = {});

/// True iff G[N(x)] contains a path with three edges.
bool neighbourhood_has_three_edge_path(const Graph & g, int x);

/// Vertices x whose neighbourhood contains no three-edge path. Any such vertex
/// rules out the square of a Hamilton cycle.
std::vector<int> square_cycle_violations(const Graph & g);

} // namespace packlab
