#pragma once

#include <packlab/graph.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace packlab {

/// Extremal and exceptional graph families. The token in parentheses is the
/// family name used on the command line and in reports.
enum class Family {
    split_unmatchable,    ///< (H) split graph with no perfect matching
    clique_and_isolated,  ///< (G1) K_{n/r+1} plus isolated vertices
    star_and_cliques,     ///< (G2) K_{1,D} plus near-equal cliques
    exception_clique,     ///< (AF_exception_i) complement is K_{n/r+1} plus isolated vertices
    exception_star,       ///< (AF_exception_ii) complement is a star, j edges and isolated vertices
    degree_band,          ///< (extremal1) fails the packing degree condition at a single index
    unbalanced_multipartite, ///< (t_star) complete r-partite with classes n/r-1 and n/r+1
    chvatal_band,         ///< (extremal2) fails the Chvatal-type packing condition at a single index
    square_counterexample ///< (square_cx) no three-edge path around one vertex
};

std::string_view family_token(Family f);
std::optional<Family> family_from_token(std::string_view token);
const std::vector<Family> & all_families();

/// Integer parameters; each family reads only the fields it needs.
struct ConstructionSpec {
    Family family;
    int n = 0;
    int r = 0;
    int degree = 0;  ///< d (split_unmatchable) or D (star_and_cliques)
    int k = 0;       ///< band index (degree_band, chvatal_band)
    int j = 0;       ///< edge count (exception_star)
    int spread = 0;  ///< C (square_counterexample)
    int stars = 0;   ///< K (square_counterexample)

    std::string describe() const;
};

/// The property each construction is claimed to lack.
enum class Obstruction { perfect_matching, clique_packing, equitable_colouring, square_hamilton_cycle };

/// Claimed properties, computed from closed-form formulas without building
/// the graph.
struct ConstructionClaims {
    std::int64_t edges = 0;
    std::vector<int> degrees; ///< ascending
    Obstruction obstruction = Obstruction::clique_packing;
    int obstruction_param = 0; ///< r for packings, number of colours for colourings
    std::optional<int> min_degree;
    std::optional<int> max_degree;
};

/// Throws RangeError when the parameters lie outside the family's range.
void validate(const ConstructionSpec & spec);

ConstructionClaims claims_for(const ConstructionSpec & spec);

/// Builds the graph, labelling vertices class by class in declaration order.
Graph build(const ConstructionSpec & spec);

/// Every valid parameter choice of the family with n <= max_n, in a fixed order.
std::vector<ConstructionSpec> parameter_sweep(Family family, int max_n);

// Direct builders.

/// Classes A (d+1), B (d), C (n-2d-1); B ∪ C is a clique and A is joined to B.
/// Needs n even, 0 <= d < n/2.
Graph build_split_unmatchable(int n, int d);

/// Clique on n/r+1 vertices followed by (1-1/r)n-1 isolated vertices.
/// Needs r >= 3, r | n.
Graph build_clique_and_isolated(int n, int r);

/// K_{1,D} (centre first) followed by the complement of T(n-D-1, r-2).
/// Needs r >= 3, n = kr with k >= 2, n/(r-1) <= D <= n-r.
Graph build_star_and_cliques(int n, int r, int max_degree);

/// The graph whose complement is K_{n/r+1} plus (1-1/r)n-1 isolated vertices.
/// Needs r >= 2, r | n.
Graph build_exception_clique(int n, int r);

/// The graph whose complement is K_{1,n-r-j+1}, then j disjoint edges, then
/// r-j-2 isolated vertices. Needs r >= 3, r | n, 1 <= j <= r-2, n >= r+j.
Graph build_exception_star(int n, int r, int j);

/// Classes V_0 (k), V_1..V_{r-2} (n/r each), V_{r-1} (2n/r-2k+1), V_r (k-1).
/// V_1..V_{r-2} form a complete multipartite graph joined to everything else;
/// V_{r-1} ∪ V_r is a clique; V_0 is joined to V_r only.
/// Needs r >= 2, r | n, 1 <= k < n/r.
Graph build_degree_band(int n, int r, int k);

/// Classes V_1 (k), V_2 ((r-1)k-1), V_3 (n-rk+1); V_2 and V_3 are cliques, and
/// V_2 is joined to V_1 and V_3. Needs r >= 2, r | n, 1 <= k <= n/r.
Graph build_chvatal_band(int n, int r, int k);

/// Vertex v = 0, then V_2 (n/3+C+1) covered by K balanced stars (a star of s
/// vertices is K_{1,s-1}, centre first), then V_3 (2n/3-C-2). v is joined to
/// V_2, V_2 to V_3, and V_3 is a clique. Needs 3 | n, C >= 1, 1 <= K <= |V_2|,
/// K >= 3C+2 and 2n/3-C-2+floor(|V_2|/K) >= 2n/3+C+1; the resulting degree
/// sequence must satisfy d_i >= n/3+C+i for i <= n/3.
Graph build_square_counterexample(int n, int spread, int stars);

} // namespace packlab
