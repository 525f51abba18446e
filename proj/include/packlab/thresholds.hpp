#pragma once

#include <cstdint>
#include <string_view>

namespace packlab {

/// Which argument of a two-argument min/max attains the value.
enum class Branch { first, second, tie };

std::string_view to_string(Branch b);

struct ThresholdValue {
    std::int64_t value;
    Branch branch;
    std::int64_t first;  ///< first argument of the min/max
    std::int64_t second; ///< second argument of the min/max
};

// Parameter ranges on which each threshold is defined.
bool in_matching_range(std::int64_t n, std::int64_t d);
bool in_packing_range(std::int64_t n, std::int64_t r, std::int64_t min_degree);
bool in_colouring_range(std::int64_t n, std::int64_t r, std::int64_t max_degree);

/// Exact e(T(m, s)) from the class sizes. Throws std::overflow_error if the
/// count does not fit in 64 bits.
std::int64_t turan_edges(std::int64_t m, std::int64_t s);

/// Exact e(complement of T(m, s)) = C(m,2) - e(T(m, s)).
std::int64_t turan_complement_edges(std::int64_t m, std::int64_t s);

/// Edge count of the split-clique graph without a perfect matching:
/// C(n-d-1, 2) + d(d+1). Needs n even and 0 <= d < n/2.
std::int64_t matching_construction_edges(std::int64_t n, std::int64_t d);

/// Largest edge count of an n-vertex graph with minimum degree >= d and no
/// perfect matching: max{split(n, d), split(n, n/2-1)}. Needs n even >= 4, 1 <= d < n/2.
ThresholdValue matching_threshold(std::int64_t n, std::int64_t d);

/// Largest edge count of an n-vertex graph with minimum degree >= min_degree
/// and no perfect K_r-packing:
///   max{ C(n,2) - C(n/r+1, 2),  D(n-D) + C(n-1-D, 2) + e(T(D, r-2)) }.
/// Needs r >= 3, r | n, r-1 <= D <= (r-1)n/r - 1.
ThresholdValue packing_threshold(std::int64_t n, std::int64_t r, std::int64_t min_degree);

/// Smallest edge count of an n-vertex graph with maximum degree <= max_degree
/// and no equitable n/r-colouring:
///   min{ C(n/r+1, 2),  D + e(complement of T(n-D-1, r-2)) }.
/// Needs r >= 3, r | n, n/r <= D <= n-r.
ThresholdValue colouring_threshold(std::int64_t n, std::int64_t r, std::int64_t max_degree);

/// packing_threshold(n, r, D) + colouring_threshold(n, r, n-1-D) == C(n, 2).
/// Needs D in the packing range.
bool threshold_duality_holds(std::int64_t n, std::int64_t r, std::int64_t min_degree);

/// True iff the colouring threshold's min is attained by C(n/r+1, 2)
/// (first branch or tie). Needs D in the colouring range.
bool colouring_threshold_first_branch(std::int64_t n, std::int64_t r, std::int64_t max_degree);

/// Real relaxation of the colouring threshold's second argument, with
/// e(complement of T(m, s)) replaced by its lower bound m²/(2s) - m/2:
///   x + (n-x-1)² / (2(r-2)) - (n-x-1)/2.
/// Needs r >= 3.
double relaxed_second_branch(std::int64_t n, std::int64_t r, double x);

/// Samples relaxed_second_branch on a 1/16 grid over [0, n/(r-1)] and, when
/// n >= 3r, over [0, (n+r)/(r-1)], and checks successive values strictly
/// decrease. Needs r >= 3, r | n, n >= 2r.
bool relaxed_second_branch_decreasing(std::int64_t n, std::int64_t r);

} // namespace packlab
