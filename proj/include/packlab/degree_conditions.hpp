#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace packlab {

/// d_position >= bound, with positions 1-based in the ascending degree sequence.
struct DegreeAtom {
    int position;
    std::int64_t bound;
};

/// Satisfied when at least one atom holds.
struct DegreeClause {
    std::string label;
    std::vector<DegreeAtom> atoms;
};

/// Conjunction of clauses over an ascending degree sequence of fixed length.
struct DegreeCondition {
    int order = 0;
    std::vector<DegreeClause> clauses;

    bool satisfied_by(const std::vector<int> & ascending_degrees) const;

    /// Labels of the clauses that fail, in clause order.
    std::vector<std::string> failing_clauses(const std::vector<int> & ascending_degrees) const;

    /// Lower bound on the degree sum of any graph whose degree sequence
    /// satisfies the condition, or nullopt if no sequence in [0, order-1]^order
    /// does. Half of it, rounded up, bounds the edge count from below. Returns
    /// 0 when there are too many atom combinations to enumerate.
    std::optional<std::int64_t> min_degree_sum() const;
};

/// d_i >= (r-2)n/r + i for all i < n/r (labels "alpha_i"), and
/// d_{n/r+1} >= (r-1)n/r (label "beta"). Needs r >= 2, r | n.
DegreeCondition packing_degree_condition(int n, int r);

/// For every i <= n/r: d_i >= (r-2)n/r + i or d_{n-i(r-1)+1} >= n-i
/// (labels "i=<i>"). Needs r >= 2, r | n.
DegreeCondition packing_chvatal_condition(int n, int r);

/// For every 1 <= i <= n/2: d_i >= i or d_{n-i+1} >= n-i (labels "i=<i>").
/// Sufficient for a Hamilton path. Needs n >= 2.
DegreeCondition hamilton_path_degree_condition(int n);

} // namespace packlab
