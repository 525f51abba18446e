#pragma once

#include <packlab/constructions.hpp>
#include <packlab/graph.hpp>
#include <packlab/solvers.hpp>

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace packlab {

enum class Predicate {
    matching,          ///< matching threshold over minimum degree d
    colouring,         ///< equitable colouring threshold over maximum degree D (t1)
    packing,           ///< clique packing threshold over minimum degree D (mainthm1)
    packing_degrees,   ///< degree-sequence packing conjecture (conj1)
    packing_chvatal,   ///< Chvatal-type packing question (ques1)
    hamilton_path      ///< Chvatal-type Hamilton path condition (chvatal)
};

std::string_view predicate_token(Predicate p);
std::optional<Predicate> predicate_from_token(std::string_view token);

enum class Mode { exhaustive, sampled };

inline constexpr int default_exhaustive_cap = 7;
inline constexpr int sampled_order_cap = 16;
inline constexpr std::string_view sampler_algorithm = "mt19937_64+splitmix64/block4096";

struct EnumerationTask {
    Predicate predicate = Predicate::matching;
    int n = 0;
    int r = 0;
    Mode mode = Mode::exhaustive;
    std::uint64_t samples = 0;     ///< accepted samples per case
    std::optional<std::uint64_t> seed;
    std::optional<int> param;      ///< restrict to one d or D
    int workers = 1;
    int exhaustive_cap = default_exhaustive_cap;
    std::uint64_t node_cap = 0;    ///< 0 means default_node_cap()
    std::uint64_t proposal_factor = 4000; ///< proposals allowed per requested sample
    bool timing = false;
};

struct ExtremalWitness {
    std::int64_t edges;
    std::string graph6;
};

/// One parameter value (d or D), one construction family, or one whole-family check.
struct CaseReport {
    std::string label;
    std::string filter;
    std::optional<std::int64_t> threshold;
    std::uint64_t examined = 0;
    std::vector<std::string> violations; ///< graph6
    std::optional<ExtremalWitness> extremal;
    std::vector<std::string> defects;    ///< human-readable failure notes
};

enum class Status { pass, fail, aborted };
std::string_view to_string(Status s);

struct VerificationReport {
    nlohmann::ordered_json task;
    std::uint64_t examined = 0;
    std::vector<std::string> violations;
    std::optional<ExtremalWitness> extremal;
    Status status = Status::pass;
    std::int64_t elapsed_ms = 0;
    std::vector<CaseReport> cases;
    std::vector<std::string> checks; ///< failed side assertions
    std::string abort_reason;
};

nlohmann::ordered_json to_json(const VerificationReport & report);

/// Throws RangeError on invalid parameters and CapExceeded above the order caps.
VerificationReport run_verification(const EnumerationTask & task);

/// Audits every construction family over all valid parameters with n <= max_n:
/// edge count, degree sequence and degree bound against the closed-form claims,
/// and the claimed obstruction by exact solver for n <= solver_max_n.
VerificationReport audit_constructions(int max_n, int solver_max_n = 12);

/// Checks one built construction against its claims; nullopt when all hold.
std::optional<std::string> construction_defect(const ConstructionSpec & spec, const Graph & g,
    int solver_max_n = 12, const SearchLimits & limits = {});

/// The graph whose edge slots (0,1),(0,2),(1,2),(0,3),... are the set bits of mask.
Graph graph_from_mask(int n, std::uint64_t mask);

} // namespace packlab
