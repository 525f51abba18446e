// packlab: thresholds, constructions, exact solvers and verification runs.
//
// Exit codes: 0 yes/pass, 1 no/fail, 2 usage or hypothesis violation,
// 3 node cap, order cap or cancellation.

#include <packlab/certificates.hpp>
#include <packlab/constructions.hpp>
#include <packlab/errors.hpp>
#include <packlab/graph_io.hpp>
#include <packlab/solvers.hpp>
#include <packlab/thresholds.hpp>
#include <packlab/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace packlab;
using json = nlohmann::ordered_json;

enum Exit { yes = 0, no = 1, usage = 2, aborted = 3 };

struct Options {
    std::string kind;
    std::int64_t n = -1, r = -1, d = -1, big_d = -1, m = -1, s = -1;
    int k = -1, j = -1, spread = -1, stars = -1;
    std::string format = "text";
    std::string input_format = "auto";
    std::string out;
    std::string input = "-";
    bool audit = false;
    std::string mode = "exhaustive";
    std::optional<std::uint64_t> seed;
    std::uint64_t samples = 0;
    int workers = 1;
    int exhaustive_cap = default_exhaustive_cap;
    std::uint64_t node_cap = 0;
    bool timing = false;
    int max_n = 12;
    int solver_max_n = 12;
};

void require(bool ok, const std::string & what)
{
    if (! ok)
        throw RangeError(what);
}

std::int64_t need(std::int64_t value, const char * flag)
{
    require(value >= 0, std::string("missing or negative ") + flag);
    return value;
}

void emit(const Options & o, const std::string & text)
{
    if (o.out.empty() || o.out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream file(o.out, std::ios::binary);
    if (! file)
        throw RangeError("cannot open " + o.out + " for writing");
    file << text;
}

std::string read_input(const std::string & path)
{
    std::ostringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
    }
    else {
        std::ifstream file(path, std::ios::binary);
        if (! file)
            throw ParseError("cannot read " + path);
        buffer << file.rdbuf();
    }
    return buffer.str();
}

GraphFormat input_format(const std::string & name)
{
    if (name == "auto")
        return GraphFormat::automatic;
    if (name == "graph6")
        return GraphFormat::graph6;
    if (name == "edges")
        return GraphFormat::edge_list;
    throw RangeError("unknown input format " + name);
}

std::string set_text(const VertexSet & set)
{
    std::string out;
    for (int v : set)
        out += (out.empty() ? "" : " ") + std::to_string(v);
    return out;
}

json sets_json(const std::vector<VertexSet> & sets)
{
    json out = json::array();
    for (const auto & s : sets)
        out.push_back(s.members());
    return out;
}

// threshold ------------------------------------------------------------------

int cmd_threshold(const Options & o)
{
    json j;
    j["kind"] = o.kind;
    std::optional<ThresholdValue> value;
    if (o.kind == "f2") {
        auto n = need(o.n, "--n"), d = need(o.d, "--d");
        require(in_matching_range(n, d), "f2 needs n even >= 4 and 1 <= d < n/2");
        j["n"] = n;
        j["d"] = d;
        value = matching_threshold(n, d);
    }
    else if (o.kind == "f" || o.kind == "g") {
        auto n = need(o.n, "--n"), r = need(o.r, "--r"), big = need(o.big_d, "--D");
        j["n"] = n;
        j["r"] = r;
        j["D"] = big;
        if (o.kind == "f") {
            require(in_colouring_range(n, r, big), "f needs r >= 3, r | n and n/r <= D <= n-r");
            value = colouring_threshold(n, r, big);
        }
        else {
            require(in_packing_range(n, r, big), "g needs r >= 3, r | n and r-1 <= D <= (r-1)n/r - 1");
            value = packing_threshold(n, r, big);
        }
    }
    else if (o.kind == "turan") {
        auto m = need(o.m >= 0 ? o.m : o.n, "--m"), s = need(o.s >= 0 ? o.s : o.r, "--s");
        require(s >= 1, "turan needs s >= 1");
        j["m"] = m;
        j["s"] = s;
        j["value"] = turan_edges(m, s);
        j["complement"] = turan_complement_edges(m, s);
    }
    else if (o.kind == "appendix") {
        auto n = need(o.n, "--n"), r = need(o.r, "--r");
        require(r >= 3 && n % r == 0 && n >= 2 * r, "appendix needs r >= 3, r | n and n >= 2r");
        j["n"] = n;
        j["r"] = r;
        j["relaxed_decreasing"] = relaxed_second_branch_decreasing(n, r);
        json first = json::array();
        for (auto big = n / r; big <= n - r; ++big)
            if (colouring_threshold_first_branch(n, r, big))
                first.push_back(big);
        j["first_branch_D"] = std::move(first);
    }
    else {
        throw RangeError("unknown threshold kind " + o.kind);
    }
    if (value) {
        j["value"] = value->value;
        j["branch"] = to_string(value->branch);
        j["first"] = value->first;
        j["second"] = value->second;
    }

    if (o.format == "json") {
        emit(o, j.dump(2) + "\n");
    }
    else {
        std::string text;
        for (auto it = j.begin(); it != j.end(); ++it)
            text += it.key() + " " + (it->is_string() ? it->get<std::string>() : it->dump()) + "\n";
        emit(o, text);
    }
    return yes;
}

// construct ------------------------------------------------------------------

ConstructionSpec spec_from(const Options & o)
{
    auto family = family_from_token(o.kind);
    if (! family)
        throw RangeError("unknown family " + o.kind);
    ConstructionSpec spec{*family};
    spec.n = static_cast<int>(need(o.n, "--n"));
    spec.r = static_cast<int>(o.r);
    spec.degree = static_cast<int>(o.big_d >= 0 ? o.big_d : o.d);
    spec.k = o.k;
    spec.j = o.j;
    spec.spread = o.spread;
    spec.stars = o.stars;
    return spec;
}

int cmd_construct(const Options & o)
{
    auto spec = spec_from(o);
    Graph g = build(spec);

    if (o.format == "graph6")
        emit(o, encode_graph6(g) + "\n");
    else if (o.format == "edges")
        emit(o, encode_edge_list(g));
    else if (o.format == "json")
        emit(o, json{{"family", family_token(spec.family)}, {"spec", spec.describe()}, {"n", g.order()},
                      {"edges", g.edge_count()}, {"graph6", encode_graph6(g)}}
                        .dump(2)
            + "\n");
    else
        throw RangeError("unknown output format " + o.format);

    if (! o.audit)
        return yes;
    auto claims = claims_for(spec);
    std::cerr << spec.describe() << "\nedges " << g.edge_count() << " (claimed " << claims.edges << ")\n";
    if (claims.obstruction == Obstruction::square_hamilton_cycle) {
        std::cerr << "flagged vertices:";
        for (int v : square_cycle_violations(g))
            std::cerr << ' ' << v;
        std::cerr << '\n';
    }
    if (auto defect = construction_defect(spec, g, o.solver_max_n)) {
        std::cerr << "audit failed: " << *defect << '\n';
        return no;
    }
    static constexpr const char * lacks[] = {"no perfect matching", "no perfect clique packing",
        "no equitable colouring", "no square Hamilton cycle"};
    std::cerr << "audit passed: " << lacks[static_cast<int>(claims.obstruction)]
              << (g.order() > o.solver_max_n && (claims.obstruction == Obstruction::clique_packing
                                                 || claims.obstruction == Obstruction::equitable_colouring)
                         ? " (solver check skipped above n=" + std::to_string(o.solver_max_n) + ")"
                         : std::string(" confirmed"))
              << '\n';
    return yes;
}

// solve ----------------------------------------------------------------------

void print_certificate(const Options & o, const Graph & g, const SolveOutcome & out, json & j)
{
    j["found"] = out.found;
    j["nodes"] = out.nodes_explored;
    std::string text = out.found ? "yes\n" : "no\n";
    if (auto * p = std::get_if<PackingCertificate>(&out.certificate)) {
        j["blocks"] = sets_json(p->blocks);
        for (const auto & b : p->blocks)
            text += "block " + set_text(b) + "\n";
    }
    else if (auto * c = std::get_if<ColouringCertificate>(&out.certificate)) {
        j["classes"] = sets_json(c->classes);
        for (const auto & cls : c->classes)
            text += "class " + set_text(cls) + "\n";
    }
    else if (auto * h = std::get_if<HamiltonPath>(&out.certificate)) {
        j["path"] = h->order;
        text += "path";
        for (int v : h->order)
            text += " " + std::to_string(v);
        text += "\n";
    }
    (void) g;
    emit(o, o.format == "json" ? j.dump(2) + "\n" : text);
}

// A certificate that fails its independent validator is a solver bug.
void validate_certificate(const Graph & g, const SolveOutcome & out, int param)
{
    std::optional<std::string> defect;
    if (auto * p = std::get_if<PackingCertificate>(&out.certificate))
        defect = packing_defect(g, *p, param);
    else if (auto * c = std::get_if<ColouringCertificate>(&out.certificate))
        defect = colouring_defect(g, *c, param);
    else if (auto * h = std::get_if<HamiltonPath>(&out.certificate))
        defect = hamilton_path_defect(g, *h);
    if (defect)
        throw std::logic_error("certificate rejected by validator: " + *defect);
}

int cmd_solve(const Options & o)
{
    Graph g = decode_graph(read_input(o.input), input_format(o.input_format));
    SearchLimits limits;
    if (o.node_cap)
        limits.node_cap = o.node_cap;
    json j;
    j["task"] = o.kind;
    j["n"] = g.order();

    auto finish = [&](const SolveOutcome & out, int param) {
        validate_certificate(g, out, param);
        print_certificate(o, g, out, j);
        return out.found ? yes : no;
    };

    if (o.kind == "matching")
        return finish(perfect_matching(g), 2);
    if (o.kind == "pack") {
        int r = static_cast<int>(need(o.r, "--r"));
        return finish(perfect_clique_packing(g, r, limits), r);
    }
    if (o.kind == "colour") {
        int k = static_cast<int>(need(o.k, "--k"));
        return finish(equitable_colouring(g, k, limits), k);
    }
    if (o.kind == "krfree") {
        int r = static_cast<int>(need(o.r, "--r"));
        return finish(krfree_greedy_packing(g, r, limits), r);
    }
    if (o.kind == "turan-partition") {
        int r = static_cast<int>(need(o.r, "--r"));
        auto parts = turan_partition(g, r, limits);
        if (auto defect = partition_defect(g, parts))
            throw std::logic_error("partition rejected by validator: " + *defect);
        j["classes"] = sets_json(parts);
        std::string text = "yes\n";
        for (const auto & p : parts)
            text += "class " + set_text(p) + "\n";
        emit(o, o.format == "json" ? j.dump(2) + "\n" : text);
        return yes;
    }
    if (o.kind == "chvatal") {
        bool condition = g.order() >= 2 && chvatal_hamilton_path_condition(g);
        j["condition"] = condition;
        if (g.order() > default_hamilton_order_cap) {
            if (! condition)
                throw CapExceeded("condition fails and n exceeds the exact search cap "
                    + std::to_string(default_hamilton_order_cap));
            j["found"] = true;
            emit(o, o.format == "json" ? j.dump(2) + "\n" : "yes\ncondition holds\n");
            return yes;
        }
        return finish(hamilton_path_exact(g, default_hamilton_order_cap, limits), 0);
    }
    if (o.kind == "square-check") {
        auto flagged = square_cycle_violations(g);
        j["flagged"] = flagged;
        std::string text = flagged.empty() ? "pass\n" : "flagged";
        for (int v : flagged)
            text += " " + std::to_string(v);
        if (! flagged.empty())
            text += "\n";
        emit(o, o.format == "json" ? j.dump(2) + "\n" : text);
        return flagged.empty() ? yes : no;
    }
    throw RangeError("unknown solve task " + o.kind);
}

// verify ---------------------------------------------------------------------

int cmd_verify(const Options & o)
{
    VerificationReport report;
    if (o.kind == "audit") {
        auto started = std::chrono::steady_clock::now();
        report = audit_constructions(o.max_n, o.solver_max_n);
        if (o.timing)
            report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - started)
                                    .count();
    }
    else {
        auto predicate = predicate_from_token(o.kind);
        if (! predicate)
            throw RangeError("unknown predicate " + o.kind);
        EnumerationTask task;
        task.predicate = *predicate;
        task.n = static_cast<int>(need(o.n, "--n"));
        task.r = static_cast<int>(o.r < 0 ? 0 : o.r);
        require(o.mode == "exhaustive" || o.mode == "sampled", "mode must be exhaustive or sampled");
        task.mode = o.mode == "exhaustive" ? Mode::exhaustive : Mode::sampled;
        task.samples = o.samples;
        task.seed = o.seed;
        if (o.big_d >= 0 || o.d >= 0)
            task.param = static_cast<int>(o.big_d >= 0 ? o.big_d : o.d);
        task.workers = o.workers;
        task.exhaustive_cap = o.exhaustive_cap;
        task.node_cap = o.node_cap;
        task.timing = o.timing;
        report = run_verification(task);
    }
    emit(o, to_json(report).dump(2) + "\n");
    switch (report.status) {
    case Status::pass: return yes;
    case Status::fail: return no;
    case Status::aborted: return aborted;
    }
    return usage;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"packlab: clique packings, equitable colourings and their degree thresholds"};
    app.require_subcommand(1);
    Options o;

    auto * threshold = app.add_subcommand("threshold", "evaluate a threshold formula");
    threshold->add_option("kind", o.kind, "f2 | f | g | turan | appendix")->required();
    threshold->add_option("--n", o.n);
    threshold->add_option("--r", o.r);
    threshold->add_option("--d", o.d, "minimum degree for f2");
    threshold->add_option("--D", o.big_d, "degree bound for f and g");
    threshold->add_option("--m", o.m, "vertex count for turan");
    threshold->add_option("--s", o.s, "class count for turan");
    threshold->add_option("--format", o.format, "text | json");
    threshold->add_option("--out", o.out);

    auto * construct = app.add_subcommand("construct", "build an extremal construction");
    construct->add_option("family", o.kind, "H | G1 | G2 | AF_exception_i | AF_exception_ii | extremal1 | t_star | "
                                            "extremal2 | square_cx")
        ->required();
    construct->add_option("--n", o.n);
    construct->add_option("--r", o.r);
    construct->add_option("--d", o.d);
    construct->add_option("--D", o.big_d);
    construct->add_option("--k", o.k);
    construct->add_option("--j", o.j);
    construct->add_option("--C", o.spread);
    construct->add_option("--K", o.stars);
    construct->add_option("--format", o.format, "graph6 | edges | json")->default_val("graph6");
    construct->add_option("--out", o.out);
    construct->add_flag("--audit", o.audit, "check the claimed properties; exit 1 on failure");
    construct->add_option("--solver-max-n", o.solver_max_n, "largest order checked by exact solver");

    auto * solve = app.add_subcommand("solve", "run an exact solver on a graph");
    solve->add_option("task", o.kind, "matching | pack | colour | krfree | turan-partition | chvatal | square-check")
        ->required();
    solve->add_option("input", o.input, "graph file, or - for stdin");
    solve->add_option("--r", o.r);
    solve->add_option("--k", o.k);
    solve->add_option("--input-format", o.input_format, "auto | graph6 | edges");
    solve->add_option("--format", o.format, "text | json");
    solve->add_option("--node-cap", o.node_cap)->check(CLI::PositiveNumber);
    solve->add_option("--out", o.out);

    auto * verify = app.add_subcommand("verify", "run a verification task and print a JSON report");
    verify->add_option("predicate", o.kind, "matching | t1 | mainthm1 | conj1 | ques1 | chvatal | audit")->required();
    verify->add_option("--n", o.n);
    verify->add_option("--r", o.r);
    verify->add_option("--d", o.d, "restrict to one minimum degree");
    verify->add_option("--D", o.big_d, "restrict to one degree bound");
    verify->add_option("--mode", o.mode, "exhaustive | sampled");
    verify->add_option("--seed", o.seed);
    verify->add_option("--samples", o.samples);
    verify->add_option("--workers", o.workers)->check(CLI::PositiveNumber);
    verify->add_option("--exhaustive-cap", o.exhaustive_cap)->check(CLI::PositiveNumber);
    verify->add_option("--node-cap", o.node_cap)->check(CLI::PositiveNumber);
    verify->add_option("--max-n", o.max_n, "audit: largest order");
    verify->add_option("--solver-max-n", o.solver_max_n, "audit: largest order checked by exact solver");
    verify->add_flag("--timing", o.timing, "record elapsed time (reports are then not reproducible)");
    verify->add_option("--out", o.out);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return usage;
    }

    try {
        if (*threshold)
            return cmd_threshold(o);
        if (*construct)
            return cmd_construct(o);
        if (*solve)
            return cmd_solve(o);
        return cmd_verify(o);
    }
    catch (const SearchAborted & e) {
        std::cerr << "aborted: " << e.what() << '\n';
        return aborted;
    }
    catch (const CapExceeded & e) {
        std::cerr << "cap exceeded: " << e.what() << '\n';
        return aborted;
    }
    catch (const HypothesisViolated & e) {
        std::cerr << "hypothesis violated: " << e.what() << '\n';
        return usage;
    }
    catch (const RangeError & e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    }
    catch (const ParseError & e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return usage;
    }
    catch (const std::overflow_error & e) {
        std::cerr << "overflow: " << e.what() << '\n';
        return usage;
    }
    catch (const std::exception & e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return usage;
    }
}
