#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "crdom/crdom.hpp"

namespace crdom::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_input = 1,
    exit_capacity = 2,
    exit_domain = 3,
    exit_mismatch = 4,
};

using nlohmann::json;

inline json to_json(VertexSet s) { return s.members(); }

inline json optional_json(const std::optional<std::int64_t>& v) { return v ? json(*v) : json(nullptr); }

inline json cell_json(const std::string& theorem, const CellResult& c)
{
    return json{{"theorem", theorem},
                {"cell", c.cell},
                {"formula", optional_json(c.formula)},
                {"status", c.status},
                {"basis", c.basis},
                {"oracle", optional_json(c.oracle)},
                {"construction", optional_json(c.construction)},
                {"relation", std::string{relation_symbol(c.relation)}},
                {"agree", c.agree},
                {"note", c.note},
                {"counterexamples", c.counterexamples}};
}

inline void write_report_json(std::ostream& out, const VerificationReport& r)
{
    for (const auto& c : r.cells)
        out << cell_json(r.theorem_id, c).dump() << '\n';
    out << json{{"theorem", r.theorem_id},
                {"summary", true},
                {"n_min", r.n_min},
                {"n_max", r.n_max},
                {"mode", std::string{mode_name(r.mode)}},
                {"cells", r.cells.size()},
                {"disagreements", r.disagreements()},
                {"skipped", r.skipped},
                {"agree", r.passed()}}
               .dump()
        << '\n';
}

inline void write_table_json(std::ostream& out, const ProfileTable& t)
{
    const int n = t.order();
    auto cell = [&](const char* kind, int k, const char* key, int third, const OracleCell& c, const char* hi,
                    const char* lo) {
        out << json{{"kind", kind},        {"n", n},
                    {"k", k},              {key, third},
                    {"count", c.count},    {hi, c.max},
                    {lo, c.min},           {"max_witness", witness_form(n, c.max_witness)},
                    {"min_witness", witness_form(n, c.min_witness)}}
                   .dump()
            << '\n';
    };
    if (t.complete())
        for (int k = 0; k <= n; ++k)
            for (int r = 1; r <= n; ++r)
                if (t.gamma_cell(k, r).exists())
                    cell("gamma", k, "r", r, t.gamma_cell(k, r), "max_edges", "min_edges");
    for (int k = 0; k <= n; ++k)
        for (int m = 0; m <= t.pairs(); ++m)
            if (t.size_cell(k, m).exists())
                cell("size", k, "m", m, t.size_cell(k, m), "max_gamma", "min_gamma");
    json summary{{"kind", "summary"}, {"n", n}, {"graphs", t.graphs()}, {"swept", t.swept_sizes()}};
    if (t.propositions_checked())
        summary["proposition_violations"] = t.propositions().violations();
    out << summary.dump() << '\n';
}

/// Maps a library exception to the documented exit code and reports it.
inline int report_error(std::ostream& err, const std::exception& e)
{
    err << "crdom: " << e.what() << '\n';
    if (dynamic_cast<const CapacityError*>(&e))
        return exit_capacity;
    if (dynamic_cast<const DomainError*>(&e) || dynamic_cast<const ConstructionUnavailable*>(&e))
        return exit_domain;
    return exit_input;
}

inline int run_compute(bool as_json, unsigned workers, std::istream& in, std::ostream& out, std::ostream& err)
{
    const SolverOptions options{solver_cap_from_env(), workers};
    SubsetSweep sweep;
    bool parse_failed = false;
    bool capacity_failed = false;
    std::string line;
    for (std::size_t number = 1; std::getline(in, line); ++number) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line == graph6_header)
            continue;
        try {
            const Graph g = from_graph6(line);
            const CRProfile p = solve(g, sweep, options);
            if (as_json) {
                out << json{{"graph6", to_graph6(g)},      {"n", g.order()},        {"m", g.edge_count()},
                            {"cr", p.cr},                  {"gamma", p.gamma_cr},   {"witness", to_json(p.witness)},
                            {"gamma_sets", p.gamma_set_count}}
                           .dump()
                    << '\n';
            }
            else {
                out << "n=" << g.order() << " m=" << g.edge_count() << " cr=" << p.cr << " gamma=" << p.gamma_cr
                    << " witness=" << p.witness.to_string() << " count=" << p.gamma_set_count << '\n';
            }
        }
        catch (const ParseError& e) {
            err << "line " << number << ": " << e.what() << '\n';
            parse_failed = true;
        }
        catch (const CapacityError& e) {
            err << "line " << number << ": " << e.what() << '\n';
            capacity_failed = true;
        }
    }
    if (parse_failed)
        return exit_input;
    return capacity_failed ? exit_capacity : exit_ok;
}

struct QueryFlags {
    std::string quantity;
    int n = 0;
    int k = 0;
    std::optional<std::int64_t> r;
    std::optional<std::int64_t> m_edges;
    bool as_json = false;
};

inline ExtremalQuery make_query(const QueryFlags& f)
{
    const auto q = parse_quantity(f.quantity);
    if (!q)
        throw UsageError("--quantity must be one of M, m, D, d");
    if (indexed_by_gamma(*q)) {
        if (!f.r)
            throw UsageError("--quantity " + f.quantity + " needs --r");
        return {*q, f.n, f.k, *f.r};
    }
    if (!f.m_edges)
        throw UsageError("--quantity " + f.quantity + " needs --m-edges");
    return {*q, f.n, f.k, *f.m_edges};
}

inline std::string cell_text(const ExtremalQuery& q)
{
    return std::string{quantity_symbol(q.quantity)} + "(" + std::to_string(q.n) + "," + std::to_string(q.k) + "," +
           std::to_string(q.third) + ")";
}

inline int run_formula(const QueryFlags& f, std::ostream& out)
{
    const ExtremalQuery q = make_query(f);
    const ExtremalValue v = evaluate(q);
    if (f.as_json) {
        out << json{{"cell", cell_text(q)},
                    {"status", std::string{status_name(v.status)}},
                    {"value", optional_json(v.value)},
                    {"theorem", std::string{v.basis}}}
                   .dump()
            << '\n';
    }
    else {
        out << cell_text(q) << " status=" << status_name(v.status);
        if (v.value)
            out << " value=" << *v.value;
        if (!v.basis.empty())
            out << " theorem=" << v.basis;
        out << '\n';
    }
    return exit_ok;
}

inline int run_construct(const QueryFlags& f, bool check, std::ostream& out, std::ostream& err)
{
    const ExtremalQuery q = make_query(f);
    const WitnessClaim w = build_witness(q);
    std::optional<CRProfile> solved;
    if (check)
        solved = solve(w.graph, SolverOptions{solver_cap_from_env(), 1});
    const bool agrees = !solved || (solved->cr == w.claimed_cr && solved->gamma_cr == w.claimed_gamma &&
                                    w.graph.edge_count() == w.claimed_edges);
    if (f.as_json) {
        json rec{{"cell", cell_text(q)},           {"graph6", to_graph6(w.graph)}, {"theorem", w.theorem_id},
                 {"n", w.graph.order()},           {"m", w.claimed_edges},         {"cr", w.claimed_cr},
                 {"gamma", w.claimed_gamma}};
        if (solved)
            rec["agree"] = agrees;
        out << rec.dump() << '\n';
    }
    else {
        out << to_graph6(w.graph) << '\n';
        out << "theorem=" << w.theorem_id << " n=" << w.graph.order() << " edges=" << w.claimed_edges
            << " cr=" << w.claimed_cr << " gamma=" << w.claimed_gamma;
        if (solved)
            out << " check=" << (agrees ? "pass" : "FAIL");
        out << '\n';
    }
    if (!agrees) {
        err << "crdom: construction " << w.theorem_id << " solves to cr=" << solved->cr
            << " gamma=" << solved->gamma_cr << '\n';
        return exit_mismatch;
    }
    return exit_ok;
}

struct OracleFlags {
    int n = 0;
    std::vector<int> m_edges;
    unsigned workers = 1;
    bool full_n8 = false;
    bool propositions = false;
    bool as_json = false;
};

inline int run_oracle(const OracleFlags& f, std::ostream& out)
{
    BruteOptions o;
    o.edge_counts = f.m_edges;
    o.workers = f.workers;
    o.allow_full_sweep = f.full_n8;
    o.check_propositions = f.propositions;
    const ProfileTable t = brute_table(f.n, o);
    if (f.as_json)
        write_table_json(out, t);
    else
        write_table(out, t);
    return exit_ok;
}

struct VerifyFlags {
    std::string theorem;
    int n_min = 0;
    int n_max = 0;
    std::string mode = "both";
    bool full_n8 = false;
    std::string report;
    unsigned workers = 1;
    bool as_json = false;
};

inline int run_verify(const VerifyFlags& f, std::ostream& out)
{
    const auto mode = parse_mode(f.mode);
    if (!mode)
        throw UsageError("--mode must be formula-vs-oracle, construction-vs-solver or both");
    VerifyOptions o;
    o.workers = f.workers;
    o.full_n8 = f.full_n8;
    o.solver_cap = solver_cap_from_env();
    const VerificationReport r = verify_theorem(f.theorem, f.n_min, f.n_max, *mode, o);
    if (f.as_json)
        write_report_json(out, r);
    else
        write_report(out, r);
    if (!f.report.empty()) {
        std::ofstream file{f.report};
        if (!file)
            throw UsageError("cannot open report file '" + f.report + "'");
        write_report_json(file, r);
    }
    return r.passed() ? exit_ok : exit_mismatch;
}

/// Entry point shared by main() and the tests.
inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Cardinality-redundance: exact solver, extremal formulas, constructions and verification"};
    app.require_subcommand(1);

    bool compute_json = false;
    unsigned compute_workers = 1;
    auto* compute = app.add_subcommand("compute", "Solve every graph6 line read from stdin");
    compute->add_flag("--json", compute_json, "One JSON record per input line");
    compute->add_option("--workers", compute_workers, "Threads per solve")->check(CLI::Range(1U, 1024U));

    auto add_query = [](CLI::App* sub, QueryFlags& f) {
        sub->add_option("--quantity", f.quantity, "M, m, D or d")->required();
        sub->add_option("--n", f.n, "Order")->required();
        sub->add_option("--k", f.k, "Cardinality-redundance")->required();
        auto* r = sub->add_option("--r", f.r, "gamma_CR (for M and m)");
        auto* m = sub->add_option("--m-edges", f.m_edges, "Edge count (for D and d)");
        r->excludes(m);
        sub->add_flag("--json", f.as_json, "JSON record");
    };
    QueryFlags construct_flags;
    bool construct_check = false;
    auto* construct = app.add_subcommand("construct", "Build the witness graph for an extremal cell");
    add_query(construct, construct_flags);
    construct->add_flag("--check", construct_check, "Solve the witness and compare with its claim");

    QueryFlags formula_flags;
    auto* formula = app.add_subcommand("formula", "Evaluate a closed-form extremal value");
    add_query(formula, formula_flags);

    OracleFlags oracle_flags;
    auto* oracle = app.add_subcommand("oracle", "Brute-force extremal table over labeled graphs");
    oracle->add_option("--n", oracle_flags.n, "Order")->required();
    oracle->add_option("--m-edges", oracle_flags.m_edges, "Restrict to these edge counts");
    oracle->add_option("--workers", oracle_flags.workers, "Threads")->check(CLI::Range(1U, 1024U));
    oracle->add_flag("--full-n8", oracle_flags.full_n8, "Allow the full sweep at order 8");
    oracle->add_flag("--propositions", oracle_flags.propositions, "Also tally proposition violations");
    oracle->add_flag("--json", oracle_flags.as_json, "JSON records");

    VerifyFlags verify_flags;
    auto* verify = app.add_subcommand("verify", "Check a theorem against the oracle and/or its constructions");
    verify->add_option("--theorem", verify_flags.theorem, "Theorem tag")->required();
    verify->add_option("--n-min", verify_flags.n_min, "Smallest order")->required();
    verify->add_option("--n-max", verify_flags.n_max, "Largest order")->required();
    verify->add_option("--mode", verify_flags.mode, "formula-vs-oracle, construction-vs-solver or both");
    verify->add_flag("--full-n8", verify_flags.full_n8, "Allow full sweeps at order 8");
    verify->add_option("--report", verify_flags.report, "Write a JSON-lines report to this file");
    verify->add_option("--workers", verify_flags.workers, "Threads")->check(CLI::Range(1U, 1024U));
    verify->add_flag("--json", verify_flags.as_json, "JSON-lines report on stdout");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? exit_ok : exit_input;
    }

    try {
        if (compute->parsed())
            return run_compute(compute_json, compute_workers, in, out, err);
        if (construct->parsed())
            return run_construct(construct_flags, construct_check, out, err);
        if (formula->parsed())
            return run_formula(formula_flags, out);
        if (oracle->parsed())
            return run_oracle(oracle_flags, out);
        if (verify->parsed())
            return run_verify(verify_flags, out);
    }
    catch (const Error& e) {
        return report_error(err, e);
    }
    return exit_input;
}

} // namespace crdom::cli
