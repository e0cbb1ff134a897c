#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "crdom/constructions.hpp"
#include "crdom/formulas.hpp"
#include "crdom/oracle.hpp"

namespace crdom {

// Theorem verification: closed forms against the brute-force oracle, witness
// constructions against the solver, and the structural statements checked
// graph by graph. Each theorem is addressed by a short tag (see
// theorem_tags()).

enum class VerifyMode { formula_vs_oracle, construction_vs_solver, both };

constexpr std::string_view mode_name(VerifyMode m) noexcept
{
    switch (m) {
    case VerifyMode::formula_vs_oracle: return "formula-vs-oracle";
    case VerifyMode::construction_vs_solver: return "construction-vs-solver";
    case VerifyMode::both: return "both";
    }
    return "?";
}

inline std::optional<VerifyMode> parse_mode(std::string_view s) noexcept
{
    for (auto m : {VerifyMode::formula_vs_oracle, VerifyMode::construction_vs_solver, VerifyMode::both})
        if (s == mode_name(m))
            return m;
    return std::nullopt;
}

/// "=" for exact values, "<=" when the formula is only an upper bound.
enum class Relation { equal, at_most };

struct CellResult {
    std::string cell;
    std::optional<std::int64_t> formula;
    std::string status;   ///< formula status name, or "Count" for structural cells
    std::string basis;
    std::optional<std::int64_t> oracle;
    std::optional<std::int64_t> construction;
    Relation relation = Relation::equal;
    bool agree = true;
    std::string note;
    std::vector<std::string> counterexamples; ///< graph6 lines
};

struct VerificationReport {
    std::string theorem_id;
    int n_min = 0;
    int n_max = 0;
    VerifyMode mode = VerifyMode::both;
    std::vector<CellResult> cells;
    std::vector<std::string> skipped;

    std::size_t disagreements() const
    {
        return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](const auto& c) { return !c.agree; }));
    }
    bool passed() const { return !cells.empty() && disagreements() == 0; }
};

struct VerifyOptions {
    unsigned workers = 1;
    bool full_n8 = false;
    int solver_cap = default_solver_cap;
};

/// Every accepted tag, in a stable order.
inline const std::vector<std::string_view>& theorem_tags()
{
    static const std::vector<std::string_view> tags = {
        "Mn0r", "mn0r", "Dn0m", "dn0m", "Mn1r", "mn1r", "Dn1r", "dn1m", "Mnk2", "Mnkr", "bbnd", "Mn2r",
        "dn2msmall", "dn2mlarge", "eventhm", "4cycle", "2lem", "minimalgamma", "gammabnd", "infbnd",
        "gammageq2", "crbnd", "prop1", "cr2bnd"};
    return tags;
}

/// Canonical tag for `s`, accepting the functional spellings such as "M(n,0,r)".
inline std::optional<std::string_view> resolve_tag(std::string_view s) noexcept
{
    static constexpr std::pair<std::string_view, std::string_view> aliases[] = {
        {"M(n,0,r)", "Mn0r"}, {"m(n,0,r)", "mn0r"}, {"D(n,0,m)", "Dn0m"}, {"d(n,0,m)", "dn0m"},
        {"M(n,1,r)", "Mn1r"}, {"m(n,1,r)", "mn1r"}, {"D(n,1,m)", "Dn1r"}, {"d(n,1,m)", "dn1m"},
        {"M(n,k,2)", "Mnk2"}, {"M(n,2,r)", "Mn2r"}};
    for (auto [alias, tag] : aliases)
        if (s == alias)
            return tag;
    for (auto tag : theorem_tags())
        if (s == tag)
            return tag;
    return std::nullopt;
}

class Verifier {
public:
    explicit Verifier(VerifyOptions options = {}) : options_{options} {}

    VerificationReport verify(std::string_view tag_text, int n_min, int n_max, VerifyMode mode)
    {
        const auto tag = resolve_tag(tag_text);
        if (!tag)
            throw UsageError("unknown theorem tag '" + std::string{tag_text} + "'");
        if (n_min < 1 || n_max < n_min)
            throw UsageError("order range must satisfy 1 <= n-min <= n-max");
        if (n_max > max_order)
            throw CapacityError("order " + std::to_string(n_max) + " exceeds " + std::to_string(max_order));

        VerificationReport report;
        report.theorem_id = std::string{*tag};
        report.n_min = n_min;
        report.n_max = n_max;
        report.mode = mode;
        for (int n = n_min; n <= n_max; ++n)
            verify_order(*tag, n, mode, report);
        if (report.cells.empty() && !report.skipped.empty())
            throw CapacityError("every cell of " + report.theorem_id + " was skipped: " + report.skipped.front());
        return report;
    }

    /// Full (or, at n = 8, sliced) table for order n, built once.
    const ProfileTable& full_table(int n)
    {
        auto it = full_.find(n);
        if (it == full_.end()) {
            BruteOptions o;
            o.workers = options_.workers;
            o.allow_full_sweep = options_.full_n8;
            o.check_propositions = true;
            it = full_.emplace(n, brute_table(n, o)).first;
        }
        return it->second;
    }

    const ProfileTable& slice_table(int n, int m)
    {
        const auto key = std::make_pair(n, m);
        auto it = slices_.find(key);
        if (it == slices_.end()) {
            BruteOptions o;
            o.workers = options_.workers;
            o.edge_counts = {m};
            it = slices_.emplace(key, brute_table(n, o)).first;
        }
        return it->second;
    }

private:
    static constexpr int slice_edge_limit = 9;

    bool full_sweep_allowed(int n) const
    {
        return n <= default_full_sweep_order || (n == max_enumeration_order && options_.full_n8);
    }

    bool slice_allowed(int n, std::int64_t m) const
    {
        return full_sweep_allowed(n) || (n == max_enumeration_order && m <= slice_edge_limit);
    }

    std::optional<OracleValue> oracle_value(const ExtremalQuery& q)
    {
        if (indexed_by_gamma(q.quantity))
            return full_sweep_allowed(q.n) ? full_table(q.n).lookup(q.quantity, q.k, q.third) : std::nullopt;
        if (!slice_allowed(q.n, q.third))
            return std::nullopt;
        if (full_sweep_allowed(q.n))
            return full_table(q.n).lookup(q.quantity, q.k, q.third);
        return slice_table(q.n, static_cast<int>(q.third)).lookup(q.quantity, q.k, q.third);
    }

    static std::string cell_name(const ExtremalQuery& q)
    {
        return std::string{quantity_symbol(q.quantity)} + "(" + std::to_string(q.n) + "," + std::to_string(q.k) +
               "," + std::to_string(q.third) + ")";
    }

    /// Formula cells of a closed-form tag at order n (covered cells only).
    static std::vector<ExtremalQuery> formula_cells(std::string_view tag, int n)
    {
        std::vector<ExtremalQuery> out;
        const auto pairs = choose2(n);
        auto add = [&](Quantity q, int k, std::int64_t third) {
            if (k < 0 || k > n)
                return;
            if (evaluate({q, n, k, third}).covered())
                out.push_back({q, n, k, third});
        };
        if (n < 2)
            return out;
        if (tag == "Mn0r" || tag == "mn0r")
            for (int r = 1; r <= n - 1; ++r)
                add(tag == "Mn0r" ? Quantity::max_edges : Quantity::min_edges, 0, r);
        // D(n,0,0) = n is an extension outside the theorem, so its sweep starts at m = 1.
        if (tag == "Dn0m" || tag == "dn0m")
            for (std::int64_t m = tag == "Dn0m" ? 1 : 0; m <= pairs; ++m)
                add(tag == "Dn0m" ? Quantity::max_gamma : Quantity::min_gamma, 0, m);
        if (tag == "Mn1r" || tag == "mn1r")
            for (int r = 1; r <= n; ++r)
                add(tag == "Mn1r" ? Quantity::max_edges : Quantity::min_edges, 1, r);
        if (tag == "Dn1r" || tag == "dn1m")
            for (std::int64_t m = 0; m <= pairs; ++m)
                add(tag == "Dn1r" ? Quantity::max_gamma : Quantity::min_gamma, 1, m);
        if (tag == "Mnk2" && n >= 5)
            for (int k = 2; k <= max_cr(n); ++k)
                add(Quantity::max_edges, k, 2);
        if (tag == "Mn2r" && n >= 5)
            for (int r = 2; r <= n; ++r)
                add(Quantity::max_edges, 2, r);
        if ((tag == "dn2msmall" || tag == "dn2mlarge") && n >= 8) {
            const std::int64_t split = 2 * (n - 6) + 10;
            for (std::int64_t m = 0; m <= pairs; ++m)
                if ((tag == "dn2msmall") == (m <= split))
                    add(Quantity::max_gamma, 2, m);
        }
        return out;
    }

    static bool is_formula_tag(std::string_view tag)
    {
        for (auto t : {"Mn0r", "mn0r", "Dn0m", "dn0m", "Mn1r", "mn1r", "Dn1r", "dn1m", "Mnk2", "Mn2r", "dn2msmall",
                       "dn2mlarge"})
            if (tag == t)
                return true;
        return false;
    }

    static bool is_proposition_tag(std::string_view tag)
    {
        for (auto t : {"minimalgamma", "gammabnd", "infbnd", "gammageq2", "crbnd", "prop1", "cr2bnd"})
            if (tag == t)
                return true;
        return false;
    }

    void verify_order(std::string_view tag, int n, VerifyMode mode, VerificationReport& report)
    {
        const bool want_oracle = mode != VerifyMode::construction_vs_solver;
        const bool want_construction = mode != VerifyMode::formula_vs_oracle;

        if (is_formula_tag(tag)) {
            for (const auto& q : formula_cells(tag, n))
                formula_cell(q, want_oracle, want_construction, report);
            return;
        }
        if (tag == "Mnkr") {
            if (n < 5)
                return;
            if (!full_sweep_allowed(n)) {
                report.skipped.push_back("Mnkr n=" + std::to_string(n) + ": oracle needs a full sweep");
                return;
            }
            for (int k = 0; k <= max_cr(n); ++k)
                for (int r = 2; r <= n; ++r)
                    bound_cell({Quantity::max_edges, n, k, r}, universal_max_edges(n, k), report);
            return;
        }
        if (tag == "bbnd") {
            bbnd_cells(n, report);
            return;
        }
        if (tag == "eventhm") {
            if (want_construction && n >= 4 && n % 2 == 0)
                named_cell(NamedGraph::cocktail_party, n, report);
            if (want_oracle)
                eventhm_cell(n, report);
            return;
        }
        if (tag == "4cycle") {
            if (want_construction && n >= 4)
                named_cell(NamedGraph::four_cycle, n, report);
            if (want_oracle)
                four_cycle_cell(n, report);
            return;
        }
        if (tag == "2lem") {
            two_lemma_cell(n, report);
            return;
        }
        if (is_proposition_tag(tag))
            proposition_cell(tag, n, report);
    }

    void formula_cell(const ExtremalQuery& q, bool want_oracle, bool want_construction, VerificationReport& report)
    {
        const ExtremalValue f = evaluate(q);
        CellResult c;
        c.cell = cell_name(q);
        c.formula = f.value;
        c.status = std::string{status_name(f.status)};
        c.basis = std::string{f.basis};

        bool checked = false;
        if (want_oracle) {
            if (const auto o = oracle_value(q)) {
                checked = true;
                c.oracle = o->value;
                if (o->value != *f.value) {
                    c.agree = false;
                    if (o->exists)
                        c.counterexamples.push_back(witness_form(q.n, o->witness));
                    c.note = o->exists ? "oracle witness attains " + std::to_string(o->value)
                                       : "oracle finds no graph in this cell";
                }
            }
            else {
                report.skipped.push_back(c.cell + ": outside the oracle's sweep");
            }
        }
        if (want_construction && f.status == ValueStatus::value) {
            if (q.n > options_.solver_cap) {
                report.skipped.push_back(c.cell + ": construction above the solver cap");
            }
            else {
                checked = true;
                construction_check(q, c);
            }
        }
        if (checked)
            report.cells.push_back(std::move(c));
    }

    void construction_check(const ExtremalQuery& q, CellResult& c)
    {
        std::optional<WitnessClaim> built;
        try {
            built = build_witness(q);
        }
        catch (const ConstructionUnavailable& e) {
            c.agree = false;
            c.note = append_note(c.note, e.what());
            return;
        }
        const WitnessClaim& w = *built;
        const CRProfile p = solve(w.graph, SolverOptions{options_.solver_cap, 1});
        const int edges = w.graph.edge_count();
        const std::int64_t measured = indexed_by_gamma(q.quantity) ? edges : p.gamma_cr;
        c.construction = measured;
        const bool claim_ok = p.cr == w.claimed_cr && p.gamma_cr == w.claimed_gamma && edges == w.claimed_edges;
        const bool cell_ok = p.cr == q.k && (indexed_by_gamma(q.quantity) ? p.gamma_cr == q.third : edges == q.third);
        if (!claim_ok || !cell_ok || measured != *c.formula) {
            c.agree = false;
            c.counterexamples.push_back(to_graph6(w.graph));
            c.note = append_note(c.note, w.theorem_id + " construction solves to cr=" + std::to_string(p.cr) +
                                             " gamma=" + std::to_string(p.gamma_cr) +
                                             " edges=" + std::to_string(edges));
        }
    }

    void bound_cell(const ExtremalQuery& q, std::int64_t bound, VerificationReport& report)
    {
        const auto o = full_table(q.n).lookup(q.quantity, q.k, q.third);
        CellResult c;
        c.cell = cell_name(q);
        c.formula = bound;
        c.status = "Bound";
        c.basis = "Mnkr";
        c.relation = Relation::at_most;
        c.oracle = o->value;
        if (o->value > bound) {
            c.agree = false;
            c.counterexamples.push_back(witness_form(q.n, o->witness));
        }
        report.cells.push_back(std::move(c));
    }

    /// For CR = k >= 2 and gamma_CR = r >= 3, every gamma_CR-set with b <= k
    /// non-isolated members in its induced subgraph bounds |E| by
    /// bbnd_upper_bound(n, k, r, b). One cell per (k, r, b) seen.
    void bbnd_cells(int n, VerificationReport& report)
    {
        if (n < 5)
            return;
        if (!full_sweep_allowed(n)) {
            report.skipped.push_back("bbnd n=" + std::to_string(n) + ": needs a full sweep");
            return;
        }
        struct Seen {
            int max_edges = -1;
            EdgeMask witness = 0;
        };
        std::map<std::tuple<int, int, int>, Seen> seen;
        SubsetSweep sweep;
        const LabeledRange range{n, std::nullopt, options_.full_n8};
        range.for_each(0, range.size(), [&](EdgeMask mask) {
            const Graph g = graph_from_edge_mask(n, mask);
            const CRProfile p = solve(g, sweep);
            if (p.cr < 2 || p.gamma_cr < 3)
                return;
            const int edges = std::popcount(mask);
            for (const VertexSet s : enumerate_gamma_cr_sets(g, sweep)) {
                int b = 0;
                for (int v : s.members())
                    b += (g.row(v) & s.bits()) != 0 ? 1 : 0;
                if (b > p.cr)
                    continue;
                auto& cell = seen[{p.cr, p.gamma_cr, b}];
                if (edges > cell.max_edges) {
                    cell.max_edges = edges;
                    cell.witness = mask;
                }
            }
        });
        for (const auto& [key, s] : seen) {
            const auto [k, r, b] = key;
            CellResult c;
            c.cell = "bbnd(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(r) + ",b=" +
                     std::to_string(b) + ")";
            c.formula = bbnd_upper_bound(n, k, r, b);
            c.status = "Bound";
            c.basis = "bbnd";
            c.relation = Relation::at_most;
            c.oracle = s.max_edges;
            if (s.max_edges > *c.formula) {
                c.agree = false;
                c.counterexamples.push_back(witness_form(n, s.witness));
            }
            report.cells.push_back(std::move(c));
        }
        if (seen.empty())
            report.skipped.push_back("bbnd n=" + std::to_string(n) + ": no graph with CR >= 2 and gamma_CR >= 3");
    }

    void named_cell(NamedGraph name, int n, VerificationReport& report)
    {
        if (n > options_.solver_cap) {
            report.skipped.push_back("named construction above the solver cap at n=" + std::to_string(n));
            return;
        }
        const WitnessClaim w = build_named(name, n);
        const CRProfile p = solve(w.graph, SolverOptions{options_.solver_cap, 1});
        CellResult c;
        c.cell = w.theorem_id + "(" + std::to_string(n) + ")";
        c.formula = w.claimed_gamma;
        c.status = "Claim";
        c.basis = w.theorem_id;
        c.construction = p.gamma_cr;
        if (p.cr != w.claimed_cr || p.gamma_cr != w.claimed_gamma || w.graph.edge_count() != w.claimed_edges) {
            c.agree = false;
            c.counterexamples.push_back(to_graph6(w.graph));
            c.note = "solves to cr=" + std::to_string(p.cr) + " gamma=" + std::to_string(p.gamma_cr);
        }
        report.cells.push_back(std::move(c));
    }

    /// Visits every labeled graph of order n with its profile, or records a skip.
    template <typename Visit>
    bool sweep_graphs(std::string_view what, int n, VerificationReport& report, Visit&& visit)
    {
        if (!full_sweep_allowed(n)) {
            report.skipped.push_back(std::string{what} + " n=" + std::to_string(n) + ": needs a full sweep");
            return false;
        }
        SubsetSweep sweep;
        const LabeledRange range{n, std::nullopt, options_.full_n8};
        range.for_each(0, range.size(), [&](EdgeMask mask) {
            const Graph g = graph_from_edge_mask(n, mask);
            visit(g, mask, solve(g, sweep), sweep);
        });
        return true;
    }

    static std::int64_t double_factorial_odd(int n)
    {
        std::int64_t v = 1;
        for (int i = n - 1; i > 1; i -= 2)
            v *= i;
        return v;
    }

    void eventhm_cell(int n, VerificationReport& report)
    {
        if (n < 4 || n % 2 != 0)
            return;
        std::int64_t count = 0;
        std::vector<std::string> bad;
        const bool ran = sweep_graphs("eventhm", n, report, [&](const Graph& g, EdgeMask, const CRProfile& p, auto&) {
            bool regular = true;
            for (int v = 0; v < n && regular; ++v)
                regular = g.degree(v) == n - 2;
            if (p.cr == n - 2)
                ++count;
            if ((p.cr == n - 2) != regular && bad.size() < 5)
                bad.push_back(to_graph6(g));
        });
        if (!ran)
            return;
        CellResult c;
        c.cell = "eventhm(" + std::to_string(n) + ")";
        c.formula = double_factorial_odd(n);
        c.status = "Count";
        c.basis = "eventhm";
        c.oracle = count;
        c.note = "labeled graphs with CR = n-2 against (n-2)-regular graphs";
        c.counterexamples = bad;
        c.agree = bad.empty() && count == *c.formula;
        report.cells.push_back(std::move(c));
    }

    void four_cycle_cell(int n, VerificationReport& report)
    {
        if (n < 4)
            return;
        const std::string c4 = canonical_form(with_isolated(cycle_graph(4), n - 4));
        std::int64_t count = 0;
        std::vector<std::string> bad;
        const bool ran = sweep_graphs("4cycle", n, report, [&](const Graph& g, EdgeMask, const CRProfile& p, auto&) {
            const bool qualifies = p.cr == 2 && p.gamma_cr == n - 2;
            const bool is_c4 = g.edge_count() == 4 && canonical_form(g) == c4;
            if (qualifies)
                ++count;
            if (qualifies != is_c4 && bad.size() < 5)
                bad.push_back(to_graph6(g));
        });
        if (!ran)
            return;
        CellResult c;
        c.cell = "4cycle(" + std::to_string(n) + ")";
        c.formula = 3 * static_cast<std::int64_t>(detail::binomial(n, 4));
        c.status = "Count";
        c.basis = "4cycle";
        c.oracle = count;
        c.note = "labeled graphs with CR = 2 and gamma_CR = n-2 against labeled C4 plus isolated vertices";
        c.counterexamples = bad;
        c.agree = bad.empty() && count == *c.formula;
        report.cells.push_back(std::move(c));
    }

    void two_lemma_cell(int n, VerificationReport& report)
    {
        if (n < 5)
            return;
        std::int64_t graphs = 0;
        std::int64_t sets = 0;
        std::int64_t failures = 0;
        std::vector<std::string> bad;
        const bool ran =
            sweep_graphs("2lem", n, report, [&](const Graph& g, EdgeMask, const CRProfile& p, SubsetSweep& sweep) {
                if (p.cr != 2 || p.gamma_cr != n - 3)
                    return;
                ++graphs;
                for (const VertexSet s : enumerate_gamma_cr_sets(g, sweep)) {
                    ++sets;
                    const VertexSet a = assess_set(g, s).overdominated;
                    if ((closed_neighborhood(g, a) & s).size() != 2) {
                        ++failures;
                        if (bad.size() < 5)
                            bad.push_back(to_graph6(g));
                    }
                }
            });
        if (!ran)
            return;
        CellResult c;
        c.cell = "2lem(" + std::to_string(n) + ")";
        c.formula = 0;
        c.status = "Count";
        c.basis = "2lem";
        c.oracle = failures;
        c.note = std::to_string(graphs) + " qualifying graphs, " + std::to_string(sets) +
                 " gamma_CR-sets; value counts sets with |N[A] n S| != 2";
        c.counterexamples = bad;
        c.agree = failures == 0;
        report.cells.push_back(std::move(c));
    }

    void proposition_cell(std::string_view tag, int n, VerificationReport& report)
    {
        if (!full_sweep_allowed(n)) {
            report.skipped.push_back(std::string{tag} + " n=" + std::to_string(n) + ": needs a full sweep");
            return;
        }
        const PropositionTally& t = full_table(n).propositions();
        const std::map<std::string_view, std::uint64_t> counts = {
            {"minimalgamma", t.minimalgamma}, {"gammabnd", t.gammabnd}, {"infbnd", t.infbnd},
            {"gammageq2", t.gammageq2},       {"crbnd", t.crbnd},       {"prop1", t.prop1},
            {"cr2bnd", t.cr2bnd}};
        CellResult c;
        c.cell = std::string{tag} + "(" + std::to_string(n) + ")";
        c.formula = 0;
        c.status = "Count";
        c.basis = std::string{tag};
        c.oracle = static_cast<std::int64_t>(counts.at(tag));
        c.note = "violations over " + std::to_string(t.graphs) + " labeled graphs";
        c.agree = *c.oracle == 0;
        if (!c.agree && t.first_counterexample)
            c.counterexamples.push_back(*t.first_counterexample);
        report.cells.push_back(std::move(c));
    }

    static std::string append_note(const std::string& a, const std::string& b) { return a.empty() ? b : a + "; " + b; }

    VerifyOptions options_;
    std::map<int, ProfileTable> full_;
    std::map<std::pair<int, int>, ProfileTable> slices_;
};

inline VerificationReport verify_theorem(std::string_view tag, int n_min, int n_max, VerifyMode mode,
                                         const VerifyOptions& options = {})
{
    Verifier v{options};
    return v.verify(tag, n_min, n_max, mode);
}

inline std::string_view relation_symbol(Relation r) noexcept { return r == Relation::equal ? "=" : "<="; }

/// Human-readable report: one line per cell, then skips and a summary.
inline void write_report(std::ostream& out, const VerificationReport& r)
{
    auto opt = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string{"-"}; };
    out << "theorem " << r.theorem_id << " n=" << r.n_min << ".." << r.n_max << " mode=" << mode_name(r.mode) << '\n';
    for (const auto& c : r.cells) {
        out << (c.agree ? "  ok   " : "  FAIL ") << c.cell << " formula" << relation_symbol(c.relation) << opt(c.formula)
            << " (" << c.status << (c.basis.empty() ? "" : " " + c.basis) << ") oracle=" << opt(c.oracle)
            << " construction=" << opt(c.construction);
        if (!c.note.empty())
            out << "  # " << c.note;
        out << '\n';
        for (const auto& g : c.counterexamples)
            out << "       counterexample " << g << '\n';
    }
    for (const auto& s : r.skipped)
        out << "  skipped " << s << '\n';
    out << "summary cells=" << r.cells.size() << " disagreements=" << r.disagreements()
        << " skipped=" << r.skipped.size() << ' ' << (r.passed() ? "PASS" : "FAIL") << '\n';
}

} // namespace crdom
