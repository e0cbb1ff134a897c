#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "crdom/canonical.hpp"
#include "crdom/enumerate.hpp"
#include "crdom/formulas.hpp"
#include "crdom/parallel.hpp"
#include "crdom/propositions.hpp"
#include "crdom/solver.hpp"

namespace crdom {

// Brute-force extremal tables. Every labeled graph of order n (or every one
// with a chosen edge count) is solved, and the results are folded into
//   gamma cells (k, r): edge counts of graphs with CR = k, gamma_CR = r
//   size cells  (k, m): gamma_CR of graphs with CR = k and m edges.
// Witnesses are stored as edge masks; ties go to the smaller mask so the
// table does not depend on how the sweep was split.

struct OracleCell {
    std::uint64_t count = 0;
    int max = 0;
    int min = 0;
    EdgeMask max_witness = 0;
    EdgeMask min_witness = 0;

    bool exists() const noexcept { return count > 0; }

    void offer(int value, EdgeMask mask) noexcept
    {
        if (count++ == 0) {
            max = min = value;
            max_witness = min_witness = mask;
            return;
        }
        if (value > max || (value == max && mask < max_witness)) {
            max = value;
            max_witness = mask;
        }
        if (value < min || (value == min && mask < min_witness)) {
            min = value;
            min_witness = mask;
        }
    }

    void merge(const OracleCell& other) noexcept
    {
        if (other.count == 0)
            return;
        if (count == 0) {
            *this = other;
            return;
        }
        if (other.max > max || (other.max == max && other.max_witness < max_witness)) {
            max = other.max;
            max_witness = other.max_witness;
        }
        if (other.min < min || (other.min == min && other.min_witness < min_witness)) {
            min = other.min;
            min_witness = other.min_witness;
        }
        count += other.count;
    }

    friend bool operator==(const OracleCell&, const OracleCell&) = default;
};

/// An oracle answer for one extremal cell. `exists` is false when no graph
/// falls in the cell; the value is then 0.
struct OracleValue {
    bool exists = false;
    std::int64_t value = 0;
    EdgeMask witness = 0;
};

class ProfileTable {
public:
    explicit ProfileTable(int n)
        : n_{n}, pairs_{pair_count(n)},
          gamma_cells_(static_cast<std::size_t>((n + 1) * (n + 1))),
          size_cells_(static_cast<std::size_t>((n + 1) * (pairs_ + 1))),
          swept_(static_cast<std::size_t>(pairs_ + 1), false)
    {
    }

    int order() const noexcept { return n_; }
    int pairs() const noexcept { return pairs_; }
    std::uint64_t graphs() const noexcept { return graphs_; }

    /// Edges of graphs with CR = k and gamma_CR = r.
    const OracleCell& gamma_cell(int k, int r) const { return gamma_cells_.at(gamma_index(k, r)); }
    /// gamma_CR of graphs with CR = k and m edges.
    const OracleCell& size_cell(int k, int m) const { return size_cells_.at(size_index(k, m)); }

    bool swept(int m) const { return swept_.at(static_cast<std::size_t>(m)); }
    bool complete() const { return std::all_of(swept_.begin(), swept_.end(), [](bool b) { return b; }); }
    std::vector<int> swept_sizes() const
    {
        std::vector<int> out;
        for (int m = 0; m <= pairs_; ++m)
            if (swept(m))
                out.push_back(m);
        return out;
    }

    const PropositionTally& propositions() const noexcept { return props_; }
    bool propositions_checked() const noexcept { return props_checked_; }

    void record(const CRProfile& p, EdgeMask mask)
    {
        const int m = std::popcount(mask);
        gamma_cells_[gamma_index(p.cr, p.gamma_cr)].offer(m, mask);
        size_cells_[size_index(p.cr, m)].offer(p.gamma_cr, mask);
        ++graphs_;
    }

    PropositionTally& tally() noexcept { return props_; }
    void mark_propositions_checked() noexcept { props_checked_ = true; }
    void mark_swept(int m) { swept_.at(static_cast<std::size_t>(m)) = true; }

    /// Folds in a table built from graphs with larger edge masks.
    void merge(const ProfileTable& later)
    {
        if (later.n_ != n_)
            throw UsageError("cannot merge profile tables of different orders");
        for (std::size_t i = 0; i < gamma_cells_.size(); ++i)
            gamma_cells_[i].merge(later.gamma_cells_[i]);
        for (std::size_t i = 0; i < size_cells_.size(); ++i)
            size_cells_[i].merge(later.size_cells_[i]);
        for (std::size_t i = 0; i < swept_.size(); ++i)
            swept_[i] = swept_[i] || later.swept_[i];
        graphs_ += later.graphs_;
        props_.merge(later.props_);
        props_checked_ = props_checked_ || later.props_checked_;
    }

    /// The brute value of M/m/D/d at (k, third), or nothing when the sweep
    /// did not cover every graph the cell depends on.
    std::optional<OracleValue> lookup(Quantity q, int k, std::int64_t third) const
    {
        if (k < 0 || k > n_)
            return std::nullopt;
        if (indexed_by_gamma(q)) {
            if (third < 1 || third > n_ || !complete())
                return std::nullopt;
            const auto& c = gamma_cell(k, static_cast<int>(third));
            if (!c.exists())
                return OracleValue{};
            return q == Quantity::max_edges ? OracleValue{true, c.max, c.max_witness}
                                            : OracleValue{true, c.min, c.min_witness};
        }
        if (third < 0 || third > pairs_ || !swept(static_cast<int>(third)))
            return std::nullopt;
        const auto& c = size_cell(k, static_cast<int>(third));
        if (!c.exists())
            return OracleValue{};
        return q == Quantity::max_gamma ? OracleValue{true, c.max, c.max_witness}
                                        : OracleValue{true, c.min, c.min_witness};
    }

    friend bool operator==(const ProfileTable&, const ProfileTable&) = default;

private:
    std::size_t gamma_index(int k, int r) const
    {
        if (k < 0 || k > n_ || r < 0 || r > n_)
            throw UsageError("profile cell out of range");
        return static_cast<std::size_t>(k * (n_ + 1) + r);
    }
    std::size_t size_index(int k, int m) const
    {
        if (k < 0 || k > n_ || m < 0 || m > pairs_)
            throw UsageError("profile cell out of range");
        return static_cast<std::size_t>(k * (pairs_ + 1) + m);
    }

    int n_;
    int pairs_;
    std::vector<OracleCell> gamma_cells_;
    std::vector<OracleCell> size_cells_;
    std::vector<bool> swept_;
    std::uint64_t graphs_ = 0;
    PropositionTally props_;
    bool props_checked_ = false;
};

struct BruteOptions {
    std::vector<int> edge_counts;   ///< empty sweeps every graph
    unsigned workers = 1;
    bool allow_full_sweep = false;  ///< required for a full sweep at n = 8
    bool check_propositions = false;
};

namespace detail {

    inline ProfileTable sweep_range(const LabeledRange& range, std::uint64_t begin, std::uint64_t end,
                                    bool check_props)
    {
        const int n = range.order();
        ProfileTable table{n};
        SubsetSweep sweep;
        range.for_each(begin, end, [&](EdgeMask mask) {
            const Graph g = graph_from_edge_mask(n, mask);
            const CRProfile p = check_props ? check_propositions(g, sweep, table.tally()) : solve(g, sweep);
            table.record(p, mask);
        });
        return table;
    }

} // namespace detail

/// Exhaustive profile of order-n graphs. Identical for any worker count.
inline ProfileTable brute_table(int n, const BruteOptions& options = {})
{
    std::vector<std::optional<int>> slices;
    if (options.edge_counts.empty()) {
        slices.emplace_back(std::nullopt);
    }
    else {
        std::vector<int> sizes = options.edge_counts;
        std::sort(sizes.begin(), sizes.end());
        sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
        for (int m : sizes)
            slices.emplace_back(m);
    }

    ProfileTable table{n};
    for (const auto& slice : slices) {
        const LabeledRange range{n, slice, options.allow_full_sweep};
        auto parts = parallel_chunks(range.size(), options.workers, [&](std::uint64_t b, std::uint64_t e) {
            return detail::sweep_range(range, b, e, options.check_propositions);
        });
        for (const auto& part : parts)
            table.merge(part);
        if (slice) {
            table.mark_swept(*slice);
        }
        else {
            for (int m = 0; m <= range.pairs(); ++m)
                table.mark_swept(m);
        }
    }
    if (options.check_propositions)
        table.mark_propositions_checked();
    return table;
}

/// Canonical graph6 of a stored witness.
inline std::string witness_form(int n, EdgeMask mask) { return canonical_form(graph_from_edge_mask(n, mask)); }

/// Line-oriented dump of a table:
///   table n=<n> graphs=<count> swept=<all | m list>
///   gamma k=<k> r=<r> count=<c> max_edges=<v> min_edges=<v> max_witness=<g6> min_witness=<g6>
///   size k=<k> m=<m> count=<c> max_gamma=<v> min_gamma=<v> max_witness=<g6> min_witness=<g6>
///   propositions graphs=<count> violations=<count>
/// Only nonempty cells are listed; witnesses are canonical forms.
inline void write_table(std::ostream& out, const ProfileTable& t)
{
    const int n = t.order();
    out << "table n=" << n << " graphs=" << t.graphs() << " swept=";
    if (t.complete()) {
        out << "all";
    }
    else {
        const auto sizes = t.swept_sizes();
        for (std::size_t i = 0; i < sizes.size(); ++i)
            out << (i ? "," : "") << sizes[i];
    }
    out << '\n';
    if (t.complete()) {
        for (int k = 0; k <= n; ++k)
            for (int r = 1; r <= n; ++r) {
                const auto& c = t.gamma_cell(k, r);
                if (!c.exists())
                    continue;
                out << "gamma k=" << k << " r=" << r << " count=" << c.count << " max_edges=" << c.max
                    << " min_edges=" << c.min << " max_witness=" << witness_form(n, c.max_witness)
                    << " min_witness=" << witness_form(n, c.min_witness) << '\n';
            }
    }
    for (int k = 0; k <= n; ++k)
        for (int m = 0; m <= t.pairs(); ++m) {
            const auto& c = t.size_cell(k, m);
            if (!c.exists())
                continue;
            out << "size k=" << k << " m=" << m << " count=" << c.count << " max_gamma=" << c.max
                << " min_gamma=" << c.min << " max_witness=" << witness_form(n, c.max_witness)
                << " min_witness=" << witness_form(n, c.min_witness) << '\n';
        }
    if (t.propositions_checked())
        out << "propositions graphs=" << t.propositions().graphs << " violations=" << t.propositions().violations()
            << '\n';
}

} // namespace crdom
