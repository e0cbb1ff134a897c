#pragma once

#include <array>
#include <bit>
#include <bitset>
#include <cstdint>
#include <optional>
#include <string>

#include "crdom/graph6.hpp"
#include "crdom/solver.hpp"

namespace crdom {

// Structural facts every graph must satisfy, checked in one subset sweep:
//   minimalgamma  every gamma_CR-set is a minimal dominating set
//   gammabnd      minimal dominating S has |S| <= n - CR(S)
//   infbnd        dominating S has I(S) >= n + CR(S)
//   gammageq2     CR(G) >= 1 implies gamma_CR(G) >= 2
//   crbnd         CR(G) <= n - 2 for n >= 2, and <= n - 3 for odd n
//   prop1         CR(G) = 1 implies n >= 5 and gamma_CR(G) <= n - 3
//   cr2bnd        CR(G) = 2 and n >= 5 imply gamma_CR(G) <= n - 2
//   eventhm       for even n >= 4, CR(G) = n - 2 iff G is (n-2)-regular

struct PropositionTally {
    std::uint64_t graphs = 0;
    std::uint64_t minimalgamma = 0;
    std::uint64_t gammabnd = 0;
    std::uint64_t infbnd = 0;
    std::uint64_t gammageq2 = 0;
    std::uint64_t crbnd = 0;
    std::uint64_t prop1 = 0;
    std::uint64_t cr2bnd = 0;
    std::uint64_t eventhm = 0;
    std::optional<std::string> first_counterexample; ///< graph6 of the earliest violating graph

    std::uint64_t violations() const noexcept
    {
        return minimalgamma + gammabnd + infbnd + gammageq2 + crbnd + prop1 + cr2bnd + eventhm;
    }

    /// Folds in a tally of graphs visited after this one's.
    void merge(const PropositionTally& later)
    {
        graphs += later.graphs;
        minimalgamma += later.minimalgamma;
        gammabnd += later.gammabnd;
        infbnd += later.infbnd;
        gammageq2 += later.gammageq2;
        crbnd += later.crbnd;
        prop1 += later.prop1;
        cr2bnd += later.cr2bnd;
        eventhm += later.eventhm;
        if (!first_counterexample)
            first_counterexample = later.first_counterexample;
    }

    friend bool operator==(const PropositionTally&, const PropositionTally&) = default;
};

/// Solves g and records every violated proposition into `tally`.
inline CRProfile check_propositions(const Graph& g, SubsetSweep& sweep, PropositionTally& tally,
                                    const SolverOptions& options = {})
{
    detail::check_capacity(g, options);
    sweep.reset(g);
    const int n = g.order();
    const Mask all = g.universe();

    std::array<Mask, max_order> closed{};
    for (int v = 0; v < n; ++v)
        closed[static_cast<std::size_t>(v)] = g.row(v) | bit(v);

    detail::BestSets best;
    std::bitset<64 * 64> non_minimal_key;
    std::uint64_t gammabnd = 0;
    std::uint64_t infbnd = 0;
    sweep.run_all([&](Mask set, Mask once, Mask twice, int influence) {
        if (once != all)
            return;
        const int cr = std::popcount(twice);
        const int size = std::popcount(set);
        const unsigned key = detail::profile_key(cr, size);
        best.offer(key, set);
        if (influence < n + cr)
            ++infbnd;
        const Mask exactly_once = once & ~twice;
        bool minimal = exactly_once != 0;
        for (Mask rest = set; minimal && rest != 0; rest &= rest - 1)
            minimal = (closed[static_cast<std::size_t>(std::countr_zero(rest))] & exactly_once) != 0;
        if (minimal) {
            if (size > n - cr)
                ++gammabnd;
        }
        else {
            non_minimal_key.set(key);
        }
    });
    const CRProfile p = detail::to_profile(best);

    const std::uint64_t before = tally.violations();
    ++tally.graphs;
    tally.gammabnd += gammabnd;
    tally.infbnd += infbnd;
    if (non_minimal_key.test(best.key))
        ++tally.minimalgamma;
    if (p.cr >= 1 && p.gamma_cr < 2)
        ++tally.gammageq2;
    if (n >= 2 && (p.cr > n - 2 || (n % 2 == 1 && p.cr > n - 3)))
        ++tally.crbnd;
    if (p.cr == 1 && (n < 5 || p.gamma_cr > n - 3))
        ++tally.prop1;
    if (p.cr == 2 && n >= 5 && p.gamma_cr > n - 2)
        ++tally.cr2bnd;
    if (n >= 4 && n % 2 == 0) {
        bool regular = true;
        for (int v = 0; v < n && regular; ++v)
            regular = g.degree(v) == n - 2;
        if ((p.cr == n - 2) != regular)
            ++tally.eventhm;
    }
    if (tally.violations() != before && !tally.first_counterexample)
        tally.first_counterexample = to_graph6(g);
    return p;
}

} // namespace crdom
