#pragma once

#include <bit>
#include <charconv>
#include <climits>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "crdom/error.hpp"
#include "crdom/graph.hpp"
#include "crdom/parallel.hpp"

namespace crdom {

// Exact cardinality-redundance by sweeping all 2^n vertex subsets.
//
// For a set S, "once" is N[S] and "twice" is the set of vertices u with
// |N[u] ∩ S| >= 2. S dominates iff once is the whole vertex set, and
// CR(S) = |twice|. Both masks are tabulated for every subset of a low block
// (up to 12 vertices) and of the remaining high block, then combined per
// subset as once = oL | oH, twice = tL | tH | (oL & oH).

inline constexpr int default_solver_cap = 24;
inline constexpr int max_solver_cap = 32;
inline constexpr const char* solver_cap_env = "CRDOM_SOLVER_CAP";

/// Solver cap from CRDOM_SOLVER_CAP, or the default when unset.
inline int solver_cap_from_env()
{
    const char* raw = std::getenv(solver_cap_env);
    if (raw == nullptr || *raw == '\0')
        return default_solver_cap;
    const std::string_view text{raw};
    int cap = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
    if (ec != std::errc{} || end != text.data() + text.size() || cap < 1 || cap > max_solver_cap)
        throw UsageError(std::string{solver_cap_env} + " must be an integer in [1, " +
                         std::to_string(max_solver_cap) + "], got '" + std::string{text} + "'");
    return cap;
}

struct SolverOptions {
    int cap = default_solver_cap;
    unsigned workers = 1;
};

/// Everything the definitions say about one vertex set.
struct SetAssessment {
    bool dominating = false;
    int cr_of_set = 0;       ///< |overdominated|, reported for non-dominating sets too
    int influence = 0;       ///< sum over members of |N[v]|
    VertexSet overdominated; ///< vertices u with |N[u] ∩ S| >= 2
    bool minimal = false;    ///< dominating and every member has a private neighbour
};

/// CR(G), gamma_CR(G), the least-bitmask gamma_CR-set and the number of
/// gamma_CR-sets.
struct CRProfile {
    int cr = 0;
    int gamma_cr = 0;
    VertexSet witness;
    std::uint64_t gamma_set_count = 0;

    friend bool operator==(const CRProfile&, const CRProfile&) = default;
};

inline SetAssessment assess_set(const Graph& g, VertexSet s)
{
    if (!s.subset_of(g.vertices()))
        throw UsageError("vertex set " + s.to_string() + " is not contained in the graph");
    Mask once = 0;
    Mask twice = 0;
    int influence = 0;
    for (Mask rest = s.bits(); rest != 0; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        const Mask closed = g.row(v) | bit(v);
        twice |= once & closed;
        once |= closed;
        influence += std::popcount(closed);
    }
    SetAssessment out;
    out.dominating = once == g.universe();
    out.overdominated = VertexSet{twice};
    out.cr_of_set = std::popcount(twice);
    out.influence = influence;
    if (out.dominating) {
        const Mask exactly_once = once & ~twice;
        out.minimal = true;
        for (Mask rest = s.bits(); rest != 0; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            if (((g.row(v) | bit(v)) & exactly_once) == 0) {
                out.minimal = false;
                break;
            }
        }
    }
    return out;
}

/// Reusable cover tables for one graph. Keeps its buffers across reset()
/// calls so sweeps over millions of graphs do not allocate.
class SubsetSweep {
public:
    static constexpr int low_block_bits = 12;

    SubsetSweep() = default;
    explicit SubsetSweep(const Graph& g) { reset(g); }

    void reset(const Graph& g)
    {
        order_ = g.order();
        universe_ = g.universe();
        low_bits_ = order_ < low_block_bits ? order_ : low_block_bits;
        high_bits_ = order_ - low_bits_;
        fill(g, 0, low_bits_, low_once_, low_twice_, low_influence_);
        fill(g, low_bits_, high_bits_, high_once_, high_twice_, high_influence_);
    }

    int order() const noexcept { return order_; }
    Mask universe() const noexcept { return universe_; }
    std::uint64_t high_count() const noexcept { return std::uint64_t{1} << high_bits_; }

    /// Calls visit(set, once, twice, influence) for every subset whose high
    /// block index lies in [high_begin, high_end), in increasing set order.
    template <typename Visit>
    void run(std::uint64_t high_begin, std::uint64_t high_end, Visit&& visit) const
    {
        const std::size_t low_count = std::size_t{1} << low_bits_;
        const Mask* lo = low_once_.data();
        const Mask* lt = low_twice_.data();
        const int* li = low_influence_.data();
        for (std::uint64_t h = high_begin; h < high_end; ++h) {
            const Mask ho = high_once_[h];
            const Mask ht = high_twice_[h];
            const int hi = high_influence_[h];
            const Mask hs = static_cast<Mask>(h) << low_bits_;
            for (std::size_t l = 0; l < low_count; ++l) {
                const Mask o = lo[l];
                visit(hs | l, o | ho, lt[l] | ht | (o & ho), li[l] + hi);
            }
        }
    }

    template <typename Visit>
    void run_all(Visit&& visit) const
    {
        run(0, high_count(), visit);
    }

private:
    static void fill(const Graph& g, int first, int count, std::vector<Mask>& once, std::vector<Mask>& twice,
                     std::vector<int>& influence)
    {
        const std::size_t size = std::size_t{1} << count;
        once.resize(size);
        twice.resize(size);
        influence.resize(size);
        once[0] = 0;
        twice[0] = 0;
        influence[0] = 0;
        for (std::size_t s = 1; s < size; ++s) {
            const int low = std::countr_zero(s);
            const std::size_t prev = s & (s - 1);
            const int v = first + low;
            const Mask closed = g.row(v) | bit(v);
            once[s] = once[prev] | closed;
            twice[s] = twice[prev] | (once[prev] & closed);
            influence[s] = influence[prev] + std::popcount(closed);
        }
    }

    int order_ = 0;
    Mask universe_ = 0;
    int low_bits_ = 0;
    int high_bits_ = 0;
    std::vector<Mask> low_once_, low_twice_, high_once_, high_twice_;
    std::vector<int> low_influence_, high_influence_;
};

namespace detail {

    /// Ordering key (cr, |S|); smaller is better. |S| < 64 always.
    constexpr unsigned profile_key(int cr, int size) noexcept
    {
        return static_cast<unsigned>(cr) * 64U + static_cast<unsigned>(size);
    }

    /// Running minimum over dominating sets, keyed by (cr, size, mask).
    struct BestSets {
        unsigned key = UINT_MAX;
        Mask witness = 0;
        std::uint64_t count = 0;

        void offer(unsigned k, Mask set) noexcept
        {
            if (k < key) {
                key = k;
                witness = set;
                count = 1;
            }
            else if (k == key) {
                ++count;
            }
        }

        /// Folds in a chunk covering strictly larger masks.
        void absorb(const BestSets& later) noexcept
        {
            if (later.key < key) {
                *this = later;
            }
            else if (later.key == key) {
                count += later.count;
            }
        }
    };

    inline void check_capacity(const Graph& g, const SolverOptions& options)
    {
        if (options.cap < 1 || options.cap > max_solver_cap)
            throw UsageError("solver cap must lie in [1, " + std::to_string(max_solver_cap) + "]");
        if (g.order() > options.cap)
            throw CapacityError("graph order " + std::to_string(g.order()) + " exceeds the solver cap " +
                                std::to_string(options.cap));
    }

    inline BestSets scan(const SubsetSweep& sweep, std::uint64_t begin, std::uint64_t end)
    {
        BestSets best;
        const Mask all = sweep.universe();
        sweep.run(begin, end, [&](Mask set, Mask once, Mask twice, int) {
            if (once == all)
                best.offer(profile_key(std::popcount(twice), std::popcount(set)), set);
        });
        return best;
    }

    inline CRProfile to_profile(const BestSets& best)
    {
        CRProfile p;
        p.cr = static_cast<int>(best.key / 64U);
        p.gamma_cr = static_cast<int>(best.key % 64U);
        p.witness = VertexSet{best.witness};
        p.gamma_set_count = best.count;
        return p;
    }

} // namespace detail

/// Exact CR(G) and gamma_CR(G), reusing `sweep`'s buffers.
inline CRProfile solve(const Graph& g, SubsetSweep& sweep, const SolverOptions& options = {})
{
    detail::check_capacity(g, options);
    sweep.reset(g);
    if (options.workers <= 1 || sweep.high_count() == 1)
        return detail::to_profile(detail::scan(sweep, 0, sweep.high_count()));

    auto chunks = parallel_chunks(sweep.high_count(), options.workers,
                                  [&](std::uint64_t b, std::uint64_t e) { return detail::scan(sweep, b, e); });
    detail::BestSets best;
    for (const auto& c : chunks)
        best.absorb(c);
    return detail::to_profile(best);
}

inline CRProfile solve(const Graph& g, const SolverOptions& options = {})
{
    SubsetSweep sweep;
    return solve(g, sweep, options);
}

/// Every gamma_CR-set of G in ascending bitmask order.
inline std::vector<VertexSet> enumerate_gamma_cr_sets(const Graph& g, SubsetSweep& sweep,
                                                      const SolverOptions& options = {})
{
    const CRProfile profile = solve(g, sweep, options);
    const unsigned key = detail::profile_key(profile.cr, profile.gamma_cr);
    std::vector<VertexSet> out;
    out.reserve(profile.gamma_set_count);
    const Mask all = sweep.universe();
    sweep.run_all([&](Mask set, Mask once, Mask twice, int) {
        if (once == all && detail::profile_key(std::popcount(twice), std::popcount(set)) == key)
            out.emplace_back(set);
    });
    return out;
}

inline std::vector<VertexSet> enumerate_gamma_cr_sets(const Graph& g, const SolverOptions& options = {})
{
    SubsetSweep sweep;
    return enumerate_gamma_cr_sets(g, sweep, options);
}

} // namespace crdom
