#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crdom/error.hpp"
#include "crdom/graph.hpp"

namespace crdom {

// Labeled graphs on n <= 8 vertices as edge masks. Edge (i, j), i < j, sits
// at bit j(j-1)/2 + i, the same column order graph6 uses, so increasing masks
// visit graphs in a fixed order and a mask is also a compact identity.

using EdgeMask = std::uint64_t;

inline constexpr int max_enumeration_order = 8;
/// Orders above this need the explicit full-sweep flag unless the edge count is fixed.
inline constexpr int default_full_sweep_order = 7;

constexpr int pair_count(int n) noexcept { return n * (n - 1) / 2; }
constexpr int edge_index(int i, int j) noexcept { return i < j ? j * (j - 1) / 2 + i : i * (i - 1) / 2 + j; }

inline std::pair<int, int> edge_at(int index)
{
    int j = 1;
    while (pair_count(j + 1) <= index)
        ++j;
    return {index - pair_count(j), j};
}

namespace detail {

    /// Adjacency rows contributed by each edge index, for n <= 8.
    struct EdgeRows {
        std::array<std::pair<int, int>, pair_count(max_enumeration_order)> ends{};

        constexpr EdgeRows()
        {
            int e = 0;
            for (int j = 1; j < max_enumeration_order; ++j)
                for (int i = 0; i < j; ++i)
                    ends[static_cast<std::size_t>(e++)] = {i, j};
        }
    };
    inline constexpr EdgeRows edge_rows{};

    inline constexpr auto binomial_table = [] {
        std::array<std::array<std::uint64_t, 65>, 65> c{};
        for (int a = 0; a <= 64; ++a) {
            c[a][0] = 1;
            for (int b = 1; b <= a; ++b)
                c[a][b] = c[a - 1][b - 1] + (b <= a - 1 ? c[a - 1][b] : 0);
        }
        return c;
    }();

    constexpr std::uint64_t binomial(int a, int b) noexcept
    {
        return (b < 0 || a < 0 || b > a) ? 0 : binomial_table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }

} // namespace detail

inline Graph graph_from_edge_mask(int n, EdgeMask mask)
{
    if (n < 1 || n > max_enumeration_order)
        throw CapacityError("edge-mask graphs support order 1.." + std::to_string(max_enumeration_order));
    if (mask >> pair_count(n))
        throw UsageError("edge mask has bits beyond C(n,2)");
    std::array<Mask, max_enumeration_order> rows{};
    for (EdgeMask rest = mask; rest != 0; rest &= rest - 1) {
        const auto [i, j] = detail::edge_rows.ends[static_cast<std::size_t>(std::countr_zero(rest))];
        rows[static_cast<std::size_t>(i)] |= bit(j);
        rows[static_cast<std::size_t>(j)] |= bit(i);
    }
    return Graph::from_rows(n, std::span<const Mask>(rows.data(), static_cast<std::size_t>(n)));
}

inline EdgeMask edge_mask_of(const Graph& g)
{
    if (g.order() > max_enumeration_order)
        throw CapacityError("edge masks support order up to " + std::to_string(max_enumeration_order));
    EdgeMask mask = 0;
    for (int j = 1; j < g.order(); ++j)
        for (int i = 0; i < j; ++i)
            if (g.adjacent(i, j))
                mask |= EdgeMask{1} << edge_index(i, j);
    return mask;
}

/// The graphs of order n, optionally restricted to exactly `edges` edges,
/// addressed by rank in increasing edge-mask order.
class LabeledRange {
public:
    LabeledRange(int n, std::optional<int> edges, bool allow_full_sweep = false) : n_{n}, edges_{edges}
    {
        if (n < 1)
            throw UsageError("order must be at least 1");
        if (n > max_enumeration_order)
            throw CapacityError("exhaustive enumeration supports order up to " +
                                std::to_string(max_enumeration_order) + ", got " + std::to_string(n));
        pairs_ = pair_count(n);
        if (edges) {
            if (*edges < 0 || *edges > pairs_)
                throw DomainError("edge count " + std::to_string(*edges) + " outside [0, " + std::to_string(pairs_) +
                                  "]");
            size_ = detail::binomial(pairs_, *edges);
        }
        else {
            if (n > default_full_sweep_order && !allow_full_sweep)
                throw CapacityError("a full sweep at order " + std::to_string(n) +
                                    " needs the explicit full-sweep flag; use fixed edge counts instead");
            size_ = std::uint64_t{1} << pairs_;
        }
    }

    int order() const noexcept { return n_; }
    int pairs() const noexcept { return pairs_; }
    std::optional<int> edges() const noexcept { return edges_; }
    std::uint64_t size() const noexcept { return size_; }

    /// Mask of the graph with the given rank.
    EdgeMask at(std::uint64_t rank) const
    {
        if (!edges_)
            return rank;
        // Increasing masks with a fixed popcount are combinations in colex order.
        EdgeMask mask = 0;
        int k = *edges_;
        for (int b = pairs_ - 1; b >= 0 && k > 0; --b) {
            const std::uint64_t c = detail::binomial(b, k);
            if (c <= rank) {
                mask |= EdgeMask{1} << b;
                rank -= c;
                --k;
            }
        }
        return mask;
    }

    /// Successor of `mask` in the range's order; meaningless after the last.
    EdgeMask next(EdgeMask mask) const noexcept
    {
        if (!edges_ || mask == 0)
            return mask + 1;
        const EdgeMask low = mask & (~mask + 1);
        const EdgeMask ripple = mask + low;
        return ripple | (((mask ^ ripple) >> 2) / low);
    }

    /// Calls visit(mask) for ranks in [begin, end).
    template <typename Visit>
    void for_each(std::uint64_t begin, std::uint64_t end, Visit&& visit) const
    {
        if (begin >= end)
            return;
        EdgeMask mask = at(begin);
        for (std::uint64_t r = begin;; ) {
            visit(mask);
            if (++r == end)
                break;
            mask = next(mask);
        }
    }

private:
    int n_;
    std::optional<int> edges_;
    int pairs_ = 0;
    std::uint64_t size_ = 0;
};

/// Calls visit(graph) for every labeled graph of order n (with `edges`
/// edges if given) in increasing edge-mask order.
template <typename Visit>
void enumerate_labeled(int n, std::optional<int> edges, Visit&& visit, bool allow_full_sweep = false)
{
    const LabeledRange range{n, edges, allow_full_sweep};
    range.for_each(0, range.size(), [&](EdgeMask mask) { visit(graph_from_edge_mask(n, mask)); });
}

} // namespace crdom
