#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "crdom/enumerate.hpp"
#include "crdom/graph6.hpp"

namespace crdom {

/// Least edge mask over all relabelings of g. Plain n! scan, so n <= 8.
inline EdgeMask canonical_edge_mask(const Graph& g)
{
    const int n = g.order();
    if (n > max_enumeration_order)
        throw CapacityError("canonical form supports order up to " + std::to_string(max_enumeration_order));
    std::array<std::pair<int, int>, pair_count(max_enumeration_order)> edges{};
    int m = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (g.adjacent(i, j))
                edges[static_cast<std::size_t>(m++)] = {i, j};

    std::array<int, max_enumeration_order> perm{};
    std::iota(perm.begin(), perm.begin() + n, 0);
    EdgeMask best = ~EdgeMask{0};
    do {
        EdgeMask mask = 0;
        for (int e = 0; e < m; ++e) {
            const auto [i, j] = edges[static_cast<std::size_t>(e)];
            mask |= EdgeMask{1} << edge_index(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
        }
        best = std::min(best, mask);
    } while (std::next_permutation(perm.begin(), perm.begin() + n));
    return best;
}

inline Graph canonical_graph(const Graph& g) { return graph_from_edge_mask(g.order(), canonical_edge_mask(g)); }

/// graph6 line of the canonical relabeling; isomorphic graphs give equal lines.
inline std::string canonical_form(const Graph& g) { return to_graph6(canonical_graph(g)); }

} // namespace crdom
