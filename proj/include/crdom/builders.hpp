#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "crdom/graph.hpp"

namespace crdom {

// Elementary labelled graphs. Every builder returns a new value.

inline Graph empty_graph(int n) { return Graph{n}; }

inline Graph complete_graph(int n)
{
    GraphBuilder b{n};
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            b.connect(u, v);
    return b.build();
}

/// K_{1,n-1} with the centre at vertex 0.
inline Graph star_graph(int n)
{
    GraphBuilder b{n};
    for (int v = 1; v < n; ++v)
        b.connect(0, v);
    return b.build();
}

/// Cycle 0-1-...-(n-1)-0; needs n >= 3.
inline Graph cycle_graph(int n)
{
    if (n < 3)
        throw UsageError("a cycle needs at least 3 vertices, got " + std::to_string(n));
    GraphBuilder b{n};
    for (int v = 0; v < n; ++v)
        b.connect(v, (v + 1) % n);
    return b.build();
}

/// Path 0-1-...-(n-1).
inline Graph path_graph(int n)
{
    GraphBuilder b{n};
    for (int v = 0; v + 1 < n; ++v)
        b.connect(v, v + 1);
    return b.build();
}

enum class EdgePolicy {
    lenient, ///< adding an existing edge is a no-op
    strict   ///< adding an existing edge is a UsageError
};

inline Graph add_edge(const Graph& g, int u, int v, EdgePolicy policy = EdgePolicy::lenient)
{
    GraphBuilder b{g};
    if (policy == EdgePolicy::strict && u != v && b.adjacent(u, v))
        throw UsageError("edge " + std::to_string(u) + "-" + std::to_string(v) + " already present");
    b.connect(u, v);
    return b.build();
}

inline Graph remove_edge(const Graph& g, int u, int v)
{
    GraphBuilder b{g};
    b.disconnect(u, v);
    return b.build();
}

/// G followed by H; H's vertex i becomes G.order() + i.
inline Graph disjoint_union(const Graph& g, const Graph& h)
{
    const int n = g.order() + h.order();
    if (n > max_order)
        throw UsageError("disjoint union of order " + std::to_string(n) + " exceeds " + std::to_string(max_order));
    std::vector<Mask> rows(g.rows().begin(), g.rows().end());
    for (Mask r : h.rows())
        rows.push_back(r << g.order());
    return Graph::from_rows(n, rows);
}

/// G with `count` isolated vertices appended.
inline Graph with_isolated(const Graph& g, int count)
{
    if (count < 0)
        throw UsageError("negative isolated-vertex count");
    if (count == 0)
        return g;
    return disjoint_union(g, empty_graph(count));
}

/// Complement of the perfect matching {0-1, 2-3, ...}; the (n-2)-regular
/// graph on an even number of vertices.
inline Graph cocktail_party_graph(int n)
{
    if (n < 2 || n % 2 != 0)
        throw UsageError("cocktail-party graph needs an even order, got " + std::to_string(n));
    GraphBuilder b{n};
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!(u % 2 == 0 && v == u + 1))
                b.connect(u, v);
    return b.build();
}

/// Consecutive integers [first, first + count).
inline std::vector<int> block(int first, int count)
{
    std::vector<int> out(static_cast<std::size_t>(count < 0 ? 0 : count));
    std::iota(out.begin(), out.end(), first);
    return out;
}

} // namespace crdom
