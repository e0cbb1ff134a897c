#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "crdom/error.hpp"

namespace crdom {

using Mask = std::uint64_t;

/// Largest supported order. Keeps graph6 headers single-byte and every
/// vertex mask in one machine word.
inline constexpr int max_order = 62;

constexpr Mask bit(int v) noexcept { return Mask{1} << v; }

constexpr Mask universe_mask(int n) noexcept { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

/// A subset of vertices stored as a bitmask; bit v set means v is a member.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(Mask bits) : bits_{bits} {}

    static VertexSet of(std::initializer_list<int> vertices)
    {
        Mask bits = 0;
        for (int v : vertices) {
            if (v < 0 || v >= max_order)
                throw UsageError("vertex " + std::to_string(v) + " out of range");
            bits |= bit(v);
        }
        return VertexSet{bits};
    }

    constexpr Mask bits() const noexcept { return bits_; }
    constexpr bool contains(int v) const noexcept { return (bits_ >> v) & 1U; }
    constexpr int size() const noexcept { return std::popcount(bits_); }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr bool subset_of(VertexSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }

    std::vector<int> members() const
    {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (Mask rest = bits_; rest != 0; rest &= rest - 1)
            out.push_back(std::countr_zero(rest));
        return out;
    }

    /// Sorted member list, e.g. "[0,2,5]".
    std::string to_string() const
    {
        std::string out = "[";
        bool first = true;
        for (int v : members()) {
            if (!first)
                out += ',';
            out += std::to_string(v);
            first = false;
        }
        out += ']';
        return out;
    }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) noexcept { return VertexSet{a.bits_ | b.bits_}; }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) noexcept { return VertexSet{a.bits_ & b.bits_}; }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) noexcept { return VertexSet{a.bits_ & ~b.bits_}; }
    friend constexpr bool operator==(VertexSet, VertexSet) = default;
    friend constexpr auto operator<=>(VertexSet, VertexSet) = default;

private:
    Mask bits_ = 0;
};

class GraphBuilder;

/// Simple undirected graph on vertices 0..order-1, one adjacency mask per
/// vertex. Rows are symmetric and irreflexive and use only the low `order`
/// bits. Immutable once built; use GraphBuilder or the free builders for
/// edits.
class Graph {
public:
    /// Edgeless graph of the given order.
    explicit Graph(int order) : order_{order}
    {
        if (order < 1 || order > max_order)
            throw UsageError("graph order " + std::to_string(order) + " outside [1, " +
                             std::to_string(max_order) + "]");
    }

    /// Builds from adjacency rows, validating every invariant.
    static Graph from_rows(int order, std::span<const Mask> rows)
    {
        Graph g{order};
        if (rows.size() != static_cast<std::size_t>(order))
            throw UsageError("expected " + std::to_string(order) + " adjacency rows");
        const Mask all = universe_mask(order);
        for (int v = 0; v < order; ++v) {
            const Mask row = rows[static_cast<std::size_t>(v)];
            if ((row & ~all) != 0)
                throw UsageError("row " + std::to_string(v) + " references vertices beyond the order");
            if ((row & bit(v)) != 0)
                throw UsageError("self-loop at vertex " + std::to_string(v));
            g.adj_[static_cast<std::size_t>(v)] = row;
        }
        for (int u = 0; u < order; ++u)
            for (Mask rest = g.adj_[static_cast<std::size_t>(u)]; rest != 0; rest &= rest - 1)
                if (!g.adjacent_unchecked(std::countr_zero(rest), u))
                    throw UsageError("adjacency rows are not symmetric");
        return g;
    }

    static Graph from_edges(int order, std::span<const std::pair<int, int>> edges);

    int order() const noexcept { return order_; }
    Mask universe() const noexcept { return universe_mask(order_); }
    VertexSet vertices() const noexcept { return VertexSet{universe()}; }

    /// Open neighbourhood row without range checks; hot-path accessor.
    Mask row(int v) const noexcept { return adj_[static_cast<std::size_t>(v)]; }
    std::span<const Mask> rows() const noexcept { return {adj_.data(), static_cast<std::size_t>(order_)}; }

    VertexSet neighbors(int v) const
    {
        check_vertex(v);
        return VertexSet{row(v)};
    }

    bool adjacent(int u, int v) const
    {
        check_vertex(u);
        check_vertex(v);
        return adjacent_unchecked(u, v);
    }

    int degree(int v) const
    {
        check_vertex(v);
        return std::popcount(row(v));
    }

    int edge_count() const noexcept
    {
        int twice = 0;
        for (Mask r : rows())
            twice += std::popcount(r);
        return twice / 2;
    }

    void check_vertex(int v) const
    {
        if (v < 0 || v >= order_)
            throw UsageError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(order_));
    }

    friend bool operator==(const Graph& a, const Graph& b) noexcept
    {
        if (a.order_ != b.order_)
            return false;
        for (int v = 0; v < a.order_; ++v)
            if (a.row(v) != b.row(v))
                return false;
        return true;
    }

private:
    friend class GraphBuilder;

    bool adjacent_unchecked(int u, int v) const noexcept { return (row(u) >> v) & 1U; }

    int order_;
    std::array<Mask, max_order> adj_{};
};

/// Mutable staging area for a Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(int order) : graph_{order} {}
    explicit GraphBuilder(const Graph& start) : graph_{start} {}

    int order() const noexcept { return graph_.order(); }

    bool adjacent(int u, int v) const { return graph_.adjacent(u, v); }

    /// Adds edge uv. Adding an existing edge is a no-op.
    GraphBuilder& connect(int u, int v)
    {
        check_pair(u, v);
        graph_.adj_[static_cast<std::size_t>(u)] |= bit(v);
        graph_.adj_[static_cast<std::size_t>(v)] |= bit(u);
        return *this;
    }

    GraphBuilder& disconnect(int u, int v)
    {
        check_pair(u, v);
        graph_.adj_[static_cast<std::size_t>(u)] &= ~bit(v);
        graph_.adj_[static_cast<std::size_t>(v)] &= ~bit(u);
        return *this;
    }

    /// Connects `u` to every member of `targets`.
    GraphBuilder& connect_all(int u, std::span<const int> targets)
    {
        for (int v : targets)
            connect(u, v);
        return *this;
    }

    /// Makes `block` a clique.
    GraphBuilder& make_clique(std::span<const int> block)
    {
        for (std::size_t i = 0; i < block.size(); ++i)
            for (std::size_t j = i + 1; j < block.size(); ++j)
                connect(block[i], block[j]);
        return *this;
    }

    int edge_count() const noexcept { return graph_.edge_count(); }

    Graph build() const { return graph_; }

private:
    void check_pair(int u, int v) const
    {
        graph_.check_vertex(u);
        graph_.check_vertex(v);
        if (u == v)
            throw UsageError("self-loop requested at vertex " + std::to_string(u));
    }

    Graph graph_;
};

inline Graph Graph::from_edges(int order, std::span<const std::pair<int, int>> edges)
{
    GraphBuilder b{order};
    for (auto [u, v] : edges)
        b.connect(u, v);
    return b.build();
}

/// N[v] = N(v) plus v itself.
inline VertexSet closed_neighborhood(const Graph& g, int v)
{
    g.check_vertex(v);
    return VertexSet{g.row(v) | bit(v)};
}

/// N[D], the union of the closed neighbourhoods of the members of D.
inline VertexSet closed_neighborhood(const Graph& g, VertexSet d)
{
    if (!d.subset_of(g.vertices()))
        throw UsageError("vertex set " + d.to_string() + " is not contained in the graph");
    Mask out = 0;
    for (Mask rest = d.bits(); rest != 0; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        out |= g.row(v) | bit(v);
    }
    return VertexSet{out};
}

} // namespace crdom
