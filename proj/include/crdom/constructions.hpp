#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "crdom/builders.hpp"
#include "crdom/error.hpp"
#include "crdom/formulas.hpp"
#include "crdom/graph.hpp"

namespace crdom {

// Witness graphs realising each extremal value. Vertex blocks follow the
// order S (the intended gamma_CR-set), then x or A (overdominated
// vertices), then B (the rest), so every witness is reproducible byte for
// byte. Where the edges inside a block may go anywhere, they are placed in
// lexicographic (i, j) order.

struct WitnessClaim {
    Graph graph;
    std::string theorem_id;
    int claimed_edges = 0;
    int claimed_cr = 0;
    int claimed_gamma = 0;
};

namespace detail {

    /// Adds `count` new edges among `verts`, in lexicographic order of
    /// index pairs, skipping pairs already present.
    inline void fill_lex(GraphBuilder& b, std::span<const int> verts, std::int64_t count)
    {
        for (std::size_t i = 0; i < verts.size() && count > 0; ++i)
            for (std::size_t j = i + 1; j < verts.size() && count > 0; ++j)
                if (!b.adjacent(verts[i], verts[j])) {
                    b.connect(verts[i], verts[j]);
                    --count;
                }
        if (count > 0)
            throw std::logic_error("fill_lex: block too small for the requested edges");
    }

    /// Connects `u` to the first `count` members of `targets`.
    inline void connect_first(GraphBuilder& b, int u, std::span<const int> targets, std::int64_t count)
    {
        if (count < 0 || count > static_cast<std::int64_t>(targets.size()))
            throw std::logic_error("connect_first: count out of range");
        for (std::int64_t i = 0; i < count; ++i)
            b.connect(u, targets[static_cast<std::size_t>(i)]);
    }

    inline std::vector<int> without(std::vector<int> verts, int drop)
    {
        std::erase(verts, drop);
        return verts;
    }

    inline std::string query_text(Quantity q, int n, int k, std::int64_t third)
    {
        return std::string{quantity_symbol(q)} + "(" + std::to_string(n) + "," + std::to_string(k) + "," +
               std::to_string(third) + ")";
    }

    inline std::int64_t require_value(Quantity q, int n, int k, std::int64_t third, const ExtremalValue& v)
    {
        if (v.status != ValueStatus::value)
            throw ConstructionUnavailable("no construction for " + query_text(q, n, k, third) + ": formula status is " +
                                          std::string{status_name(v.status)});
        return *v.value;
    }

    inline WitnessClaim claim(Graph g, std::string id, int edges, int cr, int gamma)
    {
        if (g.edge_count() != edges)
            throw std::logic_error(id + ": built " + std::to_string(g.edge_count()) + " edges, expected " +
                                   std::to_string(edges));
        return WitnessClaim{std::move(g), std::move(id), edges, cr, gamma};
    }

    /// S = [0, r) all joined to x = r; s_1 = 0 also joined to every vertex
    /// of B = [r+1, n). Unique gamma_CR-set S, CR 1.
    inline Graph minimal_cr1(int n, int r)
    {
        GraphBuilder b{n};
        const int x = r;
        b.connect(0, x).connect(1, x);
        for (int v = r + 1; v < n; ++v)
            b.connect(0, v);
        return b.build();
    }

    /// S = [0, r), x = r, B = [r+1, n) with y = B[0]: S joined to x, s_1
    /// and x joined to B minus y, s_2 joined to y, B a clique.
    inline Graph dense_cr1(int n, int r)
    {
        GraphBuilder b{n};
        const int x = r;
        const auto bs = block(r + 1, n - r - 1);
        const int y = bs.front();
        for (int s = 0; s < r; ++s)
            b.connect(s, x);
        for (int v : bs)
            if (v != y)
                b.connect(0, v).connect(x, v);
        b.connect(1, y);
        b.make_clique(bs);
        return b.build();
    }

    /// Two-vertex gamma_CR-set overdominating exactly k vertices with the
    /// most edges: S = {0, 1} independent, A = [2, k+2), B = the rest, with
    /// s_2 seeing only b = B[0] in B. A u B is complete minus a 1-factor of
    /// A, or for odd k minus a 1-factor of A without its last vertex a and
    /// minus the edge a - B[1].
    inline Graph dense_gamma2(int n, int k)
    {
        if (n % 2 == 0 && k == n - 2)
            return cocktail_party_graph(n);
        GraphBuilder b{n};
        const int s1 = 0;
        const int s2 = 1;
        const bool odd = k % 2 == 1;
        const auto as = block(2, k);
        const auto bs = block(2 + k, n - 2 - k);
        const int bb = bs.front();
        for (int a : as)
            b.connect(s1, a).connect(s2, a);
        for (int v : bs)
            if (v != bb)
                b.connect(s1, v);
        b.connect(s2, bb);

        std::vector<int> rest = as;
        rest.insert(rest.end(), bs.begin(), bs.end());
        b.make_clique(rest);
        const std::size_t matched = odd ? as.size() - 1 : as.size();
        for (std::size_t i = 0; i + 1 < matched; i += 2)
            b.disconnect(as[i], as[i + 1]);
        if (odd)
            b.disconnect(as.back(), bs.at(1));
        return b.build();
    }

    /// Five vertices s1 s2 b1 b2 b3: s1s2, s1b1, s1b2, s2b3, triangle b1b2b3.
    inline Graph seven_edge_core()
    {
        GraphBuilder b{5};
        b.connect(0, 1).connect(0, 2).connect(0, 3).connect(1, 4);
        b.connect(2, 3).connect(2, 4).connect(3, 4);
        return b.build();
    }

    /// CR = 2 construction with S = [0, r), A = {r, r+1}, B = [r+2, n)
    /// where every S vertex and every B vertex sees both A vertices, and
    /// S matches into B (s_r takes the leftover B vertices). B is a clique
    /// when `b_edges` is negative, otherwise it gets that many edges.
    inline Graph spread_cr2(int n, int r, std::int64_t b_edges)
    {
        GraphBuilder b{n};
        const int a1 = r;
        const int a2 = r + 1;
        const auto bs = block(r + 2, n - r - 2);
        for (int s = 0; s < r; ++s)
            b.connect(s, a1).connect(s, a2);
        for (int i = 0; i < static_cast<int>(bs.size()); ++i)
            b.connect(i < r - 1 ? i : r - 1, bs[static_cast<std::size_t>(i)]);
        for (int v : bs)
            b.connect(a1, v).connect(a2, v);
        if (b_edges < 0)
            b.make_clique(bs);
        else
            fill_lex(b, bs, b_edges);
        return b.build();
    }

    /// CR = 2 construction for few B vertices: S = [0, r) sees A = {r, r+1},
    /// s_1 - b_1, s_2 - (B minus b_1), a_1 - a_2, a_1 - (B minus b_1),
    /// a_2 - (B minus b_2). B is a clique when `b_edges` is negative.
    inline Graph crowded_cr2(int n, int r, std::int64_t b_edges)
    {
        GraphBuilder b{n};
        const int a1 = r;
        const int a2 = r + 1;
        const auto bs = block(r + 2, n - r - 2);
        for (int s = 0; s < r; ++s)
            b.connect(s, a1).connect(s, a2);
        b.connect(0, bs[0]);
        for (std::size_t i = 1; i < bs.size(); ++i)
            b.connect(1, bs[i]).connect(a1, bs[i]);
        for (std::size_t i = 0; i < bs.size(); ++i)
            if (i != 1)
                b.connect(a2, bs[i]);
        b.connect(a1, a2);
        if (b_edges < 0)
            b.make_clique(bs);
        else
            fill_lex(b, bs, b_edges);
        return b.build();
    }

} // namespace detail

/// Named graphs used across the CR = 2 results.
enum class NamedGraph { g1, g2, four_cycle, cocktail_party };

inline std::optional<NamedGraph> parse_named_graph(std::string_view name) noexcept
{
    if (name == "G1")
        return NamedGraph::g1;
    if (name == "G2")
        return NamedGraph::g2;
    if (name == "FourCycle")
        return NamedGraph::four_cycle;
    if (name == "CocktailParty")
        return NamedGraph::cocktail_party;
    return std::nullopt;
}

/// G1 (x1..x6 -> 0..5) and G2 (s1 s2 a1 a2 b1 b2 -> 0..5), both six
/// vertices with CR 2 and gamma_CR 2.
inline Graph graph_g1()
{
    static constexpr std::pair<int, int> edges[] = {{0, 1}, {0, 3}, {1, 2}, {2, 3}, {3, 5}, {0, 4}, {3, 4}, {2, 4}};
    return Graph::from_edges(6, edges);
}

inline Graph graph_g2()
{
    static constexpr std::pair<int, int> edges[] = {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4},
                                                    {3, 5}, {4, 5}, {0, 4}, {1, 5}};
    return Graph::from_edges(6, edges);
}

inline WitnessClaim build_named(NamedGraph name, int n)
{
    switch (name) {
    case NamedGraph::g1:
    case NamedGraph::g2: {
        if (n < 6)
            throw ConstructionUnavailable("G1/G2 need n >= 6, got " + std::to_string(n));
        const bool first = name == NamedGraph::g1;
        return detail::claim(with_isolated(first ? graph_g1() : graph_g2(), n - 6), first ? "G1" : "G2",
                             first ? 8 : 9, 2, 2 + (n - 6));
    }
    case NamedGraph::four_cycle:
        if (n < 4)
            throw ConstructionUnavailable("FourCycle needs n >= 4, got " + std::to_string(n));
        return detail::claim(with_isolated(cycle_graph(4), n - 4), "FourCycle", 4, 2, n - 2);
    case NamedGraph::cocktail_party:
        if (n < 4 || n % 2 != 0)
            throw ConstructionUnavailable("CocktailParty needs an even n >= 4, got " + std::to_string(n));
        return detail::claim(cocktail_party_graph(n), "CocktailParty", n * (n - 2) / 2, n - 2, 2);
    }
    throw ConstructionUnavailable("unknown named graph");
}

/// Graph attaining M(n,k,r).
inline WitnessClaim build_max_edges_witness(int n, int k, int r)
{
    const auto value = max_edges(n, k, r);
    const auto edges = static_cast<int>(detail::require_value(Quantity::max_edges, n, k, r, value));

    if (k == 0)
        return detail::claim(with_isolated(complete_graph(n - r + 1), r - 1), "Mn0r", edges, k, r);
    if (k == 1)
        return detail::claim(detail::dense_cr1(n, r), "Mn1r", edges, k, r);
    if (r == 2) {
        if (k % 2 == 1 && k == n - 3)
            throw ConstructionUnavailable("no construction for M(" + std::to_string(n) + "," + std::to_string(k) +
                                          ",2): the odd-k family needs k <= n-4, and exhaustive search finds no "
                                          "graph with CR = n-3 at even n = 6");
        const char* id = (n % 2 == 0 && k == n - 2) ? "Mnk2 cocktail-party" : (k % 2 ? "Mnk2 odd-k" : "Mnk2 even-k");
        return detail::claim(detail::dense_gamma2(n, k), id, edges, k, r);
    }
    // k == 2, r >= 3
    if (r == n - 2)
        return detail::claim(with_isolated(cycle_graph(4), n - 4), "Mn2r case 5", edges, k, r);
    if (r == n - 3)
        return detail::claim(with_isolated(detail::seven_edge_core(), n - 5), "Mn2r case 4", edges, k, r);
    if (n - r - 2 >= r)
        return detail::claim(detail::spread_cr2(n, r, -1), "Mn2r case 2", edges, k, r);
    return detail::claim(detail::crowded_cr2(n, r, -1), "Mn2r case 3", edges, k, r);
}

/// Graph attaining m(n,k,r).
inline WitnessClaim build_min_edges_witness(int n, int k, int r)
{
    const auto value = min_edges(n, k, r);
    const auto edges = static_cast<int>(detail::require_value(Quantity::min_edges, n, k, r, value));

    if (k == 0)
        return detail::claim(with_isolated(star_graph(n - r + 1), r - 1), "mn0r", edges, k, r);
    return detail::claim(detail::minimal_cr1(n, r), "mn1r", edges, k, r);
}

/// Graph attaining D(n,k,m).
inline WitnessClaim build_max_gamma_witness(int n, int k, int m)
{
    const auto value = max_gamma(n, k, m);
    const auto gamma = static_cast<int>(detail::require_value(Quantity::max_gamma, n, k, m, value));

    if (k == 0) {
        if (m == 0)
            return detail::claim(empty_graph(n), "empty-graph", 0, 0, gamma);
        // Apex 0 over R = [1, r]; R carries the remaining m - r edges.
        const int r = n - gamma;
        GraphBuilder b{n};
        const auto rs = block(1, r);
        for (int v : rs)
            b.connect(0, v);
        detail::fill_lex(b, rs, m - r);
        return detail::claim(b.build(), "Dn0m", m, 0, gamma);
    }

    if (k == 1) {
        if (m <= n + 1) {
            // S = [0, n-3), x = n-3, B = {n-2, n-1}, grown one edge at a time.
            const int x = n - 3;
            const int b1 = n - 2;
            const int b2 = n - 1;
            GraphBuilder b{n};
            b.connect(0, x).connect(1, x).connect(0, b1);
            if (m == 4) {
                b.connect(0, b2);
            }
            else if (m == 5) {
                b.connect(0, b2).connect(x, b1);
            }
            else {
                b.connect(x, b1).connect(b1, b2).connect(1, b2);
                for (int s = 2; s < 2 + (m - 6); ++s)
                    b.connect(s, x);
            }
            return detail::claim(b.build(), "Dn1r case 1", m, 1, gamma);
        }
        const int r = gamma;
        if (r == 2) {
            const int x = 2;
            const auto bs = block(3, n - 3);
            const int bb = bs.front();
            GraphBuilder b{n};
            b.connect(0, x).connect(1, x).connect(1, bb);
            for (int v : bs)
                if (v != bb)
                    b.connect(0, v);
            b.make_clique(bs);
            const auto others = detail::without(bs, bb);
            detail::connect_first(b, x, others, m - ((n - 1) + choose2(n - 3)));
            return detail::claim(b.build(), "Dn1r case 2 r=2", m, 1, gamma);
        }
        const int x = r;
        const auto bs = block(r + 1, n - r - 1);
        const int b1 = bs[0];
        const int b2 = bs[1];
        const int b3 = bs[2];
        GraphBuilder b{n};
        for (int s = 0; s < r; ++s)
            b.connect(s, x);
        for (int v : bs)
            if (v != b2)
                b.connect(0, v);
        b.connect(1, b2);
        b.make_clique(bs).disconnect(b1, b2);
        b.connect(x, b3);
        const std::int64_t base = choose2(n - r - 1) + (n - 2) + 1;
        if (m > base) {
            b.connect(b1, b2);
            std::vector<int> targets;
            for (int v : bs)
                if (v != b2 && v != b3)
                    targets.push_back(v);
            detail::connect_first(b, x, targets, m - base - 1);
        }
        return detail::claim(b.build(), "Dn1r case 2 r>=3", m, 1, gamma);
    }

    // k == 2, n >= 8
    if (m <= 9) {
        Graph core = empty_graph(1);
        switch (m) {
        case 4: core = cycle_graph(4); break;
        case 5: core = disjoint_union(cycle_graph(4), complete_graph(2)); break;
        case 6: {
            static constexpr std::pair<int, int> e[] = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 2}};
            core = Graph::from_edges(5, e);
            break;
        }
        case 7: {
            static constexpr std::pair<int, int> e[] = {{0, 1}, {0, 4}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}};
            core = Graph::from_edges(5, e);
            break;
        }
        case 8: core = graph_g1(); break;
        case 9: core = graph_g2(); break;
        default: break;
        }
        return detail::claim(with_isolated(core, n - core.order()), "dn2msmall m=" + std::to_string(m), m, 2, gamma);
    }
    if (value.basis == basis::max_gamma_cr2_small) {
        // S = [0, n-4), A = {n-4, n-3}, B = {n-2, n-1}; m = 10 + 2t + i.
        const int t = (m - 10) / 2;
        const int i = (m - 10) % 2;
        const int a1 = n - 4;
        const int a2 = n - 3;
        const int b1 = n - 2;
        const int b2 = n - 1;
        GraphBuilder b{n};
        b.connect(0, a1).connect(0, a2).connect(1, a1).connect(1, a2);
        b.connect(0, b1).connect(1, b2).connect(a1, b1).connect(a2, b2).connect(b1, b2).connect(a1, a2);
        for (int j = 2; j < t + 2; ++j)
            b.connect(j, a1).connect(j, a2);
        if (i == 1)
            b.connect(t + 2, a1);
        return detail::claim(b.build(), "dn2msmall m=10+2t+i", m, 2, gamma);
    }
    const int r = gamma;
    const int pivot = (n - 2) / 2;
    const std::int64_t fixed = 2 * static_cast<std::int64_t>(r) + 3 * static_cast<std::int64_t>(n - r - 2);
    if (r <= pivot)
        return detail::claim(detail::spread_cr2(n, r, m - fixed), r < pivot ? "dn2mlarge case 1" : "dn2mlarge case 2",
                             m, 2, gamma);
    return detail::claim(detail::crowded_cr2(n, r, m - (fixed - 1)), "dn2mlarge case 3", m, 2, gamma);
}

/// Graph attaining d(n,k,m).
inline WitnessClaim build_min_gamma_witness(int n, int k, int m)
{
    const auto value = min_gamma(n, k, m);
    const auto gamma = static_cast<int>(detail::require_value(Quantity::min_gamma, n, k, m, value));

    if (k == 0) {
        if (m < n - 1)
            return detail::claim(with_isolated(star_graph(m + 1), n - m - 1), "dn0m", m, 0, gamma);
        GraphBuilder b{star_graph(n)};
        detail::fill_lex(b, block(1, n - 1), m - (n - 1));
        return detail::claim(b.build(), "dn0m", m, 0, gamma);
    }

    if (m <= n - 1)
        return detail::claim(detail::minimal_cr1(n, n - m + 1), "dn1m case 1", m, 1, gamma);

    // S = {0, 1}, x = 2, B = [3, n) with b_2 = B[0].
    const int x = 2;
    const auto bs = block(3, n - 3);
    const int b2 = bs.front();
    const auto others = detail::without(bs, b2);
    GraphBuilder b{n};
    b.connect(0, x).connect(1, x).connect(1, b2);
    for (int v : others)
        b.connect(0, v);

    if (m <= 2 * n - 5) {
        detail::connect_first(b, b2, others, m - (n - 1));
        return detail::claim(b.build(), "dn1m case 2a", m, 1, gamma);
    }
    if (m <= choose2(n - 3) + (n - 1)) {
        for (int v : others)
            b.connect(b2, v);
        detail::fill_lex(b, others, m - (2 * n - 5));
        return detail::claim(b.build(), "dn1m case 2b", m, 1, gamma);
    }
    b.make_clique(bs);
    detail::connect_first(b, x, others, m - (choose2(n - 3) + (n - 1)));
    return detail::claim(b.build(), "dn1m case 2c", m, 1, gamma);
}

inline WitnessClaim build_witness(const ExtremalQuery& q)
{
    if (q.third < 0 || q.third > choose2(max_order))
        throw DomainError("third parameter out of range");
    const auto third = static_cast<int>(q.third);
    switch (q.quantity) {
    case Quantity::max_edges: return build_max_edges_witness(q.n, q.k, third);
    case Quantity::min_edges: return build_min_edges_witness(q.n, q.k, third);
    case Quantity::max_gamma: return build_max_gamma_witness(q.n, q.k, third);
    case Quantity::min_gamma: return build_min_gamma_witness(q.n, q.k, third);
    }
    throw DomainError("unknown quantity");
}

} // namespace crdom
