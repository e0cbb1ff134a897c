#include <gtest/gtest.h>

#include "crdom/builders.hpp"
#include "crdom/constructions.hpp"
#include "crdom/graph6.hpp"
#include "crdom/solver.hpp"

using namespace crdom;

namespace {

void expect_holds(const WitnessClaim& c)
{
    const auto p = solve(c.graph);
    EXPECT_EQ(c.graph.edge_count(), c.claimed_edges) << c.theorem_id << " " << to_graph6(c.graph);
    EXPECT_EQ(p.cr, c.claimed_cr) << c.theorem_id << " " << to_graph6(c.graph);
    EXPECT_EQ(p.gamma_cr, c.claimed_gamma) << c.theorem_id << " " << to_graph6(c.graph);
}

bool refused_mnk2(const ExtremalQuery& q)
{
    return q.quantity == Quantity::max_edges && q.third == 2 && q.n % 2 == 0 && q.k == q.n - 3;
}

} // namespace

TEST(MaxEdgesWitness, Examples)
{
    const auto k4 = build_max_edges_witness(5, 0, 2);
    EXPECT_EQ(k4.graph, with_isolated(complete_graph(4), 1));
    EXPECT_EQ(k4.claimed_edges, 6);
    EXPECT_EQ(k4.claimed_cr, 0);
    EXPECT_EQ(k4.claimed_gamma, 2);
    expect_holds(k4);

    const auto mn1r = build_max_edges_witness(6, 1, 3);
    EXPECT_EQ(mn1r.claimed_edges, 7);
    expect_holds(mn1r);

    const auto even = build_max_edges_witness(6, 4, 2);
    EXPECT_EQ(even.claimed_edges, 12);
    for (int v = 0; v < 6; ++v)
        EXPECT_EQ(even.graph.degree(v), 4);
    expect_holds(even);

    const auto gamma4 = build_max_edges_witness(7, 2, 4);
    EXPECT_EQ(gamma4.claimed_edges, 7);
    EXPECT_EQ(gamma4.claimed_gamma, 4);
    EXPECT_EQ(gamma4.graph.degree(5) + gamma4.graph.degree(6), 0);
    expect_holds(gamma4);
}

TEST(MinEdgesWitness, Examples)
{
    const auto star = build_min_edges_witness(7, 0, 3);
    EXPECT_EQ(star.graph.edge_count(), 4);
    EXPECT_EQ(star.claimed_gamma, 3);
    expect_holds(star);

    const auto mn1r = build_min_edges_witness(6, 1, 3);
    const std::pair<int, int> edges[] = {{0, 3}, {1, 3}, {0, 4}, {0, 5}};
    EXPECT_EQ(mn1r.graph, Graph::from_edges(6, edges));
    expect_holds(mn1r);

    const auto small = build_min_edges_witness(5, 1, 2);
    EXPECT_EQ(small.claimed_edges, 4);
    EXPECT_EQ(small.claimed_cr, 1);
    EXPECT_EQ(small.claimed_gamma, 2);
    expect_holds(small);
}

TEST(MaxGammaWitness, Examples)
{
    const auto g1 = build_max_gamma_witness(8, 2, 8);
    EXPECT_EQ(g1.graph, with_isolated(graph_g1(), 2));
    EXPECT_EQ(g1.claimed_gamma, 4);
    expect_holds(g1);

    const auto g2 = build_max_gamma_witness(8, 2, 9);
    EXPECT_EQ(g2.graph, with_isolated(graph_g2(), 2));
    EXPECT_EQ(g2.claimed_gamma, 4);
    expect_holds(g2);

    const auto apex = build_max_gamma_witness(9, 0, 10);
    EXPECT_EQ(apex.claimed_gamma, 5);
    int isolated = 0;
    for (int v = 0; v < 9; ++v)
        isolated += apex.graph.degree(v) == 0 ? 1 : 0;
    EXPECT_EQ(isolated, 4);
    expect_holds(apex);

    const auto cr1 = build_max_gamma_witness(8, 1, 6);
    EXPECT_EQ(cr1.claimed_cr, 1);
    EXPECT_EQ(cr1.claimed_gamma, 5);
    expect_holds(cr1);
}

TEST(MinGammaWitness, Examples)
{
    const auto star = build_min_gamma_witness(10, 0, 4);
    EXPECT_EQ(star.graph, with_isolated(star_graph(5), 5));
    EXPECT_EQ(star.claimed_gamma, 6);
    expect_holds(star);

    const auto case1 = build_min_gamma_witness(8, 1, 5);
    EXPECT_EQ(case1.claimed_gamma, 4);
    expect_holds(case1);

    const auto case2 = build_min_gamma_witness(8, 1, 12);
    EXPECT_EQ(case2.claimed_gamma, 2);
    expect_holds(case2);
}

TEST(NamedWitness, Examples)
{
    const auto g1 = build_named(NamedGraph::g1, 6);
    EXPECT_EQ(g1.claimed_edges, 8);
    EXPECT_EQ(g1.claimed_cr, 2);
    EXPECT_EQ(g1.claimed_gamma, 2);
    EXPECT_EQ(assess_set(g1.graph, VertexSet::of({3, 1})).cr_of_set, 2);
    expect_holds(g1);

    const auto c4 = build_named(NamedGraph::four_cycle, 7);
    EXPECT_EQ(c4.claimed_cr, 2);
    EXPECT_EQ(c4.claimed_gamma, 5);
    expect_holds(c4);

    const auto cp = build_named(NamedGraph::cocktail_party, 6);
    EXPECT_EQ(cp.claimed_cr, 4);
    EXPECT_EQ(cp.claimed_gamma, 2);
    expect_holds(cp);

    expect_holds(build_named(NamedGraph::g2, 9));
    EXPECT_THROW(build_named(NamedGraph::cocktail_party, 7), ConstructionUnavailable);
    EXPECT_THROW(build_named(NamedGraph::g1, 5), ConstructionUnavailable);
    EXPECT_EQ(parse_named_graph("FourCycle"), NamedGraph::four_cycle);
    EXPECT_EQ(parse_named_graph("C4"), std::nullopt);
}

TEST(Witness, UncoveredRegimesRefuse)
{
    EXPECT_THROW(build_min_edges_witness(5, 2, 3), ConstructionUnavailable);
    EXPECT_THROW(build_max_edges_witness(9, 1, 7), ConstructionUnavailable);
    EXPECT_THROW(build_max_gamma_witness(8, 1, 25), ConstructionUnavailable);
    EXPECT_THROW(build_max_edges_witness(1, 0, 1), DomainError);
}

TEST(Witness, Deterministic)
{
    for (int n = 5; n <= 10; ++n)
        for (int m = 0; m <= n; ++m)
            EXPECT_EQ(build_min_gamma_witness(n, 0, m).graph, build_min_gamma_witness(n, 0, m).graph);
    EXPECT_EQ(build_max_gamma_witness(11, 2, 30).graph, build_max_gamma_witness(11, 2, 30).graph);
}

// Every covered cell up to n = 10 builds a graph the solver agrees with.
// The only refusals are the CR = n-3, gamma_CR = 2 cells at even n.
TEST(Witness, GridAgreesWithSolver)
{
    for (int n = 2; n <= 10; ++n)
        for (Quantity q : {Quantity::max_edges, Quantity::min_edges, Quantity::max_gamma, Quantity::min_gamma})
            for (int k = 0; k <= n; ++k) {
                const std::int64_t top = indexed_by_gamma(q) ? n : choose2(n);
                for (std::int64_t t = indexed_by_gamma(q) ? 1 : 0; t <= top; ++t) {
                    const ExtremalQuery query{q, n, k, t};
                    const auto value = evaluate(query);
                    if (value.status != ValueStatus::value)
                        continue;
                    if (refused_mnk2(query)) {
                        EXPECT_THROW(build_witness(query), ConstructionUnavailable);
                        continue;
                    }
                    const auto c = build_witness(query);
                    expect_holds(c);
                    const auto p = solve(c.graph);
                    switch (q) {
                    case Quantity::max_edges:
                    case Quantity::min_edges:
                        EXPECT_EQ(c.claimed_edges, *value.value);
                        EXPECT_EQ(p.gamma_cr, t);
                        break;
                    case Quantity::max_gamma:
                    case Quantity::min_gamma:
                        EXPECT_EQ(c.claimed_gamma, *value.value);
                        EXPECT_EQ(c.graph.edge_count(), t);
                        break;
                    }
                    EXPECT_EQ(p.cr, k);
                }
            }
}
