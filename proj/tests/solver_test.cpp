#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "crdom/builders.hpp"
#include "crdom/graph6.hpp"
#include "crdom/solver.hpp"
#include "support/reference.hpp"

using namespace crdom;

namespace {

VertexSet set_of(const std::vector<int>& members)
{
    VertexSet s;
    for (int v : members)
        s = s | VertexSet::of({v});
    return s;
}

Graph random_graph(int n, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin{0.5};
    GraphBuilder b{n};
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (coin(rng))
                b.connect(i, j);
    return b.build();
}

class ScopedEnv {
public:
    ScopedEnv(const char* name, const char* value) : name_{name}
    {
        if (const char* old = std::getenv(name))
            old_ = old;
        ::setenv(name, value, 1);
    }
    ~ScopedEnv()
    {
        if (old_)
            ::setenv(name_, old_->c_str(), 1);
        else
            ::unsetenv(name_);
    }

private:
    const char* name_;
    std::optional<std::string> old_;
};

} // namespace

TEST(AssessSet, Examples)
{
    const auto k3 = assess_set(complete_graph(3), VertexSet::of({0}));
    EXPECT_TRUE(k3.dominating);
    EXPECT_EQ(k3.cr_of_set, 0);
    EXPECT_EQ(k3.influence, 3);
    EXPECT_TRUE(k3.minimal);

    const auto pair = assess_set(cycle_graph(4), VertexSet::of({0, 1}));
    EXPECT_TRUE(pair.dominating);
    EXPECT_EQ(pair.overdominated, VertexSet::of({0, 1}));
    EXPECT_EQ(pair.cr_of_set, 2);
    EXPECT_EQ(pair.influence, 6);

    const auto none = assess_set(cycle_graph(4), VertexSet{});
    EXPECT_FALSE(none.dominating);
    EXPECT_EQ(none.cr_of_set, 0);
    EXPECT_EQ(none.influence, 0);
    EXPECT_FALSE(none.minimal);
}

TEST(AssessSet, NonMinimal)
{
    const auto s = assess_set(complete_graph(3), VertexSet::of({0, 1}));
    EXPECT_TRUE(s.dominating);
    EXPECT_FALSE(s.minimal);
    EXPECT_EQ(s.cr_of_set, 3);
}

TEST(AssessSet, InfluenceIsHitSum)
{
    std::mt19937_64 rng{7};
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = random_graph(7, rng);
        const auto a = ref::matrix_of(g);
        const VertexSet s{rng() & universe_mask(7)};
        int hits = 0;
        int over = 0;
        for (int u = 0; u < 7; ++u) {
            const int h = ref::hits(a, s.members(), u);
            hits += h;
            over += h >= 2 ? 1 : 0;
        }
        const auto got = assess_set(g, s);
        EXPECT_EQ(got.influence, hits);
        EXPECT_EQ(got.cr_of_set, over);
    }
}

TEST(Solve, Examples)
{
    for (int n = 1; n <= 12; ++n) {
        const auto p = solve(complete_graph(n));
        EXPECT_EQ(p.cr, 0) << n;
        EXPECT_EQ(p.gamma_cr, 1) << n;
    }

    const auto c4 = solve(cycle_graph(4));
    EXPECT_EQ(c4.cr, 2);
    EXPECT_EQ(c4.gamma_cr, 2);
    EXPECT_EQ(c4.witness, VertexSet::of({0, 1}));

    const auto c5 = solve(cycle_graph(5));
    EXPECT_EQ(c5.cr, 1);
    EXPECT_EQ(c5.gamma_cr, 2);

    const auto p4 = solve(path_graph(4));
    EXPECT_EQ(p4.cr, 0);
    EXPECT_EQ(p4.gamma_cr, 2);
}

TEST(Solve, UniversalVertexGivesPerfectCode)
{
    const auto p = solve(add_edge(add_edge(star_graph(6), 1, 2), 3, 4));
    EXPECT_EQ(p.cr, 0);
    EXPECT_EQ(p.gamma_cr, 1);
    EXPECT_EQ(p.witness, VertexSet::of({0}));
}

TEST(Solve, MatchesReferenceExhaustively)
{
    for (int n = 1; n <= 6; ++n) {
        for (const auto& a : ref::all_graphs(n)) {
            const Graph g = from_graph6(ref::graph6(a));
            const auto want = ref::profile(a);
            const auto got = solve(g);
            ASSERT_EQ(got.cr, want.cr) << ref::graph6(a);
            ASSERT_EQ(got.gamma_cr, want.gamma) << ref::graph6(a);
            ASSERT_EQ(got.witness, set_of(want.witness)) << ref::graph6(a);
            ASSERT_EQ(got.gamma_set_count, want.sets) << ref::graph6(a);
        }
    }
}

TEST(Solve, MatchesReferenceOnRandomGraphs)
{
    std::mt19937_64 rng{20261015};
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 7 + trial % 8;
        const Graph g = random_graph(n, rng);
        const auto want = ref::profile(ref::matrix_of(g));
        const auto got = solve(g);
        EXPECT_EQ(got.cr, want.cr) << to_graph6(g);
        EXPECT_EQ(got.gamma_cr, want.gamma) << to_graph6(g);
        EXPECT_EQ(got.witness, set_of(want.witness)) << to_graph6(g);
        EXPECT_EQ(got.gamma_set_count, want.sets) << to_graph6(g);
    }
}

TEST(Solve, ParallelMatchesSequential)
{
    std::mt19937_64 rng{99};
    for (int trial = 0; trial < 6; ++trial) {
        const Graph g = random_graph(18, rng);
        EXPECT_EQ(solve(g, {default_solver_cap, 1}), solve(g, {default_solver_cap, 8}));
    }
}

TEST(Solve, Capacity)
{
    EXPECT_THROW(solve(empty_graph(25)), CapacityError);
    EXPECT_THROW(solve(empty_graph(10), {9, 1}), CapacityError);
    try {
        (void)solve(empty_graph(25));
    }
    catch (const CapacityError& e) {
        EXPECT_NE(std::string{e.what()}.find("24"), std::string::npos);
    }
}

TEST(Solve, CapFromEnvironment)
{
    {
        ScopedEnv env{solver_cap_env, "10"};
        EXPECT_EQ(solver_cap_from_env(), 10);
    }
    {
        ScopedEnv env{solver_cap_env, "33"};
        EXPECT_THROW(solver_cap_from_env(), UsageError);
    }
    {
        ScopedEnv env{solver_cap_env, "ten"};
        EXPECT_THROW(solver_cap_from_env(), UsageError);
    }
    {
        ScopedEnv env{solver_cap_env, ""};
        EXPECT_EQ(solver_cap_from_env(), default_solver_cap);
    }
}

TEST(EnumerateGammaSets, Examples)
{
    EXPECT_EQ(enumerate_gamma_cr_sets(complete_graph(3)),
              (std::vector<VertexSet>{VertexSet::of({0}), VertexSet::of({1}), VertexSet::of({2})}));
    EXPECT_EQ(enumerate_gamma_cr_sets(empty_graph(1)), (std::vector<VertexSet>{VertexSet::of({0})}));

    // Opposite pairs of C4 overdominate the other two vertices, so they tie
    // with the adjacent pairs.
    const auto c4 = enumerate_gamma_cr_sets(cycle_graph(4));
    EXPECT_EQ(c4.size(), 6U);
    for (const auto& s : c4)
        EXPECT_EQ(s.size(), 2);
}

TEST(EnumerateGammaSets, MatchesReference)
{
    for (int n = 1; n <= 5; ++n) {
        for (const auto& a : ref::all_graphs(n)) {
            const auto want = ref::profile(a);
            const auto got = enumerate_gamma_cr_sets(from_graph6(ref::graph6(a)));
            ASSERT_EQ(got.size(), want.gamma_sets.size());
            for (std::size_t i = 0; i < got.size(); ++i)
                ASSERT_EQ(got[i], set_of(want.gamma_sets[i]));
        }
    }
}
