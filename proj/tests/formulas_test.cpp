#include <gtest/gtest.h>

#include "crdom/builders.hpp"
#include "crdom/formulas.hpp"

using namespace crdom;

namespace {

::testing::AssertionResult is_value(const ExtremalValue& v, std::int64_t want)
{
    if (v.status == ValueStatus::value && v.value == want)
        return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure() << "got " << status_name(v.status) << " " << v.value.value_or(-1);
}

bool is_zero(const ExtremalValue& v) { return v.status == ValueStatus::zero_by_nonexistence && v.value == 0; }

} // namespace

TEST(MaxEdges, Examples)
{
    EXPECT_TRUE(is_value(max_edges(5, 0, 2), 6));
    EXPECT_TRUE(is_value(max_edges(5, 1, 2), 6));
    EXPECT_TRUE(is_value(max_edges(6, 4, 2), 12));
    EXPECT_TRUE(is_value(max_edges(7, 2, 4), 7));
    EXPECT_TRUE(is_value(max_edges(7, 2, 3), 12));
    EXPECT_TRUE(is_zero(max_edges(9, 1, 7)));
    EXPECT_EQ(max_edges(9, 1, 7).basis, basis::cr1_bound);
}

TEST(MaxEdges, Cr2Cases)
{
    EXPECT_TRUE(is_value(max_edges(7, 2, 2), 16));
    EXPECT_TRUE(is_value(max_edges(7, 2, 5), 4));
    EXPECT_TRUE(is_zero(max_edges(7, 2, 6)));
    // n - r - 2 >= r adds one edge.
    EXPECT_TRUE(is_value(max_edges(12, 2, 3), 2 + 45 + 1));
    EXPECT_TRUE(is_value(max_edges(12, 2, 6), 8 + 21));
}

TEST(MaxEdges, ErrorsAndCoverage)
{
    EXPECT_THROW(max_edges(1, 0, 1), DomainError);
    EXPECT_THROW(max_edges(6, 7, 2), DomainError);
    EXPECT_THROW(max_edges(6, 0, 0), DomainError);
    EXPECT_THROW(max_edges(6, 0, 7), DomainError);
    EXPECT_EQ(max_edges(9, 3, 4).status, ValueStatus::not_covered);
    EXPECT_TRUE(is_zero(max_edges(7, 5, 2)));  // above the parity bound
    EXPECT_TRUE(is_zero(max_edges(7, 2, 1)));  // gamma_CR >= 2 once CR > 0
}

TEST(MinEdges, Examples)
{
    EXPECT_TRUE(is_value(min_edges(7, 0, 3), 4));
    EXPECT_TRUE(is_value(min_edges(6, 1, 3), 4));
    EXPECT_EQ(min_edges(5, 2, 3).status, ValueStatus::not_covered);
    EXPECT_FALSE(min_edges(5, 2, 3).value.has_value());
    EXPECT_TRUE(is_zero(min_edges(8, 1, 6)));
}

TEST(MaxGamma, Examples)
{
    EXPECT_TRUE(is_value(max_gamma(9, 0, 10), 5));
    EXPECT_TRUE(is_value(max_gamma(8, 1, 12), 4));
    EXPECT_TRUE(is_value(max_gamma(8, 2, 4), 6));
    EXPECT_TRUE(is_value(max_gamma(10, 2, 20), 5));
    EXPECT_TRUE(is_value(max_gamma(6, 0, 0), 6));
    EXPECT_THROW(max_gamma(6, 0, 16), DomainError);
    EXPECT_THROW(max_gamma(6, 0, -1), DomainError);
}

TEST(MaxGamma, Dn2mSmallTable)
{
    const int want[] = {0, 0, 0, 0, 6, 5, 5, 5, 4, 4, 4, 4};
    for (int m = 0; m <= 11; ++m) {
        const auto v = max_gamma(8, 2, m);
        EXPECT_EQ(v.value, want[m]) << m;
        EXPECT_EQ(v.status, m <= 3 ? ValueStatus::zero_by_nonexistence : ValueStatus::value) << m;
    }
    EXPECT_EQ(max_gamma(8, 2, 14).basis, basis::max_gamma_cr2_small);
    EXPECT_EQ(max_gamma(8, 2, 15).basis, basis::max_gamma_cr2_large);
}

TEST(MaxGamma, AboveUniversalBoundIsZero)
{
    for (int n = 5; n <= 12; ++n)
        for (int k = 1; k <= max_cr(n); ++k) {
            const auto top = universal_max_edges(n, k);
            for (std::int64_t m = top + 1; m <= choose2(n); ++m) {
                EXPECT_TRUE(is_zero(max_gamma(n, k, m))) << n << " " << k << " " << m;
                EXPECT_TRUE(is_zero(min_gamma(n, k, m))) << n << " " << k << " " << m;
            }
        }
}

TEST(MinGamma, Examples)
{
    EXPECT_TRUE(is_value(min_gamma(10, 0, 4), 6));
    EXPECT_TRUE(is_value(min_gamma(8, 1, 5), 4));
    EXPECT_TRUE(is_zero(min_gamma(8, 1, 25)));
    EXPECT_TRUE(is_value(min_gamma(8, 1, 12), 2));
    EXPECT_TRUE(is_value(min_gamma(10, 0, 9), 1));
}

TEST(Bounds, Examples)
{
    // C(0,2) + (r-2)(k-b) + C(8,2) + floor((k-b)/2)
    EXPECT_EQ(bbnd_upper_bound(10, 2, 3, 0), 0 + 2 + 28 + 1);
    EXPECT_EQ(bbnd_upper_bound(10, 2, 3, 2), 29);
    EXPECT_THROW(bbnd_upper_bound(10, 2, 2, 0), DomainError);
    EXPECT_THROW(bbnd_upper_bound(10, 2, 3, 3), DomainError);

    EXPECT_EQ(a_bracket(10, 2), 36);
    EXPECT_EQ(a_bracket(10, 5), 21);
    EXPECT_EQ(a_bracket(10, 6), 18);
    EXPECT_THROW(a_bracket(10, 9), DomainError);

    EXPECT_EQ(universal_max_edges(7, 2), 16);
    EXPECT_EQ(universal_max_edges(6, 4), 12);
    EXPECT_EQ(universal_max_edges(5, 0), 6);
    EXPECT_THROW(universal_max_edges(7, 5), DomainError);
    EXPECT_THROW(universal_max_edges(4, 0), DomainError);
}

TEST(Bounds, UniversalDominatesEveryCoveredM)
{
    for (int n = 5; n <= 20; ++n)
        for (int k = 0; k <= max_cr(n); ++k)
            for (int r = 2; r <= n; ++r) {
                const auto v = max_edges(n, k, r);
                EXPECT_TRUE(!v.covered() || *v.value <= universal_max_edges(n, k)) << n << " " << k << " " << r;
            }
}

TEST(Formulas, CoveredMeansMinAtMostMax)
{
    for (int n = 5; n <= 20; ++n)
        for (int k = 0; k <= 1; ++k)
            for (int r = 1; r < n; ++r) {
                const auto hi = max_edges(n, k, r);
                const auto lo = min_edges(n, k, r);
                ASSERT_EQ(hi.status, lo.status);
                EXPECT_LE(*lo.value, *hi.value);
            }
}

TEST(Formulas, KZeroMonotone)
{
    for (int n = 2; n <= 30; ++n) {
        for (int r = 2; r < n; ++r) {
            EXPECT_LT(*max_edges(n, 0, r).value, *max_edges(n, 0, r - 1).value);
            EXPECT_LT(*min_edges(n, 0, r).value, *min_edges(n, 0, r - 1).value);
        }
        for (std::int64_t m = 1; m <= choose2(n); ++m) {
            EXPECT_LE(*max_gamma(n, 0, m).value, *max_gamma(n, 0, m - 1).value);
            EXPECT_LE(*min_gamma(n, 0, m).value, *max_gamma(n, 0, m).value);
        }
    }
}

TEST(Formulas, Dn1rBracketsPartitionTheirRange)
{
    for (int n = 5; n <= 20; ++n) {
        for (std::int64_t m = n + 2; m <= choose2(n - 1); ++m) {
            int hits = 0;
            for (std::int64_t r = 2; r <= n - 4; ++r)
                if (choose2(n - r - 1) + (n - 2) < m && m <= choose2(n - r) + (n - 2))
                    ++hits;
            EXPECT_EQ(hits, 1) << n << " " << m;
            EXPECT_EQ(max_gamma(n, 1, m).status, ValueStatus::value) << n << " " << m;
        }
    }
}

TEST(Formulas, Dn2mLargeBracketsPartitionTheirRange)
{
    for (int n = 8; n <= 20; ++n) {
        const int pivot = (n - 2) / 2;
        for (std::int64_t m = 2 * (n - 6) + 11; m <= universal_max_edges(n, 2); ++m) {
            int hits = 0;
            for (int r = 2; r <= n - 5; ++r) {
                const std::int64_t lo = a_bracket(n, r + 1) + (r < pivot ? 1 : 0);
                const std::int64_t hi = a_bracket(n, r) + (r <= pivot ? 1 : 0);
                if (lo < m && m <= hi)
                    ++hits;
            }
            EXPECT_EQ(hits, 1) << n << " " << m;
            const auto v = max_gamma(n, 2, m);
            EXPECT_EQ(v.status, ValueStatus::value) << n << " " << m;
            EXPECT_EQ(v.basis, basis::max_gamma_cr2_large);
        }
    }
}

TEST(Formulas, EvaluateDispatches)
{
    EXPECT_EQ(evaluate({Quantity::max_edges, 7, 2, 4}), max_edges(7, 2, 4));
    EXPECT_EQ(evaluate({Quantity::min_edges, 7, 0, 3}), min_edges(7, 0, 3));
    EXPECT_EQ(evaluate({Quantity::max_gamma, 9, 0, 10}), max_gamma(9, 0, 10));
    EXPECT_EQ(evaluate({Quantity::min_gamma, 8, 1, 5}), min_gamma(8, 1, 5));
    EXPECT_EQ(parse_quantity("D"), Quantity::max_gamma);
    EXPECT_EQ(parse_quantity("x"), std::nullopt);
}

TEST(CrMaxCharacterization, Examples)
{
    EXPECT_TRUE(cr_max_characterization(cycle_graph(4)));
    EXPECT_TRUE(cr_max_characterization(cocktail_party_graph(6)));
    EXPECT_FALSE(cr_max_characterization(complete_graph(5)));
    EXPECT_FALSE(cr_max_characterization(path_graph(4)));
    EXPECT_THROW(cr_max_characterization(complete_graph(3)), DomainError);
}
