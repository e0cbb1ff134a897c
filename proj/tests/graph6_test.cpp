#include <gtest/gtest.h>

#include "crdom/builders.hpp"
#include "crdom/graph6.hpp"
#include "support/reference.hpp"

using namespace crdom;

TEST(Graph6, KnownEncodings)
{
    EXPECT_EQ(to_graph6(complete_graph(3)), "Bw");
    EXPECT_EQ(to_graph6(empty_graph(1)), "@");
    EXPECT_EQ(to_graph6(cycle_graph(4)), "Cl");

    EXPECT_EQ(from_graph6("Bw"), complete_graph(3));
    EXPECT_EQ(from_graph6("@"), empty_graph(1));
    EXPECT_EQ(from_graph6("Cl"), cycle_graph(4));
}

TEST(Graph6, KnownEncodingsMatchReference)
{
    EXPECT_EQ(ref::graph6(ref::matrix_of(complete_graph(3))), "Bw");
    EXPECT_EQ(ref::graph6(ref::matrix_of(empty_graph(1))), "@");
    EXPECT_EQ(ref::graph6(ref::matrix_of(cycle_graph(4))), "Cl");
}

TEST(Graph6, HeaderAndLineEnding)
{
    EXPECT_EQ(from_graph6(">>graph6<<Bw"), complete_graph(3));
    EXPECT_EQ(from_graph6("Cl\n"), cycle_graph(4));
    EXPECT_EQ(from_graph6("Cl\r\n"), cycle_graph(4));
}

TEST(Graph6, ExhaustiveRoundTripUpToFive)
{
    for (int n = 1; n <= 5; ++n) {
        for (const auto& a : ref::all_graphs(n)) {
            const std::string line = ref::graph6(a);
            const Graph g = from_graph6(line);
            EXPECT_EQ(ref::matrix_of(g), a);
            EXPECT_EQ(to_graph6(g), line);
        }
    }
}

TEST(Graph6, LargeOrder)
{
    const Graph g = with_isolated(complete_graph(30), 32);
    EXPECT_EQ(from_graph6(to_graph6(g)), g);
    EXPECT_EQ(to_graph6(g), ref::graph6(ref::matrix_of(g)));
}

namespace {

std::size_t fault_offset(std::string_view line)
{
    try {
        (void)from_graph6(line);
    }
    catch (const ParseError& e) {
        return e.offset();
    }
    ADD_FAILURE() << "no parse error for '" << line << "'";
    return std::string_view::npos;
}

} // namespace

TEST(Graph6, Errors)
{
    EXPECT_EQ(fault_offset(""), 0U);
    EXPECT_EQ(fault_offset("~?@"), 0U);          // multi-byte order
    EXPECT_EQ(fault_offset("?"), 0U);            // order 0
    EXPECT_EQ(fault_offset(" w"), 0U);           // below range
    EXPECT_EQ(fault_offset("B "), 1U);           // body byte below range
    EXPECT_EQ(fault_offset("C"), 1U);            // truncated body
    EXPECT_EQ(fault_offset("Bx"), 1U);           // padding bit set
    EXPECT_EQ(fault_offset("Bwx"), 2U);          // trailing byte
    EXPECT_EQ(fault_offset(">>graph6<<"), 10U);  // header only
}

TEST(Graph6, ErrorMessageNamesOffset)
{
    try {
        (void)from_graph6("Bwx");
        FAIL();
    }
    catch (const ParseError& e) {
        EXPECT_NE(std::string{e.what()}.find("at byte 2"), std::string::npos);
    }
}
