#include <gtest/gtest.h>

#include "qwalk/graph_io.hpp"

using namespace qwalk;
using Code = ParseError::Code;

namespace {

Code code_of(std::string_view text, GraphFormat f) {
    try {
        parse_graph(text, f);
    } catch (const ParseError& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error for: " << text;
    return Code::malformed_line;
}

}  // namespace

TEST(Edgelist, Basic) {
    EXPECT_EQ(parse_graph("2 1\n0 1", GraphFormat::edgelist), path_graph(2));
    EXPECT_EQ(parse_graph("1 0\n", GraphFormat::edgelist), Graph(1));
    const Graph g = parse_graph("3 2\n0 1 2.5\n1 2\nloop 2 -1\n", GraphFormat::edgelist);
    EXPECT_EQ(g.weight(0, 1), 2.5);
    EXPECT_EQ(g.loop(2), -1.0);
}

TEST(Edgelist, Errors) {
    EXPECT_EQ(code_of("", GraphFormat::edgelist), Code::malformed_header);
    EXPECT_EQ(code_of("x 1\n0 1", GraphFormat::edgelist), Code::malformed_header);
    EXPECT_EQ(code_of("0 0\n", GraphFormat::edgelist), Code::malformed_header);
    EXPECT_EQ(code_of("2 1\n0 2", GraphFormat::edgelist), Code::index_out_of_range);
    EXPECT_EQ(code_of("2 2\n0 1 1\n1 0 2", GraphFormat::edgelist), Code::asymmetric_weight);
    EXPECT_EQ(code_of("2 2\n0 1\n0 1", GraphFormat::edgelist), Code::duplicate_edge);
    EXPECT_EQ(code_of("3 2\n0 1", GraphFormat::edgelist), Code::edge_count_mismatch);
    EXPECT_EQ(code_of("2 1\n0 0", GraphFormat::edgelist), Code::malformed_line);
    EXPECT_EQ(code_of("2 1\n0 1 abc", GraphFormat::edgelist), Code::malformed_line);
    EXPECT_EQ(code_of("2 1\n0 1\nloop 0", GraphFormat::edgelist), Code::malformed_line);
}

TEST(Edgelist, ErrorCarriesLine) {
    try {
        parse_graph("3 2\n\n0 1\n0 5\n", GraphFormat::edgelist);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 4u);
    }
}

TEST(Graph6, SingleEdge) {
    EXPECT_EQ(parse_graph("A_", GraphFormat::graph6), path_graph(2));
    EXPECT_EQ(serialize_graph(path_graph(2), GraphFormat::graph6), "A_");
    EXPECT_EQ(parse_graph(">>graph6<<A_\n", GraphFormat::graph6), path_graph(2));
}

TEST(Graph6, KnownEncodings) {
    // Published examples of the format: K4 is "C~", the 5-cycle 0-1-2-3-4 is "Dhc".
    EXPECT_EQ(serialize_graph(complete_graph(4), GraphFormat::graph6), "C~");
    EXPECT_EQ(serialize_graph(cycle_graph(5), GraphFormat::graph6), "Dhc");
    EXPECT_EQ(serialize_graph(Graph(1), GraphFormat::graph6), "@");
}

TEST(Graph6, Errors) {
    EXPECT_EQ(code_of("A", GraphFormat::graph6), Code::invalid_graph6);
    EXPECT_EQ(code_of("A`", GraphFormat::graph6), Code::invalid_graph6);  // padding bit set
    EXPECT_EQ(code_of("?", GraphFormat::graph6), Code::invalid_graph6);
    EXPECT_EQ(code_of("A_ ", GraphFormat::graph6), Code::invalid_graph6);
    EXPECT_THROW(serialize_graph(path_graph(2).with_loop(0, 1), GraphFormat::graph6), ParseError);
}

TEST(Graph6, LargeSizeField) {
    const Graph g = path_graph(70);
    const std::string s = serialize_graph(g, GraphFormat::graph6);
    EXPECT_EQ(s[0], '~');
    EXPECT_EQ(parse_graph(s, GraphFormat::graph6), g);
}

TEST(RoundTrip, RandomCorpus) {
    Rng rng(42);
    for (int i = 0; i < 200; ++i) {
        const Graph g = random_graph(1 + i % 12, 0.4, rng);
        const std::string e = serialize_graph(g, GraphFormat::edgelist);
        EXPECT_EQ(parse_graph(e, GraphFormat::edgelist), g);
        EXPECT_EQ(serialize_graph(parse_graph(e, GraphFormat::edgelist), GraphFormat::edgelist), e);
        const std::string s = serialize_graph(g, GraphFormat::graph6);
        EXPECT_EQ(parse_graph(s, GraphFormat::graph6), g);
        const Graph w = random_integer_weighted(1 + i % 8, 0.5, 4, 3, 0.4, rng);
        EXPECT_EQ(parse_graph(serialize_graph(w, GraphFormat::edgelist), GraphFormat::edgelist), w);
    }
}

TEST(RoundTrip, Canonicalizes) {
    const Graph g = parse_graph("3 2\n2 1\n1 0 1\n", GraphFormat::edgelist);
    EXPECT_EQ(serialize_graph(g, GraphFormat::edgelist), "3 2\n0 1\n1 2\n");
}

TEST(Format, Detection) {
    EXPECT_EQ(detect_format("2 1\n0 1\n"), GraphFormat::edgelist);
    EXPECT_EQ(detect_format("A_\n"), GraphFormat::graph6);
    EXPECT_EQ(parse_format_name("graph6"), GraphFormat::graph6);
    EXPECT_THROW(parse_format_name("dot"), std::invalid_argument);
}
