#include <gtest/gtest.h>

#include <set>

#include "qwalk/enumerate.hpp"

using namespace qwalk;

// Connected unlabelled graphs on n vertices and connected rooted graphs,
// as tabulated in the OEIS (A001349 and A126100).
TEST(Enumerate, ConnectedGraphCounts) {
    const std::size_t expected[] = {0, 1, 1, 2, 6, 21, 112};
    for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(connected_graphs(n).size(), expected[n]) << n;
}

TEST(Enumerate, RootedCounts) {
    const std::size_t cumulative[] = {0, 1, 2, 5, 16, 74, 481};
    for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(marked_connected_graphs(n).size(), cumulative[n]) << n;
}

TEST(Enumerate, PairwiseNonIsomorphic) {
    for (std::size_t n = 1; n <= 5; ++n) {
        std::set<std::uint64_t> masks;
        for (const Graph& g : connected_graphs(n)) {
            EXPECT_TRUE(g.connected());
            EXPECT_TRUE(masks.insert(canonical_mask(g)).second);
        }
    }
}

TEST(Enumerate, Orbits) {
    EXPECT_EQ(vertex_orbits(path_graph(4)), (std::vector<std::vector<Vertex>>{{0, 3}, {1, 2}}));
    EXPECT_EQ(vertex_orbits(star_graph(3)), (std::vector<std::vector<Vertex>>{{0}, {1, 2, 3}}));
    EXPECT_EQ(vertex_orbits(cycle_graph(5)).size(), 1u);
}

TEST(Enumerate, CanonicalMaskIsInvariant) {
    Graph relabelled(4);
    relabelled.set_edge(2, 0);
    relabelled.set_edge(0, 3);
    relabelled.set_edge(3, 1);
    EXPECT_EQ(canonical_mask(relabelled), canonical_mask(path_graph(4)));
    EXPECT_NE(canonical_mask(star_graph(3)), canonical_mask(path_graph(4)));
}
