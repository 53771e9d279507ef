#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qwalk/charpoly.hpp"

using namespace qwalk;

namespace {

IntPoly linear(long root) { return IntPoly{-root, 1}; }

IntPoly power(const IntPoly& p, int k) {
    IntPoly r = IntPoly::one();
    for (int i = 0; i < k; ++i) r = r * p;
    return r;
}

// (A^k)_aa for k < terms, exact.
std::vector<mpz_class> diagonal_walks(const Graph& g, Vertex a, std::size_t terms) {
    const std::size_t n = g.size();
    std::vector<mpz_class> v(n, 0), out;
    v[a] = 1;
    for (std::size_t k = 0; k < terms; ++k) {
        out.push_back(v[a]);
        std::vector<mpz_class> w(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (g.weight(i, j) != 0) w[i] += mpz_class(static_cast<long>(g.weight(i, j))) * v[j];
        v = std::move(w);
    }
    return out;
}

}  // namespace

TEST(Bareiss, Determinants) {
    EXPECT_EQ(bareiss_determinant({}, 0), 1);
    EXPECT_EQ(bareiss_determinant({2, 1, 1, 3}, 2), 5);
    EXPECT_EQ(bareiss_determinant({0, 1, 1, 0}, 2), -1);
    EXPECT_EQ(bareiss_determinant({1, 2, 2, 4}, 2), 0);
    EXPECT_THROW(bareiss_determinant({1, 2, 3}, 2), std::invalid_argument);
}

TEST(Charpoly, ClosedForms) {
    EXPECT_EQ(charpoly(Graph(1)), IntPoly({0, 1}));
    EXPECT_EQ(charpoly(path_graph(2)), IntPoly({-1, 0, 1}));
    EXPECT_EQ(charpoly(path_graph(3)), IntPoly({0, -2, 0, 1}));
    for (std::size_t n = 2; n <= 8; ++n)
        EXPECT_EQ(charpoly(complete_graph(n)), linear(n - 1) * power(linear(-1), n - 1)) << n;
    for (std::size_t k = 1; k <= 6; ++k)
        EXPECT_EQ(charpoly(star_graph(k)), power(IntPoly::t(), k - 1) * IntPoly({-static_cast<long>(k), 0, 1}));
    // C4: eigenvalues 2, 0, 0, -2.
    EXPECT_EQ(charpoly(cycle_graph(4)), linear(2) * linear(-2) * power(IntPoly::t(), 2));
}

TEST(Charpoly, PathRecurrence) {
    IntPoly prev = IntPoly::one(), cur = IntPoly::t();
    for (std::size_t n = 2; n <= 12; ++n) {
        IntPoly next = IntPoly::t() * cur - prev;
        prev = cur;
        cur = next;
        EXPECT_EQ(charpoly(path_graph(n)), cur);
    }
}

TEST(Charpoly, MatchesBareissAndLeibnizOracles) {
    Rng rng(17);
    for (int i = 0; i < 120; ++i) {
        const Graph g = random_integer_weighted(1 + i % 8, 0.5, 3, 2, 0.4, rng);
        const IntPoly p = charpoly(g);
        EXPECT_EQ(p, oracle::charpoly_bareiss(g));
        if (g.size() <= 6) EXPECT_EQ(p, oracle::charpoly_leibniz(g));
    }
}

TEST(Charpoly, RejectsFractionalWeights) {
    Graph g(2);
    g.set_edge(0, 1, 0.5);
    EXPECT_THROW(charpoly(g), std::invalid_argument);
}

TEST(Charpoly, DeletedVertices) {
    const Graph p4 = path_graph(4);
    EXPECT_EQ(charpoly_deleted(p4, {0}), charpoly(path_graph(3)));
    EXPECT_EQ(charpoly_deleted(p4, {1}), IntPoly::t() * charpoly(path_graph(2)));
    EXPECT_EQ(charpoly_deleted(p4, {0, 1, 2, 3}), IntPoly::one());
    EXPECT_THROW(charpoly_deleted(p4, {4}), std::out_of_range);
}

TEST(Charpoly, DerivativeIsSumOfVertexDeleted) {
    Rng rng(19);
    for (int i = 0; i < 60; ++i) {
        const Graph g = random_integer_weighted(1 + i % 9, 0.4, 2, 2, 0.3, rng);
        IntPoly sum;
        for (Vertex v = 0; v < g.size(); ++v) sum += charpoly_deleted(g, {v});
        EXPECT_EQ(sum, charpoly(g).derivative());
    }
}

TEST(PathSum, EqualsAdjugateEntry) {
    Rng rng(23);
    for (int i = 0; i < 80; ++i) {
        const Graph g = random_integer_weighted(2 + i % 7, 0.5, 3, 2, 0.3, rng);
        const Vertex a = 0, b = 1 + i % (g.size() - 1);
        EXPECT_EQ(path_sum_poly(g, a, b), oracle::adjugate_entry(g, a, b));
    }
}

TEST(PathSum, SingleEdge) { EXPECT_EQ(path_sum_poly(path_graph(2), 0, 1), IntPoly::one()); }

TEST(CutVertexFormulas, OneSum) {
    Rng rng(29);
    for (int i = 0; i < 60; ++i) {
        const Graph y1 = random_integer_weighted(1 + i % 5, 0.5, 2, 1, 0.3, rng);
        const Graph y2 = random_integer_weighted(1 + (i / 5) % 5, 0.5, 2, 1, 0.3, rng);
        const Vertex a = i % y1.size(), b = (2 * i) % y2.size();
        const Glued z = one_sum(y1, a, y2, b);
        const auto r1 = rooted_charpolys(y1, a), r2 = rooted_charpolys(y2, b);
        EXPECT_EQ(one_sum_charpoly(r1.whole, r1.deleted, r2.whole, r2.deleted), charpoly(z.graph));
    }
}

TEST(CutVertexFormulas, Bridges) {
    Rng rng(31);
    for (int i = 0; i < 60; ++i) {
        const Graph y1 = random_connected_graph(1 + i % 5, 0.5, rng);
        const Graph y2 = random_connected_graph(1 + (i / 5) % 5, 0.5, rng);
        const Vertex a = i % y1.size(), b = (3 * i) % y2.size();
        const auto r1 = rooted_charpolys(y1, a), r2 = rooted_charpolys(y2, b);
        EXPECT_EQ(bridge_charpoly_p2(r1.whole, r1.deleted, r2.whole, r2.deleted),
                  charpoly(compose_bridge({y1, a, y2, b, 2}).graph));
        EXPECT_EQ(bridge_charpoly_p3(r1.whole, r1.deleted, r2.whole, r2.deleted),
                  charpoly(compose_bridge({y1, a, y2, b, 3}).graph));
    }
}

TEST(CutVertexFormulas, LoopsAndPendant) {
    Rng rng(37);
    for (int i = 0; i < 40; ++i) {
        const Graph y = random_connected_graph(1 + i % 6, 0.5, rng);
        const Vertex a = i % y.size();
        const auto r = rooted_charpolys(y, a);
        for (int s : {1, -1})
            EXPECT_EQ(loop_adjusted_charpoly(r.whole, r.deleted, s),
                      charpoly(y.with_loop(a, y.loop(a) + s)));
        // A pendant of weight w contributes -w^2 phi(Y \ a); compare against w = 1.
        const IntPoly unit = charpoly(attach_pendant(y, a, 1.0));
        EXPECT_EQ(pendant_sqrt2_charpoly(r.whole, r.deleted), unit - r.deleted);
    }
    EXPECT_THROW(loop_adjusted_charpoly(IntPoly::t(), IntPoly::one(), 2), std::invalid_argument);
}

TEST(WalkSeries, CoefficientsCountClosedWalks) {
    Rng rng(41);
    for (int i = 0; i < 50; ++i) {
        const Graph g = random_integer_weighted(1 + i % 7, 0.5, 2, 1, 0.3, rng);
        const Vertex a = i % g.size();
        const auto series = power_series(closed_walk_series(g, a), 12);
        const auto walks = diagonal_walks(g, a, 12);
        for (std::size_t k = 0; k < 12; ++k) EXPECT_EQ(series[k], mpq_class(walks[k])) << k;
    }
}

TEST(WalkSeries, ReturnWalksAddOverOneSums) {
    Rng rng(43);
    for (int i = 0; i < 40; ++i) {
        const Graph y1 = random_connected_graph(1 + i % 5, 0.5, rng);
        const Graph y2 = random_connected_graph(1 + (i / 3) % 5, 0.5, rng);
        const Glued z = one_sum(y1, 0, y2, y2.size() - 1);
        EXPECT_EQ(return_walk_gf(z.graph, z.vertex), return_walk_gf(y1, 0) + return_walk_gf(y2, y2.size() - 1));
    }
}

TEST(WalkSeries, WalkGfIsReducedRatio) {
    const RationalFunction f = walk_gf(path_graph(3), 0);
    // phi(P2)/phi(P3) = (t^2-1)/(t^3-2t)
    EXPECT_EQ(f, RationalFunction(IntPoly({-1, 0, 1}), IntPoly({0, -2, 0, 1})));
    EXPECT_THROW(power_series(RationalFunction(IntPoly::one(), IntPoly::t()), 3), std::domain_error);
}

TEST(Poles, SimpleAndLocations) {
    EXPECT_TRUE(poles_simple(IntPoly::one(), IntPoly({-2, 0, 1})));
    EXPECT_FALSE(poles_simple(IntPoly::one(), IntPoly({0, 0, 1})));
    EXPECT_TRUE(poles_simple(IntPoly::t(), IntPoly({0, 0, 1})));
    const auto poles = pole_locations(IntPoly({-1, 1}), IntPoly({-1, 1}) * IntPoly({-3, 0, 1}));
    ASSERT_EQ(poles.size(), 2u);
    EXPECT_NEAR(poles[1], std::sqrt(3.0), 1e-12);
}

TEST(WalkEquivalence, SymmetricRoots) {
    const Graph p3 = path_graph(3);
    const auto r0 = rooted_charpolys(p3, 0), r2 = rooted_charpolys(p3, 2), r1 = rooted_charpolys(p3, 1);
    EXPECT_TRUE(walk_equivalent(r0.deleted, r0.whole, r2.deleted, r2.whole));
    EXPECT_FALSE(walk_equivalent(r0.deleted, r0.whole, r1.deleted, r1.whole));
}
