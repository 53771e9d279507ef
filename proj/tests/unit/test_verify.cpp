#include <gtest/gtest.h>

#include <cmath>

#include "qwalk/verify.hpp"

using namespace qwalk;

namespace {

Matrix random_symmetric(std::size_t n, Rng& rng) {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = u(rng);
    return m;
}

}  // namespace

TEST(Interlacing, CauchyOnDeletion) {
    Rng rng(1);
    for (int i = 0; i < 30; ++i) {
        const Graph g = random_connected_graph(2 + i % 8, 0.5, rng);
        const Matrix a = Matrix::adjacency(g);
        for (Vertex v = 0; v < g.size(); ++v) EXPECT_TRUE(check_cauchy(a, deletion_isometry(g.size(), v)));
    }
}

TEST(Interlacing, CauchyDetectsViolationAndBadIsometry) {
    const Matrix a = Matrix::adjacency(path_graph(3));
    // Negative slack demands strict inequalities that equal eigenvalues break.
    EXPECT_FALSE(check_cauchy(a, deletion_isometry(3, 1), -1.0));
    Matrix s(3, 2);
    s(0, 0) = 2.0;
    s(1, 1) = 1.0;
    EXPECT_THROW(check_cauchy(a, s), std::invalid_argument);
}

TEST(Interlacing, WeylKyFanLoops) {
    Rng rng(2);
    for (int i = 0; i < 30; ++i) {
        const std::size_t n = 2 + i % 7;
        const Matrix a = random_symmetric(n, rng), b = random_symmetric(n, rng);
        EXPECT_TRUE(check_weyl(a, b));
        EXPECT_TRUE(check_kyfan(a, b));
        EXPECT_TRUE(check_loop_monotonicity(a));
    }
    const Matrix a = Matrix::adjacency(path_graph(3));
    EXPECT_FALSE(check_kyfan(a, a, -1.0));
}

TEST(Quotient, StarCells) {
    const auto q = equitable_quotient(star_graph(3), {{0}, {1, 2, 3}});
    EXPECT_NEAR(q.quotient(0, 1), std::sqrt(3.0), 1e-14);
    EXPECT_NEAR(q.quotient(1, 1), 0.0, 1e-14);
    const auto ev = eigenvalues_desc(q.quotient);
    EXPECT_NEAR(ev[0], std::sqrt(3.0), 1e-12);
    EXPECT_NEAR(ev[1], -std::sqrt(3.0), 1e-12);
}

TEST(Quotient, LoopsCount) {
    const auto q = equitable_quotient(cycle_graph(4).with_loop(0, 1).with_loop(1, 1).with_loop(2, 1).with_loop(3, 1),
                                      {{0, 1, 2, 3}});
    EXPECT_NEAR(q.quotient(0, 0), 3.0, 1e-14);
}

TEST(Quotient, Rejections) {
    EXPECT_THROW(equitable_quotient(path_graph(4), {{0, 1}, {2, 3}}), NotEquitableError);
    EXPECT_THROW(equitable_quotient(path_graph(4), {{0, 1}, {2}}), std::invalid_argument);
    EXPECT_THROW(equitable_quotient(path_graph(4), {{0, 1}, {1, 2, 3}}), std::invalid_argument);
}

TEST(Correspondence, P2Symmetric) {
    for (const Graph& y : {Graph(1), path_graph(2), path_graph(3), star_graph(3), cycle_graph(4)}) {
        const auto r = verify_support_correspondence_p2(y, 0, y, 0);
        EXPECT_TRUE(r.passed);
        for (const auto& p : r.problems) ADD_FAILURE() << p;
    }
}

TEST(Correspondence, P3Symmetric) {
    for (const Graph& y : {Graph(1), path_graph(2), path_graph(3), star_graph(3), cycle_graph(4)}) {
        const auto r = verify_support_correspondence_p3(y, 0, y, 0);
        EXPECT_TRUE(r.passed);
        for (const auto& p : r.problems) ADD_FAILURE() << p;
        for (double x : r.plus) EXPECT_GT(std::abs(x), 1e-9);
    }
}

TEST(Correspondence, RequiresWalkEquivalence) {
    EXPECT_THROW(verify_support_correspondence_p2(path_graph(2), 0, path_graph(3), 0), std::invalid_argument);
    EXPECT_THROW(verify_support_correspondence_p3(path_graph(3), 0, path_graph(3), 1), std::invalid_argument);
}

TEST(DoubleStarQuotient, Relations) {
    for (std::size_t k = 0; k <= 4; ++k)
        for (std::size_t n = k + 1; n <= 7; ++n) {
            if ((n * k) % 2) continue;
            const auto r = verify_double_star_quotient_relations(k, n);
            EXPECT_TRUE(r.passed()) << k << " " << n;
        }
}

TEST(SameValues, Basics) {
    EXPECT_TRUE(same_values({1.0, 2.0}, {2.0, 1.0 + 1e-12}, 1e-9));
    EXPECT_FALSE(same_values({1.0, 2.0}, {2.0}, 1e-9));
    EXPECT_FALSE(same_values({1.0, 2.0}, {2.0, 1.1}, 1e-9));
}
