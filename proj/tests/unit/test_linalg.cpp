#include <gtest/gtest.h>

#include <cmath>

#include "qwalk/charpoly.hpp"
#include "qwalk/linalg.hpp"

using namespace qwalk;

TEST(Matrix, Basics) {
    const Matrix a = Matrix::adjacency(path_graph(3));
    EXPECT_TRUE(a.is_symmetric());
    EXPECT_EQ(a.norm_inf(), 2.0);
    EXPECT_EQ(a.max_abs(), 1.0);
    const Matrix a2 = a * a;
    EXPECT_EQ(a2(0, 2), 1.0);
    EXPECT_EQ(a2(1, 1), 2.0);
    EXPECT_EQ(max_abs_diff(a2.transpose(), a2), 0.0);
    EXPECT_EQ(Matrix::unit_projector(3, 1)(1, 1), 1.0);
    EXPECT_EQ(a.apply(std::vector<double>{1, 0, 0}), (std::vector<double>{0, 1, 0}));
    EXPECT_DOUBLE_EQ(norm(std::vector<double>{3, 4}), 5.0);
}

TEST(Jacobi, PathEigenvalues) {
    for (std::size_t n = 1; n <= 12; ++n) {
        const auto ev = eigenvalues_desc(Matrix::adjacency(path_graph(n)));
        for (std::size_t k = 1; k <= n; ++k) EXPECT_NEAR(ev[k - 1], 2 * std::cos(k * M_PI / (n + 1)), 1e-12);
    }
}

TEST(Jacobi, AgreesWithCharpolyRoots) {
    Rng rng(5);
    for (int i = 0; i < 60; ++i) {
        const Graph g = random_integer_weighted(2 + i % 9, 0.5, 3, 2, 0.4, rng);
        const auto ev = eigenvalues_desc(Matrix::adjacency(g));
        // Every distinct root of phi is hit.
        for (double r : real_roots(charpoly(g))) {
            double best = 1e300;
            for (double x : ev) best = std::min(best, std::abs(x - r));
            EXPECT_LT(best, 1e-9);
        }
    }
}

TEST(Jacobi, OrthonormalEigenvectors) {
    Rng rng(8);
    for (int i = 0; i < 30; ++i) {
        const Graph g = random_connected_graph(2 + i % 10, 0.4, rng);
        const Matrix a = Matrix::adjacency(g);
        const SymmetricEigen e = jacobi_eigen(a);
        const Matrix& v = e.vectors;
        EXPECT_LT(max_abs_diff(v.transpose() * v, Matrix::identity(g.size())), 1e-12);
        Matrix d(g.size(), g.size());
        for (std::size_t k = 0; k < g.size(); ++k) d(k, k) = e.values[k];
        EXPECT_LT(max_abs_diff(v * d * v.transpose(), a), 1e-12);
    }
}

TEST(Jacobi, RejectsAsymmetricAndCapsSweeps) {
    Matrix a(2, 2);
    a(0, 1) = 1.0;
    EXPECT_THROW(jacobi_eigen(a), std::invalid_argument);
    EXPECT_THROW(jacobi_eigen(Matrix::adjacency(cycle_graph(5)), 0), ConvergenceError);
    a(1, 0) = 1.0 + 1e-15;
    EXPECT_NO_THROW(jacobi_eigen(a));
}
