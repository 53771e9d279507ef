#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "qwalk/charpoly.hpp"
#include "qwalk/enumerate.hpp"
#include "qwalk/spectral.hpp"

using namespace qwalk;

namespace {

const double kRt2 = std::sqrt(2.0);

void expect_resolution(const SpectralDecomposition& dec, const Matrix& a, double tol) {
    const std::size_t n = a.rows();
    Matrix sum(n, n), weighted(n, n);
    for (std::size_t r = 0; r < dec.eigenvalues.size(); ++r) {
        const Matrix& e = dec.projectors[r];
        sum += e;
        weighted += e * dec.eigenvalues[r];
        EXPECT_LT(max_abs_diff(e * e, e), tol);
        for (std::size_t s = r + 1; s < dec.eigenvalues.size(); ++s)
            EXPECT_LT((e * dec.projectors[s]).max_abs(), tol);
    }
    EXPECT_LT(max_abs_diff(sum, Matrix::identity(n)), tol);
    EXPECT_LT(max_abs_diff(weighted, a), tol * std::max(1.0, a.norm_inf()));
}

}  // namespace

TEST(Decompose, P2) {
    const auto dec = decompose(path_graph(2));
    ASSERT_EQ(dec.eigenvalues.size(), 2u);
    EXPECT_NEAR(dec.eigenvalues[0], 1.0, 1e-14);
    EXPECT_NEAR(dec.eigenvalues[1], -1.0, 1e-14);
    EXPECT_NEAR(dec.entry(0, 0, 1), 0.5, 1e-14);
    EXPECT_NEAR(dec.entry(1, 0, 1), -0.5, 1e-14);
}

TEST(Decompose, GroupsMultipleEigenvalues) {
    const auto dec = decompose(complete_graph(5));
    ASSERT_EQ(dec.eigenvalues.size(), 2u);
    EXPECT_EQ(dec.multiplicities, (std::vector<std::size_t>{1, 4}));
    EXPECT_NEAR(dec.eigenvalues[1], -1.0, 1e-12);
    EXPECT_NEAR(dec.entry(0, 2, 3), 0.2, 1e-12);
}

TEST(Decompose, ResolutionOfIdentityRandom) {
    Rng rng(101);
    for (int i = 0; i < 60; ++i) {
        const Graph g = random_integer_weighted(1 + i % 10, 0.5, 3, 2, 0.3, rng);
        const auto dec = decompose(g);
        expect_resolution(dec, Matrix::adjacency(g), 1e-10);
        // Number of distinct eigenvalues equals the squarefree degree of phi.
        EXPECT_EQ(static_cast<long>(dec.eigenvalues.size()), squarefree_part(charpoly(g)).degree());
    }
}

TEST(Decompose, CustomTolerance) {
    Matrix a(2, 2);
    a(0, 0) = 1.0;
    a(1, 1) = 1.0 + 1e-6;
    EXPECT_EQ(decompose(a).eigenvalues.size(), 2u);
    EXPECT_EQ(decompose(a, 1e-5).eigenvalues.size(), 1u);
    EXPECT_NEAR(default_grouping_tolerance(Matrix::adjacency(complete_graph(4))), 3e-9, 1e-20);
}

TEST(Support, P3Ends) {
    const auto dec = decompose(path_graph(3));
    const auto s0 = support(dec, 0);
    ASSERT_EQ(s0.size(), 3u);
    EXPECT_NEAR(s0[0], kRt2, 1e-12);
    EXPECT_NEAR(s0[1], 0.0, 1e-12);
    // Middle vertex misses the zero eigenvalue.
    EXPECT_EQ(support(dec, 1).size(), 2u);
}

TEST(Support, NormsMatchDiagonal) {
    const auto dec = decompose(cycle_graph(6));
    for (std::size_t r = 0; r < dec.eigenvalues.size(); ++r)
        EXPECT_NEAR(dec.support_norm(r, 2), norm(dec.project(r, 2)), 1e-12);
}

TEST(Signature, P3EndsAlternate) {
    const auto sig = support_signature(decompose(path_graph(3)), 0, 2);
    EXPECT_TRUE(sig.strongly_cospectral);
    ASSERT_EQ(sig.plus().size(), 2u);
    ASSERT_EQ(sig.minus().size(), 1u);
    EXPECT_NEAR(sig.minus()[0], 0.0, 1e-12);
    EXPECT_NEAR(sig.plus()[0], kRt2, 1e-12);
}

TEST(Signature, StarLeavesAreNotStrong) {
    const auto sig = support_signature(decompose(star_graph(3)), 1, 2);
    EXPECT_FALSE(sig.strongly_cospectral);
}

TEST(Cospectral, ExactAndWeighted) {
    EXPECT_TRUE(cospectral(path_graph(4), 0, 3));
    EXPECT_FALSE(cospectral(path_graph(4), 0, 1));
    Graph w(3);
    w.set_edge(0, 1, 0.5);
    w.set_edge(1, 2, 0.5);
    EXPECT_TRUE(cospectral(w, 0, 2));
    EXPECT_FALSE(cospectral(w, 0, 1));
}

TEST(StrongCospectrality, CanonicalCases) {
    EXPECT_TRUE(strongly_cospectral(path_graph(2), 0, 1).value);
    EXPECT_TRUE(strongly_cospectral(path_graph(3), 0, 2).value);
    EXPECT_TRUE(strongly_cospectral(path_graph(4), 1, 2).value);
    EXPECT_TRUE(strongly_cospectral(cycle_graph(4), 0, 2).value);
    EXPECT_FALSE(strongly_cospectral(star_graph(3), 1, 2).value);
    EXPECT_FALSE(strongly_cospectral(path_graph(3), 0, 1).value);
    EXPECT_TRUE(strongly_cospectral(path_graph(3), 0, 2).exact_checked);
}

TEST(StrongCospectrality, ExactAgreesWithNumericOnCorpus) {
    for (std::size_t n = 2; n <= 5; ++n)
        for (const Graph& g : connected_graphs(n))
            for (Vertex a = 0; a < g.size(); ++a)
                for (Vertex b = a + 1; b < g.size(); ++b) EXPECT_NO_THROW(strongly_cospectral(g, a, b));
}

TEST(Neutrino, MatchesProjectorsOnRandomGraphs) {
    Rng rng(103);
    for (int i = 0; i < 40; ++i) {
        const Graph g = random_integer_weighted(2 + i % 7, 0.5, 2, 1, 0.3, rng);
        const auto dec = decompose(g);
        NeutrinoEvaluator ev(g);
        for (std::size_t r = 0; r < dec.eigenvalues.size(); ++r)
            for (Vertex a = 0; a < g.size(); ++a)
                for (Vertex b = a; b < g.size(); ++b)
                    EXPECT_NEAR(ev.entry(a, b, dec.eigenvalues[r]), dec.entry(r, a, b), 1e-7);
    }
}

TEST(Neutrino, PathsSquaredIdentity) {
    // E_r(a,a) E_r(b,b) = E_r(a,b)^2 on simple eigenvalues.
    const Graph p5 = path_graph(5);
    const auto dec = decompose(p5);
    for (std::size_t r = 0; r < dec.eigenvalues.size(); ++r) {
        const double t = dec.eigenvalues[r];
        const double ab = projector_entry_via_neutrino(p5, 0, 4, t);
        EXPECT_NEAR(ab * ab, projector_entry_via_neutrino(p5, 0, 0, t) * projector_entry_via_neutrino(p5, 4, 4, t), 1e-10);
    }
}

TEST(Neutrino, ZeroOffSupportAndErrors) {
    // 0 is an eigenvalue of P3 but not in the support of the middle vertex.
    EXPECT_EQ(projector_entry_via_neutrino(path_graph(3), 1, 1, 0.0), 0.0);
    EXPECT_THROW(projector_entry_via_neutrino(path_graph(3), 0, 0, 0.5), std::invalid_argument);
    EXPECT_NEAR(neutrino_limit_numeric(path_graph(3), 0, 2, kRt2), 0.25, 1e-6);
}

TEST(WalkModule, DimensionIsKrylovRank) {
    Rng rng(107);
    for (int i = 0; i < 60; ++i) {
        const Graph g = random_connected_graph(1 + i % 9, 0.4, rng);
        const Vertex a = i % g.size();
        const Matrix m = walk_module_matrix(g, a);
        EXPECT_EQ(m.rows(), oracle::krylov_rank(g, a));
        EXPECT_EQ(m.rows(), support(decompose(g), a).size());
    }
}

TEST(WalkModule, EigenvaluesAreSupport) {
    const Graph g = star_graph(4);
    const auto ev = eigenvalues_desc(walk_module_matrix(g, 1));
    const auto s = support(decompose(g), 1);
    ASSERT_EQ(ev.size(), s.size());
    for (std::size_t i = 0; i < ev.size(); ++i) EXPECT_NEAR(ev[i], s[i], 1e-10);
}

TEST(Cospectral, ImpliesEqualDegrees) {
    for (std::size_t n = 2; n <= 5; ++n)
        for (const Graph& g : connected_graphs(n))
            for (Vertex a = 0; a < g.size(); ++a)
                for (Vertex b = a + 1; b < g.size(); ++b)
                    if (cospectral(g, a, b)) EXPECT_EQ(g.degree(a), g.degree(b));
    EXPECT_FALSE(strongly_cospectral(cycle_graph(4), 0, 1).value);
}
