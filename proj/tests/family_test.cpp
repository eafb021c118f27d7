#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "support.hpp"

using gapcert::FamilyParams;
using gapcert::Graph;

TEST(BuildGdk, SmallestMemberIsAFourPath) {
    Graph g = gapcert::build_gdk({2, 1});
    const std::vector<std::pair<int, int>> want{{1, 4}, {2, 3}, {2, 4}};
    EXPECT_EQ(g.edges(), want);
    // relabeling along the path order turns it into the canonical path
    Graph relabeled = testsupport::relabel(g, {1, 3, 4, 2});
    EXPECT_TRUE(relabeled == gapcert::path_graph(4));
}

TEST(BuildGdk, ShapeInvariantsOnASubgrid) {
    for (int delta = 2; delta <= 4; ++delta)
        for (int k = 1; k <= 3; ++k) {
            Graph g = gapcert::build_gdk({delta, k});
            gapcert::StructureReport sr = gapcert::structure(g);
            EXPECT_EQ(g.vertex_count(), 2 * k * delta);
            EXPECT_EQ(g.edge_count(), k * (delta * delta - 1) + (k - 1));
            EXPECT_TRUE(sr.connected);
            EXPECT_TRUE(sr.bipartition.has_value());
            EXPECT_TRUE(sr.irregular);
            EXPECT_EQ(sr.max_degree, delta);
            EXPECT_EQ(sr.min_degree, delta - 1);
            EXPECT_EQ(*sr.diameter, 4 * k - 1);
        }
}

TEST(BuildGdk, ChainEndsHaveTheReducedDegree) {
    Graph g = gapcert::build_gdk({3, 2});
    EXPECT_EQ(g.degree(0), 2);                      // first A-vertex of copy 1
    EXPECT_EQ(g.degree(g.vertex_count() - 1), 3);   // plain B-vertex of copy 2
    int reduced = 0;
    for (int u = 0; u < g.vertex_count(); ++u)
        if (g.degree(u) == 2) ++reduced;
    EXPECT_EQ(reduced, 2);  // exactly two vertices sit below the maximum degree
}

TEST(BuildGdk, RejectsBadParams) {
    EXPECT_THROW(gapcert::build_gdk({1, 1}), gapcert::InvalidParamsError);
    EXPECT_THROW(gapcert::build_gdk({2, 0}), gapcert::InvalidParamsError);
}

TEST(SineTestVector, SmallestMemberIsConstantHalf) {
    std::vector<double> v = gapcert::sine_test_vector({2, 1});
    ASSERT_EQ(v.size(), 4u);
    for (double x : v) EXPECT_NEAR(x, 0.5, 1e-15);
}

TEST(SineTestVector, UnitNormAcrossTheGrid) {
    for (int delta = 2; delta <= 5; ++delta)
        for (int k = 1; k <= 6; ++k) {
            std::vector<double> v = gapcert::sine_test_vector({delta, k});
            double norm = 0.0;
            for (double x : v) norm += x * x;
            EXPECT_NEAR(std::sqrt(norm), 1.0, 1e-12) << "delta=" << delta << " k=" << k;
        }
}

TEST(SineTestVector, MiddleCopyCarriesTheLargestEntries) {
    std::vector<double> v = gapcert::sine_test_vector({2, 3});
    // copies span blocks of 4; sin(pi/4) < sin(pi/2) > sin(3pi/4)
    EXPECT_GT(v[4], v[0]);
    EXPECT_GT(v[4], v[8]);
    EXPECT_NEAR(v[0], v[8], 1e-15);
}

TEST(SineTestVector, RayleighQuotientCertifiesTheGapBound) {
    for (int delta = 2; delta <= 4; ++delta)
        for (int k = 1; k <= 4; ++k) {
            const FamilyParams p{delta, k};
            const double rq =
                gapcert::rayleigh_quotient(gapcert::build_gdk(p), gapcert::sine_test_vector(p));
            EXPECT_GE(rq, delta - gapcert::gdk_gap_upper_bound(p) - 1e-12)
                << "delta=" << delta << " k=" << k;
        }
}

TEST(GapUpperBounds, HandValues) {
    EXPECT_NEAR(gapcert::gdk_gap_upper_bound({2, 1}),
                std::numbers::pi * std::numbers::pi / 16.0, 1e-15);
    EXPECT_NEAR(gapcert::gdk_nd_gap_upper_bound({2, 1}),
                std::numbers::pi * std::numbers::pi / 3.0, 1e-15);
    EXPECT_NEAR(gapcert::gdk_gap_upper_bound({3, 2}),
                std::numbers::pi * std::numbers::pi / 54.0, 1e-15);
}

TEST(GapUpperBounds, SmallestMemberGapSitsInsideTheBound) {
    const double mu1 = gapcert::largest_eigenvalue(gapcert::build_gdk({2, 1})).value;
    const double gap = 2.0 - mu1;
    EXPECT_NEAR(gap, 0.38196601125010515, 1e-9);
    EXPECT_LT(gap, gapcert::gdk_gap_upper_bound({2, 1}));
    EXPECT_LT(gapcert::gdk_gap_upper_bound({2, 1}), gapcert::gdk_nd_gap_upper_bound({2, 1}));
}

TEST(SupportGraphs, PathEigenvalueCompanion) {
    EXPECT_DOUBLE_EQ(gapcert::path_mu1(2), 2.0 * std::cos(std::numbers::pi / 3.0));
    EXPECT_NEAR(gapcert::path_mu1(2), 1.0, 1e-15);
    for (int k = 2; k <= 10; ++k) {
        const double mu1 = gapcert::largest_eigenvalue(gapcert::path_graph(k)).value;
        EXPECT_NEAR(mu1, gapcert::path_mu1(k), 1e-9) << "k=" << k;
    }
}

TEST(SupportGraphs, Shapes) {
    Graph c3 = gapcert::cycle_graph(3);
    EXPECT_TRUE(c3 == gapcert::complete_graph(3));
    Graph s3 = gapcert::star(3);
    EXPECT_EQ(s3.degree(0), 3);
    EXPECT_EQ(s3.degree(1), 1);
    Graph k33 = gapcert::complete_bipartite(3, 3);
    EXPECT_EQ(k33.edge_count(), 9);
    for (int u = 0; u < 6; ++u) EXPECT_EQ(k33.degree(u), 3);
    EXPECT_THROW(gapcert::cycle_graph(2), gapcert::InvalidParamsError);
    EXPECT_THROW(gapcert::path_graph(0), gapcert::InvalidParamsError);
    EXPECT_THROW(gapcert::star(0), gapcert::InvalidParamsError);
}

TEST(RandomGraphs, DeterministicForFixedSeed) {
    Graph a = gapcert::random_connected_irregular(8, 0.5, 42);
    Graph b = gapcert::random_connected_irregular(8, 0.5, 42);
    EXPECT_TRUE(a == b);
    Graph c = gapcert::random_connected_irregular(8, 0.5, 43);
    EXPECT_FALSE(a == c);  // almost surely a different sample
}

TEST(RandomGraphs, TinyOrderForcesThePath) {
    Graph g = gapcert::random_connected_irregular(3, 0.9, 1);
    gapcert::StructureReport sr = gapcert::structure(g);
    EXPECT_TRUE(sr.connected);
    EXPECT_TRUE(sr.irregular);
    EXPECT_EQ(g.edge_count(), 2);  // the only connected irregular graph on 3 vertices
}

TEST(RandomGraphs, HighDensityStillFindsIrregularSamples) {
    Graph g = gapcert::random_connected_irregular(4, 0.97, 3);
    gapcert::StructureReport sr = gapcert::structure(g);
    EXPECT_TRUE(sr.connected);
    EXPECT_TRUE(sr.irregular);
}

TEST(RandomGraphs, GeneratorsHonorTheirPredicates) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        gapcert::StructureReport nb =
            gapcert::structure(gapcert::random_connected_nonbipartite(8, 0.4, seed));
        EXPECT_TRUE(nb.connected);
        EXPECT_FALSE(nb.bipartition.has_value());
        gapcert::StructureReport bp =
            gapcert::structure(gapcert::random_connected_bipartite(8, 0.5, seed));
        EXPECT_TRUE(bp.connected);
        EXPECT_TRUE(bp.bipartition.has_value());
    }
}

TEST(RandomGraphs, ImpossibleTargetsExhaust) {
    EXPECT_THROW(gapcert::random_connected_irregular(6, 0.0001, 1),
                 gapcert::GenerationExhaustedError);
}

TEST(RandomGraphs, ParameterValidation) {
    EXPECT_THROW(gapcert::random_connected_irregular(2, 0.5, 1), gapcert::InvalidParamsError);
    EXPECT_THROW(gapcert::random_connected(5, 0.0, 1), gapcert::InvalidParamsError);
    EXPECT_THROW(gapcert::random_connected(5, 1.0, 1), gapcert::InvalidParamsError);
}
