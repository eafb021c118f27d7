#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "support.hpp"

using gapcert::Graph;

namespace {

void report(int number, const std::string& name, bool ok) {
    std::printf("[criterion %d] %s: %s\n", number, name.c_str(), ok ? "PASS" : "FAIL");
    std::fflush(stdout);
}

// 500 seeded connected irregular graphs, n in [4,16].
const std::vector<Graph>& irregular_population() {
    static const std::vector<Graph> graphs = [] {
        std::vector<Graph> v;
        v.reserve(500);
        for (int s = 0; s < 500; ++s)
            v.push_back(gapcert::random_connected_irregular(4 + s % 13, 0.5, 1 + s));
        return v;
    }();
    return graphs;
}

// 50 seeded connected bipartite graphs, n in [4,12].
const std::vector<Graph>& bipartite_population() {
    static const std::vector<Graph> graphs = [] {
        std::vector<Graph> v;
        v.reserve(50);
        for (int s = 0; s < 50; ++s)
            v.push_back(gapcert::random_connected_bipartite(4 + s % 9, 0.5, 401 + s));
        return v;
    }();
    return graphs;
}

std::vector<Graph> family_grid() {
    std::vector<Graph> v;
    for (int delta = 2; delta <= 6; ++delta)
        for (int k = 1; k <= 10; ++k) v.push_back(gapcert::build_gdk({delta, k}));
    return v;
}

}  // namespace

TEST(Acceptance, Criterion1TopGapBound) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    int marginal = 0;
    for (const Graph& g : irregular_population()) {
        const auto st = gapcert::structure(g);
        const double mu1 = gapcert::dense_spectrum(g).eigenvalues.front();
        const double bound =
            gapcert::main_gap_bound(g.vertex_count(), *st.diameter);
        const double slack = (double(st.max_degree) - mu1) - bound;
        ok = ok && slack > 0.0;
        if (std::abs(slack) <= 1e-9) ++marginal;
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ok = ok && marginal == 0 && elapsed < 60.0;
    report(1, "top gap exceeds the diameter-order bound on 500 random graphs", ok);
    EXPECT_TRUE(ok);
    EXPECT_EQ(marginal, 0);
    EXPECT_LT(elapsed, 60.0);
}

TEST(Acceptance, Criterion2BottomGapBound) {
    std::vector<Graph> pool = irregular_population();
    for (int n : {5, 7, 9, 11}) pool.push_back(gapcert::cycle_graph(n));
    for (int n : {4, 5, 6}) pool.push_back(gapcert::complete_graph(n));
    bool ok = true;
    for (const Graph& g : pool) {
        const auto st = gapcert::structure(g);
        const auto spectrum = gapcert::dense_spectrum(g);
        const double bound = gapcert::main_gap_bound(g.vertex_count(), *st.diameter);
        ok = ok && double(st.max_degree) + spectrum.eigenvalues.back() > bound;
    }
    report(2, "bottom gap exceeds the same bound with regular nonbipartite extras", ok);
    EXPECT_TRUE(ok);
}

TEST(Acceptance, Criterion3TightnessGrid) {
    bool ok = true;
    for (int delta = 2; delta <= 6; ++delta) {
        for (int k = 1; k <= 10; ++k) {
            const Graph g = gapcert::build_gdk({delta, k});
            const auto st = gapcert::structure(g);
            const bool shape = g.vertex_count() == 2 * k * delta &&
                               g.edge_count() == k * (delta * delta - 1) + k - 1 &&
                               st.connected && st.bipartition.has_value() && st.irregular &&
                               st.max_degree == delta && st.diameter == 4 * k - 1;
            const double mu1 = gapcert::largest_eigenvalue(g, 1e-10).value;
            const double gap = double(delta) - mu1;
            const double family_bound = gapcert::gdk_gap_upper_bound({delta, k});
            const double nd_bound = gapcert::gdk_nd_gap_upper_bound({delta, k});
            ok = ok && shape && 0.0 < gap && gap < family_bound && family_bound < nd_bound;
        }
    }
    report(3, "family gap sits strictly inside both closed-form envelopes", ok);
    EXPECT_TRUE(ok);
}

TEST(Acceptance, Criterion4DeskExactAnchor) {
    const Graph g = gapcert::build_gdk({2, 1});
    const double expected = 2.0 * std::cos(M_PI / 5.0);
    const double iterative = gapcert::largest_eigenvalue(g).value;
    const double dense = gapcert::dense_spectrum(g).eigenvalues.front();
    const bool ok =
        std::abs(iterative - expected) < 1e-9 && std::abs(dense - expected) < 1e-9;
    report(4, "smallest family member matches the closed-form eigenvalue", ok);
    EXPECT_TRUE(ok);
    EXPECT_NEAR(iterative, 1.6180339887, 1e-9);
}

TEST(Acceptance, Criterion5WalkRatioSoundness) {
    bool ok = true;
    for (int i = 0; i < 100; ++i) {
        const Graph g = gapcert::random_connected(4 + i % 9, 0.5, 101 + i);
        const double mu1 = gapcert::dense_spectrum(g).eigenvalues.front();
        const double delta = double(gapcert::structure(g).max_degree);
        for (int k = 1; k <= 8; ++k) {
            for (int r = 1; r <= 4; ++r) {
                const double bound = gapcert::walk_ratio_bound(g, k, r);
                ok = ok && bound >= mu1 - 1e-9;
                if (k == 1 && r == 1) ok = ok && bound == delta;
            }
        }
    }
    report(5, "per-vertex walk ratios always cap the spectral radius", ok);
    EXPECT_TRUE(ok);
}

TEST(Acceptance, Criterion6WalkCountRoutesAgree) {
    bool ok = true;
    for (int i = 0; i < 30; ++i) {
        const Graph g = gapcert::random_connected(4 + i % 9, 0.5, 201 + i);
        const auto spectrum = gapcert::dense_spectrum(g);
        for (int k = 1; k <= 20; ++k) {
            const auto profile = gapcert::walk_counts(g, k);
            const double recurrence = profile.total();
            const double spectral = gapcert::walk_count_spectral(spectrum, k);
            ok = ok && std::abs(spectral - recurrence) / recurrence < 1e-8;
            if (k <= 6) {
                ok = ok && profile.exact.has_value() &&
                     *profile.exact == testsupport::enumerate_walks(g, k);
            }
        }
    }
    report(6, "spectral, recurrence, and enumerated walk counts agree", ok);
    EXPECT_TRUE(ok);
}

TEST(Acceptance, Criterion7WalkVectorLimit) {
    bool ok = true;
    for (int i = 0; i < 50; ++i) {
        const Graph g = gapcert::random_connected_nonbipartite(4 + i % 9, 0.5, 301 + i);
        const auto r = gapcert::wei_check(g);
        ok = ok && r.converged && r.deviation < 1e-6;
    }
    report(7, "normalized walk vectors converge to the scaled principal vector", ok);
    EXPECT_TRUE(ok);
}

TEST(Acceptance, Criterion8BipartiteWalkLimits) {
    bool ok = true;
    for (const Graph& g : bipartite_population()) {
        const auto r = gapcert::bipartite_wei_check(g);
        ok = ok && r.inequalities_hold && r.empirical_match;
        ok = ok && r.slack_odd >= -1e-9 && r.slack_even >= -1e-9;
        ok = ok && r.deviation_odd < 1e-6 && r.deviation_even < 1e-6;
    }
    report(8, "parity-split walk limits hold componentwise on bipartite graphs", ok);
    EXPECT_TRUE(ok);
}

TEST(Acceptance, Criterion9ExtremeEntryCap) {
    std::vector<Graph> pool = irregular_population();
    for (const Graph& g : bipartite_population()) pool.push_back(g);
    for (Graph& g : family_grid()) pool.push_back(std::move(g));
    bool ok = true;
    int bipartite_seen = 0;
    int nonbipartite_seen = 0;
    for (const Graph& g : pool) {
        const auto st = gapcert::structure(g);
        if (!st.irregular) continue;
        (st.bipartition ? bipartite_seen : nonbipartite_seen) += 1;
        const double mu1 = gapcert::dense_spectrum(g).eigenvalues.front();
        const double rhs = gapcert::perron_entry_upper_bound(g);
        ok = ok && mu1 <= rhs + 1e-9;
    }
    ok = ok && bipartite_seen > 0 && nonbipartite_seen > 0;
    report(9, "smallest principal entry caps the spectral radius, both parities", ok);
    EXPECT_TRUE(ok);
}

TEST(Acceptance, Criterion10SolverCrossValidation) {
    bool ok = true;
    std::vector<Graph> pool;
    for (int i = 0; i < 11; ++i) pool.push_back(gapcert::random_connected(4 + 6 * i, 0.5, 601 + i));
    std::vector<Graph> bipartite_pool;
    for (int i = 0; i < 5; ++i)
        bipartite_pool.push_back(gapcert::random_connected_bipartite(6 + 6 * i, 0.5, 701 + i));
    for (int k = 1; k <= 16; ++k) bipartite_pool.push_back(gapcert::build_gdk({2, k}));
    for (const Graph& g : bipartite_pool) pool.push_back(g);

    for (const Graph& g : pool) {
        const auto spectrum = gapcert::dense_spectrum(g);
        const double mu1 = gapcert::largest_eigenvalue(g, 1e-10).value;
        const double mun = gapcert::smallest_eigenvalue(g, 1e-10).value;
        ok = ok && std::abs(mu1 - spectrum.eigenvalues.front()) < 1e-8;
        ok = ok && std::abs(mun - spectrum.eigenvalues.back()) < 1e-8;
    }
    for (const Graph& g : bipartite_pool) {
        const auto st = gapcert::structure(g);
        const auto spectrum = gapcert::dense_spectrum(g);
        ok = ok && std::abs(spectrum.eigenvalues.back() + spectrum.eigenvalues.front()) < 1e-9;
        // flipping the bottom eigenvector on one side must recover the top one
        const auto& x = spectrum.eigenvectors.front();
        const auto& y = spectrum.eigenvectors.back();
        const std::size_t n = x.size();
        std::vector<double> flipped(n);
        for (std::size_t i = 0; i < n; ++i)
            flipped[i] = (*st.bipartition)[i] ? -y[i] : y[i];
        double dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += flipped[i] * x[i];
        const double sign = dot < 0.0 ? -1.0 : 1.0;
        for (std::size_t i = 0; i < n; ++i) ok = ok && std::abs(flipped[i] - sign * x[i]) < 1e-7;
    }
    report(10, "iterative and dense eigenvalues agree; bipartite symmetry holds", ok);
    EXPECT_TRUE(ok);
}

TEST(Acceptance, Criterion11BoundDominanceTable) {
    std::set<std::tuple<int, int, int>> triples;
    std::vector<Graph> pool = irregular_population();
    for (const Graph& g : bipartite_population()) pool.push_back(g);
    for (int i = 0; i < 100; ++i) pool.push_back(gapcert::random_connected(4 + i % 9, 0.5, 101 + i));
    for (int n : {5, 7, 9, 11}) pool.push_back(gapcert::cycle_graph(n));
    for (int n : {4, 5, 6}) pool.push_back(gapcert::complete_graph(n));
    for (Graph& g : family_grid()) pool.push_back(std::move(g));
    for (const Graph& g : pool) {
        const auto st = gapcert::structure(g);
        if (st.max_degree < 2) continue;
        triples.emplace(g.vertex_count(), st.max_degree, *st.diameter);
    }

    bool ok = !triples.empty();
    std::ofstream out("bound_comparison.csv");
    out << "n,max_degree,diameter,main_bound,zhang,stevanovic,alon_sudakov,dominates\n";
    for (const auto& [n, delta, diameter] : triples) {
        const double main = gapcert::main_gap_bound(n, diameter);
        const double zhang = gapcert::zhang_bound(n, delta, diameter);
        const double stevanovic = gapcert::stevanovic_bound(n, delta);
        const double alon_sudakov = gapcert::alon_sudakov_bound(n, diameter);
        const bool dominates = main > zhang && main > stevanovic;
        ok = ok && dominates;
        out << n << ',' << delta << ',' << diameter << ','
            << gapcert::detail::format_real(main) << ',' << gapcert::detail::format_real(zhang)
            << ',' << gapcert::detail::format_real(stevanovic) << ','
            << gapcert::detail::format_real(alon_sudakov) << ','
            << (dominates ? "true" : "false") << '\n';
    }
    ok = ok && out.good();
    out.close();
    report(11, "diameter-order bound dominates both alternative bound formulas", ok);
    EXPECT_TRUE(ok);
}
