#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

#include "gapcert/graph.hpp"

namespace gapcert {

// Parameters of the chained near-bipartite family: k copies of K_{delta,delta},
// one edge removed per copy, consecutive copies joined by a bridge edge.
struct FamilyParams {
    int delta = 2;
    int k = 1;
};

namespace detail {

inline void validate(const FamilyParams& p) {
    if (p.delta < 2) throw InvalidParamsError("family requires delta >= 2");
    if (p.k < 1) throw InvalidParamsError("family requires k >= 1");
}

}  // namespace detail

// Fixed vertex layout: copy i (1-based) occupies vertices
// [(i-1)*2*delta + 1, i*2*delta], side A first, side B second. The removed
// edge joins the first A-vertex to the first B-vertex of the copy; bridges
// join the first B-vertex of copy i to the first A-vertex of copy i+1.
// The result has order 2*k*delta, max degree delta, min degree delta-1,
// diameter 4k-1, and is connected and bipartite.
inline Graph build_gdk(const FamilyParams& p) {
    detail::validate(p);
    const int n = 2 * p.k * p.delta;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(p.k) * static_cast<std::size_t>(p.delta * p.delta - 1) +
                  static_cast<std::size_t>(p.k - 1));
    for (int copy = 1; copy <= p.k; ++copy) {
        const int base = (copy - 1) * 2 * p.delta;
        const int a0 = base + 1;
        const int b0 = base + p.delta + 1;
        for (int a = 0; a < p.delta; ++a)
            for (int b = 0; b < p.delta; ++b) {
                if (a == 0 && b == 0) continue;  // the removed edge
                edges.emplace_back(a0 + a, b0 + b);
            }
        if (copy < p.k) edges.emplace_back(b0, base + 2 * p.delta + 1);
    }
    return Graph::from_edge_list(n, edges);
}

// Unit test vector constant on each copy: entry sin(j*pi/(k+1)) / sqrt((k+1)*delta)
// for vertices of copy j. Its Rayleigh quotient certifies the family's
// small spectral gap.
inline std::vector<double> sine_test_vector(const FamilyParams& p) {
    detail::validate(p);
    const double norm = std::sqrt(static_cast<double>(p.k + 1) * static_cast<double>(p.delta));
    std::vector<double> v(static_cast<std::size_t>(2 * p.k * p.delta));
    for (int copy = 1; copy <= p.k; ++copy) {
        const double entry =
            std::sin(static_cast<double>(copy) * std::numbers::pi / static_cast<double>(p.k + 1)) / norm;
        const int base = (copy - 1) * 2 * p.delta;
        for (int i = 0; i < 2 * p.delta; ++i) v[static_cast<std::size_t>(base + i)] = entry;
    }
    return v;
}

// Proven upper bound on the gap of the family: delta - mu1 < pi^2 / (2 delta (k+1)^2).
inline double gdk_gap_upper_bound(const FamilyParams& p) {
    detail::validate(p);
    const double kp1 = static_cast<double>(p.k + 1);
    return std::numbers::pi * std::numbers::pi / (2.0 * static_cast<double>(p.delta) * kp1 * kp1);
}

// The same bound rewritten in order and diameter: 4 pi^2 / (n D) with
// n = 2 k delta and D = 4k - 1; strictly weaker than gdk_gap_upper_bound.
inline double gdk_nd_gap_upper_bound(const FamilyParams& p) {
    detail::validate(p);
    const double n = 2.0 * static_cast<double>(p.k) * static_cast<double>(p.delta);
    const double d = 4.0 * static_cast<double>(p.k) - 1.0;
    return 4.0 * std::numbers::pi * std::numbers::pi / (n * d);
}

inline Graph path_graph(int k) {
    if (k < 1) throw InvalidParamsError("path_graph requires k >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < k; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edge_list(k, edges);
}

// mu1 of the k-vertex path, 2 cos(pi / (k+1)).
inline double path_mu1(int k) {
    if (k < 1) throw InvalidParamsError("path_mu1 requires k >= 1");
    return 2.0 * std::cos(std::numbers::pi / static_cast<double>(k + 1));
}

inline Graph cycle_graph(int k) {
    if (k < 3) throw InvalidParamsError("cycle_graph requires k >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < k; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(k, 1);
    return Graph::from_edge_list(k, edges);
}

inline Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw InvalidParamsError("complete_bipartite requires sides >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= a; ++i)
        for (int j = 1; j <= b; ++j) edges.emplace_back(i, a + j);
    return Graph::from_edge_list(a + b, edges);
}

inline Graph star(int leaves) {
    if (leaves < 1) throw InvalidParamsError("star requires leaves >= 1");
    return complete_bipartite(1, leaves);
}

inline Graph complete_graph(int k) {
    if (k < 2) throw InvalidParamsError("complete_graph requires k >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) edges.emplace_back(i, j);
    return Graph::from_edge_list(k, edges);
}

namespace detail {

// Uniform in [0, 1) from the raw 64-bit stream; identical across standard
// library implementations, unlike std::uniform_real_distribution.
inline double unit01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline Graph sample_gnp(int n, double p, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (unit01(rng) < p) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

// Rejection-sample G(n, p) until `accept` holds; counts attempts.
template <class Predicate>
inline Graph sample_until(int n, double p, std::uint64_t seed, Predicate accept) {
    if (n < 3) throw InvalidParamsError("random generation requires n >= 3");
    if (!(p > 0.0) || !(p < 1.0)) throw InvalidParamsError("edge probability must lie in (0, 1)");
    constexpr int kMaxAttempts = 10000;
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Graph g = sample_gnp(n, p, rng);
        if (accept(g)) return g;
    }
    throw GenerationExhaustedError("no sample met the target properties in 10000 attempts");
}

}  // namespace detail

// Seeded pseudorandom connected irregular graph; deterministic per seed,
// resampled up to 10 000 times before giving up.
inline Graph random_connected_irregular(int n, double edge_probability, std::uint64_t seed) {
    return detail::sample_until(n, edge_probability, seed, [](const Graph& g) {
        StructureReport sr = structure(g);
        return sr.connected && sr.irregular;
    });
}

inline Graph random_connected(int n, double edge_probability, std::uint64_t seed) {
    return detail::sample_until(n, edge_probability, seed,
                                [](const Graph& g) { return is_connected(g); });
}

inline Graph random_connected_nonbipartite(int n, double edge_probability, std::uint64_t seed) {
    return detail::sample_until(n, edge_probability, seed, [](const Graph& g) {
        StructureReport sr = structure(g);
        return sr.connected && !sr.bipartition;
    });
}

// Connected bipartite sample: a random two-sided graph (sides fixed by
// parity of the vertex id) rather than a rejection filter on G(n, p),
// where bipartiteness is too rare past small n.
inline Graph random_connected_bipartite(int n, double edge_probability, std::uint64_t seed) {
    if (n < 3) throw InvalidParamsError("random generation requires n >= 3");
    if (!(edge_probability > 0.0) || !(edge_probability < 1.0))
        throw InvalidParamsError("edge probability must lie in (0, 1)");
    constexpr int kMaxAttempts = 10000;
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::vector<std::pair<int, int>> edges;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v) {
                if ((u + v) % 2 == 0) continue;  // same side
                if (detail::unit01(rng) < edge_probability) edges.emplace_back(u, v);
            }
        Graph g = Graph::from_edge_list(n, edges);
        if (is_connected(g)) return g;
    }
    throw GenerationExhaustedError("no connected bipartite sample in 10000 attempts");
}

}  // namespace gapcert
