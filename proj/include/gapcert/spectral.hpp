#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "gapcert/graph.hpp"

namespace gapcert {

inline constexpr double kDefaultTol = 1e-10;
inline constexpr int kDefaultMaxIter = 200000;
inline constexpr int kDefaultDenseCap = 256;
inline constexpr std::uint64_t kDefaultSeed = 1;

// Verdict tolerance for strict inequalities checked in floating point:
// eigenvalues are trusted to about 1e-9, so a slack above -kSlackTol counts
// as holding and anything inside [-kSlackTol, +kSlackTol] is marginal.
inline constexpr double kSlackTol = 1e-9;

struct SpectrumEstimate {
    double value = 0.0;
    std::vector<double> vector;
    double residual = 0.0;  // inf-norm of A*v - value*v
    int iterations = 0;
};

struct DenseSpectrum {
    std::vector<double> eigenvalues;                // sorted descending
    std::vector<std::vector<double>> eigenvectors;  // [i] pairs with eigenvalues[i]
    std::vector<double> entry_sums;                 // alpha_i = sum of eigenvector i
};

// y = A x for the adjacency operator.
inline void adjacency_multiply(const Graph& g, std::span<const double> x, std::span<double> y) {
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
        double s = 0.0;
        for (int w : g.neighbors(u)) s += x[static_cast<std::size_t>(w)];
        y[static_cast<std::size_t>(u)] = s;
    }
}

namespace detail {

inline double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

// Flip the sign so the entry of largest magnitude (first such index on
// ties) is positive. Makes eigenvector output deterministic.
inline void sign_normalize(std::vector<double>& v) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (std::abs(v[i]) > std::abs(v[best])) best = i;
    if (v.empty() || v[best] >= 0.0) return;
    for (double& x : v) x = -x;
}

// Portable uniform double in [-1, 1) from a raw 64-bit generator. Keeps
// seeded starts identical across standard library implementations.
inline double unit_interval(std::uint64_t raw) {
    return 2.0 * (static_cast<double>(raw >> 11) * 0x1.0p-53) - 1.0;
}

// One power-iteration loop on the operator (shift_in*I - sign*A) pattern is
// not shared here; both callers below are short enough to stay explicit.

}  // namespace detail

// Largest adjacency eigenvalue by power iteration on (A + I). The shift
// makes the target strictly dominant in magnitude even on bipartite graphs,
// where plain iteration on A oscillates between +mu1 and -mu1. The all-ones
// start has positive overlap with the Perron vector.
inline SpectrumEstimate largest_eigenvalue(const Graph& g, double tol = kDefaultTol,
                                           int max_iter = kDefaultMaxIter) {
    const int n = g.vertex_count();
    if (n < 2) throw InvalidParamsError("largest_eigenvalue requires at least 2 vertices");
    if (tol <= 0.0) throw InvalidParamsError("tolerance must be positive");
    if (max_iter < 1) throw InvalidParamsError("max_iter must be positive");
    if (!is_connected(g)) throw DisconnectedError();

    std::vector<double> v(static_cast<std::size_t>(n), 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> av(static_cast<std::size_t>(n));
    double residual = 0.0;
    for (int iter = 1; iter <= max_iter; ++iter) {
        adjacency_multiply(g, v, av);
        double value = detail::dot(v, av);  // Rayleigh quotient, |v| = 1
        residual = 0.0;
        for (int i = 0; i < n; ++i)
            residual = std::max(residual,
                                std::abs(av[static_cast<std::size_t>(i)] -
                                         value * v[static_cast<std::size_t>(i)]));
        if (residual < tol) {
            detail::sign_normalize(v);
            return {value, std::move(v), residual, iter};
        }
        // next = (A + I) v, renormalized
        double nrm = 0.0;
        for (int i = 0; i < n; ++i) {
            av[static_cast<std::size_t>(i)] += v[static_cast<std::size_t>(i)];
            nrm += av[static_cast<std::size_t>(i)] * av[static_cast<std::size_t>(i)];
        }
        nrm = std::sqrt(nrm);
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = av[static_cast<std::size_t>(i)] / nrm;
    }
    throw NoConvergenceError(max_iter, residual);
}

// Smallest adjacency eigenvalue by power iteration on ((Delta+1)*I - A),
// whose spectrum is positive with the largest value corresponding to mu_n.
// The start vector is seeded pseudorandom: the all-ones vector can be
// exactly orthogonal to the target eigenvector on symmetric bipartite
// graphs.
inline SpectrumEstimate smallest_eigenvalue(const Graph& g, double tol = kDefaultTol,
                                            int max_iter = kDefaultMaxIter,
                                            std::uint64_t seed = kDefaultSeed) {
    const int n = g.vertex_count();
    if (n < 2) throw InvalidParamsError("smallest_eigenvalue requires at least 2 vertices");
    if (tol <= 0.0) throw InvalidParamsError("tolerance must be positive");
    if (max_iter < 1) throw InvalidParamsError("max_iter must be positive");
    if (!is_connected(g)) throw DisconnectedError();

    int max_degree = 0;
    for (int u = 0; u < n; ++u) max_degree = std::max(max_degree, g.degree(u));
    const double shift = static_cast<double>(max_degree) + 1.0;

    std::mt19937_64 rng(seed);
    std::vector<double> v(static_cast<std::size_t>(n));
    for (double& x : v) x = detail::unit_interval(rng());
    double nrm = detail::norm2(v);
    for (double& x : v) x /= nrm;

    std::vector<double> av(static_cast<std::size_t>(n));
    double residual = 0.0;
    for (int iter = 1; iter <= max_iter; ++iter) {
        adjacency_multiply(g, v, av);
        double value = detail::dot(v, av);
        residual = 0.0;
        for (int i = 0; i < n; ++i)
            residual = std::max(residual,
                                std::abs(av[static_cast<std::size_t>(i)] -
                                         value * v[static_cast<std::size_t>(i)]));
        if (residual < tol) {
            detail::sign_normalize(v);
            return {value, std::move(v), residual, iter};
        }
        // next = (shift*I - A) v, renormalized
        nrm = 0.0;
        for (int i = 0; i < n; ++i) {
            double next = shift * v[static_cast<std::size_t>(i)] - av[static_cast<std::size_t>(i)];
            av[static_cast<std::size_t>(i)] = next;
            nrm += next * next;
        }
        nrm = std::sqrt(nrm);
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = av[static_cast<std::size_t>(i)] / nrm;
    }
    throw NoConvergenceError(max_iter, residual);
}

// Full symmetric eigendecomposition by cyclic Jacobi rotations; the
// desk-scale oracle. Sweeps run until the off-diagonal Frobenius norm falls
// below 1e-12 times the Frobenius norm of A.
inline DenseSpectrum dense_spectrum(const Graph& g, int dense_cap = kDefaultDenseCap) {
    const int n = g.vertex_count();
    if (n > dense_cap) throw TooLargeForDenseOracleError(n, dense_cap);
    if (n < 1) throw InvalidParamsError("dense_spectrum requires at least 1 vertex");

    const std::size_t un = static_cast<std::size_t>(n);
    std::vector<double> a(un * un, 0.0);
    for (int u = 0; u < n; ++u)
        for (int w : g.neighbors(u)) a[static_cast<std::size_t>(u) * un + static_cast<std::size_t>(w)] = 1.0;
    std::vector<double> vmat(un * un, 0.0);
    for (std::size_t i = 0; i < un; ++i) vmat[i * un + i] = 1.0;

    const double scale = std::sqrt(2.0 * static_cast<double>(g.edge_count()));
    if (scale > 0.0) {
        auto off_norm = [&]() {
            double s = 0.0;
            for (std::size_t p = 0; p < un; ++p)
                for (std::size_t q = p + 1; q < un; ++q) s += a[p * un + q] * a[p * un + q];
            return std::sqrt(2.0 * s);
        };
        const double threshold = 1e-12 * scale;
        constexpr int kMaxSweeps = 64;
        int sweep = 0;
        for (; sweep < kMaxSweeps && off_norm() > threshold; ++sweep) {
            for (std::size_t p = 0; p + 1 < un; ++p) {
                for (std::size_t q = p + 1; q < un; ++q) {
                    const double apq = a[p * un + q];
                    if (apq == 0.0) continue;
                    const double app = a[p * un + p];
                    const double aqq = a[q * un + q];
                    const double theta = (aqq - app) / (2.0 * apq);
                    const double t = (theta >= 0.0)
                                         ? 1.0 / (theta + std::sqrt(theta * theta + 1.0))
                                         : -1.0 / (-theta + std::sqrt(theta * theta + 1.0));
                    const double c = 1.0 / std::sqrt(t * t + 1.0);
                    const double s = t * c;
                    for (std::size_t i = 0; i < un; ++i) {
                        const double aip = a[i * un + p];
                        const double aiq = a[i * un + q];
                        a[i * un + p] = c * aip - s * aiq;
                        a[i * un + q] = s * aip + c * aiq;
                    }
                    for (std::size_t i = 0; i < un; ++i) {
                        const double api = a[p * un + i];
                        const double aqi = a[q * un + i];
                        a[p * un + i] = c * api - s * aqi;
                        a[q * un + i] = s * api + c * aqi;
                    }
                    a[p * un + q] = 0.0;
                    a[q * un + p] = 0.0;
                    for (std::size_t i = 0; i < un; ++i) {
                        const double vip = vmat[i * un + p];
                        const double viq = vmat[i * un + q];
                        vmat[i * un + p] = c * vip - s * viq;
                        vmat[i * un + q] = s * vip + c * viq;
                    }
                }
            }
        }
        if (sweep == kMaxSweeps && off_norm() > threshold)
            throw NoConvergenceError(kMaxSweeps, off_norm());
    }

    std::vector<int> order(un);
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return a[static_cast<std::size_t>(x) * un + static_cast<std::size_t>(x)] >
               a[static_cast<std::size_t>(y) * un + static_cast<std::size_t>(y)];
    });

    DenseSpectrum out;
    out.eigenvalues.resize(un);
    out.eigenvectors.assign(un, std::vector<double>(un));
    out.entry_sums.resize(un);
    for (std::size_t i = 0; i < un; ++i) {
        const std::size_t col = static_cast<std::size_t>(order[i]);
        out.eigenvalues[i] = a[col * un + col];
        for (std::size_t r = 0; r < un; ++r) out.eigenvectors[i][r] = vmat[r * un + col];
        detail::sign_normalize(out.eigenvectors[i]);
        double sum = 0.0;
        for (double x : out.eigenvectors[i]) sum += x;
        out.entry_sums[i] = sum;
    }
    return out;
}

// (v' A v) / (v' v); lower-bounds mu1 for any nonzero vector.
inline double rayleigh_quotient(const Graph& g, std::span<const double> v) {
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());
    if (v.size() != n) throw LengthMismatchError(v.size(), n);
    double den = detail::dot(v, v);
    if (den == 0.0) throw ZeroVectorError();
    double num = 0.0;
    for (int u = 0; u < g.vertex_count(); ++u) {
        double s = 0.0;
        for (int w : g.neighbors(u)) s += v[static_cast<std::size_t>(w)];
        num += v[static_cast<std::size_t>(u)] * s;
    }
    return num / den;
}

}  // namespace gapcert
