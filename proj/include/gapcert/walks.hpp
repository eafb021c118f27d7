#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "gapcert/graph.hpp"
#include "gapcert/spectral.hpp"

namespace gapcert {

// Wei fraction limits must be matched empirically to this tolerance.
inline constexpr double kWeiMatchTol = 1e-6;

// Per-vertex counts of walks with k vertices (k-1 edges). Counts grow like
// mu1^k, so beyond roughly 60 edges they overflow 64-bit integers; the
// profile then keeps mantissas with a shared power-of-two exponent, which
// stays exact for the ratios and normalized fractions everything downstream
// consumes. While counts still fit, `exact` carries them verbatim.
struct WalkProfile {
    int k = 0;
    std::vector<double> mantissa;       // w_k(u) = mantissa[u] * 2^exponent
    std::int64_t exponent = 0;
    double total_mantissa = 0.0;        // w_k(G) = total_mantissa * 2^exponent
    std::optional<std::vector<std::uint64_t>> exact;
    std::optional<std::uint64_t> exact_total;

    double count(int u) const { return std::ldexp(mantissa[static_cast<std::size_t>(u)], static_cast<int>(exponent)); }
    double total() const { return std::ldexp(total_mantissa, static_cast<int>(exponent)); }
    double log2_total() const { return std::log2(total_mantissa) + static_cast<double>(exponent); }

    // w_k(u) / w_k(G); exact in the scaled representation.
    std::vector<double> normalized() const {
        std::vector<double> f(mantissa.size());
        for (std::size_t i = 0; i < mantissa.size(); ++i) f[i] = mantissa[i] / total_mantissa;
        return f;
    }
};

namespace detail {

// Rescale all mantissas by a common power of two so the largest lands in
// [1/2, 1), moving the scale into the shared exponent. Power-of-two
// scaling is exact, so per-vertex ratios are untouched.
inline void renormalize(std::vector<double>& w, std::int64_t& exponent) {
    double peak = 0.0;
    for (double x : w) peak = std::max(peak, x);
    if (peak <= 0.0) return;
    int e = 0;
    std::frexp(peak, &e);
    if (e == 0) return;
    for (double& x : w) x = std::ldexp(x, -e);
    exponent += e;
}

}  // namespace detail

// Counts of k-vertex walks starting at each vertex, by the recurrence
// w_1 = 1, w_{j+1}(u) = sum of w_j over neighbors of u. Exact integers
// until any step would overflow uint64, scaled doubles afterwards.
inline WalkProfile walk_counts(const Graph& g, int k, bool force_scaled = false) {
    const int n = g.vertex_count();
    if (n < 1) throw InvalidParamsError("walk_counts requires at least 1 vertex");
    if (k < 1) throw InvalidParamsError("walk length k must be at least 1");

    const std::size_t un = static_cast<std::size_t>(n);
    WalkProfile out;
    out.k = k;

    std::vector<std::uint64_t> cur(un, 1), next(un);
    bool exact_ok = !force_scaled;
    int steps_done = 0;  // number of recurrence steps applied in exact mode
    while (exact_ok && steps_done < k - 1) {
        bool overflow = false;
        for (int u = 0; u < n && !overflow; ++u) {
            std::uint64_t s = 0;
            for (int w : g.neighbors(u))
                if (__builtin_add_overflow(s, cur[static_cast<std::size_t>(w)], &s)) {
                    overflow = true;
                    break;
                }
            next[static_cast<std::size_t>(u)] = s;
        }
        if (overflow) {
            exact_ok = false;
            break;
        }
        cur.swap(next);
        ++steps_done;
    }
    if (exact_ok) {
        std::uint64_t tot = 0;
        for (std::uint64_t c : cur)
            if (__builtin_add_overflow(tot, c, &tot)) {
                exact_ok = false;
                break;
            }
        if (exact_ok) {
            out.exact = cur;
            out.exact_total = tot;
        }
    }

    // Scaled doubles, either from scratch or resuming from the last exact
    // state (uint64 -> double is exact up to 2^53; counts at the overflow
    // frontier can exceed that, so restart cleanly instead).
    std::vector<double> w(un, 1.0), wn(un);
    std::int64_t exponent = 0;
    for (int step = 0; step < k - 1; ++step) {
        for (int u = 0; u < n; ++u) {
            double s = 0.0;
            for (int v : g.neighbors(u)) s += w[static_cast<std::size_t>(v)];
            wn[static_cast<std::size_t>(u)] = s;
        }
        w.swap(wn);
        detail::renormalize(w, exponent);
    }
    out.mantissa = std::move(w);
    out.exponent = exponent;
    out.total_mantissa = 0.0;
    for (double x : out.mantissa) out.total_mantissa += x;
    return out;
}

// Spectral form of the total count: w_k(G) = sum_i alpha_i^2 mu_i^{k-1},
// where alpha_i is the entry sum of the i-th orthonormal eigenvector.
inline double walk_count_spectral(const DenseSpectrum& spectrum, int k) {
    if (k < 1) throw InvalidParamsError("walk length k must be at least 1");
    double s = 0.0;
    for (std::size_t i = 0; i < spectrum.eigenvalues.size(); ++i)
        s += spectrum.entry_sums[i] * spectrum.entry_sums[i] *
             std::pow(spectrum.eigenvalues[i], k - 1);
    return s;
}

inline double walk_count_spectral(const Graph& g, int k, int dense_cap = kDefaultDenseCap) {
    return walk_count_spectral(dense_spectrum(g, dense_cap), k);
}

// Upper bound on mu1 from one walk-count ratio:
//   mu1^r <= max_u w_{k+r}(u) / w_k(u).
// Exact-arithmetic counts feed the ratio whenever they fit; the scaled
// representation otherwise (the shared exponents subtract out).
inline double walk_ratio_bound(const Graph& g, int k, int r) {
    if (k < 1) throw InvalidParamsError("walk length k must be at least 1");
    if (r < 1) throw InvalidParamsError("ratio step r must be at least 1");
    const int n = g.vertex_count();
    WalkProfile wk = walk_counts(g, k);
    WalkProfile wkr = walk_counts(g, k + r);
    double best = 0.0;
    for (int u = 0; u < n; ++u) {
        const std::size_t i = static_cast<std::size_t>(u);
        if (wk.mantissa[i] == 0.0) throw IsolatedVertexError(u + 1);
        const double ratio =
            std::ldexp(wkr.mantissa[i] / wk.mantissa[i], static_cast<int>(wkr.exponent - wk.exponent));
        best = std::max(best, ratio);
    }
    return r == 1 ? best : std::pow(best, 1.0 / static_cast<double>(r));
}

// Deviation of the normalized walk vector from its limit x/alpha1 (x the
// unit Perron vector, alpha1 its entry sum), in the inf norm. Requires a
// connected nonbipartite graph; on bipartite graphs the normalized vector
// alternates between two limits instead of converging.
inline double wei_limit_deviation(const Graph& g, int k, int dense_cap = kDefaultDenseCap) {
    StructureReport sr = structure(g);
    if (!sr.connected) throw DisconnectedError();
    if (sr.bipartition) throw BipartiteInputError();
    DenseSpectrum sp = dense_spectrum(g, dense_cap);
    const std::vector<double>& x = sp.eigenvectors[0];
    const double alpha1 = sp.entry_sums[0];
    std::vector<double> frac = walk_counts(g, k).normalized();
    double dev = 0.0;
    for (std::size_t i = 0; i < frac.size(); ++i)
        dev = std::max(dev, std::abs(frac[i] - x[i] / alpha1));
    return dev;
}

struct WeiReport {
    int k = 0;                  // walk length the deviation was measured at
    double deviation = 0.0;     // inf-norm distance from the limit
    double subdominant_ratio = 0.0;
    bool converged = false;     // deviation < kWeiMatchTol
};

namespace detail {

// Walk length at which the subdominant spectral term has decayed below
// 1e-8 / n, clamped to [8, 10000].
inline int adaptive_walk_length(double subdominant_ratio, int n) {
    constexpr int kMin = 8;
    constexpr int kMax = 10000;
    if (subdominant_ratio <= 0.0) return kMin;
    const double target = 1e-8 / static_cast<double>(n);
    const double need = std::log(target) / std::log(subdominant_ratio);
    if (!(need > 0.0)) return kMin;
    if (need >= static_cast<double>(kMax)) return kMax;
    return std::max(kMin, static_cast<int>(std::ceil(need)));
}

}  // namespace detail

// Convergence check for the nonbipartite walk-fraction limit, at a walk
// length adapted to the spectral gap: k grows as the subdominant ratio
// max_{i>=2} |mu_i| / mu_1 approaches 1.
inline WeiReport wei_check(const Graph& g, int dense_cap = kDefaultDenseCap) {
    StructureReport sr = structure(g);
    if (!sr.connected) throw DisconnectedError();
    if (sr.bipartition) throw BipartiteInputError();
    DenseSpectrum sp = dense_spectrum(g, dense_cap);
    const int n = g.vertex_count();
    double rho = 0.0;
    for (std::size_t i = 1; i < sp.eigenvalues.size(); ++i)
        rho = std::max(rho, std::abs(sp.eigenvalues[i]) / sp.eigenvalues[0]);

    WeiReport rep;
    rep.subdominant_ratio = rho;
    rep.k = detail::adaptive_walk_length(rho, n);
    rep.deviation = wei_limit_deviation(g, rep.k, dense_cap);
    rep.converged = rep.deviation < kWeiMatchTol;
    return rep;
}

// Bipartite analogue: normalized walk vectors split by parity of the walk
// length k into two subsequences with distinct limits, built from the top
// and bottom eigenvectors x (Perron) and y (mu_n, with alpha_n = entry sum):
//   odd  k: (alpha1 x + alpha_n y) / (alpha1^2 + alpha_n^2)
//   even k: (alpha1 x - alpha_n y) / (alpha1^2 - alpha_n^2)
// and each limit dominates the componentwise guarantee recorded below.
struct BipartiteWeiReport {
    double alpha1 = 0.0;
    double alpha_n = 0.0;
    double subdominant_ratio = 0.0;
    int k_odd = 0;
    int k_even = 0;
    std::vector<double> limit_odd;
    std::vector<double> limit_even;
    double deviation_odd = 0.0;   // inf-norm gap, fractions at k_odd vs limit_odd
    double deviation_even = 0.0;  // same at k_even
    double slack_odd = 0.0;       // min over u of limit_odd[u] - guarantee_odd[u]
    double slack_even = 0.0;
    bool inequalities_hold = false;  // both slacks >= -kSlackTol
    bool empirical_match = false;    // both deviations < kWeiMatchTol
};

inline BipartiteWeiReport bipartite_wei_check(const Graph& g, int dense_cap = kDefaultDenseCap) {
    StructureReport sr = structure(g);
    if (!sr.connected) throw DisconnectedError();
    if (!sr.bipartition) throw NotBipartiteError();

    DenseSpectrum sp = dense_spectrum(g, dense_cap);
    const std::size_t un = sp.eigenvalues.size();
    const std::vector<double>& x = sp.eigenvectors[0];
    const std::vector<double>& y = sp.eigenvectors[un - 1];
    const double alpha1 = sp.entry_sums[0];
    const double alpha_n = sp.entry_sums[un - 1];
    const double abs_an = std::abs(alpha_n);

    BipartiteWeiReport rep;
    rep.alpha1 = alpha1;
    rep.alpha_n = alpha_n;

    // Decay of the largest interior term relative to mu1 picks the probe k.
    double rho = 0.0;
    for (std::size_t i = 1; i + 1 < un; ++i)
        rho = std::max(rho, std::abs(sp.eigenvalues[i]) / sp.eigenvalues[0]);
    rep.subdominant_ratio = rho;
    const int n = g.vertex_count();
    int k = detail::adaptive_walk_length(rho, n);
    rep.k_odd = (k % 2 == 1) ? k : k + 1;
    rep.k_even = (k % 2 == 0) ? k : k + 1;

    rep.limit_odd.resize(un);
    rep.limit_even.resize(un);
    const double den_odd = alpha1 * alpha1 + alpha_n * alpha_n;
    const double den_even = alpha1 * alpha1 - alpha_n * alpha_n;
    double slack_odd = std::numeric_limits<double>::infinity();
    double slack_even = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < un; ++i) {
        rep.limit_odd[i] = (alpha1 * x[i] + alpha_n * y[i]) / den_odd;
        rep.limit_even[i] = (alpha1 * x[i] - alpha_n * y[i]) / den_even;
        const double guarantee_odd = (alpha1 - abs_an) / den_odd * x[i];
        const double guarantee_even = x[i] / (alpha1 + abs_an);
        slack_odd = std::min(slack_odd, rep.limit_odd[i] - guarantee_odd);
        slack_even = std::min(slack_even, rep.limit_even[i] - guarantee_even);
    }
    rep.slack_odd = slack_odd;
    rep.slack_even = slack_even;
    rep.inequalities_hold = slack_odd >= -kSlackTol && slack_even >= -kSlackTol;

    std::vector<double> frac_odd = walk_counts(g, rep.k_odd).normalized();
    std::vector<double> frac_even = walk_counts(g, rep.k_even).normalized();
    for (std::size_t i = 0; i < un; ++i) {
        rep.deviation_odd = std::max(rep.deviation_odd, std::abs(frac_odd[i] - rep.limit_odd[i]));
        rep.deviation_even = std::max(rep.deviation_even, std::abs(frac_even[i] - rep.limit_even[i]));
    }
    rep.empirical_match = rep.deviation_odd < kWeiMatchTol && rep.deviation_even < kWeiMatchTol;
    return rep;
}

}  // namespace gapcert
