#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "gapcert/graph.hpp"
#include "gapcert/spectral.hpp"

namespace gapcert {

// Certified lower bound on the gap Delta - mu1 of a connected irregular
// graph: 1 / ((D + 2) n). Also lower-bounds Delta + mu_n when the graph is
// irregular or nonbipartite.
inline double main_gap_bound(int n, int diameter) {
    if (n < 2 || diameter < 1) throw InvalidParamsError("need n >= 2 and diameter >= 1");
    return 1.0 / ((static_cast<double>(diameter) + 2.0) * static_cast<double>(n));
}

// Earlier bounds the main one is compared against.
inline double stevanovic_bound(int n, int max_degree) {
    if (n < 2 || max_degree < 1) throw InvalidParamsError("need n >= 2 and max_degree >= 1");
    const double nd = static_cast<double>(n);
    const double dd = static_cast<double>(max_degree);
    return 1.0 / (2.0 * nd * (nd * dd - 1.0) * dd * dd);
}

inline double zhang_bound(int n, int max_degree, int diameter) {
    if (n < 2 || max_degree < 1 || diameter < 1)
        throw InvalidParamsError("need n >= 2, max_degree >= 1 and diameter >= 1");
    const double dd = static_cast<double>(max_degree);
    const double root = std::sqrt(dd) + std::sqrt(dd - 1.0);
    return 1.0 / (root * root * static_cast<double>(diameter) * static_cast<double>(n) * dd);
}

// Two successively weaker closed forms of the same bound.
inline double zhang_bound_weak_diameter(int n, int max_degree, int diameter) {
    if (n < 2 || max_degree < 1 || diameter < 1)
        throw InvalidParamsError("need n >= 2, max_degree >= 1 and diameter >= 1");
    const double dd = static_cast<double>(max_degree);
    return 1.0 / (4.0 * static_cast<double>(diameter) * static_cast<double>(n) * dd * dd);
}

inline double zhang_bound_weak_order(int n, int max_degree) {
    if (n < 2 || max_degree < 1) throw InvalidParamsError("need n >= 2 and max_degree >= 1");
    const double nd = static_cast<double>(n);
    const double dd = static_cast<double>(max_degree);
    return 1.0 / (4.0 * nd * (nd - 1.0) * dd * dd);
}

inline double alon_sudakov_bound(int n, int diameter) {
    if (n < 2 || diameter < 1) throw InvalidParamsError("need n >= 2 and diameter >= 1");
    return 1.0 / ((static_cast<double>(diameter) + 1.0) * static_cast<double>(n));
}

enum class SolverMethod { iterative, dense };

inline std::string to_string(SolverMethod m) {
    return m == SolverMethod::iterative ? "iterative" : "dense";
}

struct SolverOptions {
    double tol = kDefaultTol;
    int max_iter = kDefaultMaxIter;
    int dense_cap = kDefaultDenseCap;
    std::uint64_t seed = kDefaultSeed;
};

namespace detail {

// Extreme eigenpairs by the requested route. The iterative route runs two
// power iterations; the dense route takes the ends of the full spectrum.
struct ExtremePairs {
    double mu1 = 0.0;
    double mun = 0.0;
    std::vector<double> perron;
};

inline ExtremePairs extreme_eigenvalues(const Graph& g, SolverMethod method,
                                        const SolverOptions& opts) {
    ExtremePairs out;
    if (method == SolverMethod::iterative) {
        SpectrumEstimate top = largest_eigenvalue(g, opts.tol, opts.max_iter);
        SpectrumEstimate bottom = smallest_eigenvalue(g, opts.tol, opts.max_iter, opts.seed);
        out.mu1 = top.value;
        out.mun = bottom.value;
        out.perron = std::move(top.vector);
    } else {
        DenseSpectrum sp = dense_spectrum(g, opts.dense_cap);
        out.mu1 = sp.eigenvalues.front();
        out.mun = sp.eigenvalues.back();
        out.perron = sp.eigenvectors.front();
    }
    // The Perron vector of a connected graph is strictly positive; fix the
    // global sign so the minimum-entry bound below reads off directly.
    double sum = 0.0;
    for (double x : out.perron) sum += x;
    if (sum < 0.0)
        for (double& x : out.perron) x = -x;
    return out;
}

}  // namespace detail

// Upper bound on mu1 for a connected irregular graph from its Perron
// vector x (unit norm, positive): mu1 <= Delta - x_min / alpha1 with
// alpha1 the entry sum and x_min the smallest entry.
inline double perron_entry_upper_bound(const Graph& g, SolverMethod method = SolverMethod::dense,
                                       const SolverOptions& opts = {}) {
    StructureReport sr = structure(g);
    if (!sr.connected) throw DisconnectedError();
    if (!sr.irregular) throw RegularGraphError();
    detail::ExtremePairs ep = detail::extreme_eigenvalues(g, method, opts);
    double xmin = std::numeric_limits<double>::infinity();
    double alpha1 = 0.0;
    for (double x : ep.perron) {
        xmin = std::min(xmin, x);
        alpha1 += x;
    }
    return static_cast<double>(sr.max_degree) - xmin / alpha1;
}

enum class Verdict { pass, marginal, fail, skipped };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::marginal: return "marginal";
        case Verdict::fail: return "fail";
        default: return "skipped";
    }
}

namespace detail {

// slack > tol passes, slack < -tol fails, in between is marginal (the
// inequality holds to within eigenvalue accuracy but without margin).
inline Verdict classify_slack(double slack) {
    if (slack < -kSlackTol) return Verdict::fail;
    if (slack <= kSlackTol) return Verdict::marginal;
    return Verdict::pass;
}

}  // namespace detail

// Everything certify() measures for one graph, flattened for direct
// serialization. Slacks are measured-minus-required, so positive is good.
struct BoundReport {
    int n = 0;
    int m = 0;
    int max_degree = 0;
    int diameter = 0;
    bool irregular = false;
    bool bipartite = false;

    double mu1 = 0.0;
    double mun = 0.0;
    double gap_top = 0.0;     // Delta - mu1
    double gap_bottom = 0.0;  // Delta + mu_n

    double main_bound = 0.0;
    double alon_sudakov = 0.0;
    double zhang = 0.0;
    double stevanovic = 0.0;
    double perron_rhs = std::numeric_limits<double>::quiet_NaN();  // NaN when regular

    double gap_slack = 0.0;        // gap_top - main_bound (irregular only)
    double bottom_slack = 0.0;     // gap_bottom - main_bound (irregular or nonbipartite)
    double perron_slack = 0.0;     // perron_rhs - mu1 (irregular only)

    Verdict gap_verdict = Verdict::skipped;
    Verdict bottom_verdict = Verdict::skipped;
    Verdict perron_verdict = Verdict::skipped;

    bool all_pass() const {
        return gap_verdict != Verdict::fail && bottom_verdict != Verdict::fail &&
               perron_verdict != Verdict::fail;
    }
};

// Measure the spectral gaps of a connected graph and check each certified
// lower bound that applies to it:
//   - Delta - mu1  > 1/((D+2)n)  when the graph is irregular,
//   - Delta + mu_n > 1/((D+2)n)  when it is irregular or nonbipartite,
//   - mu1 <= Delta - x_min/alpha1 when it is irregular.
// Checks that do not apply are reported as skipped, not errors, so regular
// graphs flow through the same pipeline.
inline BoundReport certify(const Graph& g, SolverMethod method = SolverMethod::iterative,
                           const SolverOptions& opts = {}) {
    StructureReport sr = structure(g);
    if (!sr.connected) throw DisconnectedError();

    detail::ExtremePairs ep = detail::extreme_eigenvalues(g, method, opts);

    BoundReport rep;
    rep.n = g.vertex_count();
    rep.m = g.edge_count();
    rep.max_degree = sr.max_degree;
    rep.diameter = *sr.diameter;
    rep.irregular = sr.irregular;
    rep.bipartite = sr.bipartition.has_value();
    rep.mu1 = ep.mu1;
    rep.mun = ep.mun;
    rep.gap_top = static_cast<double>(sr.max_degree) - ep.mu1;
    rep.gap_bottom = static_cast<double>(sr.max_degree) + ep.mun;

    rep.main_bound = main_gap_bound(rep.n, rep.diameter);
    rep.alon_sudakov = alon_sudakov_bound(rep.n, rep.diameter);
    rep.zhang = zhang_bound(rep.n, rep.max_degree, rep.diameter);
    rep.stevanovic = stevanovic_bound(rep.n, rep.max_degree);

    if (sr.irregular) {
        rep.gap_slack = rep.gap_top - rep.main_bound;
        rep.gap_verdict = detail::classify_slack(rep.gap_slack);

        double xmin = std::numeric_limits<double>::infinity();
        double alpha1 = 0.0;
        for (double x : ep.perron) {
            xmin = std::min(xmin, x);
            alpha1 += x;
        }
        rep.perron_rhs = static_cast<double>(sr.max_degree) - xmin / alpha1;
        rep.perron_slack = rep.perron_rhs - rep.mu1;
        rep.perron_verdict = detail::classify_slack(rep.perron_slack);
    }
    if (sr.irregular || !sr.bipartition) {
        rep.bottom_slack = rep.gap_bottom - rep.main_bound;
        rep.bottom_verdict = detail::classify_slack(rep.bottom_slack);
    }
    return rep;
}

}  // namespace gapcert
