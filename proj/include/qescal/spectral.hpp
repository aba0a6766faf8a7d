#pragma once

/**
 * @file spectral.hpp
 * @brief Finite-difference radial eigensolver.
 *
 * -d^2/dr^2 + V(r) is discretized with the three-point Laplacian on the
 * interior nodes r_i = r_min + i h, i = 1..n, h = (r_max - r_min)/(n+1), with
 * Dirichlet conditions at r_min and r_max. With the default r_min = 0 the first
 * node sits one step off the origin, so V is never evaluated at r = 0.
 *
 * Eigenvalues come from Sturm-sequence bisection of the symmetric tridiagonal
 * matrix, eigenvectors from shifted inverse iteration, and grid dependence is
 * removed with one Richardson step between h and h/2.
 */

#include "qescal/detail/parallel.hpp"
#include "qescal/potential.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

namespace qescal {

struct GridSpec {
    double r_min = 0.0;
    double r_max = 12.0;
    int n_points = 4000;

    double step() const { return (r_max - r_min) / (n_points + 1); }
    double node(int i) const { return r_min + (i + 1) * step(); }  ///< i in [0, n_points)

    void validate() const {
        if (!(r_min >= 0) || !(r_max > r_min)) throw std::invalid_argument("grid needs 0 <= r_min < r_max");
        if (n_points < 3) throw std::invalid_argument("grid needs at least 3 interior points");
    }

    /// Same interval with exactly half the step: 2n + 1 interior points.
    GridSpec refined() const { return {r_min, r_max, 2 * n_points + 1}; }
};

/// Symmetric tridiagonal matrix.
struct Tridiag {
    std::vector<double> diag;
    std::vector<double> off;

    std::size_t size() const { return diag.size(); }

    /// Infinity norm (max absolute row sum).
    double norm() const {
        double best = 0;
        for (std::size_t i = 0; i < diag.size(); ++i) {
            double row = std::abs(diag[i]);
            if (i > 0) row += std::abs(off[i - 1]);
            if (i + 1 < diag.size()) row += std::abs(off[i]);
            best = std::max(best, row);
        }
        return best;
    }

    std::vector<double> apply(const std::vector<double>& v) const {
        const std::size_t n = size();
        std::vector<double> out(n);
        for (std::size_t i = 0; i < n; ++i) {
            double s = diag[i] * v[i];
            if (i > 0) s += off[i - 1] * v[i - 1];
            if (i + 1 < n) s += off[i] * v[i + 1];
            out[i] = s;
        }
        return out;
    }
};

template <class Potential>
Tridiag discretize(const Potential& potential, const GridSpec& grid) {
    grid.validate();
    const double h = grid.step();
    const double inv_h2 = 1.0 / (h * h);
    Tridiag t;
    t.diag.resize(static_cast<std::size_t>(grid.n_points));
    t.off.assign(static_cast<std::size_t>(grid.n_points - 1), -inv_h2);
    for (int i = 0; i < grid.n_points; ++i) {
        const double v = potential(grid.node(i));
        if (!std::isfinite(v)) throw std::domain_error("potential is not finite on a grid node");
        t.diag[static_cast<std::size_t>(i)] = 2 * inv_h2 + v;
    }
    return t;
}

/// Number of eigenvalues strictly below lambda (signs of the LDL^T pivots).
inline int sturm_count(const Tridiag& t, double lambda) {
    const double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
    int count = 0;
    double q = 1;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const double e2 = i > 0 ? t.off[i - 1] * t.off[i - 1] : 0.0;
        q = t.diag[i] - lambda - (i > 0 ? e2 / q : 0.0);
        if (q == 0) q = -tiny;
        if (q < 0) ++count;
    }
    return count;
}

/// Gershgorin interval containing the spectrum.
inline std::pair<double, double> gershgorin(const Tridiag& t) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (std::size_t i = 0; i < t.size(); ++i) {
        double radius = 0;
        if (i > 0) radius += std::abs(t.off[i - 1]);
        if (i + 1 < t.size()) radius += std::abs(t.off[i]);
        lo = std::min(lo, t.diag[i] - radius);
        hi = std::max(hi, t.diag[i] + radius);
    }
    return {lo, hi};
}

/// The k-th smallest eigenvalue (0-based) by bisection on the Sturm count.
inline double kth_eigenvalue(const Tridiag& t, int k, double abs_tol = 1e-12) {
    auto [lo, hi] = gershgorin(t);
    const double eps = std::numeric_limits<double>::epsilon();
    for (int iter = 0; iter < 400; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double tol = std::max(abs_tol, 2 * eps * std::max(std::abs(lo), std::abs(hi)));
        if (hi - lo <= tol || mid <= lo || mid >= hi) break;
        if (sturm_count(t, mid) > k)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

/// The `count` smallest eigenvalues in nondecreasing order, repeated by multiplicity.
inline std::vector<double> lowest_eigenvalues(const Tridiag& t, int count, bool parallel = true) {
    if (count < 0 || static_cast<std::size_t>(count) > t.size())
        throw std::invalid_argument("requested more eigenvalues than the matrix dimension");
    std::vector<double> out(static_cast<std::size_t>(count));
    detail::parallel_for(out.size(), [&](std::size_t k) { out[k] = kth_eigenvalue(t, static_cast<int>(k)); }, parallel);
    return out;
}

namespace detail {

/// LU factorization with partial pivoting of a general tridiagonal matrix
/// (sub, diag, super); the second superdiagonal appears from row swaps.
struct TridiagLU {
    std::vector<double> dl, d, du, du2;
    std::vector<bool> swapped;

    TridiagLU(std::vector<double> sub, std::vector<double> diag, std::vector<double> super, double zero_pivot)
        : dl(std::move(sub)), d(std::move(diag)), du(std::move(super)) {
        const std::size_t n = d.size();
        du2.assign(n > 2 ? n - 2 : 0, 0.0);
        swapped.assign(n > 1 ? n - 1 : 0, false);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (std::abs(d[i]) >= std::abs(dl[i])) {
                if (d[i] == 0) d[i] = zero_pivot;
                const double fact = dl[i] / d[i];
                dl[i] = fact;
                d[i + 1] -= fact * du[i];
            } else {
                const double fact = d[i] / dl[i];
                d[i] = dl[i];
                dl[i] = fact;
                const double temp = du[i];
                du[i] = d[i + 1];
                d[i + 1] = temp - fact * d[i + 1];
                if (i + 2 < n) {
                    du2[i] = du[i + 1];
                    du[i + 1] = -fact * du[i + 1];
                }
                swapped[i] = true;
            }
        }
        if (n > 0 && d[n - 1] == 0) d[n - 1] = zero_pivot;
    }

    void solve(std::vector<double>& b) const {
        const std::size_t n = d.size();
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (swapped[i]) std::swap(b[i], b[i + 1]);
            b[i + 1] -= dl[i] * b[i];
        }
        for (std::size_t ii = n; ii-- > 0;) {
            double s = b[ii];
            if (ii + 1 < n) s -= du[ii] * b[ii + 1];
            if (ii + 2 < n) s -= du2[ii] * b[ii + 2];
            b[ii] = s / d[ii];
        }
    }
};

inline double norm2(const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

}  // namespace detail

/// Unit eigenvector for an eigenvalue estimate `lambda` by shifted inverse iteration.
/// Sign convention: the first component that is not negligible is positive.
inline std::vector<double> eigenvector(const Tridiag& t, double lambda, int max_iterations = 8) {
    const std::size_t n = t.size();
    if (n == 0) throw std::invalid_argument("eigenvector of an empty matrix");
    const double tnorm = t.norm();
    std::vector<double> shifted(t.diag);
    for (double& x : shifted) x -= lambda;
    const detail::TridiagLU lu(t.off, shifted, t.off, std::numeric_limits<double>::epsilon() * tnorm);

    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 + 0.5 * std::sin(0.7 * static_cast<double>(i) + 0.3);
    double residual = std::numeric_limits<double>::infinity();
    for (int it = 0; it < max_iterations; ++it) {
        lu.solve(v);
        const double nv = detail::norm2(v);
        if (!(nv > 0) || !std::isfinite(nv)) throw std::runtime_error("inverse iteration broke down");
        for (double& x : v) x /= nv;
        auto tv = t.apply(v);
        double r2 = 0;
        for (std::size_t i = 0; i < n; ++i) r2 += (tv[i] - lambda * v[i]) * (tv[i] - lambda * v[i]);
        residual = std::sqrt(r2);
        if (residual <= 1e-8 * tnorm) break;
    }
    if (!(residual <= 1e-8 * tnorm))
        throw std::runtime_error("inverse iteration did not converge; lambda is not close to an eigenvalue");

    double vmax = 0;
    for (double x : v) vmax = std::max(vmax, std::abs(x));
    for (double x : v) {
        if (std::abs(x) > 1e-6 * vmax) {
            if (x < 0)
                for (double& y : v) y = -y;
            break;
        }
    }
    return v;
}

/// Removes the O(h^2) term from two estimates at steps h and h/2.
inline double richardson(double e_h, double e_h2) { return (4 * e_h2 - e_h) / 3; }

/// Lowest `count` eigenvalues on `grid` and on its refinement, plus the extrapolation.
struct ExtrapolatedEigenvalues {
    std::vector<double> coarse;
    std::vector<double> fine;
    std::vector<double> extrapolated;
};

template <class Potential>
ExtrapolatedEigenvalues extrapolated_eigenvalues(const Potential& potential, const GridSpec& grid, int count,
                                                 bool parallel = true) {
    ExtrapolatedEigenvalues out;
    out.coarse = lowest_eigenvalues(discretize(potential, grid), count, parallel);
    out.fine = lowest_eigenvalues(discretize(potential, grid.refined()), count, parallel);
    out.extrapolated.resize(out.coarse.size());
    for (std::size_t i = 0; i < out.coarse.size(); ++i) out.extrapolated[i] = richardson(out.coarse[i], out.fine[i]);
    return out;
}

/// Analytic vs numeric eigenvalues for one potential.
struct SpectrumReport {
    std::string potential;
    std::vector<Rational> analytic;
    std::vector<double> numeric;               ///< finer of the two grids
    std::vector<double> numeric_extrapolated;  ///< Richardson value
    std::vector<double> rel_errors;            ///< |extrapolated - analytic| / |analytic|
    GridSpec grid;

    double max_rel_error() const {
        double m = 0;
        for (double e : rel_errors) m = std::max(m, e);
        return m;
    }
};

template <class Potential>
SpectrumReport spectrum_report(const Potential& potential, std::string label, std::vector<Rational> analytic,
                               const GridSpec& grid) {
    SpectrumReport rep;
    rep.potential = std::move(label);
    rep.grid = grid;
    const auto ev = extrapolated_eigenvalues(potential, grid, static_cast<int>(analytic.size()));
    rep.numeric = ev.fine;
    rep.numeric_extrapolated = ev.extrapolated;
    for (std::size_t i = 0; i < analytic.size(); ++i) {
        const double a = to_double(analytic[i]);
        rep.rel_errors.push_back(std::abs(ev.extrapolated[i] - a) / std::abs(a));
    }
    rep.analytic = std::move(analytic);
    return rep;
}

}  // namespace qescal
