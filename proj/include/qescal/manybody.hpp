#pragma once

/**
 * @file manybody.hpp
 * @brief N-particle Calogero Hamiltonian
 *
 *     H = -sum_i d^2/dx_i^2 + sum_{i<j} g/(x_i - x_j)^2 + U(r),
 *     r^2 = (1/N) sum_{i<j} (x_i - x_j)^2,
 *
 * reduced to a radial problem through the ansatz
 *     psi = r^{-(l+1)} chi(r) prod_{i<j} (x_i - x_j)^{a+1/2} P(x),
 *     a = sqrt(1+2g)/2,  b = N(N-1)a/2 + N(N+1)/4 - 2,  l = k + b,
 * where P is a translation-invariant symmetric homogeneous polynomial of degree k
 * annihilated by the Calogero operator
 *     sum_j d^2P/dx_j^2 + (a+1/2) sum_{j != k} (d_j - d_k)P / (x_j - x_k).
 */

#include "qescal/detail/parallel.hpp"
#include "qescal/laguerre.hpp"
#include "qescal/linalg.hpp"
#include "qescal/multipoly.hpp"
#include "qescal/potential.hpp"
#include "qescal/quadratic_field.hpp"
#include "qescal/spectral.hpp"
#include "qescal/susy.hpp"

#include <cmath>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qescal {

using SymmetricPoly = MultiPoly<QuadraticSurd>;

struct ReductionConstants {
    QuadraticSurd a;
    QuadraticSurd b;
};

inline ReductionConstants reduction_constants(int N, const Rational& g) {
    if (N < 2) throw std::invalid_argument("need at least two particles");
    if (g < Rational(-1, 2)) throw std::invalid_argument("coupling g must be >= -1/2, got " + to_pretty_string(g));
    const QuadraticSurd a = QuadraticSurd(Rational(1, 2)) * QuadraticSurd::sqrt_of(1 + 2 * g);
    const QuadraticSurd b = QuadraticSurd(Rational(N * (N - 1), 2)) * a + QuadraticSurd(Rational(N * (N + 1), 4) - 2);
    return {a, b};
}

struct ManyBodySpec {
    int N = 2;
    Rational g{0};
    int k = 0;
    int q = 1;  ///< 1-based index into solve_pkq(N, k, a)
    Rational alpha{1};
    CalogeroCase potential = CalogeroCase::Qes;

    QuadraticSurd a;
    QuadraticSurd b;
    QuadraticSurd l;

    static ManyBodySpec make(int N, const Rational& g, int k, const Rational& alpha,
                             CalogeroCase potential = CalogeroCase::Qes, int q = 1) {
        if (k < 0) throw std::invalid_argument("polynomial degree k must be nonnegative");
        if (q < 1) throw std::invalid_argument("polynomial index q is 1-based");
        if (potential == CalogeroCase::Qes && alpha <= 0)
            throw std::invalid_argument("alpha must be positive, got " + to_pretty_string(alpha));
        ManyBodySpec s;
        s.N = N;
        s.g = g;
        s.k = k;
        s.q = q;
        s.alpha = alpha;
        s.potential = potential;
        const auto rc = reduction_constants(N, g);
        s.a = rc.a;
        s.b = rc.b;
        s.l = QuadraticSurd(k) + rc.b;
        return s;
    }
};

/// p_j = sum_i (x_i - xbar)^j with xbar the centroid.
inline MultiPoly<Rational> centered_power_sum(int N, int j) {
    MultiPoly<Rational> mean(N);
    for (int i = 0; i < N; ++i) mean += MultiPoly<Rational>::variable(N, i);
    mean *= Rational(1, N);
    MultiPoly<Rational> sum(N);
    for (int i = 0; i < N; ++i) sum += (MultiPoly<Rational>::variable(N, i) - mean).pow(j);
    return sum;
}

/// Partitions of k into parts in [2, N], parts nonincreasing.
inline std::vector<std::vector<int>> power_sum_partitions(int N, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(max_part, remaining); p >= 2; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, k, N);
    return out;
}

inline std::string partition_label(const std::vector<int>& parts) {
    if (parts.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (!s.empty()) s += "*";
        s += "p" + std::to_string(parts[i]);
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    return s;
}

/// Columns are the polynomials, rows the monomials appearing in any of them.
template <class F>
Matrix<F> coefficient_matrix(const std::vector<MultiPoly<F>>& polys) {
    std::map<Exponents, std::size_t> row_of;
    for (const auto& p : polys)
        for (const auto& [e, c] : p.terms()) row_of.emplace(e, 0);
    std::size_t r = 0;
    for (auto& [e, idx] : row_of) idx = r++;
    Matrix<F> m(row_of.size(), std::vector<F>(polys.size(), F(0)));
    for (std::size_t c = 0; c < polys.size(); ++c)
        for (const auto& [e, v] : polys[c].terms()) m[row_of.at(e)][c] = v;
    return m;
}

/// Products of centered power sums of total degree k, reduced to a linearly
/// independent subset by exact rank computation.
inline std::vector<MultiPoly<Rational>> homogeneous_basis(int N, int k) {
    if (N < 2) throw std::invalid_argument("need at least two particles");
    if (k < 0) throw std::invalid_argument("degree must be nonnegative");
    std::map<int, MultiPoly<Rational>> power_sums;
    std::vector<MultiPoly<Rational>> basis;
    for (const auto& parts : power_sum_partitions(N, k)) {
        MultiPoly<Rational> prod = MultiPoly<Rational>::constant(N, Rational(1));
        for (int p : parts) {
            auto it = power_sums.find(p);
            if (it == power_sums.end()) it = power_sums.emplace(p, centered_power_sum(N, p)).first;
            prod = prod * it->second;
        }
        basis.push_back(std::move(prod));
        if (rank(coefficient_matrix(basis)) < basis.size()) basis.pop_back();
    }
    return basis;
}

/// sum_j d^2P/dx_j^2 + t sum_{j != k} (d_j - d_k)P/(x_j - x_k), with t = a + 1/2.
/// Each pairwise quotient is an exact division; a nonzero remainder throws.
template <class F>
MultiPoly<F> calogero_operator_apply_t(const MultiPoly<F>& P, const F& t) {
    const int N = P.nvars();
    MultiPoly<F> out(N);
    std::vector<MultiPoly<F>> grad;
    grad.reserve(static_cast<std::size_t>(N));
    for (int j = 0; j < N; ++j) {
        grad.push_back(P.derivative(j));
        out += grad.back().derivative(j);
    }
    MultiPoly<F> pair(N);
    for (int j = 0; j < N; ++j)
        for (int k = j + 1; k < N; ++k)
            pair += (grad[static_cast<std::size_t>(j)] - grad[static_cast<std::size_t>(k)]).divide_by_difference(j, k);
    // Each unordered pair appears twice in the sum over j != k.
    out += pair * (F(2) * t);
    return out;
}

template <class F>
MultiPoly<F> calogero_operator_apply(const MultiPoly<F>& P, const F& a) {
    return calogero_operator_apply_t(P, a + F(Rational(1, 2)));
}

/// Exact basis of the degree-k solutions; its size is g(N, k).
inline std::vector<SymmetricPoly> solve_pkq(int N, int k, const QuadraticSurd& a) {
    const auto basis = homogeneous_basis(N, k);
    std::vector<SymmetricPoly> lifted;
    std::vector<SymmetricPoly> images;
    for (const auto& b : basis) {
        lifted.push_back(b.cast<QuadraticSurd>());
        images.push_back(calogero_operator_apply(lifted.back(), a));
    }
    const auto kernel = null_space(coefficient_matrix(images), basis.size());
    std::vector<SymmetricPoly> out;
    for (const auto& v : kernel) {
        SymmetricPoly p(N);
        for (std::size_t i = 0; i < v.size(); ++i) p += lifted[i] * v[i];
        out.push_back(std::move(p));
    }
    return out;
}

/// r^2 = (1/N) sum_{i<j} (x_i - x_j)^2.
template <class T>
T radius_squared(std::span<const T> x) {
    T s(0);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) s = s + (x[i] - x[j]) * (x[i] - x[j]);
    return s / T(static_cast<long>(x.size()));
}

inline double radius(std::span<const double> x) { return std::sqrt(radius_squared(x)); }

/// U for the chosen case; l(l+1)/r^2 + U equals V-(r) (Qes) or r^2 at alpha = l (Harmonic).
inline PotentialSpec potential_U(const ManyBodySpec& spec) {
    PotentialSpec s;
    s.kind = PotentialKind::CalogeroU;
    s.calogero = spec.potential;
    s.l = spec.l.to_double();
    if (spec.potential == CalogeroCase::Qes) {
        s.coeffs = make_params(spec.alpha).coefficients();
    } else {
        s.harmonic_alpha = s.l;
    }
    return s;
}

/// psi_n on the ordered sector x_1 > x_2 > ... > x_N (unnormalized).
class ManyBodyEigenfunction {
public:
    ManyBodyEigenfunction(ManyBodySpec spec, int n, SymmetricPoly P) : spec_(std::move(spec)), n_(n), P_(std::move(P)) {
        if (n_ < 0) throw std::invalid_argument("radial quantum number must be nonnegative");
        l_ = spec_.l.to_double();
        pair_exponent_ = (spec_.a + QuadraticSurd(Rational(1, 2))).to_double();
        if (spec_.potential == CalogeroCase::Qes) {
            const auto params = make_params(spec_.alpha);
            chi_.emplace(chi_minus(params, n_));
            energy_ = QuadraticSurd(analytic_energy(params, Sector::Minus, n_));
            origin_exponent_ = QuadraticSurd(chi_->power()) - spec_.l - QuadraticSurd(1);
        } else {
            // alpha = l: chi = r^{l+1} e^{-r^2/2} L_n^{l+1/2}(r^2), E = 4n + 2l + 3.
            harmonic_laguerre_ = laguerre<double>(n_, l_ + 0.5);
            energy_ = QuadraticSurd(4 * n_ + 3) + QuadraticSurd(2) * spec_.l;
            origin_exponent_ = QuadraticSurd(0);
        }
        origin_exponent_value_ = origin_exponent_.to_double();
    }

    const ManyBodySpec& spec() const { return spec_; }
    int n() const { return n_; }
    const SymmetricPoly& P() const { return P_; }
    const QuadraticSurd& energy() const { return energy_; }
    /// Exponent of r in psi near the origin for fixed angles (alpha - l + 1 in the Qes case).
    const QuadraticSurd& origin_exponent() const { return origin_exponent_; }

    /// phi(r) = r^{-(l+1)} chi(r) without normalization.
    double radial_phi(double r) const {
        const double x = r * r;
        if (chi_) return std::pow(r, origin_exponent_value_) * std::exp(-0.5 * x) * chi_->radial()(x);
        return std::exp(-0.5 * x) * harmonic_laguerre_(x);
    }

    double operator()(std::span<const double> x) const {
        if (x.size() != static_cast<std::size_t>(spec_.N)) throw std::invalid_argument("wrong number of coordinates");
        double jastrow_log = 0;
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = i + 1; j < x.size(); ++j) {
                const double d = x[i] - x[j];
                if (!(d > 0)) throw std::domain_error("coordinates must be strictly decreasing (ordered sector)");
                jastrow_log += std::log(d);
            }
        const double jastrow = std::exp(pair_exponent_ * jastrow_log);
        return radial_phi(radius(x)) * jastrow * P_.evaluate(x);
    }
    double operator()(const std::vector<double>& x) const { return (*this)(std::span<const double>(x)); }

private:
    ManyBodySpec spec_;
    int n_;
    SymmetricPoly P_;
    std::optional<QuasiPolyWave> chi_;
    Poly<double> harmonic_laguerre_;
    QuadraticSurd energy_;
    QuadraticSurd origin_exponent_;
    double origin_exponent_value_ = 0;
    double l_ = 0;
    double pair_exponent_ = 0;
};

/// Builds psi_n for `P`, which must be a degree-k solution of the Calogero condition.
inline ManyBodyEigenfunction assemble_eigenfunction(const ManyBodySpec& spec, int n, const SymmetricPoly& P) {
    if (P.nvars() != spec.N) throw std::invalid_argument("P has the wrong number of variables");
    if (P.is_zero() || !P.is_homogeneous() || P.degree() != spec.k)
        throw std::invalid_argument("P must be a nonzero homogeneous polynomial of degree k");
    if (!calogero_operator_apply(P, spec.a).is_zero())
        throw std::invalid_argument("P is not annihilated by the Calogero operator");
    return ManyBodyEigenfunction(spec, n, P);
}

/// psi_n with P = solve_pkq(N, k, a)[q - 1].
inline ManyBodyEigenfunction assemble_eigenfunction(const ManyBodySpec& spec, int n) {
    const auto sols = solve_pkq(spec.N, spec.k, spec.a);
    if (spec.q > static_cast<int>(sols.size()))
        throw std::invalid_argument("no polynomial P_{k,q} with q = " + std::to_string(spec.q) + " (dimension " +
                                    std::to_string(sols.size()) + ")");
    return assemble_eigenfunction(spec, n, sols[static_cast<std::size_t>(spec.q - 1)]);
}

struct PointResidual {
    std::vector<double> point;
    double psi = 0;
    double h_psi_over_psi = 0;
    double rel_residual = 0;
};

struct ResidualReport {
    double energy = 0;
    double step = 0;
    std::vector<PointResidual> points;

    double max_rel_residual() const {
        double m = 0;
        for (const auto& p : points) m = std::max(m, p.rel_residual);
        return m;
    }
};

/// Relative residual |(H psi)/psi - E| / |E| at each point, from central second
/// differences at steps h and h/2 combined by one Richardson step.
inline ResidualReport residual_check(const ManyBodyEigenfunction& psi, double energy,
                                     const std::vector<std::vector<double>>& points, double h = 1e-3,
                                     bool parallel = true) {
    if (!(h > 0)) throw std::invalid_argument("finite-difference step must be positive");
    if (energy == 0) throw std::invalid_argument("relative residual needs a nonzero energy");
    const auto& spec = psi.spec();
    const PotentialSpec U = potential_U(spec);
    const double g = to_double(spec.g);
    constexpr double underflow_floor = 1e-280;

    for (const auto& x : points) {
        if (x.size() != static_cast<std::size_t>(spec.N)) throw std::invalid_argument("point has the wrong dimension");
        for (std::size_t i = 0; i + 1 < x.size(); ++i)
            for (std::size_t j = i + 1; j < x.size(); ++j)
                if (!(x[i] - x[j] >= 10 * h))
                    throw std::invalid_argument("points must be ordered with pairwise separation >= 10 h");
    }

    ResidualReport rep;
    rep.energy = energy;
    rep.step = h;
    rep.points.resize(points.size());
    detail::parallel_for(
        points.size(),
        [&](std::size_t p) {
            std::vector<double> x = points[p];
            const double f0 = psi(x);
            if (!(std::abs(f0) > underflow_floor)) throw std::invalid_argument("psi vanishes (or underflows) at a point");
            auto second = [&](std::size_t i, double step) {
                std::vector<double> y = x;
                y[i] = x[i] + step;
                const double fp = psi(y);
                y[i] = x[i] - step;
                const double fm = psi(y);
                return (fp - 2 * f0 + fm) / (step * step);
            };
            double laplacian = 0;
            for (std::size_t i = 0; i < x.size(); ++i) laplacian += richardson(second(i, h), second(i, h / 2));
            double pair = 0;
            for (std::size_t i = 0; i < x.size(); ++i)
                for (std::size_t j = i + 1; j < x.size(); ++j) pair += g / ((x[i] - x[j]) * (x[i] - x[j]));
            const double h_over = -laplacian / f0 + pair + U(radius(x));
            rep.points[p] = PointResidual{x, f0, h_over, std::abs(h_over - energy) / std::abs(energy)};
        },
        parallel);
    return rep;
}

/// Deterministic sample of ordered-sector points with every gap >= min_separation,
/// skipping points within `node_margin` (in r) of a radial node of psi and points
/// where P is small relative to its typical size.
inline std::vector<std::vector<double>> sample_sector_points(const ManyBodyEigenfunction& psi, int count,
                                                             std::uint64_t seed = 20240601,
                                                             double min_separation = 0.2, double node_margin = 0.02) {
    const int N = psi.spec().N;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> gap(min_separation, min_separation + 1.0);
    std::uniform_real_distribution<double> shift(-0.5, 0.5);
    std::vector<std::vector<double>> out;
    int attempts = 0;
    while (static_cast<int>(out.size()) < count) {
        if (++attempts > 1000 * count) throw std::runtime_error("could not sample enough admissible points");
        std::vector<double> x(static_cast<std::size_t>(N));
        x[0] = 0;
        for (int i = 1; i < N; ++i) x[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i - 1)] - gap(rng);
        double mean = 0;
        for (double v : x) mean += v;
        mean /= N;
        const double c = shift(rng);
        for (double& v : x) v = v - mean + c;

        // Consecutive gaps >= min_separation imply every pairwise gap is.
        const double r = radius(x);
        const double phi = psi.radial_phi(r);
        if (std::signbit(psi.radial_phi(r - node_margin)) != std::signbit(phi) ||
            std::signbit(psi.radial_phi(r + node_margin)) != std::signbit(phi))
            continue;
        if (psi.P().degree() > 0) {
            const double pv = psi.P().evaluate(std::span<const double>(x));
            const double scale = std::pow(r, psi.P().degree());
            if (std::abs(pv) < 1e-3 * scale) continue;
        }
        out.push_back(std::move(x));
    }
    return out;
}

}  // namespace qescal
