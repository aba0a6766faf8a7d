#pragma once

/**
 * @file quadrature.hpp
 * @brief Adaptive composite Gauss-Legendre quadrature.
 */

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qescal {

namespace detail {

inline constexpr int kGaussOrder = 10;

struct GaussRule {
    std::array<double, kGaussOrder> nodes{};
    std::array<double, kGaussOrder> weights{};
};

/// Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
inline GaussRule make_gauss_rule() {
    GaussRule rule;
    constexpr int n = kGaussOrder;
    for (int i = 0; i < n; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        rule.nodes[static_cast<std::size_t>(i)] = x;
        rule.weights[static_cast<std::size_t>(i)] = 2 / ((1 - x * x) * dp * dp);
    }
    return rule;
}

inline const GaussRule& gauss_rule() {
    static const GaussRule rule = make_gauss_rule();
    return rule;
}

template <class F>
double gauss_panel(const F& f, double a, double b) {
    const auto& rule = gauss_rule();
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double s = 0;
    for (int i = 0; i < kGaussOrder; ++i)
        s += rule.weights[static_cast<std::size_t>(i)] * f(mid + half * rule.nodes[static_cast<std::size_t>(i)]);
    return s * half;
}

template <class F>
double adaptive(const F& f, double a, double b, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double left = gauss_panel(f, a, m);
    const double right = gauss_panel(f, m, b);
    const double both = left + right;
    if (!std::isfinite(both)) throw std::domain_error("integrand is not finite on the interval");
    if (std::abs(both - whole) <= tol) return both;
    if (depth <= 0) throw std::runtime_error("quadrature recursion limit reached; integrand looks singular");
    return adaptive(f, a, m, left, 0.5 * tol, depth - 1) + adaptive(f, m, b, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Integral of f over [a, b] to an estimated absolute error tol.
template <class F>
double integrate(const F& f, double a, double b, double tol = 1e-12, int max_depth = 40) {
    if (!(tol > 0)) throw std::invalid_argument("quadrature tolerance must be positive");
    if (a == b) return 0;
    if (b < a) return -integrate(f, b, a, tol, max_depth);
    return detail::adaptive(f, a, b, detail::gauss_panel(f, a, b), tol, max_depth);
}

}  // namespace qescal
