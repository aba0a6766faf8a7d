#pragma once

/**
 * @file laguerre.hpp
 * @brief Generalized Laguerre polynomials L_n^alpha and the exceptional X_m
 *        Laguerre polynomials built from them.
 *
 * Everything is templated on the coefficient field so that the same code
 * produces exact rational polynomials (alpha rational) and double-precision
 * ones (alpha irrational, e.g. when it is tied to a Calogero coupling).
 */

#include "qescal/poly.hpp"

#include <stdexcept>

namespace qescal {

/// Degree index n and superscript alpha of L_n^alpha. n = -1 is the zero polynomial.
template <class T>
struct BasicLaguerreSpec {
    int n = 0;
    T alpha{};
};
using LaguerreSpec = BasicLaguerreSpec<Rational>;

/// Hat-L^k_{n,m}; valid for n >= m.
template <class T>
struct BasicExceptionalLaguerreSpec {
    int n = 0;
    int m = 0;
    T k{};
};
using ExceptionalLaguerreSpec = BasicExceptionalLaguerreSpec<Rational>;

/// L_n^alpha(x) from the three-term recurrence
/// (j+1) L_{j+1} = (2j+1+alpha-x) L_j - (j+alpha) L_{j-1}.
template <class T>
Poly<T> laguerre(const BasicLaguerreSpec<T>& spec) {
    if (spec.n < -1) throw std::invalid_argument("laguerre: degree index below -1");
    if (spec.n == -1) return Poly<T>();
    const T& a = spec.alpha;
    Poly<T> prev;                        // L_{-1}
    Poly<T> cur = Poly<T>::constant(T(1));  // L_0
    for (int j = 0; j < spec.n; ++j) {
        const T jj(j);
        Poly<T> lin{T(2) * jj + T(1) + a, T(-1)};
        Poly<T> next = (lin * cur - prev * (jj + a)) / (jj + T(1));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

template <class T>
Poly<T> laguerre(int n, const T& alpha) {
    return laguerre(BasicLaguerreSpec<T>{n, alpha});
}

/// d^order/dx^order L_n^alpha by differentiating the coefficients.
template <class T>
Poly<T> laguerre_derivative(const BasicLaguerreSpec<T>& spec, unsigned order) {
    return laguerre(spec).derivative(order);
}

/// The index-shift form (-1)^order L^{alpha+order}_{n-order}, zero when order > n.
template <class T>
Poly<T> laguerre_derivative_by_shift(const BasicLaguerreSpec<T>& spec, unsigned order) {
    const int o = static_cast<int>(order);
    if (spec.n < 0 || o > spec.n) return Poly<T>();
    Poly<T> p = laguerre(BasicLaguerreSpec<T>{spec.n - o, spec.alpha + T(o)});
    return (order % 2 == 1) ? -p : p;
}

/// Hat-L^k_{n,m}(x) = L_m^k(-x) L^{k-1}_{n-m}(x) + L_m^{k-1}(-x) L^k_{n-m-1}(x).
template <class T>
Poly<T> exceptional_laguerre(const BasicExceptionalLaguerreSpec<T>& spec) {
    if (spec.m < 0) throw std::invalid_argument("exceptional_laguerre: m must be nonnegative");
    if (spec.n < spec.m) throw std::invalid_argument("exceptional_laguerre: requires n >= m");
    const T& k = spec.k;
    const Poly<T> first = laguerre(spec.m, k).reflected() * laguerre(spec.n - spec.m, k - T(1));
    const Poly<T> second = laguerre(spec.m, k - T(1)).reflected() * laguerre(spec.n - spec.m - 1, k);
    return first + second;
}

}  // namespace qescal
