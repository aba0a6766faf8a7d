#pragma once

/**
 * @file root_count.hpp
 * @brief Exact real-root counting for rational polynomials with Sturm chains.
 */

#include "qescal/poly.hpp"

#include <optional>
#include <vector>

namespace qescal {

/// Sturm chain p, p', -rem(p, p'), ... computed exactly.
inline std::vector<RationalPoly> sturm_chain(const RationalPoly& p) {
    std::vector<RationalPoly> chain;
    if (p.is_zero()) return chain;
    chain.push_back(p);
    chain.push_back(p.derivative());
    while (!chain.back().is_zero()) {
        auto r = divmod(chain[chain.size() - 2], chain.back()).second;
        chain.push_back(-r);
    }
    chain.pop_back();
    return chain;
}

namespace detail {

inline int count_sign_changes(const std::vector<int>& signs) {
    int changes = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

/// Sign of each chain member at a point; nullopt = +infinity, with
/// `minus_infinity` selecting -infinity instead.
inline std::vector<int> chain_signs(const std::vector<RationalPoly>& chain, const std::optional<Rational>& at,
                                    bool minus_infinity = false) {
    std::vector<int> out;
    out.reserve(chain.size());
    for (const auto& q : chain) {
        if (at) {
            out.push_back(sign(q(*at)));
        } else {
            int s = sign(q.leading());
            if (minus_infinity && q.degree() % 2 == 1) s = -s;
            out.push_back(s);
        }
    }
    return out;
}

}  // namespace detail

/// Number of distinct real roots in (lo, hi]; nullopt bounds are infinite.
inline int count_real_roots(const RationalPoly& p, const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
    if (p.is_zero()) throw std::domain_error("root count of the zero polynomial");
    const auto chain = sturm_chain(p);
    const int at_lo = detail::count_sign_changes(detail::chain_signs(chain, lo, /*minus_infinity=*/true));
    const int at_hi = detail::count_sign_changes(detail::chain_signs(chain, hi));
    return at_lo - at_hi;
}

/// Distinct roots in (0, inf). A root at 0 itself is not counted.
inline int count_positive_roots(const RationalPoly& p) { return count_real_roots(p, Rational(0), std::nullopt); }

/// Distinct roots in (-inf, 0).
inline int count_negative_roots(const RationalPoly& p) {
    return count_real_roots(p, std::nullopt, Rational(0)) - (p(Rational(0)) == 0 ? 1 : 0);
}

inline bool is_squarefree(const RationalPoly& p) { return gcd(p, p.derivative()).degree() <= 0; }

}  // namespace qescal
