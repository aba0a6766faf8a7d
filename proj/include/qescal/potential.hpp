#pragma once

/**
 * @file potential.hpp
 * @brief Numerical evaluators for every radial potential the library handles.
 */

#include "qescal/superpotential.hpp"

#include <cmath>
#include <string>

namespace qescal {

enum class PotentialKind { VPlus, VMinus, CalogeroU, V1PCT };

/// Which choice of the many-body potential U a CalogeroU spec represents.
enum class CalogeroCase {
    Qes,       ///< l(l+1)/r^2 + U = V-(r)
    Harmonic,  ///< U = r^2 + [alpha(alpha+1) - l(l+1)]/r^2, equal to r^2 at alpha = l
};

/// m = 1 point-canonical potential
/// V1 = r^2 + l(l+1)/r^2 - 8/(2r^2+2l+1) + 32 r^2/(2r^2+2l+1)^2.
inline double v1_value(double l, double r) {
    detail::require_positive_radius(r);
    const double r2 = r * r;
    const double q = 2 * r2 + 2 * l + 1;
    return r2 + l * (l + 1) / r2 - 8 / q + 32 * r2 / (q * q);
}

struct PotentialSpec {
    PotentialKind kind = PotentialKind::VMinus;
    Superpotential coeffs{Rational(1), Rational(2, 5)};
    /// Angular parameter for CalogeroU and V1PCT.
    double l = 0;
    CalogeroCase calogero = CalogeroCase::Qes;
    /// alpha used by the Harmonic case; may be irrational (alpha = l).
    double harmonic_alpha = 0;
    double additive_constant = 0;

    static PotentialSpec v_plus(const Superpotential& w) { return {PotentialKind::VPlus, w}; }
    static PotentialSpec v_minus(const Superpotential& w) { return {PotentialKind::VMinus, w}; }
    static PotentialSpec v1(double l) {
        PotentialSpec s;
        s.kind = PotentialKind::V1PCT;
        s.l = l;
        return s;
    }

    double operator()(double r) const {
        switch (kind) {
            case PotentialKind::VPlus:
                return partner_potential(coeffs, Sector::Plus, r) + additive_constant;
            case PotentialKind::VMinus:
                return partner_potential(coeffs, Sector::Minus, r) + additive_constant;
            case PotentialKind::V1PCT:
                return v1_value(l, r) + additive_constant;
            case PotentialKind::CalogeroU: {
                detail::require_positive_radius(r);
                const double r2 = r * r;
                const double ll = l * (l + 1);
                if (calogero == CalogeroCase::Harmonic) {
                    const double a = harmonic_alpha;
                    return r2 + (a * (a + 1) - ll) / r2 + additive_constant;
                }
                const double a = to_double(coeffs.alpha);
                const double g = to_double(coeffs.g1);
                const double q = 1 + g * r2;
                return r2 + ((a + 1) * (a + 2) - ll) / r2 - 4 * g / q + 8 * g * g * r2 / (q * q) + 2 * a + 5 +
                       additive_constant;
            }
        }
        return 0;
    }
};

inline std::string describe(const PotentialSpec& s) {
    switch (s.kind) {
        case PotentialKind::VPlus: return "V+(alpha=" + to_pretty_string(s.coeffs.alpha) + ")";
        case PotentialKind::VMinus:
            return "V-(alpha=" + to_pretty_string(s.coeffs.alpha) + ", g1=" + to_pretty_string(s.coeffs.g1) + ")";
        case PotentialKind::V1PCT: return "V1(l=" + std::to_string(s.l) + ")";
        case PotentialKind::CalogeroU:
            return std::string("U(") + (s.calogero == CalogeroCase::Qes ? "qes" : "harmonic") +
                   ", l=" + std::to_string(s.l) + ")";
    }
    return "?";
}

}  // namespace qescal
