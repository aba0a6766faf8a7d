#pragma once

/**
 * @file susy.hpp
 * @brief Exact eigenfunctions of the partner pair and the ladder operators
 *        A+- = +-d/dr + W(r) acting on them.
 */

#include "qescal/laguerre.hpp"
#include "qescal/quadrature.hpp"
#include "qescal/superpotential.hpp"
#include "qescal/wave.hpp"

#include <cmath>
#include <stdexcept>

namespace qescal {

enum class LadderDirection { Plus, Minus };

/// sqrt(n! / Gamma(n + alpha + 3/2)).
inline Normalization chi_plus_normalization(const SuperPotentialParams& p, int n) {
    auto [beta, poch] = split_gamma(Rational(n) + p.alpha() + Rational(3, 2));
    return Normalization{1, factorial(static_cast<unsigned>(n)) / poch, beta};
}

/// chi_n^+ = sqrt(n!/Gamma(n+alpha+3/2)) r^{alpha+1} e^{-r^2/2} L_n^{alpha+1/2}(r^2).
inline QuasiPolyWave chi_plus(const SuperPotentialParams& p, int n) {
    if (n < 0) throw std::invalid_argument("chi_plus: n must be nonnegative");
    return QuasiPolyWave(chi_plus_normalization(p, n), p.alpha() + 1,
                         RationalFunction(laguerre(n, p.alpha() + Rational(1, 2))));
}

/// The bracket (1+g1+g1 x)/(1+g1 x) L_n^{alpha+1/2}(x) + L_{n-1}^{alpha+3/2}(x),
/// i.e. the direct image of chi_n^+ under A^-, before rewriting with hat-L.
inline RationalFunction chi_minus_ladder_bracket(const Superpotential& w, int n) {
    const Rational& g = w.g1;
    const RationalFunction ratio(RationalPoly{1 + g, g}, RationalPoly{Rational(1), g});
    return ratio * RationalFunction(laguerre(n, w.alpha + Rational(1, 2))) +
           RationalFunction(laguerre(n - 1, w.alpha + Rational(3, 2)));
}

/// hat-L^{alpha+3/2}_{n+1,1}(x) / L_1^{alpha+1/2}(-x).
inline RationalFunction chi_minus_exceptional_ratio(const Rational& alpha, int n) {
    const RationalPoly num = exceptional_laguerre(ExceptionalLaguerreSpec{n + 1, 1, alpha + Rational(3, 2)});
    const RationalPoly den = laguerre(1, alpha + Rational(1, 2)).reflected();
    return RationalFunction(num, den);
}

/// chi_n^- = sqrt(4 n!/(E_n Gamma(n+alpha+3/2))) r^{alpha+2} e^{-r^2/2}
///           hat-L^{alpha+3/2}_{n+1,1}(r^2) / L_1^{alpha+1/2}(-r^2).
/// The ladder-bracket form is built alongside and must agree exactly.
inline QuasiPolyWave chi_minus(const SuperPotentialParams& p, int n) {
    if (n < 0) throw std::invalid_argument("chi_minus: n must be nonnegative");
    const RationalFunction exceptional = chi_minus_exceptional_ratio(p.alpha(), n);
    if (exceptional != chi_minus_ladder_bracket(p.coefficients(), n))
        throw std::logic_error("chi_minus: exceptional-Laguerre form disagrees with the ladder form");

    Normalization scale = chi_plus_normalization(p, n).times(Rational(2)).over_sqrt(analytic_energy(p, Sector::Minus, n));
    // Phase fixed by chi > 0 as r -> 0+.
    if (sign(exceptional(Rational(0))) < 0) scale.sign = -scale.sign;
    return QuasiPolyWave(scale, p.alpha() + 2, exceptional);
}

/// A+- w = (+-d/dr + W) w, exact.
inline QuasiPolyWave apply_ladder(const Superpotential& w, LadderDirection dir, const QuasiPolyWave& wave) {
    QuasiPolyWave d = derivative(wave);
    if (dir == LadderDirection::Minus) d = scale_radial(Rational(-1), d);
    return add(d, multiply(superpotential_form(w), wave));
}
inline QuasiPolyWave apply_ladder(const SuperPotentialParams& p, LadderDirection dir, const QuasiPolyWave& wave) {
    return apply_ladder(p.coefficients(), dir, wave);
}

/// -chi'' + V chi - E chi, exact. Zero iff chi is an eigenfunction of -d^2 + V with eigenvalue E.
inline QuasiPolyWave schrodinger_residual(const QuasiPolyWave& chi, const RadialLaurent& potential, const Rational& energy) {
    const QuasiPolyWave kinetic = scale_radial(Rational(-1), derivative(derivative(chi)));
    return add(add(kinetic, multiply(potential, chi)), scale_radial(-energy, chi));
}

/// int_0^r_max a(r) b(r) dr. Both waves decay like e^{-r^2/2}, so the default
/// cutoff leaves a tail far below double precision.
inline double overlap(const QuasiPolyWave& a, const QuasiPolyWave& b, double r_max = 14.0, double tol = 1e-13) {
    if (!(r_max > 0)) throw std::invalid_argument("overlap: r_max must be positive");
    // Panels of unit width keep the adaptive rule from skipping the oscillating core.
    double sum = 0;
    const int panels = static_cast<int>(std::ceil(r_max));
    for (int i = 0; i < panels; ++i) {
        const double lo = r_max * i / panels, hi = r_max * (i + 1) / panels;
        sum += integrate([&](double r) { return r > 0 ? a(r) * b(r) : 0.0; }, lo, hi, tol);
    }
    return sum;
}

}  // namespace qescal
