#pragma once

/**
 * @file pct.hpp
 * @brief The m = 1 rationally extended oscillator obtained by a point
 *        canonical transformation, and its correspondence with V-.
 *
 * With l = alpha + 1 and g1 = 2/(2 alpha + 3), V1 and V- differ by the constant
 * 2 alpha + 5, and the m = 1 wavefunctions coincide with chi_n^-.
 */

#include "qescal/laguerre.hpp"
#include "qescal/potential.hpp"
#include "qescal/spectral.hpp"
#include "qescal/susy.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qescal {

struct PCTSpec {
    Rational l;
    int m = 1;

    static PCTSpec for_alpha(const Rational& alpha) { return {alpha + 1, 1}; }

    void validate() const {
        if (m != 1) throw std::invalid_argument("only the m = 1 member of the family is supported");
        if (l + Rational(1, 2) <= 0) throw std::invalid_argument("l must exceed -1/2");
    }
};

inline double v1_potential(const PCTSpec& spec, double r) {
    spec.validate();
    return v1_value(to_double(spec.l), r);
}

/// V1 as an exact r^{-2} F(r^2):
///   r^2 + l(l+1)/r^2 - 8/(2r^2 + 2l + 1) + 32 r^2/(2r^2 + 2l + 1)^2.
inline RadialLaurent v1_form(const PCTSpec& spec) {
    spec.validate();
    const Rational& l = spec.l;
    const RationalPoly x = RationalPoly::x();
    const RationalPoly q{2 * l + 1, Rational(2)};
    RationalFunction body(RationalPoly{l * (l + 1), Rational(0), Rational(1)});
    body += RationalFunction(x * Rational(-8), q);
    body += RationalFunction(x * x * Rational(32), q * q);
    return RadialLaurent(Rational(-2), body);
}

/// V- - V1 simplified symbolically; the constant if it is one.
inline std::optional<Rational> symbolic_potential_shift(const Rational& alpha) {
    const auto params = make_params(alpha);
    const RadialLaurent d = partner_potential_form(params.coefficients(), Sector::Minus) - v1_form(PCTSpec::for_alpha(alpha));
    if (d.is_zero()) return Rational(0);
    if (d.power() != 0 || !d.f().is_polynomial() || d.f().num().degree() != 0) return std::nullopt;
    return d.f().num()[0];
}

/// Energies of -d^2 + V1: 4n + 2l + 3.
inline Rational pct_energy(const PCTSpec& spec, int n) {
    if (n < 0) throw std::invalid_argument("energy index must be nonnegative");
    return 4 * Rational(n) + 2 * spec.l + 3;
}

/// The constant V-(r) - V1(r) at l = alpha + 1.
inline Rational pct_energy_shift(const Rational& alpha) { return 2 * alpha + 5; }

struct PotentialComparison {
    Rational alpha;
    Rational l;
    double constant = 0;       ///< mean of V- - V1 over the grid
    double max_deviation = 0;  ///< max |(V- - V1) - constant|
    Rational expected_constant;
    /// Extrapolated E_n(V-) - E_n(V1); empty unless measure_spectra_shift ran.
    std::vector<double> spectra_shift;
};

inline PotentialComparison compare_v1_vminus(const Rational& alpha, const std::vector<double>& radii) {
    if (radii.empty()) throw std::invalid_argument("comparison grid is empty");
    const auto params = make_params(alpha);
    const auto spec = PCTSpec::for_alpha(alpha);
    std::vector<double> diff;
    diff.reserve(radii.size());
    double mean = 0;
    for (double r : radii) {
        diff.push_back(partner_potential(params, Sector::Minus, r) - v1_potential(spec, r));
        mean += diff.back();
    }
    mean /= static_cast<double>(radii.size());
    double dev = 0;
    for (double d : diff) dev = std::max(dev, std::abs(d - mean));
    return {alpha, spec.l, mean, dev, pct_energy_shift(alpha), {}};
}

/// Fills c.spectra_shift from the lowest `count` extrapolated eigenvalues of both potentials.
inline void measure_spectra_shift(PotentialComparison& c, const GridSpec& grid, int count) {
    const auto params = make_params(c.alpha);
    const auto spec = PCTSpec::for_alpha(c.alpha);
    const auto vm = extrapolated_eigenvalues([&](double r) { return partner_potential(params, Sector::Minus, r); },
                                             grid, count);
    const auto v1 = extrapolated_eigenvalues([&](double r) { return v1_potential(spec, r); }, grid, count);
    c.spectra_shift.clear();
    for (int i = 0; i < count; ++i)
        c.spectra_shift.push_back(vm.extrapolated[static_cast<std::size_t>(i)] - v1.extrapolated[static_cast<std::size_t>(i)]);
}

/// Evenly spaced radii in [lo, hi].
inline std::vector<double> linear_grid(double lo, double hi, int count) {
    if (count < 2) throw std::invalid_argument("grid needs at least two points");
    std::vector<double> r(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) r[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (count - 1);
    return r;
}

/// chi_{n,1} = N r^{l+1} e^{-r^2/2} hat-L^{l+1/2}_{n+1,1}(r^2) / L_1^{l-1/2}(-r^2), n >= 0 counting
/// levels from the ground state (energy 4n + 2l + 3). The normalization is the family's
/// N_{n',1} = [(n'-1)! / ((l+1/2+n') Gamma(l+1/2+n'-1))]^{1/2} at n' = n + 1.
inline QuasiPolyWave pct_wavefunction(const PCTSpec& spec, int n) {
    spec.validate();
    if (n < 0) throw std::invalid_argument("pct_wavefunction: n must be nonnegative");
    const Rational& l = spec.l;
    const RationalPoly num = exceptional_laguerre(ExceptionalLaguerreSpec{n + 1, 1, l + Rational(1, 2)});
    const RationalPoly den = laguerre(1, l - Rational(1, 2)).reflected();
    const int np = n + spec.m;
    auto [beta, poch] = split_gamma(l + Rational(1, 2) + np - 1);
    Normalization scale{1, factorial(static_cast<unsigned>(np - 1)) / ((l + Rational(1, 2) + np) * poch), beta};
    return QuasiPolyWave(scale, l + 1, RationalFunction(num, den));
}

}  // namespace qescal
