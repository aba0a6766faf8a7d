#pragma once

/**
 * @file superpotential.hpp
 * @brief The conditionally solvable superpotential
 *
 *     W(r) = r + 2 g1 r / (1 + g1 r^2) + (alpha + 1) / r,   g1 = 2 / (2 alpha + 3),
 *
 * its partner potentials V+- = W^2 +- W', their spectra, and the broken /
 * unbroken classification of the pair.
 */

#include "qescal/wave.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace qescal {

enum class Sector { Plus, Minus };

inline const char* to_string(Sector s) { return s == Sector::Plus ? "plus" : "minus"; }

/// Raw coefficients of W. g1 is free here; SuperPotentialParams is the constrained form.
struct Superpotential {
    Rational alpha;
    Rational g1;
};

/// (alpha, g1) with g1 = 2 / (2 alpha + 3) enforced; alpha > 0.
class SuperPotentialParams {
public:
    static SuperPotentialParams make(const Rational& alpha) {
        if (alpha <= 0) throw std::invalid_argument("alpha must be positive, got " + to_pretty_string(alpha));
        return SuperPotentialParams(alpha);
    }

    const Rational& alpha() const { return alpha_; }
    const Rational& g1() const { return g1_; }
    Superpotential coefficients() const { return {alpha_, g1_}; }

    bool operator==(const SuperPotentialParams& o) const { return alpha_ == o.alpha_; }

private:
    explicit SuperPotentialParams(Rational alpha) : alpha_(std::move(alpha)), g1_(Rational(2) / (2 * alpha_ + 3)) {}

    Rational alpha_;
    Rational g1_;
};

inline SuperPotentialParams make_params(const Rational& alpha) { return SuperPotentialParams::make(alpha); }

/// Coefficients with g1 multiplied by `factor`; used to show the constraint is necessary.
inline Superpotential detune(const SuperPotentialParams& p, const Rational& factor) {
    return {p.alpha(), p.g1() * factor};
}

namespace detail {
inline void require_positive_radius(double r) {
    if (!(r > 0) || !std::isfinite(r)) throw std::domain_error("radius must be finite and positive");
}
}  // namespace detail

inline double superpotential(const Superpotential& w, double r) {
    detail::require_positive_radius(r);
    const double g = to_double(w.g1);
    return r + 2 * g * r / (1 + g * r * r) + (to_double(w.alpha) + 1) / r;
}
inline double superpotential(const SuperPotentialParams& p, double r) { return superpotential(p.coefficients(), r); }

inline double superpotential_derivative(const Superpotential& w, double r) {
    detail::require_positive_radius(r);
    const double g = to_double(w.g1);
    const double q = 1 + g * r * r;
    return 1 + 2 * g * (1 - g * r * r) / (q * q) - (to_double(w.alpha) + 1) / (r * r);
}
inline double superpotential_derivative(const SuperPotentialParams& p, double r) {
    return superpotential_derivative(p.coefficients(), r);
}

/// W as r^{-1} [x + 2 g1 x / (1 + g1 x) + alpha + 1], x = r^2.
inline RadialLaurent superpotential_form(const Superpotential& w) {
    const RationalPoly x = RationalPoly::x();
    const RationalPoly q{Rational(1), w.g1};
    const RationalFunction body = RationalFunction(RationalPoly{w.alpha + 1, Rational(1)}) +
                                  RationalFunction(x * (2 * w.g1), q);
    return RadialLaurent(Rational(-1), body);
}

/// Closed-form partner potentials:
///   V+ = r^2 + alpha(alpha+1)/r^2 + 2 alpha + 7
///   V- = r^2 + (alpha+1)(alpha+2)/r^2 - 4 g1/(1+g1 r^2) + 8 g1^2 r^2/(1+g1 r^2)^2 + 2 alpha + 5
inline double partner_potential(const Superpotential& w, Sector sector, double r) {
    detail::require_positive_radius(r);
    const double a = to_double(w.alpha);
    const double r2 = r * r;
    if (sector == Sector::Plus) return r2 + a * (a + 1) / r2 + 2 * a + 7;
    const double g = to_double(w.g1);
    const double q = 1 + g * r2;
    return r2 + (a + 1) * (a + 2) / r2 - 4 * g / q + 8 * g * g * r2 / (q * q) + 2 * a + 5;
}
inline double partner_potential(const SuperPotentialParams& p, Sector sector, double r) {
    return partner_potential(p.coefficients(), sector, r);
}

/// W^2 +- W' evaluated numerically, the factorized route to V+-.
inline double factorized_potential(const Superpotential& w, Sector sector, double r) {
    const double W = superpotential(w, r);
    const double dW = superpotential_derivative(w, r);
    return sector == Sector::Plus ? W * W + dW : W * W - dW;
}

/// Closed-form V+- as exact r^{-2} * F(x).
inline RadialLaurent partner_potential_form(const Superpotential& w, Sector sector) {
    const Rational& a = w.alpha;
    if (sector == Sector::Plus)
        return RadialLaurent(Rational(-2), RationalFunction(RationalPoly{a * (a + 1), 2 * a + 7, Rational(1)}));
    const RationalPoly x = RationalPoly::x();
    const RationalPoly q{Rational(1), w.g1};
    RationalFunction body(RationalPoly{(a + 1) * (a + 2), 2 * a + 5, Rational(1)});
    body += RationalFunction(x * (-4 * w.g1), q);
    body += RationalFunction(x * x * (8 * w.g1 * w.g1), q * q);
    return RadialLaurent(Rational(-2), body);
}

/// W^2 +- W' computed symbolically from superpotential_form.
inline RadialLaurent factorized_potential_form(const Superpotential& w, Sector sector) {
    const RadialLaurent W = superpotential_form(w);
    const RadialLaurent dW = W.derivative();
    return sector == Sector::Plus ? W * W + dW : W * W - dW;
}

/// E_n = 4 (n + alpha + 5/2), the same in both sectors.
inline Rational analytic_energy(const SuperPotentialParams& p, Sector /*sector*/, int n) {
    if (n < 0) throw std::invalid_argument("energy index must be nonnegative");
    return 4 * (Rational(n) + p.alpha() + Rational(5, 2));
}

enum class SusyPhaseValue { Broken, Unbroken };

inline const char* to_string(SusyPhaseValue v) { return v == SusyPhaseValue::Broken ? "broken" : "unbroken"; }

struct SusyPhase {
    SusyPhaseValue value;
    /// r -> 0 exponents of exp(-int W) and exp(+int W).
    std::pair<Rational, Rational> origin_exponents;
    std::string evidence;
};

/// Leading Laurent data of a superpotential: W ~ origin_residue / r near 0 and
/// W ~ infinity_slope * r at infinity.
struct SuperpotentialAsymptotics {
    Rational origin_residue;
    Rational infinity_slope;
};

inline SuperpotentialAsymptotics asymptotics(const Superpotential& w) { return {w.alpha + 1, Rational(1)}; }

/// A zero mode exp(-+ int W) ~ r^e exp(-+ slope r^2 / 2) is square integrable iff
/// 2e > -1 at the origin and the Gaussian decays at infinity.
inline SusyPhase classify_susy(const SuperpotentialAsymptotics& w) {
    const Rational minus_exp = -w.origin_residue;
    const Rational plus_exp = w.origin_residue;
    const bool minus_origin_ok = 2 * minus_exp > -1;
    const bool minus_infinity_ok = w.infinity_slope > 0;
    const bool plus_origin_ok = 2 * plus_exp > -1;
    const bool plus_infinity_ok = w.infinity_slope < 0;
    const bool minus_normalizable = minus_origin_ok && minus_infinity_ok;
    const bool plus_normalizable = plus_origin_ok && plus_infinity_ok;

    std::string evidence = "exp(-int W) ~ r^" + to_pretty_string(minus_exp) + " at 0 (" +
                           (minus_origin_ok ? "integrable" : "divergent") + "), " +
                           (minus_infinity_ok ? "decays" : "grows") + " at infinity; exp(+int W) ~ r^" +
                           to_pretty_string(plus_exp) + " at 0 (" + (plus_origin_ok ? "integrable" : "divergent") +
                           "), " + (plus_infinity_ok ? "decays" : "grows") + " at infinity";
    const auto value = (minus_normalizable || plus_normalizable) ? SusyPhaseValue::Unbroken : SusyPhaseValue::Broken;
    return {value, {minus_exp, plus_exp}, std::move(evidence)};
}

inline SusyPhase classify_susy(const SuperPotentialParams& p) { return classify_susy(asymptotics(p.coefficients())); }

}  // namespace qescal
