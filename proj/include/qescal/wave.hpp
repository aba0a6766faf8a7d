#pragma once

/**
 * @file wave.hpp
 * @brief Exact radial expressions of the form r^p f(r^2), and wavefunctions
 *        c * r^s * exp(-r^2/2) * R(r^2) with R a rational function.
 *
 * The variable of every RationalFunction here is x = r^2. Both types keep a
 * canonical form in which powers of x are pulled out of R into the r-exponent,
 * so exact equality can be decided structurally.
 */

#include "qescal/rational_function.hpp"
#include "qescal/root_count.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>

namespace qescal {

namespace detail {

/// Moves x^e factors of num and den into the r-exponent (each x is r^2).
inline void pull_out_x_powers(Rational& power, RationalFunction& f) {
    if (f.is_zero()) return;
    const auto en = f.num().low_order();
    const auto ed = f.den().low_order();
    if (en == 0 && ed == 0) return;
    power += Rational(2 * static_cast<long>(en)) - Rational(2 * static_cast<long>(ed));
    f = RationalFunction(f.num().shifted_down(en), f.den().shifted_down(ed));
}

inline double real_power(double r, const Rational& p) {
    if (denominator(p) == 1) return std::pow(r, static_cast<double>(numerator(p).convert_to<long>()));
    return std::pow(r, to_double(p));
}

}  // namespace detail

/// r^power * f(r^2).
class RadialLaurent {
public:
    RadialLaurent() = default;
    RadialLaurent(Rational power, RationalFunction f) : power_(std::move(power)), f_(std::move(f)) {
        detail::pull_out_x_powers(power_, f_);
    }

    const Rational& power() const { return power_; }
    const RationalFunction& f() const { return f_; }
    bool is_zero() const { return f_.is_zero(); }

    /// Same function written with exponent `target`; the gap must be an even integer >= 0.
    RationalFunction radial_at_power(const Rational& target) const {
        if (f_.is_zero()) return f_;
        const Rational gap = power_ - target;
        if (gap < 0 || denominator(gap) != 1 || numerator(gap) % 2 != 0)
            throw std::domain_error("radial forms differ by a non-even power of r");
        const auto e = numerator(gap / 2).convert_to<std::size_t>();
        return RationalFunction(f_.num().shifted_up(e), f_.den());
    }

    friend RadialLaurent operator*(const RadialLaurent& a, const RadialLaurent& b) {
        return RadialLaurent(a.power_ + b.power_, a.f_ * b.f_);
    }
    friend RadialLaurent operator+(const RadialLaurent& a, const RadialLaurent& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const Rational low = a.power_ < b.power_ ? a.power_ : b.power_;
        return RadialLaurent(low, a.radial_at_power(low) + b.radial_at_power(low));
    }
    RadialLaurent operator-() const { return RadialLaurent(power_, -f_); }
    friend RadialLaurent operator-(const RadialLaurent& a, const RadialLaurent& b) { return a + (-b); }
    friend RadialLaurent operator*(const Rational& c, const RadialLaurent& a) {
        return RadialLaurent(a.power_, c * a.f_);
    }

    /// d/dr [r^p f(r^2)] = r^{p-1} (p f + 2 x f').
    RadialLaurent derivative() const {
        const RationalFunction x(RationalPoly::x());
        return RadialLaurent(power_ - 1, power_ * f_ + Rational(2) * (x * f_.derivative()));
    }

    double operator()(double r) const { return detail::real_power(r, power_) * f_(r * r); }

    bool operator==(const RadialLaurent& o) const {
        if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
        return power_ == o.power_ && f_ == o.f_;
    }

private:
    Rational power_{0};
    RationalFunction f_;
};

/// sign * sqrt(square / Gamma(gamma_arg)); without a gamma argument, sign * sqrt(square).
/// Kept symbolic so that identities between normalized waves stay exact.
struct Normalization {
    int sign = 1;
    Rational square{1};
    std::optional<Rational> gamma_arg;

    double value() const {
        double v = std::sqrt(to_double(square));
        if (gamma_arg) v /= std::sqrt(std::tgamma(to_double(*gamma_arg)));
        return sign * v;
    }
    /// Normalization times a rational constant c.
    Normalization times(const Rational& c) const {
        if (c == 0) throw std::domain_error("normalization scaled by zero");
        Normalization n = *this;
        n.sign *= qescal::sign(c);
        n.square *= c * c;
        return n;
    }
    /// Normalization divided by sqrt(q), q > 0.
    Normalization over_sqrt(const Rational& q) const {
        if (q <= 0) throw std::domain_error("normalization divided by sqrt of a nonpositive number");
        Normalization n = *this;
        n.square /= q;
        return n;
    }
    bool operator==(const Normalization& o) const {
        return sign == o.sign && square == o.square && gamma_arg == o.gamma_arg;
    }
};

/// Gamma(z) = (beta)_m Gamma(beta) with beta in (0, 1]: returns {beta, (beta)_m}.
inline std::pair<Rational, Rational> split_gamma(const Rational& z) {
    if (z <= 0) throw std::domain_error("split_gamma needs a positive argument");
    Rational beta = z;
    unsigned m = 0;
    while (beta > 1) {
        beta -= 1;
        ++m;
    }
    return {beta, pochhammer(beta, m)};
}

/// scale * r^power * exp(-r^2/2) * radial(r^2).
class QuasiPolyWave {
public:
    QuasiPolyWave(Normalization scale, Rational power, RationalFunction radial)
        : scale_(std::move(scale)), form_(std::move(power), std::move(radial)) {
        validate_and_cache();
    }
    QuasiPolyWave(Normalization scale, RadialLaurent form) : scale_(std::move(scale)), form_(std::move(form)) {
        validate_and_cache();
    }

    const Normalization& scale() const { return scale_; }
    const Rational& power() const { return form_.power(); }
    const RationalFunction& radial() const { return form_.f(); }
    const RationalPoly& num() const { return form_.f().num(); }
    const RationalPoly& den() const { return form_.f().den(); }
    const RadialLaurent& form() const { return form_; }
    bool is_zero() const { return form_.is_zero(); }

    double operator()(double r) const {
        const double x = r * r;
        return scale_value_ * detail::real_power(r, form_.power()) * std::exp(-0.5 * x) * num_real_(x) /
               den_real_(x);
    }

    /// The wave with its normalization replaced; the r-dependence is unchanged.
    QuasiPolyWave with_scale(Normalization s) const { return QuasiPolyWave(std::move(s), form_); }

private:
    void validate_and_cache() {
        if (count_positive_roots(form_.f().den()) != 0)
            throw std::domain_error("wave denominator vanishes on (0, inf)");
        scale_value_ = scale_.value();
        num_real_ = form_.f().num().cast<double>();
        den_real_ = form_.f().den().cast<double>();
    }

    Normalization scale_;
    RadialLaurent form_;
    double scale_value_ = 0;
    Poly<double> num_real_;
    Poly<double> den_real_;
};

/// d/dr of a wave: r^{s-1} e^{-x/2} (s R - x R + 2 x R').
inline QuasiPolyWave derivative(const QuasiPolyWave& w) {
    const RationalFunction x(RationalPoly::x());
    const auto& R = w.radial();
    return QuasiPolyWave(w.scale(), w.power() - 1, w.power() * R - x * R + Rational(2) * (x * R.derivative()));
}

inline QuasiPolyWave multiply(const RadialLaurent& m, const QuasiPolyWave& w) {
    return QuasiPolyWave(w.scale(), m * w.form());
}

/// Sum of two waves sharing the same normalization.
inline QuasiPolyWave add(const QuasiPolyWave& a, const QuasiPolyWave& b) {
    if (!(a.scale() == b.scale())) throw std::domain_error("adding waves with different normalizations");
    return QuasiPolyWave(a.scale(), a.form() + b.form());
}

inline QuasiPolyWave scale_radial(const Rational& c, const QuasiPolyWave& w) {
    return QuasiPolyWave(w.scale(), c * w.form());
}

/// If a(r) = c * b(r) identically with c = s_a/s_b times a rational ratio of the radial
/// parts, returns that rational ratio of radial parts.
inline std::optional<Rational> radial_ratio(const QuasiPolyWave& a, const QuasiPolyWave& b) {
    if (a.is_zero() || b.is_zero()) return std::nullopt;
    if (a.power() != b.power()) return std::nullopt;
    return a.radial().ratio_to(b.radial());
}

/// Exact equality of the two functions of r, normalizations included.
inline bool same_function(const QuasiPolyWave& a, const QuasiPolyWave& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    auto c = radial_ratio(a, b);
    if (!c) return false;
    return a.scale().times(*c) == b.scale();
}

/// True when a = lambda * b for some real lambda != 0 (radial parts proportional and
/// the normalizations compared numerically through their ratio).
inline std::optional<double> proportionality(const QuasiPolyWave& a, const QuasiPolyWave& b) {
    auto c = radial_ratio(a, b);
    if (!c) return std::nullopt;
    return a.scale().value() * to_double(*c) / b.scale().value();
}

/// Distinct sign changes of the wave on (0, inf): odd-multiplicity positive roots of num.
inline int node_count(const QuasiPolyWave& w) {
    if (w.is_zero()) throw std::domain_error("node count of the zero wave");
    if (!is_squarefree(w.num())) throw std::domain_error("node count needs a squarefree numerator");
    return count_positive_roots(w.num());
}

}  // namespace qescal
