#pragma once

/**
 * @file rational_function.hpp
 * @brief Exact rational functions num(x)/den(x) over the rationals.
 *
 * Canonical form: gcd(num, den) = 1 and den is monic. Zero is 0/1. Because the
 * form is canonical, structural equality is mathematical equality.
 */

#include "qescal/poly.hpp"

#include <optional>
#include <stdexcept>

namespace qescal {

class RationalFunction {
public:
    RationalFunction() : num_(), den_(RationalPoly::constant(1)) {}
    RationalFunction(RationalPoly num) : num_(std::move(num)), den_(RationalPoly::constant(1)) {}  // NOLINT
    RationalFunction(RationalPoly num, RationalPoly den) : num_(std::move(num)), den_(std::move(den)) {
        canonicalize();
    }
    static RationalFunction constant(const Rational& c) { return RationalFunction(RationalPoly::constant(c)); }

    const RationalPoly& num() const { return num_; }
    const RationalPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    RationalFunction operator-() const { return RationalFunction(-num_, den_); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("rational function division by zero");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend RationalFunction operator*(const Rational& c, const RationalFunction& a) {
        return RationalFunction(a.num_ * c, a.den_);
    }

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

    /// d/dx.
    RationalFunction derivative() const {
        return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    Rational operator()(const Rational& x) const {
        const Rational d = den_(x);
        if (d == 0) throw std::domain_error("rational function evaluated at a pole");
        return num_(x) / d;
    }
    double operator()(double x) const { return num_(x) / den_(x); }

    /// If *this == c * o for a rational constant c, returns c.
    std::optional<Rational> ratio_to(const RationalFunction& o) const {
        if (o.is_zero()) return std::nullopt;
        if (is_zero()) return Rational(0);
        if (den_ != o.den_ || num_.degree() != o.num_.degree()) return std::nullopt;
        const Rational c = num_.leading() / o.num_.leading();
        if (num_ != o.num_ * c) return std::nullopt;
        return c;
    }

private:
    void canonicalize() {
        if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = RationalPoly::constant(1);
            return;
        }
        RationalPoly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
        const Rational lc = den_.leading();
        num_ /= lc;
        den_ /= lc;
    }

    RationalPoly num_;
    RationalPoly den_;
};

}  // namespace qescal
