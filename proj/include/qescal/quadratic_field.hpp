#pragma once

/**
 * @file quadratic_field.hpp
 * @brief Exact arithmetic in Q(sqrt(d)).
 *
 * The Calogero exponent a = sqrt(1 + 2g)/2 is irrational for generic rational
 * g. Values are a + b sqrt(d); when b = 0 the radicand is dropped, so a purely
 * rational value mixes freely with any field Q(sqrt(d)). Mixing two different
 * irrational radicands is an error.
 */

#include "qescal/rational.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qescal {

class QuadraticSurd {
public:
    QuadraticSurd() = default;
    QuadraticSurd(long v) : rat_(v) {}              // NOLINT
    QuadraticSurd(int v) : rat_(v) {}               // NOLINT
    QuadraticSurd(Rational v) : rat_(std::move(v)) {}  // NOLINT
    QuadraticSurd(Rational rat, Rational irr, Rational radicand)
        : rat_(std::move(rat)), irr_(std::move(irr)), radicand_(std::move(radicand)) {
        normalize();
    }

    /// sqrt(q), exact when q is a rational square.
    static QuadraticSurd sqrt_of(const Rational& q) {
        if (q < 0) throw std::domain_error("square root of a negative rational");
        if (auto r = exact_sqrt(q)) return QuadraticSurd(*r);
        return QuadraticSurd(Rational(0), Rational(1), q);
    }

    const Rational& rational_part() const { return rat_; }
    const Rational& irrational_part() const { return irr_; }
    const Rational& radicand() const { return radicand_; }
    bool is_rational() const { return irr_ == 0; }

    double to_double() const {
        return qescal::to_double(rat_) + qescal::to_double(irr_) * std::sqrt(qescal::to_double(radicand_));
    }

    friend bool operator==(const QuadraticSurd& a, const QuadraticSurd& b) {
        return a.rat_ == b.rat_ && a.irr_ == b.irr_ && a.radicand_ == b.radicand_;
    }
    friend bool operator!=(const QuadraticSurd& a, const QuadraticSurd& b) { return !(a == b); }

    QuadraticSurd operator-() const { return QuadraticSurd(-rat_, -irr_, radicand_); }

    friend QuadraticSurd operator+(const QuadraticSurd& a, const QuadraticSurd& b) {
        return QuadraticSurd(a.rat_ + b.rat_, a.irr_ + b.irr_, common_radicand(a, b));
    }
    friend QuadraticSurd operator-(const QuadraticSurd& a, const QuadraticSurd& b) { return a + (-b); }
    friend QuadraticSurd operator*(const QuadraticSurd& a, const QuadraticSurd& b) {
        const Rational d = common_radicand(a, b);
        return QuadraticSurd(a.rat_ * b.rat_ + a.irr_ * b.irr_ * d, a.rat_ * b.irr_ + a.irr_ * b.rat_, d);
    }
    QuadraticSurd inverse() const {
        const Rational norm = rat_ * rat_ - irr_ * irr_ * radicand_;
        if (norm == 0) throw std::domain_error("division by zero in Q(sqrt(d))");
        return QuadraticSurd(rat_ / norm, -irr_ / norm, radicand_);
    }
    friend QuadraticSurd operator/(const QuadraticSurd& a, const QuadraticSurd& b) { return a * b.inverse(); }

    QuadraticSurd& operator+=(const QuadraticSurd& o) { return *this = *this + o; }
    QuadraticSurd& operator-=(const QuadraticSurd& o) { return *this = *this - o; }
    QuadraticSurd& operator*=(const QuadraticSurd& o) { return *this = *this * o; }
    QuadraticSurd& operator/=(const QuadraticSurd& o) { return *this = *this / o; }

    /// "p/q" or "p/q + r/s*sqrt(d/e)".
    std::string str() const {
        if (is_rational()) return to_string(rat_);
        return to_string(rat_) + " + " + to_string(irr_) + "*sqrt(" + to_string(radicand_) + ")";
    }

private:
    static Rational common_radicand(const QuadraticSurd& a, const QuadraticSurd& b) {
        if (a.is_rational()) return b.radicand_;
        if (b.is_rational()) return a.radicand_;
        if (a.radicand_ != b.radicand_) throw std::domain_error("mixing different quadratic fields");
        return a.radicand_;
    }

    void normalize() {
        if (irr_ != 0 && radicand_ == 0) irr_ = 0;
        if (irr_ != 0) {
            if (auto r = exact_sqrt(radicand_)) {
                rat_ += irr_ * *r;
                irr_ = 0;
            }
        }
        if (irr_ == 0) radicand_ = 0;
    }

    Rational rat_{0};
    Rational irr_{0};
    Rational radicand_{0};
};

inline double to_double(const QuadraticSurd& s) { return s.to_double(); }

}  // namespace qescal
