#pragma once

/**
 * @file poly.hpp
 * @brief Dense univariate polynomials over a field.
 *
 * coeffs()[i] is the coefficient of x^i. The representation is always trimmed:
 * the zero polynomial has no coefficients (degree -1) and otherwise the leading
 * coefficient is nonzero.
 */

#include "qescal/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

namespace qescal {

template <class T>
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<T> cs) : coeffs_(cs) { trim(); }
    explicit Poly(std::vector<T> cs) : coeffs_(std::move(cs)) { trim(); }

    static Poly constant(const T& c) { return Poly(std::vector<T>{c}); }
    static Poly monomial(const T& c, std::size_t power) {
        std::vector<T> cs(power + 1, T(0));
        cs[power] = c;
        return Poly(std::move(cs));
    }
    /// The polynomial x.
    static Poly x() { return monomial(T(1), 1); }

    const std::vector<T>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    T operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }
    T leading() const { return coeffs_.empty() ? T(0) : coeffs_.back(); }

    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const T& c) {
        for (auto& a : coeffs_) a *= c;
        trim();
        return *this;
    }
    Poly& operator/=(const T& c) {
        if (c == T(0)) throw std::domain_error("polynomial divided by zero scalar");
        for (auto& a : coeffs_) a /= c;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const T& c) { return a *= c; }
    friend Poly operator*(const T& c, Poly a) { return a *= c; }
    friend Poly operator/(Poly a, const T& c) { return a /= c; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Poly(std::move(out));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    /// Horner evaluation; exact when U is the coefficient field.
    template <class U>
    U operator()(const U& x) const {
        U acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + convert<U>(*it);
        return acc;
    }

    Poly derivative(unsigned order = 1) const {
        Poly r = *this;
        for (unsigned k = 0; k < order && !r.is_zero(); ++k) {
            std::vector<T> d;
            d.reserve(r.coeffs_.size());
            for (std::size_t i = 1; i < r.coeffs_.size(); ++i) d.push_back(r.coeffs_[i] * T(static_cast<long>(i)));
            r = Poly(std::move(d));
        }
        return r;
    }

    /// p(-x).
    Poly reflected() const {
        Poly r = *this;
        for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
        return r;
    }

    /// p(c x).
    Poly scaled_argument(const T& c) const {
        Poly r = *this;
        T f(1);
        for (auto& a : r.coeffs_) {
            a *= f;
            f *= c;
        }
        r.trim();
        return r;
    }

    /// Largest e with x^e | p (0 for the zero polynomial).
    std::size_t low_order() const {
        std::size_t e = 0;
        while (e < coeffs_.size() && coeffs_[e] == T(0)) ++e;
        return e == coeffs_.size() ? 0 : e;
    }

    /// p / x^e, requires x^e | p.
    Poly shifted_down(std::size_t e) const {
        if (e > low_order() && !is_zero()) throw std::domain_error("polynomial not divisible by x^e");
        if (is_zero()) return Poly();
        return Poly(std::vector<T>(coeffs_.begin() + static_cast<std::ptrdiff_t>(e), coeffs_.end()));
    }

    /// p * x^e.
    Poly shifted_up(std::size_t e) const {
        if (is_zero()) return Poly();
        std::vector<T> cs(e, T(0));
        cs.insert(cs.end(), coeffs_.begin(), coeffs_.end());
        return Poly(std::move(cs));
    }

    Poly monic() const {
        if (is_zero()) return Poly();
        return *this / leading();
    }

    template <class U>
    Poly<U> cast() const {
        std::vector<U> cs;
        cs.reserve(coeffs_.size());
        for (const auto& c : coeffs_) cs.push_back(convert<U>(c));
        return Poly<U>(std::move(cs));
    }

private:
    template <class U, class V>
    static U convert(const V& v) {
        if constexpr (std::is_same_v<U, V>)
            return v;
        else if constexpr (std::is_same_v<U, double> && std::is_same_v<V, Rational>)
            return to_double(v);
        else
            return static_cast<U>(v);
    }

    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
};

using RationalPoly = Poly<Rational>;

/// Euclidean division: a = q*b + r with deg r < deg b.
template <class T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& a, const Poly<T>& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<T> rem = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {Poly<T>(), a};
    std::vector<T> quo(static_cast<std::size_t>(a.degree() - db + 1), T(0));
    const T lead = b.leading();
    for (int i = a.degree(); i >= db; --i) {
        const T c = rem[static_cast<std::size_t>(i)] / lead;
        quo[static_cast<std::size_t>(i - db)] = c;
        if (c == T(0)) continue;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {Poly<T>(std::move(quo)), Poly<T>(std::move(rem))};
}

/// Monic greatest common divisor; gcd(0, 0) = 0.
template <class T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Composition p(q(x)).
template <class T>
Poly<T> compose(const Poly<T>& p, const Poly<T>& q) {
    Poly<T> acc;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * q + Poly<T>::constant(*it);
    return acc;
}

}  // namespace qescal
