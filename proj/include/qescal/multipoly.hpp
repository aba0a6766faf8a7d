#pragma once

/**
 * @file multipoly.hpp
 * @brief Sparse multivariate polynomials in x_1..x_N over a field F.
 */

#include "qescal/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

namespace qescal {

using Exponents = std::vector<int>;

template <class F>
class MultiPoly {
public:
    using Terms = std::map<Exponents, F>;

    explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}
    MultiPoly(int nvars, Terms terms) : nvars_(nvars), terms_(std::move(terms)) { prune(); }

    static MultiPoly constant(int nvars, const F& c) {
        MultiPoly p(nvars);
        if (c != F(0)) p.terms_[Exponents(static_cast<std::size_t>(nvars), 0)] = c;
        return p;
    }
    static MultiPoly variable(int nvars, int i) {
        MultiPoly p(nvars);
        Exponents e(static_cast<std::size_t>(nvars), 0);
        e.at(static_cast<std::size_t>(i)) = 1;
        p.terms_[e] = F(1);
        return p;
    }

    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Total degree; -1 for zero.
    int degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, total(e));
        return d;
    }
    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        const int d = total(terms_.begin()->first);
        return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return total(t.first) == d; });
    }

    bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly& operator+=(const MultiPoly& o) {
        check_vars(o);
        for (const auto& [e, c] : o.terms_) accumulate(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        check_vars(o);
        for (const auto& [e, c] : o.terms_) accumulate(e, -c);
        return *this;
    }
    MultiPoly& operator*=(const F& c) {
        if (c == F(0)) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, v] : terms_) v *= c;
        return *this;
    }
    MultiPoly operator-() const { return MultiPoly(nvars_) - *this; }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const F& c) { return a *= c; }
    friend MultiPoly operator*(const F& c, MultiPoly a) { return a *= c; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_vars(b);
        MultiPoly out(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(ea);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                out.accumulate(e, ca * cb);
            }
        return out;
    }

    MultiPoly pow(int k) const {
        MultiPoly r = constant(nvars_, F(1));
        for (int i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    /// d/dx_i.
    MultiPoly derivative(int i) const {
        MultiPoly out(nvars_);
        const auto idx = static_cast<std::size_t>(i);
        for (const auto& [e, c] : terms_) {
            if (e[idx] == 0) continue;
            Exponents d(e);
            d[idx] -= 1;
            out.accumulate(d, c * F(static_cast<long>(e[idx])));
        }
        return out;
    }

    /// The polynomial with x_i and x_j exchanged.
    MultiPoly swapped(int i, int j) const {
        MultiPoly out(nvars_);
        for (const auto& [e, c] : terms_) {
            Exponents s(e);
            std::swap(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(j)]);
            out.terms_[s] = c;
        }
        return out;
    }

    /// Exact quotient by (x_j - x_k); throws if the remainder is nonzero.
    MultiPoly divide_by_difference(int j, int k) const {
        const auto jj = static_cast<std::size_t>(j), kk = static_cast<std::size_t>(k);
        MultiPoly rem = *this;
        MultiPoly quo(nvars_);
        // Eliminate x_j from the highest power down: c x_j^e m = (x_j - x_k) c x_j^{e-1} m + c x_j^{e-1} x_k m.
        while (true) {
            const Exponents* lead = nullptr;
            for (const auto& [e, c] : rem.terms_)
                if (e[jj] > 0 && (lead == nullptr || e[jj] > (*lead)[jj])) lead = &e;
            if (lead == nullptr) break;
            const Exponents e = *lead;
            const F c = rem.terms_.at(e);
            Exponents q(e);
            q[jj] -= 1;
            quo.accumulate(q, c);
            Exponents shifted(q);
            shifted[kk] += 1;
            rem.accumulate(e, -c);
            rem.accumulate(shifted, c);
        }
        if (!rem.is_zero()) throw std::logic_error("polynomial is not divisible by (x_j - x_k)");
        return quo;
    }

    template <class U>
    U evaluate(std::span<const U> x) const {
        if (x.size() != static_cast<std::size_t>(nvars_)) throw std::invalid_argument("wrong number of coordinates");
        U sum(0);
        for (const auto& [e, c] : terms_) {
            U term = convert<U>(c);
            for (std::size_t i = 0; i < e.size(); ++i)
                for (int p = 0; p < e[i]; ++p) term = term * x[i];
            sum = sum + term;
        }
        return sum;
    }
    template <class U>
    U evaluate(const std::vector<U>& x) const {
        return evaluate(std::span<const U>(x));
    }

    template <class G>
    MultiPoly<G> cast() const {
        typename MultiPoly<G>::Terms t;
        for (const auto& [e, c] : terms_) t[e] = G(c);
        return MultiPoly<G>(nvars_, std::move(t));
    }

    static int total(const Exponents& e) {
        int s = 0;
        for (int v : e) s += v;
        return s;
    }

private:
    template <class U>
    static U convert(const F& c) {
        if constexpr (std::is_same_v<U, F>)
            return c;
        else if constexpr (std::is_same_v<U, double>)
            return to_double(c);
        else
            return U(c);
    }

    void accumulate(const Exponents& e, const F& c) {
        if (c == F(0)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
            return;
        }
        it->second += c;
        if (it->second == F(0)) terms_.erase(it);
    }
    void prune() {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = (it->second == F(0)) ? terms_.erase(it) : std::next(it);
    }
    void check_vars(const MultiPoly& o) const {
        if (nvars_ != o.nvars_) throw std::invalid_argument("multivariate polynomials in different variable counts");
    }

    int nvars_;
    Terms terms_;
};

/// True iff p is invariant under every transposition x_i <-> x_{i+1} (hence all permutations).
template <class F>
bool is_symmetric(const MultiPoly<F>& p) {
    for (int i = 0; i + 1 < p.nvars(); ++i)
        if (p.swapped(i, i + 1) != p) return false;
    return true;
}

/// True iff sum_i d/dx_i p = 0, i.e. p(x + c) = p(x) for every shift c.
template <class F>
bool is_translation_invariant(const MultiPoly<F>& p) {
    MultiPoly<F> s(p.nvars());
    for (int i = 0; i < p.nvars(); ++i) s += p.derivative(i);
    return s.is_zero();
}

}  // namespace qescal
