// Copyright 2026 The ssdef Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Truncated multivariate power series over an exact ring.
//
// A Series<R, A> in A variables holds the coefficients of monomials of total
// degree < order(); everything of degree >= order() is unknown. Results of
// binary operations carry the smaller of the operand orders.

#include <array>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "ssdef/error.hpp"
#include "ssdef/ring.hpp"

namespace ssdef {

template <int A>
using Exponent = std::array<int, A>;

template <int A>
int total_degree(const Exponent<A>& e)
{
    return std::accumulate(e.begin(), e.end(), 0);
}

/// Canonical monomial order: total degree, then lexicographically
/// descending (z1^2 < z1 z2 < z2^2).
template <int A>
struct ExponentLess {
    bool operator()(const Exponent<A>& a, const Exponent<A>& b) const
    {
        const int da = total_degree<A>(a);
        const int db = total_degree<A>(b);
        if (da != db) {
            return da < db;
        }
        return b < a;
    }
};

template <ExactRing R, int A>
class Series {
    static_assert(A >= 1 && A <= 3, "Series supports one to three variables");

public:
    using Exp = Exponent<A>;
    using Map = std::map<Exp, R, ExponentLess<A>>;

    Series(const R& proto, int order) : zero_(proto.zero()), order_(order)
    {
        require(order >= 1, "Series: order must be positive");
    }

    static Series constant(const R& c, int order)
    {
        Series s(c, order);
        s.set(Exp{}, c);
        return s;
    }
    /// The i-th variable.
    static Series var(const R& proto, int order, int i = 0)
    {
        require(i >= 0 && i < A, "Series::var: index out of range");
        Exp e{};
        e[i] = 1;
        return monomial(proto.one(), e, order);
    }
    static Series monomial(const R& c, const Exp& e, int order)
    {
        Series s(c, order);
        s.set(e, c);
        return s;
    }

    int order() const noexcept { return order_; }
    const R& zero_element() const noexcept { return zero_; }
    const Map& terms() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }

    R coeff(const Exp& e) const
    {
        auto it = c_.find(e);
        return it == c_.end() ? zero_ : it->second;
    }
    R operator[](int i) const
    {
        static_assert(A == 1);
        return coeff(Exp{i});
    }
    R coeff(int i, int j) const
    {
        static_assert(A == 2);
        return coeff(Exp{i, j});
    }

    /// Set a coefficient; degrees at or above the order are dropped.
    void set(const Exp& e, const R& c)
    {
        for (int x : e) {
            require(x >= 0, "Series::set: negative exponent");
        }
        if (total_degree<A>(e) >= order_) {
            return;
        }
        if (c.is_zero()) {
            c_.erase(e);
        } else {
            c_.insert_or_assign(e, c);
        }
    }
    void add_to(const Exp& e, const R& c)
    {
        if (total_degree<A>(e) >= order_ || c.is_zero()) {
            return;
        }
        auto [it, inserted] = c_.emplace(e, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) {
                c_.erase(it);
            }
        }
    }

    R constant_term() const { return coeff(Exp{}); }
    /// Least total degree of a nonzero term, or order() for zero.
    int valuation() const { return c_.empty() ? order_ : total_degree<A>(c_.begin()->first); }

    Series truncate(int n) const
    {
        Series s(zero_, std::min(n, order_));
        for (const auto& [e, c] : c_) {
            s.set(e, c);
        }
        return s;
    }

    /// Homogeneous part of total degree d.
    Series homogeneous_part(int d) const
    {
        Series s(zero_, order_);
        for (const auto& [e, c] : c_) {
            if (total_degree<A>(e) == d) {
                s.c_.emplace(e, c);
            }
        }
        return s;
    }

    Series scaled(const R& k) const
    {
        Series s(zero_, order_);
        for (const auto& [e, c] : c_) {
            s.add_to(e, k * c);
        }
        return s;
    }

    friend Series operator+(const Series& x, const Series& y)
    {
        Series s = x.truncate(y.order_);
        for (const auto& [e, c] : y.c_) {
            s.add_to(e, c);
        }
        return s;
    }
    Series operator-() const
    {
        Series s = *this;
        for (auto& [e, c] : s.c_) {
            c = -c;
        }
        return s;
    }
    friend Series operator-(const Series& x, const Series& y) { return x + (-y); }
    friend Series operator*(const Series& x, const Series& y)
    {
        const int n = std::min(x.order_, y.order_);
        Series s(x.zero_, n);
        for (const auto& [ex, cx] : x.c_) {
            const int dx = total_degree<A>(ex);
            if (dx >= n) {
                break;
            }
            for (const auto& [ey, cy] : y.c_) {
                if (dx + total_degree<A>(ey) >= n) {
                    break;
                }
                Exp e;
                for (int i = 0; i < A; ++i) {
                    e[i] = ex[i] + ey[i];
                }
                s.add_to(e, cx * cy);
            }
        }
        return s;
    }
    Series& operator+=(const Series& y) { return *this = *this + y; }
    Series& operator-=(const Series& y) { return *this = *this - y; }
    Series& operator*=(const Series& y) { return *this = *this * y; }

    Series pow(int e) const
    {
        require(e >= 0, "Series::pow: negative exponent");
        Series r = constant(zero_.one(), order_);
        for (int i = 0; i < e; ++i) {
            r = r * *this;
        }
        return r;
    }

    /// Same order and the same coefficients.
    friend bool operator==(const Series& x, const Series& y)
    {
        if (x.order_ != y.order_ || x.c_.size() != y.c_.size()) {
            return false;
        }
        auto i = x.c_.begin();
        for (auto j = y.c_.begin(); j != y.c_.end(); ++i, ++j) {
            if (i->first != j->first || !(i->second == j->second)) {
                return false;
            }
        }
        return true;
    }

    /// Coefficients agree in all degrees < n (n capped by both orders).
    bool agrees_with(const Series& y, int n) const
    {
        const int m = std::min({n, order_, y.order_});
        return truncate(m) == y.truncate(m);
    }

    std::string str() const
    {
        std::string out;
        for (const auto& [e, c] : c_) {
            if (!out.empty()) {
                out += " + ";
            }
            std::string mono;
            for (int i = 0; i < A; ++i) {
                if (e[i] == 0) {
                    continue;
                }
                if (!mono.empty()) {
                    mono += "*";
                }
                mono += var_name(i);
                if (e[i] > 1) {
                    mono += "^" + std::to_string(e[i]);
                }
            }
            std::string cs = c.str();
            if (mono.empty()) {
                out += cs;
            } else if (cs == "1") {
                out += mono;
            } else {
                const bool compound = cs.find_first_of("+- ") != std::string::npos;
                out += (compound ? "(" + cs + ")" : cs) + "*" + mono;
            }
        }
        if (out.empty()) {
            out = "0";
        }
        return out + " + O(deg " + std::to_string(order_) + ")";
    }

    static std::string var_name(int i)
    {
        if constexpr (A == 1) {
            return "z";
        } else {
            return "z" + std::to_string(i + 1);
        }
    }

private:
    R zero_;
    int order_;
    Map c_;
};

template <class R>
using Series1 = Series<R, 1>;
template <class R>
using Series2 = Series<R, 2>;

/// F(g_1, ..., g_A) for series g_i in B variables with zero constant terms.
template <ExactRing R, int A, int B>
Series<R, B> compose(const Series<R, A>& f, const std::array<Series<R, B>, A>& g)
{
    int order = f.order();
    for (const auto& gi : g) {
        if (!gi.constant_term().is_zero()) {
            throw precondition_error("compose: inner series has a nonzero constant term");
        }
        order = std::min(order, gi.order());
    }
    const R& zero = f.zero_element();
    // Powers of each inner series, computed on demand.
    std::array<std::vector<Series<R, B>>, A> pw;
    for (int i = 0; i < A; ++i) {
        pw[i].push_back(Series<R, B>::constant(zero.one(), order));
    }
    auto power = [&](int i, int e) -> const Series<R, B>& {
        while (static_cast<int>(pw[i].size()) <= e) {
            pw[i].push_back((pw[i].back() * g[i]).truncate(order));
        }
        return pw[i][e];
    };

    // Group terms by the exponent of the first variable.
    std::map<int, Series<R, B>> inner;
    for (const auto& [e, c] : f.terms()) {
        if (total_degree<A>(e) >= order) {
            continue;
        }
        Series<R, B> term = Series<R, B>::constant(c, order);
        for (int i = 1; i < A; ++i) {
            if (e[i] > 0) {
                term = term * power(i, e[i]);
            }
        }
        auto it = inner.find(e[0]);
        if (it == inner.end()) {
            inner.emplace(e[0], std::move(term));
        } else {
            it->second += term;
        }
    }
    Series<R, B> out(zero, order);
    for (const auto& [e0, s] : inner) {
        out += e0 == 0 ? s : power(0, e0) * s;
    }
    return out;
}

/// f(g) for univariate f.
template <ExactRing R, int B>
Series<R, B> substitute(const Series<R, 1>& f, const Series<R, B>& g)
{
    return compose<R, 1, B>(f, {g});
}

/// F(g1, g2) for bivariate F.
template <ExactRing R, int B>
Series<R, B> bivariate_substitute(const Series<R, 2>& f, const Series<R, B>& g1, const Series<R, B>& g2)
{
    return compose<R, 2, B>(f, {g1, g2});
}

/// Multiplicative inverse of a series with unit constant term.
template <ExactRing R, int A>
Series<R, A> reciprocal(const Series<R, A>& f)
{
    auto c0inv = f.constant_term().inverse();
    if (!c0inv) {
        throw precondition_error("reciprocal: constant term is not a unit");
    }
    // f = c0 (1 + n), 1/f = c0^{-1} sum (-n)^i.
    const int order = f.order();
    const Series<R, A> one = Series<R, A>::constant(c0inv->one(), order);
    const Series<R, A> n = f.scaled(*c0inv) - one;
    Series<R, A> sum = one;
    Series<R, A> term = one;
    for (int i = 1; i < order; ++i) {
        term = -(term * n);
        if (term.is_zero()) {
            break;
        }
        sum += term;
    }
    return sum.scaled(*c0inv);
}

/// Partial derivative in variable i; the order drops by one.
template <ExactRing R, int A>
Series<R, A> derivative(const Series<R, A>& f, int i = 0)
{
    require(i >= 0 && i < A, "derivative: variable index out of range");
    Series<R, A> out(f.zero_element(), std::max(1, f.order() - 1));
    for (const auto& [e, c] : f.terms()) {
        if (e[i] == 0) {
            continue;
        }
        auto d = e;
        d[i] -= 1;
        out.add_to(d, c * c.from_int(e[i]));
    }
    return out;
}

/// Set variable i to zero.
template <ExactRing R, int A>
Series<R, A> restrict_zero(const Series<R, A>& f, int i)
{
    Series<R, A> out(f.zero_element(), f.order());
    for (const auto& [e, c] : f.terms()) {
        if (e[i] == 0) {
            out.set(e, c);
        }
    }
    return out;
}

/// Compositional inverse of f = c z + O(z^2), c a unit.
template <ExactRing R>
Series<R, 1> reversion(const Series<R, 1>& f)
{
    if (!f.constant_term().is_zero()) {
        throw precondition_error("reversion: nonzero constant term");
    }
    auto cinv = f[1].inverse();
    if (!cinv) {
        throw precondition_error("reversion: linear coefficient is not a unit");
    }
    const int order = f.order();
    const Series<R, 1> z = Series<R, 1>::var(cinv->one(), order);
    Series<R, 1> g = z.scaled(*cinv);
    // Each round fixes at least one more degree: g <- g - c^{-1} (f(g) - z).
    for (int round = 0; round < order; ++round) {
        const Series<R, 1> err = substitute(f, g) - z;
        if (err.is_zero()) {
            return g;
        }
        g = g - err.scaled(*cinv);
    }
    if (!(substitute(f, g) - z).is_zero()) {
        throw internal_error("reversion: iteration did not converge");
    }
    return g;
}

/// Apply a coefficient map R -> S termwise (reductions, ring endomorphisms).
template <ExactRing S, ExactRing R, int A, class Fn>
Series<S, A> map_coefficients(const Series<R, A>& f, const S& target_zero, Fn&& fn)
{
    Series<S, A> out(target_zero, f.order());
    for (const auto& [e, c] : f.terms()) {
        out.set(e, fn(c));
    }
    return out;
}

} // namespace ssdef
