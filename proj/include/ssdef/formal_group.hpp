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

// One-dimensional commutative formal group laws held as truncated bivariate
// series, and the formal group of a Weierstrass curve at infinity.

#include <optional>
#include <string>

#include "ssdef/error.hpp"
#include "ssdef/series.hpp"
#include "ssdef/tower.hpp"
#include "ssdef/weierstrass.hpp"

namespace ssdef {

template <ExactRing R>
struct FGL {
    Series<R, 2> F;
    std::optional<WCurve<R>> source;

    int order() const { return F.order(); }
    const R& zero_element() const { return F.zero_element(); }
};

template <ExactRing R>
FGL<R> additive_fgl(const R& proto, int n)
{
    const auto x = Series<R, 2>::var(proto, n, 0);
    const auto y = Series<R, 2>::var(proto, n, 1);
    return FGL<R>{x + y, std::nullopt};
}

template <ExactRing R>
FGL<R> multiplicative_fgl(const R& proto, int n)
{
    const auto x = Series<R, 2>::var(proto, n, 0);
    const auto y = Series<R, 2>::var(proto, n, 1);
    return FGL<R>{x + y + x * y, std::nullopt};
}

/// Formal group law of the curve in the coordinate z = -x/y, without a
/// smoothness check (so it also works over polynomial rings).
///
/// The line through (z1, w1), (z2, w2) is w = lambda z + nu; its third
/// intersection z3 comes from the z^2 coefficient of the cubic, and the sum
/// is the inverse i(z3) = z3 / (-1 + a1 z3 + a3 w3).
template <ExactRing R>
FGL<R> expand_formal_group(const WCurve<R>& c, int n)
{
    using S2 = Series<R, 2>;
    require(n >= 2, "expand_formal_group: order must be at least 2");
    const Series<R, 1> w = formal_w(c, n + 3);
    const R& zero = c.a1;
    const S2 z1 = S2::var(zero, n, 0);
    const S2 z2 = S2::var(zero, n, 1);

    S2 lambda(zero, n);
    S2 w1(zero, n);
    for (const auto& [e, a] : w.terms()) {
        const int deg = e[0];
        w1.set({deg, 0}, a);
        for (int i = 0; i < deg; ++i) {
            lambda.add_to({i, deg - 1 - i}, a);
        }
    }
    const S2 nu = w1 - lambda * z1;
    const S2 lam2 = lambda * lambda;
    const R two = zero.from_int(2), three = zero.from_int(3);
    const S2 num = lambda.scaled(c.a1) + nu.scaled(c.a2) + lam2.scaled(c.a3) + (lambda * nu).scaled(two * c.a4) +
                   (lam2 * nu).scaled(three * c.a6);
    const S2 den = S2::constant(zero.one(), n) + lambda.scaled(c.a2) + lam2.scaled(c.a4) +
                   (lam2 * lambda).scaled(c.a6);
    const S2 z3 = -z1 - z2 - num * reciprocal(den);
    const S2 w3 = lambda * z3 + nu;
    const S2 inv_den = S2::constant(-zero.one(), n) + z3.scaled(c.a1) + w3.scaled(c.a3);
    return FGL<R>{z3 * reciprocal(inv_den), c};
}

template <ExactRing R>
FGL<R> fgl_from_curve(const WCurve<R>& c, int n)
{
    if (!c.is_smooth()) {
        throw precondition_error("fgl_from_curve: curve is singular");
    }
    return expand_formal_group(c, n);
}

struct AxiomReport {
    bool unit = false;
    bool commutative = false;
    bool associative = false;

    bool all() const { return unit && commutative && associative; }
};

template <ExactRing R>
AxiomReport check_axioms(const FGL<R>& f)
{
    using S1 = Series<R, 1>;
    using S2 = Series<R, 2>;
    using S3 = Series<R, 3>;
    const int n = f.order();
    const R& zero = f.zero_element();
    AxiomReport rep;
    const S1 z = S1::var(zero, n);
    const S1 zero1(zero, n);
    rep.unit = bivariate_substitute(f.F, z, zero1) == z && bivariate_substitute(f.F, zero1, z) == z;
    const S2 x2 = S2::var(zero, n, 0), y2 = S2::var(zero, n, 1);
    rep.commutative = bivariate_substitute(f.F, y2, x2) == f.F;
    const S3 x = S3::var(zero, n, 0), y = S3::var(zero, n, 1), w = S3::var(zero, n, 2);
    const S3 left = bivariate_substitute(f.F, bivariate_substitute(f.F, x, y), w);
    const S3 right = bivariate_substitute(f.F, x, bivariate_substitute(f.F, y, w));
    rep.associative = left == right;
    return rep;
}

/// The formal inverse: the unique iota with F(z, iota(z)) = 0.
template <ExactRing R>
Series<R, 1> formal_inverse(const FGL<R>& f)
{
    using S1 = Series<R, 1>;
    const int n = f.order();
    const R& zero = f.zero_element();
    const S1 z = S1::var(zero, n);
    // F(x, y) = x + y + G(x, y); iota = -z - G(z, iota).
    Series<R, 2> g = f.F;
    g.set({1, 0}, zero);
    g.set({0, 1}, zero);
    S1 iota = -z;
    for (int round = 0; round < n; ++round) {
        const S1 next = -z - bivariate_substitute(g, z, iota);
        if (next == iota) {
            return iota;
        }
        iota = next;
    }
    if (!bivariate_substitute(f.F, z, iota).is_zero()) {
        throw internal_error("formal_inverse: iteration did not converge");
    }
    return iota;
}

/// [n](z): [0] = 0, [1] = z, [n] = F([n-1], z), [-n] = iota o [n].
template <ExactRing R>
Series<R, 1> n_series(const FGL<R>& f, long n)
{
    using S1 = Series<R, 1>;
    const int order = f.order();
    const R& zero = f.zero_element();
    const S1 z = S1::var(zero, order);
    if (n < 0) {
        return substitute(formal_inverse(f), n_series(f, -n));
    }
    S1 acc(zero, order);
    for (long i = 0; i < n; ++i) {
        acc = bivariate_substitute(f.F, acc, z);
    }
    return acc;
}

// Characteristic-2 field detection for the height computation.
inline bool is_char2_field(const GF& x) { return x.field().p() == 2; }
inline bool is_char2_field(const Witt& x) { return x.precision() == 1; }
/// F_4 or F_4[u^{+-1}] (a domain; heights are computed the same way).
inline bool is_char2_field(const TowerValue& x) { return x.ring().k() == 1 && x.ring().m() == 1; }

struct HeightResult {
    std::optional<int> height;   ///< empty: [2] vanishes to the working order
    int bound = 0;               ///< the largest h with 2^h below the order

    std::string str() const
    {
        return height ? std::to_string(*height) : ">= " + std::to_string(bound + 1);
    }
};

/// Least h with the z^{2^h} coefficient of [2] nonzero.
template <ExactRing R>
HeightResult height(const FGL<R>& f)
{
    if (!is_char2_field(f.zero_element())) {
        throw precondition_error("height: base ring is not a field of characteristic 2");
    }
    const auto two = n_series(f, 2);
    HeightResult res;
    for (int h = 0; (1 << h) < f.order(); ++h) {
        res.bound = h;
        if (!two[1 << h].is_zero()) {
            res.height = h;
            return res;
        }
    }
    return res;
}

/// Coefficients of z^2 and z^4 in [2](z), with the u-weights of their
/// normalized forms c2 u and c4 u^3.
template <ExactRing R>
struct VProxies {
    R c2, c4;
    int c2_weight = 1;
    int c4_weight = 3;
};

template <ExactRing R>
VProxies<R> v_proxies(const FGL<R>& f)
{
    require(f.order() >= 5, "v_proxies: order must be at least 5");
    const auto two = n_series(f, 2);
    return VProxies<R>{two[2], two[4]};
}

/// Supersingularity of a smooth curve over a finite field of characteristic 2,
/// decided by the height of its formal group and cross-checked against the
/// parity of #C(F_q) (odd exactly when the trace of Frobenius is even).
inline bool is_supersingular(const WCurve<GF>& c, int n = 9)
{
    if (!c.is_smooth()) {
        throw precondition_error("is_supersingular: singular curve");
    }
    require(c.a1.field().p() == 2, "is_supersingular: characteristic 2 only");
    const auto h = height(fgl_from_curve(c, n));
    const bool by_height = h.height.has_value() && *h.height == 2;
    if (c.a1.field().size() <= 64) {
        const bool by_count = rational_points(c).size() % 2 == 1;
        if (by_count != by_height) {
            throw internal_error("is_supersingular: height and point count disagree");
        }
    }
    return by_height;
}

} // namespace ssdef
