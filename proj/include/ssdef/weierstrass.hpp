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

// Weierstrass curves  y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6  over an
// exact ring, coordinate changes, and point arithmetic over finite fields.
//
// A coordinate change phi = (u, r, s, t) sends C to C' = apply_iso(C, phi),
// where points correspond through
//     x = u^2 x' + r,   y = u^3 y' + s u^2 x' + t.
// Composition is written so that apply_iso(apply_iso(C, f), g) equals
// apply_iso(C, compose(f, g)).

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "ssdef/error.hpp"
#include "ssdef/finite_field.hpp"
#include "ssdef/ring.hpp"
#include "ssdef/series.hpp"

namespace ssdef {

template <ExactRing R>
struct WCurve {
    R a1, a2, a3, a4, a6;

    /// Curve with a2 = a4 = a6 = 0.
    static WCurve from_a1_a3(const R& a1, const R& a3)
    {
        return WCurve{a1, a1.zero(), a3, a1.zero(), a1.zero()};
    }

    R b2() const { return a1 * a1 + a1.from_int(4) * a2; }
    R b4() const { return a1.from_int(2) * a4 + a1 * a3; }
    R b6() const { return a3 * a3 + a1.from_int(4) * a6; }
    R b8() const
    {
        return a1 * a1 * a6 + a1.from_int(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    }
    R c4() const { return b2() * b2() - a1.from_int(24) * b4(); }
    R c6() const
    {
        const R b = b2();
        return -(b * b * b) + a1.from_int(36) * b * b4() - a1.from_int(216) * b6();
    }
    R discriminant() const
    {
        const R B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
        return -(B2 * B2 * B8) - a1.from_int(8) * B4 * B4 * B4 - a1.from_int(27) * B6 * B6 +
               a1.from_int(9) * B2 * B4 * B6;
    }
    bool is_smooth() const { return discriminant().inverse().has_value(); }

    /// j = c4^3 / Delta. Throws on a singular curve.
    R j_invariant() const
    {
        auto dinv = discriminant().inverse();
        if (!dinv) {
            throw precondition_error("singular curve: discriminant is not a unit");
        }
        const R c = c4();
        return c * c * c * *dinv;
    }

    std::string str() const
    {
        return "[" + a1.str() + ", " + a2.str() + ", " + a3.str() + ", " + a4.str() + ", " + a6.str() + "]";
    }

    template <class Fn>
    auto map(Fn&& fn) const
    {
        using S = decltype(fn(a1));
        return WCurve<S>{fn(a1), fn(a2), fn(a3), fn(a4), fn(a6)};
    }

    friend bool operator==(const WCurve& x, const WCurve& y)
    {
        return x.a1 == y.a1 && x.a2 == y.a2 && x.a3 == y.a3 && x.a4 == y.a4 && x.a6 == y.a6;
    }
};

/// b2, b4, b6, b8, c4, Delta and (for smooth curves) j.
template <ExactRing R>
struct CurveInvariants {
    R b2, b4, b6, b8, c4, discriminant;
    std::optional<R> j;
};

template <ExactRing R>
CurveInvariants<R> invariants(const WCurve<R>& c)
{
    CurveInvariants<R> inv{c.b2(), c.b4(), c.b6(), c.b8(), c.c4(), c.discriminant(), std::nullopt};
    if (inv.discriminant.inverse()) {
        inv.j = c.j_invariant();
    }
    return inv;
}

template <ExactRing R>
struct WIso {
    R u, r, s, t;

    static WIso identity(const R& proto) { return WIso{proto.one(), proto.zero(), proto.zero(), proto.zero()}; }
    static WIso scaling(const R& u) { return WIso{u, u.zero(), u.zero(), u.zero()}; }

    bool is_identity() const
    {
        return u == u.one() && r.is_zero() && s.is_zero() && t.is_zero();
    }

    std::string str() const { return "(" + u.str() + ", " + r.str() + ", " + s.str() + ", " + t.str() + ")"; }

    friend bool operator==(const WIso& x, const WIso& y)
    {
        return x.u == y.u && x.r == y.r && x.s == y.s && x.t == y.t;
    }
    friend bool operator<(const WIso& x, const WIso& y)
    {
        auto lt = [](const R& a, const R& b) { return a < b; };
        if (!(x.u == y.u)) return lt(x.u, y.u);
        if (!(x.r == y.r)) return lt(x.r, y.r);
        if (!(x.s == y.s)) return lt(x.s, y.s);
        return lt(x.t, y.t);
    }
};

/// First f, then g.
template <ExactRing R>
WIso<R> compose(const WIso<R>& f, const WIso<R>& g)
{
    const R u1sq = f.u * f.u;
    return WIso<R>{f.u * g.u, f.r + u1sq * g.r, f.s + f.u * g.s, f.t + u1sq * f.s * g.r + u1sq * f.u * g.t};
}

template <ExactRing R>
WIso<R> inverse(const WIso<R>& f)
{
    auto uinv = f.u.inverse();
    require(uinv.has_value(), "WIso inverse: u is not a unit");
    const R ui = *uinv;
    return WIso<R>{ui, -(f.r * ui * ui), -(f.s * ui), (f.r * f.s - f.t) * ui * ui * ui};
}

template <ExactRing R>
WCurve<R> apply_iso(const WCurve<R>& c, const WIso<R>& phi)
{
    auto uinv = phi.u.inverse();
    if (!uinv) {
        throw precondition_error("apply_iso: u is not a unit");
    }
    const R& r = phi.r;
    const R& s = phi.s;
    const R& t = phi.t;
    const R ui = *uinv;
    const R ui2 = ui * ui;
    const R ui3 = ui2 * ui;
    const R two = r.from_int(2), three = r.from_int(3);
    const R a1 = (c.a1 + two * s) * ui;
    const R a2 = (c.a2 - s * c.a1 + three * r - s * s) * ui2;
    const R a3 = (c.a3 + r * c.a1 + two * t) * ui3;
    const R a4 = (c.a4 - s * c.a3 + two * r * c.a2 - (t + r * s) * c.a1 + three * r * r - two * s * t) * ui2 * ui2;
    const R a6 = (c.a6 + r * c.a4 + r * r * c.a2 + r * r * r - t * c.a3 - t * t - r * t * c.a1) * ui3 * ui3;
    return WCurve<R>{a1, a2, a3, a4, a6};
}

/// The elliptic involution (x, y) -> (x, -y - a1 x - a3) as a coordinate change.
template <ExactRing R>
WIso<R> elliptic_involution(const WCurve<R>& c)
{
    return WIso<R>{-c.a1.one(), c.a1.zero(), -c.a1, -c.a3};
}

/// Scaling of the invariant differential: phi^*(eta') = lambda * eta with
/// eta = dx / (2y + a1 x + a3). Under the convention above lambda = u.
template <ExactRing R>
R differential_scaling(const WCurve<R>& /*c*/, const WIso<R>& phi)
{
    return phi.u;
}

// ---------------------------------------------------------------------------
// Formal expansion at infinity: z = -x/y, w = -1/y.

/// w(z) = z^3 + a1 z w + a2 z^2 w + a3 w^2 + a4 z w^2 + a6 w^3, to order n.
template <ExactRing R>
Series<R, 1> formal_w(const WCurve<R>& c, int n)
{
    using S = Series<R, 1>;
    const S z = S::var(c.a1, n);
    const S z2 = z * z;
    S w = z2 * z;
    // Each round fixes at least one more coefficient.
    for (int round = 0; round < n; ++round) {
        const S w2 = w * w;
        S next = z2 * z + (z * w).scaled(c.a1) + (z2 * w).scaled(c.a2) + w2.scaled(c.a3) +
                 (z * w2).scaled(c.a4) + (w2 * w).scaled(c.a6);
        if (next == w) {
            return w;
        }
        w = std::move(next);
    }
    return w;
}

/// The invariant differential as eta(z) dz, with eta(0) = 1.
template <ExactRing R>
Series<R, 1> invariant_differential(const WCurve<R>& c, int n)
{
    using S = Series<R, 1>;
    const S w = formal_w(c, n + 1).truncate(n);
    const S z = S::var(c.a1, n);
    const S one = S::constant(c.a1.one(), n);
    // eta = -dz / f_w where f = z^3 + a1 zw + ... + a6 w^3 - w.
    const S fw_neg = one - z.scaled(c.a1) - (z * z).scaled(c.a2) - w.scaled(c.a3 + c.a3) -
                     (z * w).scaled(c.a4 + c.a4) - (w * w).scaled(c.a6.from_int(3) * c.a6);
    return reciprocal(fw_neg);
}

/// The map z -> z' induced on formal coordinates by phi : C -> apply_iso(C, phi):
///     z' = u (z - r w) / (1 + s z - s r w + t w).
template <ExactRing R>
Series<R, 1> induced_formal_map(const WCurve<R>& c, const WIso<R>& phi, int n)
{
    using S = Series<R, 1>;
    const S w = formal_w(c, n);
    const S z = S::var(c.a1, n);
    const S num = (z - w.scaled(phi.r)).scaled(phi.u);
    const S den = S::constant(c.a1.one(), n) + z.scaled(phi.s) + w.scaled(phi.t - phi.s * phi.r);
    return num * reciprocal(den);
}

// ---------------------------------------------------------------------------
// Points over finite fields.

template <class F>
struct CurvePoint {
    bool infinity = true;
    F x{}, y{};

    static CurvePoint at_infinity() { return CurvePoint{}; }
    static CurvePoint affine(const F& x, const F& y) { return CurvePoint{false, x, y}; }

    std::string str() const { return infinity ? "O" : "(" + x.str() + ", " + y.str() + ")"; }

    friend bool operator==(const CurvePoint& p, const CurvePoint& q)
    {
        if (p.infinity || q.infinity) {
            return p.infinity == q.infinity;
        }
        return p.x == q.x && p.y == q.y;
    }
    /// Infinity first, then by (x, y) codes.
    friend bool operator<(const CurvePoint& p, const CurvePoint& q)
    {
        if (p.infinity != q.infinity) {
            return p.infinity;
        }
        if (p.infinity) {
            return false;
        }
        if (!(p.x == q.x)) {
            return p.x < q.x;
        }
        return p.y < q.y;
    }
};

template <class F>
bool on_curve(const WCurve<F>& c, const CurvePoint<F>& p)
{
    if (p.infinity) {
        return true;
    }
    const F& x = p.x;
    const F& y = p.y;
    return y * y + c.a1 * x * y + c.a3 * y == x * x * x + c.a2 * x * x + c.a4 * x + c.a6;
}

template <class F>
CurvePoint<F> point_neg(const WCurve<F>& c, const CurvePoint<F>& p)
{
    if (p.infinity) {
        return p;
    }
    return CurvePoint<F>::affine(p.x, -p.y - c.a1 * p.x - c.a3);
}

/// Chord-tangent addition on a smooth curve over a field.
template <class F>
CurvePoint<F> point_add(const WCurve<F>& c, const CurvePoint<F>& p, const CurvePoint<F>& q)
{
    if (!on_curve(c, p) || !on_curve(c, q)) {
        throw precondition_error("point_add: point not on curve");
    }
    if (p.infinity) {
        return q;
    }
    if (q.infinity) {
        return p;
    }
    if (p.x == q.x && p.y + q.y + c.a1 * q.x + c.a3 == p.x.zero()) {
        return CurvePoint<F>::at_infinity();
    }
    F lambda, nu;
    if (p.x == q.x) {
        const F three = p.x.from_int(3), two = p.x.from_int(2);
        const F num = three * p.x * p.x + two * c.a2 * p.x + c.a4 - c.a1 * p.y;
        const F den = two * p.y + c.a1 * p.x + c.a3;
        const F dinv = *den.inverse();
        lambda = num * dinv;
        nu = (-(p.x * p.x * p.x) + c.a4 * p.x + two * c.a6 - c.a3 * p.y) * dinv;
    } else {
        const F dinv = *(q.x - p.x).inverse();
        lambda = (q.y - p.y) * dinv;
        nu = (p.y * q.x - q.y * p.x) * dinv;
    }
    const F x3 = lambda * lambda + c.a1 * lambda - c.a2 - p.x - q.x;
    const F y3 = -(lambda + c.a1) * x3 - nu - c.a3;
    return CurvePoint<F>::affine(x3, y3);
}

template <class F>
CurvePoint<F> point_mul(const WCurve<F>& c, long n, const CurvePoint<F>& p)
{
    if (n < 0) {
        return point_mul(c, -n, point_neg(c, p));
    }
    CurvePoint<F> acc = CurvePoint<F>::at_infinity();
    CurvePoint<F> base = p;
    while (n > 0) {
        if (n & 1) {
            acc = point_add(c, acc, base);
        }
        base = point_add(c, base, base);
        n >>= 1;
    }
    return acc;
}

/// Least n >= 1 with n P = O.
template <class F>
int point_order(const WCurve<F>& c, const CurvePoint<F>& p)
{
    CurvePoint<F> q = p;
    int n = 1;
    while (!q.infinity) {
        q = point_add(c, q, p);
        ++n;
    }
    return n;
}

/// All points of C over its coefficient field, sorted.
inline std::vector<CurvePoint<GF>> rational_points(const WCurve<GF>& c)
{
    std::vector<CurvePoint<GF>> pts{CurvePoint<GF>::at_infinity()};
    const auto elems = c.a1.field().elements();
    for (const GF& x : elems) {
        for (const GF& y : elems) {
            auto p = CurvePoint<GF>::affine(x, y);
            if (on_curve(c, p)) {
                pts.push_back(p);
            }
        }
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

/// Image of a point under phi : C -> apply_iso(C, phi):
///     x' = (x - r) / u^2,   y' = (y - s (x - r) - t) / u^3.
template <class F>
CurvePoint<F> map_point(const WIso<F>& phi, const CurvePoint<F>& p)
{
    if (p.infinity) {
        return p;
    }
    const F ui = *phi.u.inverse();
    const F xr = p.x - phi.r;
    return CurvePoint<F>::affine(xr * ui * ui, (p.y - phi.s * xr - phi.t) * ui * ui * ui);
}

/// Coefficients (constant first) of the 3-division polynomial
///     psi_3 = 3x^4 + b2 x^3 + 3 b4 x^2 + 3 b6 x + b8.
template <ExactRing R>
std::vector<R> division_polynomial_3(const WCurve<R>& c)
{
    const R three = c.a1.from_int(3);
    return {c.b8(), three * c.b6(), three * c.b4(), c.b2(), three};
}

// ---------------------------------------------------------------------------
// Torsion.

template <class F>
struct TorsionResult {
    int extension_degree = 1;       ///< m with all points over F_{2^m}
    WCurve<F> curve;                ///< the curve over F_{2^m}
    std::vector<CurvePoint<F>> points;
};

/// The subfield degree of the field generated by the coefficients.
inline int coefficient_field_degree(const WCurve<GF>& c)
{
    int d = 1;
    for (const GF* a : {&c.a1, &c.a2, &c.a3, &c.a4, &c.a6}) {
        const int e = a->subfield_degree();
        d = std::lcm(d, e);
    }
    return d;
}

/// Rewrite the curve over its coefficient field F_{2^d} (a subfield of the
/// given field), then over F_{2^m} for m a multiple of d.
inline WCurve<GF> curve_over_extension(const WCurve<GF>& c, int m)
{
    const FiniteField& src = c.a1.field();
    require(src.p() == 2, "curve_over_extension: characteristic 2 only");
    const int d = coefficient_field_degree(c);
    require(m % d == 0, "curve_over_extension: coefficients do not lie in F_2^" + std::to_string(m));
    const FiniteField& small = field_make(FieldSpec::gf2(d));
    const FiniteField& target = field_make(FieldSpec::gf2(m));
    const auto down = field_embedding(small, src);
    const auto up = field_embedding(small, target);
    auto move = [&](const GF& a) {
        for (std::size_t i = 0; i < down.size(); ++i) {
            if (down[i] == a) {
                return up[i];
            }
        }
        throw internal_error("curve_over_extension: coefficient outside its subfield");
    };
    return c.map(move);
}

/// Points of order dividing n over the least F_{2^m}, m <= search_bound,
/// containing all n^2 of them.
inline TorsionResult<GF> torsion_points(const WCurve<GF>& c, int n, int search_bound = 6)
{
    require(n >= 1 && n % 2 == 1, "torsion_points: n must be odd");
    require(c.is_smooth(), "torsion_points: curve is singular");
    require(search_bound >= 1 && search_bound <= 8, "torsion_points: search bound must lie in [1, 8]");
    const int d = coefficient_field_degree(c);
    for (int m = d; m <= search_bound; m += d) {
        const WCurve<GF> cm = curve_over_extension(c, m);
        std::vector<CurvePoint<GF>> pts;
        for (const auto& p : rational_points(cm)) {
            if (point_mul(cm, n, p).infinity) {
                pts.push_back(p);
            }
        }
        if (static_cast<int>(pts.size()) == n * n) {
            return TorsionResult<GF>{m, cm, pts};
        }
    }
    throw search_bound_error("torsion_points: " + std::to_string(n) + "-torsion not rational over F_2^m for m <= " +
                             std::to_string(search_bound));
}

// ---------------------------------------------------------------------------
// Automorphisms and isomorphisms over finite fields.

/// Every (u, r, s, t) over the coefficient field with apply_iso(C, phi) = C,
/// sorted canonically.
inline std::vector<WIso<GF>> automorphisms(const WCurve<GF>& c)
{
    require(c.is_smooth(), "automorphisms: curve is singular");
    std::vector<WIso<GF>> out;
    const auto elems = c.a1.field().elements();
    for (const GF& u : elems) {
        if (u.is_zero()) {
            continue;
        }
        for (const GF& r : elems) {
            for (const GF& s : elems) {
                for (const GF& t : elems) {
                    const WIso<GF> phi{u, r, s, t};
                    if (apply_iso(c, phi) == c) {
                        out.push_back(phi);
                    }
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

template <class R>
struct IsoSearchResult {
    std::optional<WIso<R>> iso;
    long candidates_examined = 0;   ///< exhaustion certificate for finite fields
    std::string report;
};

/// Exhaustive search over (u, r, s, t) for apply_iso(c1, phi) = c2.
inline IsoSearchResult<GF> iso_search_exhaustive(const WCurve<GF>& c1, const WCurve<GF>& c2)
{
    IsoSearchResult<GF> res;
    const auto elems = c1.a1.field().elements();
    for (const GF& u : elems) {
        if (u.is_zero()) {
            continue;
        }
        for (const GF& r : elems) {
            for (const GF& s : elems) {
                for (const GF& t : elems) {
                    ++res.candidates_examined;
                    const WIso<GF> phi{u, r, s, t};
                    if (apply_iso(c1, phi) == c2) {
                        res.iso = phi;
                        res.report = "found " + phi.str();
                        return res;
                    }
                }
            }
        }
    }
    res.report = "no isomorphism among " + std::to_string(res.candidates_examined) + " candidates";
    return res;
}

} // namespace ssdef
