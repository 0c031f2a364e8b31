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

// Isomorphisms over tower rings found by filtration lifting: star-isomorphisms
// of formal group laws with a prescribed residue, and Weierstrass coordinate
// changes lifted from the special fibre.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ssdef/error.hpp"
#include "ssdef/filtration.hpp"
#include "ssdef/formal_group.hpp"
#include "ssdef/series.hpp"
#include "ssdef/tower.hpp"
#include "ssdef/weierstrass.hpp"

namespace ssdef {

using TowerSeries1 = Series<TowerValue, 1>;
using TowerSeries2 = Series<TowerValue, 2>;

/// Reduce every coefficient of a series into another tower ring.
template <int A>
Series<TowerValue, A> reduce_series(const Series<TowerValue, A>& f, const TowerRing& target)
{
    return map_coefficients(f, target.zero(), [&](const TowerValue& c) { return c.reduce_to(target); });
}

struct StarIsoProblem {
    FGL<TowerValue> F;
    FGL<TowerValue> G;
    TowerSeries1 residue_part;   ///< over R/(2, s): an endomorphism of F mod (2, s)
};

struct StarIsoResult {
    std::optional<TowerSeries1> phi;
    std::optional<Obstruction> obstruction;
    int steps = 0;

    bool found() const { return phi.has_value(); }
};

/// Solve phi(F(x, y)) = G(phi(x), phi(y)) with phi reducing to residue_part.
inline StarIsoResult star_iso_solve(const StarIsoProblem& p)
{
    const TowerRing& r = p.F.zero_element().ring();
    const TowerRing& res_ring = r.residue_ring();
    const int n = p.F.order();
    require(&p.G.zero_element().ring() == &r, "star_iso_solve: F and G live in different rings");
    require(p.G.order() == n && p.residue_part.order() == n, "star_iso_solve: truncation orders differ");
    require(&p.residue_part.zero_element().ring() == &res_ring,
            "star_iso_solve: residue part must have coefficients in the residue ring");
    const TowerSeries2 f0 = reduce_series(p.F.F, res_ring);
    if (!(f0 == reduce_series(p.G.F, res_ring))) {
        throw precondition_error("star_iso_solve: F and G differ modulo (2, " + r.spec().series_var + ")");
    }
    require(p.residue_part[0].is_zero(), "star_iso_solve: residue part has a constant term");
    require(p.residue_part[1].is_unit(), "star_iso_solve: residue part is not invertible");
    {
        const auto& zero = res_ring.zero();
        const auto x = TowerSeries2::var(zero, n, 0), y = TowerSeries2::var(zero, n, 1);
        const auto lhs = substitute(p.residue_part, f0);
        const auto rhs = bivariate_substitute(f0, substitute(p.residue_part, x), substitute(p.residue_part, y));
        if (!(lhs == rhs)) {
            throw precondition_error("star_iso_solve: residue part is not an endomorphism of the special fibre");
        }
    }

    const TowerValue zero = r.zero();
    const auto x = TowerSeries2::var(zero, n, 0), y = TowerSeries2::var(zero, n, 1);
    auto build = [&](const std::vector<TowerValue>& coeffs) {
        TowerSeries1 phi(zero, n);
        for (int i = 1; i < n; ++i) {
            phi.set({i}, coeffs[i - 1]);
        }
        return phi;
    };
    std::vector<std::pair<int, int>> monomials;
    for (int d = 1; d < n; ++d) {
        for (int a = d; a >= 0; --a) {
            monomials.push_back({a, d - a});
        }
    }
    LiftProblem lp;
    lp.ring = &r;
    lp.equations = [&](const std::vector<TowerValue>& coeffs) {
        const auto phi = build(coeffs);
        const auto diff = substitute(phi, p.F.F) - bivariate_substitute(p.G.F, substitute(phi, x), substitute(phi, y));
        std::vector<TowerValue> out;
        out.reserve(monomials.size());
        for (const auto& [a, b] : monomials) {
            out.push_back(diff.coeff(a, b));
        }
        return out;
    };
    for (int i = 1; i < n; ++i) {
        lp.unknown_names.push_back("phi_" + std::to_string(i));
        lp.unknown_weights.push_back(r.has_laurent() ? i - 1 : 0);
    }
    for (const auto& [a, b] : monomials) {
        lp.equation_names.push_back("x^" + std::to_string(a) + "*y^" + std::to_string(b));
    }
    std::vector<TowerValue> start;
    for (int i = 1; i < n; ++i) {
        start.push_back(lift_residue(p.residue_part[i], r));
    }
    const LiftResult lr = filtration_lift(lp, std::move(start));
    StarIsoResult out;
    out.steps = lr.steps;
    out.obstruction = lr.obstruction;
    if (lr.solution) {
        out.phi = build(*lr.solution);
    }
    return out;
}

/// Polynomial form of apply_iso(c, phi) = target, cleared of denominators.
inline std::vector<TowerValue> iso_equations(const WCurve<TowerValue>& c, const WCurve<TowerValue>& target,
                                             const WIso<TowerValue>& phi)
{
    const TowerValue &u = phi.u, &r = phi.r, &s = phi.s, &t = phi.t;
    const TowerValue two = u.from_int(2), three = u.from_int(3);
    const TowerValue u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u3 * u3;
    return {
        c.a1 + two * s - u * target.a1,
        c.a2 - s * c.a1 + three * r - s * s - u2 * target.a2,
        c.a3 + r * c.a1 + two * t - u3 * target.a3,
        c.a4 - s * c.a3 + two * r * c.a2 - (t + r * s) * c.a1 + three * r * r - two * s * t - u4 * target.a4,
        c.a6 + r * c.a4 + r * r * c.a2 + r * r * r - t * c.a3 - t * t - r * t * c.a1 - u6 * target.a6,
    };
}

namespace detail {

// Weight w with a_i = alpha_i u^{i w} mod (2, s) for every nonzero a_i.
inline int special_fibre_weight(const WCurve<TowerValue>& c)
{
    const std::array<std::pair<int, const TowerValue*>, 5> coeffs{
        {{1, &c.a1}, {2, &c.a2}, {3, &c.a3}, {4, &c.a4}, {6, &c.a6}}};
    std::optional<int> w;
    for (const auto& [i, a] : coeffs) {
        const TowerValue red = reduce(*a, ReductionIdeal::two_and_series);
        if (red.is_zero()) {
            continue;
        }
        if (red.terms().size() != 1 || red.terms()[0].mono.l % i != 0) {
            throw precondition_error("iso_search_elimination: special fibre is not weighted homogeneous");
        }
        const int wi = red.terms()[0].mono.l / i;
        if (w && *w != wi) {
            throw precondition_error("iso_search_elimination: special fibre is not weighted homogeneous");
        }
        w = wi;
    }
    if (!w) {
        throw precondition_error("iso_search_elimination: special fibre is singular");
    }
    return *w;
}

inline WCurve<GF> special_fibre_over_f4(const WCurve<TowerValue>& c)
{
    auto coef = [](const TowerValue& a) {
        const TowerValue red = reduce(a, ReductionIdeal::two_and_series);
        return red.is_zero() ? f4_field().zero() : red.terms()[0].coef.residue();
    };
    return WCurve<GF>{coef(c.a1), coef(c.a2), coef(c.a3), coef(c.a4), coef(c.a6)};
}

} // namespace detail

struct EliminationCandidate {
    WIso<GF> residue;
    std::optional<Obstruction> obstruction;   ///< empty when the candidate lifted
};

struct EliminationResult {
    std::optional<WIso<TowerValue>> iso;
    std::vector<EliminationCandidate> candidates;   ///< in the order tried
    long candidates_examined = 0;                    ///< F_4 coordinate changes considered

    std::string report() const
    {
        std::string out;
        for (const auto& c : candidates) {
            out += "residue " + c.residue.str() + ": " + (c.obstruction ? c.obstruction->str() : "lifted") + "\n";
        }
        return out;
    }
};

/// Isomorphism c1 -> c2 over a tower ring: every F_4 isomorphism of the special
/// fibres is placed in u-degrees by the weights and lifted through the
/// filtration. Candidates with r = s = t = 0 are tried first.
inline EliminationResult iso_search_elimination(const WCurve<TowerValue>& c1, const WCurve<TowerValue>& c2)
{
    const TowerRing& r = c1.a1.ring();
    require(&c2.a1.ring() == &r, "iso_search_elimination: curves live in different rings");
    const int w1 = detail::special_fibre_weight(c1);
    const int w2 = detail::special_fibre_weight(c2);
    if (!r.has_laurent() && (w1 != 0 || w2 != 0)) {
        throw internal_error("iso_search_elimination: nonzero weight without a Laurent variable");
    }
    const WCurve<GF> e1 = detail::special_fibre_over_f4(c1), e2 = detail::special_fibre_over_f4(c2);
    const auto& f4 = f4_field();

    std::vector<WIso<GF>> residues;
    EliminationResult res;
    for (int pass = 0; pass < 2; ++pass) {
        for (const GF& u : f4.elements()) {
            if (u.is_zero()) {
                continue;
            }
            for (const GF& rr : f4.elements()) {
                for (const GF& s : f4.elements()) {
                    for (const GF& t : f4.elements()) {
                        const bool pure = rr.is_zero() && s.is_zero() && t.is_zero();
                        if (pure != (pass == 0)) {
                            continue;
                        }
                        ++res.candidates_examined;
                        const WIso<GF> phi{u, rr, s, t};
                        if (apply_iso(e1, phi) == e2) {
                            residues.push_back(phi);
                        }
                    }
                }
            }
        }
    }

    auto place = [&](const GF& c, int l) { return r.has_laurent() ? r.teichmuller(c) * r.laurent(l) : r.teichmuller(c); };
    LiftProblem lp;
    lp.ring = &r;
    lp.unknown_names = {"u", "r", "s", "t"};
    lp.equation_names = {"a1", "a2", "a3", "a4", "a6"};
    if (r.has_laurent()) {
        lp.unknown_weights = {w1 - w2, 2 * w1, w1, 3 * w1};
    }
    lp.equations = [&](const std::vector<TowerValue>& x) {
        return iso_equations(c1, c2, WIso<TowerValue>{x[0], x[1], x[2], x[3]});
    };
    for (const auto& phi0 : residues) {
        std::vector<TowerValue> start{place(phi0.u, w1 - w2), place(phi0.r, 2 * w1), place(phi0.s, w1),
                                      place(phi0.t, 3 * w1)};
        const LiftResult lr = filtration_lift(lp, std::move(start));
        res.candidates.push_back({phi0, lr.obstruction});
        if (lr.solution) {
            const auto& x = *lr.solution;
            const WIso<TowerValue> phi{x[0], x[1], x[2], x[3]};
            if (!(apply_iso(c1, phi) == c2)) {
                throw internal_error("iso_search_elimination: lifted coordinate change does not map c1 to c2");
            }
            res.iso = phi;
            return res;
        }
    }
    return res;
}

} // namespace ssdef
