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

// Level-3 structures on curves over finite fields of characteristic 2 and the
// action of automorphisms and Frobenius on them.

#include <algorithm>
#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include "ssdef/error.hpp"
#include "ssdef/finite_field.hpp"
#include "ssdef/groups.hpp"
#include "ssdef/weierstrass.hpp"

namespace ssdef {

struct LevelPoint {
    WCurve<GF> curve;
    CurvePoint<GF> point;

    std::string str() const { return point.str(); }
    friend bool operator==(const LevelPoint& a, const LevelPoint& b) { return a.point == b.point; }
    friend bool operator<(const LevelPoint& a, const LevelPoint& b) { return a.point < b.point; }
};

/// The subgroup {O, P, -P}; the generator is the lesser of P and -P.
struct LevelSubgroup {
    WCurve<GF> curve;
    LevelPoint generator;

    static LevelSubgroup of(const LevelPoint& p)
    {
        LevelPoint q{p.curve, point_neg(p.curve, p.point)};
        return LevelSubgroup{p.curve, std::min(p, q)};
    }
    std::vector<CurvePoint<GF>> elements() const
    {
        return {CurvePoint<GF>::at_infinity(), generator.point, point_neg(curve, generator.point)};
    }
    std::string str() const { return "<" + generator.str() + ">"; }
    friend bool operator==(const LevelSubgroup& a, const LevelSubgroup& b) { return a.generator == b.generator; }
    friend bool operator<(const LevelSubgroup& a, const LevelSubgroup& b) { return a.generator < b.generator; }
};

/// An ordered basis (P, Q) of the 3-torsion.
struct FullLevel {
    WCurve<GF> curve;
    LevelPoint p, q;

    std::string str() const { return "(" + p.str() + ", " + q.str() + ")"; }
    friend bool operator==(const FullLevel& a, const FullLevel& b) { return a.p == b.p && a.q == b.q; }
    friend bool operator<(const FullLevel& a, const FullLevel& b)
    {
        return a.p == b.p ? a.q < b.q : a.p < b.p;
    }
};

struct Level3Data {
    std::vector<LevelPoint> points;
    std::vector<LevelSubgroup> subgroups;
    std::vector<FullLevel> bases;
};

/// Points of exact order 3, their subgroups and ordered bases over the field of
/// definition of the curve's coefficients as given, all sorted.
inline Level3Data enumerate_level3(const WCurve<GF>& c)
{
    require(c.is_smooth(), "enumerate_level3: curve is singular");
    Level3Data out;
    for (const auto& p : rational_points(c)) {
        if (!p.infinity && point_mul(c, 3, p).infinity) {
            out.points.push_back({c, p});
        }
    }
    if (out.points.size() != 8) {
        const int have = c.a1.field().degree();
        std::string need = "beyond F_2^8";
        try {
            need = "F_2^" + std::to_string(std::lcm(torsion_points(c, 3, 8).extension_degree, have));
        } catch (const search_bound_error&) {
        }
        throw precondition_error("enumerate_level3: 3-torsion is not rational over F_2^" + std::to_string(have) +
                                 "; it needs " + need);
    }
    for (const auto& p : out.points) {
        const auto h = LevelSubgroup::of(p);
        if (std::find(out.subgroups.begin(), out.subgroups.end(), h) == out.subgroups.end()) {
            out.subgroups.push_back(h);
        }
    }
    std::sort(out.subgroups.begin(), out.subgroups.end());
    for (const auto& p : out.points) {
        for (const auto& q : out.points) {
            if (!(LevelSubgroup::of(p) == LevelSubgroup::of(q))) {
                out.bases.push_back({c, p, q});
            }
        }
    }
    return out;
}

/// The absolute Frobenius x -> x^2 applied to coordinates.
struct Frobenius {
    std::string str() const { return "Frob"; }
    friend bool operator==(const Frobenius&, const Frobenius&) { return true; }
};

using LevelAction = std::variant<WIso<GF>, Frobenius>;

namespace detail {

inline CurvePoint<GF> act_point(const LevelAction& g, const WCurve<GF>& c, const CurvePoint<GF>& p)
{
    if (const auto* phi = std::get_if<WIso<GF>>(&g)) {
        if (!(apply_iso(c, *phi) == c)) {
            throw precondition_error("act: " + phi->str() + " is not an automorphism of the curve");
        }
        return map_point(*phi, p);
    }
    if (!(c.map([](const GF& a) { return a.frobenius(); }) == c)) {
        throw precondition_error("act: Frobenius does not preserve the curve");
    }
    return p.infinity ? p : CurvePoint<GF>::affine(p.x.frobenius(), p.y.frobenius());
}

} // namespace detail

inline LevelPoint act(const LevelAction& g, const LevelPoint& x)
{
    return {x.curve, detail::act_point(g, x.curve, x.point)};
}
inline LevelSubgroup act(const LevelAction& g, const LevelSubgroup& h)
{
    return LevelSubgroup::of(act(g, h.generator));
}
inline FullLevel act(const LevelAction& g, const FullLevel& b) { return {b.curve, act(g, b.p), act(g, b.q)}; }

/// Orbit partition of `data` (indices) under a finite group acting through
/// `act`, with the stabilizer of each orbit's least element.
struct OrbitReport {
    std::vector<std::vector<int>> orbits;        ///< data indices, each sorted; orbits ordered by least element
    std::vector<int> representatives;            ///< least element of each orbit
    std::vector<std::vector<int>> stabilizers;   ///< group element indices
    std::vector<StructureId> stabilizer_ids;
    int group_order = 0;

    bool orbit_stabilizer_holds() const
    {
        for (std::size_t i = 0; i < orbits.size(); ++i) {
            if (orbits[i].size() * stabilizers[i].size() != static_cast<std::size_t>(group_order)) {
                return false;
            }
        }
        return true;
    }
};

/// `image(g, i)` returns the data index of g applied to data[i], or -1 when the
/// image is not in the list.
template <class Image>
OrbitReport orbits_stabilizers_by_index(const GroupTable& g, int n, Image image)
{
    OrbitReport rep;
    rep.group_order = g.order();
    std::vector<std::vector<int>> perm(g.order(), std::vector<int>(n));
    for (int a = 0; a < g.order(); ++a) {
        for (int i = 0; i < n; ++i) {
            const int j = image(a, i);
            if (j < 0) {
                throw precondition_error("orbits_stabilizers: the action is not closed on the data");
            }
            perm[a][i] = j;
        }
    }
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
        if (seen[i]) {
            continue;
        }
        std::vector<int> orbit;
        std::vector<int> stab;
        for (int a = 0; a < g.order(); ++a) {
            const int j = perm[a][i];
            if (!seen[j]) {
                seen[j] = 1;
                orbit.push_back(j);
            }
            if (j == i) {
                stab.push_back(a);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        rep.orbits.push_back(orbit);
        rep.representatives.push_back(i);
        rep.stabilizer_ids.push_back(structure_id(g.subgroup(stab)));
        rep.stabilizers.push_back(std::move(stab));
    }
    return rep;
}

/// Orbits of a group of curve automorphisms on sorted level data.
template <class T>
OrbitReport orbits_stabilizers(const RealizedGroup<WIso<GF>>& g, const std::vector<T>& data)
{
    return orbits_stabilizers_by_index(g.table, static_cast<int>(data.size()), [&](int a, int i) {
        const T y = act(LevelAction{g.elements[a]}, data[i]);
        const auto it = std::find(data.begin(), data.end(), y);
        return it == data.end() ? -1 : static_cast<int>(it - data.begin());
    });
}

/// Permutation of the sorted list `data` induced by an action.
template <class T>
std::vector<int> induced_permutation(const LevelAction& g, const std::vector<T>& data)
{
    std::vector<int> perm;
    for (const auto& x : data) {
        const auto it = std::find(data.begin(), data.end(), act(g, x));
        if (it == data.end()) {
            throw precondition_error("induced_permutation: the action is not closed on the data");
        }
        perm.push_back(static_cast<int>(it - data.begin()));
    }
    return perm;
}

/// The group generated by the automorphisms and Frobenius, realized as
/// permutations of `data` (composition: apply left factor, then right).
template <class T>
RealizedGroup<std::vector<int>> automorphisms_with_galois(const std::vector<WIso<GF>>& autos, const std::vector<T>& data)
{
    std::vector<std::vector<int>> gens;
    for (const auto& a : autos) {
        gens.push_back(induced_permutation(LevelAction{a}, data));
    }
    gens.push_back(induced_permutation(LevelAction{Frobenius{}}, data));
    std::vector<int> id(data.size());
    std::iota(id.begin(), id.end(), 0);
    auto mul = [](const std::vector<int>& x, const std::vector<int>& y) {
        std::vector<int> z(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            z[i] = y[x[i]];
        }
        return z;
    };
    auto label = [](const std::vector<int>& x) {
        std::string s;
        for (int v : x) {
            s += std::to_string(v);
        }
        return s;
    };
    return group_from_generators(id, gens, mul, label);
}

/// Degrees of the forgetful maps bases -> points -> subgroups -> point.
struct TowerDegrees {
    int bases_over_points = 0;
    int points_over_subgroups = 0;
    int subgroups = 0;
};

inline TowerDegrees level_tower_degrees(const Level3Data& d)
{
    require(!d.points.empty() && !d.subgroups.empty(), "level_tower_degrees: empty level data");
    return {static_cast<int>(d.bases.size() / d.points.size()),
            static_cast<int>(d.points.size() / d.subgroups.size()), static_cast<int>(d.subgroups.size())};
}

} // namespace ssdef
