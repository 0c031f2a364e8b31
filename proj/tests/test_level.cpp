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

#include <gtest/gtest.h>

#include <set>

#include "ssdef/formal_group.hpp"
#include "ssdef/groups.hpp"
#include "ssdef/level.hpp"
#include "ssdef/weierstrass.hpp"
#include "support.hpp"

using namespace ssdef;
using ssdef::testing::Gen;

namespace {

const FiniteField& F4() { return f4_field(); }
WCurve<GF> supersingular() { return WCurve<GF>::from_a1_a3(F4().zero(), F4().one()); }

// Independent oracle: points with x^3 = y^2 + y, found by scanning all 16 pairs,
// then kept if the tangent-line test 3P = O holds, i.e. the x-coordinate is a
// root of the 3-division polynomial psi_3 = x^4 + ... evaluated directly.
std::set<std::pair<int, int>> order3_points_by_division_polynomial()
{
    std::set<std::pair<int, int>> out;
    const WCurve<GF> c = supersingular();
    const auto psi = division_polynomial_3(c);
    for (const GF& x : F4().elements()) {
        GF v = F4().zero(), pw = F4().one();
        for (const auto& co : psi) {
            v = v + co * pw;
            pw = pw * x;
        }
        if (!v.is_zero()) {
            continue;
        }
        for (const GF& y : F4().elements()) {
            if (y * y + y == x * x * x) {
                out.insert({x.code(), y.code()});
            }
        }
    }
    return out;
}

struct Setting {
    WCurve<GF> curve = supersingular();
    Level3Data data = enumerate_level3(curve);
    RealizedGroup<WIso<GF>> g24 = group_from_automorphisms(automorphisms(curve));
};

const Setting& setting()
{
    static const Setting s;
    return s;
}

} // namespace

TEST(Enumerate, CountsOnSupersingularCurve)
{
    const auto& d = setting().data;
    EXPECT_EQ(d.points.size(), 8u);
    EXPECT_EQ(d.subgroups.size(), 4u);
    EXPECT_EQ(d.bases.size(), 48u);
    EXPECT_EQ(static_cast<int>(d.bases.size()), gl23().group.table.order());
}

TEST(Enumerate, PointsAgreeWithDivisionPolynomial)
{
    std::set<std::pair<int, int>> got;
    for (const auto& p : setting().data.points) {
        got.insert({p.point.x.code(), p.point.y.code()});
        EXPECT_TRUE(point_mul(p.curve, 3, p.point).infinity);
        EXPECT_FALSE(p.point.infinity);
    }
    EXPECT_EQ(got, order3_points_by_division_polynomial());
}

TEST(Enumerate, OriginIsAPoint)
{
    const LevelPoint origin{supersingular(), CurvePoint<GF>::affine(F4().zero(), F4().zero())};
    const auto& pts = setting().data.points;
    EXPECT_NE(std::find(pts.begin(), pts.end(), origin), pts.end());
}

TEST(Enumerate, SubgroupsAreClosedAndBasesGenerate)
{
    const auto& c = setting().curve;
    for (const auto& h : setting().data.subgroups) {
        const auto el = h.elements();
        for (const auto& a : el) {
            for (const auto& b : el) {
                EXPECT_NE(std::find(el.begin(), el.end(), point_add(c, a, b)), el.end());
            }
        }
    }
    for (const auto& b : setting().data.bases) {
        std::set<CurvePoint<GF>> span;
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                span.insert(point_add(c, point_mul(c, i, b.p.point), point_mul(c, j, b.q.point)));
            }
        }
        EXPECT_EQ(span.size(), 9u);
    }
}

TEST(Enumerate, NonRationalTorsionNamesExtension)
{
    // y^2 + y = x^3 over F_2: the 3-torsion needs F_4.
    const auto& f2 = field_make(FieldSpec::gf2(1));
    const auto c = WCurve<GF>::from_a1_a3(f2.zero(), f2.one());
    try {
        enumerate_level3(c);
        FAIL() << "expected an error";
    } catch (const precondition_error& e) {
        EXPECT_NE(std::string(e.what()).find("F_2^2"), std::string::npos) << e.what();
    }
}

TEST(Act, EllipticInvolutionNegatesAndFixesSubgroups)
{
    const LevelAction neg{elliptic_involution(supersingular())};
    for (const auto& p : setting().data.points) {
        EXPECT_EQ(act(neg, p).point, point_neg(p.curve, p.point));
    }
    for (const auto& h : setting().data.subgroups) {
        EXPECT_EQ(act(neg, h), h);
    }
}

TEST(Act, IdentityFixesEverything)
{
    const LevelAction id{WIso<GF>::identity(F4().one())};
    for (const auto& p : setting().data.points) {
        EXPECT_EQ(act(id, p), p);
    }
    for (const auto& b : setting().data.bases) {
        EXPECT_EQ(act(id, b), b);
    }
}

TEST(Act, NonAutomorphismThrows)
{
    const LevelAction bad{WIso<GF>{F4().one(), F4().one(), F4().zero(), F4().zero()}};
    EXPECT_THROW(act(bad, setting().data.points[0]), precondition_error);
}

TEST(Act, IsAGroupAction)
{
    const auto& g = setting().g24;
    for (int a = 0; a < g.table.order(); ++a) {
        for (int b = 0; b < g.table.order(); ++b) {
            const LevelAction ab{g.elements[g.table.mul(a, b)]};
            for (const auto& x : setting().data.bases) {
                // a * b means: apply b, then a.
                EXPECT_EQ(act(ab, x), act(LevelAction{g.elements[a]}, act(LevelAction{g.elements[b]}, x)));
            }
        }
    }
}

TEST(Act, FrobeniusOrbitsOnPoints)
{
    const auto perm = induced_permutation(LevelAction{Frobenius{}}, setting().data.points);
    int fixed = 0;
    for (int i = 0; i < 8; ++i) {
        EXPECT_EQ(perm[perm[i]], i);
        fixed += perm[i] == i;
    }
    // Fixed points are the order-3 points over F_2: (0, 0) and (0, 1).
    EXPECT_EQ(fixed, 2);
}

TEST(Orbits, PointStabilizerIsC3)
{
    const auto rep = orbits_stabilizers(setting().g24, setting().data.points);
    ASSERT_EQ(rep.orbits.size(), 1u);
    EXPECT_TRUE(rep.orbit_stabilizer_holds());
    EXPECT_EQ(rep.stabilizers[0].size(), 3u);
    EXPECT_TRUE(rep.stabilizer_ids[0].is("C3"));
    EXPECT_EQ(setting().data.points[rep.representatives[0]].point,
              CurvePoint<GF>::affine(F4().zero(), F4().zero()));
}

TEST(Orbits, SubgroupStabilizerIsC2TimesC3)
{
    const auto rep = orbits_stabilizers(setting().g24, setting().data.subgroups);
    ASSERT_EQ(rep.orbits.size(), 1u);
    EXPECT_TRUE(rep.orbit_stabilizer_holds());
    EXPECT_EQ(rep.stabilizers[0].size(), 6u);
    EXPECT_TRUE(rep.stabilizer_ids[0].is("C2 × C3"));
}

TEST(Orbits, PointStabilizerHasIndexTwoInSubgroupStabilizer)
{
    const auto pts = orbits_stabilizers(setting().g24, setting().data.points);
    const auto subs = orbits_stabilizers(setting().g24, setting().data.subgroups);
    const auto& sp = pts.stabilizers[0];
    const auto& sh = subs.stabilizers[0];
    ASSERT_EQ(LevelSubgroup::of(setting().data.points[pts.representatives[0]]),
              setting().data.subgroups[subs.representatives[0]]);
    for (int a : sp) {
        EXPECT_NE(std::find(sh.begin(), sh.end(), a), sh.end());
    }
    EXPECT_EQ(sh.size(), 2 * sp.size());
}

TEST(Orbits, CentralInvolutionIsFormalInverse)
{
    const auto& g = setting().g24;
    const auto subs = orbits_stabilizers(g, setting().data.subgroups);
    const auto center = g.table.center();
    const int neg = g.index_of(elliptic_involution(supersingular()));
    const auto& sh = subs.stabilizers[0];
    EXPECT_NE(std::find(sh.begin(), sh.end(), neg), sh.end());
    EXPECT_NE(std::find(center.begin(), center.end(), neg), center.end());
    const int n = 9;
    const auto f = fgl_from_curve(supersingular(), n);
    EXPECT_EQ(induced_formal_map(supersingular(), g.elements[neg], n), n_series(f, -1));
}

TEST(Orbits, TrivialGroupGivesSingletons)
{
    const auto trivial = group_from_automorphisms({WIso<GF>::identity(F4().one())});
    const auto rep = orbits_stabilizers(trivial, setting().data.bases);
    EXPECT_EQ(rep.orbits.size(), 48u);
    for (const auto& s : rep.stabilizers) {
        EXPECT_EQ(s.size(), 1u);
    }
}

TEST(Orbits, BasesFormOneFreeOrbitUnderGaloisExtension)
{
    const auto autos = automorphisms(supersingular());
    const auto g48 = automorphisms_with_galois(autos, setting().data.bases);
    EXPECT_EQ(g48.table.order(), 48);
    EXPECT_EQ(structure_id(g48.table).name, "GL(2,3)");
    const auto rep = orbits_stabilizers_by_index(g48.table, 48, [&](int a, int i) { return g48.elements[a][i]; });
    EXPECT_EQ(rep.orbits.size(), 1u);
    EXPECT_EQ(rep.stabilizers[0].size(), 1u);
    const auto g24rep = orbits_stabilizers(setting().g24, setting().data.bases);
    EXPECT_EQ(g24rep.orbits.size(), 2u);
}

TEST(Orbits, GaloisExtensionOnPointsStabilizers)
{
    const auto autos = automorphisms(supersingular());
    const auto g48 = automorphisms_with_galois(autos, setting().data.points);
    ASSERT_EQ(g48.table.order(), 48);
    const auto rep = orbits_stabilizers_by_index(g48.table, 8, [&](int a, int i) { return g48.elements[a][i]; });
    ASSERT_EQ(rep.orbits.size(), 1u);
    EXPECT_EQ(rep.stabilizers[0].size(), 6u);
}

TEST(Tower, DegreesMatchGL23Indices)
{
    const auto deg = level_tower_degrees(setting().data);
    const GL23 g = gl23();
    EXPECT_EQ(deg.bases_over_points, static_cast<int>(g.gamma1.size()));
    EXPECT_EQ(deg.points_over_subgroups, static_cast<int>(g.gamma0.size() / g.gamma1.size()));
    EXPECT_EQ(deg.subgroups, g.group.table.order() / static_cast<int>(g.gamma0.size()));
    EXPECT_EQ(deg.bases_over_points, 6);
    EXPECT_EQ(deg.points_over_subgroups, 2);
    EXPECT_EQ(deg.subgroups, 4);
    // |G24| / |Stab| accounting.
    const auto pts = orbits_stabilizers(setting().g24, setting().data.points);
    const auto subs = orbits_stabilizers(setting().g24, setting().data.subgroups);
    EXPECT_EQ(24 / static_cast<int>(pts.stabilizers[0].size()), 8);
    EXPECT_EQ(static_cast<int>(subs.stabilizers[0].size() / pts.stabilizers[0].size()), deg.points_over_subgroups);
}

TEST(Properties, ActionCommutesWithGroupLawOnRandomPairs)
{
    Gen gen(303);
    const auto& d = setting().data;
    const auto& g = setting().g24;
    for (int t = 0; t < 100; ++t) {
        const auto& p = d.points[gen.uniform(0, 7)].point;
        const auto& q = d.points[gen.uniform(0, 7)].point;
        const auto& phi = g.elements[gen.uniform(0, 23)];
        const auto& c = setting().curve;
        EXPECT_EQ(map_point(phi, point_add(c, p, q)), point_add(c, map_point(phi, p), map_point(phi, q)));
    }
}
