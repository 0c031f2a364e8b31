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

#include "ssdef/series.hpp"
#include "ssdef/tower.hpp"
#include "support.hpp"

using namespace ssdef;
using ssdef::testing::Gen;

namespace {

using S1 = Series<Witt, 1>;
using S2 = Series<Witt, 2>;

S1 poly1(int k, int order, std::initializer_list<long> coeffs)
{
    S1 f(Witt::from_int(k, 0), order);
    int i = 0;
    for (long c : coeffs) {
        f.set({i++}, Witt::from_int(k, c));
    }
    return f;
}

} // namespace

TEST(Series, SubstituteIdentity)
{
    Gen gen(31);
    const Witt zero = Witt::from_int(4, 0);
    const S1 z = S1::var(zero, 8);
    for (int t = 0; t < 20; ++t) {
        const S1 g = gen.series1(zero, 8, [&] { return gen.witt(4); }, 1);
        EXPECT_EQ(substitute(z, g), g);
    }
}

TEST(Series, SubstituteSquare)
{
    const S1 f = poly1(8, 10, {0, 0, 1});
    const S1 g = poly1(8, 10, {0, 1, 1});
    EXPECT_EQ(substitute(f, g), poly1(8, 10, {0, 0, 1, 2, 1}));
}

TEST(Series, SubstituteCharacteristicTwo)
{
    const S1 f = poly1(1, 10, {0, 1, 1});
    // (z + z^2) + (z + z^2)^2 = z + z^2 + z^2 + z^4 over F2-coefficients.
    EXPECT_EQ(substitute(f, f), poly1(1, 10, {0, 1, 0, 0, 1}));
}

TEST(Series, SubstituteRejectsConstantTerm)
{
    const S1 f = poly1(2, 5, {0, 1});
    EXPECT_THROW(substitute(f, poly1(2, 5, {1, 1})), precondition_error);
}

TEST(Series, ReversionExamples)
{
    EXPECT_EQ(reversion(poly1(4, 6, {0, 1})), poly1(4, 6, {0, 1}));
    // Catalan numbers with alternating sign, checked against an inline oracle.
    const S1 g = reversion(poly1(4, 5, {0, 1, 1}));
    EXPECT_EQ(g, poly1(4, 5, {0, 1, -1, 2, -5}));
    const S1 f = poly1(4, 5, {0, 1, 1});
    EXPECT_EQ(substitute(f, g), poly1(4, 5, {0, 1}));
}

TEST(Series, ReversionOfScaling)
{
    const auto& r = TowerRing::get(TowerSpec{3, "a1", 4, "u"});
    using ST = Series<TowerValue, 1>;
    const TowerValue u = r.laurent(1);
    const ST f = ST::var(r.zero(), 7).scaled(u);
    EXPECT_EQ(reversion(f), ST::var(r.zero(), 7).scaled(r.laurent(-1)));
}

TEST(Series, ReversionRejectsNonUnit)
{
    EXPECT_THROW(reversion(poly1(4, 5, {0, 2, 1})), precondition_error);
}

TEST(Series, ReversionIsTwoSidedInverse)
{
    Gen gen(32);
    const auto& r = TowerRing::get(TowerSpec{3, "a1", 4, "u"});
    using ST = Series<TowerValue, 1>;
    for (int t = 0; t < 10; ++t) {
        ST f = gen.series1(r.zero(), 8, [&] { return gen.tower(r, 2, 2); }, 2);
        f.set({1}, gen.tower_unit(r, 2, 2));
        const ST g = reversion(f);
        const ST z = ST::var(r.zero(), 8);
        EXPECT_EQ(substitute(f, g), z);
        EXPECT_EQ(substitute(g, f), z);
    }
    for (int k : {1, 4}) {
        for (int t = 0; t < 20; ++t) {
            S1 f = gen.series1(Witt::from_int(k, 0), 10, [&] { return gen.witt(k); }, 2);
            f.set({1}, gen.witt_unit(k));
            const S1 g = reversion(f);
            EXPECT_EQ(substitute(f, g), S1::var(Witt::from_int(k, 0), 10));
            EXPECT_EQ(substitute(g, f), S1::var(Witt::from_int(k, 0), 10));
        }
    }
}

TEST(Series, SubstitutionIsAssociative)
{
    Gen gen(33);
    const Witt zero = Witt::from_int(5, 0);
    for (int t = 0; t < 20; ++t) {
        const S1 f = gen.series1(zero, 9, [&] { return gen.witt(5); });
        const S1 g = gen.series1(zero, 9, [&] { return gen.witt(5); }, 1);
        const S1 h = gen.series1(zero, 9, [&] { return gen.witt(5); }, 1);
        EXPECT_EQ(substitute(substitute(f, g), h), substitute(f, substitute(g, h)));
    }
}

TEST(Series, PrecisionLaw)
{
    Gen gen(34);
    const Witt zero = Witt::from_int(3, 0);
    for (int t = 0; t < 20; ++t) {
        const S1 f = gen.series1(zero, 10, [&] { return gen.witt(3); });
        const S1 g = gen.series1(zero, 10, [&] { return gen.witt(3); }, 1);
        for (int n = 2; n < 10; n += 3) {
            EXPECT_EQ(substitute(f, g).truncate(n), substitute(f.truncate(n), g.truncate(n)));
            EXPECT_EQ((f * g).truncate(n), f.truncate(n) * g.truncate(n));
        }
    }
}

TEST(Series, OrderIsMinimumOfOperands)
{
    const S1 f = poly1(2, 5, {1, 1});
    const S1 g = poly1(2, 8, {1, 1});
    EXPECT_EQ((f + g).order(), 5);
    EXPECT_EQ((f * g).order(), 5);
}

TEST(Series, BivariateSubstitute)
{
    const Witt zero = Witt::from_int(4, 0);
    const S2 x = S2::var(zero, 8, 0);
    const S2 y = S2::var(zero, 8, 1);
    Gen gen(35);
    const S1 phi = gen.series1(zero, 8, [&] { return gen.witt(4); }, 1);
    // (z1 + z2)(phi, phi) = 2 phi
    EXPECT_EQ(bivariate_substitute(x + y, phi, phi), phi.scaled(Witt::from_int(4, 2)));
    // (z1 z2)(z + z^2, z) = z^2 + z^3
    EXPECT_EQ(bivariate_substitute(x * y, poly1(4, 8, {0, 1, 1}), poly1(4, 8, {0, 1})),
              poly1(4, 8, {0, 0, 1, 1}));
    // Setting the second argument to zero gives the z1-section.
    const S2 F = x + y + x * y + x * x * y;
    EXPECT_EQ(bivariate_substitute(F, S1::var(zero, 8), S1(zero, 8)), S1::var(zero, 8));
}

TEST(Series, ReciprocalAndDerivative)
{
    const S1 f = poly1(6, 8, {1, 1});
    const S1 inv = reciprocal(f);
    EXPECT_EQ(inv, poly1(6, 8, {1, -1, 1, -1, 1, -1, 1, -1}));
    EXPECT_EQ(derivative(poly1(6, 8, {0, 1, 1, 1})), poly1(6, 7, {1, 2, 3}));
}
