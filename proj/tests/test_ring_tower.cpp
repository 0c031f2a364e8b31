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

#include "ssdef/finite_field.hpp"
#include "ssdef/tower.hpp"
#include "ssdef/witt.hpp"
#include "support.hpp"

using namespace ssdef;
using ssdef::testing::Gen;

namespace {

const TowerRing& def_ring(int k = 3, int m = 6)
{
    return TowerRing::get(TowerSpec{k, "a1", m, "u"});
}

} // namespace

TEST(FiniteField, F4DefiningRelation)
{
    const auto& f4 = f4_field();
    const GF w = f4.generator();
    EXPECT_EQ(w * w, w + f4.one());
    EXPECT_EQ(w.frobenius(), w + f4.one());
    EXPECT_EQ(f4.size(), 4);
    EXPECT_EQ(f4.elements().size(), 4u);
    EXPECT_EQ(w.str(), "w");
}

TEST(FiniteField, F4MultiplicativeGroupIsCyclicOfOrder3)
{
    const auto& f4 = f4_field();
    std::set<int> orders;
    for (const GF& x : f4.elements()) {
        if (x.is_zero()) {
            continue;
        }
        int n = 1;
        GF y = x;
        while (!(y == f4.one())) {
            y = y * x;
            ++n;
        }
        orders.insert(n);
    }
    EXPECT_EQ(orders, (std::set<int>{1, 3}));
}

TEST(FiniteField, FrobeniusHasOrderN)
{
    for (int n = 1; n <= 8; ++n) {
        const auto& f = field_make(FieldSpec::gf2(n));
        int order = 0;
        for (int k = 1; k <= n && order == 0; ++k) {
            bool all = true;
            for (const GF& x : f.elements()) {
                GF y = x;
                for (int i = 0; i < k; ++i) {
                    y = y.frobenius();
                }
                all = all && y == x;
            }
            if (all) {
                order = k;
            }
        }
        EXPECT_EQ(order, n) << "F_2^" << n;
    }
}

TEST(FiniteField, ReducibleModulusNamesAFactor)
{
    try {
        field_make(FieldSpec{2, 2, {1, 0, 1}});
        FAIL() << "expected construction_error";
    } catch (const construction_error& e) {
        EXPECT_NE(std::string(e.what()).find("divisible by x+1"), std::string::npos) << e.what();
    }
    EXPECT_THROW(field_make(FieldSpec{3, 2, {1, 0, 1}}), construction_error);
}

TEST(FiniteField, FieldAxiomsOnRandomElements)
{
    Gen gen(11);
    for (int n : {1, 2, 3, 4, 8}) {
        const auto& f = field_make(FieldSpec::gf2(n));
        for (int t = 0; t < 200; ++t) {
            const GF a = gen.field_element(f), b = gen.field_element(f), c = gen.field_element(f);
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ(a + b, b + a);
            if (!a.is_zero()) {
                EXPECT_EQ(a * *a.inverse(), f.one());
            }
        }
    }
    const auto& f3 = field_make(FieldSpec::f3());
    EXPECT_EQ(f3.element(2) * f3.element(2), f3.one());
    EXPECT_EQ(f3.element(1) + f3.element(2), f3.zero());
}

TEST(FiniteField, EmbeddingIsARingMap)
{
    const auto& f4 = f4_field();
    for (int n : {2, 4, 6, 8}) {
        const auto& big = field_make(FieldSpec::gf2(n));
        const auto emb = field_embedding(f4, big);
        for (const GF& a : f4.elements()) {
            for (const GF& b : f4.elements()) {
                EXPECT_EQ(emb[(a * b).code()], emb[a.code()] * emb[b.code()]);
                EXPECT_EQ(emb[(a + b).code()], emb[a.code()] + emb[b.code()]);
            }
        }
    }
}

TEST(Witt, RingAxiomsAndUnits)
{
    Gen gen(12);
    for (int k : {1, 2, 3, 4, 8, 20}) {
        for (int t = 0; t < 200; ++t) {
            const Witt a = gen.witt(k), b = gen.witt(k), c = gen.witt(k);
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ(a * b, b * a);
            EXPECT_EQ(a - a, a.zero());
            if (a.is_unit()) {
                EXPECT_EQ(a * *a.inverse(), a.one());
            } else {
                EXPECT_FALSE(a.inverse().has_value());
            }
        }
    }
}

TEST(Witt, ReductionIsARingSurjection)
{
    Gen gen(13);
    std::set<int> hit;
    for (int t = 0; t < 200; ++t) {
        const Witt a = gen.witt(4), b = gen.witt(4);
        EXPECT_EQ((a * b).residue(), a.residue() * b.residue());
        EXPECT_EQ((a + b).residue(), a.residue() + b.residue());
        hit.insert(a.residue_code());
    }
    EXPECT_EQ(hit.size(), 4u);
}

TEST(Witt, OmegaSatisfiesItsMinimalPolynomial)
{
    const Witt w = Witt::omega(10);
    EXPECT_EQ(w * w + w + w.one(), w.zero());
    EXPECT_EQ(w.frobenius(), w * w);
    EXPECT_EQ(w.frobenius().frobenius(), w);
}

TEST(Teichmuller, ZeroAndOne)
{
    const auto& f4 = f4_field();
    for (int k = 1; k <= 8; ++k) {
        EXPECT_TRUE(teichmuller_lift(f4.zero(), k).is_zero());
        EXPECT_EQ(teichmuller_lift(f4.one(), k), Witt::from_int(k, 1));
    }
}

TEST(Teichmuller, OmegaCubedIsOne)
{
    const auto& f4 = f4_field();
    const Witt t = teichmuller_lift(f4.generator(), 4);
    EXPECT_EQ(t.pow(3), Witt::from_int(4, 1));
    EXPECT_EQ(t.residue(), f4.generator());
    // Independent oracle: w itself is a cube root of unity lifting w.
    EXPECT_EQ(t, Witt::omega(4));
    const GF w2 = f4.generator() * f4.generator();
    EXPECT_EQ(t * teichmuller_lift(w2, 4), Witt::from_int(4, 1));
}

TEST(Teichmuller, MultiplicativeAtEveryPrecision)
{
    const auto& f4 = f4_field();
    for (int k = 1; k <= 8; ++k) {
        for (const GF& x : f4.elements()) {
            for (const GF& y : f4.elements()) {
                EXPECT_EQ(teichmuller_lift(x * y, k), teichmuller_lift(x, k) * teichmuller_lift(y, k));
            }
            const Witt t = teichmuller_lift(x, k);
            EXPECT_EQ(t.pow(4), t);
            EXPECT_EQ(t.residue(), x);
        }
    }
}

TEST(Tower, RingAxiomsOnRandomValues)
{
    Gen gen(21);
    for (const TowerRing* r : {&def_ring(3, 6), &def_ring(1, 4), &TowerRing::get(TowerSpec{1, "eps", 2, ""})}) {
        for (int t = 0; t < 100; ++t) {
            const TowerValue a = gen.tower(*r), b = gen.tower(*r), c = gen.tower(*r);
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ(a * b, b * a);
            EXPECT_EQ(a + (-a), r->zero());
            EXPECT_EQ(a * r->one(), a);
        }
    }
}

TEST(Tower, UnitsAndInverses)
{
    Gen gen(22);
    const auto& r = def_ring(3, 6);
    for (int t = 0; t < 100; ++t) {
        const TowerValue x = gen.tower_unit(r);
        ASSERT_TRUE(x.is_unit()) << x.str();
        EXPECT_EQ(x * *x.inverse(), r.one());
    }
    EXPECT_FALSE(r.gen().inverse().has_value());
    EXPECT_FALSE(r.from_int(2).inverse().has_value());
    EXPECT_FALSE((r.laurent(1) + r.laurent(2)).inverse().has_value());
    const TowerValue y = r.laurent(1) + r.from_int(2) * r.gen() * r.laurent(5);
    EXPECT_EQ(y * *y.inverse(), r.one());
}

TEST(Tower, NoStoredZerosAndCanonicalOrder)
{
    const auto& r = def_ring(3, 6);
    const TowerValue x = r.gen() * r.laurent(1) + r.laurent(3);
    EXPECT_TRUE((x - x).terms().empty());
    EXPECT_EQ(x.str(), "a1*u + u^3");
    EXPECT_TRUE(r.gen().pow(6).is_zero());
    EXPECT_EQ(r.from_int(8), r.zero());
}

TEST(Tower, ReduceExamples)
{
    const auto& r = def_ring(3, 6);
    const TowerValue au = r.gen() * r.laurent(1);
    const TowerValue x = r.from_int(2) + au;
    EXPECT_EQ(reduce(x, ReductionIdeal::two), au.reduce_to(r.mod_two()));
    const auto& f4 = f4_field();
    const TowerValue tw = r.teichmuller(f4.generator());
    EXPECT_EQ(reduce(tw, ReductionIdeal::two), r.mod_two().scalar(Witt::omega(1)));
    EXPECT_EQ(reduce(au + r.laurent(3), ReductionIdeal::two_and_series), r.residue_ring().laurent(3));
}

TEST(Tower, TruncationCommutesWithArithmetic)
{
    Gen gen(23);
    const auto& big = def_ring(4, 8);
    for (int kk = 1; kk <= 4; ++kk) {
        for (int mm = 1; mm <= 8; mm += 3) {
            const auto& small = big.with_precision(kk, mm);
            for (int t = 0; t < 30; ++t) {
                const TowerValue a = gen.tower(big), b = gen.tower(big);
                EXPECT_EQ((a * b).reduce_to(small), a.reduce_to(small) * b.reduce_to(small));
                EXPECT_EQ((a + b).reduce_to(small), a.reduce_to(small) + b.reduce_to(small));
            }
        }
    }
}

TEST(RingEndomorphism, IdentityFixesValues)
{
    Gen gen(24);
    const auto& r = def_ring();
    const auto id = RingEndomorphism::identity(r);
    for (int t = 0; t < 50; ++t) {
        const TowerValue x = gen.tower(r);
        EXPECT_EQ(id(x), x);
    }
}

TEST(RingEndomorphism, TeichmullerTwistHasOrderThree)
{
    const auto& r = def_ring();
    const auto& f4 = f4_field();
    const TowerValue t1 = r.teichmuller(f4.generator());
    const TowerValue t2 = r.teichmuller(f4.generator() * f4.generator());
    const TowerValue u = r.laurent(1);
    const TowerValue ua = u * r.gen();
    const auto g = RingEndomorphism::from_u_and_us(r, t1 * u, t2 * ua);
    EXPECT_EQ(g.s_image(), t1 * r.gen());
    const auto g3 = g.compose(g).compose(g);
    EXPECT_TRUE(g3.equal_on_generators(RingEndomorphism::identity(r)));
    EXPECT_FALSE(g.compose(g).equal_on_generators(RingEndomorphism::identity(r)));
}

TEST(RingEndomorphism, InvolutionNegatesA1)
{
    const auto& r = def_ring();
    const TowerValue u = r.laurent(1);
    const auto sigma = RingEndomorphism::from_u_and_us(r, -u, u * r.gen());
    EXPECT_EQ(sigma(r.gen()), -r.gen());
    EXPECT_TRUE(sigma.compose(sigma).equal_on_generators(RingEndomorphism::identity(r)));
}

TEST(RingEndomorphism, HomomorphismProperty)
{
    Gen gen(25);
    const auto& r = def_ring();
    const auto& f4 = f4_field();
    const TowerValue u = r.laurent(1);
    const auto g = RingEndomorphism::from_generators(r, r.teichmuller(f4.generator()) * u + r.from_int(2) * r.gen(),
                                                     r.gen() + r.from_int(2) * r.gen().pow(2),
                                                     RingEndomorphism::BaseMap::frobenius);
    for (int t = 0; t < 50; ++t) {
        const TowerValue a = gen.tower(r), b = gen.tower(r);
        EXPECT_EQ(g(a * b), g(a) * g(b));
        EXPECT_EQ(g(a + b), g(a) + g(b));
    }
}

TEST(RingEndomorphism, RejectsNonUnitImageOfU)
{
    const auto& r = def_ring();
    EXPECT_THROW(RingEndomorphism::from_generators(r, r.from_int(2) * r.laurent(1), r.gen()), precondition_error);
    EXPECT_THROW(RingEndomorphism::from_generators(r, r.laurent(1), r.one()), precondition_error);
}
