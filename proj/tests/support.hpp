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

// Seeded generators shared by the property tests.

#include <random>
#include <vector>

#include "ssdef/finite_field.hpp"
#include "ssdef/series.hpp"
#include "ssdef/tower.hpp"
#include "ssdef/witt.hpp"

namespace ssdef::testing {

class Gen {
public:
    explicit Gen(uint32_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin() { return uniform(0, 1) == 1; }

    GF field_element(const FiniteField& f) { return f.element(uniform(0, f.size() - 1)); }
    GF nonzero(const FiniteField& f) { return f.element(uniform(1, f.size() - 1)); }

    Witt witt(int k)
    {
        const int64_t mod = int64_t(1) << k;
        return Witt(k, std::uniform_int_distribution<int64_t>(0, mod - 1)(rng_),
                    std::uniform_int_distribution<int64_t>(0, mod - 1)(rng_));
    }
    Witt witt_unit(int k)
    {
        Witt w = witt(k);
        while (!w.is_unit()) {
            w = witt(k);
        }
        return w;
    }

    /// Random element with up to `terms` monomials, u-degrees in [-span, span].
    TowerValue tower(const TowerRing& r, int terms = 4, int span = 3)
    {
        TowerValue x = r.zero();
        const int n = uniform(0, terms);
        for (int i = 0; i < n; ++i) {
            const int s = uniform(0, r.m() - 1);
            const int l = r.has_laurent() ? uniform(-span, span) : 0;
            x += r.monomial(witt(r.k()), s, l);
        }
        return x;
    }
    TowerValue tower_unit(const TowerRing& r, int terms = 3, int span = 3)
    {
        const int l = r.has_laurent() ? uniform(-span, span) : 0;
        TowerValue x = r.monomial(witt_unit(r.k()), 0, l);
        TowerValue pert = tower(r, terms, span);
        // Keep only the part in (2, s) so the result stays a unit.
        std::vector<TowerValue::Term> keep;
        for (const auto& t : pert.terms()) {
            if (t.mono.s > 0 || !t.coef.is_unit()) {
                keep.push_back(t);
            }
        }
        return x + TowerValue(&r, keep);
    }

    template <ExactRing R, class Make>
    Series<R, 1> series1(const R& proto, int order, Make&& make, int min_degree = 0)
    {
        Series<R, 1> f(proto, order);
        for (int i = min_degree; i < order; ++i) {
            if (coin()) {
                f.set({i}, make());
            }
        }
        return f;
    }

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
};

} // namespace ssdef::testing
