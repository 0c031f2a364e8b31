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

// Lifting solutions of polynomial systems through the (2, s)-adic filtration
// of a tower ring R = W_k(F_4)[s]/(s^m)[u^{+-1}].
//
// Write m for the ideal (2, s). The graded piece m^j / m^{j+1} is free over
// R/m = F_4[u^{+-1}] on the monomials 2^a s^b with a + b = j, a < k, b < m.
//
// The solver keeps an affine family x(theta) = x0 + sum theta_p v_p of
// candidate solutions, theta_p in {0, 1}, with E(x(theta)) in m^j. At step j
// it adds the directions mu * e_i * {1, w} * u^{w_i} for every degree-j basis
// monomial mu, measures the degree-j graded part of E along every direction,
// and solves the resulting linear system over F_2. The kernel of that system
// becomes the family for the next step. Corrections that are free at one
// step but constrained later (through multiplication by 2 or by s) are
// therefore still available when the constraint appears.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ssdef/error.hpp"
#include "ssdef/finite_field.hpp"
#include "ssdef/tower.hpp"

namespace ssdef {

/// A basis monomial 2^a s^b of a graded piece.
struct GradedMonomial {
    int two_exp = 0;
    int series_exp = 0;

    int degree() const { return two_exp + series_exp; }
    std::string str(const std::string& var) const
    {
        std::string out;
        if (two_exp > 0) {
            out += two_exp == 1 ? "2" : "2^" + std::to_string(two_exp);
        }
        if (series_exp > 0) {
            out += (out.empty() ? "" : "*") + var + (series_exp == 1 ? "" : "^" + std::to_string(series_exp));
        }
        return out.empty() ? "1" : out;
    }
};

/// Basis of m^j / m^{j+1}, ordered by increasing power of 2.
inline std::vector<GradedMonomial> graded_basis(const TowerRing& r, int j)
{
    std::vector<GradedMonomial> out;
    for (int a = 0; a <= j; ++a) {
        const int b = j - a;
        if (a < r.k() && b < r.m()) {
            out.push_back({a, b});
        }
    }
    return out;
}

/// F_4[u^{+-1}] element as a map u-degree -> coefficient.
using ResiduePoly = std::map<int, GF>;

/// The mu-component of x in m^j / m^{j+1}; x must lie in m^j with j = deg mu.
inline ResiduePoly graded_component(const TowerValue& x, const GradedMonomial& mu)
{
    ResiduePoly out;
    const auto& f4 = f4_field();
    for (const auto& t : x.terms()) {
        if (t.mono.s != mu.series_exp) {
            continue;
        }
        const uint8_t d = t.coef.digit(mu.two_exp);
        if (d != 0) {
            out[t.mono.l] = f4.element(d);
        }
    }
    return out;
}

/// mu * (naive lift of d).
inline TowerValue lift_graded(const TowerRing& r, const GradedMonomial& mu, const ResiduePoly& d)
{
    std::vector<TowerValue::Term> terms;
    const Witt two_pow = Witt::from_int(r.k(), int64_t(1) << mu.two_exp);
    for (const auto& [l, c] : d) {
        terms.push_back({Mono{mu.series_exp, l}, Witt::naive_lift(r.k(), c.code()) * two_pow});
    }
    return TowerValue(&r, std::move(terms));
}

/// The F_2 system of one lifting step, in readable form.
struct LinearSystemDump {
    std::vector<std::string> columns;
    std::vector<std::string> rows;
    std::vector<std::vector<int>> matrix;   ///< bits
    std::vector<int> rhs;                   ///< bits
};

struct Obstruction {
    int step = 0;   ///< filtration degree j
    GradedMonomial mu;
    int output = 0;   ///< equation index of the failing row
    int udeg = 0;     ///< u-degree of the failing row
    std::string output_name;
    LinearSystemDump system;

    std::string str(const std::string& var = "a1") const
    {
        return "obstruction at filtration step " + std::to_string(step) + ", graded monomial " + mu.str(var) +
               ", equation " + output_name + " coefficient of u^" + std::to_string(udeg);
    }
};

struct LiftResult {
    std::optional<std::vector<TowerValue>> solution;
    std::optional<Obstruction> obstruction;
    int steps = 0;         ///< filtration steps completed
    int evaluations = 0;   ///< calls of the equation map
};

/// E(x) = 0 for x in R^n. With a Laurent variable the system must be
/// homogeneous: unknown i has u-degree unknown_weights[i].
struct LiftProblem {
    const TowerRing* ring = nullptr;
    std::function<std::vector<TowerValue>(const std::vector<TowerValue>&)> equations;
    std::vector<std::string> unknown_names;
    std::vector<std::string> equation_names;
    std::vector<int> unknown_weights;
};

namespace detail {

using Bits = std::vector<uint8_t>;

// Row of a step system: (basis monomial index, equation, u-degree, bit).
using RowKey = std::tuple<int, int, int, int>;
using BitMap = std::map<RowKey, uint8_t>;

inline BitMap graded_bits(const std::vector<TowerValue>& e, const std::vector<GradedMonomial>& basis)
{
    BitMap out;
    for (std::size_t b = 0; b < basis.size(); ++b) {
        for (std::size_t o = 0; o < e.size(); ++o) {
            for (const auto& [l, c] : graded_component(e[o], basis[b])) {
                for (int bit = 0; bit < 2; ++bit) {
                    if ((c.code() >> bit) & 1) {
                        out[{static_cast<int>(b), static_cast<int>(o), l, bit}] = 1;
                    }
                }
            }
        }
    }
    return out;
}

inline bool in_filtration(const std::vector<TowerValue>& e, int j)
{
    return std::all_of(e.begin(), e.end(), [j](const TowerValue& v) { return v.filtration_degree() >= j; });
}

struct F2Solution {
    bool consistent = true;
    int failing_row = -1;
    Bits particular;
    std::vector<Bits> kernel;
};

// Row reduction over F_2; free variables are zero in the particular solution.
inline F2Solution solve_f2(std::vector<Bits> a, Bits b, int ncols)
{
    const int nrows = static_cast<int>(a.size());
    std::vector<int> row_of(nrows);
    for (int i = 0; i < nrows; ++i) {
        row_of[i] = i;
    }
    std::vector<int> pivot_col;
    std::vector<char> is_pivot(ncols, 0);
    int r = 0;
    for (int c = 0; c < ncols && r < nrows; ++c) {
        int p = -1;
        for (int i = r; i < nrows; ++i) {
            if (a[i][c]) {
                p = i;
                break;
            }
        }
        if (p < 0) {
            continue;
        }
        std::swap(a[r], a[p]);
        std::swap(b[r], b[p]);
        std::swap(row_of[r], row_of[p]);
        for (int i = 0; i < nrows; ++i) {
            if (i != r && a[i][c]) {
                for (int cc = c; cc < ncols; ++cc) {
                    a[i][cc] ^= a[r][cc];
                }
                b[i] ^= b[r];
            }
        }
        pivot_col.push_back(c);
        is_pivot[c] = 1;
        ++r;
    }
    F2Solution res;
    for (int i = r; i < nrows; ++i) {
        if (b[i]) {
            if (res.consistent || row_of[i] < res.failing_row) {
                res.failing_row = row_of[i];
            }
            res.consistent = false;
        }
    }
    if (!res.consistent) {
        return res;
    }
    res.particular.assign(ncols, 0);
    for (int i = 0; i < r; ++i) {
        res.particular[pivot_col[i]] = b[i];
    }
    for (int c = 0; c < ncols; ++c) {
        if (is_pivot[c]) {
            continue;
        }
        Bits v(ncols, 0);
        v[c] = 1;
        for (int i = 0; i < r; ++i) {
            v[pivot_col[i]] = a[i][c];
        }
        res.kernel.push_back(std::move(v));
    }
    return res;
}

struct Direction {
    std::vector<TowerValue> v;
    std::string name;
};

inline std::vector<TowerValue> add_vectors(std::vector<TowerValue> x, const std::vector<TowerValue>& y)
{
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] += y[i];
    }
    return x;
}

} // namespace detail

/// Lift `start` (a solution mod m) to an exact solution, one filtration step
/// at a time; or report the first step whose linear system is inconsistent.
inline LiftResult filtration_lift(const LiftProblem& prob, std::vector<TowerValue> start)
{
    const TowerRing& r = *prob.ring;
    const auto& f4 = f4_field();
    const int n = static_cast<int>(start.size());
    const std::string& var = r.spec().series_var;
    LiftResult res;

    std::vector<int> weights = prob.unknown_weights;
    if (weights.empty()) {
        require(!r.has_laurent(), "filtration_lift: a ring with a Laurent variable needs unknown weights");
        weights.assign(n, 0);
    }
    require(static_cast<int>(weights.size()) == n, "filtration_lift: one weight per unknown");
    auto unknown_name = [&](int i) {
        return i < static_cast<int>(prob.unknown_names.size()) ? prob.unknown_names[i] : "x" + std::to_string(i);
    };
    auto equation_name = [&](int o) {
        return o < static_cast<int>(prob.equation_names.size()) ? prob.equation_names[o] : "E" + std::to_string(o);
    };
    auto evaluate = [&](const std::vector<TowerValue>& x) {
        ++res.evaluations;
        return prob.equations(x);
    };

    std::vector<TowerValue> x0 = std::move(start);
    std::vector<TowerValue> e0 = evaluate(x0);
    if (!detail::in_filtration(e0, 1)) {
        throw precondition_error("filtration_lift: starting point is not a solution modulo (2, " + var + ")");
    }

    std::vector<detail::Direction> family;
    const int top = r.top_filtration();
    for (int j = 1; j <= top; ++j) {
        const auto basis = graded_basis(r, j);
        // Fresh directions of degree j act linearly on the graded part; they
        // come first so the particular solution uses them before any
        // direction carried over from an earlier step.
        std::vector<detail::Direction> fresh;
        for (const auto& mu : basis) {
            for (int i = 0; i < n; ++i) {
                for (uint8_t code : {uint8_t{1}, uint8_t{2}}) {
                    detail::Direction d;
                    d.v.assign(n, r.zero());
                    d.v[i] = lift_graded(r, mu, ResiduePoly{{weights[i], f4.element(code)}});
                    d.name = unknown_name(i) + "[" + (code == 1 ? "1" : "w") + "*" + mu.str(var) + "]";
                    fresh.push_back(std::move(d));
                }
            }
        }
        family.insert(family.begin(), std::make_move_iterator(fresh.begin()), std::make_move_iterator(fresh.end()));

        // The graded part is affine in theta up to carries and products of
        // directions; a second pass at the corrected point absorbs those.
        constexpr int max_passes = 4;
        bool settled = false;
        for (int pass = 0; pass < max_passes && !settled; ++pass) {
            if (!detail::in_filtration(e0, j)) {
                throw internal_error("filtration_lift: residual left the filtration");
            }
            const auto f0 = detail::graded_bits(e0, basis);

            // Effect of each direction; directions that break an earlier step are dropped.
            std::vector<detail::Direction> kept;
            std::vector<detail::BitMap> effects;
            for (auto& d : family) {
                const auto e = evaluate(detail::add_vectors(x0, d.v));
                if (!detail::in_filtration(e, j)) {
                    continue;
                }
                auto f = detail::graded_bits(e, basis);
                for (const auto& [key, bit] : f0) {
                    f[key] ^= bit;
                }
                std::erase_if(f, [](const auto& kv) { return kv.second == 0; });
                effects.push_back(std::move(f));
                kept.push_back(std::move(d));
            }
            family = std::move(kept);

            std::map<detail::RowKey, int> row_index;
            for (const auto& [key, bit] : f0) {
                row_index.emplace(key, 0);
            }
            for (const auto& f : effects) {
                for (const auto& [key, bit] : f) {
                    row_index.emplace(key, 0);
                }
            }
            std::vector<detail::RowKey> rows;
            for (auto& [key, idx] : row_index) {
                idx = static_cast<int>(rows.size());
                rows.push_back(key);
            }
            const int ncols = static_cast<int>(family.size());
            std::vector<detail::Bits> a(rows.size(), detail::Bits(ncols, 0));
            detail::Bits b(rows.size(), 0);
            for (int c = 0; c < ncols; ++c) {
                for (const auto& [key, bit] : effects[c]) {
                    a[row_index[key]][c] = 1;
                }
            }
            for (const auto& [key, bit] : f0) {
                b[row_index[key]] = bit;
            }
            const auto sol = detail::solve_f2(a, b, ncols);
            if (!sol.consistent) {
                Obstruction obs;
                const auto& [mu_idx, output, udeg, bit] = rows[sol.failing_row];
                obs.step = j;
                obs.mu = basis[mu_idx];
                obs.output = output;
                obs.udeg = udeg;
                obs.output_name = equation_name(output);
                for (const auto& d : family) {
                    obs.system.columns.push_back(d.name);
                }
                for (std::size_t i = 0; i < rows.size(); ++i) {
                    const auto& [mi, o, l, bt] = rows[i];
                    obs.system.rows.push_back(equation_name(o) + "[" + basis[mi].str(var) + "*u^" +
                                              std::to_string(l) + ", bit " + std::to_string(bt) + "]");
                    obs.system.matrix.emplace_back(a[i].begin(), a[i].end());
                    obs.system.rhs.push_back(b[i]);
                }
                res.obstruction = std::move(obs);
                res.steps = j - 1;
                return res;
            }
            for (int c = 0; c < ncols; ++c) {
                if (sol.particular[c]) {
                    x0 = detail::add_vectors(std::move(x0), family[c].v);
                }
            }
            e0 = evaluate(x0);
            if (!detail::in_filtration(e0, j + 1)) {
                continue;
            }
            settled = true;
            std::vector<detail::Direction> next;
            for (const auto& kv : sol.kernel) {
                detail::Direction d;
                d.v.assign(n, r.zero());
                int used = 0;
                for (int c = 0; c < ncols; ++c) {
                    if (kv[c]) {
                        d.v = detail::add_vectors(std::move(d.v), family[c].v);
                        d.name = family[c].name;
                        ++used;
                    }
                }
                if (used > 1) {
                    d.name = "kernel" + std::to_string(j) + "." + std::to_string(next.size());
                }
                next.push_back(std::move(d));
            }
            family = std::move(next);
        }
        if (!settled) {
            throw internal_error("filtration_lift: step " + std::to_string(j) + " did not settle");
        }
        res.steps = j;
    }
    for (const auto& v : e0) {
        if (!v.is_zero()) {
            throw internal_error("filtration_lift: lifted point does not solve the system");
        }
    }
    res.solution = std::move(x0);
    return res;
}

} // namespace ssdef
