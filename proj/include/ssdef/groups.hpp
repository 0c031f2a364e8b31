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

// Finite groups of order at most 48 as multiplication tables.

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ssdef/error.hpp"
#include "ssdef/finite_field.hpp"
#include "ssdef/weierstrass.hpp"

namespace ssdef {

inline constexpr int max_group_order = 48;

class GroupTable {
public:
    GroupTable() : GroupTable({"e"}, {{0}}, 0) {}

    /// Validates identity, inverses and associativity on the full table.
    GroupTable(std::vector<std::string> labels, std::vector<std::vector<int>> mul, int identity)
        : labels_(std::move(labels)), mul_(std::move(mul)), id_(identity)
    {
        const int n = order();
        require(n >= 1, "GroupTable: empty group");
        if (static_cast<int>(mul_.size()) != n) {
            throw construction_error("GroupTable: table has the wrong number of rows");
        }
        for (const auto& row : mul_) {
            if (static_cast<int>(row.size()) != n) {
                throw construction_error("GroupTable: table row has the wrong length");
            }
            for (int x : row) {
                if (x < 0 || x >= n) {
                    throw construction_error("GroupTable: table entry out of range");
                }
            }
        }
        for (int a = 0; a < n; ++a) {
            if (mul_[id_][a] != a || mul_[a][id_] != a) {
                throw construction_error("GroupTable: identity axiom fails");
            }
        }
        inv_.assign(n, -1);
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                if (mul_[a][b] == id_) {
                    inv_[a] = b;
                    break;
                }
            }
            if (inv_[a] < 0 || mul_[inv_[a]][a] != id_) {
                throw construction_error("GroupTable: element " + labels_[a] + " has no inverse");
            }
        }
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                for (int c = 0; c < n; ++c) {
                    if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]]) {
                        throw construction_error("GroupTable: multiplication is not associative");
                    }
                }
            }
        }
    }

    int order() const noexcept { return static_cast<int>(labels_.size()); }
    int identity() const noexcept { return id_; }
    int mul(int a, int b) const { return mul_[a][b]; }
    int inverse(int a) const { return inv_[a]; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(int a) const { return labels_[a]; }
    const std::vector<std::vector<int>>& table() const noexcept { return mul_; }

    int element_order(int a) const
    {
        int k = 1;
        for (int x = a; x != id_; x = mul_[x][a]) {
            ++k;
        }
        return k;
    }

    /// Element orders, sorted.
    std::vector<int> order_histogram() const
    {
        std::vector<int> out;
        for (int a = 0; a < order(); ++a) {
            out.push_back(element_order(a));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Subgroup generated by `gens`, as sorted element indices.
    std::vector<int> generated(const std::vector<int>& gens) const
    {
        std::set<int> seen{id_};
        std::deque<int> queue{id_};
        while (!queue.empty()) {
            const int x = queue.front();
            queue.pop_front();
            for (int g : gens) {
                const int y = mul_[x][g];
                if (seen.insert(y).second) {
                    queue.push_back(y);
                }
            }
        }
        return {seen.begin(), seen.end()};
    }

    bool is_subgroup(const std::vector<int>& elems) const
    {
        const std::set<int> s(elems.begin(), elems.end());
        if (!s.count(id_)) {
            return false;
        }
        for (int a : s) {
            for (int b : s) {
                if (!s.count(mul_[a][inv_[b]])) {
                    return false;
                }
            }
        }
        return true;
    }

    bool is_normal(const std::vector<int>& elems) const
    {
        if (!is_subgroup(elems)) {
            return false;
        }
        const std::set<int> s(elems.begin(), elems.end());
        for (int g = 0; g < order(); ++g) {
            for (int h : s) {
                if (!s.count(mul_[mul_[g][h]][inv_[g]])) {
                    return false;
                }
            }
        }
        return true;
    }

    std::vector<int> center() const
    {
        std::vector<int> out;
        for (int a = 0; a < order(); ++a) {
            bool central = true;
            for (int b = 0; b < order() && central; ++b) {
                central = mul_[a][b] == mul_[b][a];
            }
            if (central) {
                out.push_back(a);
            }
        }
        return out;
    }

    std::vector<int> commutator_subgroup() const
    {
        std::vector<int> comms;
        for (int a = 0; a < order(); ++a) {
            for (int b = 0; b < order(); ++b) {
                comms.push_back(mul_[mul_[a][b]][mul_[inv_[a]][inv_[b]]]);
            }
        }
        return generated(comms);
    }

    /// The subgroup on `elems` (sorted by index), with inherited labels.
    GroupTable subgroup(const std::vector<int>& elems) const
    {
        if (!is_subgroup(elems)) {
            throw precondition_error("GroupTable::subgroup: elements do not form a subgroup");
        }
        std::vector<int> sorted(elems.begin(), elems.end());
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::map<int, int> pos;
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            pos[sorted[i]] = static_cast<int>(i);
        }
        std::vector<std::string> labels;
        std::vector<std::vector<int>> mul(sorted.size(), std::vector<int>(sorted.size()));
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            labels.push_back(labels_[sorted[i]]);
            for (std::size_t j = 0; j < sorted.size(); ++j) {
                mul[i][j] = pos.at(mul_[sorted[i]][sorted[j]]);
            }
        }
        return GroupTable(std::move(labels), std::move(mul), pos.at(id_));
    }

    /// G / N for a normal subgroup N; cosets are ordered by least element.
    GroupTable quotient(const std::vector<int>& normal) const
    {
        if (!is_normal(normal)) {
            throw precondition_error("GroupTable::quotient: subgroup is not normal");
        }
        std::vector<int> coset_of(order(), -1);
        std::vector<int> reps;
        for (int g = 0; g < order(); ++g) {
            if (coset_of[g] >= 0) {
                continue;
            }
            for (int h : normal) {
                coset_of[mul_[g][h]] = static_cast<int>(reps.size());
            }
            reps.push_back(g);
        }
        const int q = static_cast<int>(reps.size());
        std::vector<std::string> labels;
        std::vector<std::vector<int>> mul(q, std::vector<int>(q));
        for (int i = 0; i < q; ++i) {
            labels.push_back(labels_[reps[i]] + "N");
            for (int j = 0; j < q; ++j) {
                mul[i][j] = coset_of[mul_[reps[i]][reps[j]]];
            }
        }
        return GroupTable(std::move(labels), std::move(mul), coset_of[id_]);
    }

    /// Greedy generating set: repeatedly add the least element outside the
    /// subgroup generated so far, preferring large element order.
    std::vector<int> generating_set() const
    {
        std::vector<int> by_order(order());
        std::iota(by_order.begin(), by_order.end(), 0);
        std::stable_sort(by_order.begin(), by_order.end(),
                         [&](int a, int b) { return element_order(a) > element_order(b); });
        std::vector<int> gens;
        std::vector<int> current{id_};
        while (static_cast<int>(current.size()) < order()) {
            for (int a : by_order) {
                if (!std::binary_search(current.begin(), current.end(), a)) {
                    gens.push_back(a);
                    current = generated(gens);
                    break;
                }
            }
        }
        return gens;
    }

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> mul_;
    std::vector<int> inv_;
    int id_;
};

/// A group table together with the concrete elements it was built from.
template <class T>
struct RealizedGroup {
    GroupTable table;
    std::vector<T> elements;

    int index_of(const T& x) const
    {
        for (std::size_t i = 0; i < elements.size(); ++i) {
            if (elements[i] == x) {
                return static_cast<int>(i);
            }
        }
        throw precondition_error("RealizedGroup: element not in the group");
    }
};

/// Closure of `gens` under `mul`. Elements are labelled in breadth-first order
/// of generator words, generators tried in the given order, so labels are
/// deterministic.
template <class T, class Mul, class Label>
RealizedGroup<T> group_from_generators(const T& identity, const std::vector<T>& gens, Mul mul, Label label)
{
    std::vector<T> elems{identity};
    std::deque<int> queue{0};
    while (!queue.empty()) {
        const int i = queue.front();
        queue.pop_front();
        for (const T& g : gens) {
            T y = mul(elems[i], g);
            if (std::find(elems.begin(), elems.end(), y) == elems.end()) {
                if (static_cast<int>(elems.size()) >= max_group_order) {
                    throw precondition_error("group_from_generators: group order exceeds " +
                                             std::to_string(max_group_order));
                }
                elems.push_back(y);
                queue.push_back(static_cast<int>(elems.size()) - 1);
            }
        }
    }
    const int n = static_cast<int>(elems.size());
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> labels;
    for (int a = 0; a < n; ++a) {
        labels.push_back(label(elems[a]));
        for (int b = 0; b < n; ++b) {
            const T p = mul(elems[a], elems[b]);
            const auto it = std::find(elems.begin(), elems.end(), p);
            if (it == elems.end()) {
                throw construction_error("group_from_generators: set is not closed");
            }
            table[a][b] = static_cast<int>(it - elems.begin());
        }
    }
    return {GroupTable(std::move(labels), std::move(table), 0), std::move(elems)};
}

// ---------------------------------------------------------------------------
// Isomorphism search

struct GroupIsoResult {
    std::optional<std::vector<int>> map;   ///< map[a] = image of a in B
    long assignments_examined = 0;
    std::string refutation;                ///< reason when no map exists
};

namespace detail {

// Extend generator images to a homomorphism; empty if inconsistent or not bijective.
inline std::optional<std::vector<int>> extend_hom(const GroupTable& a, const GroupTable& b, const std::vector<int>& gens,
                                                  const std::vector<int>& images)
{
    std::vector<int> map(a.order(), -1);
    map[a.identity()] = b.identity();
    std::deque<int> queue{a.identity()};
    while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const int y = a.mul(x, gens[i]);
            const int fy = b.mul(map[x], images[i]);
            if (map[y] < 0) {
                map[y] = fy;
                queue.push_back(y);
            } else if (map[y] != fy) {
                return std::nullopt;
            }
        }
    }
    std::vector<char> hit(b.order(), 0);
    for (int v : map) {
        if (v < 0 || hit[v]) {
            return std::nullopt;
        }
        hit[v] = 1;
    }
    for (int x = 0; x < a.order(); ++x) {
        for (int y = 0; y < a.order(); ++y) {
            if (map[a.mul(x, y)] != b.mul(map[x], map[y])) {
                return std::nullopt;
            }
        }
    }
    return map;
}

} // namespace detail

/// Isomorphism A -> B by backtracking over images of a generating set of A,
/// restricted to elements of matching order. The first map in the canonical
/// order of candidates is returned.
inline GroupIsoResult group_iso_search(const GroupTable& a, const GroupTable& b)
{
    GroupIsoResult res;
    if (a.order() != b.order()) {
        res.refutation = "orders differ";
        return res;
    }
    if (a.order_histogram() != b.order_histogram()) {
        res.refutation = "element order histograms differ";
        return res;
    }
    const std::vector<int> gens = a.generating_set();
    std::vector<std::vector<int>> candidates(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (int y = 0; y < b.order(); ++y) {
            if (b.element_order(y) == a.element_order(gens[i])) {
                candidates[i].push_back(y);
            }
        }
    }
    std::vector<int> images(gens.size());
    std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
        if (i == gens.size()) {
            ++res.assignments_examined;
            if (auto m = detail::extend_hom(a, b, gens, images)) {
                res.map = std::move(m);
                return true;
            }
            return false;
        }
        for (int y : candidates[i]) {
            images[i] = y;
            if (go(i + 1)) {
                return true;
            }
        }
        return false;
    };
    if (!go(0)) {
        res.refutation = "no generator assignment extends to an isomorphism (" +
                         std::to_string(res.assignments_examined) + " assignments examined)";
    }
    return res;
}

// ---------------------------------------------------------------------------
// Concrete groups

/// 2x2 matrix over Z/3, entries in {0, 1, 2}.
struct Mat2Z3 {
    std::array<int, 4> e{1, 0, 0, 1};   // a, b, c, d

    int a() const { return e[0]; }
    int b() const { return e[1]; }
    int c() const { return e[2]; }
    int d() const { return e[3]; }
    int det() const { return ((e[0] * e[3] - e[1] * e[2]) % 3 + 3) % 3; }
    bool invertible() const { return det() != 0; }

    friend Mat2Z3 operator*(const Mat2Z3& x, const Mat2Z3& y)
    {
        return Mat2Z3{{(x.e[0] * y.e[0] + x.e[1] * y.e[2]) % 3, (x.e[0] * y.e[1] + x.e[1] * y.e[3]) % 3,
                       (x.e[2] * y.e[0] + x.e[3] * y.e[2]) % 3, (x.e[2] * y.e[1] + x.e[3] * y.e[3]) % 3}};
    }
    friend bool operator==(const Mat2Z3& x, const Mat2Z3& y) { return x.e == y.e; }
    friend bool operator<(const Mat2Z3& x, const Mat2Z3& y) { return x.e < y.e; }
    std::string str() const
    {
        return "[[" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "],[" + std::to_string(e[2]) + "," +
               std::to_string(e[3]) + "]]";
    }
};

struct GL23 {
    RealizedGroup<Mat2Z3> group;
    std::vector<int> gamma0;   ///< c = 0
    std::vector<int> gamma1;   ///< c = 0, a = 1
};

/// GL(2, 3) with elements in lexicographic order of entries.
inline GL23 gl23()
{
    std::vector<Mat2Z3> elems;
    for (int i = 0; i < 81; ++i) {
        const Mat2Z3 m{{i / 27, (i / 9) % 3, (i / 3) % 3, i % 3}};
        if (m.invertible()) {
            elems.push_back(m);
        }
    }
    const int n = static_cast<int>(elems.size());
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> labels;
    int id = -1;
    for (int x = 0; x < n; ++x) {
        labels.push_back(elems[x].str());
        if (elems[x] == Mat2Z3{}) {
            id = x;
        }
        for (int y = 0; y < n; ++y) {
            table[x][y] = static_cast<int>(std::lower_bound(elems.begin(), elems.end(), elems[x] * elems[y]) -
                                           elems.begin());
        }
    }
    GL23 out{{GroupTable(std::move(labels), std::move(table), id), elems}, {}, {}};
    for (int x = 0; x < n; ++x) {
        if (elems[x].c() == 0) {
            out.gamma0.push_back(x);
            if (elems[x].a() == 1) {
                out.gamma1.push_back(x);
            }
        }
    }
    return out;
}

/// Hurwitz quaternion with doubled coordinates (all even or all odd).
struct HurwitzQuat {
    std::array<int, 4> d{2, 0, 0, 0};   // 2 * (1, i, j, k) coordinates

    static HurwitzQuat from_doubled(int a, int b, int c, int e)
    {
        require(((a ^ b) & 1) == 0 && ((a ^ c) & 1) == 0 && ((a ^ e) & 1) == 0,
                "HurwitzQuat: doubled coordinates must share parity");
        return HurwitzQuat{{a, b, c, e}};
    }
    /// Norm times 4.
    int norm4() const { return d[0] * d[0] + d[1] * d[1] + d[2] * d[2] + d[3] * d[3]; }

    friend HurwitzQuat operator*(const HurwitzQuat& p, const HurwitzQuat& q)
    {
        const auto& x = p.d;
        const auto& y = q.d;
        const std::array<int, 4> r{x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3],
                                   x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2],
                                   x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1],
                                   x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0]};
        return HurwitzQuat{{r[0] / 2, r[1] / 2, r[2] / 2, r[3] / 2}};
    }
    HurwitzQuat operator-() const { return HurwitzQuat{{-d[0], -d[1], -d[2], -d[3]}}; }
    friend bool operator==(const HurwitzQuat& x, const HurwitzQuat& y) { return x.d == y.d; }
    friend bool operator<(const HurwitzQuat& x, const HurwitzQuat& y) { return x.d < y.d; }

    std::string str() const
    {
        static const char* unit[4] = {"", "i", "j", "k"};
        std::string out;
        const bool half = (d[0] & 1) != 0;
        for (int t = 0; t < 4; ++t) {
            const int v = half ? d[t] : d[t] / 2;
            if (v == 0) {
                continue;
            }
            out += v < 0 ? "-" : (out.empty() ? "" : "+");
            if (std::abs(v) != 1 || t == 0) {
                out += std::to_string(std::abs(v));
            }
            out += unit[t];
        }
        return half ? "(" + out + ")/2" : out;
    }
};

/// The 24 Hurwitz units: +-1, +-i, +-j, +-k and (+-1 +-i +-j +-k)/2, sorted.
inline RealizedGroup<HurwitzQuat> hurwitz_units()
{
    std::vector<HurwitzQuat> units;
    for (int a = -2; a <= 2; ++a) {
        for (int b = -2; b <= 2; ++b) {
            for (int c = -2; c <= 2; ++c) {
                for (int e = -2; e <= 2; ++e) {
                    if (((a ^ b) & 1) || ((a ^ c) & 1) || ((a ^ e) & 1)) {
                        continue;
                    }
                    const HurwitzQuat q{{a, b, c, e}};
                    if (q.norm4() == 4) {
                        units.push_back(q);
                    }
                }
            }
        }
    }
    std::sort(units.begin(), units.end());
    const int n = static_cast<int>(units.size());
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> labels;
    int id = -1;
    for (int x = 0; x < n; ++x) {
        labels.push_back(units[x].str());
        if (units[x] == HurwitzQuat{}) {
            id = x;
        }
        for (int y = 0; y < n; ++y) {
            const auto it = std::lower_bound(units.begin(), units.end(), units[x] * units[y]);
            if (it == units.end() || !(*it == units[x] * units[y])) {
                throw construction_error("hurwitz_units: units are not closed under multiplication");
            }
            table[x][y] = static_cast<int>(it - units.begin());
        }
    }
    return {GroupTable(std::move(labels), std::move(table), id), units};
}

/// Group of curve automorphisms with g * h = "apply h, then g" on points.
inline RealizedGroup<WIso<GF>> group_from_automorphisms(const std::vector<WIso<GF>>& autos)
{
    require(!autos.empty(), "group_from_automorphisms: empty list");
    const int n = static_cast<int>(autos.size());
    require(n <= max_group_order, "group_from_automorphisms: too many elements");
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> labels;
    int id = -1;
    for (int x = 0; x < n; ++x) {
        labels.push_back(autos[x].str());
        if (autos[x].is_identity()) {
            id = x;
        }
        for (int y = 0; y < n; ++y) {
            const WIso<GF> p = compose(autos[y], autos[x]);
            const auto it = std::find(autos.begin(), autos.end(), p);
            if (it == autos.end()) {
                throw precondition_error("group_from_automorphisms: list is not closed under composition");
            }
            table[x][y] = static_cast<int>(it - autos.begin());
        }
    }
    if (id < 0) {
        throw precondition_error("group_from_automorphisms: list does not contain the identity");
    }
    return {GroupTable(std::move(labels), std::move(table), id), autos};
}

// ---------------------------------------------------------------------------
// Structure catalog

namespace detail {

inline GroupTable cyclic(int n)
{
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    std::vector<std::string> labels;
    for (int a = 0; a < n; ++a) {
        labels.push_back(std::to_string(a));
        for (int b = 0; b < n; ++b) {
            t[a][b] = (a + b) % n;
        }
    }
    return GroupTable(std::move(labels), std::move(t), 0);
}

inline GroupTable direct_product(const GroupTable& g, const GroupTable& h)
{
    const int n = g.order(), m = h.order();
    std::vector<std::vector<int>> t(n * m, std::vector<int>(n * m));
    std::vector<std::string> labels;
    for (int a = 0; a < n * m; ++a) {
        labels.push_back("(" + g.label(a / m) + "," + h.label(a % m) + ")");
        for (int b = 0; b < n * m; ++b) {
            t[a][b] = g.mul(a / m, b / m) * m + h.mul(a % m, b % m);
        }
    }
    return GroupTable(std::move(labels), std::move(t), g.identity() * m + h.identity());
}

// C_n x| C_m with the generator of C_m acting by x -> r x.
inline GroupTable semidirect_cyclic(int n, int m, int r)
{
    std::vector<int> rpow(m, 1);
    for (int i = 1; i < m; ++i) {
        rpow[i] = rpow[i - 1] * r % n;
    }
    require(rpow[m - 1] * r % n == 1, "semidirect_cyclic: r^m must be 1 mod n");
    const int size = n * m;
    std::vector<std::vector<int>> t(size, std::vector<int>(size));
    std::vector<std::string> labels;
    for (int x = 0; x < size; ++x) {
        labels.push_back("(" + std::to_string(x / m) + "," + std::to_string(x % m) + ")");
        for (int y = 0; y < size; ++y) {
            const int a1 = x / m, b1 = x % m, a2 = y / m, b2 = y % m;
            t[x][y] = ((a1 + rpow[b1] * a2) % n) * m + (b1 + b2) % m;
        }
    }
    return GroupTable(std::move(labels), std::move(t), 0);
}

inline GroupTable quaternion_q8()
{
    const auto units = hurwitz_units();
    std::vector<int> q8;
    for (std::size_t i = 0; i < units.elements.size(); ++i) {
        if ((units.elements[i].d[0] & 1) == 0) {
            q8.push_back(static_cast<int>(i));
        }
    }
    return units.table.subgroup(q8);
}

// (C2 x C2) x| C3, the generator of C3 cycling the three involutions.
inline GroupTable alternating_a4()
{
    using P = std::array<int, 4>;
    const P id{0, 1, 2, 3};
    auto mul = [](const P& x, const P& y) {   // x then y
        return P{y[x[0]], y[x[1]], y[x[2]], y[x[3]]};
    };
    auto label = [](const P& x) {
        return std::to_string(x[0]) + std::to_string(x[1]) + std::to_string(x[2]) + std::to_string(x[3]);
    };
    return group_from_generators<P>(id, {P{1, 2, 0, 3}, P{1, 0, 3, 2}}, mul, label).table;
}

} // namespace detail

struct CatalogEntry {
    std::string name;
    std::vector<std::string> aliases;
    GroupTable table;
};

/// Groups met in this library, each with a UTF-8 name. A group may appear
/// under several names (C6 is also C2 × C3); the first entry wins.
inline const std::vector<CatalogEntry>& group_catalog()
{
    static const std::vector<CatalogEntry> catalog = [] {
        using namespace detail;
        std::vector<CatalogEntry> c;
        for (int n : {1, 2, 3, 4, 6, 8, 12}) {
            std::vector<std::string> aliases;
            if (n == 6) {
                aliases = {"C2 × C3"};
            }
            c.push_back({"C" + std::to_string(n), aliases, cyclic(n)});
        }
        c.push_back({"C2 × C2", {"V4"}, direct_product(cyclic(2), cyclic(2))});
        c.push_back({"C3 ⋊ C2", {"S3", "D3"}, semidirect_cyclic(3, 2, 2)});
        c.push_back({"C4 × C2", {}, direct_product(cyclic(4), cyclic(2))});
        c.push_back({"C2 × C2 × C2", {}, direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(2))});
        c.push_back({"D4", {"C4 ⋊ C2"}, semidirect_cyclic(4, 2, 3)});
        c.push_back({"Q8", {}, quaternion_q8()});
        c.push_back({"C6 × C2", {}, direct_product(cyclic(6), cyclic(2))});
        c.push_back({"C6 ⋊ C2", {"D6", "S3 × C2"}, semidirect_cyclic(6, 2, 5)});
        c.push_back({"C3 ⋊ C4", {"Dic3"}, semidirect_cyclic(3, 4, 2)});
        c.push_back({"A4", {"(C2 × C2) ⋊ C3"}, alternating_a4()});
        {
            const auto units = hurwitz_units();
            c.push_back({"Q8 ⋊ C3", {"SL(2,3)", "binary tetrahedral"}, units.table});
        }
        c.push_back({"GL(2,3)", {}, gl23().group.table});
        return c;
    }();
    return catalog;
}

struct StructureId {
    std::string name;                  ///< catalog name, or "unidentified"
    std::vector<std::string> aliases;
    std::vector<int> certificate;      ///< catalog element index -> group element index
    // Fingerprint, always filled.
    int order = 0;
    std::vector<int> order_histogram;
    int center_order = 0;
    int abelianization_order = 0;

    bool identified() const { return name != "unidentified"; }
    bool is(const std::string& n) const
    {
        return name == n || std::find(aliases.begin(), aliases.end(), n) != aliases.end();
    }
};

inline StructureId structure_id(const GroupTable& g)
{
    require(g.order() <= max_group_order, "structure_id: group order exceeds " + std::to_string(max_group_order));
    StructureId out;
    out.order = g.order();
    out.order_histogram = g.order_histogram();
    out.center_order = static_cast<int>(g.center().size());
    out.abelianization_order = g.order() / static_cast<int>(g.commutator_subgroup().size());
    for (const auto& entry : group_catalog()) {
        if (entry.table.order() != g.order()) {
            continue;
        }
        auto iso = group_iso_search(entry.table, g);
        if (iso.map) {
            // Verify the certificate by direct table comparison.
            for (int a = 0; a < g.order(); ++a) {
                for (int b = 0; b < g.order(); ++b) {
                    if ((*iso.map)[entry.table.mul(a, b)] != g.mul((*iso.map)[a], (*iso.map)[b])) {
                        throw internal_error("structure_id: certificate fails table comparison");
                    }
                }
            }
            out.name = entry.name;
            out.aliases = entry.aliases;
            out.certificate = std::move(*iso.map);
            return out;
        }
    }
    out.name = "unidentified";
    return out;
}

/// Certificate that G = N x| H with N normal and H a complement acting
/// nontrivially on N by conjugation.
struct SemidirectCertificate {
    std::vector<int> normal;
    std::vector<int> complement;
    bool normal_ok = false;
    bool complement_ok = false;   ///< N and H meet trivially and |N||H| = |G|
    bool action_nontrivial = false;

    bool ok() const { return normal_ok && complement_ok && action_nontrivial; }
};

inline SemidirectCertificate certify_semidirect(const GroupTable& g, const std::vector<int>& normal,
                                                const std::vector<int>& complement)
{
    SemidirectCertificate c{normal, complement};
    c.normal_ok = g.is_normal(normal);
    std::set<int> meet;
    for (int x : normal) {
        if (std::find(complement.begin(), complement.end(), x) != complement.end()) {
            meet.insert(x);
        }
    }
    c.complement_ok = g.is_subgroup(complement) && meet.size() == 1 &&
                      normal.size() * complement.size() == static_cast<std::size_t>(g.order());
    for (int h : complement) {
        for (int n : normal) {
            if (g.mul(g.mul(h, n), g.inverse(h)) != n) {
                c.action_nontrivial = true;
            }
        }
    }
    return c;
}

} // namespace ssdef
