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

// Named verification checks and their deterministic reports.

#include <functional>
#include <future>
#include <mutex>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "ssdef/deformation.hpp"
#include "ssdef/error.hpp"
#include "ssdef/formal_group.hpp"
#include "ssdef/groups.hpp"
#include "ssdef/level.hpp"
#include "ssdef/weierstrass.hpp"

namespace ssdef {

using Json = nlohmann::ordered_json;

inline constexpr const char* report_version = "1.0";

struct CheckConfig {
    int k = 3;   ///< 2-adic precision
    int m = 6;   ///< a1-adic truncation
    int n = 9;   ///< series order
    bool parallel = true;

    DefPrecision precision() const { return {k, m, n}; }
};

/// Throws precondition_error for settings the checks cannot run at.
inline void validate(const CheckConfig& c)
{
    if (c.k < 1 || c.k > max_witt_precision) {
        throw precondition_error("--padic-precision must lie in [1, " + std::to_string(max_witt_precision) + "]");
    }
    if (c.m < 1) {
        throw precondition_error("--a1-truncation must be at least 1");
    }
    if (c.n < 5) {
        throw precondition_error("--series-order must be at least 5");
    }
}

enum class CheckStatus { pass, fail, recorded_outcome };

inline std::string to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::pass:
        return "pass";
    case CheckStatus::fail:
        return "fail";
    case CheckStatus::recorded_outcome:
        return "recorded-outcome";
    }
    return "fail";
}

struct CheckResult {
    std::string name;
    std::string anchor;
    CheckStatus status = CheckStatus::fail;
    Json details = Json::object();
};

class CheckContext;

struct CheckDescriptor {
    std::string name;
    std::string anchor;   ///< the claim the check verifies, in plain words
    bool assertable = true;   ///< false: the outcome is recorded, never failed
    std::function<std::pair<bool, Json>(CheckContext&)> run;
};

namespace detail {

template <class T>
class Lazy {
public:
    template <class Fn>
    const T& get(Fn&& fn)
    {
        std::call_once(flag_, [&] { value_.emplace(fn()); });
        return *value_;
    }

private:
    std::once_flag flag_;
    std::optional<T> value_;
};

inline WCurve<GF> supersingular_curve() { return WCurve<GF>::from_a1_a3(f4_field().zero(), f4_field().one()); }

inline Json obstruction_json(const std::optional<Obstruction>& o)
{
    return o ? Json(o->str()) : Json(nullptr);
}

inline Json star_outcome_json(const StarIsoOutcome& s)
{
    Json j;
    j["residue"] = s.residue;
    j["found"] = s.found;
    if (s.phi) {
        j["phi_linear"] = (*s.phi)[1].str();
        j["linear_is_minus_one"] = s.linear_is_minus_one.value_or(false);
    }
    j["obstruction"] = obstruction_json(s.obstruction);
    return j;
}

} // namespace detail

/// Shared computations, each run at most once per report.
class CheckContext {
public:
    explicit CheckContext(const CheckConfig& c) : config(c) {}

    const CheckConfig config;

    const std::vector<WIso<GF>>& autos()
    {
        return autos_.get([] { return automorphisms(detail::supersingular_curve()); });
    }
    const RealizedGroup<WIso<GF>>& g24()
    {
        return g24_.get([&] { return group_from_automorphisms(autos()); });
    }
    const Level3Data& level()
    {
        return level_.get([] { return enumerate_level3(detail::supersingular_curve()); });
    }
    const C3Certificate& c3(int i)
    {
        return c3_[i].get([&] { return certify_c3(config.precision(), i); });
    }
    const C2Certificate& c2()
    {
        return c2_.get([&] { return certify_c2(config.precision()); });
    }
    const VProxyReport& vproxies()
    {
        return vp_.get([&] { return v_proxy_invariance(config.precision()); });
    }

private:
    detail::Lazy<std::vector<WIso<GF>>> autos_;
    detail::Lazy<RealizedGroup<WIso<GF>>> g24_;
    detail::Lazy<Level3Data> level_;
    detail::Lazy<C3Certificate> c3_[3];
    detail::Lazy<C2Certificate> c2_;
    detail::Lazy<VProxyReport> vp_;
};

namespace detail {

inline std::pair<bool, Json> check_aut_order(CheckContext& ctx)
{
    const auto& autos = ctx.autos();
    const auto& g = ctx.g24();
    const auto id = structure_id(g.table);
    const auto hur = hurwitz_units();
    const auto iso = group_iso_search(g.table, hur.table);
    Json d;
    d["order"] = autos.size();
    d["candidates_examined"] = 3 * 4 * 4 * 4;
    d["structure"] = id.name;
    d["hurwitz_isomorphism"] = iso.map.has_value();
    if (iso.map) {
        std::vector<std::string> pairs;
        for (int a = 0; a < g.table.order(); ++a) {
            pairs.push_back(g.elements[a].str() + " -> " + hur.elements[(*iso.map)[a]].str());
        }
        d["certificate"] = pairs;
    }
    return {autos.size() == 24 && id.is("Q8 ⋊ C3") && iso.map.has_value(), d};
}

inline std::pair<bool, Json> check_torsion(CheckContext& ctx)
{
    const auto c = supersingular_curve();
    const auto pts = rational_points(c);
    const auto tors = torsion_points(c, 3);
    bool elementary = true;
    for (const auto& p : tors.points) {
        elementary = elementary && (p.infinity || point_order(tors.curve, p) == 3);
    }
    const auto origin = CurvePoint<GF>::affine(f4_field().zero(), f4_field().zero());
    const int origin_order = point_order(c, origin);
    Json d;
    d["rational_points"] = pts.size();
    d["three_torsion_points"] = tors.points.size();
    d["three_torsion_field_degree"] = tors.extension_degree;
    d["exponent_three"] = elementary;
    d["order_of_origin"] = origin_order;
    d["order_three_points"] = ctx.level().points.size();
    return {pts.size() == 9 && tors.points.size() == 9 && tors.extension_degree == 2 && elementary &&
                origin_order == 3,
            d};
}

inline Json orbit_json(const OrbitReport& r)
{
    Json d;
    d["orbits"] = r.orbits.size();
    std::vector<int> sizes;
    for (const auto& s : r.stabilizers) {
        sizes.push_back(static_cast<int>(s.size()));
    }
    d["stabilizer_orders"] = sizes;
    std::vector<std::string> ids;
    for (const auto& s : r.stabilizer_ids) {
        ids.push_back(s.name);
    }
    d["stabilizer_structures"] = ids;
    d["orbit_stabilizer"] = r.orbit_stabilizer_holds();
    return d;
}

inline std::pair<bool, Json> check_point_stabilizers(CheckContext& ctx)
{
    const auto rep = orbits_stabilizers(ctx.g24(), ctx.level().points);
    Json d = orbit_json(rep);
    d["representative"] = ctx.level().points[rep.representatives[0]].str();
    return {rep.orbits.size() == 1 && rep.stabilizers[0].size() == 3 && rep.stabilizer_ids[0].is("C3") &&
                rep.orbit_stabilizer_holds(),
            d};
}

inline std::pair<bool, Json> check_subgroup_stabilizers(CheckContext& ctx)
{
    const auto& g = ctx.g24();
    const auto rep = orbits_stabilizers(g, ctx.level().subgroups);
    const auto c = supersingular_curve();
    const int neg = g.index_of(elliptic_involution(c));
    const auto& stab = rep.stabilizers[0];
    const auto center = g.table.center();
    const bool in_stab = std::find(stab.begin(), stab.end(), neg) != stab.end();
    const bool central = std::find(center.begin(), center.end(), neg) != center.end();
    const auto f = fgl_from_curve(c, ctx.config.n);
    const bool inverse = induced_formal_map(c, g.elements[neg], ctx.config.n) == n_series(f, -1);
    Json d = orbit_json(rep);
    d["involution_in_stabilizer"] = in_stab;
    d["involution_central"] = central;
    d["involution_is_formal_inverse"] = inverse;
    return {rep.orbits.size() == 1 && stab.size() == 6 && rep.stabilizer_ids[0].is("C2 × C3") && in_stab &&
                central && inverse && rep.orbit_stabilizer_holds(),
            d};
}

inline std::pair<bool, Json> check_gl23(CheckContext& ctx)
{
    const GL23 g = gl23();
    const auto id0 = structure_id(g.group.table.subgroup(g.gamma0));
    const auto id1 = structure_id(g.group.table.subgroup(g.gamma1));
    const int order = g.group.table.order();
    const int i0 = order / static_cast<int>(g.gamma0.size());
    const int i1 = static_cast<int>(g.gamma0.size() / g.gamma1.size());
    Json d;
    d["gl23_order"] = order;
    d["gamma0_order"] = g.gamma0.size();
    d["gamma0_structure"] = id0.name;
    d["gamma1_order"] = g.gamma1.size();
    d["gamma1_structure"] = id1.name;
    d["index_chain"] = {i0, i1};
    d["full_level_count"] = ctx.level().bases.size();
    return {order == 48 && g.gamma0.size() == 12 && id0.is("C6 ⋊ C2") && g.gamma1.size() == 6 &&
                id1.is("C3 ⋊ C2") && i0 == 4 && i1 == 2 && ctx.level().bases.size() == 48,
            d};
}

inline std::pair<bool, Json> check_tower_degrees(CheckContext& ctx)
{
    const auto deg = level_tower_degrees(ctx.level());
    const GL23 g = gl23();
    const bool matches = deg.bases_over_points == static_cast<int>(g.gamma1.size()) &&
                         deg.points_over_subgroups == static_cast<int>(g.gamma0.size() / g.gamma1.size()) &&
                         deg.subgroups == g.group.table.order() / static_cast<int>(g.gamma0.size());
    Json d;
    d["degrees"] = {deg.bases_over_points, deg.points_over_subgroups, deg.subgroups};
    d["matches_gl23_indices"] = matches;
    return {deg.bases_over_points == 6 && deg.points_over_subgroups == 2 && deg.subgroups == 4 && matches, d};
}

inline std::pair<bool, Json> check_galois_torsor(CheckContext& ctx)
{
    const auto& bases = ctx.level().bases;
    const auto g48 = automorphisms_with_galois(ctx.autos(), bases);
    const auto id = structure_id(g48.table);
    const auto rep = orbits_stabilizers_by_index(g48.table, static_cast<int>(bases.size()),
                                                 [&](int a, int i) { return g48.elements[a][i]; });
    Json d;
    d["group_order"] = g48.table.order();
    d["structure"] = id.name;
    d["orbits"] = rep.orbits.size();
    d["stabilizer_order"] = rep.stabilizers[0].size();
    return {g48.table.order() == 48 && rep.orbits.size() == 1 && rep.stabilizers[0].size() == 1, d};
}

inline std::pair<bool, Json> check_height(CheckContext& ctx)
{
    const int n = ctx.config.n;
    const auto f = fgl_from_curve(supersingular_curve(), n);
    const auto h = height(f);
    const auto two = n_series(f, 2);
    bool shape = !two[4].is_zero();
    for (int i = 1; i < 4; ++i) {
        shape = shape && two[i].is_zero();
    }
    const auto& f2 = field_make(FieldSpec::f2());
    const auto mult = height(multiplicative_fgl(f2.one(), n));
    const auto add = height(additive_fgl(f2.one(), n));
    Json d;
    d["series_order"] = n;
    d["height"] = h.str();
    d["two_series_leading"] = "z^4 * " + two[4].str();
    d["multiplicative_height"] = mult.str();
    d["additive_height"] = add.str();
    return {h.height == std::optional<int>(2) && shape && mult.height == std::optional<int>(1) && !add.height, d};
}

inline std::pair<bool, Json> check_fgl_axioms(CheckContext& ctx)
{
    const int n = ctx.config.n;
    std::mt19937 rng(20260101);
    auto pick = [&](int hi) { return std::uniform_int_distribution<int>(0, hi)(rng); };
    int passed = 0, total = 0, random_f4 = 0, random_w3 = 0;
    auto record = [&](bool ok) {
        ++total;
        passed += ok;
    };
    record(check_axioms(fgl_from_curve(supersingular_curve(), n)).all());
    record(check_axioms(fgl_from_curve(universal_curve(ctx.config.k, ctx.config.m), n)).all());
    const auto& f4 = f4_field();
    while (random_f4 < 10) {
        WCurve<GF> c{f4.element(pick(3)), f4.element(pick(3)), f4.element(pick(3)), f4.element(pick(3)),
                     f4.element(pick(3))};
        if (c.is_smooth()) {
            record(check_axioms(fgl_from_curve(c, n)).all());
            ++random_f4;
        }
    }
    while (random_w3 < 10) {
        auto w = [&] { return Witt(3, pick(7), pick(7)); };
        WCurve<Witt> c{w(), w(), w(), w(), w()};
        if (c.is_smooth()) {
            record(check_axioms(fgl_from_curve(c, n)).all());
            ++random_w3;
        }
    }
    Json d;
    d["series_order"] = n;
    d["laws_checked"] = total;
    d["random_curves"] = random_f4 + random_w3;
    d["laws_passing"] = passed;
    return {passed == total, d};
}

inline std::pair<bool, Json> check_universal_curve(CheckContext& ctx)
{
    const TowerRing& r = def_ring(ctx.config.k, ctx.config.m);
    const auto c = universal_curve(r);
    auto red = [](const TowerValue& x) { return reduce(x, ReductionIdeal::two_and_series); };
    const bool unit = c.discriminant().is_unit();
    const bool fibre = red(c.a1).is_zero() && red(c.a2).is_zero() && red(c.a4).is_zero() && red(c.a6).is_zero() &&
                       red(c.a3) == red(r.laurent(3));
    const bool j0 = red(c.c4()).is_zero();
    Json d;
    d["curve"] = c.str();
    d["discriminant_unit"] = unit;
    d["special_fibre"] = red(c.a1).str() + ", " + red(c.a3).str();
    d["j_reduces_to_zero"] = j0;
    return {unit && fibre && j0, d};
}

inline std::pair<bool, Json> check_c3_action(CheckContext& ctx)
{
    bool ok = true;
    Json certs = Json::array();
    for (int i = 1; i <= 2; ++i) {
        const auto& c = ctx.c3(i);
        Json j;
        j["i"] = i;
        j["lambda"] = c.iso ? Json(c.iso->u.str()) : Json(nullptr);
        j["expected_lambda"] = c.expected_lambda.str();
        j["pure_scaling"] = c.pure_scaling;
        j["verified"] = c.verified;
        j["formal_linear_coefficient"] = c.linear_coefficient ? Json(c.linear_coefficient->str()) : Json(nullptr);
        certs.push_back(j);
        ok = ok && c.ok();
    }
    const auto& vp = ctx.vproxies();
    Json fixed = Json::array();
    for (const auto& e : vp.entries) {
        if (e.twist.rfind("c3", 0) == 0) {
            fixed.push_back({{"twist", e.twist},
                             {"c2u_fixed", e.c2u_fixed},
                             {"c4u3_fixed", e.c4u3_fixed},
                             {"functorial", e.functorial},
                             {"rescale_oracle", e.rescale_oracle}});
        }
    }
    Json d;
    d["precision"] = ctx.config.precision().str();
    d["certificates"] = certs;
    d["v_proxies"] = fixed;
    return {ok && vp.c3_ok(), d};
}

inline std::pair<bool, Json> check_c2_action(CheckContext& ctx)
{
    const auto& c = ctx.c2();
    Json d;
    d["precision"] = ctx.config.precision().str();
    d["involution"] = c.involution;
    d["star_iso"] = star_outcome_json(c.inverse_residue);
    return {c.ok(), d};
}

inline std::pair<bool, Json> check_c2_identity_residue(CheckContext& ctx)
{
    Json d = star_outcome_json(ctx.c2().identity_residue);
    d["precision"] = ctx.config.precision().str();
    return {true, d};
}

inline std::pair<bool, Json> check_c2_curve_level(CheckContext& ctx)
{
    const auto& c = ctx.c2();
    Json d;
    d["precision"] = ctx.config.precision().str();
    d["found"] = c.curve_level_found;
    d["search"] = c.curve_level_report;
    return {true, d};
}

inline std::pair<bool, Json> check_c2_fixing_a1(CheckContext& ctx)
{
    const auto& c = ctx.c2();
    Json d;
    d["precision"] = ctx.config.precision().str();
    d["inverse_residue"] = star_outcome_json(c.fixing_a1_inverse_residue);
    d["identity_residue"] = star_outcome_json(c.fixing_a1_identity_residue);
    return {true, d};
}

inline std::pair<bool, Json> check_c2_v_proxies(CheckContext& ctx)
{
    const auto& e = ctx.vproxies().entries.back();
    Json d;
    d["c2"] = ctx.vproxies().c2.str();
    d["c2u_fixed"] = e.c2u_fixed;
    d["c4u3_fixed"] = e.c4u3_fixed;
    d["functorial"] = e.functorial;
    d["c2u_fixed_mod_2"] = e.c2u_fixed_mod_2.value_or(false);
    d["c4u3_fixed_mod_2_c2"] = e.c4u3_fixed_mod_2_c2.value_or(false);
    return {true, d};
}

inline std::pair<bool, Json> check_twist_algebra(CheckContext& ctx)
{
    const auto a = twist_algebra(ctx.config.precision());
    Json d;
    d["c3_cubes_to_identity"] = a.c3_cubes_to_identity;
    d["c2_squares_to_identity"] = a.c2_squares_to_identity;
    d["c2_commutes_with_c3"] = a.c2_commutes_with_c3;
    d["c3_certificates_compose"] = a.c3_certificates_compose;
    return {a.c3_cubes_to_identity && a.c2_squares_to_identity && a.c2_commutes_with_c3 && a.c3_certificates_compose,
            d};
}

inline std::pair<bool, Json> check_serre_tate(CheckContext& ctx)
{
    const auto r = serre_tate_first_order(ctx.config.n);
    Json d;
    d["series_order"] = r.series_order;
    d["curve_deformations"] = r.curve_deformations;
    d["star_isos"] = r.star_isos;
    d["curve_classes"] = r.curve_classes;
    d["fgl_classes"] = r.fgl_classes;
    d["cocycle_dim"] = r.cocycle_dim;
    d["coboundary_dim"] = r.coboundary_dim;
    d["stable_cocycle_dim"] = r.stable_cocycle_dim;
    d["stable_order"] = r.stable_order;
    d["bijection"] = r.bijection;
    d["zero_to_zero"] = r.zero_to_zero;
    d["a1_direction_nonzero"] = r.a1_direction_nonzero;
    d["solver_agrees"] = r.solver_agrees;
    d["class_representatives"] = r.class_representatives;
    return {r.ok(), d};
}

inline std::pair<bool, Json> check_lubin_tate(CheckContext& ctx)
{
    const auto r = lubin_tate_injectivity(ctx.config.precision());
    Json d;
    d["precision"] = ctx.config.precision().str();
    d["obstructed"] = r.obstructed;
    d["obstruction"] = obstruction_json(r.obstruction);
    return {r.ok(), d};
}

inline std::pair<bool, Json> check_precision_stability(CheckContext& ctx)
{
    const DefPrecision lo = ctx.config.precision(), hi = lo.raised();
    const TowerRing& lo_ring = def_ring(lo.k, lo.m);
    Json d;
    d["base"] = lo.str();
    d["raised"] = hi.str();
    bool ok = true;
    for (int i = 1; i <= 2; ++i) {
        const auto& a = ctx.c3(i);
        const auto b = certify_c3(hi, i);
        const bool same = a.ok() && b.ok() && b.iso->u.reduce_to(lo_ring) == a.iso->u &&
                          b.linear_coefficient->reduce_to(lo_ring) == *a.linear_coefficient;
        d["c3_" + std::to_string(i)] = same;
        ok = ok && same;
    }
    {
        const auto& a = ctx.c2();
        const auto b = certify_c2(hi, false);
        auto key = [](const StarIsoOutcome& s) {
            return std::to_string(s.found) + (s.obstruction ? s.obstruction->str() : "");
        };
        const bool same = key(a.inverse_residue) == key(b.inverse_residue) &&
                          key(a.identity_residue) == key(b.identity_residue) &&
                          key(a.fixing_a1_inverse_residue) == key(b.fixing_a1_inverse_residue) &&
                          key(a.fixing_a1_identity_residue) == key(b.fixing_a1_identity_residue);
        bool phi_same = true;
        if (a.fixing_a1_inverse_residue.phi && b.fixing_a1_inverse_residue.phi) {
            // Lifts are not unique; compare the reduction mod (2, a1), which is the prescribed residue.
            const auto& pa = *a.fixing_a1_inverse_residue.phi;
            const auto& pb = *b.fixing_a1_inverse_residue.phi;
            for (int i = 1; i < lo.n; ++i) {
                phi_same = phi_same && reduce(pa[i], ReductionIdeal::two_and_series) ==
                                           reduce(pb[i], ReductionIdeal::two_and_series);
            }
        }
        d["c2_outcomes"] = same;
        d["c2_fixing_a1_residue"] = phi_same;
        ok = ok && same && phi_same;
    }
    {
        const auto a = lubin_tate_injectivity(lo), b = lubin_tate_injectivity(hi);
        const bool same = a.ok() && b.ok() && a.obstruction->str() == b.obstruction->str();
        d["lubin_tate"] = same;
        ok = ok && same;
    }
    {
        const auto& a = ctx.vproxies();
        const auto b = v_proxy_invariance(hi);
        bool same = b.c2.reduce_to(lo_ring) == a.c2 && b.c4.reduce_to(lo_ring) == a.c4;
        for (std::size_t i = 0; i < a.entries.size(); ++i) {
            same = same && a.entries[i].c2u_fixed == b.entries[i].c2u_fixed &&
                   a.entries[i].c4u3_fixed == b.entries[i].c4u3_fixed;
        }
        d["v_proxies"] = same;
        ok = ok && same;
    }
    {
        const auto a = serre_tate_first_order(lo.n), b = serre_tate_first_order(hi.n);
        const bool same = a.ok() && b.ok() && a.fgl_classes == b.fgl_classes &&
                          a.class_representatives == b.class_representatives;
        d["serre_tate"] = same;
        ok = ok && same;
    }
    return {ok, d};
}

} // namespace detail

/// Every check, in catalog order.
inline const std::vector<CheckDescriptor>& check_catalog()
{
    static const std::vector<CheckDescriptor> catalog = {
        {"aut-order", "Aut of y^2 + y = x^3 over F_4 has order 24, is Q8 ⋊ C3 and matches the Hurwitz units", true,
         detail::check_aut_order},
        {"torsion", "the curve has 9 points over F_4; its 3-torsion is (Z/3)^2 over F_4 and (0,0) has order 3", true,
         detail::check_torsion},
        {"point-stabilizers", "automorphisms act transitively on the 8 points of order 3 with stabilizer C3", true,
         detail::check_point_stabilizers},
        {"subgroup-stabilizers",
         "automorphisms act transitively on the 4 subgroups of order 3 with stabilizer C2 × C3, whose C2 is the "
         "central involution acting on z as the formal inverse",
         true, detail::check_subgroup_stabilizers},
        {"gl23", "GL(2,3) has order 48 with Gamma0(3) = C6 ⋊ C2 and Gamma1(3) = C3 ⋊ C2 of indices 4 and 2; the "
                 "curve has 48 full level structures",
         true, detail::check_gl23},
        {"tower-degrees", "the level-3 tower has degrees 6, 2 and 4", true, detail::check_tower_degrees},
        {"galois-torsor", "automorphisms with Frobenius act simply transitively on full level structures", true,
         detail::check_galois_torsor},
        {"height", "the formal group of the curve has height 2; multiplicative height 1, additive beyond the working bound", true,
         detail::check_height},
        {"fgl-axioms", "formal group laws from curves satisfy unit, commutativity and associativity", true,
         detail::check_fgl_axioms},
        {"universal-curve", "y^2 + a1 u xy + u^3 y = x^3 is smooth and reduces to the supersingular curve", true,
         detail::check_universal_curve},
        {"c3-action", "u -> w u, u a1 -> w^2 u a1 is realized by a rescaling and leaves c2 u and c4 u^3 invariant",
         true, detail::check_c3_action},
        {"c2-action", "u -> -u, u a1 -> u a1 is realized by a star-isomorphism lifting the formal inverse", true,
         detail::check_c2_action},
        {"c2-identity-residue", "star-isomorphism for the C2 twist with identity residue", false,
         detail::check_c2_identity_residue},
        {"c2-curve-level", "curve-level isomorphism for the C2 twist", false, detail::check_c2_curve_level},
        {"c2-fixing-a1", "star-isomorphisms for the twist u -> -u, a1 -> a1", false, detail::check_c2_fixing_a1},
        {"c2-v-proxies", "behaviour of c2 u and c4 u^3 under the C2 twist", false, detail::check_c2_v_proxies},
        {"twist-algebra", "the twists generate C2 × C3 and the C3 certificates compose", true,
         detail::check_twist_algebra},
        {"serre-tate", "over F_4[eps], curve deformation classes biject with formal group deformation classes", true,
         detail::check_serre_tate},
        {"lubin-tate", "the deformations at a1 = 0 and a1 = eps are not star-isomorphic", true,
         detail::check_lubin_tate},
        {"precision-stability", "every certificate recomputed at (k+1, m+2, N+2) truncates to the base result", true,
         detail::check_precision_stability},
    };
    return catalog;
}

inline const CheckDescriptor* find_check(const std::string& name)
{
    for (const auto& c : check_catalog()) {
        if (c.name == name) {
            return &c;
        }
    }
    return nullptr;
}

struct Report {
    CheckConfig config;
    std::vector<CheckResult> checks;

    /// True when no assertable check failed.
    bool all_pass() const
    {
        for (const auto& c : checks) {
            if (c.status == CheckStatus::fail) {
                return false;
            }
        }
        return true;
    }
};

inline CheckResult run_check(const CheckDescriptor& d, CheckContext& ctx)
{
    CheckResult r{d.name, d.anchor};
    try {
        auto [ok, details] = d.run(ctx);
        r.status = !d.assertable ? CheckStatus::recorded_outcome : ok ? CheckStatus::pass : CheckStatus::fail;
        r.details = std::move(details);
    } catch (const std::exception& e) {
        r.status = CheckStatus::fail;
        r.details = Json{{"error", e.what()}};
    }
    return r;
}

/// Runs the named checks (catalog order when empty). Throws precondition_error
/// for unknown names.
inline Report run_checks(const std::vector<std::string>& names, const CheckConfig& config)
{
    validate(config);
    std::vector<const CheckDescriptor*> todo;
    if (names.empty()) {
        for (const auto& c : check_catalog()) {
            todo.push_back(&c);
        }
    } else {
        for (const auto& n : names) {
            const auto* c = find_check(n);
            if (!c) {
                throw precondition_error("unknown check '" + n + "'");
            }
            todo.push_back(c);
        }
    }
    CheckContext ctx(config);
    Report rep{config, std::vector<CheckResult>(todo.size())};
    if (config.parallel) {
        std::vector<std::future<CheckResult>> futures;
        for (const auto* c : todo) {
            futures.push_back(std::async(std::launch::async, [c, &ctx] { return run_check(*c, ctx); }));
        }
        for (std::size_t i = 0; i < futures.size(); ++i) {
            rep.checks[i] = futures[i].get();
        }
    } else {
        for (std::size_t i = 0; i < todo.size(); ++i) {
            rep.checks[i] = run_check(*todo[i], ctx);
        }
    }
    return rep;
}

inline Json to_json(const Report& r)
{
    Json j;
    j["version"] = report_version;
    j["config"] = {{"k", r.config.k}, {"m", r.config.m}, {"N", r.config.n}};
    j["checks"] = Json::array();
    for (const auto& c : r.checks) {
        j["checks"].push_back(
            {{"name", c.name}, {"anchor", c.anchor}, {"status", to_string(c.status)}, {"details", c.details}});
    }
    return j;
}

inline std::string to_text(const Report& r)
{
    std::string out = "config: k=" + std::to_string(r.config.k) + " m=" + std::to_string(r.config.m) +
                      " N=" + std::to_string(r.config.n) + "\n";
    for (const auto& c : r.checks) {
        std::string status = to_string(c.status);
        status.resize(16, ' ');
        std::string name = c.name;
        name.resize(22, ' ');
        out += status + " " + name + " " + c.anchor + "\n";
    }
    return out;
}

} // namespace ssdef
