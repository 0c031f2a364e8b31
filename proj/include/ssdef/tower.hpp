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

// Tower rings  W_k(F_4)[s]/(s^m) [u, u^{-1}]:
// a truncated Witt base, one truncated power-series variable s (named "a1"
// in the deformation ring, "eps" for dual numbers) and an optional exact
// Laurent variable u.
//
// Elements are finite sums c * s^i * u^j with 0 <= i < m, stored sorted in
// graded-lexicographic order on (i + j, i, j) with no zero coefficients.
// The maximal ideal (2, s) is nilpotent, so an element is a unit exactly
// when its reduction mod (2, s) is a unit monomial c u^j of F_4[u^{+-1}].

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ssdef/error.hpp"
#include "ssdef/witt.hpp"

namespace ssdef {

struct TowerSpec {
    int k = 1;                   ///< 2-adic precision of the Witt base
    std::string series_var = "a1";
    int m = 1;                   ///< truncation order of the series variable
    std::string laurent_var;     ///< empty: no Laurent variable

    bool has_laurent() const { return !laurent_var.empty(); }
    auto key() const { return std::tie(k, series_var, m, laurent_var); }
    friend bool operator<(const TowerSpec& a, const TowerSpec& b) { return a.key() < b.key(); }
    friend bool operator==(const TowerSpec& a, const TowerSpec& b) { return a.key() == b.key(); }
};

/// Exponent pair (series degree, Laurent degree).
struct Mono {
    int s = 0;
    int l = 0;

    friend bool operator==(const Mono& a, const Mono& b) { return a.s == b.s && a.l == b.l; }
    friend bool operator<(const Mono& a, const Mono& b)
    {
        return std::make_tuple(a.s + a.l, a.s, a.l) < std::make_tuple(b.s + b.l, b.s, b.l);
    }
};

class TowerValue;

class TowerRing {
public:
    static const TowerRing& get(const TowerSpec& spec)
    {
        require(spec.k >= 1 && spec.k <= max_witt_precision, "TowerRing: 2-adic precision out of range");
        require(spec.m >= 1, "TowerRing: truncation order must be positive");
        static std::mutex mu;
        static std::map<TowerSpec, std::unique_ptr<TowerRing>> cache;
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(spec);
        if (it == cache.end()) {
            it = cache.emplace(spec, std::unique_ptr<TowerRing>(new TowerRing(spec))).first;
        }
        return *it->second;
    }

    const TowerSpec& spec() const noexcept { return spec_; }
    int k() const noexcept { return spec_.k; }
    int m() const noexcept { return spec_.m; }
    bool has_laurent() const noexcept { return spec_.has_laurent(); }

    TowerValue zero() const;
    TowerValue one() const;
    TowerValue scalar(const Witt& c) const;
    TowerValue from_int(long n) const;
    TowerValue monomial(const Witt& c, int s, int l = 0) const;
    /// The series variable s (zero when m = 1).
    TowerValue gen() const;
    /// u^j; requires a Laurent variable.
    TowerValue laurent(int j = 1) const;
    TowerValue omega() const;
    TowerValue teichmuller(const GF& x) const;

    /// Ring with the same variables, reduced precisions.
    const TowerRing& with_precision(int k, int m) const
    {
        return get(TowerSpec{k, spec_.series_var, m, spec_.laurent_var});
    }
    /// R/(2): F_4 base, same truncation.
    const TowerRing& mod_two() const { return with_precision(1, spec_.m); }
    /// R/(2, s): F_4[u^{+-1}] (or F_4).
    const TowerRing& residue_ring() const { return with_precision(1, 1); }

    /// Highest j with (2, s)^j != 0.
    int top_filtration() const noexcept { return (spec_.k - 1) + (spec_.m - 1); }

    std::string name() const
    {
        std::string base = spec_.k == 1 ? "F4" : "W" + std::to_string(spec_.k) + "(F4)";
        if (spec_.m > 1) {
            base += "[" + spec_.series_var + "]/(" + spec_.series_var + "^" + std::to_string(spec_.m) + ")";
        }
        if (has_laurent()) {
            base += "[" + spec_.laurent_var + "^+-1]";
        }
        return base;
    }

private:
    explicit TowerRing(TowerSpec spec) : spec_(std::move(spec)) {}
    TowerSpec spec_;
};

class TowerValue {
public:
    struct Term {
        Mono mono;
        Witt coef;
    };

    TowerValue() = default;
    explicit TowerValue(const TowerRing* ring) : ring_(ring) {}
    TowerValue(const TowerRing* ring, std::vector<Term> terms) : ring_(ring), terms_(std::move(terms))
    {
        normalize();
    }

    const TowerRing& ring() const { return *ring_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    TowerValue zero() const { return TowerValue(ring_); }
    TowerValue one() const { return ring_->one(); }
    TowerValue from_int(long n) const { return ring_->from_int(n); }

    Witt coefficient(int s, int l = 0) const
    {
        for (const auto& t : terms_) {
            if (t.mono.s == s && t.mono.l == l) {
                return t.coef;
            }
        }
        return Witt::from_int(ring_->k(), 0);
    }

    /// Part of degree s in the series variable, as an element of the same ring.
    TowerValue series_part(int s) const
    {
        std::vector<Term> out;
        for (const auto& t : terms_) {
            if (t.mono.s == s) {
                out.push_back(t);
            }
        }
        return TowerValue(ring_, std::move(out));
    }

    /// If the element is a single term c s^i u^j, that term.
    std::optional<Term> as_monomial() const
    {
        if (terms_.size() != 1) {
            return std::nullopt;
        }
        return terms_.front();
    }

    bool is_unit() const { return unit_leading_term().has_value(); }

    std::optional<TowerValue> inverse() const
    {
        auto lead = unit_leading_term();
        if (!lead) {
            return std::nullopt;
        }
        const Witt cinv = *lead->coef.inverse();
        const TowerValue lead_inv = ring_->monomial(cinv, 0, -lead->mono.l);
        // x = lead (1 + n) with n in the nilpotent ideal (2, s).
        const TowerValue n = lead_inv * *this - one();
        TowerValue sum = one();
        TowerValue term = one();
        const int bound = ring_->top_filtration() + 2;
        for (int i = 1; i <= bound; ++i) {
            term = -(term * n);
            if (term.is_zero()) {
                break;
            }
            sum += term;
        }
        if (!term.is_zero()) {
            throw internal_error("TowerValue::inverse: nilpotent series did not terminate");
        }
        return lead_inv * sum;
    }

    TowerValue pow(long e) const
    {
        if (e < 0) {
            auto iv = inverse();
            require(iv.has_value(), "TowerValue::pow: negative power of a non-unit");
            return iv->pow(-e);
        }
        TowerValue result = one();
        TowerValue base = *this;
        while (e > 0) {
            if (e & 1) {
                result = result * base;
            }
            base = base * base;
            e >>= 1;
        }
        return result;
    }

    /// Image in a ring with the same variables and lower precisions (the
    /// quotient map mod (2^k', s^m')).
    TowerValue reduce_to(const TowerRing& target) const
    {
        require(target.spec().series_var == ring_->spec().series_var &&
                    target.spec().laurent_var == ring_->spec().laurent_var,
                "reduce_to: variable names differ");
        require(target.k() <= ring_->k() && target.m() <= ring_->m(), "reduce_to: target precision is higher");
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) {
            if (t.mono.s < target.m()) {
                out.push_back({t.mono, t.coef.truncate(target.k())});
            }
        }
        return TowerValue(&target, std::move(out));
    }

    /// Map each coefficient through the Witt Frobenius w -> w^2.
    TowerValue frobenius_coefficients() const
    {
        std::vector<Term> out = terms_;
        for (auto& t : out) {
            t.coef = t.coef.frobenius();
        }
        return TowerValue(ring_, std::move(out));
    }

    /// Least j with this element in (2, s)^j; top_filtration() + 1 for zero.
    int filtration_degree() const
    {
        int best = ring_->top_filtration() + 1;
        for (const auto& t : terms_) {
            best = std::min(best, t.mono.s + t.coef.valuation());
        }
        return best;
    }

    std::string str() const
    {
        if (terms_.empty()) {
            return "0";
        }
        std::string out;
        for (const auto& t : terms_) {
            if (!out.empty()) {
                out += " + ";
            }
            std::string c = t.coef.str();
            std::string vars;
            if (t.mono.s != 0) {
                vars += ring_->spec().series_var;
                if (t.mono.s != 1) {
                    vars += "^" + std::to_string(t.mono.s);
                }
            }
            if (t.mono.l != 0) {
                if (!vars.empty()) {
                    vars += "*";
                }
                vars += ring_->spec().laurent_var;
                if (t.mono.l != 1) {
                    vars += "^" + std::to_string(t.mono.l);
                }
            }
            if (vars.empty()) {
                out += c;
            } else if (c == "1") {
                out += vars;
            } else {
                out += (c.find('+') != std::string::npos ? "(" + c + ")" : c) + "*" + vars;
            }
        }
        return out;
    }

    friend TowerValue operator+(const TowerValue& x, const TowerValue& y)
    {
        check_same(x, y);
        std::vector<Term> out;
        out.reserve(x.terms_.size() + y.terms_.size());
        auto i = x.terms_.begin();
        auto j = y.terms_.begin();
        while (i != x.terms_.end() || j != y.terms_.end()) {
            if (j == y.terms_.end() || (i != x.terms_.end() && i->mono < j->mono)) {
                out.push_back(*i++);
            } else if (i == x.terms_.end() || j->mono < i->mono) {
                out.push_back(*j++);
            } else {
                Witt c = i->coef + j->coef;
                if (!c.is_zero()) {
                    out.push_back({i->mono, c});
                }
                ++i;
                ++j;
            }
        }
        TowerValue r(x.ring_);
        r.terms_ = std::move(out);
        return r;
    }
    TowerValue operator-() const
    {
        TowerValue r = *this;
        for (auto& t : r.terms_) {
            t.coef = -t.coef;
        }
        return r;
    }
    friend TowerValue operator-(const TowerValue& x, const TowerValue& y) { return x + (-y); }
    friend TowerValue operator*(const TowerValue& x, const TowerValue& y)
    {
        check_same(x, y);
        if (x.is_zero() || y.is_zero()) {
            return TowerValue(x.ring_);
        }
        const int m = x.ring_->m();
        std::vector<Term> prod;
        prod.reserve(x.terms_.size() * y.terms_.size());
        for (const auto& a : x.terms_) {
            for (const auto& b : y.terms_) {
                const int s = a.mono.s + b.mono.s;
                if (s >= m) {
                    continue;
                }
                Witt c = a.coef * b.coef;
                if (!c.is_zero()) {
                    prod.push_back({Mono{s, a.mono.l + b.mono.l}, c});
                }
            }
        }
        return TowerValue(x.ring_, std::move(prod));
    }
    TowerValue& operator+=(const TowerValue& y) { return *this = *this + y; }
    TowerValue& operator-=(const TowerValue& y) { return *this = *this - y; }
    TowerValue& operator*=(const TowerValue& y) { return *this = *this * y; }

    friend bool operator==(const TowerValue& x, const TowerValue& y)
    {
        if (x.ring_ != y.ring_ || x.terms_.size() != y.terms_.size()) {
            return false;
        }
        for (std::size_t i = 0; i < x.terms_.size(); ++i) {
            if (!(x.terms_[i].mono == y.terms_[i].mono) || !(x.terms_[i].coef == y.terms_[i].coef)) {
                return false;
            }
        }
        return true;
    }

    /// Canonical total order (term-by-term on the sorted representation).
    friend bool operator<(const TowerValue& x, const TowerValue& y)
    {
        const std::size_t n = std::min(x.terms_.size(), y.terms_.size());
        for (std::size_t i = 0; i < n; ++i) {
            const auto& a = x.terms_[i];
            const auto& b = y.terms_[i];
            if (!(a.mono == b.mono)) {
                return a.mono < b.mono;
            }
            if (!(a.coef == b.coef)) {
                return a.coef < b.coef;
            }
        }
        return x.terms_.size() < y.terms_.size();
    }

private:
    static void check_same(const TowerValue& x, const TowerValue& y)
    {
        if (x.ring_ != y.ring_) {
            throw precondition_error("TowerValue: operands live in different rings");
        }
    }

    void normalize()
    {
        std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (t.mono.s >= ring_->m()) {
                continue;
            }
            if (!out.empty() && out.back().mono == t.mono) {
                out.back().coef += t.coef;
            } else {
                out.push_back(t);
            }
        }
        out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.coef.is_zero(); }), out.end());
        terms_ = std::move(out);
    }

    std::optional<Term> unit_leading_term() const
    {
        std::optional<Term> found;
        for (const auto& t : terms_) {
            if (t.mono.s == 0 && t.coef.is_unit()) {
                if (found) {
                    return std::nullopt;
                }
                found = t;
            }
        }
        return found;
    }

    const TowerRing* ring_ = nullptr;
    std::vector<Term> terms_;
};

inline TowerValue TowerRing::zero() const { return TowerValue(this); }
inline TowerValue TowerRing::one() const { return scalar(Witt::from_int(spec_.k, 1)); }
inline TowerValue TowerRing::scalar(const Witt& c) const { return monomial(c, 0, 0); }
inline TowerValue TowerRing::from_int(long n) const { return scalar(Witt::from_int(spec_.k, n)); }
inline TowerValue TowerRing::monomial(const Witt& c, int s, int l) const
{
    require(c.precision() == spec_.k, "TowerRing::monomial: coefficient precision mismatch");
    require(l == 0 || has_laurent(), "TowerRing::monomial: ring has no Laurent variable");
    return TowerValue(this, {{Mono{s, l}, c}});
}
inline TowerValue TowerRing::gen() const { return monomial(Witt::from_int(spec_.k, 1), 1, 0); }
inline TowerValue TowerRing::laurent(int j) const { return monomial(Witt::from_int(spec_.k, 1), 0, j); }
inline TowerValue TowerRing::omega() const { return scalar(Witt::omega(spec_.k)); }
inline TowerValue TowerRing::teichmuller(const GF& x) const { return scalar(teichmuller_lift(x, spec_.k)); }

/// Ideals supported by reduce().
enum class ReductionIdeal { two, two_and_series };

/// Canonical image of `x` in R/(2) or R/(2, s).
inline TowerValue reduce(const TowerValue& x, ReductionIdeal ideal)
{
    const TowerRing& r = x.ring();
    return x.reduce_to(ideal == ReductionIdeal::two ? r.mod_two() : r.residue_ring());
}

/// Teichmueller lift of each F_4 coefficient of a residue-ring element into
/// the given tower ring (a set-theoretic section of the reduction map).
inline TowerValue lift_residue(const TowerValue& x, const TowerRing& target)
{
    std::vector<TowerValue::Term> out;
    for (const auto& t : x.terms()) {
        out.push_back({t.mono, teichmuller_lift(t.coef.residue(), target.k())});
    }
    return TowerValue(&target, std::move(out));
}

/// Ring endomorphism of a tower ring fixed by the images of the series
/// variable s and the Laurent variable u, and an automorphism of the Witt
/// base (identity or Frobenius).
class RingEndomorphism {
public:
    enum class BaseMap { identity, frobenius };

    /// Images given on (u, s).
    static RingEndomorphism from_generators(const TowerRing& ring, std::optional<TowerValue> u_image,
                                            TowerValue s_image, BaseMap base = BaseMap::identity)
    {
        return RingEndomorphism(ring, std::move(u_image), std::move(s_image), base);
    }

    /// Images given on (u, u*s), the convention in which the C3 and C2
    /// actions are usually written; the image of s is derived.
    static RingEndomorphism from_u_and_us(const TowerRing& ring, const TowerValue& u_image,
                                          const TowerValue& us_image, BaseMap base = BaseMap::identity)
    {
        auto uinv = u_image.inverse();
        if (!uinv) {
            throw precondition_error("RingEndomorphism: image of u is not a unit");
        }
        return RingEndomorphism(ring, u_image, us_image * *uinv, base);
    }

    static RingEndomorphism identity(const TowerRing& ring)
    {
        std::optional<TowerValue> u;
        if (ring.has_laurent()) {
            u = ring.laurent(1);
        }
        return RingEndomorphism(ring, u, ring.gen(), BaseMap::identity);
    }

    const TowerRing& ring() const { return *ring_; }
    const std::optional<TowerValue>& u_image() const { return u_image_; }
    const TowerValue& s_image() const { return s_image_; }
    BaseMap base_map() const { return base_; }

    TowerValue operator()(const TowerValue& x) const
    {
        require(&x.ring() == ring_, "RingEndomorphism: value from another ring");
        TowerValue out = ring_->zero();
        for (const auto& t : x.terms()) {
            const Witt c = base_ == BaseMap::frobenius ? t.coef.frobenius() : t.coef;
            TowerValue term = ring_->scalar(c) * s_power(t.mono.s);
            if (t.mono.l != 0) {
                term = term * u_power(t.mono.l);
            }
            out += term;
        }
        return out;
    }

    /// (this o other)(x) = this(other(x)).
    RingEndomorphism compose(const RingEndomorphism& other) const
    {
        require(other.ring_ == ring_, "RingEndomorphism::compose: ring mismatch");
        std::optional<TowerValue> u;
        if (other.u_image_) {
            u = (*this)(*other.u_image_);
        }
        const BaseMap base = (base_ == other.base_) ? BaseMap::identity : BaseMap::frobenius;
        return RingEndomorphism(*ring_, u, (*this)(other.s_image_), base);
    }

    bool equal_on_generators(const RingEndomorphism& other) const
    {
        return ring_ == other.ring_ && u_image_ == other.u_image_ && s_image_ == other.s_image_ &&
               base_ == other.base_;
    }

private:
    RingEndomorphism(const TowerRing& ring, std::optional<TowerValue> u_image, TowerValue s_image, BaseMap base)
        : ring_(&ring), u_image_(std::move(u_image)), s_image_(std::move(s_image)), base_(base)
    {
        require(&s_image_.ring() == ring_, "RingEndomorphism: image of the series variable in another ring");
        if (ring_->has_laurent()) {
            if (!u_image_) {
                throw precondition_error("RingEndomorphism: ring has a Laurent variable but no image for it");
            }
            require(&u_image_->ring() == ring_, "RingEndomorphism: image of u in another ring");
            auto inv = u_image_->inverse();
            if (!inv) {
                throw precondition_error("RingEndomorphism: image of u is not a unit");
            }
            u_inverse_ = *inv;
        }
        // s^m = 0 must be preserved.
        if (!s_image_.pow(ring_->m()).is_zero()) {
            throw precondition_error("RingEndomorphism: image of the series variable does not respect truncation");
        }
        if (ring_->m() > 1 && !(s_image_.filtration_degree() >= 1)) {
            throw precondition_error("RingEndomorphism: image of the series variable is not topologically nilpotent");
        }
    }

    TowerValue s_power(int e) const { return s_image_.pow(e); }
    TowerValue u_power(int e) const { return e >= 0 ? u_image_->pow(e) : u_inverse_.pow(-e); }

    const TowerRing* ring_;
    std::optional<TowerValue> u_image_;
    TowerValue s_image_;
    TowerValue u_inverse_;
    BaseMap base_;
};

} // namespace ssdef
