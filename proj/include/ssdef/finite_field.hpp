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

// Small finite fields F_{2^n} (n <= 8) and F_3 with table-driven arithmetic.
//
// An element of F_{p^n} = F_p[w]/(modulus) is encoded as the integer
// sum c_i p^i of its coefficient vector (c_0, ..., c_{n-1}) in the basis
// 1, w, ..., w^{n-1}. For p = 2 this is the usual bit mask. Fields are
// immutable and interned: FiniteField::get returns a reference that stays
// valid for the lifetime of the program.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "ssdef/error.hpp"

namespace ssdef {

/// Polynomial over F_p, coefficients low to high.
using PrimePoly = std::vector<int>;

inline std::string poly_to_string(const PrimePoly& f, char var = 'x')
{
    std::string out;
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
        if (f[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += "+";
        }
        if (i == 0 || f[i] != 1) {
            out += std::to_string(f[i]);
        }
        if (i >= 1) {
            out += var;
        }
        if (i >= 2) {
            out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

struct FieldSpec {
    int characteristic = 2;
    int degree = 1;
    PrimePoly modulus{0, 1};

    /// F_{2^n} with a fixed default irreducible modulus.
    static FieldSpec gf2(int n)
    {
        static const std::map<int, PrimePoly> defaults = {
            {1, {0, 1}},
            {2, {1, 1, 1}},
            {3, {1, 1, 0, 1}},
            {4, {1, 1, 0, 0, 1}},
            {5, {1, 0, 1, 0, 0, 1}},
            {6, {1, 1, 0, 0, 0, 0, 1}},
            {7, {1, 1, 0, 0, 0, 0, 0, 1}},
            {8, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
        };
        auto it = defaults.find(n);
        if (it == defaults.end()) {
            throw precondition_error("gf2: degree must be in [1, 8], got " + std::to_string(n));
        }
        return FieldSpec{2, n, it->second};
    }
    static FieldSpec f2() { return gf2(1); }
    /// F_4 = F_2[w]/(w^2 + w + 1).
    static FieldSpec f4() { return gf2(2); }
    static FieldSpec f3() { return FieldSpec{3, 1, {0, 1}}; }

    auto key() const { return std::tie(characteristic, degree, modulus); }
    friend bool operator<(const FieldSpec& a, const FieldSpec& b) { return a.key() < b.key(); }
    friend bool operator==(const FieldSpec& a, const FieldSpec& b) { return a.key() == b.key(); }
};

namespace detail {

inline PrimePoly poly_trim(PrimePoly f)
{
    while (!f.empty() && f.back() == 0) {
        f.pop_back();
    }
    return f;
}

// Remainder of f modulo monic g over F_p.
inline PrimePoly poly_mod(PrimePoly f, const PrimePoly& g, int p)
{
    f = poly_trim(std::move(f));
    const int dg = static_cast<int>(g.size()) - 1;
    while (static_cast<int>(f.size()) - 1 >= dg && !f.empty()) {
        const int shift = static_cast<int>(f.size()) - 1 - dg;
        const int lead = f.back();
        for (int i = 0; i <= dg; ++i) {
            f[shift + i] = ((f[shift + i] - lead * g[i]) % p + p) % p;
        }
        f = poly_trim(std::move(f));
    }
    return f;
}

inline PrimePoly decode(int code, int p, int n)
{
    PrimePoly c(n, 0);
    for (int i = 0; i < n; ++i) {
        c[i] = code % p;
        code /= p;
    }
    return c;
}

inline int encode(const PrimePoly& c, int p)
{
    int code = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        code = code * p + c[i];
    }
    return code;
}

} // namespace detail

class GF;

class FiniteField {
public:
    /// Interned field for `spec`. Throws construction_error on a reducible
    /// modulus, naming a factor.
    static const FiniteField& get(const FieldSpec& spec)
    {
        static std::mutex mu;
        static std::map<FieldSpec, std::unique_ptr<FiniteField>> cache;
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(spec);
        if (it == cache.end()) {
            it = cache.emplace(spec, std::unique_ptr<FiniteField>(new FiniteField(spec))).first;
        }
        return *it->second;
    }

    const FieldSpec& spec() const noexcept { return spec_; }
    int p() const noexcept { return spec_.characteristic; }
    int degree() const noexcept { return spec_.degree; }
    int size() const noexcept { return q_; }

    std::string name() const
    {
        return "F" + std::to_string(q_);
    }

    uint8_t add(uint8_t a, uint8_t b) const noexcept { return add_[a * q_ + b]; }
    uint8_t mul(uint8_t a, uint8_t b) const noexcept { return mul_[a * q_ + b]; }
    uint8_t neg(uint8_t a) const noexcept { return neg_[a]; }
    /// Inverse of a nonzero code; inv(0) is 0 and must not be relied on.
    uint8_t inv(uint8_t a) const noexcept { return inv_[a]; }
    uint8_t from_int(long n) const noexcept
    {
        const long r = ((n % p()) + p()) % p();
        return static_cast<uint8_t>(r);
    }

    GF element(int code) const;
    GF zero() const;
    GF one() const;
    /// The class of w (the polynomial variable). For F_p this is 0.
    GF generator() const;
    std::vector<GF> elements() const;

    std::string code_to_string(uint8_t code) const
    {
        return poly_to_string(detail::decode(code, p(), degree()), 'w');
    }

private:
    explicit FiniteField(FieldSpec spec) : spec_(std::move(spec))
    {
        const int p = spec_.characteristic;
        const int n = spec_.degree;
        if (p != 2 && p != 3) {
            throw construction_error("characteristic must be 2 or 3");
        }
        if (p == 2 && (n < 1 || n > 8)) {
            throw construction_error("characteristic 2 fields need degree in [1, 8]");
        }
        if (p == 3 && n != 1) {
            throw construction_error("characteristic 3 is supported only for the prime field");
        }
        if (static_cast<int>(spec_.modulus.size()) != n + 1 || spec_.modulus.back() != 1) {
            throw construction_error("modulus must be monic of degree " + std::to_string(n));
        }
        check_irreducible();
        q_ = 1;
        for (int i = 0; i < n; ++i) {
            q_ *= p;
        }
        add_.resize(q_ * q_);
        mul_.resize(q_ * q_);
        neg_.resize(q_);
        inv_.assign(q_, 0);
        for (int a = 0; a < q_; ++a) {
            const auto ca = detail::decode(a, p, n);
            PrimePoly na(n);
            for (int i = 0; i < n; ++i) {
                na[i] = (p - ca[i]) % p;
            }
            neg_[a] = static_cast<uint8_t>(detail::encode(na, p));
            for (int b = 0; b < q_; ++b) {
                const auto cb = detail::decode(b, p, n);
                PrimePoly s(n), prod(2 * n, 0);
                for (int i = 0; i < n; ++i) {
                    s[i] = (ca[i] + cb[i]) % p;
                    for (int j = 0; j < n; ++j) {
                        prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
                    }
                }
                auto r = detail::poly_mod(prod, spec_.modulus, p);
                r.resize(n, 0);
                add_[a * q_ + b] = static_cast<uint8_t>(detail::encode(s, p));
                mul_[a * q_ + b] = static_cast<uint8_t>(detail::encode(r, p));
            }
        }
        for (int a = 1; a < q_; ++a) {
            for (int b = 1; b < q_; ++b) {
                if (mul_[a * q_ + b] == 1) {
                    inv_[a] = static_cast<uint8_t>(b);
                    break;
                }
            }
        }
    }

    void check_irreducible() const
    {
        const int p = spec_.characteristic;
        const int n = spec_.degree;
        for (int d = 1; 2 * d <= n; ++d) {
            int count = 1;
            for (int i = 0; i < d; ++i) {
                count *= p;
            }
            for (int low = 0; low < count; ++low) {
                PrimePoly g = detail::decode(low, p, d);
                g.push_back(1);
                if (detail::poly_mod(spec_.modulus, g, p).empty()) {
                    throw construction_error("modulus " + poly_to_string(spec_.modulus) +
                                             " is reducible: divisible by " + poly_to_string(g));
                }
            }
        }
    }

    FieldSpec spec_;
    int q_ = 0;
    std::vector<uint8_t> add_, mul_, neg_, inv_;
};

/// Element of a FiniteField. Value type; the field pointer is interned.
class GF {
public:
    GF() = default;
    GF(const FiniteField* f, uint8_t code) : f_(f), v_(code) {}

    const FiniteField& field() const { return *f_; }
    uint8_t code() const noexcept { return v_; }

    bool is_zero() const noexcept { return v_ == 0; }
    GF zero() const { return {f_, 0}; }
    GF one() const { return {f_, 1}; }
    GF from_int(long n) const { return {f_, f_->from_int(n)}; }

    std::optional<GF> inverse() const
    {
        if (v_ == 0) {
            return std::nullopt;
        }
        return GF{f_, f_->inv(v_)};
    }

    GF pow(long e) const
    {
        if (e < 0) {
            auto iv = inverse();
            require(iv.has_value(), "GF::pow: negative power of zero");
            return iv->pow(-e);
        }
        GF result = one();
        GF base = *this;
        while (e > 0) {
            if (e & 1) {
                result = result * base;
            }
            base = base * base;
            e >>= 1;
        }
        return result;
    }

    /// x -> x^p.
    GF frobenius() const { return pow(f_->p()); }

    /// Least d >= 1 with x^{p^d} = x, i.e. the degree of the subfield
    /// generated by x.
    int subfield_degree() const
    {
        GF y = frobenius();
        int d = 1;
        while (y != *this) {
            y = y.frobenius();
            ++d;
        }
        return d;
    }

    std::string str() const { return f_->code_to_string(v_); }

    friend GF operator+(const GF& a, const GF& b) { return {a.f_, a.f_->add(a.v_, b.v_)}; }
    friend GF operator-(const GF& a, const GF& b) { return {a.f_, a.f_->add(a.v_, a.f_->neg(b.v_))}; }
    friend GF operator*(const GF& a, const GF& b) { return {a.f_, a.f_->mul(a.v_, b.v_)}; }
    GF operator-() const { return {f_, f_->neg(v_)}; }
    GF& operator+=(const GF& b) { return *this = *this + b; }
    GF& operator-=(const GF& b) { return *this = *this - b; }
    GF& operator*=(const GF& b) { return *this = *this * b; }

    friend bool operator==(const GF& a, const GF& b) noexcept { return a.v_ == b.v_; }
    friend bool operator<(const GF& a, const GF& b) noexcept { return a.v_ < b.v_; }

private:
    const FiniteField* f_ = nullptr;
    uint8_t v_ = 0;
};

inline GF FiniteField::element(int code) const
{
    require(code >= 0 && code < q_, "FiniteField::element: code out of range");
    return GF{this, static_cast<uint8_t>(code)};
}
inline GF FiniteField::zero() const { return GF{this, 0}; }
inline GF FiniteField::one() const { return GF{this, 1}; }
inline GF FiniteField::generator() const
{
    return degree() == 1 ? zero() : GF{this, static_cast<uint8_t>(p())};
}
inline std::vector<GF> FiniteField::elements() const
{
    std::vector<GF> out;
    out.reserve(q_);
    for (int c = 0; c < q_; ++c) {
        out.emplace_back(this, static_cast<uint8_t>(c));
    }
    return out;
}

inline const FiniteField& field_make(const FieldSpec& spec) { return FiniteField::get(spec); }
inline const FiniteField& f4_field() { return FiniteField::get(FieldSpec::f4()); }

/// Field embedding F_{p^n} -> F_{p^m} (n | m), returned as a code table.
/// The generator goes to the least-coded root of the source modulus.
inline std::vector<GF> field_embedding(const FiniteField& from, const FiniteField& to)
{
    require(from.p() == to.p(), "field_embedding: characteristics differ");
    require(to.degree() % from.degree() == 0, "field_embedding: degree does not divide");
    GF root = to.zero();
    if (from.degree() > 1) {
        bool found = false;
        for (const GF& cand : to.elements()) {
            GF acc = to.zero();
            const auto& mod = from.spec().modulus;
            for (int i = static_cast<int>(mod.size()) - 1; i >= 0; --i) {
                acc = acc * cand + to.one().from_int(mod[i]);
            }
            if (acc.is_zero()) {
                root = cand;
                found = true;
                break;
            }
        }
        if (!found) {
            throw internal_error("field_embedding: no root of the source modulus");
        }
    }
    std::vector<GF> table;
    table.reserve(from.size());
    for (int code = 0; code < from.size(); ++code) {
        const auto digits = detail::decode(code, from.p(), from.degree());
        GF acc = to.zero();
        GF power = to.one();
        for (int d : digits) {
            acc = acc + to.one().from_int(d) * power;
            power = power * root;
        }
        table.push_back(acc);
    }
    return table;
}

} // namespace ssdef
