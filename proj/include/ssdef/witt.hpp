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

// The truncated Witt ring W_k(F_4) = W(F_4)/2^k, presented as the unramified
// quadratic extension (Z/2^k)[w]/(w^2 + w + 1). An element a + b w is stored
// as two residues mod 2^k; the representative is always the least
// nonnegative one, so equality is plain field comparison.
//
// W_1(F_4) is F_4 itself, which lets every coefficient ring in the tower
// share this one base type.

#include <cstdint>
#include <optional>
#include <string>

#include "ssdef/error.hpp"
#include "ssdef/finite_field.hpp"

namespace ssdef {

inline constexpr int max_witt_precision = 62;

class Witt {
public:
    Witt() = default;
    Witt(int k, int64_t a, int64_t b) : a_(reduce(a, k)), b_(reduce(b, k)), k_(static_cast<uint8_t>(k))
    {
        require(k >= 1 && k <= max_witt_precision, "Witt: precision out of range");
    }

    static Witt from_int(int k, long n) { return Witt(k, n, 0); }
    /// The root w of w^2 + w + 1. It is its own Teichmueller lift: w^3 = 1.
    static Witt omega(int k) { return Witt(k, 0, 1); }
    /// Bit-lift of an F_4 code (c0 + c1 w -> c0 + c1 w).
    static Witt naive_lift(int k, uint8_t f4_code) { return Witt(k, f4_code & 1, (f4_code >> 1) & 1); }

    int precision() const noexcept { return k_; }
    uint64_t a() const noexcept { return a_; }
    uint64_t b() const noexcept { return b_; }

    bool is_zero() const noexcept { return a_ == 0 && b_ == 0; }
    Witt zero() const { return Witt(k_, 0, 0); }
    Witt one() const { return Witt(k_, 1, 0); }
    Witt from_int(long n) const { return Witt(k_, n, 0); }

    /// Reduction mod 2 as an F_4 code.
    uint8_t residue_code() const noexcept { return static_cast<uint8_t>((a_ & 1) | ((b_ & 1) << 1)); }
    GF residue() const { return f4_field().element(residue_code()); }

    /// 2-adic valuation, or precision() for zero.
    int valuation() const noexcept
    {
        int v = 0;
        while (v < k_ && (((a_ >> v) & 1) == 0) && (((b_ >> v) & 1) == 0)) {
            ++v;
        }
        return v;
    }

    /// Binary digit at 2-adic level `level`, as an F_4 code.
    uint8_t digit(int level) const noexcept
    {
        return static_cast<uint8_t>(((a_ >> level) & 1) | (((b_ >> level) & 1) << 1));
    }

    bool is_unit() const noexcept { return residue_code() != 0; }

    std::optional<Witt> inverse() const
    {
        if (!is_unit()) {
            return std::nullopt;
        }
        // (a + b w)^{-1} = conj / norm, conj(a + b w) = (a - b) - b w,
        // norm = a^2 - a b + b^2 (odd since the residue is nonzero).
        const uint64_t norm = mask(a_ * a_ - a_ * b_ + b_ * b_);
        const uint64_t ninv = inverse_odd(norm);
        return Witt(k_, static_cast<int64_t>(mask((a_ - b_) * ninv)), static_cast<int64_t>(mask((0 - b_) * ninv)));
    }

    /// Lift of the Frobenius of F_4: w -> w^2 = -1 - w.
    Witt frobenius() const
    {
        return Witt(k_, static_cast<int64_t>(mask(a_ - b_)), static_cast<int64_t>(mask(0 - b_)));
    }

    Witt pow(long e) const
    {
        if (e < 0) {
            auto iv = inverse();
            require(iv.has_value(), "Witt::pow: negative power of a non-unit");
            return iv->pow(-e);
        }
        Witt result = one();
        Witt base = *this;
        while (e > 0) {
            if (e & 1) {
                result = result * base;
            }
            base = base * base;
            e >>= 1;
        }
        return result;
    }

    /// Same element read at a lower precision.
    Witt truncate(int k) const
    {
        require(k <= k_, "Witt::truncate: cannot raise precision");
        return Witt(k, static_cast<int64_t>(a_), static_cast<int64_t>(b_));
    }

    std::string str() const
    {
        if (b_ == 0) {
            return std::to_string(a_);
        }
        std::string bw = (b_ == 1 ? std::string() : std::to_string(b_)) + "w";
        return a_ == 0 ? bw : std::to_string(a_) + "+" + bw;
    }

    friend Witt operator+(const Witt& x, const Witt& y)
    {
        check_same(x, y);
        return raw(x.k_, x.mask(x.a_ + y.a_), x.mask(x.b_ + y.b_));
    }
    friend Witt operator-(const Witt& x, const Witt& y)
    {
        check_same(x, y);
        return raw(x.k_, x.mask(x.a_ - y.a_), x.mask(x.b_ - y.b_));
    }
    friend Witt operator*(const Witt& x, const Witt& y)
    {
        check_same(x, y);
        // (a + b w)(c + d w) = ac - bd + (ad + bc - bd) w.
        const uint64_t bd = x.b_ * y.b_;
        return raw(x.k_, x.mask(x.a_ * y.a_ - bd), x.mask(x.a_ * y.b_ + x.b_ * y.a_ - bd));
    }
    Witt operator-() const { return raw(k_, mask(0 - a_), mask(0 - b_)); }
    Witt& operator+=(const Witt& y) { return *this = *this + y; }
    Witt& operator-=(const Witt& y) { return *this = *this - y; }
    Witt& operator*=(const Witt& y) { return *this = *this * y; }

    friend bool operator==(const Witt& x, const Witt& y) noexcept
    {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.k_ == y.k_;
    }
    friend bool operator<(const Witt& x, const Witt& y) noexcept
    {
        return x.a_ != y.a_ ? x.a_ < y.a_ : x.b_ < y.b_;
    }

private:
    static uint64_t reduce(int64_t v, int k)
    {
        const uint64_t m = k >= 64 ? ~0ULL : ((1ULL << k) - 1);
        return static_cast<uint64_t>(v) & m;
    }
    static Witt raw(uint8_t k, uint64_t a, uint64_t b)
    {
        Witt w;
        w.k_ = k;
        w.a_ = a;
        w.b_ = b;
        return w;
    }
    static void check_same(const Witt& x, const Witt& y)
    {
        if (x.k_ != y.k_) {
            throw precondition_error("Witt: precision mismatch");
        }
    }
    uint64_t mask(uint64_t v) const noexcept { return v & ((1ULL << k_) - 1); }
    // Inverse of an odd number mod 2^k by Newton iteration.
    uint64_t inverse_odd(uint64_t n) const noexcept
    {
        uint64_t x = 1;
        for (int i = 0; i < 7; ++i) {
            x = x * (2 - n * x);
        }
        return mask(x);
    }

    uint64_t a_ = 0;
    uint64_t b_ = 0;
    uint8_t k_ = 1;
};

/// Teichmueller lift of an F_4 element to W_k(F_4): the unique lift fixed by
/// x -> x^4. Starting from any lift, k rounds of x -> x^4 reach the fixed point.
inline Witt teichmuller_lift(const GF& x, int k)
{
    require(x.field().p() == 2 && x.field().degree() == 2, "teichmuller_lift: argument must lie in F4");
    Witt t = Witt::naive_lift(k, x.code());
    for (int i = 0; i <= k; ++i) {
        const Witt next = t.pow(4);
        if (next == t) {
            return t;
        }
        t = next;
    }
    if (t.pow(4) != t) {
        throw internal_error("teichmuller_lift: iteration did not stabilize");
    }
    return t;
}

} // namespace ssdef
