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

// Integer polynomials in the Weierstrass coefficients a1, a2, a3, a4, a6.
// Used for symbolic identities (discriminant, transformation laws).

#include <array>
#include <map>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "ssdef/error.hpp"

namespace ssdef {

class ZPoly {
public:
    using Int = boost::multiprecision::cpp_int;
    using Exp = std::array<int, 5>;  // exponents of a1, a2, a3, a4, a6

    ZPoly() = default;
    explicit ZPoly(long c)
    {
        if (c != 0) {
            terms_[Exp{}] = Int(c);
        }
    }

    /// The variable a_i, i in {1, 2, 3, 4, 6}.
    static ZPoly var(int i)
    {
        static constexpr std::array<int, 7> slot = {-1, 0, 1, 2, 3, -1, 4};
        require(i >= 1 && i <= 6 && slot[i] >= 0, "ZPoly::var: index must be 1, 2, 3, 4 or 6");
        ZPoly p;
        Exp e{};
        e[slot[i]] = 1;
        p.terms_[e] = 1;
        return p;
    }

    const std::map<Exp, Int>& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    ZPoly zero() const { return ZPoly(); }
    ZPoly one() const { return ZPoly(1); }
    ZPoly from_int(long n) const { return ZPoly(n); }

    /// Units of Z[a] are +-1.
    std::optional<ZPoly> inverse() const
    {
        if (terms_.size() == 1 && terms_.begin()->first == Exp{} &&
            (terms_.begin()->second == 1 || terms_.begin()->second == -1)) {
            return *this;
        }
        return std::nullopt;
    }

    Int coefficient(const Exp& e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? Int(0) : it->second;
    }

    std::string str() const
    {
        if (terms_.empty()) {
            return "0";
        }
        static const char* names[5] = {"a1", "a2", "a3", "a4", "a6"};
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const Int& c = it->second;
            std::string mono;
            for (int v = 0; v < 5; ++v) {
                if (it->first[v] == 0) {
                    continue;
                }
                if (!mono.empty()) {
                    mono += "*";
                }
                mono += names[v];
                if (it->first[v] > 1) {
                    mono += "^" + std::to_string(it->first[v]);
                }
            }
            const bool neg = c < 0;
            const Int mag = neg ? Int(-c) : c;
            if (out.empty()) {
                out += neg ? "-" : "";
            } else {
                out += neg ? " - " : " + ";
            }
            if (mono.empty()) {
                out += mag.str();
            } else if (mag == 1) {
                out += mono;
            } else {
                out += mag.str() + "*" + mono;
            }
        }
        return out;
    }

    friend ZPoly operator+(const ZPoly& x, const ZPoly& y)
    {
        ZPoly r = x;
        for (const auto& [e, c] : y.terms_) {
            r.add_term(e, c);
        }
        return r;
    }
    ZPoly operator-() const
    {
        ZPoly r = *this;
        for (auto& [e, c] : r.terms_) {
            c = -c;
        }
        return r;
    }
    friend ZPoly operator-(const ZPoly& x, const ZPoly& y) { return x + (-y); }
    friend ZPoly operator*(const ZPoly& x, const ZPoly& y)
    {
        ZPoly r;
        for (const auto& [ex, cx] : x.terms_) {
            for (const auto& [ey, cy] : y.terms_) {
                Exp e;
                for (int v = 0; v < 5; ++v) {
                    e[v] = ex[v] + ey[v];
                }
                r.add_term(e, cx * cy);
            }
        }
        return r;
    }
    ZPoly& operator+=(const ZPoly& y) { return *this = *this + y; }
    ZPoly& operator-=(const ZPoly& y) { return *this = *this - y; }
    ZPoly& operator*=(const ZPoly& y) { return *this = *this * y; }

    friend bool operator==(const ZPoly& x, const ZPoly& y) { return x.terms_ == y.terms_; }

    /// Evaluate under a ring map Z[a] -> R given by the images of a1..a6.
    template <class R>
    R evaluate(const R& a1, const R& a2, const R& a3, const R& a4, const R& a6) const
    {
        const std::array<const R*, 5> img = {&a1, &a2, &a3, &a4, &a6};
        R acc = a1.zero();
        for (const auto& [e, c] : terms_) {
            R term = a1.from_int(static_cast<long>(c));
            for (int v = 0; v < 5; ++v) {
                for (int k = 0; k < e[v]; ++k) {
                    term = term * *img[v];
                }
            }
            acc = acc + term;
        }
        return acc;
    }

private:
    void add_term(const Exp& e, const Int& c)
    {
        if (c == 0) {
            return;
        }
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    std::map<Exp, Int> terms_;
};

} // namespace ssdef
