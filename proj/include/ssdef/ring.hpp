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

#include <concepts>
#include <optional>
#include <string>

#include "ssdef/error.hpp"

namespace ssdef {

/// An exact commutative ring element type. Elements know their ring, so
/// zero() / one() / from_int() are instance members.
template <class R>
concept ExactRing = std::copyable<R> && requires(const R a, const R b, long n) {
    { a + b } -> std::same_as<R>;
    { a - b } -> std::same_as<R>;
    { a * b } -> std::same_as<R>;
    { -a } -> std::same_as<R>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.zero() } -> std::same_as<R>;
    { a.one() } -> std::same_as<R>;
    { a.from_int(n) } -> std::same_as<R>;
    { a.inverse() } -> std::same_as<std::optional<R>>;
    { a.str() } -> std::convertible_to<std::string>;
};

template <ExactRing R>
R ring_pow(const R& x, long e)
{
    if (e < 0) {
        auto iv = x.inverse();
        if (!iv) {
            throw precondition_error("ring_pow: negative power of a non-unit");
        }
        return ring_pow(*iv, -e);
    }
    R result = x.one();
    R base = x;
    while (e > 0) {
        if (e & 1) {
            result = result * base;
        }
        base = base * base;
        e >>= 1;
    }
    return result;
}

template <ExactRing R>
bool is_unit(const R& x)
{
    return x.inverse().has_value();
}

} // namespace ssdef
