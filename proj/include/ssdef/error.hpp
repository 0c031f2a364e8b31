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

#include <stdexcept>
#include <string>

namespace ssdef {

/// Thrown when an operation is called outside its domain (non-unit where a
/// unit is required, mismatched rings, nonzero constant term, ...).
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when construction data is mathematically invalid (reducible
/// modulus, non-closed group, ...).
class construction_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when an exhaustive search runs past its configured bound.
class search_bound_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when an internal consistency check fails. Indicates a bug.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& what)
{
    if (!cond) {
        throw precondition_error(what);
    }
}

} // namespace ssdef
