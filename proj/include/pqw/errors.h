// Copyright 2026 The PQW Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PQW_ERRORS_H
#define PQW_ERRORS_H

#include <stdexcept>
#include <string>

namespace pqw {

// Argument errors use std::invalid_argument. The types below mark failures that
// callers (mainly the CLI) map to distinct exit codes.

/// A register, enumeration or branch count exceeds the configured budget.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string &what) : std::runtime_error(what) {
    }
};

/// A projection or forced measurement onto a branch of probability zero.
struct ZeroProbabilityError : std::runtime_error {
    explicit ZeroProbabilityError(const std::string &what) : std::runtime_error(what) {
    }
};

/// Unknown catalog or state name.
struct LookupError : std::invalid_argument {
    explicit LookupError(const std::string &what) : std::invalid_argument(what) {
    }
};

}  // namespace pqw

#endif
