// Copyright 2026 The gwd Authors
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

#ifndef GWD_ERRORS_H
#define GWD_ERRORS_H

#include <stdexcept>
#include <string>

namespace gwd {

/// Caller supplied an out-of-range or otherwise invalid argument.
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// t in {0, N}: the solution / non-solution plane does not exist.
struct DegenerateSubspaceError : ParameterError {
    using ParameterError::ParameterError;
};

/// The oracle does not satisfy the promise an algorithm was run under.
struct PromiseViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A geometric or planning construction has no solution for the given inputs.
struct FeasibilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An internally computed result failed its own end-to-end check.
struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace gwd

#endif
