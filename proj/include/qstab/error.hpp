// Copyright 2026 The qstab Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qstab {

enum class ErrorCode {
    InvalidDimension,
    NotInvertible,
    NotCoprime,
    ShapeMismatch,
    IndexOutOfRange,
    IdentityOnPart,
    NonPrimeD,
    NotSquarefree,
    InvalidStabilizer,
    NotSubgroup,
    NotAState,
    PreconditionViolated,
    InternalInvariant,
    InvalidCode,
    NotMaximallyMixedInput,
    TooLarge,
    NotRankOne,
    ParseError,
    OracleMismatch,
};

std::string_view error_name(ErrorCode code);

/// Domain error raised by every qstab module. `name()` is the stable identifier
/// printed by the command line tool.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message);

    ErrorCode code() const noexcept {
        return code_;
    }
    std::string_view name() const noexcept {
        return error_name(code_);
    }

   private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string &message);

}  // namespace qstab
