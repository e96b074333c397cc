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

#include "qstab/error.hpp"

namespace qstab {

std::string_view error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidDimension:
            return "InvalidDimension";
        case ErrorCode::NotInvertible:
            return "NotInvertible";
        case ErrorCode::NotCoprime:
            return "NotCoprime";
        case ErrorCode::ShapeMismatch:
            return "ShapeMismatch";
        case ErrorCode::IndexOutOfRange:
            return "IndexOutOfRange";
        case ErrorCode::IdentityOnPart:
            return "IdentityOnPart";
        case ErrorCode::NonPrimeD:
            return "NonPrimeD";
        case ErrorCode::NotSquarefree:
            return "NotSquarefree";
        case ErrorCode::InvalidStabilizer:
            return "InvalidStabilizer";
        case ErrorCode::NotSubgroup:
            return "NotSubgroup";
        case ErrorCode::NotAState:
            return "NotAState";
        case ErrorCode::PreconditionViolated:
            return "PreconditionViolated";
        case ErrorCode::InternalInvariant:
            return "InternalInvariant";
        case ErrorCode::InvalidCode:
            return "InvalidCode";
        case ErrorCode::NotMaximallyMixedInput:
            return "NotMaximallyMixedInput";
        case ErrorCode::TooLarge:
            return "TooLarge";
        case ErrorCode::NotRankOne:
            return "NotRankOne";
        case ErrorCode::ParseError:
            return "ParseError";
        case ErrorCode::OracleMismatch:
            return "OracleMismatch";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {
}

void fail(ErrorCode code, const std::string &message) {
    throw Error(code, message);
}

}  // namespace qstab
