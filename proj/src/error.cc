// Copyright 2026 The nlcnot Authors
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

#include "nlcnot/error.h"

namespace nlc {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::LengthMismatch:
            return "LengthMismatch";
        case ErrorCode::ZeroNorm:
            return "ZeroNorm";
        case ErrorCode::NonFinite:
            return "NonFinite";
        case ErrorCode::TooManyQubits:
            return "TooManyQubits";
        case ErrorCode::DuplicateLabel:
            return "DuplicateLabel";
        case ErrorCode::UnknownLabel:
            return "UnknownLabel";
        case ErrorCode::ArityMismatch:
            return "ArityMismatch";
        case ErrorCode::NotUnitary:
            return "NotUnitary";
        case ErrorCode::NotHermitian:
            return "NotHermitian";
        case ErrorCode::NotRankOne:
            return "NotRankOne";
        case ErrorCode::NotSeparable:
            return "NotSeparable";
        case ErrorCode::BadPartition:
            return "BadPartition";
        case ErrorCode::LabelMismatch:
            return "LabelMismatch";
        case ErrorCode::BadDraw:
            return "BadDraw";
        case ErrorCode::LocalityViolation:
            return "LocalityViolation";
        case ErrorCode::SelfSend:
            return "SelfSend";
        case ErrorCode::InvalidChannel:
            return "InvalidChannel";
        case ErrorCode::InvalidInput:
            return "InvalidInput";
        case ErrorCode::NotNormalized:
            return "NotNormalized";
        case ErrorCode::BadPhase:
            return "BadPhase";
        case ErrorCode::DecompositionNotFound:
            return "DecompositionNotFound";
        case ErrorCode::MaxAttemptsExceeded:
            return "MaxAttemptsExceeded";
        case ErrorCode::DrawsExhausted:
            return "DrawsExhausted";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {
}

}  // namespace nlc
