// Copyright 2026 The sepscope Authors
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

#include "sepscope/error.hpp"

namespace sepscope {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NonSquare: return "NonSquare";
        case ErrorKind::NotHermitian: return "NotHermitian";
        case ErrorKind::NoConvergence: return "NoConvergence";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NotNormalized: return "NotNormalized";
        case ErrorKind::EmptyTermList: return "EmptyTermList";
        case ErrorKind::NotSymmetric: return "NotSymmetric";
        case ErrorKind::NonFinite: return "NonFinite";
        case ErrorKind::ParamOutOfRange: return "ParamOutOfRange";
        case ErrorKind::DimensionTooSmall: return "DimensionTooSmall";
        case ErrorKind::WeightsInvalid: return "WeightsInvalid";
        case ErrorKind::SupportOverlap: return "SupportOverlap";
        case ErrorKind::InsufficientDims: return "InsufficientDims";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::ValidationError: return "ValidationError";
    }
    return "Unknown";
}

}  // namespace sepscope
