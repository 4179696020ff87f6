// Copyright 2026 The freqbin Authors
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

#include "freqbin/error.h"

namespace freqbin {

const char *error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::OverlappingPaths:
            return "OverlappingPaths";
        case ErrorCode::ZeroState:
            return "ZeroState";
        case ErrorCode::CapExceeded:
            return "CapExceeded";
        case ErrorCode::SpecInvariant:
            return "SpecInvariant";
        case ErrorCode::UnexpectedFrequency:
            return "UnexpectedFrequency";
        case ErrorCode::NotFactorizable:
            return "NotFactorizable";
        case ErrorCode::CompileError:
            return "CompileError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
}

}  // namespace freqbin
