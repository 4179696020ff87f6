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

#include "freqbin/element_op.h"

#include "freqbin/error.h"

namespace freqbin {

const char *convention_name(Convention c) {
    return c == Convention::Unitary ? "unitary" : "paper";
}

PathSet ElementOp::input_paths() const {
    PathSet out;
    for (const auto &in : inputs) {
        out.insert(in.input.path);
    }
    return out;
}

const ModeImage *ElementOp::find(const ModeLabel &mode) const {
    for (const auto &in : inputs) {
        if (in.input == mode) {
            return &in;
        }
    }
    return nullptr;
}

void check_input_frequencies(const StateVector &s, const ElementOp &op) {
    PathSet paths = op.input_paths();
    for (const auto &[k, a] : s.terms()) {
        for (const auto &[m, c] : k.occupations()) {
            if (paths.contains(m.path) && op.find(m) == nullptr) {
                throw Error(ErrorCode::UnexpectedFrequency,
                            op.name + ": photon at " + m.str() + " does not match the expected input bin");
            }
        }
    }
}

}  // namespace freqbin
