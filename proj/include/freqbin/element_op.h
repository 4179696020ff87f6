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

#ifndef FREQBIN_ELEMENT_OP_H
#define FREQBIN_ELEMENT_OP_H

#include <string>
#include <utility>
#include <vector>

#include "freqbin/state.h"

namespace freqbin {

enum class Convention {
    /// Diffracted amplitude carries a factor i; the map is an isometry.
    Unitary,
    /// All-plus amplitudes. Not an isometry once both inputs are occupied,
    /// so each lifted basis image is renormalized.
    PaperLiteral,
};

const char *convention_name(Convention c);

/// Image of one input mode under a single-photon map.
struct ModeImage {
    ModeLabel input;
    std::vector<std::pair<ModeLabel, Complex>> image;
};

/// Single-photon mode map over a set of input modes, lifted bosonically by
/// apply_element. Photons on paths that no input uses pass through
/// unchanged. A photon on an input path at a bin that is not listed is a
/// wiring error.
struct ElementOp {
    std::string name;
    std::vector<ModeImage> inputs;
    Convention convention = Convention::Unitary;

    PathSet input_paths() const;
    const ModeImage *find(const ModeLabel &mode) const;
    bool renormalizes() const { return convention == Convention::PaperLiteral; }
};

/// Result of applying an element. `non_unitary` is set whenever the literal
/// map had to be renormalized.
struct ElementResult {
    StateVector state;
    bool non_unitary = false;
};

/// Throws UnexpectedFrequency if a photon sits on an input path of `op` at a
/// bin the op does not list.
void check_input_frequencies(const StateVector &s, const ElementOp &op);

}  // namespace freqbin

#endif
