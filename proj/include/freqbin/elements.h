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

#ifndef FREQBIN_ELEMENTS_H
#define FREQBIN_ELEMENTS_H

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "freqbin/element_op.h"
#include "freqbin/state.h"

namespace freqbin {

/// Acousto-optic modulator wired as a two-input frequency eraser.
///
/// The high-frequency input (input_a) diffracts down by `shift` bins and the
/// low-frequency input (input_b) diffracts up, so output_x only ever carries
/// the high bin and output_y the low bin:
///
///   input_a -> t (output_x, f_a) + i d (output_y, f_a - shift)
///   input_b -> t (output_y, f_b) + i d (output_x, f_b + shift)
///
/// with d = sqrt(1 - t^2). The PaperLiteral convention drops the factor i.
struct AomSpec {
    std::string name;
    ModeLabel input_a;
    ModeLabel input_b;
    std::string output_x;
    std::string output_y;
    int shift = 1;
    double t_amp = std::numbers::sqrt2 / 2.0;
    Convention convention = Convention::Unitary;

    double d_amp() const { return std::sqrt(1.0 - t_amp * t_amp); }
};

/// Two-photon frequency-entangled source:
/// cos(alpha) |arm_1, arm_2> + sin(alpha) |alt_arm_1, alt_arm_2>.
struct SourceSpec {
    std::string name;
    ModeLabel arm_1;
    ModeLabel arm_2;
    ModeLabel alt_arm_1;
    ModeLabel alt_arm_2;
    double alpha = std::numbers::pi / 4.0;
};

/// Ideal frequency-bin projector on one path. `sigma` is the filter bandwidth
/// and only matters for the bandwidth check.
struct FilterSpec {
    std::string name;
    std::string path;
    int pass_bin = 0;
    double sigma = 1.0;
};

struct FilterResult {
    StateVector state;
    double survival_probability = 0.0;
};

/// Pump bandwidth must be at least every filter bandwidth.
struct BandwidthCheck {
    double sigma_pump = 0.0;
    std::vector<double> filter_sigmas;
};

/// Throws SpecInvariant when the spec is not a valid AOM wiring.
void validate(const AomSpec &spec);
void validate(const SourceSpec &spec);

ElementOp make_aom(const AomSpec &spec);

/// Bosonic lift of `op`: every photon on an input mode is replaced by its
/// image; everything else passes through.
ElementResult apply_element(const StateVector &s, const ElementOp &op);

StateVector make_source(const SourceSpec &spec);

FilterResult apply_filter(const StateVector &s, const FilterSpec &f);

bool check_bandwidth(const BandwidthCheck &c);

}  // namespace freqbin

#endif
