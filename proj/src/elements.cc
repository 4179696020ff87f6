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

#include "freqbin/elements.h"

#include <map>

#include "freqbin/error.h"

namespace freqbin {

namespace {

void require(bool ok, const std::string &what) {
    if (!ok) {
        throw Error(ErrorCode::SpecInvariant, what);
    }
}

void require_distinct(const std::vector<std::string> &paths, const std::string &name) {
    PathSet seen;
    for (const auto &p : paths) {
        require(!p.empty(), name + ": empty path");
        require(seen.insert(p).second, name + ": path '" + p + "' used twice");
    }
}

}  // namespace

void validate(const AomSpec &spec) {
    require(spec.shift > 0, spec.name + ": shift must be positive");
    require(spec.t_amp > 0.0 && spec.t_amp < 1.0, spec.name + ": transmitted amplitude must lie in (0,1)");
    require(spec.input_a.freq_bin == spec.input_b.freq_bin + spec.shift,
            spec.name + ": frequency bins incompatible with shift");
    require_distinct({spec.input_a.path, spec.input_b.path, spec.output_x, spec.output_y}, spec.name);
}

void validate(const SourceSpec &spec) {
    require(std::isfinite(spec.alpha), spec.name + ": alpha must be finite");
    require_distinct({spec.arm_1.path, spec.arm_2.path, spec.alt_arm_1.path, spec.alt_arm_2.path}, spec.name);
}

ElementOp make_aom(const AomSpec &spec) {
    validate(spec);
    const double t = spec.t_amp;
    const double d = spec.d_amp();
    const Complex diffracted = spec.convention == Convention::Unitary ? Complex{0.0, d} : Complex{d, 0.0};
    const int high = spec.input_a.freq_bin;
    const int low = spec.input_b.freq_bin;

    ElementOp op;
    op.name = spec.name;
    op.convention = spec.convention;
    op.inputs.push_back({spec.input_a,
                         {{ModeLabel(spec.output_x, high), Complex{t, 0.0}},
                          {ModeLabel(spec.output_y, high - spec.shift), diffracted}}});
    op.inputs.push_back({spec.input_b,
                         {{ModeLabel(spec.output_y, low), Complex{t, 0.0}},
                          {ModeLabel(spec.output_x, low + spec.shift), diffracted}}});
    return op;
}

ElementResult apply_element(const StateVector &s, const ElementOp &op) {
    check_input_frequencies(s, op);
    const PathSet in_paths = op.input_paths();
    const bool literal = op.renormalizes();

    StateVector out(s.prune_epsilon());
    for (const auto &[k, amp] : s.terms()) {
        FockKet consumed = k.restricted_to(in_paths);
        if (consumed.empty()) {
            out.add(k, amp);
            continue;
        }
        // Expand prod_m (a_m^dag)^n_m / sqrt(n_m!) with every input creation
        // operator replaced by its image. Keys are creation-operator monomials.
        std::map<FockKet, Complex> poly{{k.without(in_paths), amp / std::sqrt(k.factorial_product())}};
        for (const auto &[mode, n] : consumed.occupations()) {
            const ModeImage *img = op.find(mode);
            for (int i = 0; i < n; ++i) {
                std::map<FockKet, Complex> next;
                for (const auto &[mono, c] : poly) {
                    for (const auto &[target, weight] : img->image) {
                        FockKet grown = mono;
                        grown.add(target);
                        next[grown] += c * weight;
                    }
                }
                poly = std::move(next);
            }
        }
        // (a^dag)^m |0> = sqrt(m!) |m>
        StateVector image;
        for (const auto &[mono, c] : poly) {
            image.add(mono, c * std::sqrt(mono.factorial_product()));
        }
        if (literal) {
            double n = image.norm();
            if (n > 0.0) {
                image = image.scaled(std::abs(amp) / n);
            }
        }
        for (const auto &[target, c] : image.terms()) {
            out.add(target, c);
        }
    }
    if (literal) {
        double before = s.norm();
        double after = out.norm();
        if (after > 0.0) {
            out = out.scaled(before / after);
        }
    }
    return {std::move(out), literal};
}

namespace {
constexpr double kSourceAmplitudeFloor = 1e-15;
}  // namespace

StateVector make_source(const SourceSpec &spec) {
    validate(spec);
    // cos and sin leave residues near 1e-16 at multiples of pi/2; those
    // branches are exactly empty, so the residue is not stored.
    StateVector s(kSourceAmplitudeFloor);
    s.add(FockKet{spec.arm_1, spec.arm_2}, std::cos(spec.alpha));
    s.add(FockKet{spec.alt_arm_1, spec.alt_arm_2}, std::sin(spec.alpha));
    return StateVector(s.terms());
}

FilterResult apply_filter(const StateVector &s, const FilterSpec &f) {
    double total = s.norm_squared();
    if (!(total > 0.0)) {
        throw Error(ErrorCode::ZeroState, f.name + ": filtering the zero state");
    }
    StateVector kept(s.prune_epsilon());
    for (const auto &[k, a] : s.terms()) {
        bool passes = true;
        for (const auto &[m, c] : k.occupations()) {
            if (m.path == f.path && m.freq_bin != f.pass_bin) {
                passes = false;
                break;
            }
        }
        if (passes) {
            kept.add(k, a);
        }
    }
    if (kept.empty()) {
        throw Error(ErrorCode::ZeroState, f.name + ": nothing survives the filter on " + f.path);
    }
    double survival = kept.norm_squared() / total;
    return {normalize(kept), survival};
}

bool check_bandwidth(const BandwidthCheck &c) {
    for (double sigma : c.filter_sigmas) {
        if (c.sigma_pump < sigma) {
            return false;
        }
    }
    return true;
}

}  // namespace freqbin
