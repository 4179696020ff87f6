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

#ifndef FREQBIN_EXPERIMENTS_H
#define FREQBIN_EXPERIMENTS_H

#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "freqbin/pipeline.h"

namespace freqbin {

// Path names shared by the built-in schemes and the shipped circuit files.
namespace paths {
inline const std::string k1 = "1", k1p = "1'", k2 = "2", k2p = "2'";
inline const std::string k3 = "3", k3p = "3'", k4 = "4", k4p = "4'";
inline const std::string kT1 = "T1", kT1p = "T1'", kT2 = "T2", kT2p = "T2'";
inline const std::string kT = "T", kTp = "T'";
}  // namespace paths

/// Two-source entanglement swapping through a pair of AOMs, heralded on one
/// photon at each AOM.
Pipeline swap_pipeline(double alpha = std::numbers::pi / 4.0, Convention convention = Convention::Unitary);

/// Three-photon GHZ generation through one AOM and two bin filters,
/// heralded on exactly one photon at the detectors.
Pipeline ghz_pipeline(double alpha = std::numbers::pi / 4.0, Convention convention = Convention::Unitary);

struct SwapResult {
    PipelineRun run;
    double success_probability = 0.0;
    /// Path-resolved heralds; conditional states live on {1,1',4,4'} and
    /// carry the "entropy" metric across {1,1'} | {4,4'}.
    std::vector<HeraldOutcome> heralds;

    /// Clause-level herald, AOM output photons still attached. Absent when
    /// the herald never fires.
    std::optional<StateVector> unresolved_state;
    /// Entropy across {1,1',4,4'} | AOM outputs. Zero iff the outer photons
    /// factor out of the detected ones.
    double unresolved_factorization_entropy = 0.0;
    /// Purity of the AOM-output photons' reduced state.
    double output_purity = 0.0;
    /// <B|rho_14|B> with |B> = (|w>_1 |w>_4' + |w+d>_1' |w+d>_4)/sqrt(2).
    double bell_block_fidelity = 0.0;
};

SwapResult run_swap(double alpha = std::numbers::pi / 4.0, Convention convention = Convention::Unitary);

struct GhzResult {
    PipelineRun run;
    /// Path-resolved detector heralds; conditional states live on the six
    /// remaining source paths and carry the "ghz_fidelity" metric.
    std::vector<HeraldOutcome> heralds;
    /// Keyed by detector path ("T", "T'"); zero when that detector never
    /// fires alone.
    std::map<std::string, double> per_detector;
    double total_probability = 0.0;
    /// Minimum over heralds with nonzero probability.
    std::optional<double> ghz_fidelity;
    bool bandwidth_valid = false;

    double per_detector_probability() const { return per_detector.at(paths::kT); }
};

GhzResult run_ghz(double alpha = std::numbers::pi / 4.0, Convention convention = Convention::Unitary);

/// Branch kets of the heralded GHZ state.
FockKet ghz_branch_a();
FockKet ghz_branch_b();
/// (|w>_1 |w>_4' + |w+d>_1' |w+d>_4)/sqrt(2)
StateVector swap_bell_target();

}  // namespace freqbin

#endif
