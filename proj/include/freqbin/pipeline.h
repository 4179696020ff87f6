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

#ifndef FREQBIN_PIPELINE_H
#define FREQBIN_PIPELINE_H

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "freqbin/elements.h"
#include "freqbin/herald.h"
#include "freqbin/state.h"

namespace freqbin {

enum class ReportKind { Entropy, Ghz, Outcomes };

struct ReportSpec {
    ReportKind kind = ReportKind::Entropy;
    /// Entropy: one side of the split. Outcomes: paths to count over.
    PathSet paths;
    /// Ghz: the two branches to compare against.
    FockKet branch_a;
    FockKet branch_b;
};

using Step = std::variant<AomSpec, FilterSpec>;

/// Executable circuit: sources are tensored in order, then every step is
/// applied in order, then the herald and reports run on the result.
struct Pipeline {
    std::string name;
    std::vector<SourceSpec> sources;
    std::vector<Step> steps;
    std::optional<HeraldRule> herald;
    std::optional<double> sigma_pump;
    std::vector<ReportSpec> reports;

    /// Forces every AOM onto one convention.
    void set_convention(Convention c);
    /// "unitary", "paper" or "mixed"; "unitary" when there are no AOMs.
    std::string convention_label() const;
};

struct PipelineRun {
    StateVector initial;
    /// State after all optics, renormalized after lossy filters.
    StateVector evolved;
    bool non_unitary = false;
    double filter_survival = 1.0;
    std::optional<bool> bandwidth_valid;
    /// Clause-level herald; heralded photons stay in the conditional state.
    PostSelection unresolved;
    /// Path-resolved herald carrying report metrics. Probabilities are
    /// absolute: filter losses are folded into the discard bucket.
    PostSelection resolved;
    /// One entry per outcomes report, in report order.
    std::vector<std::map<int, double>> distributions;

    double success_probability() const { return resolved.accepted_probability(); }
};

/// Name under which report `index` of `kind` is stored in outcome metrics:
/// "entropy", "ghz_fidelity", then "entropy_2", ... for repeats.
std::string metric_name(ReportKind kind, int occurrence);

PipelineRun run(const Pipeline &pipeline);

}  // namespace freqbin

#endif
