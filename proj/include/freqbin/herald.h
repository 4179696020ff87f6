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

#ifndef FREQBIN_HERALD_H
#define FREQBIN_HERALD_H

#include <map>
#include <string>
#include <vector>

#include "freqbin/state.h"

namespace freqbin {

/// Exactly `required_count` photons summed over `paths`.
struct HeraldClause {
    PathSet paths;
    int required_count = 0;

    bool operator==(const HeraldClause &) const = default;
};

enum class Resolution {
    /// One outcome per clause-count pattern; the heralded photons stay in
    /// the conditional state.
    Pattern,
    /// Detectors resolve individual paths. Accepted outcomes are split per
    /// path-count pattern and the heralded paths are removed from the
    /// conditional state.
    PerPath,
};

/// Number-resolving herald. Clauses must cover disjoint path sets.
struct HeraldRule {
    std::vector<HeraldClause> clauses;
    /// Lump every rejected pattern into one discard bucket. When false each
    /// rejected pattern is reported as its own outcome.
    bool discard_complement = true;
    Resolution resolution = Resolution::Pattern;

    PathSet paths() const;
    bool satisfied_by(const FockKet &k) const;
};

struct HeraldOutcome {
    std::string label;
    bool accepted = true;
    double probability = 0.0;
    StateVector conditional_state;
    std::map<std::string, double> metrics;
};

struct PostSelection {
    std::vector<HeraldOutcome> outcomes;
    double discarded_probability = 0.0;

    double accepted_probability() const;
    /// Sum of every outcome plus the discard bucket.
    double total_probability() const;
};

/// Throws SpecInvariant if clauses overlap or counts are negative.
void validate(const HeraldRule &rule);

/// Splits `s` by photon-count pattern over the rule's paths. Patterns of
/// zero weight are not reported. With PerPath resolution the heralded paths
/// are dropped from accepted conditional states whenever every term agrees
/// on them (always true once bins are fixed by the optics); otherwise the
/// full state is kept.
PostSelection post_select(const StateVector &s, const HeraldRule &rule);

/// Distribution of the total photon count over `paths`.
std::map<int, double> enumerate_outcomes(const StateVector &s, const PathSet &paths);

}  // namespace freqbin

#endif
