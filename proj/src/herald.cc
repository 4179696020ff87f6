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

#include "freqbin/herald.h"

#include <sstream>

#include "freqbin/error.h"

namespace freqbin {

namespace {

std::string join_paths(const PathSet &paths) {
    std::string out;
    for (const auto &p : paths) {
        if (!out.empty()) {
            out += ",";
        }
        out += p;
    }
    return out;
}

struct Group {
    bool accepted = false;
    StateVector component;
};

}  // namespace

PathSet HeraldRule::paths() const {
    PathSet out;
    for (const auto &c : clauses) {
        out.insert(c.paths.begin(), c.paths.end());
    }
    return out;
}

bool HeraldRule::satisfied_by(const FockKet &k) const {
    for (const auto &c : clauses) {
        if (k.photons_on(c.paths) != c.required_count) {
            return false;
        }
    }
    return true;
}

double PostSelection::accepted_probability() const {
    double p = 0.0;
    for (const auto &o : outcomes) {
        if (o.accepted) {
            p += o.probability;
        }
    }
    return p;
}

double PostSelection::total_probability() const {
    double p = discarded_probability;
    for (const auto &o : outcomes) {
        p += o.probability;
    }
    return p;
}

void validate(const HeraldRule &rule) {
    PathSet seen;
    for (const auto &c : rule.clauses) {
        if (c.required_count < 0) {
            throw Error(ErrorCode::SpecInvariant, "herald count must be non-negative");
        }
        for (const auto &p : c.paths) {
            if (!seen.insert(p).second) {
                throw Error(ErrorCode::SpecInvariant, "herald clauses overlap on path '" + p + "'");
            }
        }
    }
}

PostSelection post_select(const StateVector &s, const HeraldRule &rule) {
    validate(rule);
    const PathSet herald_paths = rule.paths();
    const double total = s.norm_squared();

    std::map<std::string, Group> groups;
    for (const auto &[k, a] : s.terms()) {
        const bool accepted = rule.satisfied_by(k);
        std::ostringstream label;
        if (rule.resolution == Resolution::PerPath) {
            bool first = true;
            for (const auto &p : herald_paths) {
                label << (first ? "" : " ") << p << "=" << k.photons_on({p});
                first = false;
            }
        } else {
            bool first = true;
            for (const auto &c : rule.clauses) {
                label << (first ? "" : " ") << "count(" << join_paths(c.paths) << ")=" << k.photons_on(c.paths);
                first = false;
            }
        }
        std::string key = accepted || !rule.discard_complement ? label.str() : std::string();
        auto [it, inserted] = groups.try_emplace(key, Group{accepted, StateVector(s.prune_epsilon())});
        it->second.component.add(k, a);
    }

    PostSelection result;
    for (auto &[label, group] : groups) {
        double weight = total > 0.0 ? group.component.norm_squared() / total : 0.0;
        if (!group.accepted && rule.discard_complement) {
            result.discarded_probability += weight;
            continue;
        }
        if (!(group.component.norm_squared() > 0.0)) {
            continue;
        }
        HeraldOutcome outcome;
        outcome.label = label;
        outcome.accepted = group.accepted;
        outcome.probability = weight;
        outcome.conditional_state = normalize(group.component);
        if (group.accepted && rule.resolution == Resolution::PerPath) {
            try {
                outcome.conditional_state = drop_paths(outcome.conditional_state, herald_paths);
            } catch (const Error &) {
                // Heralded paths still in a frequency superposition.
            }
        }
        result.outcomes.push_back(std::move(outcome));
    }
    return result;
}

std::map<int, double> enumerate_outcomes(const StateVector &s, const PathSet &paths) {
    std::map<int, double> dist;
    const double total = s.norm_squared();
    if (!(total > 0.0)) {
        return dist;
    }
    for (const auto &[k, a] : s.terms()) {
        dist[k.photons_on(paths)] += std::norm(a) / total;
    }
    return dist;
}

}  // namespace freqbin
