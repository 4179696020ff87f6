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

#include "freqbin/pipeline.h"

#include "freqbin/metrics.h"

namespace freqbin {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void scale_into_absolute(PostSelection &sel, double survival) {
    for (auto &o : sel.outcomes) {
        o.probability *= survival;
    }
    sel.discarded_probability = sel.discarded_probability * survival + (1.0 - survival);
}

}  // namespace

void Pipeline::set_convention(Convention c) {
    for (auto &step : steps) {
        if (auto *aom = std::get_if<AomSpec>(&step)) {
            aom->convention = c;
        }
    }
}

std::string Pipeline::convention_label() const {
    bool unitary = false;
    bool paper = false;
    for (const auto &step : steps) {
        if (const auto *aom = std::get_if<AomSpec>(&step)) {
            (aom->convention == Convention::Unitary ? unitary : paper) = true;
        }
    }
    if (unitary && paper) {
        return "mixed";
    }
    return paper ? "paper" : "unitary";
}

std::string metric_name(ReportKind kind, int occurrence) {
    std::string base = kind == ReportKind::Entropy ? "entropy" : kind == ReportKind::Ghz ? "ghz_fidelity" : "outcomes";
    return occurrence <= 1 ? base : base + "_" + std::to_string(occurrence);
}

PipelineRun run(const Pipeline &pipeline) {
    PipelineRun out;
    StateVector state = ket(std::span<const ModeLabel>{});
    for (const auto &src : pipeline.sources) {
        state = tensor(state, make_source(src));
    }
    out.initial = state;

    std::vector<double> filter_sigmas;
    for (const auto &step : pipeline.steps) {
        std::visit(Overloaded{
                       [&](const AomSpec &spec) {
                           ElementResult r = apply_element(state, make_aom(spec));
                           state = std::move(r.state);
                           out.non_unitary = out.non_unitary || r.non_unitary;
                       },
                       [&](const FilterSpec &spec) {
                           FilterResult r = apply_filter(state, spec);
                           state = std::move(r.state);
                           out.filter_survival *= r.survival_probability;
                           filter_sigmas.push_back(spec.sigma);
                       },
                   },
                   step);
    }
    out.evolved = state;
    if (pipeline.sigma_pump) {
        out.bandwidth_valid = check_bandwidth({*pipeline.sigma_pump, filter_sigmas});
    }

    if (pipeline.herald) {
        HeraldRule rule = *pipeline.herald;
        rule.resolution = Resolution::Pattern;
        out.unresolved = post_select(state, rule);
        rule.resolution = Resolution::PerPath;
        out.resolved = post_select(state, rule);
    } else {
        HeraldOutcome all{"all", true, 1.0, state, {}};
        out.unresolved.outcomes.push_back(all);
        out.resolved.outcomes.push_back(all);
    }
    scale_into_absolute(out.unresolved, out.filter_survival);
    scale_into_absolute(out.resolved, out.filter_survival);

    std::map<ReportKind, int> seen;
    for (const auto &report : pipeline.reports) {
        int occurrence = ++seen[report.kind];
        if (report.kind == ReportKind::Outcomes) {
            out.distributions.push_back(enumerate_outcomes(state, report.paths));
            continue;
        }
        std::string name = metric_name(report.kind, occurrence);
        for (auto &o : out.resolved.outcomes) {
            if (!o.accepted) {
                continue;
            }
            o.metrics[name] = report.kind == ReportKind::Entropy
                                  ? entanglement_entropy(o.conditional_state, report.paths)
                                  : ghz_fidelity(o.conditional_state, report.branch_a, report.branch_b);
        }
    }
    return out;
}

}  // namespace freqbin
