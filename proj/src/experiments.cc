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

#include "freqbin/experiments.h"

#include <algorithm>
#include <cmath>

#include "freqbin/metrics.h"

namespace freqbin {

namespace {

using namespace paths;

std::vector<SourceSpec> two_sources(double alpha) {
    return {
        SourceSpec{"Phi", {k1, 0}, {k2, 1}, {k1p, 1}, {k2p, 0}, alpha},
        SourceSpec{"Psi", {k3, 0}, {k4, 1}, {k3p, 1}, {k4p, 0}, alpha},
    };
}

}  // namespace

FockKet ghz_branch_a() {
    return FockKet{{k1, 0}, {k3p, 1}, {k4p, 0}};
}

FockKet ghz_branch_b() {
    return FockKet{{k1p, 1}, {k2p, 0}, {k4, 1}};
}

StateVector swap_bell_target() {
    StateVector s;
    s.add(FockKet{{k1, 0}, {k4p, 0}}, std::numbers::sqrt2 / 2.0);
    s.add(FockKet{{k1p, 1}, {k4, 1}}, std::numbers::sqrt2 / 2.0);
    return s;
}

Pipeline swap_pipeline(double alpha, Convention convention) {
    Pipeline p;
    p.name = "swap";
    p.sources = two_sources(alpha);
    p.steps.emplace_back(AomSpec{"AOM1", {k2, 1}, {k3, 0}, kT1, kT1p, 1, std::numbers::sqrt2 / 2.0, convention});
    p.steps.emplace_back(AomSpec{"AOM2", {k3p, 1}, {k2p, 0}, kT2p, kT2, 1, std::numbers::sqrt2 / 2.0, convention});
    p.herald = HeraldRule{{{{kT1, kT1p}, 1}, {{kT2, kT2p}, 1}}};
    p.reports.push_back(ReportSpec{ReportKind::Entropy, {k1, k1p}, {}, {}});
    return p;
}

Pipeline ghz_pipeline(double alpha, Convention convention) {
    Pipeline p;
    p.name = "ghz";
    p.sources = two_sources(alpha);
    p.steps.emplace_back(AomSpec{"AOM", {k2, 1}, {k3, 0}, kTp, kT, 1, std::numbers::sqrt2 / 2.0, convention});
    p.steps.emplace_back(FilterSpec{"F0", kT, 0, 1.0});
    p.steps.emplace_back(FilterSpec{"F1", kTp, 1, 1.0});
    p.sigma_pump = 1.0;
    p.herald = HeraldRule{{{{kT, kTp}, 1}}};
    p.reports.push_back(ReportSpec{ReportKind::Ghz, {}, ghz_branch_a(), ghz_branch_b()});
    return p;
}

SwapResult run_swap(double alpha, Convention convention) {
    SwapResult r;
    r.run = run(swap_pipeline(alpha, convention));
    r.success_probability = r.run.success_probability();
    for (const auto &o : r.run.resolved.outcomes) {
        if (o.accepted) {
            r.heralds.push_back(o);
        }
    }
    for (const auto &o : r.run.unresolved.outcomes) {
        if (!o.accepted) {
            continue;
        }
        const PathSet outer{k1, k1p, k4, k4p};
        const PathSet outputs{kT1, kT1p, kT2, kT2p};
        r.unresolved_state = o.conditional_state;
        r.unresolved_factorization_entropy = entanglement_entropy(o.conditional_state, outer);
        r.output_purity = reduced_density(o.conditional_state, outputs).purity();
        r.bell_block_fidelity = reduced_density(o.conditional_state, outer).expectation(swap_bell_target());
    }
    return r;
}

GhzResult run_ghz(double alpha, Convention convention) {
    GhzResult r;
    r.run = run(ghz_pipeline(alpha, convention));
    r.bandwidth_valid = r.run.bandwidth_valid.value_or(false);
    r.per_detector = {{kT, 0.0}, {kTp, 0.0}};
    for (const auto &o : r.run.resolved.outcomes) {
        if (!o.accepted) {
            continue;
        }
        r.heralds.push_back(o);
        const std::string &detector = o.label == kT + "=1 " + kTp + "=0" ? kT : kTp;
        r.per_detector[detector] += o.probability;
        r.total_probability += o.probability;
        if (o.probability > 0.0) {
            double f = o.metrics.at(metric_name(ReportKind::Ghz, 1));
            r.ghz_fidelity = std::min(r.ghz_fidelity.value_or(f), f);
        }
    }
    return r;
}

}  // namespace freqbin
