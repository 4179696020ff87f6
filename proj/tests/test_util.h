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

#ifndef FREQBIN_TESTS_TEST_UTIL_H
#define FREQBIN_TESTS_TEST_UTIL_H

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "freqbin/elements.h"
#include "freqbin/herald.h"
#include "freqbin/state.h"

namespace freqbin::testing {

inline const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

inline Complex random_complex(std::mt19937_64 &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    return {g(rng), g(rng)};
}

/// Random normalized superposition of `terms` kets, each placing `photons`
/// photons uniformly over `modes`.
inline StateVector random_state(std::mt19937_64 &rng, const std::vector<ModeLabel> &modes, int photons, int terms) {
    std::uniform_int_distribution<std::size_t> pick(0, modes.size() - 1);
    StateVector s;
    for (int t = 0; t < terms; ++t) {
        FockKet k;
        for (int p = 0; p < photons; ++p) {
            k.add(modes[pick(rng)]);
        }
        s.add(k, random_complex(rng));
    }
    return normalize(s);
}

/// A random two-path split of the paths present in `s`.
inline PathSet random_partition(std::mt19937_64 &rng, const StateVector &s) {
    PathSet out;
    std::bernoulli_distribution coin(0.5);
    for (const auto &p : s.paths()) {
        if (coin(rng)) {
            out.insert(p);
        }
    }
    return out;
}

/// A small random circuit: one or two AOMs (the second either on fresh
/// inputs or chained onto the first one's outputs) plus spectator paths,
/// and a random input state of at most four photons on at most 12 modes.
struct RandomCircuit {
    std::vector<AomSpec> aoms;
    StateVector input;
};

inline RandomCircuit random_circuit(std::mt19937_64 &rng, int index) {
    std::uniform_int_distribution<int> shift_d(1, 2);
    std::uniform_int_distribution<int> bin_d(-2, 2);
    std::uniform_real_distribution<double> t_d(0.1, 0.9);
    std::bernoulli_distribution coin(0.5);
    const std::string tag = "c" + std::to_string(index) + "_";

    auto random_aom = [&](const std::string &name, ModeLabel a, ModeLabel b, std::string x, std::string y, int shift) {
        AomSpec spec;
        spec.name = name;
        spec.input_a = std::move(a);
        spec.input_b = std::move(b);
        spec.output_x = std::move(x);
        spec.output_y = std::move(y);
        spec.shift = shift;
        spec.t_amp = coin(rng) ? std::sqrt(0.5) : t_d(rng);
        spec.convention = coin(rng) ? Convention::Unitary : Convention::PaperLiteral;
        return spec;
    };

    RandomCircuit c;
    std::vector<ModeLabel> occupiable;
    const int shift = shift_d(rng);
    const int low = bin_d(rng);
    c.aoms.push_back(random_aom(tag + "A1", {tag + "a", low + shift}, {tag + "b", low}, tag + "x", tag + "y", shift));
    occupiable.push_back(c.aoms[0].input_a);
    occupiable.push_back(c.aoms[0].input_b);
    if (coin(rng)) {
        if (coin(rng)) {
            c.aoms.push_back(random_aom(tag + "A2", {tag + "x", low + shift}, {tag + "y", low}, tag + "u", tag + "v",
                                        shift));
        } else {
            const int shift2 = shift_d(rng);
            const int low2 = bin_d(rng);
            c.aoms.push_back(random_aom(tag + "A2", {tag + "c", low2 + shift2}, {tag + "d", low2}, tag + "u",
                                        tag + "v", shift2));
            occupiable.push_back(c.aoms[1].input_a);
            occupiable.push_back(c.aoms[1].input_b);
        }
    }
    std::uniform_int_distribution<int> spectators(0, 3);
    const int n_spec = spectators(rng);
    for (int i = 0; i < n_spec; ++i) {
        occupiable.push_back({tag + "s" + std::to_string(i), bin_d(rng)});
    }
    std::uniform_int_distribution<int> photons(1, 4);
    std::uniform_int_distribution<int> terms(1, 6);
    c.input = random_state(rng, occupiable, photons(rng), terms(rng));
    return c;
}

}  // namespace freqbin::testing

#endif
