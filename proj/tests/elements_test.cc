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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "freqbin/elements.h"
#include "freqbin/error.h"
#include "test_util.h"

using namespace freqbin;
using freqbin::testing::kInvSqrt2;

namespace {

const Complex kI{0.0, 1.0};

AomSpec aom1(Convention c = Convention::Unitary) {
    return AomSpec{"AOM1", {"2", 1}, {"3", 0}, "T1", "T1'", 1, std::numbers::sqrt2 / 2.0, c};
}

AomSpec aom2(Convention c = Convention::Unitary) {
    return AomSpec{"AOM2", {"3'", 1}, {"2'", 0}, "T2'", "T2", 1, std::numbers::sqrt2 / 2.0, c};
}

AomSpec ghz_aom(Convention c = Convention::Unitary) {
    return AomSpec{"AOM", {"2", 1}, {"3", 0}, "T'", "T", 1, std::numbers::sqrt2 / 2.0, c};
}

StateVector sources() {
    return tensor(make_source({"Phi", {"1", 0}, {"2", 1}, {"1'", 1}, {"2'", 0}}),
                  make_source({"Psi", {"3", 0}, {"4", 1}, {"3'", 1}, {"4'", 0}}));
}

void expect_amp(const StateVector &s, const FockKet &k, Complex expected, double tol = 1e-15) {
    EXPECT_NEAR(std::abs(s.amplitude(k) - expected), 0.0, tol) << k.str() << " in " << s.str();
}

ErrorCode code_of(auto &&fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorCode::CompileError;
}

}  // namespace

TEST(MakeAom, HighInputUnitary) {
    ElementResult r = apply_element(ket({{"2", 1}}), make_aom(aom1()));
    EXPECT_EQ(r.state.size(), 2u);
    expect_amp(r.state, FockKet{{"T1", 1}}, kInvSqrt2);
    expect_amp(r.state, FockKet{{"T1'", 0}}, kI * kInvSqrt2);
    EXPECT_FALSE(r.non_unitary);
}

TEST(MakeAom, LowInputUnitary) {
    ElementResult r = apply_element(ket({{"3", 0}}), make_aom(aom1()));
    expect_amp(r.state, FockKet{{"T1", 1}}, kI * kInvSqrt2);
    expect_amp(r.state, FockKet{{"T1'", 0}}, kInvSqrt2);
}

TEST(MakeAom, HighInputPaperLiteral) {
    ElementResult r = apply_element(ket({{"2", 1}}), make_aom(aom1(Convention::PaperLiteral)));
    expect_amp(r.state, FockKet{{"T1", 1}}, kInvSqrt2);
    expect_amp(r.state, FockKet{{"T1'", 0}}, kInvSqrt2);
    EXPECT_TRUE(r.non_unitary);
}

TEST(MakeAom, InvariantViolations) {
    AomSpec bad_bins = aom1();
    bad_bins.input_b.freq_bin = 1;
    EXPECT_EQ(code_of([&] { make_aom(bad_bins); }), ErrorCode::SpecInvariant);
    AomSpec shared = aom1();
    shared.output_y = "2";
    EXPECT_EQ(code_of([&] { make_aom(shared); }), ErrorCode::SpecInvariant);
    AomSpec t_out = aom1();
    t_out.t_amp = 1.0;
    EXPECT_EQ(code_of([&] { make_aom(t_out); }), ErrorCode::SpecInvariant);
    AomSpec no_shift = aom1();
    no_shift.shift = 0;
    no_shift.input_a.freq_bin = 0;
    EXPECT_EQ(code_of([&] { make_aom(no_shift); }), ErrorCode::SpecInvariant);
}

TEST(MakeAom, UnitaryColumnsOrthonormal) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> t_d(0.01, 0.99);
    for (int i = 0; i < 100; ++i) {
        AomSpec spec = aom1();
        spec.t_amp = t_d(rng);
        spec.shift = 1 + i % 3;
        spec.input_a.freq_bin = spec.input_b.freq_bin + spec.shift;
        ElementOp op = make_aom(spec);
        StateVector ca;
        StateVector cb;
        for (const auto &[m, w] : op.inputs[0].image) {
            ca.add(FockKet{m}, w);
        }
        for (const auto &[m, w] : op.inputs[1].image) {
            cb.add(FockKet{m}, w);
        }
        EXPECT_NEAR(ca.norm(), 1.0, 1e-12);
        EXPECT_NEAR(cb.norm(), 1.0, 1e-12);
        EXPECT_NEAR(std::abs(inner(ca, cb)), 0.0, 1e-12);
    }
}

TEST(ApplyElement, RetainedGhzTermsThroughOneAom) {
    StateVector eq14;
    eq14.add(FockKet{{"1", 0}, {"2", 1}, {"3'", 1}, {"4'", 0}}, 0.5);
    eq14.add(FockKet{{"1'", 1}, {"2'", 0}, {"3", 0}, {"4", 1}}, 0.5);
    const double m = 1.0 / (2.0 * std::sqrt(2.0));
    for (Convention c : {Convention::Unitary, Convention::PaperLiteral}) {
        StateVector out = apply_element(eq14, make_aom(ghz_aom(c))).state;
        ASSERT_EQ(out.size(), 4u);
        for (const auto &[k, a] : out.terms()) {
            EXPECT_NEAR(std::abs(a), m, 1e-15) << k.str();
        }
        const Complex diffracted = c == Convention::Unitary ? kI * m : Complex(m);
        expect_amp(out, FockKet{{"1", 0}, {"T", 0}, {"3'", 1}, {"4'", 0}}, diffracted);
        expect_amp(out, FockKet{{"1", 0}, {"T'", 1}, {"3'", 1}, {"4'", 0}}, m);
        expect_amp(out, FockKet{{"1'", 1}, {"2'", 0}, {"T", 0}, {"4", 1}}, m);
        expect_amp(out, FockKet{{"1'", 1}, {"2'", 0}, {"T'", 1}, {"4", 1}}, diffracted);
    }
}

TEST(ApplyElement, FourPhotonSwapExpansionUnitary) {
    // Hand expansion with t = d = 1/sqrt(2), x = high output, y = low output:
    //   both photons in one AOM: (t x + i d y)(t y + i d x) = i t d (x^2 + y^2)
    //   one photon per AOM: products of (t, i d) pairs.
    StateVector s = apply_element(sources(), make_aom(aom1())).state;
    s = apply_element(s, make_aom(aom2())).state;
    const double q = 0.25;
    const Complex hom = kI / (2.0 * std::sqrt(2.0));
    const FockKet first{{"1", 0}, {"4", 1}};
    const FockKet last{{"1'", 1}, {"4'", 0}};
    expect_amp(s, first.merged(FockKet{{"T1", 1}, {"T1", 1}}), hom);
    expect_amp(s, first.merged(FockKet{{"T1'", 0}, {"T1'", 0}}), hom);
    expect_amp(s, first.merged(FockKet{{"T1", 1}, {"T1'", 0}}), 0.0, 1e-15);
    const FockKet b{{"1", 0}, {"4'", 0}};
    expect_amp(s, b.merged(FockKet{{"T1", 1}, {"T2'", 1}}), q);
    expect_amp(s, b.merged(FockKet{{"T1", 1}, {"T2", 0}}), kI * q);
    expect_amp(s, b.merged(FockKet{{"T1'", 0}, {"T2'", 1}}), kI * q);
    expect_amp(s, b.merged(FockKet{{"T1'", 0}, {"T2", 0}}), -q);
    const FockKet c{{"1'", 1}, {"4", 1}};
    expect_amp(s, c.merged(FockKet{{"T2", 0}, {"T1'", 0}}), q);
    expect_amp(s, c.merged(FockKet{{"T2", 0}, {"T1", 1}}), kI * q);
    expect_amp(s, c.merged(FockKet{{"T2'", 1}, {"T1'", 0}}), kI * q);
    expect_amp(s, c.merged(FockKet{{"T2'", 1}, {"T1", 1}}), -q);
    expect_amp(s, last.merged(FockKet{{"T2'", 1}, {"T2'", 1}}), hom);
    expect_amp(s, last.merged(FockKet{{"T2", 0}, {"T2", 0}}), hom);
    EXPECT_NEAR(s.norm(), 1.0, 1e-12);
}

TEST(ApplyElement, FourPhotonSwapExpansionPaperLiteral) {
    // All-plus images; the doubly occupied AOM image (x + y)^2 / 2 is
    // renormalized to (|x^2> + sqrt(2)|xy> + |y^2>) / 2.
    StateVector s = apply_element(sources(), make_aom(aom1(Convention::PaperLiteral))).state;
    s = apply_element(s, make_aom(aom2(Convention::PaperLiteral))).state;
    const FockKet first{{"1", 0}, {"4", 1}};
    expect_amp(s, first.merged(FockKet{{"T1", 1}, {"T1", 1}}), 0.25, 1e-15);
    expect_amp(s, first.merged(FockKet{{"T1", 1}, {"T1'", 0}}), 0.5 * kInvSqrt2, 1e-15);
    expect_amp(s, first.merged(FockKet{{"T1'", 0}, {"T1'", 0}}), 0.25, 1e-15);
    const FockKet b{{"1", 0}, {"4'", 0}};
    const FockKet c{{"1'", 1}, {"4", 1}};
    for (const FockKet &outer : {b, c}) {
        for (const FockKet &t : {FockKet{{"T1", 1}, {"T2'", 1}}, FockKet{{"T1", 1}, {"T2", 0}},
                                 FockKet{{"T1'", 0}, {"T2'", 1}}, FockKet{{"T1'", 0}, {"T2", 0}}}) {
            expect_amp(s, outer.merged(t), 0.25, 1e-15);
        }
    }
    EXPECT_NEAR(s.norm(), 1.0, 1e-12);
}

TEST(ApplyElement, StateAwayFromInputsUnchanged) {
    StateVector s = ket({{"1", 0}, {"4", 1}});
    for (Convention c : {Convention::Unitary, Convention::PaperLiteral}) {
        ElementResult r = apply_element(s, make_aom(aom1(c)));
        EXPECT_EQ(r.state.terms(), s.terms());
    }
}

TEST(ApplyElement, UnexpectedFrequencyRejected) {
    EXPECT_EQ(code_of([] { apply_element(ket({{"2", 0}}), make_aom(aom1())); }), ErrorCode::UnexpectedFrequency);
    EXPECT_EQ(code_of([] { apply_element(ket({{"3", 1}}), make_aom(aom1())); }), ErrorCode::UnexpectedFrequency);
}

TEST(ApplyElement, DoubleOccupationOnOneInput) {
    const double t = 0.6;
    const double d = 0.8;
    AomSpec spec = aom1();
    spec.t_amp = t;
    StateVector s = apply_element(ket({{"2", 1}, {"2", 1}}), make_aom(spec)).state;
    // (t x + i d y)^2 / sqrt(2) |0>
    expect_amp(s, FockKet{{"T1", 1}, {"T1", 1}}, t * t, 1e-15);
    expect_amp(s, FockKet{{"T1", 1}, {"T1'", 0}}, kI * std::sqrt(2.0) * t * d, 1e-15);
    expect_amp(s, FockKet{{"T1'", 0}, {"T1'", 0}}, -d * d, 1e-15);
}

TEST(ApplyElement, UnitaryPreservesNormAndPhotonNumber) {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 300; ++i) {
        auto circuit = freqbin::testing::random_circuit(rng, i);
        StateVector s = circuit.input;
        for (AomSpec spec : circuit.aoms) {
            spec.convention = Convention::Unitary;
            const int photons = s.terms().begin()->first.total_photons();
            ElementResult r = apply_element(s, make_aom(spec));
            EXPECT_FALSE(r.non_unitary);
            EXPECT_NEAR(r.state.norm(), s.norm(), 1e-12);
            for (const auto &[k, a] : r.state.terms()) {
                EXPECT_EQ(k.total_photons(), photons);
                // Output paths carry only their own bin.
                for (const auto &[m, n] : k.occupations()) {
                    if (m.path == spec.output_x) {
                        EXPECT_EQ(m.freq_bin, spec.input_a.freq_bin);
                    }
                    if (m.path == spec.output_y) {
                        EXPECT_EQ(m.freq_bin, spec.input_b.freq_bin);
                    }
                }
            }
            s = r.state;
        }
    }
}

TEST(ApplyElement, PaperLiteralAlwaysFlagged) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
        auto circuit = freqbin::testing::random_circuit(rng, i);
        AomSpec spec = circuit.aoms[0];
        spec.convention = Convention::PaperLiteral;
        ElementResult r = apply_element(circuit.input, make_aom(spec));
        EXPECT_TRUE(r.non_unitary);
        EXPECT_NEAR(r.state.norm(), circuit.input.norm(), 1e-12);
    }
}

TEST(MakeSource, Amplitudes) {
    SourceSpec spec{"Phi", {"1", 0}, {"2", 1}, {"1'", 1}, {"2'", 0}};
    StateVector s = make_source(spec);
    expect_amp(s, FockKet{{"1", 0}, {"2", 1}}, kInvSqrt2, 1e-15);
    expect_amp(s, FockKet{{"1'", 1}, {"2'", 0}}, kInvSqrt2, 1e-15);

    spec.alpha = 0.0;
    s = make_source(spec);
    EXPECT_EQ(s.size(), 1u);
    expect_amp(s, FockKet{{"1", 0}, {"2", 1}}, 1.0);

    spec.alpha = std::numbers::pi / 3.0;
    s = make_source(spec);
    expect_amp(s, FockKet{{"1", 0}, {"2", 1}}, 0.5, 1e-15);
    expect_amp(s, FockKet{{"1'", 1}, {"2'", 0}}, std::sqrt(3.0) / 2.0, 1e-15);
    EXPECT_NEAR(s.norm(), 1.0, 1e-15);

    spec.alt_arm_2.path = "1";
    EXPECT_EQ(code_of([&] { make_source(spec); }), ErrorCode::SpecInvariant);
}

TEST(ApplyFilter, PassingBinUnchanged) {
    StateVector s;
    s.add(FockKet{{"T", 0}, {"a", 0}}, kInvSqrt2);
    s.add(FockKet{{"T", 0}, {"a", 1}}, kInvSqrt2);
    FilterResult r = apply_filter(s, {"F0", "T", 0, 1.0});
    EXPECT_NEAR(r.survival_probability, 1.0, 1e-15);
    EXPECT_LE(max_amplitude_deviation(r.state, s), 1e-15);
    EXPECT_EQ(code_of([&] { apply_filter(s, {"F1", "T", 1, 1.0}); }), ErrorCode::ZeroState);
}

TEST(ApplyFilter, DetectorBranchesOnOnePath) {
    // Both detector branches written on one path T: bin 0 and bin 1 with
    // equal weight. The bin-0 filter keeps one branch.
    StateVector branch;
    branch.add(FockKet{{"1", 0}, {"3'", 1}, {"4'", 0}}, 1.0);
    branch.add(FockKet{{"1'", 1}, {"2'", 0}, {"4", 1}}, 1.0);
    StateVector s = normalize(tensor(branch, normalize([] {
        StateVector t;
        t.add(FockKet{{"T", 0}}, 1.0);
        t.add(FockKet{{"T", 1}}, 1.0);
        return t;
    }())));
    FilterResult r = apply_filter(s, {"F0", "T", 0, 1.0});
    EXPECT_NEAR(r.survival_probability, 0.5, 1e-15);
    for (const auto &[k, a] : r.state.terms()) {
        EXPECT_EQ(k.count({"T", 0}), 1);
        EXPECT_NEAR(std::abs(a), kInvSqrt2, 1e-15);
    }
}

TEST(ApplyFilter, SeparateDetectorPathsPassUntouchedBranch) {
    StateVector s;
    s.add(FockKet{{"1", 0}, {"T", 0}}, kInvSqrt2);
    s.add(FockKet{{"1", 0}, {"T'", 1}}, kInvSqrt2);
    FilterResult r = apply_filter(s, {"F0", "T", 0, 1.0});
    EXPECT_NEAR(r.survival_probability, 1.0, 1e-15);
}

TEST(CheckBandwidth, PumpMustCoverFilters) {
    EXPECT_TRUE(check_bandwidth({2.0, {1.0, 1.0}}));
    EXPECT_FALSE(check_bandwidth({1.0, {2.0, 1.0}}));
    EXPECT_TRUE(check_bandwidth({1.0, {1.0, 1.0}}));
    EXPECT_TRUE(check_bandwidth({1.0, {}}));
}
