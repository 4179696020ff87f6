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

#ifndef FREQBIN_STATE_H
#define FREQBIN_STATE_H

#include <complex>
#include <compare>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace freqbin {

using Complex = std::complex<double>;
using PathSet = std::set<std::string>;

/// A single-photon mode: a spatial path and an integer frequency bin.
/// Bin n stands for the frequency w + n*delta on an implicit grid.
struct ModeLabel {
    std::string path;
    int freq_bin = 0;

    ModeLabel() = default;
    ModeLabel(std::string path, int freq_bin);

    auto operator<=>(const ModeLabel &) const = default;
    bool operator==(const ModeLabel &) const = default;

    /// "path@bin"
    std::string str() const;
};

/// Canonical multi-photon basis state. Absent modes hold zero photons; no
/// zero counts are ever stored, so equal occupations mean equal kets.
class FockKet {
   public:
    using Occupations = std::map<ModeLabel, int>;

    FockKet() = default;
    explicit FockKet(std::span<const ModeLabel> modes);
    FockKet(std::initializer_list<ModeLabel> modes);

    /// Adds `count` photons to `mode`. Count may be negative as long as the
    /// result is not.
    void add(const ModeLabel &mode, int count = 1);

    int count(const ModeLabel &mode) const;
    int total_photons() const;
    int photons_on(const PathSet &paths) const;
    const Occupations &occupations() const { return occ_; }
    bool empty() const { return occ_.empty(); }
    PathSet paths() const;

    /// Modes whose path is in `paths`.
    FockKet restricted_to(const PathSet &paths) const;
    /// Modes whose path is not in `paths`.
    FockKet without(const PathSet &paths) const;
    FockKet merged(const FockKet &other) const;

    /// Product of n! over the occupations.
    double factorial_product() const;

    auto operator<=>(const FockKet &) const = default;
    bool operator==(const FockKet &) const = default;

    std::string str() const;

   private:
    Occupations occ_;
};

/// Sparse superposition of Fock kets. Terms whose magnitude is at or below
/// the prune threshold are not stored.
class StateVector {
   public:
    using Terms = std::map<FockKet, Complex>;

    StateVector() = default;
    explicit StateVector(double prune_epsilon);
    StateVector(Terms terms, double prune_epsilon = 0.0);

    /// Accumulates `amplitude` onto `ket`.
    void add(const FockKet &ket, Complex amplitude);

    Complex amplitude(const FockKet &ket) const;
    const Terms &terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    double prune_epsilon() const { return prune_epsilon_; }

    double norm_squared() const;
    double norm() const;
    PathSet paths() const;
    StateVector scaled(Complex factor) const;

    std::string str() const;

   private:
    Terms terms_;
    double prune_epsilon_ = 0.0;
};

StateVector ket(std::span<const ModeLabel> modes);
StateVector ket(std::initializer_list<ModeLabel> modes);

/// Joint state of two systems on disjoint paths.
StateVector tensor(const StateVector &a, const StateVector &b);

/// <a|b>, conjugate-linear in a.
Complex inner(const StateVector &a, const StateVector &b);

StateVector normalize(const StateVector &s);

/// Largest per-ket amplitude difference, treating absent kets as zero.
double max_amplitude_deviation(const StateVector &a, const StateVector &b);

/// Removes the modes on `paths` from every ket. Requires every term to carry
/// the same sub-ket on those paths, so the dropped part factors out.
StateVector drop_paths(const StateVector &s, const PathSet &paths);

}  // namespace freqbin

#endif
