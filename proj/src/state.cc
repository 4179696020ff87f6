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

#include "freqbin/state.h"

#include <cmath>
#include <sstream>

#include "freqbin/error.h"

namespace freqbin {

ModeLabel::ModeLabel(std::string path_, int freq_bin_) : path(std::move(path_)), freq_bin(freq_bin_) {
    if (path.empty()) {
        throw Error(ErrorCode::SpecInvariant, "mode path must be non-empty");
    }
}

std::string ModeLabel::str() const {
    return path + "@" + std::to_string(freq_bin);
}

FockKet::FockKet(std::span<const ModeLabel> modes) {
    for (const auto &m : modes) {
        add(m);
    }
}

FockKet::FockKet(std::initializer_list<ModeLabel> modes) : FockKet(std::span<const ModeLabel>(modes.begin(), modes.size())) {
}

void FockKet::add(const ModeLabel &mode, int count) {
    if (mode.path.empty()) {
        throw Error(ErrorCode::SpecInvariant, "mode path must be non-empty");
    }
    int n = count + this->count(mode);
    if (n < 0) {
        throw Error(ErrorCode::SpecInvariant, "negative occupation on " + mode.str());
    }
    if (n == 0) {
        occ_.erase(mode);
    } else {
        occ_[mode] = n;
    }
}

int FockKet::count(const ModeLabel &mode) const {
    auto it = occ_.find(mode);
    return it == occ_.end() ? 0 : it->second;
}

int FockKet::total_photons() const {
    int n = 0;
    for (const auto &[m, c] : occ_) {
        n += c;
    }
    return n;
}

int FockKet::photons_on(const PathSet &paths) const {
    int n = 0;
    for (const auto &[m, c] : occ_) {
        if (paths.contains(m.path)) {
            n += c;
        }
    }
    return n;
}

PathSet FockKet::paths() const {
    PathSet out;
    for (const auto &[m, c] : occ_) {
        out.insert(m.path);
    }
    return out;
}

FockKet FockKet::restricted_to(const PathSet &paths) const {
    FockKet out;
    for (const auto &[m, c] : occ_) {
        if (paths.contains(m.path)) {
            out.occ_.emplace(m, c);
        }
    }
    return out;
}

FockKet FockKet::without(const PathSet &paths) const {
    FockKet out;
    for (const auto &[m, c] : occ_) {
        if (!paths.contains(m.path)) {
            out.occ_.emplace(m, c);
        }
    }
    return out;
}

FockKet FockKet::merged(const FockKet &other) const {
    FockKet out = *this;
    for (const auto &[m, c] : other.occ_) {
        out.add(m, c);
    }
    return out;
}

double FockKet::factorial_product() const {
    double p = 1.0;
    for (const auto &[m, c] : occ_) {
        p *= std::tgamma(c + 1.0);
    }
    return p;
}

std::string FockKet::str() const {
    if (occ_.empty()) {
        return "|vac>";
    }
    std::ostringstream out;
    out << "|";
    bool first = true;
    for (const auto &[m, c] : occ_) {
        if (!first) {
            out << ",";
        }
        first = false;
        out << m.str();
        if (c != 1) {
            out << "^" << c;
        }
    }
    out << ">";
    return out.str();
}

StateVector::StateVector(double prune_epsilon) : prune_epsilon_(prune_epsilon) {
    if (!(prune_epsilon >= 0.0)) {
        throw Error(ErrorCode::SpecInvariant, "prune epsilon must be non-negative");
    }
}

StateVector::StateVector(Terms terms, double prune_epsilon) : StateVector(prune_epsilon) {
    for (auto &[k, a] : terms) {
        if (std::abs(a) > prune_epsilon_) {
            terms_.emplace(k, a);
        }
    }
}

void StateVector::add(const FockKet &ket, Complex amplitude) {
    auto [it, inserted] = terms_.try_emplace(ket, Complex{0.0, 0.0});
    it->second += amplitude;
    if (std::abs(it->second) <= prune_epsilon_) {
        terms_.erase(it);
    }
}

Complex StateVector::amplitude(const FockKet &ket) const {
    auto it = terms_.find(ket);
    return it == terms_.end() ? Complex{} : it->second;
}

double StateVector::norm_squared() const {
    double n = 0.0;
    for (const auto &[k, a] : terms_) {
        n += std::norm(a);
    }
    return n;
}

double StateVector::norm() const {
    return std::sqrt(norm_squared());
}

PathSet StateVector::paths() const {
    PathSet out;
    for (const auto &[k, a] : terms_) {
        out.merge(k.paths());
    }
    return out;
}

StateVector StateVector::scaled(Complex factor) const {
    Terms t;
    for (const auto &[k, a] : terms_) {
        t.emplace(k, a * factor);
    }
    return StateVector(std::move(t), prune_epsilon_);
}

std::string StateVector::str() const {
    std::ostringstream out;
    out.precision(6);
    bool first = true;
    for (const auto &[k, a] : terms_) {
        if (!first) {
            out << " + ";
        }
        first = false;
        out << "(" << a.real() << (a.imag() < 0 ? "-" : "+") << std::abs(a.imag()) << "i)" << k.str();
    }
    return first ? "0" : out.str();
}

StateVector ket(std::span<const ModeLabel> modes) {
    StateVector s;
    s.add(FockKet(modes), 1.0);
    return s;
}

StateVector ket(std::initializer_list<ModeLabel> modes) {
    return ket(std::span<const ModeLabel>(modes.begin(), modes.size()));
}

StateVector tensor(const StateVector &a, const StateVector &b) {
    PathSet pa = a.paths();
    for (const auto &p : b.paths()) {
        if (pa.contains(p)) {
            throw Error(ErrorCode::OverlappingPaths, "path '" + p + "' appears in both factors");
        }
    }
    StateVector out(std::max(a.prune_epsilon(), b.prune_epsilon()));
    for (const auto &[ka, xa] : a.terms()) {
        for (const auto &[kb, xb] : b.terms()) {
            out.add(ka.merged(kb), xa * xb);
        }
    }
    return out;
}

Complex inner(const StateVector &a, const StateVector &b) {
    const auto &small = a.size() <= b.size() ? a : b;
    const auto &large = a.size() <= b.size() ? b : a;
    Complex acc{};
    for (const auto &[k, x] : small.terms()) {
        Complex y = large.amplitude(k);
        acc += (&small == &a) ? std::conj(x) * y : std::conj(y) * x;
    }
    return acc;
}

StateVector normalize(const StateVector &s) {
    double n = s.norm();
    if (!(n > 0.0)) {
        throw Error(ErrorCode::ZeroState, "cannot normalize the zero state");
    }
    return s.scaled(1.0 / n);
}

double max_amplitude_deviation(const StateVector &a, const StateVector &b) {
    double worst = 0.0;
    for (const auto &[k, x] : a.terms()) {
        worst = std::max(worst, std::abs(x - b.amplitude(k)));
    }
    for (const auto &[k, y] : b.terms()) {
        if (a.terms().find(k) == a.terms().end()) {
            worst = std::max(worst, std::abs(y));
        }
    }
    return worst;
}

StateVector drop_paths(const StateVector &s, const PathSet &paths) {
    StateVector out(s.prune_epsilon());
    const FockKet *common = nullptr;
    FockKet first;
    for (const auto &[k, a] : s.terms()) {
        FockKet part = k.restricted_to(paths);
        if (common == nullptr) {
            first = part;
            common = &first;
        } else if (part != *common) {
            throw Error(ErrorCode::NotFactorizable,
                        "terms disagree on dropped paths: " + common->str() + " vs " + part.str());
        }
        out.add(k.without(paths), a);
    }
    return out;
}

}  // namespace freqbin
