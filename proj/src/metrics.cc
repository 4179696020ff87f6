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

#include "freqbin/metrics.h"

#include <cmath>
#include <map>

#include "freqbin/error.h"

namespace freqbin {

double DensityMatrix::trace() const {
    return matrix.trace().real();
}

double DensityMatrix::purity() const {
    return (matrix * matrix).trace().real();
}

Eigen::VectorXd DensityMatrix::eigenvalues() const {
    if (matrix.rows() == 0) {
        return {};
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(matrix, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

double DensityMatrix::expectation(const StateVector &psi) const {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        v(static_cast<Eigen::Index>(i)) = psi.amplitude(basis[i]);
    }
    return (v.adjoint() * matrix * v)(0, 0).real();
}

DensityMatrix reduced_density(const StateVector &s, const PathSet &keep_paths) {
    if (!(s.norm_squared() > 0.0)) {
        throw Error(ErrorCode::ZeroState, "reduced density of the zero state");
    }
    // Group amplitudes by the traced-out part: rho = sum_t |psi_t><psi_t|.
    std::map<FockKet, Eigen::Index> index;
    std::map<FockKet, std::vector<std::pair<FockKet, Complex>>> by_env;
    for (const auto &[k, a] : s.terms()) {
        FockKet kept = k.restricted_to(keep_paths);
        index.emplace(kept, 0);
        by_env[k.without(keep_paths)].emplace_back(kept, a);
    }
    DensityMatrix rho;
    for (auto &[k, i] : index) {
        i = static_cast<Eigen::Index>(rho.basis.size());
        rho.basis.push_back(k);
    }
    auto dim = static_cast<Eigen::Index>(rho.basis.size());
    rho.matrix = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto &[env, column] : by_env) {
        for (const auto &[ki, ai] : column) {
            for (const auto &[kj, aj] : column) {
                rho.matrix(index.at(ki), index.at(kj)) += ai * std::conj(aj);
            }
        }
    }
    rho.matrix /= s.norm_squared();
    return rho;
}

double von_neumann_entropy(const Eigen::VectorXd &eigenvalues) {
    double h = 0.0;
    for (double p : eigenvalues) {
        if (p > 0.0) {
            h -= p * std::log2(p);
        }
    }
    return std::max(h, 0.0);
}

double entanglement_entropy(const StateVector &s, const PathSet &partition) {
    return von_neumann_entropy(reduced_density(s, partition).eigenvalues());
}

double ghz_fidelity(const StateVector &s, const FockKet &branch_a, const FockKet &branch_b) {
    if (branch_a == branch_b) {
        throw Error(ErrorCode::SpecInvariant, "GHZ branches must differ");
    }
    double sum = std::abs(s.amplitude(branch_a)) + std::abs(s.amplitude(branch_b));
    return std::min(1.0, 0.5 * sum * sum);
}

}  // namespace freqbin
