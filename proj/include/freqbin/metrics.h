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

#ifndef FREQBIN_METRICS_H
#define FREQBIN_METRICS_H

#include <Eigen/Dense>
#include <vector>

#include "freqbin/state.h"

namespace freqbin {

/// Dense density matrix over an explicit, ordered list of Fock kets.
struct DensityMatrix {
    std::vector<FockKet> basis;
    Eigen::MatrixXcd matrix;

    double trace() const;
    double purity() const;
    /// Ascending eigenvalues.
    Eigen::VectorXd eigenvalues() const;
    /// <psi|rho|psi> for a pure state over the same paths.
    double expectation(const StateVector &psi) const;
};

/// Partial trace over every mode whose path is not in `keep_paths`.
DensityMatrix reduced_density(const StateVector &s, const PathSet &keep_paths);

/// Von Neumann entropy in bits of the reduction onto `partition`.
double entanglement_entropy(const StateVector &s, const PathSet &partition);

/// Entropy in bits of a spectrum; non-positive values contribute nothing.
double von_neumann_entropy(const Eigen::VectorXd &eigenvalues);

/// Best overlap with (|a> + e^{i phi}|b>)/sqrt(2) over all phases phi.
double ghz_fidelity(const StateVector &s, const FockKet &branch_a, const FockKet &branch_b);

}  // namespace freqbin

#endif
