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

#include "freqbin/dense_oracle.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "freqbin/error.h"

namespace freqbin {

namespace {

using Occupation = std::vector<int>;

// All occupation vectors with `photons` total over `modes` slots, in
// lexicographic order.
void enumerate_sector(int modes, int photons, Occupation &cur, int slot, std::vector<Occupation> &out) {
    if (slot == modes - 1) {
        cur[slot] = photons;
        out.push_back(cur);
        return;
    }
    for (int n = photons; n >= 0; --n) {
        cur[slot] = n;
        enumerate_sector(modes, photons - n, cur, slot + 1, out);
    }
}

std::vector<int> expand(const Occupation &occ) {
    std::vector<int> idx;
    for (int m = 0; m < static_cast<int>(occ.size()); ++m) {
        for (int c = 0; c < occ[m]; ++c) {
            idx.push_back(m);
        }
    }
    return idx;
}

double factorials(const Occupation &occ) {
    double p = 1.0;
    for (int n : occ) {
        p *= std::tgamma(n + 1.0);
    }
    return p;
}

// Permanent by summing over all permutations; n <= 4 keeps this at 24 terms.
Complex permanent(const Eigen::MatrixXcd &u, const std::vector<int> &rows, const std::vector<int> &cols) {
    const int n = static_cast<int>(rows.size());
    if (n == 0) {
        return 1.0;
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Complex total{};
    do {
        Complex prod = 1.0;
        for (int i = 0; i < n; ++i) {
            prod *= u(rows[perm[i]], cols[i]);
        }
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

}  // namespace

ElementResult dense_oracle_apply(const StateVector &s, const ElementOp &op, OracleCaps caps) {
    check_input_frequencies(s, op);

    std::set<ModeLabel> closure;
    std::set<int> sectors;
    for (const auto &[k, a] : s.terms()) {
        for (const auto &[m, c] : k.occupations()) {
            closure.insert(m);
        }
        sectors.insert(k.total_photons());
    }
    for (const auto &in : op.inputs) {
        closure.insert(in.input);
        for (const auto &[m, w] : in.image) {
            closure.insert(m);
        }
    }
    const int num_modes = static_cast<int>(closure.size());
    if (num_modes > caps.max_modes) {
        throw Error(ErrorCode::CapExceeded, std::to_string(num_modes) + " modes exceed the oracle cap");
    }
    if (!sectors.empty() && *sectors.rbegin() > caps.max_photons) {
        throw Error(ErrorCode::CapExceeded, std::to_string(*sectors.rbegin()) + " photons exceed the oracle cap");
    }

    std::vector<ModeLabel> modes(closure.begin(), closure.end());
    std::map<ModeLabel, int> mode_index;
    for (int i = 0; i < num_modes; ++i) {
        mode_index[modes[i]] = i;
    }

    // Single-photon matrix: column j is the image of mode j.
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(num_modes, num_modes);
    for (const auto &in : op.inputs) {
        int col = mode_index.at(in.input);
        u.col(col).setZero();
        for (const auto &[m, w] : in.image) {
            u(mode_index.at(m), col) += w;
        }
    }

    const bool literal = op.renormalizes();
    StateVector out(s.prune_epsilon());
    for (int photons : sectors) {
        std::vector<Occupation> basis;
        if (num_modes == 0) {
            basis.push_back({});
        } else {
            Occupation cur(num_modes, 0);
            enumerate_sector(num_modes, photons, cur, 0, basis);
        }
        const auto dim = static_cast<Eigen::Index>(basis.size());
        std::map<Occupation, Eigen::Index> basis_index;
        for (Eigen::Index i = 0; i < dim; ++i) {
            basis_index[basis[i]] = i;
        }

        Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
        for (const auto &[k, a] : s.terms()) {
            if (k.total_photons() != photons) {
                continue;
            }
            Occupation occ(num_modes, 0);
            for (const auto &[m, c] : k.occupations()) {
                occ[mode_index.at(m)] = c;
            }
            psi(basis_index.at(occ)) = a;
        }

        // Only columns of occupied basis kets contribute to lifted * psi.
        Eigen::MatrixXcd lifted = Eigen::MatrixXcd::Zero(dim, dim);
        for (Eigen::Index col = 0; col < dim; ++col) {
            if (psi(col) == Complex{}) {
                continue;
            }
            std::vector<int> cols = expand(basis[col]);
            for (Eigen::Index row = 0; row < dim; ++row) {
                lifted(row, col) = permanent(u, expand(basis[row]), cols) /
                                   std::sqrt(factorials(basis[row]) * factorials(basis[col]));
            }
            if (literal) {
                double n = lifted.col(col).norm();
                if (n > 0.0) {
                    lifted.col(col) /= n;
                }
            }
        }

        Eigen::VectorXcd result = lifted * psi;
        for (Eigen::Index i = 0; i < dim; ++i) {
            if (result(i) != Complex{}) {
                FockKet k;
                for (int m = 0; m < num_modes; ++m) {
                    if (basis[i][m] > 0) {
                        k.add(modes[m], basis[i][m]);
                    }
                }
                out.add(k, result(i));
            }
        }
    }
    if (literal) {
        double after = out.norm();
        if (after > 0.0) {
            out = out.scaled(s.norm() / after);
        }
    }
    return {std::move(out), literal};
}

}  // namespace freqbin
