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

#ifndef FREQBIN_DENSE_ORACLE_H
#define FREQBIN_DENSE_ORACLE_H

#include "freqbin/element_op.h"
#include "freqbin/state.h"

namespace freqbin {

struct OracleCaps {
    int max_modes = 12;
    int max_photons = 4;
};

/// Applies `op` by building the dense multi-photon transfer matrix over the
/// mode closure of the state and the op, one photon-number sector at a time.
/// Matrix elements are permanents of the single-photon matrix:
///
///   <m| L |n> = perm(U[m, n]) / sqrt(prod m! prod n!)
///
/// Shares no code with apply_element beyond the input-bin check. Throws
/// CapExceeded when the closure is larger than `caps`.
ElementResult dense_oracle_apply(const StateVector &s, const ElementOp &op, OracleCaps caps = {});

}  // namespace freqbin

#endif
