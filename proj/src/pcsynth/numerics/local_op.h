// Copyright 2026 The pcsynth Authors
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

#ifndef PCSYNTH_NUMERICS_LOCAL_OP_H
#define PCSYNTH_NUMERICS_LOCAL_OP_H

#include <span>
#include <vector>

#include "pcsynth/numerics/cmatrix.h"

namespace pcsynth {

/// A wire that must read `value` for a conditioned operator to act.
struct WireCondition {
    size_t wire = 0;
    int value = 1;

    bool operator==(const WireCondition &) const = default;
};

/// Applies `u` (2^k x 2^k) to the k target wires of a register of `wires`
/// qubits, on every basis component whose condition wires match.
///
/// Wire 0 is the most significant bit of a basis index, and targets[0] is the
/// most significant bit of u's local index. Components failing a condition are
/// left alone.
void apply_local(std::span<Complex> state, size_t wires, std::span<const size_t> targets, const CMatrix &u,
                 std::span<const WireCondition> conditions = {});

/// Same, applied to every column of a 2^wires-row matrix.
void apply_local(CMatrix &columns, size_t wires, std::span<const size_t> targets, const CMatrix &u,
                 std::span<const WireCondition> conditions = {});

/// Bit of `wire` in basis index `index`.
inline int wire_bit(size_t index, size_t wires, size_t wire) {
    return static_cast<int>((index >> (wires - 1 - wire)) & 1);
}

/// Rejects duplicate or out-of-range targets and conditions overlapping targets.
void check_wires(size_t wires, std::span<const size_t> targets, std::span<const WireCondition> conditions);

}  // namespace pcsynth

#endif
