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

#include "pcsynth/numerics/local_op.h"

#include <sstream>

#include "pcsynth/error.h"

using namespace pcsynth;

namespace {

struct LocalLayout {
    // Index offsets of each local basis state relative to a base index.
    std::vector<size_t> offsets;
    size_t target_mask = 0;
    size_t cond_mask = 0;
    size_t cond_value = 0;
};

LocalLayout layout_for(size_t wires, std::span<const size_t> targets, std::span<const WireCondition> conditions) {
    LocalLayout l;
    size_t k = targets.size();
    l.offsets.assign(size_t{1} << k, 0);
    for (size_t local = 0; local < l.offsets.size(); local++) {
        size_t off = 0;
        for (size_t t = 0; t < k; t++) {
            if ((local >> (k - 1 - t)) & 1) {
                off |= size_t{1} << (wires - 1 - targets[t]);
            }
        }
        l.offsets[local] = off;
    }
    for (size_t t : targets) {
        l.target_mask |= size_t{1} << (wires - 1 - t);
    }
    for (const auto &c : conditions) {
        size_t bit = size_t{1} << (wires - 1 - c.wire);
        l.cond_mask |= bit;
        if (c.value) {
            l.cond_value |= bit;
        }
    }
    return l;
}

void apply_with_layout(std::span<Complex> state, const LocalLayout &l, const CMatrix &u, std::vector<Complex> &buf) {
    size_t dim = l.offsets.size();
    for (size_t base = 0; base < state.size(); base++) {
        if ((base & l.target_mask) != 0 || (base & l.cond_mask) != l.cond_value) {
            continue;
        }
        bool nonzero = false;
        for (size_t a = 0; a < dim; a++) {
            buf[a] = state[base + l.offsets[a]];
            nonzero = nonzero || buf[a] != Complex(0);
        }
        if (!nonzero) {
            continue;
        }
        for (size_t r = 0; r < dim; r++) {
            Complex acc = 0;
            for (size_t a = 0; a < dim; a++) {
                acc += u(r, a) * buf[a];
            }
            state[base + l.offsets[r]] = acc;
        }
    }
}

}  // namespace

void pcsynth::check_wires(size_t wires, std::span<const size_t> targets, std::span<const WireCondition> conditions) {
    std::vector<bool> used(wires, false);
    auto claim = [&](size_t w, const char *what) {
        if (w >= wires) {
            std::ostringstream msg;
            msg << what << " wire " << w << " is out of range for " << wires << " wires";
            throw InputError(msg.str());
        }
        if (used[w]) {
            std::ostringstream msg;
            msg << what << " wire " << w << " is used twice";
            throw InputError(msg.str());
        }
        used[w] = true;
    };
    for (size_t t : targets) {
        claim(t, "target");
    }
    for (const auto &c : conditions) {
        claim(c.wire, "condition");
        if (c.value != 0 && c.value != 1) {
            throw InputError("condition value must be 0 or 1");
        }
    }
}

void pcsynth::apply_local(std::span<Complex> state, size_t wires, std::span<const size_t> targets, const CMatrix &u,
                          std::span<const WireCondition> conditions) {
    check_wires(wires, targets, conditions);
    size_t dim = size_t{1} << targets.size();
    if (u.rows() != dim || u.cols() != dim) {
        throw InputError("apply_local: operator size does not match the target count");
    }
    if (state.size() != (size_t{1} << wires)) {
        throw InputError("apply_local: state length does not match the wire count");
    }
    auto l = layout_for(wires, targets, conditions);
    std::vector<Complex> buf(dim);
    apply_with_layout(state, l, u, buf);
}

void pcsynth::apply_local(CMatrix &columns, size_t wires, std::span<const size_t> targets, const CMatrix &u,
                          std::span<const WireCondition> conditions) {
    if (columns.rows() != (size_t{1} << wires)) {
        throw InputError("apply_local: row count does not match the wire count");
    }
    // Work on the transpose so each column is contiguous.
    size_t rows = columns.rows();
    size_t cols = columns.cols();
    std::vector<Complex> col(rows);
    for (size_t c = 0; c < cols; c++) {
        for (size_t r = 0; r < rows; r++) {
            col[r] = columns(r, c);
        }
        apply_local(std::span<Complex>(col), wires, targets, u, conditions);
        for (size_t r = 0; r < rows; r++) {
            columns(r, c) = col[r];
        }
    }
}
