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

#ifndef PCSYNTH_STATESET_STATE_SET_H
#define PCSYNTH_STATESET_STATE_SET_H

#include <optional>
#include <vector>

#include "pcsynth/numerics/cmatrix.h"

namespace pcsynth {

/// Smallest singular value of the state column matrix below which states count as dependent.
inline constexpr double kIndependenceTol = 1e-8;

/// The n candidate inputs of a machine: unit vectors over `qubits` two-level particles.
struct StateSet {
    size_t qubits = 0;
    std::vector<CVector> states;
    /// Carried for reporting; synthesis never reads it.
    std::optional<std::vector<double>> priors;

    size_t dim() const {
        return size_t{1} << qubits;
    }
    size_t size() const {
        return states.size();
    }
    /// d x n matrix with the states as columns.
    CMatrix column_matrix() const;
};

/// Checks dimensions, normalizes, and rejects linearly dependent sets.
/// Throws InputError naming the first state that makes the prefix dependent.
StateSet validate_states(std::vector<CVector> raw, size_t qubits, std::optional<std::vector<double>> priors = {});

/// Overlap matrix X[i][j] = <psi_i|psi_j>^copy_power.
struct GramMatrix {
    CMatrix entries;
    int copy_power = 1;

    size_t size() const {
        return entries.rows();
    }
};

GramMatrix gram(const StateSet &states);

/// Entrywise M-th power; the Gram of the M-fold tensor-power states.
GramMatrix gram_power(const GramMatrix &x, int copies);

CVector tensor_power(std::span<const Complex> v, int copies);

/// Materializes |psi_i>^{(x) copies} for every state.
StateSet tensor_power(const StateSet &states, int copies);

}  // namespace pcsynth

#endif
