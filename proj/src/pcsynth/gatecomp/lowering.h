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

#ifndef PCSYNTH_GATECOMP_LOWERING_H
#define PCSYNTH_GATECOMP_LOWERING_H

#include <span>
#include <string>
#include <vector>

#include "pcsynth/gatecomp/netlist.h"
#include "pcsynth/numerics/local_op.h"
#include "pcsynth/synthesis/circuit_plan.h"

namespace pcsynth {

/// Either a unitary u on basis positions (i, j), i < j, or a phase on position i.
struct TwoLevelFactor {
    enum class Kind { Pair, Phase } kind = Kind::Pair;
    size_t i = 0;
    size_t j = 0;
    /// Pair: 2x2 acting on (i, j) in that order.
    Payload u{};
    /// Phase: e^{i alpha} on position i.
    Complex phase = 1;
};

/// Embeds one factor in the n x n identity.
CMatrix factor_matrix(const TwoLevelFactor &f, size_t n);

/// Factors F_1 ... F_m with F_1 F_2 ... F_m = U. Pairs come first, one per
/// zeroed subdiagonal entry, then the phases of the remaining diagonal.
/// Identity factors are dropped. Throws InputError when U is not unitary within 1e-9.
std::vector<TwoLevelFactor> two_level_decompose(const CMatrix &u);

/// Gates implementing the two-level unitary u on local basis states (i, j).
/// Local bit p lives on wire wires[p], wires[0] most significant. `conditions`
/// are added to the central gate only; the CNOT conjugation cancels on its own
/// when the conditions fail. Sets `roles_swapped` when i has a 0 on the first
/// differing bit.
std::vector<Gate> pair_network(size_t i, size_t j, const Payload &u, std::span<const size_t> wires,
                               std::span<const WireCondition> conditions = {}, bool *roles_swapped = nullptr);

/// Single gate putting phase e^{i alpha} on local basis state k.
Gate phase_gate(size_t k, Complex phase, std::span<const size_t> wires, std::span<const WireCondition> conditions = {});

/// Probe rotations K_a for every register pattern a with nonzero weight.
/// Throws InputError for weights outside [0, 1] or more weights than patterns.
std::vector<Gate> s_block_netlist(std::span<const double> weights, std::span<const size_t> register_wires,
                                  size_t probe, std::span<const WireCondition> conditions = {});

/// Gates for a dense unitary on `wires`.
std::vector<Gate> lower_unitary(const CMatrix &u, std::span<const size_t> wires,
                                std::span<const WireCondition> conditions = {}, size_t *swaps = nullptr,
                                size_t *factors = nullptr);

/// FNV-1a over the plan's layout and exact operator bits, as 16 hex digits.
std::string plan_hash(const CircuitPlan &plan);

GateNetlist lower_plan(const CircuitPlan &plan);

}  // namespace pcsynth

#endif
