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

#ifndef PCSYNTH_GATECOMP_NETLIST_H
#define PCSYNTH_GATECOMP_NETLIST_H

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pcsynth/numerics/cmatrix.h"

namespace pcsynth {

enum class GateKind { X, CNOT, MCU };

struct Control {
    size_t wire = 0;
    /// Bit value the control wire must read.
    int polarity = 1;

    bool operator==(const Control &) const = default;
};

/// Row-major 2x2 payload u00 u01 u10 u11.
using Payload = std::array<Complex, 4>;

inline constexpr Payload kPauliX{Complex(0), Complex(1), Complex(1), Complex(0)};

struct Gate {
    GateKind kind = GateKind::X;
    size_t target = 0;
    /// CNOT: exactly one control of polarity 1. X: none.
    std::vector<Control> controls;
    /// MCU only; X and CNOT imply Pauli X.
    Payload u = kPauliX;
    /// Comment lines written just before this gate.
    std::vector<std::string> notes;

    Payload payload() const {
        return kind == GateKind::MCU ? u : kPauliX;
    }
};

/// MCU with the given controls; X and CNOT when the payload is exactly Pauli X
/// with no controls or one positive control.
Gate make_controlled(size_t target, std::vector<Control> controls, const Payload &u);

struct GateNetlist {
    size_t wires = 0;
    size_t probe = 0;
    std::vector<Gate> gates;
    /// Hash of the source plan, empty when unknown.
    std::string source_hash;
    /// Comment lines after the last gate.
    std::vector<std::string> trailing_notes;
};

/// Rejects bad wire indices, targets among controls, repeated controls and
/// non-unitary payloads.
void validate_netlist(const GateNetlist &netlist);

/// Text form: header `wires W probe P`, `# plan <hash>`, then one gate per line.
std::string netlist_to_text(const GateNetlist &netlist);

/// Inverse of netlist_to_text; throws InputError naming the offending line.
GateNetlist parse_netlist(std::string_view text);

/// Applies one gate to a 2^wires statevector.
void apply_gate(const Gate &gate, std::span<Complex> state, size_t wires);

void run_netlist(const GateNetlist &netlist, std::span<Complex> state);

/// Largest wire count netlist_matrix accepts.
inline constexpr size_t kMaxDenseWires = 12;

/// Dense matrix of the whole netlist, wire 0 most significant.
CMatrix netlist_matrix(const GateNetlist &netlist);

/// Replaces every polarity-0 control by X gates on both sides of the gate.
GateNetlist expand_polarities(const GateNetlist &netlist);

struct GateCounts {
    size_t x = 0;
    size_t cnot = 0;
    size_t mcu = 0;
    size_t max_controls = 0;
};

GateCounts count_gates(const GateNetlist &netlist);

}  // namespace pcsynth

#endif
