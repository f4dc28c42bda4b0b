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

#ifndef PCSYNTH_SYNTHESIS_CIRCUIT_PLAN_H
#define PCSYNTH_SYNTHESIS_CIRCUIT_PLAN_H

#include <span>
#include <string>
#include <vector>

#include "pcsynth/feasibility/feasibility.h"
#include "pcsynth/numerics/cmatrix.h"
#include "pcsynth/numerics/local_op.h"

namespace pcsynth {

enum class StepKind {
    /// Dense unitary on the target wires.
    Unitary,
    /// Probe rotation by sqrt(m_a) selected by the register pattern a; the probe is the last target.
    SBlock,
    /// Bit flip on a single target.
    PauliX,
};

std::string_view step_kind_name(StepKind kind);

struct PlanStep {
    StepKind kind = StepKind::Unitary;
    std::vector<size_t> targets;
    std::vector<WireCondition> conditions;
    /// Unitary steps only.
    CMatrix matrix;
    /// SBlock steps only; one weight per register pattern (missing patterns use 0).
    std::vector<double> weights;
    std::string label;

    /// The 2^k x 2^k operator this step applies to its targets.
    CMatrix local_matrix() const;
};

/// Wire layout: `registers` blocks of `qubits` wires, then the probe.
struct CircuitPlan {
    Mode mode = Mode::Identification;
    size_t qubits = 0;
    size_t registers = 0;
    size_t copies_in = 0;
    size_t copies_out = 0;
    /// Probe value that flags success after the final step.
    int probe_success = 1;
    std::vector<PlanStep> steps;

    size_t wires() const {
        return registers * qubits + 1;
    }
    size_t probe() const {
        return registers * qubits;
    }
    std::vector<size_t> register_wires(size_t r) const;
};

/// Checks wire ranges, target/condition overlap, operator sizes and unitarity.
void validate_plan(const CircuitPlan &plan);

void apply_step(const PlanStep &step, std::span<Complex> state, size_t wires);

/// Runs the plan on a 2^wires statevector in place.
void run_plan(const CircuitPlan &plan, std::span<Complex> state);
/// Runs steps [begin, end) only.
void run_steps(const CircuitPlan &plan, size_t begin, size_t end, std::span<Complex> state);

/// Dense 2^w x 2^w product of all steps.
CMatrix plan_matrix(const CircuitPlan &plan);

}  // namespace pcsynth

#endif
