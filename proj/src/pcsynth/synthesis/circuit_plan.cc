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

#include "pcsynth/synthesis/circuit_plan.h"

#include <sstream>

#include "pcsynth/error.h"
#include "pcsynth/synthesis/core_unitary.h"

using namespace pcsynth;

std::string_view pcsynth::step_kind_name(StepKind kind) {
    switch (kind) {
        case StepKind::Unitary:
            return "unitary";
        case StepKind::SBlock:
            return "s_block";
        case StepKind::PauliX:
            return "pauli_x";
    }
    return "?";
}

CMatrix PlanStep::local_matrix() const {
    switch (kind) {
        case StepKind::Unitary:
            return matrix;
        case StepKind::PauliX:
            return CMatrix{{0, 1}, {1, 0}};
        case StepKind::SBlock: {
            size_t dim = size_t{1} << targets.size();
            CMatrix s(dim, dim);
            for (size_t a = 0; a < dim / 2; a++) {
                CMatrix k = probe_rotation(a < weights.size() ? weights[a] : 0.0);
                for (size_t p = 0; p < 2; p++) {
                    for (size_t q = 0; q < 2; q++) {
                        s(2 * a + p, 2 * a + q) = k(p, q);
                    }
                }
            }
            return s;
        }
    }
    return {};
}

std::vector<size_t> CircuitPlan::register_wires(size_t r) const {
    std::vector<size_t> out;
    for (size_t k = 0; k < qubits; k++) {
        out.push_back(r * qubits + k);
    }
    return out;
}

void pcsynth::validate_plan(const CircuitPlan &plan) {
    for (size_t s = 0; s < plan.steps.size(); s++) {
        const auto &step = plan.steps[s];
        auto fail = [&](const std::string &why) {
            std::ostringstream msg;
            msg << "plan step " << s << " (" << step.label << "): " << why;
            throw InputError(msg.str());
        };
        try {
            check_wires(plan.wires(), step.targets, step.conditions);
        } catch (const InputError &e) {
            fail(e.what());
        }
        if (step.targets.empty()) {
            fail("no targets");
        }
        if (step.kind == StepKind::PauliX && step.targets.size() != 1) {
            fail("pauli_x needs exactly one target");
        }
        if (step.kind == StepKind::SBlock && step.weights.size() > (size_t{1} << (step.targets.size() - 1))) {
            fail("too many rotation weights");
        }
        CMatrix u = step.local_matrix();
        if (u.rows() != (size_t{1} << step.targets.size()) || !u.is_square()) {
            fail("operator size does not match the target count");
        }
        if (unitarity_error(u) > kStructuralTol) {
            fail("operator is not unitary");
        }
    }
}

void pcsynth::apply_step(const PlanStep &step, std::span<Complex> state, size_t wires) {
    apply_local(state, wires, step.targets, step.local_matrix(), step.conditions);
}

void pcsynth::run_steps(const CircuitPlan &plan, size_t begin, size_t end, std::span<Complex> state) {
    for (size_t s = begin; s < end && s < plan.steps.size(); s++) {
        apply_step(plan.steps[s], state, plan.wires());
    }
}

void pcsynth::run_plan(const CircuitPlan &plan, std::span<Complex> state) {
    run_steps(plan, 0, plan.steps.size(), state);
}

CMatrix pcsynth::plan_matrix(const CircuitPlan &plan) {
    size_t w = plan.wires();
    CMatrix m = CMatrix::identity(size_t{1} << w);
    for (const auto &step : plan.steps) {
        apply_local(m, w, step.targets, step.local_matrix(), step.conditions);
    }
    return m;
}
