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

#include "pcsynth/synthesis/assemble.h"

#include <sstream>

#include "pcsynth/error.h"
#include "pcsynth/numerics/linalg.h"

using namespace pcsynth;

namespace {

std::vector<size_t> concat(std::vector<size_t> a, const std::vector<size_t> &b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::vector<WireCondition> blanks_zero(const CircuitPlan &plan) {
    std::vector<WireCondition> out;
    for (size_t r = 1; r < plan.registers; r++) {
        for (size_t w : plan.register_wires(r)) {
            out.push_back({w, 0});
        }
    }
    return out;
}

PlanStep unitary_step(std::vector<size_t> targets, CMatrix m, std::vector<WireCondition> cond, std::string label) {
    PlanStep s;
    s.kind = StepKind::Unitary;
    s.targets = std::move(targets);
    s.matrix = std::move(m);
    s.conditions = std::move(cond);
    s.label = std::move(label);
    return s;
}

std::string cascade_label(const char *name, size_t stage, bool dagger) {
    return std::string(name) + (dagger ? "^dagger" : "") + " stage " + std::to_string(stage);
}

void push_cascade(CircuitPlan &plan, const CascadePlan &cascade, const char *name, bool dagger, int probe_value) {
    std::vector<WireCondition> cond{{plan.probe(), probe_value}};
    size_t count = cascade.stages.size();
    for (size_t k = 0; k < count; k++) {
        const auto &stage = dagger ? cascade.stages[count - 1 - k] : cascade.stages[k];
        auto targets = concat(plan.register_wires(stage.first_register), plan.register_wires(stage.first_register + 1));
        CMatrix m = dagger ? stage.op.matrix.adjoint() : stage.op.matrix;
        plan.steps.push_back(unitary_step(targets, m, cond, cascade_label(name, dagger ? count - 1 - k : k, dagger)));
    }
}

void push_core(CircuitPlan &plan, const SynthesisResult &r, CoreConstruction construction) {
    auto a1 = plan.register_wires(0);
    auto with_probe = concat(a1, {plan.probe()});
    auto cond = blanks_zero(plan);
    if (construction == CoreConstruction::Isometry) {
        plan.steps.push_back(unitary_step(with_probe, r.core.matrix, cond, "core"));
        return;
    }
    CMatrix v = embedded_rotation_frame(r.spectral.v, r.states.dim());
    plan.steps.push_back(unitary_step(a1, v.adjoint(), cond, "core frame^dagger"));
    PlanStep s;
    s.kind = StepKind::SBlock;
    s.targets = with_probe;
    s.conditions = cond;
    s.weights = r.spectral.m;
    s.label = "core rotation";
    plan.steps.push_back(std::move(s));
    plan.steps.push_back(unitary_step(a1, v, cond, "core frame"));
}

void push_probe_flip(CircuitPlan &plan) {
    if (plan.probe_success == 1) {
        return;
    }
    PlanStep s;
    s.kind = StepKind::PauliX;
    s.targets = {plan.probe()};
    s.label = "probe convention";
    plan.steps.push_back(std::move(s));
}

CVector basis_vector(size_t wires, size_t index) {
    CVector v(size_t{1} << wires);
    v[index] = 1;
    return v;
}

// Index of register-0 pattern `a` with all other registers zero and the probe at `p`.
size_t first_register_index(const CircuitPlan &plan, size_t a, int p) {
    return (a << (plan.wires() - plan.qubits)) | static_cast<size_t>(p);
}

CMatrix padded_rows(const CMatrix &t, size_t rows) {
    return embed_top_left(t, rows, t.cols());
}

void check_options(const SynthesisOptions &options) {
    if (options.probe_success != 0 && options.probe_success != 1) {
        throw InputError("probe success value must be 0 or 1");
    }
}

void require_feasible(const FeasibilityReport &f) {
    if (!f.feasible) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "gamma is infeasible: slack matrix has minimum eigenvalue " << f.min_eigenvalue;
        throw InfeasibleError(msg.str());
    }
}

// Shared tail of both assemblers: core, frames and targets.
void finish(SynthesisResult &r, const CascadePlan &dm, const CMatrix &t_out, const SynthesisOptions &options,
            size_t core_at) {
    size_t n = r.states.size();
    size_t d = r.states.dim();
    r.contract.t_in = padded_rows(dm.final_form().tmat, d);
    r.contract.t_out = t_out;
    r.contract.gamma = r.gamma.gamma;
    r.contract.c = r.spectral.c;
    r.core = options.core == CoreConstruction::Isometry ? build_core_isometry(r.contract)
                                                       : build_core_spectral(r.spectral, r.contract);

    // Insert the core at its slot.
    CircuitPlan tail;
    tail.steps.assign(r.plan.steps.begin() + core_at, r.plan.steps.end());
    r.plan.steps.resize(core_at);
    push_core(r.plan, r, options.core);
    r.tail_begin = r.plan.steps.size();
    r.plan.steps.insert(r.plan.steps.end(), tail.steps.begin(), tail.steps.end());
    validate_plan(r.plan);

    size_t w = r.plan.wires();
    for (size_t j = 0; j < n; j++) {
        CVector v = basis_vector(w, first_register_index(r.plan, j, 0));
        run_steps(r.plan, r.tail_begin, r.plan.steps.size(), v);
        r.failure_frame.push_back(std::move(v));
    }
    for (size_t i = 0; i < n; i++) {
        r.inputs.push_back(machine_input(r.states, i, r.plan.copies_in, r.plan.registers));
    }
}

}  // namespace

CVector pcsynth::machine_input(const StateSet &states, size_t i, size_t copies, size_t registers) {
    CVector v = tensor_power(states.states[i], static_cast<int>(copies));
    CVector blank(size_t{1} << (states.qubits * (registers - copies)));
    blank[0] = 1;
    CVector probe{1, 0};
    return kron(kron(v, blank), probe);
}

SynthesisResult pcsynth::assemble_identification(const StateSet &states, size_t copies,
                                                 const ProbabilityAllocation &gamma, const SynthesisOptions &options) {
    check_options(options);
    if (copies < 1) {
        throw InputError("identification needs at least one copy");
    }
    SynthesisResult r;
    r.states = states;
    r.gamma = gamma;
    r.gamma.mode = Mode::Identification;
    auto xm = gram_power(gram(states), static_cast<int>(copies));
    r.feasibility = check_identification(xm, r.gamma);
    require_feasible(r.feasibility);
    r.spectral = spectral_data(xm, r.feasibility.slack);
    r.base = triangularize(states);

    CircuitPlan &plan = r.plan;
    plan.mode = Mode::Identification;
    plan.qubits = states.qubits;
    plan.registers = copies;
    plan.copies_in = copies;
    plan.copies_out = copies;
    plan.probe_success = options.probe_success;

    size_t d = states.dim();
    auto dm = build_cascade(r.base.form, d, copies);
    for (size_t reg = 0; reg < copies; reg++) {
        plan.steps.push_back(unitary_step(plan.register_wires(reg), r.base.u0, {}, "u0 " + std::to_string(reg)));
    }
    push_cascade(plan, dm, "d_in", false, 0);
    size_t core_at = plan.steps.size();
    push_cascade(plan, dm, "d_in", true, 0);
    push_probe_flip(plan);

    finish(r, dm, embed_top_left(CMatrix::identity(states.size()), d, states.size()), options, core_at);
    for (size_t i = 0; i < states.size(); i++) {
        r.success_targets.push_back(
            basis_vector(plan.wires(), first_register_index(plan, i, 0) | static_cast<size_t>(options.probe_success)));
    }
    return r;
}

SynthesisResult pcsynth::assemble_clone(const StateSet &states, size_t copies_in, size_t copies_out,
                                        const ProbabilityAllocation &gamma, const SynthesisOptions &options) {
    check_options(options);
    if (copies_in < 1 || copies_in >= copies_out) {
        std::ostringstream msg;
        msg << "clone needs 1 <= M < N, got M = " << copies_in << ", N = " << copies_out;
        throw InputError(msg.str());
    }
    SynthesisResult r;
    r.states = states;
    r.gamma = gamma;
    r.gamma.mode = Mode::Clone;
    auto x = gram(states);
    auto xm = gram_power(x, static_cast<int>(copies_in));
    auto xn = gram_power(x, static_cast<int>(copies_out));
    r.feasibility = check_clone(xm, xn, r.gamma);
    require_feasible(r.feasibility);
    r.spectral = spectral_data(xm, r.feasibility.slack);
    r.base = triangularize(states);

    CircuitPlan &plan = r.plan;
    plan.mode = Mode::Clone;
    plan.qubits = states.qubits;
    plan.registers = copies_out;
    plan.copies_in = copies_in;
    plan.copies_out = copies_out;
    plan.probe_success = options.probe_success;

    size_t d = states.dim();
    auto dm = build_cascade(r.base.form, d, copies_in);
    auto dn = build_cascade(r.base.form, d, copies_out);
    for (size_t reg = 0; reg < copies_in; reg++) {
        plan.steps.push_back(unitary_step(plan.register_wires(reg), r.base.u0, {}, "u0 " + std::to_string(reg)));
    }
    push_cascade(plan, dm, "d_in", false, 0);
    size_t core_at = plan.steps.size();
    push_cascade(plan, dn, "d_out", true, 1);
    push_cascade(plan, dm, "d_in", true, 0);
    CMatrix u0_dag = r.base.u0.adjoint();
    for (size_t reg = 0; reg < copies_out; reg++) {
        std::vector<WireCondition> cond;
        if (reg >= copies_in) {
            cond.push_back({plan.probe(), 1});
        }
        plan.steps.push_back(unitary_step(plan.register_wires(reg), u0_dag, cond, "u0^dagger " + std::to_string(reg)));
    }
    push_probe_flip(plan);

    finish(r, dm, padded_rows(dn.final_form().tmat, d), options, core_at);
    for (size_t i = 0; i < states.size(); i++) {
        CVector probe(2);
        probe[static_cast<size_t>(options.probe_success)] = 1;
        r.success_targets.push_back(kron(tensor_power(states.states[i], static_cast<int>(copies_out)), probe));
    }
    return r;
}
