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

#include "pcsynth/simulator/simulator.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "pcsynth/error.h"

using namespace pcsynth;

namespace {

// Below this success probability there is no branch to renormalize.
constexpr double kEmptyBranch = 1e-14;

double sq_norm(std::span<const Complex> v) {
    double acc = 0;
    for (Complex z : v) {
        acc += std::norm(z);
    }
    return acc;
}

CVector probe_branch(const CVector &v, int value) {
    CVector out(v.size());
    for (size_t k = 0; k < v.size(); k++) {
        if (static_cast<int>(k & 1) == value) {
            out[k] = v[k];
        }
    }
    return out;
}

void check_length(size_t wires, const CVector &amps) {
    if (amps.size() != (size_t{1} << wires)) {
        std::ostringstream msg;
        msg << "state has " << amps.size() << " amplitudes, " << wires << " wires need " << (size_t{1} << wires);
        throw InputError(msg.str());
    }
}

// Full-register input with every blank register in `blank`.
CVector perturbed_input(const SynthesisResult &r, size_t i, const CVector &blank) {
    CVector v = tensor_power(r.states.states[i], static_cast<int>(r.plan.copies_in));
    for (size_t b = r.plan.copies_in; b < r.plan.registers; b++) {
        v = kron(v, blank);
    }
    return kron(v, CVector{1, 0});
}

double detection_probability(const SynthesisResult &r, const CVector &out) {
    const CircuitPlan &p = r.plan;
    size_t blank_bits = p.qubits * (p.registers - p.copies_in);
    size_t blank_mask = ((size_t{1} << blank_bits) - 1) << 1;
    int fail = r.probe_failure();
    double acc = 0;
    for (size_t k = 0; k < out.size(); k++) {
        if (static_cast<int>(k & 1) == fail && (k & blank_mask) != 0) {
            acc += std::norm(out[k]);
        }
    }
    return acc;
}

}  // namespace

StateVector StateVector::basis(size_t wires, size_t index) {
    StateVector s;
    s.wires = wires;
    s.amplitudes.assign(size_t{1} << wires, 0);
    if (index >= s.amplitudes.size()) {
        throw InputError("basis index out of range");
    }
    s.amplitudes[index] = 1;
    return s;
}

StateVector StateVector::from(size_t wires, CVector amplitudes) {
    check_length(wires, amplitudes);
    StateVector s;
    s.wires = wires;
    s.amplitudes = std::move(amplitudes);
    if (std::abs(s.norm() - 1) > kStructuralTol) {
        throw InputError("state is not normalized");
    }
    return s;
}

double StateVector::norm() const {
    return std::sqrt(sq_norm(amplitudes));
}

Executor pcsynth::netlist_executor(const GateNetlist &netlist) {
    return [&netlist](std::span<Complex> v) {
        run_netlist(netlist, v);
    };
}

Executor pcsynth::plan_executor(const CircuitPlan &plan) {
    return [&plan](std::span<Complex> v) {
        run_plan(plan, v);
    };
}

StateVector pcsynth::run(const GateNetlist &netlist, StateVector input) {
    if (input.wires != netlist.wires) {
        throw InputError("state wire count does not match the netlist");
    }
    check_length(input.wires, input.amplitudes);
    run_netlist(netlist, input.amplitudes);
    return input;
}

StateVector pcsynth::run(const CircuitPlan &plan, StateVector input) {
    if (input.wires != plan.wires()) {
        throw InputError("state wire count does not match the plan");
    }
    check_length(input.wires, input.amplitudes);
    run_plan(plan, input.amplitudes);
    return input;
}

double BranchReport::worst_residual() const {
    return std::max({worst_gamma_error, worst_fidelity_defect, worst_amplitude_error, worst_failure_error,
                     worst_leakage, worst_norm_error});
}

bool BranchReport::passes(double tol) const {
    return worst_residual() <= tol;
}

BranchReport pcsynth::analyze(const SynthesisResult &reference, const Executor &exec) {
    BranchReport rep;
    size_t n = reference.states.size();
    for (size_t i = 0; i < n; i++) {
        CVector out = reference.inputs[i];
        exec(out);
        StateRecord rec;
        rec.expected_gamma = reference.gamma.gamma[i];
        CVector succ = probe_branch(out, reference.plan.probe_success);
        CVector fail = probe_branch(out, reference.probe_failure());
        rec.success_probability = sq_norm(succ);
        rec.failure_probability = sq_norm(fail);
        rec.norm_error = std::abs(rec.success_probability + rec.failure_probability - 1);
        rec.success_amplitude = inner(reference.success_targets[i], succ);
        if (rec.success_probability > kEmptyBranch) {
            rec.success_fidelity = std::norm(rec.success_amplitude) / rec.success_probability;
        } else {
            rec.success_fidelity = rec.expected_gamma <= kEmptyBranch ? 1.0 : 0.0;
        }
        CVector rest = fail;
        for (size_t j = 0; j < n; j++) {
            const CVector &alpha = reference.failure_frame[j];
            Complex coord = inner(alpha, fail);
            rec.failure_coordinates.push_back(coord);
            rec.failure_coordinate_error =
                std::max(rec.failure_coordinate_error, std::abs(coord - reference.spectral.c(j, i)));
            for (size_t k = 0; k < rest.size(); k++) {
                rest[k] -= coord * alpha[k];
            }
        }
        rec.leakage = std::sqrt(sq_norm(rest));

        rep.worst_gamma_error = std::max(rep.worst_gamma_error, std::abs(rec.success_probability - rec.expected_gamma));
        rep.worst_fidelity_defect = std::max(rep.worst_fidelity_defect, 1 - rec.success_fidelity);
        rep.worst_amplitude_error =
            std::max(rep.worst_amplitude_error, std::abs(rec.success_amplitude - std::sqrt(rec.expected_gamma)));
        rep.worst_failure_error = std::max(rep.worst_failure_error, rec.failure_coordinate_error);
        rep.worst_leakage = std::max(rep.worst_leakage, rec.leakage);
        rep.worst_norm_error = std::max(rep.worst_norm_error, rec.norm_error);
        rep.states.push_back(std::move(rec));
    }
    return rep;
}

CVector pcsynth::perturbed_blank(const PerturbationSpec &spec, size_t dim) {
    if (spec.delta.size() + 1 > dim) {
        std::ostringstream msg;
        msg << "perturbation has " << spec.delta.size() << " error amplitudes, the blank register allows "
            << dim - 1;
        throw InputError(msg.str());
    }
    if (spec.tau.size() > spec.delta.size() + 1) {
        throw InputError("perturbation has more phases than amplitudes");
    }
    double mass = 0;
    for (double d : spec.delta) {
        if (!std::isfinite(d) || d < 0) {
            throw InputError("perturbation amplitudes must be finite and nonnegative");
        }
        mass += d * d;
    }
    if (!(mass < 1)) {
        throw InputError("perturbation amplitudes must satisfy sum delta^2 < 1");
    }
    auto tau = [&](size_t k) {
        return k < spec.tau.size() ? spec.tau[k] : 0.0;
    };
    CVector v(dim);
    v[0] = std::polar(std::sqrt(1 - mass), tau(0));
    for (size_t k = 0; k < spec.delta.size(); k++) {
        v[k + 1] = std::polar(spec.delta[k], tau(k + 1));
    }
    return v;
}

AdaptationReport pcsynth::error_adaptation(const SynthesisResult &reference, const Executor &exec,
                                           const PerturbationSpec &spec) {
    const CircuitPlan &plan = reference.plan;
    if (plan.mode != Mode::Clone) {
        throw InputError("error adaptation needs a clone machine with blank registers");
    }
    size_t d = reference.states.dim();
    CVector blank = perturbed_blank(spec, d);
    double mass = 0;
    for (double x : spec.delta) {
        mass += x * x;
    }
    size_t blanks = plan.registers - plan.copies_in;
    size_t copy_bits = plan.qubits * plan.copies_in;
    size_t tail_bits = plan.wires() - copy_bits;
    size_t first_blank_shift = plan.wires() - copy_bits - plan.qubits;
    int fail = reference.probe_failure();

    AdaptationReport rep;
    for (size_t i = 0; i < reference.states.size(); i++) {
        CVector in = perturbed_input(reference, i, blank);
        CVector out = in;
        exec(out);
        CVector dense = in;
        run_plan(plan, dense);

        AdaptationRecord rec;
        rec.injected_probability = 1 - std::pow(1 - mass, static_cast<double>(blanks));
        rec.detection_probability = detection_probability(reference, out);
        rec.oracle_detection_probability = detection_probability(reference, dense);
        rec.success_probability = sq_norm(probe_branch(out, plan.probe_success));
        rec.failure_probability = sq_norm(probe_branch(out, fail));
        rec.first_blank_patterns.assign(d, 0.0);
        for (size_t k = 0; k < out.size(); k++) {
            if (static_cast<int>(k & 1) == fail) {
                rec.first_blank_patterns[(k >> first_blank_shift) & (d - 1)] += std::norm(out[k]);
            }
        }
        // Copy-register fidelity, summed over the detected tail patterns.
        CVector target = tensor_power(reference.states.states[i], static_cast<int>(plan.copies_in));
        double overlap = 0;
        for (size_t tail = 0; tail < (size_t{1} << tail_bits); tail++) {
            bool detected = static_cast<int>(tail & 1) == fail && (tail >> 1) != 0;
            if (!detected) {
                continue;
            }
            Complex acc = 0;
            for (size_t c = 0; c < target.size(); c++) {
                acc += std::conj(target[c]) * out[(c << tail_bits) | tail];
            }
            overlap += std::norm(acc);
        }
        if (rec.detection_probability > kEmptyBranch) {
            rec.restored_fidelity = overlap / rec.detection_probability;
        }
        rep.worst_oracle_gap =
            std::max(rep.worst_oracle_gap, std::abs(rec.detection_probability - rec.oracle_detection_probability));
        rep.worst_restore_defect = std::max(rep.worst_restore_defect, 1 - rec.restored_fidelity);
        rep.states.push_back(std::move(rec));
    }
    return rep;
}

std::map<int, size_t> pcsynth::sample_probe(const StateVector &state, size_t shots, uint64_t seed) {
    double p1 = sq_norm(probe_branch(state.amplitudes, 1));
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(std::clamp(p1, 0.0, 1.0));
    std::map<int, size_t> counts{{0, 0}, {1, 0}};
    for (size_t s = 0; s < shots; s++) {
        counts[coin(rng) ? 1 : 0]++;
    }
    return counts;
}
