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

#ifndef PCSYNTH_SIMULATOR_SIMULATOR_H
#define PCSYNTH_SIMULATOR_SIMULATOR_H

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "pcsynth/gatecomp/netlist.h"
#include "pcsynth/synthesis/assemble.h"

namespace pcsynth {

struct StateVector {
    size_t wires = 0;
    CVector amplitudes;

    static StateVector basis(size_t wires, size_t index);
    static StateVector from(size_t wires, CVector amplitudes);
    double norm() const;
};

/// Runs a machine in place on a full-register statevector.
using Executor = std::function<void(std::span<Complex>)>;

Executor netlist_executor(const GateNetlist &netlist);
Executor plan_executor(const CircuitPlan &plan);

/// Throws InputError on a dimension mismatch.
StateVector run(const GateNetlist &netlist, StateVector input);
StateVector run(const CircuitPlan &plan, StateVector input);

struct StateRecord {
    double expected_gamma = 0;
    double success_probability = 0;
    double failure_probability = 0;
    /// |<target|success branch>|^2 / p_success; 1 when both are empty.
    double success_fidelity = 0;
    /// <target|success branch>, ideally sqrt(gamma) exactly.
    Complex success_amplitude = 0;
    /// <alpha_j|failure branch>, ideally column i of C.
    std::vector<Complex> failure_coordinates;
    double failure_coordinate_error = 0;
    /// Norm of the failure branch outside the alpha frame.
    double leakage = 0;
    /// |p_success + p_failure - 1|.
    double norm_error = 0;
};

struct BranchReport {
    std::vector<StateRecord> states;
    size_t gate_count = 0;
    double worst_gamma_error = 0;
    double worst_fidelity_defect = 0;
    double worst_amplitude_error = 0;
    double worst_failure_error = 0;
    double worst_leakage = 0;
    double worst_norm_error = 0;

    /// Largest contract residual, the value compared against the tolerance.
    double worst_residual() const;
    bool passes(double tol) const;
};

/// Runs each encoded input through `exec` and compares both probe branches
/// with the contract recorded in `reference`.
BranchReport analyze(const SynthesisResult &reference, const Executor &exec);

/// Blank-register error: e^{i tau_0} sqrt(1 - sum delta^2) |0> + sum_k delta_k e^{i tau_k} |k>.
struct PerturbationSpec {
    std::vector<double> delta;
    /// tau_0 for the intended blank state, then one phase per delta; missing entries are 0.
    std::vector<double> tau;
};

/// Validates the perturbation against a register of dimension `dim` and returns the blank state.
CVector perturbed_blank(const PerturbationSpec &spec, size_t dim);

struct AdaptationRecord {
    /// Probe reads failure and some blank register is not |0...0>.
    double detection_probability = 0;
    /// Same quantity from dense plan execution.
    double oracle_detection_probability = 0;
    /// sum delta^2 for every blank register, combined: 1 - (1 - sum delta^2)^blanks.
    double injected_probability = 0;
    double success_probability = 0;
    double failure_probability = 0;
    /// Joint probability of failure and each pattern on the first blank register.
    std::vector<double> first_blank_patterns;
    /// Fidelity of the copy registers to |psi_i>^M given detection; 1 if nothing was detected.
    double restored_fidelity = 1;
};

struct AdaptationReport {
    std::vector<AdaptationRecord> states;
    double worst_oracle_gap = 0;
    double worst_restore_defect = 0;
};

/// Clone machines only; `exec` is the executor under test, the plan is the oracle.
/// Throws InputError for identification machines or sum delta^2 >= 1.
AdaptationReport error_adaptation(const SynthesisResult &reference, const Executor &exec,
                                  const PerturbationSpec &spec);

/// Seeded probe-outcome sampling for demonstrations: counts of probe 0 and 1.
std::map<int, size_t> sample_probe(const StateVector &state, size_t shots, uint64_t seed);

}  // namespace pcsynth

#endif
