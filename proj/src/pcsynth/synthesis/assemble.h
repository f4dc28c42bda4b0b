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

#ifndef PCSYNTH_SYNTHESIS_ASSEMBLE_H
#define PCSYNTH_SYNTHESIS_ASSEMBLE_H

#include <vector>

#include "pcsynth/feasibility/feasibility.h"
#include "pcsynth/stateset/state_set.h"
#include "pcsynth/stateset/triangular.h"
#include "pcsynth/synthesis/circuit_plan.h"
#include "pcsynth/synthesis/core_unitary.h"
#include "pcsynth/synthesis/d_operator.h"

namespace pcsynth {

struct SynthesisOptions {
    CoreConstruction core = CoreConstruction::Isometry;
    /// Probe value reported as success; 0 appends a probe flip.
    int probe_success = 1;
};

/// A synthesized machine together with everything needed to check it.
struct SynthesisResult {
    CircuitPlan plan;
    StateSet states;
    ProbabilityAllocation gamma;
    FeasibilityReport feasibility;
    SpectralData spectral;
    Triangularization base;
    CoreContract contract;
    CoreUnitary core;
    /// First step after the core.
    size_t tail_begin = 0;

    /// Full-register vectors of length 2^wires, indexed by state.
    std::vector<CVector> inputs;
    /// Success targets with the probe at its success value.
    std::vector<CVector> success_targets;
    /// Orthonormal failure frame alpha_j with the probe at its failure value.
    std::vector<CVector> failure_frame;

    int probe_failure() const {
        return 1 - plan.probe_success;
    }
};

/// Throws InfeasibleError when gamma is outside the feasible set of X^(M).
SynthesisResult assemble_identification(const StateSet &states, size_t copies, const ProbabilityAllocation &gamma,
                                        const SynthesisOptions &options = {});

/// Throws InputError for copies_in >= copies_out and InfeasibleError for an infeasible gamma.
SynthesisResult assemble_clone(const StateSet &states, size_t copies_in, size_t copies_out,
                               const ProbabilityAllocation &gamma, const SynthesisOptions &options = {});

/// |psi_i>^(x)copies on the first registers, blanks |0...0>, probe 0.
CVector machine_input(const StateSet &states, size_t i, size_t copies, size_t registers);

}  // namespace pcsynth

#endif
