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

#ifndef PCSYNTH_IO_JSON_IO_H
#define PCSYNTH_IO_JSON_IO_H

#include <string>
#include <string_view>

#include "json.hpp"

#include "pcsynth/feasibility/feasibility.h"
#include "pcsynth/gatecomp/netlist.h"
#include "pcsynth/simulator/simulator.h"
#include "pcsynth/stateset/state_set.h"
#include "pcsynth/synthesis/assemble.h"

namespace pcsynth {

using Json = nlohmann::ordered_json;

/// {"qubits": q, "states": [[[re, im], ...], ...], "priors": [...]?}; validated.
StateSet parse_state_set(std::string_view text);
Json state_set_to_json(const StateSet &states);

Json plan_to_json(const CircuitPlan &plan);
/// Throws InputError on malformed input; the result passes validate_plan.
CircuitPlan plan_from_json(std::string_view text);

Json feasibility_to_json(const FeasibilityReport &report, const ProbabilityAllocation &gamma, bool located);
Json branch_report_to_json(const BranchReport &report, double tol);
Json adaptation_to_json(const AdaptationReport &report, const PerturbationSpec &spec, double tol);

/// Layout, gamma, residuals and gate counts of a synthesized machine.
Json synthesis_summary(const SynthesisResult &result, const GateNetlist &netlist);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json &j);

std::string read_file(const std::string &path);
/// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::string &path, std::string_view contents);

}  // namespace pcsynth

#endif
