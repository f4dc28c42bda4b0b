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

#include "pcsynth/io/json_io.h"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "pcsynth/error.h"
#include "pcsynth/gatecomp/lowering.h"

using namespace pcsynth;

namespace {

Json complex_json(Complex z) {
    return Json::array({z.real(), z.imag()});
}

Complex complex_from(const Json &j, const std::string &where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw InputError(where + ": expected [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

Json parse_json(std::string_view text, const char *what) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw InputError(std::string(what) + " is not valid JSON: " + e.what());
    }
}

size_t index_from(const Json &j, const std::string &where) {
    if (!j.is_number_unsigned()) {
        throw InputError(where + ": expected a nonnegative integer");
    }
    return j.get<size_t>();
}

const Json &field(const Json &j, const char *key, const std::string &where) {
    if (!j.is_object() || !j.contains(key)) {
        throw InputError(where + ": missing field '" + key + "'");
    }
    return j.at(key);
}

Json wire_map(const CircuitPlan &plan) {
    Json m = Json::object();
    for (size_t r = 0; r < plan.registers; r++) {
        std::string name = "A" + std::to_string(r + 1);
        if (r >= plan.copies_in) {
            name += " (blank)";
        }
        m[name] = plan.register_wires(r);
    }
    m["probe"] = plan.probe();
    return m;
}

}  // namespace

static StateSet state_set_body(std::string_view text) {
    Json j = parse_json(text, "state set");
    const std::string where = "state set";
    size_t qubits = index_from(field(j, "qubits", where), "qubits");
    const Json &states = field(j, "states", where);
    if (!states.is_array()) {
        throw InputError("states: expected an array");
    }
    std::vector<CVector> raw;
    for (size_t i = 0; i < states.size(); i++) {
        const Json &s = states[i];
        std::string w = "state " + std::to_string(i);
        if (!s.is_array()) {
            throw InputError(w + ": expected an array of [re, im]");
        }
        CVector v;
        for (size_t k = 0; k < s.size(); k++) {
            v.push_back(complex_from(s[k], w + " entry " + std::to_string(k)));
        }
        raw.push_back(std::move(v));
    }
    std::optional<std::vector<double>> priors;
    if (j.contains("priors")) {
        const Json &p = j.at("priors");
        if (!p.is_array()) {
            throw InputError("priors: expected an array of numbers");
        }
        std::vector<double> pv;
        for (const auto &x : p) {
            if (!x.is_number()) {
                throw InputError("priors: expected numbers");
            }
            pv.push_back(x.get<double>());
        }
        priors = std::move(pv);
    }
    return validate_states(std::move(raw), qubits, priors);
}

StateSet pcsynth::parse_state_set(std::string_view text) {
    try {
        return state_set_body(text);
    } catch (const nlohmann::json::exception &e) {
        throw InputError(std::string("state set: ") + e.what());
    }
}

Json pcsynth::state_set_to_json(const StateSet &states) {
    Json j;
    j["qubits"] = states.qubits;
    Json arr = Json::array();
    for (const auto &s : states.states) {
        Json v = Json::array();
        for (Complex z : s) {
            v.push_back(complex_json(z));
        }
        arr.push_back(std::move(v));
    }
    j["states"] = std::move(arr);
    if (states.priors) {
        j["priors"] = *states.priors;
    }
    return j;
}

Json pcsynth::plan_to_json(const CircuitPlan &plan) {
    Json j;
    j["format"] = "pcsynth-plan-1";
    j["mode"] = mode_name(plan.mode);
    j["qubits"] = plan.qubits;
    j["registers"] = plan.registers;
    j["copies_in"] = plan.copies_in;
    j["copies_out"] = plan.copies_out;
    j["probe_success"] = plan.probe_success;
    j["hash"] = plan_hash(plan);
    Json steps = Json::array();
    for (const auto &s : plan.steps) {
        Json js;
        js["kind"] = step_kind_name(s.kind);
        js["label"] = s.label;
        js["targets"] = s.targets;
        Json cond = Json::array();
        for (const auto &c : s.conditions) {
            cond.push_back(Json::array({c.wire, c.value}));
        }
        js["conditions"] = std::move(cond);
        if (s.kind == StepKind::Unitary) {
            Json rows = Json::array();
            for (size_t r = 0; r < s.matrix.rows(); r++) {
                Json row = Json::array();
                for (size_t c = 0; c < s.matrix.cols(); c++) {
                    row.push_back(complex_json(s.matrix(r, c)));
                }
                rows.push_back(std::move(row));
            }
            js["matrix"] = std::move(rows);
        }
        if (s.kind == StepKind::SBlock) {
            js["weights"] = s.weights;
        }
        steps.push_back(std::move(js));
    }
    j["steps"] = std::move(steps);
    return j;
}

static CircuitPlan plan_body(std::string_view text) {
    Json j = parse_json(text, "plan");
    const std::string where = "plan";
    CircuitPlan p;
    std::string mode = field(j, "mode", where).get<std::string>();
    if (mode == "identify") {
        p.mode = Mode::Identification;
    } else if (mode == "clone") {
        p.mode = Mode::Clone;
    } else {
        throw InputError("plan: unknown mode '" + mode + "'");
    }
    p.qubits = index_from(field(j, "qubits", where), "qubits");
    p.registers = index_from(field(j, "registers", where), "registers");
    p.copies_in = index_from(field(j, "copies_in", where), "copies_in");
    p.copies_out = index_from(field(j, "copies_out", where), "copies_out");
    p.probe_success = static_cast<int>(index_from(field(j, "probe_success", where), "probe_success"));
    if (p.qubits == 0 || p.registers == 0 || p.registers * p.qubits + 1 > 62) {
        throw InputError("plan: wire layout out of range");
    }
    const Json &steps = field(j, "steps", where);
    if (!steps.is_array()) {
        throw InputError("plan: steps must be an array");
    }
    for (size_t k = 0; k < steps.size(); k++) {
        const Json &js = steps[k];
        std::string w = "plan step " + std::to_string(k);
        PlanStep s;
        std::string kind = field(js, "kind", w).get<std::string>();
        if (kind == "unitary") {
            s.kind = StepKind::Unitary;
        } else if (kind == "s_block") {
            s.kind = StepKind::SBlock;
        } else if (kind == "pauli_x") {
            s.kind = StepKind::PauliX;
        } else {
            throw InputError(w + ": unknown kind '" + kind + "'");
        }
        if (js.contains("label")) {
            s.label = js.at("label").get<std::string>();
        }
        for (const auto &t : field(js, "targets", w)) {
            s.targets.push_back(index_from(t, w + " targets"));
        }
        if (js.contains("conditions")) {
            for (const auto &c : js.at("conditions")) {
                if (!c.is_array() || c.size() != 2) {
                    throw InputError(w + ": conditions are [wire, value] pairs");
                }
                s.conditions.push_back({index_from(c[0], w), static_cast<int>(index_from(c[1], w))});
            }
        }
        if (s.kind == StepKind::Unitary) {
            const Json &rows = field(js, "matrix", w);
            size_t dim = rows.size();
            if (dim == 0 || dim > 4096) {
                throw InputError(w + ": matrix size out of range");
            }
            s.matrix = CMatrix(dim, dim);
            for (size_t r = 0; r < dim; r++) {
                if (!rows[r].is_array() || rows[r].size() != dim) {
                    throw InputError(w + ": matrix must be square");
                }
                for (size_t c = 0; c < dim; c++) {
                    s.matrix(r, c) = complex_from(rows[r][c], w + " matrix");
                }
            }
        }
        if (s.kind == StepKind::SBlock) {
            for (const auto &m : field(js, "weights", w)) {
                if (!m.is_number()) {
                    throw InputError(w + ": weights must be numbers");
                }
                s.weights.push_back(m.get<double>());
            }
        }
        p.steps.push_back(std::move(s));
    }
    try {
        validate_plan(p);
    } catch (const InputError &) {
        throw;
    } catch (const std::exception &e) {
        throw InputError(std::string("plan: ") + e.what());
    }
    return p;
}

CircuitPlan pcsynth::plan_from_json(std::string_view text) {
    try {
        return plan_body(text);
    } catch (const nlohmann::json::exception &e) {
        throw InputError(std::string("plan: ") + e.what());
    }
}

Json pcsynth::feasibility_to_json(const FeasibilityReport &report, const ProbabilityAllocation &gamma, bool located) {
    Json j;
    j["mode"] = mode_name(gamma.mode);
    j["feasible"] = report.feasible;
    j["min_eigenvalue"] = report.min_eigenvalue;
    j["tolerance"] = kFeasibilityTol;
    j["gamma_source"] = located ? "max-uniform" : "explicit";
    j["gamma"] = gamma.gamma;
    return j;
}

Json pcsynth::branch_report_to_json(const BranchReport &report, double tol) {
    Json j;
    j["tolerance"] = tol;
    j["passed"] = report.passes(tol);
    j["worst_residual"] = report.worst_residual();
    j["gate_count"] = report.gate_count;
    Json w;
    w["gamma_error"] = report.worst_gamma_error;
    w["fidelity_defect"] = report.worst_fidelity_defect;
    w["success_amplitude_error"] = report.worst_amplitude_error;
    w["failure_coordinate_error"] = report.worst_failure_error;
    w["failure_leakage"] = report.worst_leakage;
    w["norm_error"] = report.worst_norm_error;
    j["worst"] = std::move(w);
    Json states = Json::array();
    for (size_t i = 0; i < report.states.size(); i++) {
        const auto &s = report.states[i];
        Json js;
        js["index"] = i;
        js["gamma"] = s.expected_gamma;
        js["success_probability"] = s.success_probability;
        js["failure_probability"] = s.failure_probability;
        js["success_fidelity"] = s.success_fidelity;
        js["success_amplitude"] = complex_json(s.success_amplitude);
        Json fc = Json::array();
        for (Complex z : s.failure_coordinates) {
            fc.push_back(complex_json(z));
        }
        js["failure_coordinates"] = std::move(fc);
        js["failure_coordinate_error"] = s.failure_coordinate_error;
        js["failure_leakage"] = s.leakage;
        states.push_back(std::move(js));
    }
    j["states"] = std::move(states);
    return j;
}

Json pcsynth::adaptation_to_json(const AdaptationReport &report, const PerturbationSpec &spec, double tol) {
    Json j;
    j["delta"] = spec.delta;
    j["tau"] = spec.tau;
    j["tolerance"] = tol;
    j["passed"] = report.worst_oracle_gap <= tol && report.worst_restore_defect <= tol;
    j["worst_oracle_gap"] = report.worst_oracle_gap;
    j["worst_restore_defect"] = report.worst_restore_defect;
    Json states = Json::array();
    for (size_t i = 0; i < report.states.size(); i++) {
        const auto &s = report.states[i];
        Json js;
        js["index"] = i;
        js["detection_probability"] = s.detection_probability;
        js["oracle_detection_probability"] = s.oracle_detection_probability;
        js["injected_probability"] = s.injected_probability;
        js["success_probability"] = s.success_probability;
        js["failure_probability"] = s.failure_probability;
        js["failure_by_blank_pattern"] = s.first_blank_patterns;
        js["restored_fidelity"] = s.restored_fidelity;
        states.push_back(std::move(js));
    }
    j["states"] = std::move(states);
    return j;
}

Json pcsynth::synthesis_summary(const SynthesisResult &r, const GateNetlist &netlist) {
    const CircuitPlan &p = r.plan;
    Json j;
    j["mode"] = mode_name(p.mode);
    j["qubits"] = p.qubits;
    j["states"] = r.states.size();
    j["copies_in"] = p.copies_in;
    j["copies_out"] = p.copies_out;
    j["wires"] = p.wires();
    j["probe"] = p.probe();
    j["probe_success"] = p.probe_success;
    j["wire_map"] = wire_map(p);
    j["plan_hash"] = plan_hash(p);
    j["core"] = construction_name(r.core.construction);
    j["gamma"] = r.gamma.gamma;
    j["slack_min_eigenvalue"] = r.feasibility.min_eigenvalue;
    j["rotation_weights"] = r.spectral.m;
    j["core_contract_residual"] = r.core.contract_residual;
    j["core_unitarity_error"] = unitarity_error(r.core.matrix);
    double stage_unitarity = 0;
    for (const auto &s : p.steps) {
        stage_unitarity = std::max(stage_unitarity, unitarity_error(s.local_matrix()));
    }
    j["step_unitarity_error"] = stage_unitarity;
    // Netlist against plan on the encoded inputs.
    double gap = 0;
    for (const auto &in : r.inputs) {
        CVector a = in;
        CVector b = in;
        run_plan(p, a);
        run_netlist(netlist, b);
        gap = std::max(gap, max_abs_diff(a, b));
    }
    j["netlist_plan_gap"] = gap;
    auto c = count_gates(netlist);
    Json g;
    g["total"] = netlist.gates.size();
    g["x"] = c.x;
    g["cnot"] = c.cnot;
    g["mcu"] = c.mcu;
    g["max_controls"] = c.max_controls;
    j["gates"] = std::move(g);
    Json steps = Json::array();
    for (const auto &s : p.steps) {
        Json js;
        js["label"] = s.label;
        js["kind"] = step_kind_name(s.kind);
        js["targets"] = s.targets;
        js["conditions"] = s.conditions.size();
        steps.push_back(std::move(js));
    }
    j["steps"] = std::move(steps);
    return j;
}

std::string pcsynth::dump(const Json &j) {
    return j.dump(2) + "\n";
}

std::string pcsynth::read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot read '" + path + "': " + std::strerror(errno));
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void pcsynth::write_file_atomic(const std::string &path, std::string_view contents) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw InputError("cannot write '" + tmp + "': " + std::strerror(errno));
        }
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        out.flush();
        if (!out) {
            std::remove(tmp.c_str());
            throw InputError("short write to '" + tmp + "'");
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        int err = errno;
        std::remove(tmp.c_str());
        throw InputError("cannot rename '" + tmp + "' to '" + path + "': " + std::strerror(err));
    }
}
