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

#include "pcsynth/pcsynth.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "pcsynth/error.h"
#include "pcsynth/gatecomp/lowering.h"
#include "pcsynth/io/json_io.h"
#include "pcsynth/simulator/simulator.h"

using namespace pcsynth;

struct pcs_state_set {
    StateSet set;
};

struct pcs_machine {
    SynthesisResult result;
    GateNetlist netlist;
};

struct pcs_netlist {
    GateNetlist netlist;
};

namespace {

thread_local std::string g_last_error;

pcs_status fail(pcs_status code, const std::string &msg) {
    g_last_error = msg;
    return code;
}

// Runs f, mapping exceptions to status codes.
template <typename F>
pcs_status guarded(F &&f) {
    try {
        g_last_error.clear();
        return f();
    } catch (const InputError &e) {
        return fail(PCS_INPUT_ERROR, e.what());
    } catch (const InfeasibleError &e) {
        return fail(PCS_INFEASIBLE, e.what());
    } catch (const VerificationError &e) {
        return fail(PCS_VERIFY_FAILED, e.what());
    } catch (const std::bad_alloc &) {
        return fail(PCS_INTERNAL_ERROR, "out of memory");
    } catch (const std::exception &e) {
        return fail(PCS_INTERNAL_ERROR, e.what());
    } catch (...) {
        return fail(PCS_INTERNAL_ERROR, "unknown failure");
    }
}

std::string fmt(double v) {
    std::ostringstream ss;
    ss << v;
    return ss.str();
}

char *owned(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (!out) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(const void *p, const char *what) {
    if (!p) {
        throw InputError(std::string(what) + " is null");
    }
}

Mode mode_of(const pcs_job &job) {
    if (job.mode == PCS_MODE_IDENTIFY) {
        return Mode::Identification;
    }
    if (job.mode == PCS_MODE_CLONE) {
        return Mode::Clone;
    }
    throw InputError("unknown mode " + std::to_string(job.mode));
}

// Resolves the job's allocation; `located` reports whether it was searched for.
ProbabilityAllocation allocation_for(const StateSet &s, const pcs_job &job, bool &located) {
    Mode mode = mode_of(job);
    if (job.copies_in < 1) {
        throw InputError("copies_in must be at least 1");
    }
    if (mode == Mode::Clone && job.copies_out <= job.copies_in) {
        throw InputError("clone needs copies_out > copies_in");
    }
    if (job.copies_in > 16 || job.copies_out > 16) {
        throw InputError("copy counts above 16 are not supported");
    }
    auto x = gram(s);
    auto xm = gram_power(x, static_cast<int>(job.copies_in));
    located = job.gamma == nullptr;
    if (located) {
        if (mode == Mode::Clone) {
            auto xn = gram_power(x, static_cast<int>(job.copies_out));
            return max_uniform_gamma(xm, &xn, mode);
        }
        return max_uniform_gamma(xm, nullptr, mode);
    }
    ProbabilityAllocation a{std::vector<double>(job.gamma, job.gamma + job.gamma_len), mode};
    check_allocation(a, s.size());
    return a;
}

}  // namespace

extern "C" {

void pcs_job_init(pcs_job *job) {
    if (!job) {
        return;
    }
    *job = pcs_job{};
    job->mode = PCS_MODE_IDENTIFY;
    job->copies_in = 1;
    job->copies_out = 2;
    job->probe_success = 1;
    job->core = PCS_CORE_ISOMETRY;
}

const char *pcs_version(void) {
    return "1.0.0";
}

const char *pcs_last_error(void) {
    return g_last_error.c_str();
}

void pcs_string_free(char *s) {
    std::free(s);
}

pcs_status pcs_state_set_parse(const char *json, pcs_state_set **out) {
    return guarded([&] {
        require(json, "json");
        require(out, "out");
        *out = new pcs_state_set{parse_state_set(json)};
        return PCS_OK;
    });
}

void pcs_state_set_free(pcs_state_set *set) {
    delete set;
}

size_t pcs_state_set_size(const pcs_state_set *set) {
    return set ? set->set.size() : 0;
}

size_t pcs_state_set_qubits(const pcs_state_set *set) {
    return set ? set->set.qubits : 0;
}

pcs_status pcs_feasibility(const pcs_state_set *set, const pcs_job *job, char **report_json) {
    return guarded([&] {
        require(set, "state set");
        require(job, "job");
        require(report_json, "report_json");
        bool located = false;
        auto gamma = allocation_for(set->set, *job, located);
        auto x = gram(set->set);
        auto xm = gram_power(x, static_cast<int>(job->copies_in));
        FeasibilityReport rep;
        if (gamma.mode == Mode::Clone) {
            rep = check_clone(xm, gram_power(x, static_cast<int>(job->copies_out)), gamma);
        } else {
            rep = check_identification(xm, gamma);
        }
        Json j = feasibility_to_json(rep, gamma, located);
        j["copies_in"] = job->copies_in;
        if (gamma.mode == Mode::Clone) {
            j["copies_out"] = job->copies_out;
        }
        *report_json = owned(dump(j));
        if (!rep.feasible) {
            g_last_error = "gamma is infeasible: slack minimum eigenvalue " + fmt(rep.min_eigenvalue);
            return PCS_INFEASIBLE;
        }
        return PCS_OK;
    });
}

pcs_status pcs_synthesize(const pcs_state_set *set, const pcs_job *job, pcs_machine **out) {
    return guarded([&] {
        require(set, "state set");
        require(job, "job");
        require(out, "out");
        bool located = false;
        auto gamma = allocation_for(set->set, *job, located);
        if (job->core != PCS_CORE_ISOMETRY && job->core != PCS_CORE_SPECTRAL) {
            throw InputError("unknown core construction " + std::to_string(job->core));
        }
        SynthesisOptions opt;
        opt.core = job->core == PCS_CORE_SPECTRAL ? CoreConstruction::Spectral : CoreConstruction::Isometry;
        opt.probe_success = job->probe_success;
        auto m = std::make_unique<pcs_machine>();
        if (gamma.mode == Mode::Clone) {
            m->result = assemble_clone(set->set, job->copies_in, job->copies_out, gamma, opt);
        } else {
            m->result = assemble_identification(set->set, job->copies_in, gamma, opt);
        }
        m->netlist = lower_plan(m->result.plan);
        if (job->expand_polarities) {
            m->netlist = expand_polarities(m->netlist);
        }
        *out = m.release();
        return PCS_OK;
    });
}

void pcs_machine_free(pcs_machine *machine) {
    delete machine;
}

pcs_status pcs_machine_plan_json(const pcs_machine *machine, char **json) {
    return guarded([&] {
        require(machine, "machine");
        require(json, "json");
        *json = owned(dump(plan_to_json(machine->result.plan)));
        return PCS_OK;
    });
}

pcs_status pcs_machine_netlist_text(const pcs_machine *machine, char **text) {
    return guarded([&] {
        require(machine, "machine");
        require(text, "text");
        *text = owned(netlist_to_text(machine->netlist));
        return PCS_OK;
    });
}

pcs_status pcs_machine_summary_json(const pcs_machine *machine, char **json) {
    return guarded([&] {
        require(machine, "machine");
        require(json, "json");
        *json = owned(dump(synthesis_summary(machine->result, machine->netlist)));
        return PCS_OK;
    });
}

pcs_status pcs_lower_plan(const char *plan_json, int expand, char **netlist_text) {
    return guarded([&] {
        require(plan_json, "plan_json");
        require(netlist_text, "netlist_text");
        auto n = lower_plan(plan_from_json(plan_json));
        if (expand) {
            n = expand_polarities(n);
        }
        *netlist_text = owned(netlist_to_text(n));
        return PCS_OK;
    });
}

pcs_status pcs_netlist_parse(const char *text, pcs_netlist **out) {
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        *out = new pcs_netlist{parse_netlist(text)};
        return PCS_OK;
    });
}

void pcs_netlist_free(pcs_netlist *netlist) {
    delete netlist;
}

pcs_status pcs_netlist_text(const pcs_netlist *netlist, char **text) {
    return guarded([&] {
        require(netlist, "netlist");
        require(text, "text");
        *text = owned(netlist_to_text(netlist->netlist));
        return PCS_OK;
    });
}

size_t pcs_netlist_wires(const pcs_netlist *netlist) {
    return netlist ? netlist->netlist.wires : 0;
}

size_t pcs_netlist_gate_count(const pcs_netlist *netlist) {
    return netlist ? netlist->netlist.gates.size() : 0;
}

pcs_status pcs_netlist_run(const pcs_netlist *netlist, const double *in_re_im, size_t amplitudes,
                           double *out_re_im) {
    return guarded([&] {
        require(netlist, "netlist");
        require(in_re_im, "input");
        require(out_re_im, "output");
        if (netlist->netlist.wires > 30) {
            throw InputError("netlist too wide for a dense statevector");
        }
        CVector v(amplitudes);
        for (size_t k = 0; k < amplitudes; k++) {
            v[k] = {in_re_im[2 * k], in_re_im[2 * k + 1]};
        }
        auto out = run(netlist->netlist, StateVector::from(netlist->netlist.wires, std::move(v)));
        for (size_t k = 0; k < amplitudes; k++) {
            out_re_im[2 * k] = out.amplitudes[k].real();
            out_re_im[2 * k + 1] = out.amplitudes[k].imag();
        }
        return PCS_OK;
    });
}

pcs_status pcs_simulate(const pcs_netlist *netlist, const pcs_state_set *set, const pcs_job *job, size_t shots,
                        uint64_t seed, char **report_json) {
    return guarded([&] {
        require(netlist, "netlist");
        require(set, "state set");
        require(job, "job");
        require(report_json, "report_json");
        const GateNetlist &n = netlist->netlist;
        Mode mode = mode_of(*job);
        size_t q = set->set.qubits;
        size_t registers = mode == Mode::Clone ? job->copies_out : job->copies_in;
        if (job->copies_in < 1 || registers < job->copies_in || registers * q + 1 != n.wires) {
            throw InputError("netlist has " + std::to_string(n.wires) + " wires, the job layout needs " +
                             std::to_string(registers * q + 1));
        }
        if (job->probe_success != 0 && job->probe_success != 1) {
            throw InputError("probe success value must be 0 or 1");
        }
        Json j;
        j["wires"] = n.wires;
        j["gates"] = n.gates.size();
        j["probe_success"] = job->probe_success;
        Json states = Json::array();
        for (size_t i = 0; i < set->set.size(); i++) {
            auto out = run(n, StateVector::from(n.wires, machine_input(set->set, i, job->copies_in, registers)));
            double p1 = 0;
            for (size_t k = 1; k < out.amplitudes.size(); k += 2) {
                p1 += std::norm(out.amplitudes[k]);
            }
            Json js;
            js["index"] = i;
            js["success_probability"] = job->probe_success ? p1 : 1 - p1;
            js["failure_probability"] = job->probe_success ? 1 - p1 : p1;
            js["norm"] = out.norm();
            if (shots > 0) {
                auto counts = sample_probe(out, shots, seed + i);
                js["shots"] = shots;
                js["probe_counts"] = Json::array({counts[0], counts[1]});
            }
            states.push_back(std::move(js));
        }
        j["states"] = std::move(states);
        *report_json = owned(dump(j));
        return PCS_OK;
    });
}

pcs_status pcs_verify(const pcs_machine *machine, const pcs_netlist *netlist, double tol, char **report_json) {
    return guarded([&] {
        require(machine, "machine");
        require(report_json, "report_json");
        if (!(tol > 0)) {
            throw InputError("tolerance must be positive");
        }
        const GateNetlist &n = netlist ? netlist->netlist : machine->netlist;
        if (n.wires != machine->result.plan.wires()) {
            throw InputError("netlist has " + std::to_string(n.wires) + " wires, the machine needs " +
                             std::to_string(machine->result.plan.wires()));
        }
        auto rep = analyze(machine->result, netlist_executor(n));
        rep.gate_count = n.gates.size();
        Json j;
        j["plan_hash"] = plan_hash(machine->result.plan);
        j["netlist_source_hash"] = n.source_hash;
        j["source_hash_matches"] = n.source_hash == plan_hash(machine->result.plan);
        j["branches"] = branch_report_to_json(rep, tol);
        *report_json = owned(dump(j));
        if (!rep.passes(tol)) {
            g_last_error = "contract violated: worst residual " + fmt(rep.worst_residual()) +
                           " exceeds tolerance " + fmt(tol);
            return PCS_VERIFY_FAILED;
        }
        return PCS_OK;
    });
}

pcs_status pcs_error_adaptation(const pcs_machine *machine, const pcs_netlist *netlist, const double *delta,
                                size_t delta_len, const double *tau, size_t tau_len, double tol,
                                char **report_json) {
    return guarded([&] {
        require(machine, "machine");
        require(report_json, "report_json");
        if (delta_len > 0) {
            require(delta, "delta");
        }
        if (tau_len > 0) {
            require(tau, "tau");
        }
        const GateNetlist &n = netlist ? netlist->netlist : machine->netlist;
        if (n.wires != machine->result.plan.wires()) {
            throw InputError("netlist wire count does not match the machine");
        }
        PerturbationSpec spec{std::vector<double>(delta, delta + delta_len), std::vector<double>(tau, tau + tau_len)};
        auto rep = error_adaptation(machine->result, netlist_executor(n), spec);
        Json j = adaptation_to_json(rep, spec, tol);
        *report_json = owned(dump(j));
        if (!j["passed"].get<bool>()) {
            g_last_error = "error adaptation check failed: oracle gap " + fmt(rep.worst_oracle_gap) +
                           ", restore defect " + fmt(rep.worst_restore_defect);
            return PCS_VERIFY_FAILED;
        }
        return PCS_OK;
    });
}

}  // extern "C"
