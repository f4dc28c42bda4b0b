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

/* C interface to the probabilistic cloning and identification synthesizer.
 *
 * Objects are opaque handles released with their *_free function. Every call
 * that can fail returns a pcs_status; the message of the most recent failure
 * on the calling thread is available from pcs_last_error(). Strings returned
 * through char** outputs are owned by the caller and released with
 * pcs_string_free().
 */

#ifndef PCSYNTH_PCSYNTH_H
#define PCSYNTH_PCSYNTH_H

#include <stddef.h>
#include <stdint.h>

#if defined(PCSYNTH_BUILDING_LIBRARY)
#define PCSYNTH_API __attribute__((visibility("default")))
#else
#define PCSYNTH_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pcs_status {
    PCS_OK = 0,
    PCS_INPUT_ERROR = 1,
    PCS_INFEASIBLE = 2,
    PCS_VERIFY_FAILED = 3,
    PCS_INTERNAL_ERROR = 4
} pcs_status;

enum { PCS_MODE_IDENTIFY = 0, PCS_MODE_CLONE = 1 };
enum { PCS_CORE_ISOMETRY = 0, PCS_CORE_SPECTRAL = 1 };

typedef struct pcs_state_set pcs_state_set;
typedef struct pcs_machine pcs_machine;
typedef struct pcs_netlist pcs_netlist;

/* One synthesis or feasibility request. */
typedef struct pcs_job {
    int mode;
    size_t copies_in;
    /* Clone only. */
    size_t copies_out;
    /* Per-state success probabilities; NULL selects the largest uniform value. */
    const double *gamma;
    size_t gamma_len;
    /* Probe value that flags success, 0 or 1. */
    int probe_success;
    int core;
    /* Replace polarity-0 controls by X pairs in emitted netlists. */
    int expand_polarities;
} pcs_job;

/* Identification, one copy, max-uniform gamma, probe 1 = success, isometry core. */
PCSYNTH_API void pcs_job_init(pcs_job *job);

PCSYNTH_API const char *pcs_version(void);
PCSYNTH_API const char *pcs_last_error(void);
PCSYNTH_API void pcs_string_free(char *s);

/* State sets: {"qubits": q, "states": [[[re, im], ...], ...], "priors": [...]} */
PCSYNTH_API pcs_status pcs_state_set_parse(const char *json, pcs_state_set **out);
PCSYNTH_API void pcs_state_set_free(pcs_state_set *set);
PCSYNTH_API size_t pcs_state_set_size(const pcs_state_set *set);
PCSYNTH_API size_t pcs_state_set_qubits(const pcs_state_set *set);

/* Feasibility report as JSON. Returns PCS_INFEASIBLE (report still written)
 * when an explicit gamma fails the test. */
PCSYNTH_API pcs_status pcs_feasibility(const pcs_state_set *set, const pcs_job *job, char **report_json);

/* Builds the plan, its core and its lowered netlist. */
PCSYNTH_API pcs_status pcs_synthesize(const pcs_state_set *set, const pcs_job *job, pcs_machine **out);
PCSYNTH_API void pcs_machine_free(pcs_machine *machine);
PCSYNTH_API pcs_status pcs_machine_plan_json(const pcs_machine *machine, char **json);
PCSYNTH_API pcs_status pcs_machine_netlist_text(const pcs_machine *machine, char **text);
/* Layout, residuals and gate counts. */
PCSYNTH_API pcs_status pcs_machine_summary_json(const pcs_machine *machine, char **json);

/* Plan JSON (as written by pcs_machine_plan_json) to netlist text. */
PCSYNTH_API pcs_status pcs_lower_plan(const char *plan_json, int expand_polarities, char **netlist_text);

PCSYNTH_API pcs_status pcs_netlist_parse(const char *text, pcs_netlist **out);
PCSYNTH_API void pcs_netlist_free(pcs_netlist *netlist);
PCSYNTH_API pcs_status pcs_netlist_text(const pcs_netlist *netlist, char **text);
PCSYNTH_API size_t pcs_netlist_wires(const pcs_netlist *netlist);
PCSYNTH_API size_t pcs_netlist_gate_count(const pcs_netlist *netlist);

/* Runs the netlist on 2^wires amplitudes stored as interleaved re, im pairs. */
PCSYNTH_API pcs_status pcs_netlist_run(const pcs_netlist *netlist, const double *in_re_im, size_t amplitudes,
                                       double *out_re_im);

/* Probe statistics of the netlist on each encoded input of the job's layout.
 * `shots` > 0 adds seeded samples for demonstration. */
PCSYNTH_API pcs_status pcs_simulate(const pcs_netlist *netlist, const pcs_state_set *set, const pcs_job *job,
                                    size_t shots, uint64_t seed, char **report_json);

/* Branch analysis of `netlist` (NULL: the machine's own) against the
 * machine's contract. Returns PCS_VERIFY_FAILED when a residual exceeds tol. */
PCSYNTH_API pcs_status pcs_verify(const pcs_machine *machine, const pcs_netlist *netlist, double tol,
                                  char **report_json);

/* Blank-register error experiment on a clone machine. `tau` holds the phase
 * of the intended blank state followed by one phase per delta. Returns
 * PCS_VERIFY_FAILED when the measured detection probability departs from the
 * dense oracle, or the detected runs lose the input, by more than tol. */
PCSYNTH_API pcs_status pcs_error_adaptation(const pcs_machine *machine, const pcs_netlist *netlist,
                                            const double *delta, size_t delta_len, const double *tau,
                                            size_t tau_len, double tol, char **report_json);

#ifdef __cplusplus
}
#endif

#endif
