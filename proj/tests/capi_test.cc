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

// Exercises the shared library through its C header only.

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "json.hpp"
#include "pcsynth/pcsynth.h"

namespace {

using Json = nlohmann::json;

const char *kPair = R"({"qubits":1,"states":[[[1,0],[0,0]],[[0.7071067811865476,0],[0.7071067811865476,0]]]})";

struct Owned {
    char *p = nullptr;
    ~Owned() { pcs_string_free(p); }
    Json json() const { return Json::parse(p); }
};

pcs_state_set *pair_set() {
    pcs_state_set *s = nullptr;
    EXPECT_EQ(pcs_state_set_parse(kPair, &s), PCS_OK);
    return s;
}

}  // namespace

TEST(capi, state_set_accessors_and_errors) {
    pcs_state_set *s = pair_set();
    EXPECT_EQ(pcs_state_set_size(s), 2u);
    EXPECT_EQ(pcs_state_set_qubits(s), 1u);
    pcs_state_set_free(s);
    pcs_state_set *bad = nullptr;
    EXPECT_EQ(pcs_state_set_parse("{\"qubits\":1}", &bad), PCS_INPUT_ERROR);
    EXPECT_EQ(bad, nullptr);
    EXPECT_GT(std::strlen(pcs_last_error()), 0u);
    EXPECT_EQ(pcs_state_set_parse(nullptr, &bad), PCS_INPUT_ERROR);
    EXPECT_EQ(pcs_state_set_size(nullptr), 0u);
}

TEST(capi, feasibility_locates_and_rejects) {
    pcs_state_set *s = pair_set();
    pcs_job job;
    pcs_job_init(&job);
    Owned rep;
    ASSERT_EQ(pcs_feasibility(s, &job, &rep.p), PCS_OK);
    EXPECT_NEAR(rep.json()["gamma"][0].get<double>(), 1 - 1 / std::sqrt(2.0), 1e-9);
    EXPECT_EQ(rep.json()["gamma_source"], "max-uniform");

    double too_much[] = {0.9, 0.9};
    job.gamma = too_much;
    job.gamma_len = 2;
    Owned bad;
    EXPECT_EQ(pcs_feasibility(s, &job, &bad.p), PCS_INFEASIBLE);
    ASSERT_NE(bad.p, nullptr);
    EXPECT_FALSE(bad.json()["feasible"].get<bool>());
    EXPECT_NEAR(bad.json()["min_eigenvalue"].get<double>(), 0.1 - 1 / std::sqrt(2.0), 1e-12);

    job.gamma_len = 1;
    Owned wrong;
    EXPECT_EQ(pcs_feasibility(s, &job, &wrong.p), PCS_INPUT_ERROR);
    EXPECT_EQ(wrong.p, nullptr);

    pcs_job clone;
    pcs_job_init(&clone);
    clone.mode = PCS_MODE_CLONE;
    clone.copies_out = 1;
    Owned c;
    EXPECT_EQ(pcs_feasibility(s, &clone, &c.p), PCS_INPUT_ERROR);
    pcs_state_set_free(s);
}

TEST(capi, synthesize_verify_and_tamper) {
    pcs_state_set *s = pair_set();
    pcs_job job;
    pcs_job_init(&job);
    job.mode = PCS_MODE_CLONE;
    pcs_machine *m = nullptr;
    ASSERT_EQ(pcs_synthesize(s, &job, &m), PCS_OK);
    Owned text, plan, summary, ver;
    ASSERT_EQ(pcs_machine_netlist_text(m, &text.p), PCS_OK);
    ASSERT_EQ(pcs_machine_plan_json(m, &plan.p), PCS_OK);
    ASSERT_EQ(pcs_machine_summary_json(m, &summary.p), PCS_OK);
    EXPECT_EQ(summary.json()["wires"], 3);
    ASSERT_EQ(pcs_verify(m, nullptr, 1e-8, &ver.p), PCS_OK);
    EXPECT_TRUE(ver.json()["branches"]["passed"].get<bool>());
    EXPECT_TRUE(ver.json()["source_hash_matches"].get<bool>());

    // Lowering the exported plan reproduces the machine's netlist.
    Owned lowered;
    ASSERT_EQ(pcs_lower_plan(plan.p, 0, &lowered.p), PCS_OK);
    EXPECT_STREQ(lowered.p, text.p);

    // Dropping the first gate line breaks the contract.
    std::string t = text.p;
    size_t at = t.find("\nMCU");
    ASSERT_NE(at, std::string::npos);
    t.erase(at, t.find('\n', at + 1) - at);
    pcs_netlist *n = nullptr;
    ASSERT_EQ(pcs_netlist_parse(t.c_str(), &n), PCS_OK);
    Owned tampered;
    EXPECT_EQ(pcs_verify(m, n, 1e-8, &tampered.p), PCS_VERIFY_FAILED);
    ASSERT_NE(tampered.p, nullptr);
    EXPECT_FALSE(tampered.json()["branches"]["passed"].get<bool>());
    pcs_netlist_free(n);

    double delta[] = {0.01};
    Owned ad;
    ASSERT_EQ(pcs_error_adaptation(m, nullptr, delta, 1, nullptr, 0, 1e-8, &ad.p), PCS_OK);
    EXPECT_NEAR(ad.json()["states"][0]["detection_probability"].get<double>(), 1e-4, 1e-12);
    pcs_machine_free(m);
    pcs_state_set_free(s);
}

TEST(capi, netlist_run_matches_simulate_report) {
    pcs_state_set *s = pair_set();
    pcs_job job;
    pcs_job_init(&job);
    pcs_machine *m = nullptr;
    ASSERT_EQ(pcs_synthesize(s, &job, &m), PCS_OK);
    Owned text;
    ASSERT_EQ(pcs_machine_netlist_text(m, &text.p), PCS_OK);
    pcs_netlist *n = nullptr;
    ASSERT_EQ(pcs_netlist_parse(text.p, &n), PCS_OK);
    EXPECT_EQ(pcs_netlist_wires(n), 2u);
    EXPECT_GT(pcs_netlist_gate_count(n), 0u);

    // |+> on the register, probe 0.
    double h = 1 / std::sqrt(2.0);
    std::vector<double> in = {h, 0, 0, 0, h, 0, 0, 0};
    std::vector<double> out(8);
    ASSERT_EQ(pcs_netlist_run(n, in.data(), 4, out.data()), PCS_OK);
    double p1 = out[2] * out[2] + out[3] * out[3] + out[6] * out[6] + out[7] * out[7];
    // The located gamma sits within the bisection resolution of the analytic bound.
    EXPECT_NEAR(p1, 1 - h, 1e-9);

    Owned rep;
    ASSERT_EQ(pcs_simulate(n, s, &job, 100, 5, &rep.p), PCS_OK);
    EXPECT_NEAR(rep.json()["states"][1]["success_probability"].get<double>(), p1, 1e-12);
    auto counts = rep.json()["states"][1]["probe_counts"];
    EXPECT_EQ(counts[0].get<size_t>() + counts[1].get<size_t>(), 100u);

    pcs_job clone = job;
    clone.mode = PCS_MODE_CLONE;
    Owned wrong;
    EXPECT_EQ(pcs_simulate(n, s, &clone, 0, 0, &wrong.p), PCS_INPUT_ERROR);
    pcs_netlist_free(n);
    pcs_machine_free(m);
    pcs_state_set_free(s);
}

TEST(capi, outputs_are_deterministic) {
    pcs_state_set *s = pair_set();
    pcs_job job;
    pcs_job_init(&job);
    job.mode = PCS_MODE_CLONE;
    job.copies_out = 3;
    job.expand_polarities = 1;
    std::string first;
    for (int run = 0; run < 2; run++) {
        pcs_machine *m = nullptr;
        ASSERT_EQ(pcs_synthesize(s, &job, &m), PCS_OK);
        Owned text, summary;
        ASSERT_EQ(pcs_machine_netlist_text(m, &text.p), PCS_OK);
        ASSERT_EQ(pcs_machine_summary_json(m, &summary.p), PCS_OK);
        std::string both = std::string(text.p) + summary.p;
        EXPECT_EQ(both.find("ctrl 0:0"), std::string::npos);
        if (run == 0) {
            first = both;
        } else {
            EXPECT_EQ(both, first);
        }
        pcs_machine_free(m);
    }
    pcs_state_set_free(s);
}

TEST(capi, null_handles_are_input_errors) {
    Owned out;
    pcs_job job;
    pcs_job_init(&job);
    EXPECT_EQ(pcs_feasibility(nullptr, &job, &out.p), PCS_INPUT_ERROR);
    EXPECT_EQ(pcs_verify(nullptr, nullptr, 1e-8, &out.p), PCS_INPUT_ERROR);
    EXPECT_EQ(pcs_netlist_parse("wires 2 probe 1\nBOGUS 0\n", nullptr), PCS_INPUT_ERROR);
    pcs_netlist *n = nullptr;
    EXPECT_EQ(pcs_netlist_parse("wires 2 probe 1\nBOGUS 0\n", &n), PCS_INPUT_ERROR);
    EXPECT_NE(std::string(pcs_last_error()).find("netlist line"), std::string::npos);
}
