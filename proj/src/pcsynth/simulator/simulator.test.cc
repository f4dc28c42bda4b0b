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

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"

#include "pcsynth/error.h"
#include "pcsynth/gatecomp/lowering.h"
#include "pcsynth/simulator/simulator.h"
#include "pcsynth/test_util.test.h"

using namespace pcsynth;

namespace {

const double kS = 1 / std::sqrt(2.0);

StateSet qubit_pair() {
    return validate_states({{1, 0}, {kS, kS}}, 1);
}

StateSet entangled_pair() {
    return validate_states({{1, 0, 0, 0}, {kS, 0, 0, kS}}, 2);
}

ProbabilityAllocation max_gamma(const StateSet &s, Mode mode, size_t m, size_t n) {
    auto x = gram(s);
    auto xm = gram_power(x, static_cast<int>(m));
    auto xn = gram_power(x, static_cast<int>(n));
    return max_uniform_gamma(xm, &xn, mode);
}

}  // namespace

TEST(run, single_gates) {
    GateNetlist x;
    x.wires = 1;
    x.gates = {make_controlled(0, {}, kPauliX)};
    auto out = run(x, StateVector::basis(1, 0));
    EXPECT_EQ(out.amplitudes, (CVector{0, 1}));

    GateNetlist bell;
    bell.wires = 2;
    bell.probe = 1;
    bell.gates = {make_controlled(1, {{0, 1}}, kPauliX)};
    auto b = run(bell, StateVector::from(2, {kS, 0, kS, 0}));
    EXPECT_LE(max_abs_diff(b.amplitudes, CVector{kS, 0, 0, kS}), 1e-15);
    EXPECT_THROW(run(bell, StateVector::basis(3, 0)), InputError);
    EXPECT_THROW(StateVector::from(1, {1, 1}), InputError);
}

TEST(run, netlist_matches_matrix_oracle) {
    CircuitPlan p;
    p.qubits = 3;
    p.registers = 3;
    p.steps.push_back({StepKind::Unitary, {0, 4, 8}, {{9, 0}}, test_util::random_unitary(8), {}, "a"});
    p.steps.push_back({StepKind::Unitary, {2, 5}, {{1, 1}}, test_util::random_unitary(4), {}, "b"});
    auto n = lower_plan(p);
    CMatrix m = netlist_matrix(n);
    for (int trial = 0; trial < 3; trial++) {
        CVector v = test_util::random_unit_vectors(1, size_t{1} << 10)[0];
        auto out = run(n, StateVector::from(10, v));
        EXPECT_LE(max_abs_diff(out.amplitudes, m * v), 1e-9);
        EXPECT_NEAR(out.norm(), 1, 1e-10);
        auto dense = run(p, StateVector::from(10, v));
        EXPECT_LE(max_abs_diff(dense.amplitudes, out.amplitudes), 1e-9);
    }
}

TEST(analyze, orthonormal_identification) {
    auto s = validate_states({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}, 2);
    auto r = assemble_identification(s, 1, {{1, 1, 1}, Mode::Identification});
    auto n = lower_plan(r.plan);
    auto rep = analyze(r, netlist_executor(n));
    for (const auto &st : rep.states) {
        EXPECT_NEAR(st.success_probability, 1, 1e-12);
        EXPECT_NEAR(st.success_fidelity, 1, 1e-12);
    }
    EXPECT_TRUE(rep.passes(1e-9));
}

TEST(analyze, qubit_pair_identification_on_netlist) {
    auto s = qubit_pair();
    auto r = assemble_identification(s, 1, max_gamma(s, Mode::Identification, 1, 2));
    auto n = lower_plan(r.plan);
    auto rep = analyze(r, netlist_executor(n));
    for (const auto &st : rep.states) {
        EXPECT_NEAR(st.success_probability, 1 - kS, 1e-8);
        EXPECT_NEAR(st.success_probability, 0.292893, 1e-6);
        EXPECT_GE(st.success_fidelity, 1 - 1e-8);
        EXPECT_NEAR(st.success_probability + st.failure_probability, 1, 1e-10);
    }
    EXPECT_TRUE(rep.passes(1e-8)) << rep.worst_residual();
}

TEST(analyze, entangled_clone_fidelity) {
    auto s = entangled_pair();
    auto g = max_gamma(s, Mode::Clone, 1, 2);
    EXPECT_NEAR(g.gamma[0], 0.585786, 1e-6);
    auto r = assemble_clone(s, 1, 2, g);
    auto rep = analyze(r, netlist_executor(lower_plan(r.plan)));
    for (const auto &st : rep.states) {
        EXPECT_NEAR(st.success_fidelity, 1, 1e-8);
        EXPECT_NEAR(st.success_probability, g.gamma[0], 1e-8);
    }
}

TEST(analyze, tampered_netlist_fails) {
    auto s = qubit_pair();
    auto r = assemble_clone(s, 1, 2, max_gamma(s, Mode::Clone, 1, 2));
    auto n = lower_plan(r.plan);
    ASSERT_TRUE(analyze(r, netlist_executor(n)).passes(1e-8));
    size_t mcu = 0;
    while (n.gates[mcu].kind != GateKind::MCU) {
        mcu++;
    }
    n.gates.erase(n.gates.begin() + static_cast<long>(mcu));
    EXPECT_FALSE(analyze(r, netlist_executor(n)).passes(1e-8));
}

TEST(error_adaptation, unperturbed_and_small_error) {
    auto s = qubit_pair();
    auto r = assemble_clone(s, 1, 2, max_gamma(s, Mode::Clone, 1, 2));
    auto n = lower_plan(r.plan);
    auto none = error_adaptation(r, netlist_executor(n), {{}, {}});
    for (const auto &st : none.states) {
        EXPECT_LE(st.detection_probability, 1e-20);
    }
    auto small = error_adaptation(r, netlist_executor(n), {{0.01}, {}});
    for (size_t i = 0; i < 2; i++) {
        const auto &st = small.states[i];
        EXPECT_NEAR(st.detection_probability, st.oracle_detection_probability, 1e-8);
        EXPECT_NEAR(st.detection_probability, 1e-4, 1e-8);
        EXPECT_GE(st.restored_fidelity, 1 - 1e-8);
        EXPECT_NEAR(st.success_probability + st.failure_probability, 1, 1e-10);
        EXPECT_NEAR(st.first_blank_patterns[1], st.detection_probability, 1e-15);
    }
}

TEST(error_adaptation, phase_insensitive) {
    auto s = entangled_pair();
    auto r = assemble_clone(s, 1, 2, max_gamma(s, Mode::Clone, 1, 2));
    auto ref = error_adaptation(r, plan_executor(r.plan), {{0.01, 0.02}, {}});
    for (double t : {0.3, 1.7, 4.0}) {
        auto rep = error_adaptation(r, plan_executor(r.plan), {{0.01, 0.02}, {t, 2 * t, -t}});
        for (size_t i = 0; i < 2; i++) {
            EXPECT_NEAR(rep.states[i].detection_probability, ref.states[i].detection_probability, 1e-6);
        }
    }
}

TEST(error_adaptation, errors) {
    auto s = qubit_pair();
    auto id = assemble_identification(s, 1, max_gamma(s, Mode::Identification, 1, 2));
    EXPECT_THROW(error_adaptation(id, plan_executor(id.plan), {{0.1}, {}}), InputError);
    auto cl = assemble_clone(s, 1, 2, max_gamma(s, Mode::Clone, 1, 2));
    EXPECT_THROW(error_adaptation(cl, plan_executor(cl.plan), {{1.0}, {}}), InputError);
    EXPECT_THROW(error_adaptation(cl, plan_executor(cl.plan), {{0.1, 0.1}, {}}), InputError);
    EXPECT_THROW(error_adaptation(cl, plan_executor(cl.plan), {{0.1}, {0, 0, 0}}), InputError);
}

TEST(sample_probe, seeded) {
    auto v = StateVector::from(1, {std::sqrt(0.3), std::sqrt(0.7)});
    auto a = sample_probe(v, 1000, 7);
    EXPECT_EQ(a, sample_probe(v, 1000, 7));
    EXPECT_EQ(a[0] + a[1], 1000u);
    EXPECT_NEAR(static_cast<double>(a[1]) / 1000, 0.7, 0.06);
}
