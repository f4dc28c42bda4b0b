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
#include <filesystem>

#include "gtest/gtest.h"

#include "pcsynth/error.h"
#include "pcsynth/gatecomp/lowering.h"
#include "pcsynth/io/json_io.h"

using namespace pcsynth;

namespace {

const char *kPair = R"({"qubits": 1, "states": [[[1, 0], [0, 0]], [[0.7071067811865476, 0], [0.7071067811865476, 0]]]})";

}  // namespace

TEST(parse_state_set, reads_and_validates) {
    auto s = parse_state_set(kPair);
    EXPECT_EQ(s.qubits, 1u);
    ASSERT_EQ(s.size(), 2u);
    EXPECT_NEAR(std::abs(s.states[1][1] - 1 / std::sqrt(2.0)), 0, 1e-15);
    auto again = parse_state_set(dump(state_set_to_json(s)));
    EXPECT_EQ(again.states, s.states);

    auto with_priors = parse_state_set(R"({"qubits": 1, "states": [[[1,0],[0,0]], [[0,0],[1,0]]], "priors": [0.5, 0.5]})");
    ASSERT_TRUE(with_priors.priors.has_value());

    EXPECT_THROW(parse_state_set("{"), InputError);
    EXPECT_THROW(parse_state_set(R"({"states": []})"), InputError);
    EXPECT_THROW(parse_state_set(R"({"qubits": "one", "states": []})"), InputError);
    EXPECT_THROW(parse_state_set(R"({"qubits": 1, "states": [[[1,0],[0]]]})"), InputError);
    EXPECT_THROW(parse_state_set(R"({"qubits": 1, "states": [[[1,0],[0,0]], [[2,0],[0,0]]]})"), InputError);
}

TEST(plan_json, round_trip_keeps_hash_and_matrix) {
    auto s = parse_state_set(kPair);
    auto x = gram(s);
    auto x2 = gram_power(x, 2);
    auto g = max_uniform_gamma(x, &x2, Mode::Clone);
    for (auto core : {CoreConstruction::Isometry, CoreConstruction::Spectral}) {
        auto r = assemble_clone(s, 1, 2, g, {core, 0});
        std::string text = dump(plan_to_json(r.plan));
        auto back = plan_from_json(text);
        EXPECT_EQ(plan_hash(back), plan_hash(r.plan));
        EXPECT_EQ(dump(plan_to_json(back)), text);
        EXPECT_EQ(netlist_to_text(lower_plan(back)), netlist_to_text(lower_plan(r.plan)));
    }
    EXPECT_THROW(plan_from_json(R"({"mode": "copy"})"), InputError);
    EXPECT_THROW(plan_from_json(R"({"mode": "clone", "qubits": 1, "registers": 1, "copies_in": 1, "copies_out": 1,
        "probe_success": 1, "steps": [{"kind": "pauli_x", "targets": [7]}]})"),
                 InputError);
    EXPECT_THROW(plan_from_json(R"({"mode": "clone", "qubits": 1, "registers": 1, "copies_in": 1, "copies_out": 1,
        "probe_success": 1, "steps": [{"kind": "unitary", "targets": [0], "matrix": [[[1,0],[1,0]],[[0,0],[1,0]]]}]})"),
                 InputError);
}

TEST(write_file_atomic, replaces_content) {
    auto dir = std::filesystem::temp_directory_path() / "pcsynth_io_test";
    std::filesystem::create_directories(dir);
    std::string path = (dir / "out.txt").string();
    write_file_atomic(path, "first\n");
    write_file_atomic(path, "second\n");
    EXPECT_EQ(read_file(path), "second\n");
    EXPECT_FALSE(std::filesystem::exists(path + ".tmp"));
    EXPECT_THROW(write_file_atomic((dir / "missing" / "x.txt").string(), "x"), InputError);
    EXPECT_THROW(read_file((dir / "nope.txt").string()), InputError);
    std::filesystem::remove_all(dir);
}
