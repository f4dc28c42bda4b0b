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
#include "pcsynth/stateset/state_set.h"
#include "pcsynth/stateset/triangular.h"
#include "pcsynth/test_util.test.h"

using namespace pcsynth;

namespace {

const double kS = 1 / std::sqrt(2.0);

StateSet entangled_pair() {
    return validate_states({{1, 0, 0, 0}, {kS, 0, 0, kS}}, 2);
}

StateSet four_two_qubit_states() {
    return validate_states({{1, 0, 0, 0}, {kS, kS, 0, 0}, {kS, 0, kS, 0}, {kS, 0, 0, kS}}, 2);
}

}  // namespace

TEST(validate_states, computational_basis) {
    auto s = validate_states({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, 2);
    EXPECT_EQ(s.column_matrix(), CMatrix::identity(4));
}

TEST(validate_states, normalizes_and_accepts_entangled) {
    auto s = validate_states({{2, 0, 0, 0}, {1, 0, 0, 1}}, 2);
    EXPECT_NEAR(s.states[1][0].real(), kS, 1e-15);
    EXPECT_NEAR(s.states[1][3].real(), kS, 1e-15);
    EXPECT_NEAR(s.states[0][0].real(), 1, 0);
}

TEST(validate_states, errors) {
    try {
        validate_states({{1, 0, 0, 0}, {1, 0, 0, 0}}, 2);
        FAIL() << "expected InputError";
    } catch (const InputError &e) {
        EXPECT_NE(std::string(e.what()).find("state 1"), std::string::npos) << e.what();
    }
    try {
        validate_states({{1, 0}, {0, 1}, {1, 1}}, 1);
        FAIL();
    } catch (const InputError &) {
    }
    EXPECT_THROW(validate_states({{1, 0, 0}}, 2), InputError);
    EXPECT_THROW(validate_states({{0, 0}}, 1), InputError);
    EXPECT_THROW(validate_states({{1, 0}, {0, 1}}, 1, std::vector<double>{0.2, 0.2}), InputError);
    EXPECT_NO_THROW(validate_states({{1, 0}, {0, 1}}, 1, std::vector<double>{0.25, 0.75}));
    // Third state is a combination of the first two.
    try {
        validate_states({{1, 0, 0, 0}, {0, 1, 0, 0}, {kS, kS, 0, 0}}, 2);
        FAIL();
    } catch (const InputError &e) {
        EXPECT_NE(std::string(e.what()).find("state 2"), std::string::npos) << e.what();
    }
}

TEST(gram, examples) {
    auto ortho = validate_states({{1, 0}, {0, 1}}, 1);
    EXPECT_EQ(gram(ortho).entries, CMatrix::identity(2));

    auto x = gram(entangled_pair()).entries;
    EXPECT_LE(max_abs_diff(x, CMatrix{{1, kS}, {kS, 1}}), 1e-15);

    auto phased = validate_states({{1, 0}, {kS, Complex(0, kS)}}, 1);
    auto xp = gram(phased).entries;
    EXPECT_NEAR(std::abs(xp(0, 1) - kS), 0, 1e-15);
    EXPECT_EQ(xp(1, 0), std::conj(xp(0, 1)));

    auto complex_pair = validate_states({{kS, Complex(0, kS)}, {1, 0}}, 1);
    auto xc = gram(complex_pair).entries;
    EXPECT_NEAR(std::abs(xc(0, 1) - kS), 0, 1e-15);
    EXPECT_NEAR(std::abs(xc(1, 0) - kS), 0, 1e-15);
}

TEST(gram_power, examples) {
    auto x = gram(entangled_pair());
    EXPECT_EQ(gram_power(x, 1).entries, x.entries);
    auto x2 = gram_power(x, 2);
    EXPECT_EQ(x2.copy_power, 2);
    EXPECT_LE(max_abs_diff(x2.entries, CMatrix{{1, 0.5}, {0.5, 1}}), 1e-15);
    GramMatrix id{CMatrix::identity(3), 1};
    EXPECT_EQ(gram_power(id, 3).entries, CMatrix::identity(3));
    EXPECT_THROW(gram_power(x, 0), InputError);
}

TEST(gram_power, matches_materialized_tensor_powers) {
    for (size_t q : {1, 2}) {
        for (size_t n = 2; n <= std::min<size_t>(4, size_t{1} << q); n++) {
            auto s = validate_states(test_util::random_unit_vectors(n, size_t{1} << q), q);
            for (int m = 1; m <= 3; m++) {
                auto direct = gram(tensor_power(s, m));
                auto powered = gram_power(gram(s), m);
                EXPECT_LE(max_abs_diff(direct.entries, powered.entries), 1e-10) << q << " " << n << " " << m;
            }
        }
    }
}

TEST(triangularize, orthonormal_identity) {
    auto s = validate_states({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, 2);
    auto t = triangularize(s);
    EXPECT_LE(max_abs_diff(t.form.tmat, CMatrix::identity(4)), 1e-15);
    EXPECT_LE(max_abs_diff(t.u0, CMatrix::identity(4)), 1e-15);
}

TEST(triangularize, entangled_pair) {
    auto s = entangled_pair();
    auto t = triangularize(s);
    CMatrix expected{{1, kS}, {0, kS}};
    EXPECT_LE(max_abs_diff(t.form.tmat, expected), 1e-12);
    EXPECT_LE(max_abs_diff(t.form.gram(), gram(s).entries), 1e-12);
    EXPECT_LE(unitarity_error(t.u0), 1e-10);
    for (size_t i = 0; i < s.size(); i++) {
        EXPECT_LE(max_abs_diff(t.u0 * s.states[i], t.form.embedded_column(i, 4)), 1e-9);
    }
}

TEST(triangularize, four_states_invariants) {
    auto s = four_two_qubit_states();
    auto t = triangularize(s);
    CMatrix x = gram(s).entries;
    EXPECT_LE(max_abs_diff(t.form.gram(), x), 1e-9);
    EXPECT_LE(max_abs_diff(cholesky_upper(x), t.form.tmat), 1e-12);
    EXPECT_LE(unitarity_error(t.u0), 1e-10);
    for (size_t i = 0; i < 4; i++) {
        EXPECT_GT(t.form.tmat(i, i).real(), 0);
        EXPECT_LE(max_abs_diff(t.u0 * s.states[i], t.form.embedded_column(i, 4)), 1e-9);
    }
}

TEST(triangularize, random_sets) {
    for (size_t q : {1, 2, 3}) {
        size_t d = size_t{1} << q;
        for (size_t n : {size_t{2}, d}) {
            auto s = validate_states(test_util::random_unit_vectors(n, d), q);
            auto t = triangularize(s);
            EXPECT_LE(max_abs_diff(t.form.gram(), gram(s).entries), 1e-9);
            EXPECT_LE(unitarity_error(t.u0), 1e-10);
            EXPECT_LE(max_abs_diff(t.u0 * s.column_matrix(), embed_top_left(t.form.tmat, d, n)), 1e-9);
            // The first column is always e_1.
            EXPECT_LE(std::abs(t.form.tmat(0, 0) - 1.0), 1e-12);
        }
    }
}

TEST(triangle_angles, identity_chart) {
    auto a = angles_from_triangular(CMatrix::identity(4));
    for (size_t i = 1; i < 4; i++) {
        EXPECT_NEAR(a.theta[i][0], std::numbers::pi / 2, 1e-15);
        for (size_t k = 1; k < i; k++) {
            EXPECT_EQ(a.theta[i][k], 0);
        }
        for (double m : a.mu[i]) {
            EXPECT_EQ(m, 0);
        }
    }
    EXPECT_LE(max_abs_diff(triangular_from_angles(a), CMatrix::identity(4)), 1e-15);
}

TEST(triangle_angles, single_column) {
    double th = std::numbers::pi / 4;
    CMatrix t{{1, std::cos(th)}, {0, std::sin(th)}};
    auto a = angles_from_triangular(t);
    EXPECT_NEAR(a.theta[1][0], th, 1e-15);
    EXPECT_NEAR(a.mu[1][0], 0, 1e-15);
}

TEST(triangle_angles, matches_explicit_four_column_pattern) {
    // Build column 4 by hand from the cos/sin/phase pattern and compare.
    TriangleAngles a;
    a.theta = {{}, {0.7}, {1.1, 0.4}, {0.9, 2.0, 0.3}};
    a.mu = {{}, {0.5}, {1.5, 2.5}, {0.1, 4.0, 5.5}};
    CMatrix t = triangular_from_angles(a);
    auto e = [](double m) {
        return std::polar(1.0, m);
    };
    const auto &th = a.theta[3];
    const auto &mu = a.mu[3];
    EXPECT_LE(std::abs(t(0, 3) - e(mu[0]) * std::cos(th[0]) * std::cos(th[1]) * std::cos(th[2])), 1e-15);
    EXPECT_LE(std::abs(t(1, 3) - e(mu[1]) * std::cos(th[0]) * std::cos(th[1]) * std::sin(th[2])), 1e-15);
    EXPECT_LE(std::abs(t(2, 3) - e(mu[2]) * std::cos(th[0]) * std::sin(th[1])), 1e-15);
    EXPECT_LE(std::abs(t(3, 3) - std::sin(th[0])), 1e-15);
    EXPECT_LE(std::abs(t(0, 2) - e(a.mu[2][0]) * std::cos(1.1) * std::cos(0.4)), 1e-15);
    EXPECT_LE(std::abs(t(1, 2) - e(a.mu[2][1]) * std::cos(1.1) * std::sin(0.4)), 1e-15);
}

TEST(triangle_angles, round_trip_random) {
    for (int trial = 0; trial < 20; trial++) {
        auto s = validate_states(test_util::random_unit_vectors(4, 4), 2);
        CMatrix t = triangularize(s).form.tmat;
        auto a = angles_from_triangular(t);
        EXPECT_LE(max_abs_diff(triangular_from_angles(a), t), 1e-9);
        auto again = angles_from_triangular(triangular_from_angles(a));
        for (size_t i = 1; i < 4; i++) {
            EXPECT_GT(a.theta[i][0], 0);
            for (size_t k = 0; k < i; k++) {
                EXPECT_NEAR(again.theta[i][k], a.theta[i][k], 1e-9);
            }
        }
    }
}

TEST(triangle_angles, rejects_zero_diagonal) {
    CMatrix t{{1, 1}, {0, 0}};
    EXPECT_THROW(angles_from_triangular(t), InputError);
    TriangleAngles a;
    a.theta = {{}, {0.0}};
    a.mu = {{}, {0.0}};
    EXPECT_THROW(triangular_from_angles(a), InputError);
}
