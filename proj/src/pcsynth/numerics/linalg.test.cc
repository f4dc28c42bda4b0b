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

#include "pcsynth/numerics/linalg.h"

#include <cmath>

#include "gtest/gtest.h"

#include "pcsynth/error.h"
#include "pcsynth/test_util.test.h"

using namespace pcsynth;

namespace {

const double kInvSqrt2 = 1 / std::sqrt(2.0);

CMatrix reconstruct(const EigDecomposition &eig) {
    const CMatrix &v = eig.eigenvectors;
    return v * CMatrix::diagonal(eig.eigenvalues) * v.adjoint();
}

/// Roots of the characteristic polynomial of [[a, b], [conj(b), d]].
std::pair<double, double> eigenvalues_2x2(double a, Complex b, double d) {
    double mid = (a + d) / 2;
    double rad = std::sqrt((a - d) * (a - d) / 4 + std::norm(b));
    return {mid - rad, mid + rad};
}

}  // namespace

TEST(hermitian_eig, identity) {
    auto eig = hermitian_eig(CMatrix::identity(2));
    ASSERT_EQ(eig.eigenvalues.size(), 2u);
    EXPECT_NEAR(eig.eigenvalues[0], 1, 1e-15);
    EXPECT_NEAR(eig.eigenvalues[1], 1, 1e-15);
    EXPECT_LE(unitarity_error(eig.eigenvectors), 1e-12);
    // Degenerate cluster is re-spanned by canonical basis vectors.
    EXPECT_LE(max_abs_diff(eig.eigenvectors, CMatrix::identity(2)), 1e-15);
}

TEST(hermitian_eig, characteristic_polynomial_oracle) {
    CMatrix a{{1, kInvSqrt2}, {kInvSqrt2, 1}};
    auto [lo, hi] = eigenvalues_2x2(1, kInvSqrt2, 1);
    auto eig = hermitian_eig(a);
    EXPECT_NEAR(eig.eigenvalues[0], lo, 1e-14);
    EXPECT_NEAR(eig.eigenvalues[1], hi, 1e-14);
    EXPECT_NEAR(eig.eigenvalues[0], 1 - kInvSqrt2, 1e-14);
    EXPECT_LE(max_abs_diff(reconstruct(eig), a), 1e-12);

    Complex b{0.3, -0.7};
    CMatrix c{{2.0, b}, {std::conj(b), -0.5}};
    auto [clo, chi] = eigenvalues_2x2(2.0, b, -0.5);
    auto ceig = hermitian_eig(c);
    EXPECT_NEAR(ceig.eigenvalues[0], clo, 1e-13);
    EXPECT_NEAR(ceig.eigenvalues[1], chi, 1e-13);
    EXPECT_LE(max_abs_diff(reconstruct(ceig), c), 1e-12);
}

TEST(hermitian_eig, diagonal_sorted) {
    std::vector<double> d{3, 1, 2};
    auto eig = hermitian_eig(CMatrix::diagonal(d));
    EXPECT_EQ(eig.eigenvalues, (std::vector<double>{1, 2, 3}));
    EXPECT_EQ(eig.eigenvectors(1, 0), Complex(1));
    EXPECT_EQ(eig.eigenvectors(2, 1), Complex(1));
    EXPECT_EQ(eig.eigenvectors(0, 2), Complex(1));
}

TEST(hermitian_eig, rejects_bad_input) {
    EXPECT_THROW(hermitian_eig(CMatrix(2, 3)), InputError);
    EXPECT_THROW(hermitian_eig(CMatrix{{1, 1}, {0, 1}}), InputError);
}

TEST(hermitian_eig, random_reconstruction) {
    for (size_t d : {1, 2, 3, 5, 8, 13, 32}) {
        CMatrix a = test_util::random_hermitian(d);
        auto eig = hermitian_eig(a);
        EXPECT_LE(max_abs_diff(reconstruct(eig), a), 1e-9) << d;
        EXPECT_LE(unitarity_error(eig.eigenvectors), 1e-10) << d;
        for (size_t k = 1; k < d; k++) {
            EXPECT_LE(eig.eigenvalues[k - 1], eig.eigenvalues[k]);
        }
    }
}

TEST(hermitian_eig, deterministic_and_degenerate) {
    // Rank-one plus identity: three-fold degenerate eigenvalue 1.
    CVector u{0.5, Complex(0, 0.5), 0.5, -0.5};
    CMatrix a = CMatrix::identity(4);
    for (size_t i = 0; i < 4; i++) {
        for (size_t j = 0; j < 4; j++) {
            a(i, j) += 2.0 * u[i] * std::conj(u[j]);
        }
    }
    auto e1 = hermitian_eig(a);
    auto e2 = hermitian_eig(a);
    EXPECT_EQ(e1.eigenvectors, e2.eigenvectors);
    EXPECT_EQ(e1.eigenvalues, e2.eigenvalues);
    EXPECT_LE(max_abs_diff(reconstruct(e1), a), 1e-12);
    EXPECT_LE(unitarity_error(e1.eigenvectors), 1e-12);
    EXPECT_NEAR(e1.eigenvalues[3], 3, 1e-12);
}

TEST(cholesky_upper, identity) {
    EXPECT_LE(max_abs_diff(cholesky_upper(CMatrix::identity(4)), CMatrix::identity(4)), 0);
}

TEST(cholesky_upper, two_by_two_examples) {
    CMatrix x1{{1, kInvSqrt2}, {kInvSqrt2, 1}};
    CMatrix r1 = cholesky_upper(x1);
    EXPECT_LE(max_abs_diff(r1.adjoint() * r1, x1), 1e-15);
    EXPECT_LE(max_abs_diff(r1, CMatrix{{1, kInvSqrt2}, {0, kInvSqrt2}}), 1e-15);
    EXPECT_NEAR(r1(1, 1).real(), 0.70711, 1e-5);

    CMatrix x2{{1, 0.5}, {0.5, 1}};
    CMatrix r2 = cholesky_upper(x2);
    EXPECT_LE(max_abs_diff(r2.adjoint() * r2, x2), 1e-15);
    EXPECT_NEAR(r2(0, 1).real(), 0.5, 1e-15);
    EXPECT_NEAR(r2(1, 1).real(), 0.86603, 1e-5);
    EXPECT_EQ(r2(1, 0), Complex(0));
}

TEST(cholesky_upper, round_trip_random) {
    for (size_t n : {1, 2, 4, 8, 16}) {
        CMatrix r = test_util::random_upper_positive(n);
        CMatrix back = cholesky_upper(r.adjoint() * r);
        EXPECT_LE(max_abs_diff(back, r), 1e-9) << n;
    }
}

TEST(cholesky_upper, names_failing_pivot) {
    CMatrix singular{{1, 1, 0}, {1, 1, 0}, {0, 0, 1}};
    try {
        cholesky_upper(singular);
        FAIL() << "expected NumericalError";
    } catch (const NumericalError &e) {
        EXPECT_NE(std::string(e.what()).find("pivot 1"), std::string::npos) << e.what();
    }
    EXPECT_THROW(cholesky_upper(CMatrix{{1, 2}, {2, 1}}), NumericalError);
}

TEST(psd_sqrt, examples) {
    EXPECT_LE(max_abs(psd_sqrt(CMatrix(3, 3))), 0);

    CMatrix a = Complex(kInvSqrt2) * CMatrix{{1, 1}, {1, 1}};
    CMatrix expected = Complex(std::pow(2.0, 0.25) / 2) * CMatrix{{1, 1}, {1, 1}};
    CMatrix s = psd_sqrt(a);
    EXPECT_LE(max_abs_diff(s * s, a), 1e-14);
    EXPECT_LE(max_abs_diff(s, expected), 1e-7);

    std::vector<double> d{4, 9};
    std::vector<double> r{2, 3};
    EXPECT_LE(max_abs_diff(psd_sqrt(CMatrix::diagonal(d)), CMatrix::diagonal(r)), 1e-15);
}

TEST(psd_sqrt, clamps_dust_and_rejects_negative) {
    std::vector<double> dust{1, -1e-11};
    CMatrix s = psd_sqrt(CMatrix::diagonal(dust));
    EXPECT_EQ(s(1, 1), Complex(0));
    std::vector<double> neg{1, -1e-6};
    EXPECT_THROW(psd_sqrt(CMatrix::diagonal(neg)), InfeasibleError);
}

TEST(psd_sqrt, random_reconstruction) {
    for (size_t n : {1, 2, 4, 8}) {
        CMatrix g = test_util::random_matrix(n, n);
        CMatrix a = g * g.adjoint();
        CMatrix s = psd_sqrt(a);
        EXPECT_LE(max_abs_diff(s * s, a), 1e-9 * std::max(1.0, max_abs(a))) << n;
        EXPECT_LE(hermiticity_error(s), 1e-10);
        EXPECT_GE(min_eigenvalue(s), -1e-10);
    }
}

TEST(orthonormal_completion, full_input_unchanged) {
    CMatrix u = test_util::random_unitary(4);
    EXPECT_EQ(orthonormal_completion(u), u);
}

TEST(orthonormal_completion, canonical_seed) {
    CMatrix v(4, 1);
    v(0, 0) = 1;
    EXPECT_EQ(orthonormal_completion(v), CMatrix::identity(4));
}

TEST(orthonormal_completion, two_dimensional_pivot_rule) {
    CMatrix v(2, 1);
    v(0, 0) = kInvSqrt2;
    v(1, 0) = kInvSqrt2;
    CMatrix u = orthonormal_completion(v);
    EXPECT_LE(unitarity_error(u), 1e-15);
    EXPECT_NEAR(u(0, 1).real(), kInvSqrt2, 1e-15);
    EXPECT_NEAR(u(1, 1).real(), -kInvSqrt2, 1e-15);
}

TEST(orthonormal_completion, random_inputs_unitary) {
    for (size_t d : {2, 5, 16, 64}) {
        for (size_t k = 0; k <= d; k += std::max<size_t>(1, d / 4)) {
            CMatrix v = test_util::random_unitary(d).block(0, 0, d, k);
            CMatrix u = orthonormal_completion(v);
            EXPECT_LE(unitarity_error(u), 1e-10) << d << " " << k;
            EXPECT_EQ(u.block(0, 0, d, k), v);
        }
    }
}

TEST(orthonormal_completion, reports_offending_pair) {
    CMatrix v{{1, 0.6}, {0, 0.8}};
    try {
        orthonormal_completion(v);
        FAIL() << "expected InputError";
    } catch (const InputError &e) {
        EXPECT_NE(std::string(e.what()).find("columns 0 and 1"), std::string::npos) << e.what();
    }
}

TEST(hpd_inverse, inverts) {
    CMatrix g = test_util::random_matrix(5, 5);
    CMatrix x = g * g.adjoint() + CMatrix::identity(5);
    EXPECT_LE(max_abs_diff(hpd_inverse(x) * x, CMatrix::identity(5)), 1e-12);
}
