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

#ifndef PCSYNTH_TEST_UTIL_TEST_H
#define PCSYNTH_TEST_UTIL_TEST_H

#include <cmath>
#include <random>
#include <vector>

#include "pcsynth/numerics/cmatrix.h"
#include "pcsynth/numerics/linalg.h"

namespace pcsynth::test_util {

inline std::mt19937_64 &rng() {
    static std::mt19937_64 gen(20260117);
    return gen;
}

inline Complex gaussian_complex(std::mt19937_64 &gen) {
    std::normal_distribution<double> dist;
    double re = dist(gen);
    double im = dist(gen);
    return {re, im};
}

inline CMatrix random_matrix(size_t rows, size_t cols, std::mt19937_64 &gen = rng()) {
    CMatrix m(rows, cols);
    for (auto &z : m.data()) {
        z = gaussian_complex(gen);
    }
    return m;
}

inline CMatrix random_hermitian(size_t n, std::mt19937_64 &gen = rng()) {
    return hermitian_part(random_matrix(n, n, gen));
}

/// Haar-ish unitary: orthonormalized Gaussian columns.
inline CMatrix random_unitary(size_t n, std::mt19937_64 &gen = rng()) {
    return orthonormalize_columns(random_matrix(n, n, gen));
}

/// n random unit vectors in dimension d (generically linearly independent).
inline std::vector<CVector> random_unit_vectors(size_t n, size_t d, std::mt19937_64 &gen = rng()) {
    std::vector<CVector> out;
    for (size_t i = 0; i < n; i++) {
        CVector v(d);
        for (auto &z : v) {
            z = gaussian_complex(gen);
        }
        double len = norm(v);
        for (auto &z : v) {
            z /= len;
        }
        out.push_back(std::move(v));
    }
    return out;
}

/// Upper-triangular matrix with positive real diagonal.
inline CMatrix random_upper_positive(size_t n, std::mt19937_64 &gen = rng()) {
    std::uniform_real_distribution<double> diag(0.3, 1.5);
    CMatrix r(n, n);
    for (size_t i = 0; i < n; i++) {
        r(i, i) = diag(gen);
        for (size_t j = i + 1; j < n; j++) {
            r(i, j) = gaussian_complex(gen) * 0.5;
        }
    }
    return r;
}

}  // namespace pcsynth::test_util

#endif
