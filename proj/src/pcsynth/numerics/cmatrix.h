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

#ifndef PCSYNTH_NUMERICS_CMATRIX_H
#define PCSYNTH_NUMERICS_CMATRIX_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace pcsynth {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

/// Tolerance used for structural checks (unitarity, hermiticity, orthonormality).
inline constexpr double kStructuralTol = 1e-10;
/// Tolerance used for feasibility decisions (minimum eigenvalue of a slack matrix).
inline constexpr double kFeasibilityTol = 1e-8;

/// Dense row-major complex matrix.
class CMatrix {
   public:
    CMatrix() = default;
    CMatrix(size_t rows, size_t cols);
    CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static CMatrix identity(size_t n);
    static CMatrix diagonal(std::span<const double> values);
    static CMatrix diagonal(std::span<const Complex> values);
    /// Matrix whose columns are the given vectors (all of length `rows`).
    static CMatrix from_columns(size_t rows, const std::vector<CVector> &columns);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    bool is_square() const {
        return rows_ == cols_;
    }
    bool empty() const {
        return data_.empty();
    }

    Complex &operator()(size_t r, size_t c) {
        return data_[r * cols_ + c];
    }
    const Complex &operator()(size_t r, size_t c) const {
        return data_[r * cols_ + c];
    }

    std::span<const Complex> data() const {
        return data_;
    }
    std::span<Complex> data() {
        return data_;
    }

    CVector column(size_t c) const;
    void set_column(size_t c, std::span<const Complex> values);

    CMatrix adjoint() const;
    CMatrix conj() const;
    /// Top-left `rows` x `cols` block.
    CMatrix block(size_t row0, size_t col0, size_t rows, size_t cols) const;

    CMatrix &operator+=(const CMatrix &other);
    CMatrix &operator-=(const CMatrix &other);
    CMatrix &operator*=(Complex scalar);

    bool operator==(const CMatrix &other) const = default;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Complex> data_;
};

CMatrix operator*(const CMatrix &a, const CMatrix &b);
CVector operator*(const CMatrix &a, std::span<const Complex> v);
CMatrix operator+(CMatrix a, const CMatrix &b);
CMatrix operator-(CMatrix a, const CMatrix &b);
CMatrix operator*(Complex s, CMatrix a);

CMatrix kron(const CMatrix &a, const CMatrix &b);
/// Entrywise (Schur) product.
CMatrix hadamard(const CMatrix &a, const CMatrix &b);
/// Entrywise integer power.
CMatrix entrywise_power(const CMatrix &a, int power);
/// Places `a` in the top-left corner of a `rows` x `cols` zero matrix.
CMatrix embed_top_left(const CMatrix &a, size_t rows, size_t cols);
/// Places `a` in the top-left corner of an identity of dimension `dim`.
CMatrix embed_in_identity(const CMatrix &a, size_t dim);

double max_abs(const CMatrix &a);
double max_abs_diff(const CMatrix &a, const CMatrix &b);
/// max |A - A^dagger|.
double hermiticity_error(const CMatrix &a);
/// max |U^dagger U - I|.
double unitarity_error(const CMatrix &u);
/// 0.5 (A + A^dagger).
CMatrix hermitian_part(const CMatrix &a);

Complex inner(std::span<const Complex> a, std::span<const Complex> b);
double norm(std::span<const Complex> v);
double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b);
CVector kron(std::span<const Complex> a, std::span<const Complex> b);

std::string to_string(const CMatrix &a, int precision = 6);

}  // namespace pcsynth

#endif
