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

#include "pcsynth/numerics/cmatrix.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pcsynth/error.h"

using namespace pcsynth;

CMatrix::CMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw InputError("CMatrix: ragged initializer");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

CMatrix CMatrix::identity(size_t n) {
    CMatrix r(n, n);
    for (size_t k = 0; k < n; k++) {
        r(k, k) = 1;
    }
    return r;
}

CMatrix CMatrix::diagonal(std::span<const double> values) {
    CMatrix r(values.size(), values.size());
    for (size_t k = 0; k < values.size(); k++) {
        r(k, k) = values[k];
    }
    return r;
}

CMatrix CMatrix::diagonal(std::span<const Complex> values) {
    CMatrix r(values.size(), values.size());
    for (size_t k = 0; k < values.size(); k++) {
        r(k, k) = values[k];
    }
    return r;
}

CMatrix CMatrix::from_columns(size_t rows, const std::vector<CVector> &columns) {
    CMatrix r(rows, columns.size());
    for (size_t c = 0; c < columns.size(); c++) {
        r.set_column(c, columns[c]);
    }
    return r;
}

CVector CMatrix::column(size_t c) const {
    CVector out(rows_);
    for (size_t r = 0; r < rows_; r++) {
        out[r] = (*this)(r, c);
    }
    return out;
}

void CMatrix::set_column(size_t c, std::span<const Complex> values) {
    if (values.size() != rows_) {
        throw InputError("CMatrix::set_column: length mismatch");
    }
    for (size_t r = 0; r < rows_; r++) {
        (*this)(r, c) = values[r];
    }
}

CMatrix CMatrix::adjoint() const {
    CMatrix r(cols_, rows_);
    for (size_t i = 0; i < rows_; i++) {
        for (size_t j = 0; j < cols_; j++) {
            r(j, i) = std::conj((*this)(i, j));
        }
    }
    return r;
}

CMatrix CMatrix::conj() const {
    CMatrix r = *this;
    for (auto &z : r.data_) {
        z = std::conj(z);
    }
    return r;
}

CMatrix CMatrix::block(size_t row0, size_t col0, size_t rows, size_t cols) const {
    if (row0 + rows > rows_ || col0 + cols > cols_) {
        throw InputError("CMatrix::block: out of range");
    }
    CMatrix r(rows, cols);
    for (size_t i = 0; i < rows; i++) {
        for (size_t j = 0; j < cols; j++) {
            r(i, j) = (*this)(row0 + i, col0 + j);
        }
    }
    return r;
}

CMatrix &CMatrix::operator+=(const CMatrix &other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw InputError("CMatrix: shape mismatch in +=");
    }
    for (size_t k = 0; k < data_.size(); k++) {
        data_[k] += other.data_[k];
    }
    return *this;
}

CMatrix &CMatrix::operator-=(const CMatrix &other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw InputError("CMatrix: shape mismatch in -=");
    }
    for (size_t k = 0; k < data_.size(); k++) {
        data_[k] -= other.data_[k];
    }
    return *this;
}

CMatrix &CMatrix::operator*=(Complex scalar) {
    for (auto &z : data_) {
        z *= scalar;
    }
    return *this;
}

CMatrix pcsynth::operator*(const CMatrix &a, const CMatrix &b) {
    if (a.cols() != b.rows()) {
        throw InputError("CMatrix: shape mismatch in product");
    }
    CMatrix r(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t k = 0; k < a.cols(); k++) {
            Complex aik = a(i, k);
            if (aik == Complex{}) {
                continue;
            }
            for (size_t j = 0; j < b.cols(); j++) {
                r(i, j) += aik * b(k, j);
            }
        }
    }
    return r;
}

CVector pcsynth::operator*(const CMatrix &a, std::span<const Complex> v) {
    if (a.cols() != v.size()) {
        throw InputError("CMatrix: shape mismatch in matrix-vector product");
    }
    CVector r(a.rows());
    for (size_t i = 0; i < a.rows(); i++) {
        Complex acc{};
        for (size_t k = 0; k < a.cols(); k++) {
            acc += a(i, k) * v[k];
        }
        r[i] = acc;
    }
    return r;
}

CMatrix pcsynth::operator+(CMatrix a, const CMatrix &b) {
    a += b;
    return a;
}

CMatrix pcsynth::operator-(CMatrix a, const CMatrix &b) {
    a -= b;
    return a;
}

CMatrix pcsynth::operator*(Complex s, CMatrix a) {
    a *= s;
    return a;
}

CMatrix pcsynth::kron(const CMatrix &a, const CMatrix &b) {
    CMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < a.cols(); j++) {
            Complex aij = a(i, j);
            for (size_t k = 0; k < b.rows(); k++) {
                for (size_t l = 0; l < b.cols(); l++) {
                    r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
                }
            }
        }
    }
    return r;
}

CMatrix pcsynth::hadamard(const CMatrix &a, const CMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw InputError("hadamard: shape mismatch");
    }
    CMatrix r(a.rows(), a.cols());
    for (size_t k = 0; k < a.data().size(); k++) {
        r.data()[k] = a.data()[k] * b.data()[k];
    }
    return r;
}

CMatrix pcsynth::entrywise_power(const CMatrix &a, int power) {
    if (power < 1) {
        throw InputError("entrywise_power: power must be >= 1, got " + std::to_string(power));
    }
    CMatrix r = a;
    for (int p = 1; p < power; p++) {
        r = hadamard(r, a);
    }
    return r;
}

CMatrix pcsynth::embed_top_left(const CMatrix &a, size_t rows, size_t cols) {
    if (a.rows() > rows || a.cols() > cols) {
        throw InputError("embed_top_left: target smaller than source");
    }
    CMatrix r(rows, cols);
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < a.cols(); j++) {
            r(i, j) = a(i, j);
        }
    }
    return r;
}

CMatrix pcsynth::embed_in_identity(const CMatrix &a, size_t dim) {
    if (!a.is_square() || a.rows() > dim) {
        throw InputError("embed_in_identity: bad shape");
    }
    CMatrix r = CMatrix::identity(dim);
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < a.cols(); j++) {
            r(i, j) = a(i, j);
        }
    }
    return r;
}

double pcsynth::max_abs(const CMatrix &a) {
    double m = 0;
    for (const auto &z : a.data()) {
        m = std::max(m, std::abs(z));
    }
    return m;
}

double pcsynth::max_abs_diff(const CMatrix &a, const CMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw InputError("max_abs_diff: shape mismatch");
    }
    double m = 0;
    for (size_t k = 0; k < a.data().size(); k++) {
        m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
    }
    return m;
}

double pcsynth::hermiticity_error(const CMatrix &a) {
    if (!a.is_square()) {
        throw InputError("hermiticity_error: matrix is not square");
    }
    double m = 0;
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = i; j < a.cols(); j++) {
            m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
        }
    }
    return m;
}

double pcsynth::unitarity_error(const CMatrix &u) {
    if (!u.is_square()) {
        throw InputError("unitarity_error: matrix is not square");
    }
    return max_abs_diff(u.adjoint() * u, CMatrix::identity(u.rows()));
}

CMatrix pcsynth::hermitian_part(const CMatrix &a) {
    CMatrix r = a + a.adjoint();
    r *= 0.5;
    return r;
}

Complex pcsynth::inner(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) {
        throw InputError("inner: length mismatch");
    }
    Complex acc{};
    for (size_t k = 0; k < a.size(); k++) {
        acc += std::conj(a[k]) * b[k];
    }
    return acc;
}

double pcsynth::norm(std::span<const Complex> v) {
    double acc = 0;
    for (const auto &z : v) {
        acc += std::norm(z);
    }
    return std::sqrt(acc);
}

double pcsynth::max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) {
        throw InputError("max_abs_diff: length mismatch");
    }
    double m = 0;
    for (size_t k = 0; k < a.size(); k++) {
        m = std::max(m, std::abs(a[k] - b[k]));
    }
    return m;
}

CVector pcsynth::kron(std::span<const Complex> a, std::span<const Complex> b) {
    CVector r(a.size() * b.size());
    for (size_t i = 0; i < a.size(); i++) {
        for (size_t j = 0; j < b.size(); j++) {
            r[i * b.size() + j] = a[i] * b[j];
        }
    }
    return r;
}

std::string pcsynth::to_string(const CMatrix &a, int precision) {
    std::ostringstream out;
    out.precision(precision);
    for (size_t i = 0; i < a.rows(); i++) {
        out << (i == 0 ? "[" : " ");
        for (size_t j = 0; j < a.cols(); j++) {
            out << (j ? ", " : "") << a(i, j).real() << (a(i, j).imag() < 0 ? "-" : "+")
                << std::abs(a(i, j).imag()) << "i";
        }
        out << (i + 1 == a.rows() ? "]" : "\n");
    }
    return out.str();
}
