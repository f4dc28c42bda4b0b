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

#include "pcsynth/stateset/triangular.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "pcsynth/error.h"
#include "pcsynth/numerics/linalg.h"

using namespace pcsynth;

namespace {

double wrap_phase(double phase) {
    double two_pi = 2 * std::numbers::pi;
    double wrapped = std::fmod(phase, two_pi);
    if (wrapped < 0) {
        wrapped += two_pi;
    }
    if (wrapped >= two_pi) {
        wrapped = 0;
    }
    return wrapped;
}

double prefix_norm(const CVector &v, size_t len) {
    double acc = 0;
    for (size_t k = 0; k < len; k++) {
        acc += std::norm(v[k]);
    }
    return std::sqrt(acc);
}

}  // namespace

CMatrix TriangularForm::gram() const {
    return tmat.adjoint() * tmat;
}

CVector TriangularForm::embedded_column(size_t i, size_t dim) const {
    CVector out(dim);
    for (size_t r = 0; r < tmat.rows(); r++) {
        out[r] = tmat(r, i);
    }
    return out;
}

TriangleAngles pcsynth::angles_from_triangular(const CMatrix &tmat) {
    if (!tmat.is_square()) {
        throw InputError("angles_from_triangular: matrix is not square");
    }
    size_t n = tmat.cols();
    TriangleAngles out;
    out.theta.resize(n);
    out.mu.resize(n);
    for (size_t i = 0; i < n; i++) {
        for (size_t r = i + 1; r < n; r++) {
            if (std::abs(tmat(r, i)) > 1e-9) {
                throw InputError("angles_from_triangular: matrix is not upper triangular");
            }
        }
        CVector col(i + 1);
        for (size_t r = 0; r <= i; r++) {
            col[r] = tmat(r, i);
        }
        if (std::abs(norm(col) - 1) > 1e-9) {
            throw InputError("angles_from_triangular: column " + std::to_string(i) + " is not unit norm");
        }
        Complex diag = col[i];
        if (!(diag.real() > 0) || std::abs(diag.imag()) > 1e-9) {
            std::ostringstream msg;
            msg << "angles_from_triangular: diagonal entry " << i << " is " << diag.real()
                << ", the leading angle must be positive";
            throw InputError(msg.str());
        }
        if (i == 0) {
            continue;
        }
        auto &theta = out.theta[i];
        auto &mu = out.mu[i];
        theta.assign(i, 0.0);
        mu.assign(i, 0.0);

        double rest = prefix_norm(col, i);
        theta[0] = std::atan2(diag.real(), rest);
        if (rest <= 1e-300) {
            continue;
        }
        CVector w(col.begin(), col.begin() + i);
        for (auto &z : w) {
            z /= rest;
        }
        // Peel rows i-1 down to 1; each consumes one polar angle and fixes one phase.
        size_t angle = 1;
        for (size_t len = i; len >= 2; len--) {
            Complex last = w[len - 1];
            double head = prefix_norm(w, len - 1);
            theta[angle++] = std::atan2(std::abs(last), head);
            mu[len - 1] = std::abs(last) > 0 ? wrap_phase(std::arg(last)) : 0.0;
            if (head <= 1e-300) {
                break;
            }
            for (size_t k = 0; k + 1 < len; k++) {
                w[k] /= head;
            }
            if (len == 2) {
                mu[0] = wrap_phase(std::arg(w[0]));
            }
        }
        if (i == 1) {
            mu[0] = wrap_phase(std::arg(w[0]));
        }
    }
    return out;
}

CMatrix pcsynth::triangular_from_angles(const TriangleAngles &angles) {
    size_t n = angles.size();
    CMatrix t(n, n);
    if (n == 0) {
        return t;
    }
    t(0, 0) = 1;
    for (size_t i = 1; i < n; i++) {
        const auto &theta = angles.theta[i];
        const auto &mu = angles.mu[i];
        if (theta.size() != i || mu.size() != i) {
            throw InputError("triangular_from_angles: column " + std::to_string(i) + " has the wrong angle count");
        }
        if (!(theta[0] > 0)) {
            throw InputError("triangular_from_angles: leading angle of column " + std::to_string(i) +
                             " must be positive");
        }
        t(i, i) = std::sin(theta[0]);
        double scale = std::cos(theta[0]);
        size_t angle = 1;
        for (size_t len = i; len >= 2; len--) {
            t(len - 1, i) = scale * std::sin(theta[angle]) * std::polar(1.0, mu[len - 1]);
            scale *= std::cos(theta[angle]);
            angle++;
        }
        t(0, i) = scale * std::polar(1.0, mu[0]);
    }
    return t;
}

TriangularForm pcsynth::triangular_form_from_gram(const CMatrix &gram) {
    TriangularForm form;
    form.tmat = cholesky_upper(gram);
    form.angles = angles_from_triangular(form.tmat);
    return form;
}

Triangularization pcsynth::triangularize(const StateSet &states) {
    CMatrix t = states.column_matrix();
    Triangularization out;
    out.form = triangular_form_from_gram(t.adjoint() * t);
    // Q from the QR factorization of T spans the states; U0 = [Q, completion]^dagger
    // sends psi_i to Q^dagger psi_i = (R e_i, 0) with R the Cholesky factor.
    CMatrix q = orthonormalize_columns(t);
    out.u0 = orthonormal_completion(q).adjoint();
    return out;
}
