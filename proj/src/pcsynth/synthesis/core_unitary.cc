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

#include "pcsynth/synthesis/core_unitary.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pcsynth/error.h"
#include "pcsynth/numerics/linalg.h"

using namespace pcsynth;

namespace {

// Gram mismatch between specified inputs and images beyond which no isometry exists.
constexpr double kIsometryTol = 1e-8;

std::vector<std::string> labels_for(size_t dim, size_t n) {
    std::vector<std::string> out;
    out.reserve(2 * dim);
    for (size_t a = 0; a < dim; a++) {
        for (int p = 0; p < 2; p++) {
            std::string role = a < n ? (p == 0 ? "alpha_" : "phi_") : "beta_";
            out.push_back(role + std::to_string(a) + "|P" + std::to_string(p));
        }
    }
    return out;
}

}  // namespace

std::string_view pcsynth::construction_name(CoreConstruction c) {
    return c == CoreConstruction::Isometry ? "isometry" : "spectral";
}

CVector CoreContract::encoded_input(size_t i) const {
    CVector v(2 * dim());
    for (size_t a = 0; a < dim(); a++) {
        v[2 * a] = t_in(a, i);
    }
    return v;
}

CVector CoreContract::encoded_output(size_t i) const {
    CVector v(2 * dim());
    double amp = std::sqrt(gamma[i]);
    for (size_t a = 0; a < dim(); a++) {
        v[2 * a + 1] = amp * t_out(a, i);
    }
    for (size_t j = 0; j < size(); j++) {
        v[2 * j] += c(j, i);
    }
    return v;
}

double pcsynth::contract_residual(const CMatrix &u, const CoreContract &contract) {
    double worst = 0;
    for (size_t i = 0; i < contract.size(); i++) {
        CVector got = u * contract.encoded_input(i);
        CVector want = contract.encoded_output(i);
        double acc = 0;
        for (size_t k = 0; k < got.size(); k++) {
            acc += std::norm(got[k] - want[k]);
        }
        worst = std::max(worst, std::sqrt(acc));
    }
    return worst;
}

CoreUnitary pcsynth::build_core_isometry(const CoreContract &contract) {
    size_t n = contract.size();
    size_t d2 = 2 * contract.dim();
    std::vector<CVector> ins;
    std::vector<CVector> outs;
    for (size_t i = 0; i < n; i++) {
        ins.push_back(contract.encoded_input(i));
        outs.push_back(contract.encoded_output(i));
    }
    CMatrix a = CMatrix::from_columns(d2, ins);
    CMatrix b = CMatrix::from_columns(d2, outs);
    CMatrix ga = a.adjoint() * a;
    double mismatch = max_abs_diff(ga, b.adjoint() * b);
    if (mismatch > kIsometryTol) {
        std::ostringstream msg;
        msg << "core images are not an isometry of the inputs: Gram residual " << mismatch
            << " (gamma and failure amplitudes disagree)";
        throw NumericalError(msg.str());
    }
    // Shared triangular factor R of both Grams: A R^-1 and B R^-1 are orthonormal
    // frames related by the unitary we want.
    CMatrix r_inv = inverse_upper(cholesky_upper(ga));
    CMatrix qa = a * r_inv;
    CMatrix qb = orthonormalize_columns(b * r_inv);
    CoreUnitary core;
    core.matrix = orthonormal_completion(qb) * orthonormal_completion(qa).adjoint();
    core.basis_labels = labels_for(contract.dim(), n);
    core.construction = CoreConstruction::Isometry;
    core.contract_residual = contract_residual(core.matrix, contract);
    return core;
}

CMatrix pcsynth::probe_rotation(double m) {
    if (!(m >= 0 && m <= 1)) {
        std::ostringstream msg;
        msg << "rotation weight " << m << " is outside [0, 1]";
        throw InputError(msg.str());
    }
    double f = std::sqrt(1 - m);
    double e = std::sqrt(m);
    return CMatrix{{f, -e}, {e, f}};
}

CMatrix pcsynth::embedded_rotation_frame(const CMatrix &v, size_t dim) {
    return embed_in_identity(v, dim);
}

CoreUnitary pcsynth::build_core_spectral(const SpectralData &spectral, const CoreContract &contract) {
    size_t dim = contract.dim();
    size_t n = contract.size();
    if (spectral.m.size() != n) {
        throw InputError("build_core_spectral: spectral data size does not match the contract");
    }
    CMatrix s(2 * dim, 2 * dim);
    for (size_t a = 0; a < dim; a++) {
        CMatrix k = probe_rotation(a < n ? spectral.m[a] : 0.0);
        for (int p = 0; p < 2; p++) {
            for (int q = 0; q < 2; q++) {
                s(2 * a + p, 2 * a + q) = k(p, q);
            }
        }
    }
    CMatrix frame = kron(embedded_rotation_frame(spectral.v, dim), CMatrix::identity(2));
    CoreUnitary core;
    core.matrix = frame * s * frame.adjoint();
    core.basis_labels = labels_for(dim, n);
    core.construction = CoreConstruction::Spectral;
    core.contract_residual = contract_residual(core.matrix, contract);
    return core;
}
