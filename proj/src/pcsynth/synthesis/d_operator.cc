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

#include "pcsynth/synthesis/d_operator.h"

#include <algorithm>
#include <cmath>

#include "pcsynth/error.h"
#include "pcsynth/numerics/linalg.h"

using namespace pcsynth;

namespace {

TriangularForm paired_form(const TriangularForm &theta, const TriangularForm &xi) {
    try {
        return triangular_form_from_gram(hadamard(theta.gram(), xi.gram()));
    } catch (const NumericalError &e) {
        throw NumericalError(std::string("paired states lost independence: ") + e.what());
    }
}

}  // namespace

DOperator pcsynth::build_d_operator(const TriangularForm &theta, const TriangularForm &xi, size_t dim) {
    size_t n = theta.size();
    if (xi.size() != n) {
        throw InputError("build_d_operator: forms have different state counts");
    }
    if (n > dim) {
        throw InputError("build_d_operator: more states than register dimension");
    }
    DOperator d;
    d.theta = theta;
    d.xi = xi;
    d.eta = paired_form(theta, xi);
    d.dim = dim;

    size_t big = dim * dim;
    std::vector<CVector> pairs;
    for (size_t i = 0; i < n; i++) {
        pairs.push_back(kron(theta.embedded_column(i, dim), xi.embedded_column(i, dim)));
    }
    CMatrix g = CMatrix::from_columns(big, pairs);
    CMatrix w = g * inverse_upper(d.eta.tmat);
    CMatrix completed = orthonormal_completion(w);

    // Columns of w go to positions i * d; completion columns fill the rest in order.
    CMatrix g_tilde_inv(big, big);
    size_t next_free = n;
    for (size_t pos = 0; pos < big; pos++) {
        size_t src;
        if (pos % dim == 0 && pos / dim < n) {
            src = pos / dim;
        } else {
            src = next_free++;
        }
        for (size_t r = 0; r < big; r++) {
            g_tilde_inv(r, pos) = completed(r, src);
        }
    }
    d.matrix = g_tilde_inv.adjoint();
    return d;
}

double pcsynth::compression_residual(const DOperator &d) {
    double worst = 0;
    for (size_t i = 0; i < d.theta.size(); i++) {
        CVector in = kron(d.theta.embedded_column(i, d.dim), d.xi.embedded_column(i, d.dim));
        CVector blank(d.dim);
        blank[0] = 1;
        CVector want = kron(d.eta.embedded_column(i, d.dim), blank);
        worst = std::max(worst, max_abs_diff(d.matrix * in, want));
    }
    return worst;
}

CascadePlan pcsynth::build_cascade(const TriangularForm &theta, size_t dim, size_t copies) {
    if (copies < 1) {
        throw InputError("build_cascade: need at least one copy");
    }
    CascadePlan plan;
    plan.copies = copies;
    plan.xi_sequence.push_back(theta);
    for (size_t j = 1; j < copies; j++) {
        plan.xi_sequence.push_back(paired_form(theta, plan.xi_sequence.back()));
    }
    // D_K = D_1(theta, xi_{K-1}) ... D_{K-1}(theta, xi_1); the rightmost acts first.
    // D_j joins register j into register j-1 (1-based j, 0-based registers).
    for (size_t j = copies - 1; j >= 1; j--) {
        CascadeStage stage;
        stage.op = build_d_operator(theta, plan.xi_sequence[copies - j - 1], dim);
        stage.first_register = j - 1;
        plan.stages.push_back(std::move(stage));
    }
    return plan;
}
