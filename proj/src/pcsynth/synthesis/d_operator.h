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

#ifndef PCSYNTH_SYNTHESIS_D_OPERATOR_H
#define PCSYNTH_SYNTHESIS_D_OPERATOR_H

#include <vector>

#include "pcsynth/numerics/cmatrix.h"
#include "pcsynth/stateset/triangular.h"

namespace pcsynth {

/// Compression of two registers: |psi_i(theta)>|psi_i(xi)> -> |psi_i(eta)>|0...0>.
struct DOperator {
    TriangularForm theta;
    TriangularForm xi;
    TriangularForm eta;
    /// d^2 x d^2, first register most significant.
    CMatrix matrix;
    /// Register dimension d.
    size_t dim = 0;
};

/// eta is the Cholesky form of the entrywise product of the two Grams. The
/// columns of D^dagger at positions i*d are G eta^-1 (G has columns
/// t_i(theta) (x) t_i(xi)); the rest come from the canonical completion.
/// Throws NumericalError when the paired Gram is numerically singular.
DOperator build_d_operator(const TriangularForm &theta, const TriangularForm &xi, size_t dim);

/// max_i |D (t_i(theta) (x) t_i(xi)) - t_i(eta) (x) e_0|.
double compression_residual(const DOperator &d);

struct CascadeStage {
    DOperator op;
    /// Acts on registers (first_register, first_register + 1).
    size_t first_register = 0;
};

/// D_K: stages in application order, compressing K copies into register 0.
struct CascadePlan {
    std::vector<CascadeStage> stages;
    /// xi_1 = theta, ..., xi_K.
    std::vector<TriangularForm> xi_sequence;
    size_t copies = 0;

    const TriangularForm &final_form() const {
        return xi_sequence.back();
    }
};

/// Throws InputError for copies < 1.
CascadePlan build_cascade(const TriangularForm &theta, size_t dim, size_t copies);

}  // namespace pcsynth

#endif
