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

#ifndef PCSYNTH_STATESET_TRIANGULAR_H
#define PCSYNTH_STATESET_TRIANGULAR_H

#include <vector>

#include "pcsynth/numerics/cmatrix.h"
#include "pcsynth/stateset/state_set.h"

namespace pcsynth {

/// Hyperspherical chart of an upper-triangular coordinate matrix with unit columns.
///
/// Column i (0-based) carries i polar angles and i phases. theta[i][0] sets the
/// diagonal entry sin(theta[i][0]); the remaining angles split the cos(theta[i][0])
/// mass over rows i-1, i-2, ..., 0 in turn, and mu[i][r] is the phase of row r.
/// Column 0 is always e_1 and carries nothing.
struct TriangleAngles {
    std::vector<std::vector<double>> theta;
    std::vector<std::vector<double>> mu;

    size_t size() const {
        return theta.size();
    }
};

/// Upper-triangular coordinates of a state set on the first n basis states.
struct TriangularForm {
    CMatrix tmat;
    TriangleAngles angles;

    size_t size() const {
        return tmat.cols();
    }
    /// tmat^dagger tmat.
    CMatrix gram() const;
    /// Column i padded with zeros to `dim` entries.
    CVector embedded_column(size_t i, size_t dim) const;
};

/// Cholesky factor of a unit-diagonal Gram matrix together with its angle chart.
TriangularForm triangular_form_from_gram(const CMatrix &gram);

/// Throws InputError on a non-positive diagonal or a non-unit column.
TriangleAngles angles_from_triangular(const CMatrix &tmat);

/// Throws InputError when a leading angle theta[i][0] is not positive.
CMatrix triangular_from_angles(const TriangleAngles &angles);

struct Triangularization {
    TriangularForm form;
    /// Unitary on the 2^q space with u0 * psi_i = column i of form.tmat, zero padded.
    CMatrix u0;
};

Triangularization triangularize(const StateSet &states);

}  // namespace pcsynth

#endif
