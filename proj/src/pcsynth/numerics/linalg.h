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

#ifndef PCSYNTH_NUMERICS_LINALG_H
#define PCSYNTH_NUMERICS_LINALG_H

#include <vector>

#include "pcsynth/numerics/cmatrix.h"

namespace pcsynth {

struct EigDecomposition {
    /// Ascending.
    std::vector<double> eigenvalues;
    /// Orthonormal columns, column k pairs with eigenvalues[k].
    CMatrix eigenvectors;
};

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi rotations.
///
/// Output is canonical: eigenvalues ascending, each eigenvector's largest
/// component made real positive, and degenerate clusters re-spanned by
/// Gram-Schmidt of the canonical basis vectors projected into the cluster.
/// Throws InputError for non-square input or when |A - A^dagger| exceeds
/// `hermitian_tol`.
EigDecomposition hermitian_eig(const CMatrix &a, double hermitian_tol = kStructuralTol);

/// Smallest eigenvalue of a Hermitian matrix (hermitized before solving).
double min_eigenvalue(const CMatrix &a);

/// Upper-triangular R with positive real diagonal and R^dagger R = X.
/// Throws NumericalError naming the pivot when X is singular or indefinite.
CMatrix cholesky_upper(const CMatrix &x);

/// Hermitian PSD square root. Eigenvalues in [-infeasible_below, 0) are
/// clamped to zero; anything lower throws InfeasibleError.
CMatrix psd_sqrt(const CMatrix &a, double infeasible_below = kFeasibilityTol);

/// Extends k orthonormal columns in dimension d to a d x d unitary whose first
/// k columns are the input, bit for bit. New columns come from the canonical
/// basis vector with the largest residual after projection (lowest index on
/// ties), orthogonalized twice.
CMatrix orthonormal_completion(const CMatrix &v, double tol = kStructuralTol);

/// Modified Gram-Schmidt with a second pass. Columns must be independent.
CMatrix orthonormalize_columns(const CMatrix &v);

/// Inverse of an upper-triangular matrix with nonzero diagonal.
CMatrix inverse_upper(const CMatrix &r);

/// Inverse of a Hermitian positive-definite matrix through its Cholesky factor.
CMatrix hpd_inverse(const CMatrix &x);

}  // namespace pcsynth

#endif
