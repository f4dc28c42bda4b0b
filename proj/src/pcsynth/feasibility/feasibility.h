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

#ifndef PCSYNTH_FEASIBILITY_FEASIBILITY_H
#define PCSYNTH_FEASIBILITY_FEASIBILITY_H

#include <string_view>
#include <vector>

#include "pcsynth/numerics/cmatrix.h"
#include "pcsynth/stateset/state_set.h"

namespace pcsynth {

enum class Mode { Identification, Clone };

std::string_view mode_name(Mode mode);

/// Per-state success probabilities gamma_i.
struct ProbabilityAllocation {
    std::vector<double> gamma;
    Mode mode = Mode::Identification;
};

struct FeasibilityReport {
    bool feasible = false;
    /// X^(M) - Gamma (identification) or X^(M) - sqrt(Gamma) X^(N) sqrt(Gamma) (clone).
    CMatrix slack;
    double min_eigenvalue = 0;
};

/// Rejects gamma outside [0, 1] or with the wrong length.
void check_allocation(const ProbabilityAllocation &gamma, size_t n);

FeasibilityReport check_identification(const GramMatrix &xm, const ProbabilityAllocation &gamma,
                                       double tol = kFeasibilityTol);

/// Clone slack with every probe state equal; requires xm.copy_power < xn.copy_power.
FeasibilityReport check_clone(const GramMatrix &xm, const GramMatrix &xn, const ProbabilityAllocation &gamma,
                              double tol = kFeasibilityTol);

/// Iterations of the uniform-gamma bisection; 2^-34 < 1e-10.
inline constexpr int kBisectionSteps = 34;

/// Largest uniform gamma whose slack matrix is PSD, found by bisection on [0, 1].
/// `xn` is only read in clone mode.
ProbabilityAllocation max_uniform_gamma(const GramMatrix &xm, const GramMatrix *xn, Mode mode);

/// Failure amplitudes and rotation parameters feeding the core unitary.
struct SpectralData {
    /// Hermitian PSD square root of the slack; column i holds state i's failure coordinates.
    CMatrix c;
    /// Eigenvalues of I - C^dagger X^(M)^-1 C, ascending, clamped into [0, 1].
    std::vector<double> m;
    /// Matching eigenvectors.
    CMatrix v;
};

SpectralData spectral_data(const GramMatrix &xm, const CMatrix &slack);

}  // namespace pcsynth

#endif
