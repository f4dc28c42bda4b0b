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

#ifndef PCSYNTH_SYNTHESIS_CORE_UNITARY_H
#define PCSYNTH_SYNTHESIS_CORE_UNITARY_H

#include <string>
#include <string_view>
#include <vector>

#include "pcsynth/feasibility/feasibility.h"
#include "pcsynth/numerics/cmatrix.h"

namespace pcsynth {

enum class CoreConstruction { Isometry, Spectral };

std::string_view construction_name(CoreConstruction c);

/// What the core must do on (first register, probe).
///
/// Input i is t_in column i with the probe at 0. Its image must be
/// sqrt(gamma_i) (t_out column i, probe 1) + sum_j c(j, i) (e_j, probe 0).
struct CoreContract {
    /// d x n: input coordinates in the failure frame.
    CMatrix t_in;
    /// d x n: success targets.
    CMatrix t_out;
    std::vector<double> gamma;
    /// n x n failure amplitudes; column i belongs to input i.
    CMatrix c;

    size_t dim() const {
        return t_in.rows();
    }
    size_t size() const {
        return t_in.cols();
    }
    /// 2d-long encoded input i, index = a * 2 + probe.
    CVector encoded_input(size_t i) const;
    /// 2d-long required image of input i.
    CVector encoded_output(size_t i) const;
};

/// Unitary on the register (d) times the probe (2); basis index a * 2 + probe.
struct CoreUnitary {
    CMatrix matrix;
    /// One label per basis index: alpha_j (failure frame, probe 0), phi_j
    /// (success frame, probe 1) or beta_k (unused coordinates).
    std::vector<std::string> basis_labels;
    CoreConstruction construction = CoreConstruction::Isometry;
    /// Largest |U a_i - b_i| over the inputs.
    double contract_residual = 0;
};

/// Max over i of |U a_i - b_i|.
double contract_residual(const CMatrix &u, const CoreContract &contract);

/// Extends the map a_i -> b_i to a unitary. Throws NumericalError when the
/// input and output Grams differ by more than 1e-8.
CoreUnitary build_core_isometry(const CoreContract &contract);

/// (V (x) I) S (V^dagger (x) I) with S the probe rotation by sqrt(m_i) on
/// register pattern i. Throws InputError for m outside [0, 1].
CoreUnitary build_core_spectral(const SpectralData &spectral, const CoreContract &contract);

/// 2x2 rotation [[sqrt(1-m), -sqrt(m)], [sqrt(m), sqrt(1-m)]] on (probe 0, probe 1).
CMatrix probe_rotation(double m);

/// V embedded in the d x d identity.
CMatrix embedded_rotation_frame(const CMatrix &v, size_t dim);

}  // namespace pcsynth

#endif
