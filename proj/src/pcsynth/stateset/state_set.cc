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

#include "pcsynth/stateset/state_set.h"

#include <cmath>
#include <sstream>

#include "pcsynth/error.h"
#include "pcsynth/numerics/linalg.h"

using namespace pcsynth;

CMatrix StateSet::column_matrix() const {
    return CMatrix::from_columns(dim(), states);
}

StateSet pcsynth::validate_states(std::vector<CVector> raw, size_t qubits, std::optional<std::vector<double>> priors) {
    if (qubits == 0 || qubits > 16) {
        throw InputError("state set: qubits must be in [1, 16], got " + std::to_string(qubits));
    }
    StateSet out;
    out.qubits = qubits;
    size_t d = out.dim();
    if (raw.empty()) {
        throw InputError("state set: no states given");
    }
    if (raw.size() > d) {
        std::ostringstream msg;
        msg << "state set: " << raw.size() << " states cannot be independent in dimension " << d;
        throw InputError(msg.str());
    }
    for (size_t i = 0; i < raw.size(); i++) {
        auto &v = raw[i];
        if (v.size() != d) {
            std::ostringstream msg;
            msg << "state set: state " << i << " has " << v.size() << " amplitudes, expected " << d;
            throw InputError(msg.str());
        }
        for (const auto &z : v) {
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
                throw InputError("state set: state " + std::to_string(i) + " has a non-finite amplitude");
            }
        }
        double len = norm(v);
        if (!(len > 1e-300)) {
            throw InputError("state set: state " + std::to_string(i) + " is the zero vector");
        }
        for (auto &z : v) {
            z /= len;
        }
    }

    // Grow the prefix one state at a time so the error names the culprit.
    for (size_t k = 2; k <= raw.size(); k++) {
        CMatrix t = CMatrix::from_columns(d, std::vector<CVector>(raw.begin(), raw.begin() + k));
        double lambda = min_eigenvalue(t.adjoint() * t);
        double sigma = std::sqrt(std::max(lambda, 0.0));
        if (sigma <= kIndependenceTol) {
            std::ostringstream msg;
            msg << "state set: state " << (k - 1) << " is linearly dependent on the preceding states"
                << " (smallest singular value " << sigma << ")";
            throw InputError(msg.str());
        }
    }

    if (priors.has_value()) {
        if (priors->size() != raw.size()) {
            throw InputError("state set: priors length does not match the number of states");
        }
        double total = 0;
        for (double p : *priors) {
            if (!(p >= 0)) {
                throw InputError("state set: priors must be nonnegative");
            }
            total += p;
        }
        if (std::abs(total - 1) > 1e-9) {
            throw InputError("state set: priors must sum to 1");
        }
    }
    out.states = std::move(raw);
    out.priors = std::move(priors);
    return out;
}

GramMatrix pcsynth::gram(const StateSet &states) {
    size_t n = states.size();
    GramMatrix x{CMatrix(n, n), 1};
    for (size_t i = 0; i < n; i++) {
        x.entries(i, i) = 1;
        for (size_t j = i + 1; j < n; j++) {
            Complex overlap = inner(states.states[i], states.states[j]);
            x.entries(i, j) = overlap;
            x.entries(j, i) = std::conj(overlap);
        }
    }
    return x;
}

GramMatrix pcsynth::gram_power(const GramMatrix &x, int copies) {
    if (copies < 1) {
        throw InputError("gram_power: copy count must be >= 1, got " + std::to_string(copies));
    }
    return {entrywise_power(x.entries, copies), x.copy_power * copies};
}

CVector pcsynth::tensor_power(std::span<const Complex> v, int copies) {
    if (copies < 1) {
        throw InputError("tensor_power: copy count must be >= 1");
    }
    CVector out(v.begin(), v.end());
    for (int c = 1; c < copies; c++) {
        out = kron(out, v);
    }
    return out;
}

StateSet pcsynth::tensor_power(const StateSet &states, int copies) {
    StateSet out;
    out.qubits = states.qubits * copies;
    out.priors = states.priors;
    for (const auto &v : states.states) {
        out.states.push_back(tensor_power(v, copies));
    }
    return out;
}
