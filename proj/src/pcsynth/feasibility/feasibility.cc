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

#include "pcsynth/feasibility/feasibility.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pcsynth/error.h"
#include "pcsynth/numerics/linalg.h"

using namespace pcsynth;

namespace {

// Bisection asks for exact positive semidefiniteness, up to eigensolver noise.
constexpr double kBoundaryTol = 1e-12;

CMatrix identification_slack(const CMatrix &xm, const std::vector<double> &gamma) {
    CMatrix slack = xm;
    for (size_t i = 0; i < gamma.size(); i++) {
        slack(i, i) -= gamma[i];
    }
    return slack;
}

CMatrix clone_slack(const CMatrix &xm, const CMatrix &xn, const std::vector<double> &gamma) {
    CMatrix slack = xm;
    for (size_t i = 0; i < gamma.size(); i++) {
        for (size_t j = 0; j < gamma.size(); j++) {
            slack(i, j) -= std::sqrt(gamma[i] * gamma[j]) * xn(i, j);
        }
    }
    return slack;
}

FeasibilityReport report_for(CMatrix slack, double tol) {
    FeasibilityReport r;
    r.min_eigenvalue = min_eigenvalue(slack);
    r.feasible = r.min_eigenvalue >= -tol;
    r.slack = std::move(slack);
    return r;
}

}  // namespace

std::string_view pcsynth::mode_name(Mode mode) {
    return mode == Mode::Identification ? "identify" : "clone";
}

void pcsynth::check_allocation(const ProbabilityAllocation &gamma, size_t n) {
    if (gamma.gamma.size() != n) {
        std::ostringstream msg;
        msg << "gamma has " << gamma.gamma.size() << " entries for " << n << " states";
        throw InputError(msg.str());
    }
    for (size_t i = 0; i < n; i++) {
        double g = gamma.gamma[i];
        if (!(g >= 0 && g <= 1)) {
            std::ostringstream msg;
            msg << "gamma[" << i << "] = " << g << " is outside [0, 1]";
            throw InputError(msg.str());
        }
    }
}

FeasibilityReport pcsynth::check_identification(const GramMatrix &xm, const ProbabilityAllocation &gamma,
                                                double tol) {
    check_allocation(gamma, xm.size());
    return report_for(identification_slack(xm.entries, gamma.gamma), tol);
}

FeasibilityReport pcsynth::check_clone(const GramMatrix &xm, const GramMatrix &xn,
                                       const ProbabilityAllocation &gamma, double tol) {
    if (xm.copy_power >= xn.copy_power) {
        std::ostringstream msg;
        msg << "clone needs more output copies than input copies (M = " << xm.copy_power
            << ", N = " << xn.copy_power << ")";
        throw InputError(msg.str());
    }
    if (xm.size() != xn.size()) {
        throw InputError("check_clone: Gram sizes differ");
    }
    check_allocation(gamma, xm.size());
    return report_for(clone_slack(xm.entries, xn.entries, gamma.gamma), tol);
}

ProbabilityAllocation pcsynth::max_uniform_gamma(const GramMatrix &xm, const GramMatrix *xn, Mode mode) {
    size_t n = xm.size();
    if (mode == Mode::Clone && xn == nullptr) {
        throw InputError("max_uniform_gamma: clone mode needs the output Gram");
    }
    auto feasible = [&](double g) {
        ProbabilityAllocation a{std::vector<double>(n, g), mode};
        auto r = mode == Mode::Identification ? check_identification(xm, a, kBoundaryTol)
                                              : check_clone(xm, *xn, a, kBoundaryTol);
        return r.feasible;
    };
    if (feasible(1.0)) {
        return {std::vector<double>(n, 1.0), mode};
    }
    double lo = 0;
    double hi = 1;
    for (int step = 0; step < kBisectionSteps; step++) {
        double mid = 0.5 * (lo + hi);
        if (feasible(mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return {std::vector<double>(n, lo), mode};
}

SpectralData pcsynth::spectral_data(const GramMatrix &xm, const CMatrix &slack) {
    size_t n = xm.size();
    SpectralData out;
    out.c = psd_sqrt(slack);
    CMatrix k = CMatrix::identity(n) - out.c.adjoint() * hpd_inverse(xm.entries) * out.c;
    auto eig = hermitian_eig(hermitian_part(k), 1e-8);
    out.m.resize(n);
    for (size_t i = 0; i < n; i++) {
        double m = eig.eigenvalues[i];
        if (m < -kFeasibilityTol || m > 1 + kFeasibilityTol) {
            std::ostringstream msg;
            msg << "spectral_data: eigenvalue " << m << " of I - C^dagger X^-1 C is outside [0, 1];"
                << " the allocation is not feasible";
            throw NumericalError(msg.str());
        }
        out.m[i] = std::clamp(m, 0.0, 1.0);
    }
    out.v = std::move(eig.eigenvectors);
    return out;
}
