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

#include "pcsynth/numerics/linalg.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "pcsynth/error.h"

using namespace pcsynth;

namespace {

constexpr int kMaxSweeps = 100;
// Relative gap below which neighbouring eigenvalues are treated as one cluster.
constexpr double kClusterGap = 1e-9;
// Relative margin by which a later candidate must beat an earlier one to be chosen.
constexpr double kPivotTie = 1e-9;

double scale_of(const CMatrix &a) {
    return std::max(1.0, max_abs(a));
}

void check_hermitian(const CMatrix &a, double tol, const char *who) {
    if (!a.is_square()) {
        std::ostringstream msg;
        msg << who << ": matrix is " << a.rows() << "x" << a.cols() << ", expected square";
        throw InputError(msg.str());
    }
    double err = hermiticity_error(a);
    if (err > tol * scale_of(a)) {
        std::ostringstream msg;
        msg << who << ": matrix is not Hermitian (max |A - A^dagger| = " << err << ")";
        throw InputError(msg.str());
    }
}

/// Index of the largest value, preferring lower indices unless beaten by a relative margin.
size_t pick_pivot(const std::vector<double> &values) {
    size_t best = 0;
    for (size_t k = 1; k < values.size(); k++) {
        if (values[k] > values[best] * (1 + kPivotTie) + 1e-300) {
            best = k;
        }
    }
    return best;
}

void remove_projection(CVector &v, const std::vector<CVector> &basis) {
    for (const auto &b : basis) {
        Complex overlap = inner(b, v);
        for (size_t k = 0; k < v.size(); k++) {
            v[k] -= overlap * b[k];
        }
    }
}

void normalize(CVector &v) {
    double len = norm(v);
    for (auto &z : v) {
        z /= len;
    }
}

/// Rotates v so that its largest-magnitude component is real and positive.
void canonicalize_phase(CVector &v) {
    std::vector<double> mags(v.size());
    for (size_t k = 0; k < v.size(); k++) {
        mags[k] = std::abs(v[k]);
    }
    size_t k = pick_pivot(mags);
    if (mags[k] == 0) {
        return;
    }
    Complex phase = std::conj(v[k]) / mags[k];
    for (auto &z : v) {
        z *= phase;
    }
    v[k] = mags[k];
}

void jacobi_rotate(CMatrix &a, CMatrix &v, size_t p, size_t q) {
    size_t n = a.rows();
    Complex apq = a(p, q);
    double r = std::abs(apq);
    Complex unphase = std::conj(apq) / r;
    double app = a(p, p).real();
    double aqq = a(q, q).real();
    double theta = (aqq - app) / (2 * r);
    double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
    double c = 1 / std::sqrt(1 + t * t);
    double s = t * c;

    // J = diag(1, e^{-i phi}) * [[c, s], [-s, c]] on coordinates (p, q).
    Complex jpp = c;
    Complex jpq = s;
    Complex jqp = -s * unphase;
    Complex jqq = c * unphase;

    for (size_t k = 0; k < n; k++) {
        Complex akp = a(k, p);
        Complex akq = a(k, q);
        a(k, p) = akp * jpp + akq * jqp;
        a(k, q) = akp * jpq + akq * jqq;
    }
    for (size_t k = 0; k < n; k++) {
        Complex apk = a(p, k);
        Complex aqk = a(q, k);
        a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
        a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
    }
    a(p, q) = 0;
    a(q, p) = 0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();
    for (size_t k = 0; k < n; k++) {
        Complex vkp = v(k, p);
        Complex vkq = v(k, q);
        v(k, p) = vkp * jpp + vkq * jqp;
        v(k, q) = vkp * jpq + vkq * jqq;
    }
}

/// Re-spans a degenerate eigenspace with projected canonical basis vectors.
std::vector<CVector> canonical_cluster_basis(const std::vector<CVector> &cluster) {
    size_t d = cluster.front().size();
    std::vector<CVector> accepted;
    // Residual of e_m against the cluster projector minus accepted vectors:
    // |P e_m|^2 - sum |<a|e_m>|^2 = sum_b |b_m|^2 - sum_a |a_m|^2.
    for (size_t step = 0; step < cluster.size(); step++) {
        std::vector<double> residual(d, 0.0);
        for (size_t m = 0; m < d; m++) {
            double in_cluster = 0;
            for (const auto &b : cluster) {
                in_cluster += std::norm(b[m]);
            }
            double taken = 0;
            for (const auto &a : accepted) {
                taken += std::norm(a[m]);
            }
            residual[m] = in_cluster - taken;
        }
        size_t m = pick_pivot(residual);
        CVector v(d);
        for (const auto &b : cluster) {
            Complex coeff = std::conj(b[m]);
            for (size_t k = 0; k < d; k++) {
                v[k] += coeff * b[k];
            }
        }
        remove_projection(v, accepted);
        remove_projection(v, accepted);
        normalize(v);
        accepted.push_back(std::move(v));
    }
    return accepted;
}

}  // namespace

EigDecomposition pcsynth::hermitian_eig(const CMatrix &input, double hermitian_tol) {
    check_hermitian(input, hermitian_tol, "hermitian_eig");
    size_t n = input.rows();
    CMatrix a = hermitian_part(input);
    CMatrix v = CMatrix::identity(n);

    double frob2 = 0;
    for (const auto &z : a.data()) {
        frob2 += std::norm(z);
    }
    for (int sweep = 0; sweep < kMaxSweeps; sweep++) {
        double off = 0;
        for (size_t p = 0; p < n; p++) {
            for (size_t q = p + 1; q < n; q++) {
                off += std::norm(a(p, q));
            }
        }
        if (off <= 1e-30 * frob2) {
            break;
        }
        for (size_t p = 0; p < n; p++) {
            for (size_t q = p + 1; q < n; q++) {
                if (std::abs(a(p, q)) > 1e-300) {
                    jacobi_rotate(a, v, p, q);
                }
            }
        }
    }

    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
        return a(x, x).real() < a(y, y).real();
    });

    EigDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors = CMatrix(n, n);
    double scale = 0;
    for (size_t k = 0; k < n; k++) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        scale = std::max(scale, std::abs(out.eigenvalues[k]));
    }
    scale = std::max(scale, 1.0);

    size_t start = 0;
    while (start < n) {
        size_t stop = start + 1;
        while (stop < n && out.eigenvalues[stop] - out.eigenvalues[stop - 1] <= kClusterGap * scale) {
            stop++;
        }
        std::vector<CVector> cluster;
        for (size_t k = start; k < stop; k++) {
            cluster.push_back(v.column(order[k]));
        }
        if (cluster.size() == 1) {
            canonicalize_phase(cluster[0]);
        } else {
            cluster = canonical_cluster_basis(cluster);
        }
        for (size_t k = start; k < stop; k++) {
            out.eigenvectors.set_column(k, cluster[k - start]);
        }
        start = stop;
    }
    return out;
}

double pcsynth::min_eigenvalue(const CMatrix &a) {
    if (a.rows() == 0) {
        return 0;
    }
    return hermitian_eig(hermitian_part(a), std::numeric_limits<double>::infinity()).eigenvalues.front();
}

CMatrix pcsynth::cholesky_upper(const CMatrix &x) {
    check_hermitian(x, kStructuralTol, "cholesky_upper");
    size_t n = x.rows();
    double max_diag = 1;
    for (size_t k = 0; k < n; k++) {
        max_diag = std::max(max_diag, std::abs(x(k, k).real()));
    }
    CMatrix r(n, n);
    for (size_t j = 0; j < n; j++) {
        double pivot = x(j, j).real();
        for (size_t k = 0; k < j; k++) {
            pivot -= std::norm(r(k, j));
        }
        if (!(pivot > 1e-20 * max_diag)) {
            std::ostringstream msg;
            msg << "cholesky_upper: pivot " << j << " is " << pivot
                << " (matrix is numerically singular or indefinite)";
            throw NumericalError(msg.str());
        }
        double rjj = std::sqrt(pivot);
        r(j, j) = rjj;
        for (size_t i = j + 1; i < n; i++) {
            Complex acc = x(j, i);
            for (size_t k = 0; k < j; k++) {
                acc -= std::conj(r(k, j)) * r(k, i);
            }
            r(j, i) = acc / rjj;
        }
    }
    return r;
}

CMatrix pcsynth::psd_sqrt(const CMatrix &a, double infeasible_below) {
    check_hermitian(a, kStructuralTol, "psd_sqrt");
    auto eig = hermitian_eig(hermitian_part(a), std::numeric_limits<double>::infinity());
    size_t n = a.rows();
    std::vector<double> roots(n);
    for (size_t k = 0; k < n; k++) {
        double lambda = eig.eigenvalues[k];
        if (lambda < -infeasible_below) {
            std::ostringstream msg;
            msg << "psd_sqrt: eigenvalue " << lambda << " is below -" << infeasible_below
                << " (matrix is not positive semidefinite)";
            throw InfeasibleError(msg.str());
        }
        roots[k] = std::sqrt(std::max(lambda, 0.0));
    }
    const CMatrix &v = eig.eigenvectors;
    CMatrix s(n, n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            Complex acc{};
            for (size_t k = 0; k < n; k++) {
                acc += v(i, k) * roots[k] * std::conj(v(j, k));
            }
            s(i, j) = acc;
        }
    }
    return hermitian_part(s);
}

CMatrix pcsynth::orthonormal_completion(const CMatrix &v, double tol) {
    size_t d = v.rows();
    size_t k = v.cols();
    if (k > d) {
        throw InputError("orthonormal_completion: more columns than rows");
    }
    std::vector<CVector> basis;
    for (size_t c = 0; c < k; c++) {
        basis.push_back(v.column(c));
    }
    for (size_t a = 0; a < k; a++) {
        for (size_t b = a; b < k; b++) {
            Complex overlap = inner(basis[a], basis[b]);
            double err = std::abs(overlap - (a == b ? 1.0 : 0.0));
            if (err > tol) {
                std::ostringstream msg;
                msg << "orthonormal_completion: columns " << a << " and " << b << " have overlap " << overlap.real()
                    << (overlap.imag() < 0 ? "-" : "+") << std::abs(overlap.imag())
                    << "i, expected " << (a == b ? 1 : 0);
                throw InputError(msg.str());
            }
        }
    }

    CMatrix out(d, d);
    for (size_t c = 0; c < k; c++) {
        for (size_t r = 0; r < d; r++) {
            out(r, c) = v(r, c);
        }
    }
    for (size_t c = k; c < d; c++) {
        std::vector<double> residual(d);
        for (size_t m = 0; m < d; m++) {
            double taken = 0;
            for (const auto &b : basis) {
                taken += std::norm(b[m]);
            }
            residual[m] = 1 - taken;
        }
        size_t m = pick_pivot(residual);
        CVector e(d);
        e[m] = 1;
        remove_projection(e, basis);
        remove_projection(e, basis);
        normalize(e);
        out.set_column(c, e);
        basis.push_back(std::move(e));
    }
    return out;
}

CMatrix pcsynth::orthonormalize_columns(const CMatrix &v) {
    std::vector<CVector> basis;
    for (size_t c = 0; c < v.cols(); c++) {
        CVector col = v.column(c);
        double before = norm(col);
        remove_projection(col, basis);
        remove_projection(col, basis);
        double after = norm(col);
        if (!(after > 1e-12 * std::max(before, 1e-300))) {
            throw NumericalError("orthonormalize_columns: column " + std::to_string(c) + " is dependent");
        }
        normalize(col);
        basis.push_back(std::move(col));
    }
    return CMatrix::from_columns(v.rows(), basis);
}

CMatrix pcsynth::inverse_upper(const CMatrix &r) {
    if (!r.is_square()) {
        throw InputError("inverse_upper: matrix is not square");
    }
    size_t n = r.rows();
    CMatrix inv(n, n);
    for (size_t col = 0; col < n; col++) {
        // Solve R x = e_col by back substitution.
        for (size_t ii = n; ii-- > 0;) {
            Complex acc = ii == col ? 1.0 : 0.0;
            for (size_t k = ii + 1; k < n; k++) {
                acc -= r(ii, k) * inv(k, col);
            }
            if (r(ii, ii) == Complex{}) {
                throw NumericalError("inverse_upper: zero diagonal at " + std::to_string(ii));
            }
            inv(ii, col) = acc / r(ii, ii);
        }
    }
    return inv;
}

CMatrix pcsynth::hpd_inverse(const CMatrix &x) {
    CMatrix rinv = inverse_upper(cholesky_upper(x));
    // X = R^dagger R  =>  X^-1 = R^-1 R^-dagger.
    return hermitian_part(rinv * rinv.adjoint());
}
