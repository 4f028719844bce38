// Copyright 2026 The sepscope Authors
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

#include "sepscope/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "sepscope/error.hpp"

namespace sepscope {

namespace {

// Rotation that zeroes the (p,q) entry of the 2x2 Hermitian block
// [[app, apq], [conj(apq), aqq]]. With phase = apq/|apq| the unitary is
//   J = [[c, s], [-s*conj(phase), c*conj(phase)]].
struct JacobiRotation {
    double c;
    double s;
    Complex phase;
};

JacobiRotation make_rotation(double app, double aqq, Complex apq) {
    const double g = std::abs(apq);
    const double theta = (aqq - app) / (2.0 * g);
    const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    return {c, t * c, apq / g};
}

// Columns p, q of X <- X J.
void rotate_columns(ComplexMatrix& x, std::size_t p, std::size_t q, const JacobiRotation& r) {
    const Complex jqp = -r.s * std::conj(r.phase);
    const Complex jqq = r.c * std::conj(r.phase);
    for (std::size_t k = 0; k < x.rows(); ++k) {
        const Complex xp = x(k, p);
        const Complex xq = x(k, q);
        x(k, p) = r.c * xp + jqp * xq;
        x(k, q) = r.s * xp + jqq * xq;
    }
}

// Rows p, q of X <- J^dagger X.
void rotate_rows(ComplexMatrix& x, std::size_t p, std::size_t q, const JacobiRotation& r) {
    for (std::size_t k = 0; k < x.cols(); ++k) {
        const Complex xp = x(p, k);
        const Complex xq = x(q, k);
        x(p, k) = r.c * xp - r.s * r.phase * xq;
        x(q, k) = r.s * xp + r.c * r.phase * xq;
    }
}

double off_diagonal_norm(const ComplexMatrix& a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) sum += std::norm(a(i, j));
    return std::sqrt(sum);
}

std::vector<std::size_t> descending_order(const std::vector<double>& values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
    return order;
}

}  // namespace

double SingularValues::sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }

double SingularValues::sum_of_squares() const {
    double total = 0.0;
    for (double v : values) total += v * v;
    return total;
}

std::size_t SingularValues::rank(double relative_cutoff) const {
    if (values.empty() || values.front() <= 0.0) return 0;
    const double floor = relative_cutoff * values.front();
    return static_cast<std::size_t>(std::count_if(values.begin(), values.end(), [&](double v) { return v > floor; }));
}

HermitianEigen hermitian_eigen(const ComplexMatrix& m) {
    if (!m.is_square()) {
        throw Error(ErrorKind::NonSquare,
                    "eigensolve of a " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
    }
    const double defect = hermiticity_defect(m);
    const double scale = std::max(1.0, max_abs(m));
    if (defect > kHermiticityTolerance * scale) {
        throw Error(ErrorKind::NotHermitian, "max|M - M^dagger| = " + std::to_string(defect));
    }

    const std::size_t n = m.rows();
    ComplexMatrix a = (m + m.adjoint()) * Complex{0.5, 0.0};
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double threshold = kJacobiOffDiagonalTolerance * hs_norm(a);

    bool converged = false;
    for (int sweep = 0; sweep <= kJacobiMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) <= threshold) {
            converged = true;
            break;
        }
        if (sweep == kJacobiMaxSweeps) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                if (std::abs(apq) < std::numeric_limits<double>::min()) continue;
                const auto rot = make_rotation(a(p, p).real(), a(q, q).real(), apq);
                rotate_columns(a, p, q, rot);
                rotate_rows(a, p, q, rot);
                a(p, q) = a(q, p) = Complex{0.0, 0.0};
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                rotate_columns(v, p, q, rot);
            }
        }
    }
    if (!converged) {
        throw Error(ErrorKind::NoConvergence,
                    "Jacobi eigensolver hit " + std::to_string(kJacobiMaxSweeps) + " sweeps");
    }

    std::vector<double> diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i).real();
    const auto order = descending_order(diag);

    HermitianEigen out{std::vector<double>(n), ComplexMatrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = diag[order[k]];
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) { return hermitian_eigen(m).values; }

Svd svd(const ComplexMatrix& m) {
    if (m.empty()) throw Error(ErrorKind::DimensionMismatch, "SVD of an empty matrix");
    if (m.rows() < m.cols()) {
        Svd t = svd(m.adjoint());
        return {std::move(t.v), std::move(t.s), std::move(t.u)};
    }

    const std::size_t rows = m.rows();
    const std::size_t n = m.cols();
    ComplexMatrix w = m;
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double tol = std::numeric_limits<double>::epsilon() * static_cast<double>(rows);
    // Columns that have collapsed to rounding noise cannot be orthogonalized
    // to relative precision; their singular values are below this floor anyway.
    const double noise = std::numeric_limits<double>::epsilon() * hs_norm(m);
    const double floor = noise * noise;

    bool converged = false;
    for (int sweep = 0; sweep < kJacobiMaxSweeps && !converged; ++sweep) {
        converged = true;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double alpha = 0.0;
                double beta = 0.0;
                Complex gamma{0.0, 0.0};
                for (std::size_t k = 0; k < rows; ++k) {
                    alpha += std::norm(w(k, p));
                    beta += std::norm(w(k, q));
                    gamma += std::conj(w(k, p)) * w(k, q);
                }
                const double g = std::abs(gamma);
                if (alpha <= floor || beta <= floor || g <= tol * std::sqrt(alpha * beta)) continue;
                converged = false;
                const auto rot = make_rotation(alpha, beta, gamma);
                rotate_columns(w, p, q, rot);
                rotate_columns(v, p, q, rot);
            }
        }
    }
    if (!converged) {
        throw Error(ErrorKind::NoConvergence, "one-sided Jacobi SVD hit " + std::to_string(kJacobiMaxSweeps) + " sweeps");
    }

    std::vector<double> norms(n);
    for (std::size_t j = 0; j < n; ++j) {
        double sum = 0.0;
        for (std::size_t k = 0; k < rows; ++k) sum += std::norm(w(k, j));
        norms[j] = std::sqrt(sum);
    }
    const auto order = descending_order(norms);

    Svd out{ComplexMatrix(rows, n), SingularValues{std::vector<double>(n)}, ComplexMatrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t j = order[k];
        const double sigma = norms[j];
        out.s.values[k] = sigma;
        if (sigma > 0.0)
            for (std::size_t i = 0; i < rows; ++i) out.u(i, k) = w(i, j) / sigma;
        for (std::size_t i = 0; i < n; ++i) out.v(i, k) = v(i, j);
    }
    return out;
}

SingularValues singular_values(const ComplexMatrix& m) { return svd(m).s; }

double trace_norm(const ComplexMatrix& m) { return singular_values(m).sum(); }

}  // namespace sepscope
