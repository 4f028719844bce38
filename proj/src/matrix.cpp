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

#include "sepscope/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sepscope/error.hpp"

namespace sepscope {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorKind::DimensionMismatch,
                    std::string(op) + ": " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                        " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
}

void require_bipartite_square(const ComplexMatrix& m, BipartiteDims dims, const char* op) {
    if (!m.is_square() || m.rows() != dims.total()) {
        throw Error(ErrorKind::DimensionMismatch,
                    std::string(op) + ": matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                        ", expected side dA*dB = " + std::to_string(dims.total()));
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
        throw Error(ErrorKind::DimensionMismatch, "entry count " + std::to_string(data_.size()) +
                                                      " does not match shape " + std::to_string(rows_) + "x" +
                                                      std::to_string(cols_));
    }
    for (const auto& z : data_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw Error(ErrorKind::NonFinite, "matrix entries must be finite");
        }
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged initializer list");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
    ComplexMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> v, std::span<const Complex> w) {
    ComplexMatrix m(v.size(), w.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < w.size(); ++j) m(i, j) = v[i] * std::conj(w[j]);
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
}

ComplexMatrix ComplexMatrix::conj() const {
    ComplexMatrix out = *this;
    for (auto& z : out.data_) z = std::conj(z);
    return out;
}

Complex ComplexMatrix::trace() const {
    if (!is_square()) throw Error(ErrorKind::NonSquare, "trace of a non-square matrix");
    Complex t{0.0, 0.0};
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    require_same_shape(*this, other, "operator+");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    require_same_shape(*this, other, "operator-");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
    for (auto& z : data_) z *= scalar;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(ComplexMatrix a, Complex scalar) { return a *= scalar; }
ComplexMatrix operator*(Complex scalar, ComplexMatrix a) { return a *= scalar; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw Error(ErrorKind::DimensionMismatch, "product of " + std::to_string(a.rows()) + "x" +
                                                      std::to_string(a.cols()) + " and " + std::to_string(b.rows()) +
                                                      "x" + std::to_string(b.cols()));
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

BipartiteDims::BipartiteDims(std::size_t a, std::size_t b) : dA(a), dB(b) {
    if (a == 0 || b == 0) throw Error(ErrorKind::DimensionTooSmall, "local dimensions must be >= 1");
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t m = 0; m < a.rows(); ++m)
        for (std::size_t n = 0; n < a.cols(); ++n) {
            const Complex amn = a(m, n);
            for (std::size_t mu = 0; mu < b.rows(); ++mu)
                for (std::size_t nu = 0; nu < b.cols(); ++nu)
                    out(m * b.rows() + mu, n * b.cols() + nu) = amn * b(mu, nu);
        }
    return out;
}

ComplexMatrix partial_transpose_B(const ComplexMatrix& m, BipartiteDims dims) {
    require_bipartite_square(m, dims, "partial_transpose_B");
    ComplexMatrix out(m.rows(), m.cols());
    for (std::size_t a = 0; a < dims.dA; ++a)
        for (std::size_t mu = 0; mu < dims.dB; ++mu)
            for (std::size_t n = 0; n < dims.dA; ++n)
                for (std::size_t nu = 0; nu < dims.dB; ++nu)
                    out(dims.index(a, mu), dims.index(n, nu)) = m(dims.index(a, nu), dims.index(n, mu));
    return out;
}

ComplexMatrix partial_transpose_A(const ComplexMatrix& m, BipartiteDims dims) {
    require_bipartite_square(m, dims, "partial_transpose_A");
    ComplexMatrix out(m.rows(), m.cols());
    for (std::size_t a = 0; a < dims.dA; ++a)
        for (std::size_t mu = 0; mu < dims.dB; ++mu)
            for (std::size_t n = 0; n < dims.dA; ++n)
                for (std::size_t nu = 0; nu < dims.dB; ++nu)
                    out(dims.index(a, mu), dims.index(n, nu)) = m(dims.index(n, mu), dims.index(a, nu));
    return out;
}

double hs_norm(const ComplexMatrix& m) {
    double sum = 0.0;
    for (const auto& z : m.entries()) sum += std::norm(z);
    return std::sqrt(sum);
}

double max_abs(const ComplexMatrix& m) {
    double best = 0.0;
    for (const auto& z : m.entries()) best = std::max(best, std::abs(z));
    return best;
}

double hermiticity_defect(const ComplexMatrix& m) {
    if (!m.is_square()) throw Error(ErrorKind::NonSquare, "hermiticity check needs a square matrix");
    double worst = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i; j < m.cols(); ++j) worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    return worst;
}

std::vector<Complex> vec(const ComplexMatrix& m) { return {m.entries().begin(), m.entries().end()}; }

ComplexMatrix unvec(std::span<const Complex> v, std::size_t rows, std::size_t cols) {
    return ComplexMatrix(rows, cols, std::vector<Complex>(v.begin(), v.end()));
}

}  // namespace sepscope
