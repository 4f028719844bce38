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

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace sepscope {

using Complex = std::complex<double>;

/// Dense complex matrix stored row-major. All entries are finite.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    /// Throws DimensionMismatch if entries.size() != rows*cols, NonFinite on NaN/Inf.
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const Complex> diag);
    /// |v><w| with w conjugated.
    static ComplexMatrix outer(std::span<const Complex> v, std::span<const Complex> w);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t size() const noexcept { return data_.size(); }
    bool empty() const noexcept { return data_.empty(); }
    bool is_square() const noexcept { return rows_ == cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Complex> entries() const noexcept { return data_; }
    std::span<Complex> entries() noexcept { return data_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conj() const;
    Complex trace() const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scalar);

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(ComplexMatrix a, Complex scalar);
ComplexMatrix operator*(Complex scalar, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// Local dimensions of a bipartite space H_A (x) H_B.
///
/// Composite indices are 0-based and A-major: the basis ket |m>|mu> sits at
/// row/column m*dB + mu. This matches the usual 1-based (m-1)*dB + mu
/// labelling after the shift to 0-based indices.
struct BipartiteDims {
    std::size_t dA = 1;
    std::size_t dB = 1;

    BipartiteDims() = default;
    /// Throws DimensionTooSmall if either dimension is zero.
    BipartiteDims(std::size_t a, std::size_t b);

    std::size_t total() const noexcept { return dA * dB; }
    std::size_t index(std::size_t m, std::size_t mu) const noexcept { return m * dB + mu; }

    friend bool operator==(const BipartiteDims&, const BipartiteDims&) = default;
};

/// (A (x) B)[(m mu),(n nu)] = A[m,n] * B[mu,nu].
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// rho^{T_B}: entry (m mu, n nu) <- (m nu, n mu).
ComplexMatrix partial_transpose_B(const ComplexMatrix& m, BipartiteDims dims);
/// rho^{T_A}: entry (m mu, n nu) <- (n mu, m nu).
ComplexMatrix partial_transpose_A(const ComplexMatrix& m, BipartiteDims dims);

/// Frobenius norm, (Tr M^dagger M)^{1/2}.
double hs_norm(const ComplexMatrix& m);
/// Largest entry magnitude.
double max_abs(const ComplexMatrix& m);
/// max |M - M^dagger| entrywise; M must be square.
double hermiticity_defect(const ComplexMatrix& m);

/// Row-major flatten: [x11..x1t, x21..x2t, ...].
std::vector<Complex> vec(const ComplexMatrix& m);
/// Inverse of vec for a rows x cols shape.
ComplexMatrix unvec(std::span<const Complex> v, std::size_t rows, std::size_t cols);

}  // namespace sepscope
