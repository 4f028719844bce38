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

#include <utility>
#include <vector>

#include "sepscope/matrix.hpp"

namespace sepscope {

enum class RealignVariant { Row, Column };

/// The dA^2 x dB^2 realigned matrix together with where it came from.
///
/// Row variant: result[(m n),(mu nu)] = source[(m mu),(n nu)], rows indexed
/// m*dA + n and columns mu*dB + nu. The realignment map is a linear isometry
/// in the Hilbert-Schmidt norm.
struct RealignedOperator {
    ComplexMatrix matrix;
    RealignVariant variant = RealignVariant::Row;
    BipartiteDims source_dims;
};

/// Amplitude matrix D = (d_{m mu}) of |psi> = sum d_{m mu} |m>|mu>; vec(D) is |psi>.
struct CoefficientMatrix {
    ComplexMatrix matrix;

    BipartiteDims dims() const { return {matrix.rows(), matrix.cols()}; }
    std::vector<Complex> state_vector() const { return vec(matrix); }
};

/// Pure-state inputs must satisfy | ||D||_2 - 1 | <= this.
inline constexpr double kNormalizationTolerance = 1e-10;

/// Throws DimensionMismatch unless m is square with side dA*dB.
RealignedOperator realign_row(const ComplexMatrix& m, BipartiteDims dims);

/// Column realignment: build tilde[(nu mu),(n m)] = source[(m mu),(n nu)]
/// (a dB^2 x dA^2 matrix) and transpose it. Same singular values as the row
/// variant; the two are related by conjugation with flip operators.
RealignedOperator realign_column(const ComplexMatrix& m, BipartiteDims dims);

/// d^2 x d^2 swap: F|x>|y> = |y>|x>.
ComplexMatrix flip_operator(std::size_t d);

/// D (x) conj(D); throws NotNormalized if ||D||_2 is not 1.
RealignedOperator realign_pure(const CoefficientMatrix& d);

/// sum_k vec(A_k) vec(B_k)^T (plain transpose, no conjugation). Equals
/// realign_row(sum_k A_k (x) B_k).
RealignedOperator realign_from_tensor_sum(const std::vector<std::pair<ComplexMatrix, ComplexMatrix>>& terms);

}  // namespace sepscope
