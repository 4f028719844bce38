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

#include <vector>

#include "sepscope/matrix.hpp"

namespace sepscope {

/// Inputs with max|M - M^dagger| <= kHermiticityTolerance * max(1, max|M|) are
/// accepted as Hermitian and symmetrized before solving.
inline constexpr double kHermiticityTolerance = 1e-10;
/// Jacobi stops once the off-diagonal Frobenius mass drops below this times ||M||_2.
inline constexpr double kJacobiOffDiagonalTolerance = 1e-14;
inline constexpr int kJacobiMaxSweeps = 100;

/// Nonnegative reals sorted descending.
struct SingularValues {
    std::vector<double> values;

    double sum() const;
    double sum_of_squares() const;
    /// Number of values above cutoff * values.front().
    std::size_t rank(double relative_cutoff) const;
};

struct HermitianEigen {
    std::vector<double> values;  ///< descending
    ComplexMatrix vectors;       ///< column k is the eigenvector of values[k]
};

/// Thin SVD, M = U diag(s) V^dagger. U is rows x k, V is cols x k with
/// k = min(rows, cols). Columns of U belonging to zero singular values are zero.
struct Svd {
    ComplexMatrix u;
    SingularValues s;
    ComplexMatrix v;
};

/// Cyclic complex Jacobi. Throws NonSquare, NotHermitian or NoConvergence.
HermitianEigen hermitian_eigen(const ComplexMatrix& m);
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// One-sided (Hestenes) Jacobi on M itself; zero singular values come out at
/// the eps*||M|| level instead of the sqrt(eps) floor of a Gram-matrix route.
Svd svd(const ComplexMatrix& m);
SingularValues singular_values(const ComplexMatrix& m);

/// ||M||_Tr = Tr (M^dagger M)^{1/2}.
double trace_norm(const ComplexMatrix& m);

}  // namespace sepscope
