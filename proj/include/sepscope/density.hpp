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

#include "sepscope/matrix.hpp"

namespace sepscope {

inline constexpr double kTraceTolerance = 1e-10;
inline constexpr double kPositivityTolerance = 1e-10;

/// A validated bipartite state: Hermitian, trace one, positive semidefinite.
class DensityMatrix {
public:
    /// Throws DimensionMismatch on a shape/dims disagreement and ValidationError
    /// naming the failed invariant ("hermiticity", "trace" or "positivity").
    /// The stored matrix is the symmetrized (M + M^dagger)/2.
    static DensityMatrix from_matrix(const ComplexMatrix& m, BipartiteDims dims);

    const ComplexMatrix& matrix() const noexcept { return matrix_; }
    BipartiteDims dims() const noexcept { return dims_; }

    /// Tr(rho^2).
    double purity() const;

    /// Zero-pads both local spaces up to the given dimensions. Spectra of the
    /// realigned and partially transposed matrices only gain zeros.
    DensityMatrix embedded(BipartiteDims larger) const;

private:
    DensityMatrix(ComplexMatrix m, BipartiteDims dims) : matrix_(std::move(m)), dims_(dims) {}

    ComplexMatrix matrix_;
    BipartiteDims dims_;
};

}  // namespace sepscope
