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

#include "sepscope/density.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sepscope/error.hpp"
#include "sepscope/linalg.hpp"

namespace sepscope {

DensityMatrix DensityMatrix::from_matrix(const ComplexMatrix& m, BipartiteDims dims) {
    if (!m.is_square() || m.rows() != dims.total()) {
        throw Error(ErrorKind::DimensionMismatch, "density matrix is " + std::to_string(m.rows()) + "x" +
                                                      std::to_string(m.cols()) + " but dA*dB = " +
                                                      std::to_string(dims.total()));
    }
    const double defect = hermiticity_defect(m);
    if (defect > kHermiticityTolerance * std::max(1.0, max_abs(m))) {
        throw Error(ErrorKind::ValidationError, "hermiticity: max|rho - rho^dagger| = " + std::to_string(defect));
    }
    ComplexMatrix sym = (m + m.adjoint()) * Complex{0.5, 0.0};
    const Complex tr = sym.trace();
    if (std::abs(tr - Complex{1.0, 0.0}) > kTraceTolerance) {
        throw Error(ErrorKind::ValidationError, "trace: Tr(rho) = " + std::to_string(tr.real()));
    }
    const auto eig = hermitian_eigenvalues(sym);
    if (eig.back() < -kPositivityTolerance) {
        throw Error(ErrorKind::ValidationError, "positivity: minimum eigenvalue " + std::to_string(eig.back()));
    }
    return DensityMatrix(std::move(sym), dims);
}

double DensityMatrix::purity() const {
    // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
    const double n = hs_norm(matrix_);
    return n * n;
}

DensityMatrix DensityMatrix::embedded(BipartiteDims larger) const {
    if (larger.dA < dims_.dA || larger.dB < dims_.dB) {
        throw Error(ErrorKind::DimensionMismatch, "embedding target is smaller than the state");
    }
    ComplexMatrix out(larger.total(), larger.total());
    for (std::size_t m = 0; m < dims_.dA; ++m)
        for (std::size_t mu = 0; mu < dims_.dB; ++mu)
            for (std::size_t n = 0; n < dims_.dA; ++n)
                for (std::size_t nu = 0; nu < dims_.dB; ++nu)
                    out(larger.index(m, mu), larger.index(n, nu)) = matrix_(dims_.index(m, mu), dims_.index(n, nu));
    return DensityMatrix(std::move(out), larger);
}

}  // namespace sepscope
