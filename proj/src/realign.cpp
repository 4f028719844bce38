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

#include "sepscope/realign.hpp"

#include <cmath>
#include <string>

#include "sepscope/error.hpp"

namespace sepscope {

namespace {

void require_bipartite_square(const ComplexMatrix& m, BipartiteDims dims, const char* op) {
    if (!m.is_square() || m.rows() != dims.total()) {
        throw Error(ErrorKind::DimensionMismatch, std::string(op) + ": matrix side " + std::to_string(m.rows()) +
                                                      " does not match dA*dB = " + std::to_string(dims.total()));
    }
}

}  // namespace

RealignedOperator realign_row(const ComplexMatrix& m, BipartiteDims dims) {
    require_bipartite_square(m, dims, "realign_row");
    const std::size_t dA = dims.dA;
    const std::size_t dB = dims.dB;
    ComplexMatrix out(dA * dA, dB * dB);
    for (std::size_t a = 0; a < dA; ++a)
        for (std::size_t n = 0; n < dA; ++n)
            for (std::size_t mu = 0; mu < dB; ++mu)
                for (std::size_t nu = 0; nu < dB; ++nu)
                    out(a * dA + n, mu * dB + nu) = m(dims.index(a, mu), dims.index(n, nu));
    return {std::move(out), RealignVariant::Row, dims};
}

RealignedOperator realign_column(const ComplexMatrix& m, BipartiteDims dims) {
    require_bipartite_square(m, dims, "realign_column");
    const std::size_t dA = dims.dA;
    const std::size_t dB = dims.dB;
    ComplexMatrix tilde(dB * dB, dA * dA);
    for (std::size_t a = 0; a < dA; ++a)
        for (std::size_t n = 0; n < dA; ++n)
            for (std::size_t mu = 0; mu < dB; ++mu)
                for (std::size_t nu = 0; nu < dB; ++nu)
                    tilde(nu * dB + mu, n * dA + a) = m(dims.index(a, mu), dims.index(n, nu));
    return {tilde.transpose(), RealignVariant::Column, dims};
}

ComplexMatrix flip_operator(std::size_t d) {
    if (d == 0) throw Error(ErrorKind::DimensionTooSmall, "flip operator needs d >= 1");
    ComplexMatrix f(d * d, d * d);
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y) f(y * d + x, x * d + y) = 1.0;
    return f;
}

RealignedOperator realign_pure(const CoefficientMatrix& d) {
    const double norm = hs_norm(d.matrix);
    if (std::abs(norm - 1.0) > kNormalizationTolerance) {
        throw Error(ErrorKind::NotNormalized, "coefficient matrix has ||D||_2 = " + std::to_string(norm));
    }
    return {kron(d.matrix, d.matrix.conj()), RealignVariant::Row, d.dims()};
}

RealignedOperator realign_from_tensor_sum(const std::vector<std::pair<ComplexMatrix, ComplexMatrix>>& terms) {
    if (terms.empty()) throw Error(ErrorKind::EmptyTermList, "tensor sum has no terms");
    const auto& [a0, b0] = terms.front();
    if (!a0.is_square() || !b0.is_square() || a0.empty() || b0.empty()) {
        throw Error(ErrorKind::DimensionMismatch, "tensor-sum factors must be non-empty square matrices");
    }
    const BipartiteDims dims{a0.rows(), b0.rows()};
    ComplexMatrix out(dims.dA * dims.dA, dims.dB * dims.dB);
    for (const auto& [a, b] : terms) {
        if (a.rows() != dims.dA || a.cols() != dims.dA || b.rows() != dims.dB || b.cols() != dims.dB) {
            throw Error(ErrorKind::DimensionMismatch, "tensor-sum factors must share their shapes");
        }
        const auto va = a.entries();
        const auto vb = b.entries();
        for (std::size_t i = 0; i < va.size(); ++i)
            for (std::size_t j = 0; j < vb.size(); ++j) out(i, j) += va[i] * vb[j];
    }
    return {std::move(out), RealignVariant::Row, dims};
}

}  // namespace sepscope
