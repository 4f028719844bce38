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

#include "sepscope/random_states.hpp"

#include <cmath>

#include "sepscope/error.hpp"
#include "sepscope/states.hpp"

namespace sepscope {

namespace {

ComplexMatrix normalized_by_trace(const ComplexMatrix& m) {
    return m * Complex{1.0 / m.trace().real(), 0.0};
}

}  // namespace

ComplexMatrix StateSampler::ginibre(std::size_t rows, std::size_t cols) {
    ComplexMatrix g(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) g(r, c) = {normal(), normal()};
    }
    return g;
}

ComplexMatrix StateSampler::unitary(std::size_t n) {
    ComplexMatrix q = ginibre(n, n);
    // Modified Gram-Schmidt over columns.
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < k; ++j) {
            Complex dot{};
            for (std::size_t i = 0; i < n; ++i) dot += std::conj(q(i, j)) * q(i, k);
            for (std::size_t i = 0; i < n; ++i) q(i, k) -= dot * q(i, j);
        }
        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) norm += std::norm(q(i, k));
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < n; ++i) q(i, k) /= norm;
    }
    return q;
}

std::vector<Complex> StateSampler::unit_vector(std::size_t n) {
    std::vector<Complex> v(n);
    double norm = 0.0;
    for (auto& x : v) {
        x = {normal(), normal()};
        norm += std::norm(x);
    }
    norm = std::sqrt(norm);
    for (auto& x : v) x /= norm;
    return v;
}

CoefficientMatrix StateSampler::coefficients(BipartiteDims dims) {
    const auto v = unit_vector(dims.total());
    return CoefficientMatrix{unvec(v, dims.dA, dims.dB)};
}

DensityMatrix StateSampler::density(BipartiteDims dims, std::size_t rank) {
    const std::size_t n = dims.total();
    const ComplexMatrix g = ginibre(n, rank == 0 ? n : rank);
    return DensityMatrix::from_matrix(normalized_by_trace(g * g.adjoint()), dims);
}

DensityMatrix StateSampler::product_pure(BipartiteDims dims) {
    const auto a = unit_vector(dims.dA);
    const auto b = unit_vector(dims.dB);
    return DensityMatrix::from_matrix(kron(ComplexMatrix::outer(a, a), ComplexMatrix::outer(b, b)), dims);
}

DensityMatrix StateSampler::separable(BipartiteDims dims, std::size_t terms) {
    if (terms == 0) throw Error(ErrorKind::ParamOutOfRange, "a separable mixture needs at least one term");
    std::exponential_distribution<double> gamma1(1.0);
    std::vector<std::pair<double, DensityMatrix>> parts;
    double total = 0.0;
    for (std::size_t k = 0; k < terms; ++k) {
        const double w = gamma1(engine_);
        total += w;
        parts.emplace_back(w, product_pure(dims));
    }
    for (auto& p : parts) p.first /= total;
    return mixture(parts);
}

DensityMatrix StateSampler::symmetric(std::size_t d) {
    const BipartiteDims dims{d, d};
    const ComplexMatrix p = symmetric_projector(d);
    const ComplexMatrix g = ginibre(d * d, d * d);
    const ComplexMatrix inner = normalized_by_trace(p * (g * g.adjoint()) * p);
    const ComplexMatrix flat = normalized_by_trace(p);
    const double w = std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
    return DensityMatrix::from_matrix(Complex{1.0 - w, 0.0} * inner + Complex{w, 0.0} * flat, dims);
}

ComplexMatrix symmetric_projector(std::size_t d) {
    ComplexMatrix p = ComplexMatrix::identity(d * d) + flip_operator(d);
    return p * Complex{0.5, 0.0};
}

}  // namespace sepscope
