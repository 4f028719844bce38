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

#include <cstdint>
#include <random>

#include "sepscope/density.hpp"
#include "sepscope/realign.hpp"

namespace sepscope {

/// Seeded sampler for test and benchmark states. Not cryptographic.
class StateSampler {
public:
    explicit StateSampler(std::uint64_t seed) : engine_(seed) {}

    /// Entries i.i.d. complex standard normal.
    ComplexMatrix ginibre(std::size_t rows, std::size_t cols);

    /// Haar-distributed unitary via Gram-Schmidt on a Ginibre matrix.
    ComplexMatrix unitary(std::size_t n);

    /// Unit vector, Haar on the sphere.
    std::vector<Complex> unit_vector(std::size_t n);

    /// Normalized coefficient matrix of a random pure state.
    CoefficientMatrix coefficients(BipartiteDims dims);

    /// G G^dagger / Tr, with G of shape (dA dB) x rank. rank = 0 means full rank.
    DensityMatrix density(BipartiteDims dims, std::size_t rank = 0);

    /// |a><a| (x) |b><b| for random unit a, b.
    DensityMatrix product_pure(BipartiteDims dims);

    /// Convex combination of `terms` random product states with Dirichlet(1) weights.
    DensityMatrix separable(BipartiteDims dims, std::size_t terms);

    /// Random state supported on the symmetric subspace, mixed with the
    /// normalized symmetric projector with a uniform random weight.
    DensityMatrix symmetric(std::size_t d);

    std::mt19937_64& engine() noexcept { return engine_; }

private:
    double normal() { return normal_(engine_); }

    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

/// (I + F) / 2 on C^d (x) C^d.
ComplexMatrix symmetric_projector(std::size_t d);

}  // namespace sepscope
