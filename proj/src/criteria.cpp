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

#include "sepscope/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "sepscope/error.hpp"
#include "sepscope/realign.hpp"

namespace sepscope {

std::string_view to_string(Verdict v) { return v == Verdict::Entangled ? "entangled" : "inconclusive"; }

std::size_t SchmidtSpectrum::schmidt_rank(double relative_cutoff) const {
    return SingularValues{deltas}.rank(relative_cutoff);
}

SchmidtSpectrum schmidt_spectrum(const DensityMatrix& rho) {
    auto sv = singular_values(realign_row(rho.matrix(), rho.dims()).matrix);
    SchmidtSpectrum out;
    out.sum = sv.sum();
    out.sum_sq = sv.sum_of_squares();
    out.deltas = std::move(sv.values);
    return out;
}

std::vector<OperatorSchmidtTerm> operator_schmidt_decomposition(const ComplexMatrix& m, BipartiteDims dims,
                                                                double relative_cutoff) {
    // rho^R = sum_k delta_k |E_k><F_k| with <F_k| a plain transpose, so from
    // rho^R = U S V^dagger: vec(E_k) = u_k and vec(F_k) = conj(v_k).
    const auto r = realign_row(m, dims);
    const Svd s = svd(r.matrix);
    const std::size_t rank = s.s.rank(relative_cutoff);
    std::vector<OperatorSchmidtTerm> terms;
    terms.reserve(rank);
    std::vector<Complex> col_u(dims.dA * dims.dA);
    std::vector<Complex> col_v(dims.dB * dims.dB);
    for (std::size_t k = 0; k < rank; ++k) {
        for (std::size_t i = 0; i < col_u.size(); ++i) col_u[i] = s.u(i, k);
        for (std::size_t i = 0; i < col_v.size(); ++i) col_v[i] = std::conj(s.v(i, k));
        terms.push_back({s.s.values[k], unvec(col_u, dims.dA, dims.dA), unvec(col_v, dims.dB, dims.dB)});
    }
    return terms;
}

double decomposition_cost(const std::vector<std::pair<ComplexMatrix, ComplexMatrix>>& terms) {
    double cost = 0.0;
    for (const auto& [a, b] : terms) cost += hs_norm(a) * hs_norm(b);
    return cost;
}

double ccn(const DensityMatrix& rho) { return schmidt_spectrum(rho).sum; }

Verdict rccn_verdict_for(double norm, const Thresholds& thresholds) {
    return norm > 1.0 + thresholds.rccn ? Verdict::Entangled : Verdict::Inconclusive;
}

Verdict ppt_verdict_for(double min_eigenvalue, const Thresholds& thresholds) {
    return min_eigenvalue < -thresholds.ppt ? Verdict::Entangled : Verdict::Inconclusive;
}

RccnResult rccn_test(const DensityMatrix& rho, const Thresholds& thresholds) {
    const double norm = trace_norm(realign_row(rho.matrix(), rho.dims()).matrix);
    return {rccn_verdict_for(norm, thresholds), norm};
}

PptResult ppt_test(const DensityMatrix& rho, const Thresholds& thresholds) {
    const double lowest = hermitian_eigenvalues(partial_transpose_B(rho.matrix(), rho.dims())).back();
    return {ppt_verdict_for(lowest, thresholds), lowest};
}

double pure_state_ccn_from_vector(std::span<const double> lambdas) {
    double sum = 0.0;
    double sum_sq = 0.0;
    for (double l : lambdas) {
        if (!(l >= 0.0)) throw Error(ErrorKind::ParamOutOfRange, "Schmidt coefficients must be nonnegative");
        sum += l;
        sum_sq += l * l;
    }
    if (std::abs(sum_sq - 1.0) > kNormalizationTolerance) {
        throw Error(ErrorKind::NotNormalized, "sum of squared Schmidt coefficients is " + std::to_string(sum_sq));
    }
    return sum * sum;
}

bool is_symmetric(const DensityMatrix& rho, double tolerance) {
    const auto dims = rho.dims();
    if (dims.dA != dims.dB) {
        throw Error(ErrorKind::DimensionMismatch, "symmetry needs dA == dB, got " + std::to_string(dims.dA) + " and " +
                                                      std::to_string(dims.dB));
    }
    const auto f = flip_operator(dims.dA);
    const auto& m = rho.matrix();
    const double scale = std::max(1.0, max_abs(m));
    return max_abs(m - f * m) <= tolerance * scale && max_abs(m - m * f) <= tolerance * scale;
}

double symmetric_identity_residual(const DensityMatrix& rho, double tolerance) {
    if (!is_symmetric(rho, tolerance)) throw Error(ErrorKind::NotSymmetric, "state is not flip-invariant");
    const auto dims = rho.dims();
    const auto lhs = flip_operator(dims.dA) * realign_row(rho.matrix(), dims).matrix;
    return hs_norm(lhs - partial_transpose_A(rho.matrix(), dims));
}

CriterionReport full_report(const DensityMatrix& rho, const Thresholds& thresholds) {
    CriterionReport r;
    r.thresholds_used = thresholds;
    const auto rccn = rccn_test(rho, thresholds);
    r.realignment_trace_norm = rccn.norm;
    r.rccn_verdict = rccn.verdict;
    const auto spectrum = schmidt_spectrum(rho);
    r.ccn = spectrum.sum;
    r.schmidt_rank = spectrum.schmidt_rank(thresholds.schmidt_cutoff);
    const auto ppt = ppt_test(rho, thresholds);
    r.ppt_min_eigenvalue = ppt.min_eigenvalue;
    r.ppt_verdict = ppt.verdict;
    r.is_symmetric = rho.dims().dA == rho.dims().dB && is_symmetric(rho, thresholds.symmetry);
    r.purity = rho.purity();
    return r;
}

}  // namespace sepscope
