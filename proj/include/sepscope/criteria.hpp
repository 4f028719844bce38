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

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "sepscope/density.hpp"
#include "sepscope/linalg.hpp"

namespace sepscope {

/// Both tests are necessary conditions for separability only, so a passing
/// state is "inconclusive", never "separable".
enum class Verdict { Entangled, Inconclusive };

std::string_view to_string(Verdict v);

struct Thresholds {
    double rccn = 1e-9;             ///< entangled iff ||rho^R||_Tr > 1 + rccn
    double ppt = 1e-9;              ///< entangled iff lambda_min(rho^{T_B}) < -ppt
    double symmetry = 1e-10;        ///< max|rho - F rho|, max|rho - rho F| relative to max(1, max|rho|)
    double schmidt_cutoff = 1e-12;  ///< deltas below this times delta_1 do not count toward the Schmidt rank
};

/// Operator Schmidt coefficients delta_1 >= delta_2 >= ... of rho, i.e. the
/// singular values of rho^R.
struct SchmidtSpectrum {
    std::vector<double> deltas;
    double sum = 0.0;
    double sum_sq = 0.0;

    std::size_t schmidt_rank(double relative_cutoff) const;
};

/// One term delta_k E_k (x) F_k of rho = sum_k delta_k E_k (x) F_k, with
/// Tr(E_k^dagger E_l) = Tr(F_k^dagger F_l) = [k == l].
struct OperatorSchmidtTerm {
    double delta;
    ComplexMatrix e;
    ComplexMatrix f;
};

SchmidtSpectrum schmidt_spectrum(const DensityMatrix& rho);

/// Terms with delta above cutoff * delta_1. Works for any square operator on
/// the bipartite space, not only states.
std::vector<OperatorSchmidtTerm> operator_schmidt_decomposition(const ComplexMatrix& m, BipartiteDims dims,
                                                                double relative_cutoff = 1e-12);

/// sum_k ||A_k||_2 ||B_k||_2 for one particular decomposition M = sum_k A_k (x) B_k.
/// The cross norm is the infimum of this over all decompositions.
double decomposition_cost(const std::vector<std::pair<ComplexMatrix, ComplexMatrix>>& terms);

/// Computable cross norm; equals the sum of operator Schmidt coefficients,
/// where the infimum over decompositions is attained.
double ccn(const DensityMatrix& rho);

struct RccnResult {
    Verdict verdict;
    double norm;
};

struct PptResult {
    Verdict verdict;
    double min_eigenvalue;
};

RccnResult rccn_test(const DensityMatrix& rho, const Thresholds& thresholds = {});
PptResult ppt_test(const DensityMatrix& rho, const Thresholds& thresholds = {});

/// (sum_k lambda_k)^2 for the vector Schmidt coefficients of a pure state.
/// Throws NotNormalized unless sum lambda_k^2 = 1, ParamOutOfRange on negatives.
double pure_state_ccn_from_vector(std::span<const double> lambdas);

/// rho = F rho = rho F. Throws DimensionMismatch when dA != dB.
bool is_symmetric(const DensityMatrix& rho, double tolerance = Thresholds{}.symmetry);

/// ||F rho^R - rho^{T_A}||_2; vanishes for symmetric states. Throws NotSymmetric
/// when the precondition fails.
double symmetric_identity_residual(const DensityMatrix& rho, double tolerance = Thresholds{}.symmetry);

struct CriterionReport {
    double realignment_trace_norm = 0.0;
    double ccn = 0.0;
    double ppt_min_eigenvalue = 0.0;
    bool is_symmetric = false;
    std::size_t schmidt_rank = 0;
    double purity = 0.0;
    Verdict rccn_verdict = Verdict::Inconclusive;
    Verdict ppt_verdict = Verdict::Inconclusive;
    Thresholds thresholds_used;
};

CriterionReport full_report(const DensityMatrix& rho, const Thresholds& thresholds = {});

/// Recomputes both verdicts from the stored scalars and thresholds.
Verdict rccn_verdict_for(double norm, const Thresholds& thresholds);
Verdict ppt_verdict_for(double min_eigenvalue, const Thresholds& thresholds);

}  // namespace sepscope
