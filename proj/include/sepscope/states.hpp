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

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sepscope/density.hpp"
#include "sepscope/realign.hpp"

namespace sepscope {

/// Weight sums must be within this of one.
inline constexpr double kWeightTolerance = 1e-12;
/// Support-disjointness checks allow entries up to this size.
inline constexpr double kSupportTolerance = 1e-12;

inline constexpr double kDefaultTailRatio = 0.5;

// All constructors act on d (x) d with the same 0-based basis on both sides.

DensityMatrix pure_from_coefficients(const CoefficientMatrix& d);

/// (2/7)|w><w| + (alpha/7) sigma_+ + ((5 - alpha)/7) sigma_-, with
/// |w> = (|00> + |11> + |22>)/sqrt(3) and sigma_+/- the cyclic shift
/// projectors on {|01>,|12>,|20>} and {|10>,|21>,|02>}. alpha in [2,5], d >= 3.
DensityMatrix rho_alpha(double alpha, std::size_t d);

/// sum_{i=start}^{d-1} p_i |ii><ii| with p_i proportional to r^(i-start),
/// renormalized over the truncated range. Separable, ||.^R||_Tr = 1 for every d.
DensityMatrix geometric_diagonal_tail(std::size_t start, std::size_t d, double ratio = kDefaultTailRatio);

/// The tail with start index 3 that sits next to rho_alpha.
DensityMatrix sigma_tail(std::size_t d, double ratio = kDefaultTailRatio, std::size_t start = 3);

/// t rho_alpha + (1 - t) sigma_tail; t in (0,1], alpha in (3,4], d >= 4.
DensityMatrix rho_t_alpha(double t, double alpha, std::size_t d, double ratio = kDefaultTailRatio);

/// sum_i q_i rho_i on the 4x4 corner: rho_1 = |omega><omega| with
/// |omega> = (|00>+|11>+|22>+|33>)/2 and rho_{s+1} = (1/4) sum_i |i, i+s mod 4><i, i+s mod 4|.
DensityMatrix shift_mixture(const std::array<double, 4>& q, std::size_t d);

/// (1 - t) shift_mixture(q) + t rho0, where rho0 must vanish on every row and
/// column |i>|mu> with i, mu < 4. Throws SupportOverlap otherwise.
DensityMatrix shift_mixture_t(const std::array<double, 4>& q, double t, const DensityMatrix& rho0);

/// |44><44| on d (x) d, d >= 5.
DensityMatrix default_shift_admixture(std::size_t d);

/// ((m - c) P_m + (mc - 1) F_m) / (m^3 - m) on the m x m corner of d (x) d, with
/// P_m the corner identity and F_m the corner swap. m >= 3, c in [-1,1], d >= m.
DensityMatrix werner_mc(std::size_t m, double c, std::size_t d);

/// eps * tail(m) + (1 - eps) werner_mc(m, c); eps in [0,1), c in [2/m - 1, 0), d > m.
DensityMatrix rho_eps_c(double eps, double c, std::size_t m, std::size_t d, double ratio = kDefaultTailRatio);

/// t |Phi_d><Phi_d| + (1 - t) I/d^2 with |Phi_d> = sum_i |ii>/sqrt(d).
DensityMatrix isotropic(double t, std::size_t d);

/// Convex combination; weights nonnegative, summing to 1, equal dims.
DensityMatrix mixture(const std::vector<std::pair<double, DensityMatrix>>& components);

// Closed-form realignment trace norms.

double rho_alpha_norm_formula(double alpha);
/// 2/m - c for c <= 1/m, c otherwise.
double werner_norm_formula(std::size_t m, double c);
/// The closed form usually quoted for shift_mixture:
///   3/4 sqrt(S - C) + 1/4 sqrt(S + 3C) + 3 q1,  S = sum q_i^2, C = q1q2+q2q3+q3q4+q1q4.
/// It only agrees with the actual trace norm when q2 = q3 = q4.
double shift_mixture_norm_quoted(const std::array<double, 4>& q);
/// Exact value: the diagonal block of rho^R is circulant(q)/4, whose singular
/// values are |DFT(q)|/4, plus twelve copies of q1/4 from the coherences of |omega>.
double shift_mixture_norm_exact(const std::array<double, 4>& q);

// Declarative state description shared by the CLI, sweeps and spec files.

enum class Family {
    Pure,
    Mixture,
    RhoAlpha,
    SigmaTail,
    RhoTAlpha,
    Example39Rho,
    Example39RhoT,
    WernerMC,
    VarrhoTail,
    RhoEpsC,
    IsotropicLikeCustom,
};

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);
std::vector<Family> all_families();
/// Smallest local dimension the family can be built in.
std::size_t minimal_dimension(Family f, const std::map<std::string, double>& params);
/// Truncation used when none is given: 12 for example39_rho_t (room for the
/// admixture outside the 4x4 corner), 8 otherwise.
std::size_t default_dimension(Family f);

struct StateSpec {
    Family family = Family::RhoAlpha;
    std::map<std::string, double> params;
    std::size_t truncation_dim = 8;

    double param(const std::string& name) const;  ///< throws ParamOutOfRange when missing
    double param_or(const std::string& name, double fallback) const;
    /// Geometric tail ratio, the "r" parameter.
    double tail_ratio() const { return param_or("r", kDefaultTailRatio); }
};

/// Parameters each family reads; anything else is rejected by build_state.
std::vector<std::string> family_parameters(Family f);

/// Family-specific parameter conventions:
///   pure:     sqrt(t)|00> + sqrt(1-t)|11>            (t default 0.5)
///   mixture:  t|00><00| + (1-t)|11><11|               (t default 0.5)
///   isotropic_like_custom: isotropic(t, dim)
///   example39_rho_t uses default_shift_admixture as rho0.
DensityMatrix build_state(const StateSpec& spec);

}  // namespace sepscope
