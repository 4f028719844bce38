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

#include "sepscope/states.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "sepscope/error.hpp"

namespace sepscope {

namespace {

void require_range(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::ParamOutOfRange, what);
}

void require_dim(std::size_t d, std::size_t minimum, const char* family) {
    if (d < minimum) {
        throw Error(ErrorKind::DimensionTooSmall, std::string(family) + " needs local dimension >= " +
                                                      std::to_string(minimum) + ", got " + std::to_string(d));
    }
}

ComplexMatrix basis_projector(std::size_t d, std::size_t i, std::size_t mu) {
    ComplexMatrix p(d * d, d * d);
    p(i * d + mu, i * d + mu) = 1.0;
    return p;
}

// Generator output is exact by construction; validation still runs so that a
// bad parameter combination can never escape as a "state".
DensityMatrix finish(const ComplexMatrix& m, std::size_t d) { return DensityMatrix::from_matrix(m, {d, d}); }

std::vector<double> geometric_weights(std::size_t count, double ratio) {
    std::vector<double> w(count);
    double total = 0.0;
    double term = 1.0;
    for (auto& x : w) {
        x = term;
        total += term;
        term *= ratio;
    }
    for (auto& x : w) x /= total;
    return w;
}

std::size_t integer_param(double value, const char* name) {
    require_range(value >= 0.0 && std::floor(value) == value, std::string(name) + " must be a nonnegative integer");
    return static_cast<std::size_t>(value);
}

}  // namespace

DensityMatrix pure_from_coefficients(const CoefficientMatrix& d) {
    const double norm = hs_norm(d.matrix);
    if (std::abs(norm - 1.0) > kNormalizationTolerance) {
        throw Error(ErrorKind::NotNormalized, "coefficient matrix has ||D||_2 = " + std::to_string(norm));
    }
    const auto psi = d.state_vector();
    return DensityMatrix::from_matrix(ComplexMatrix::outer(psi, psi), d.dims());
}

DensityMatrix rho_alpha(double alpha, std::size_t d) {
    require_range(alpha >= 2.0 && alpha <= 5.0, "rho_alpha needs 2 <= alpha <= 5, got " + std::to_string(alpha));
    require_dim(d, 3, "rho_alpha");
    ComplexMatrix rho(d * d, d * d);
    // (2/7)|w><w| puts 2/21 on every (ii),(jj) entry.
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) rho(i * d + i, j * d + j) = 2.0 / 21.0;
    for (std::size_t i = 0; i < 3; ++i) {
        rho += basis_projector(d, i, (i + 1) % 3) * Complex{alpha / 21.0, 0.0};
        rho += basis_projector(d, (i + 1) % 3, i) * Complex{(5.0 - alpha) / 21.0, 0.0};
    }
    return finish(rho, d);
}

DensityMatrix geometric_diagonal_tail(std::size_t start, std::size_t d, double ratio) {
    require_range(ratio > 0.0 && ratio < 1.0, "tail ratio must lie in (0,1), got " + std::to_string(ratio));
    if (d <= start) {
        throw Error(ErrorKind::DimensionTooSmall, "diagonal tail starting at " + std::to_string(start) +
                                                      " needs d > " + std::to_string(start));
    }
    const auto p = geometric_weights(d - start, ratio);
    ComplexMatrix rho(d * d, d * d);
    for (std::size_t i = start; i < d; ++i) rho(i * d + i, i * d + i) = p[i - start];
    return finish(rho, d);
}

DensityMatrix sigma_tail(std::size_t d, double ratio, std::size_t start) {
    return geometric_diagonal_tail(start, d, ratio);
}

DensityMatrix rho_t_alpha(double t, double alpha, std::size_t d, double ratio) {
    require_range(t > 0.0 && t <= 1.0, "rho_t_alpha needs 0 < t <= 1, got " + std::to_string(t));
    require_range(alpha > 3.0 && alpha <= 4.0, "rho_t_alpha needs 3 < alpha <= 4, got " + std::to_string(alpha));
    require_dim(d, 4, "rho_t_alpha");
    const auto rho = rho_alpha(alpha, d).matrix() * Complex{t, 0.0} +
                     sigma_tail(d, ratio).matrix() * Complex{1.0 - t, 0.0};
    return finish(rho, d);
}

DensityMatrix shift_mixture(const std::array<double, 4>& q, std::size_t d) {
    double total = 0.0;
    for (double x : q) {
        if (!(x >= 0.0)) throw Error(ErrorKind::WeightsInvalid, "weights must be nonnegative");
        total += x;
    }
    if (std::abs(total - 1.0) > kWeightTolerance) {
        throw Error(ErrorKind::WeightsInvalid, "weights sum to " + std::to_string(total));
    }
    require_dim(d, 4, "shift_mixture");
    ComplexMatrix rho(d * d, d * d);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) rho(i * d + i, j * d + j) += q[0] / 4.0;
    for (std::size_t s = 1; s < 4; ++s)
        for (std::size_t i = 0; i < 4; ++i) {
            const std::size_t mu = (i + s) % 4;
            rho(i * d + mu, i * d + mu) += q[s] / 4.0;
        }
    return finish(rho, d);
}

DensityMatrix shift_mixture_t(const std::array<double, 4>& q, double t, const DensityMatrix& rho0) {
    require_range(t >= 0.0 && t <= 1.0, "shift_mixture_t needs 0 <= t <= 1, got " + std::to_string(t));
    const auto dims = rho0.dims();
    if (dims.dA != dims.dB) throw Error(ErrorKind::DimensionMismatch, "rho0 must live on d (x) d");
    const std::size_t d = dims.dA;
    require_dim(d, 4, "shift_mixture_t");
    const auto& m0 = rho0.matrix();
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t mu = 0; mu < 4; ++mu) {
            const std::size_t row = i * d + mu;
            for (std::size_t k = 0; k < m0.cols(); ++k) {
                if (std::abs(m0(row, k)) > kSupportTolerance || std::abs(m0(k, row)) > kSupportTolerance) {
                    throw Error(ErrorKind::SupportOverlap,
                                "rho0 has weight on |" + std::to_string(i) + ">|" + std::to_string(mu) + ">");
                }
            }
        }
    const auto rho = shift_mixture(q, d).matrix() * Complex{1.0 - t, 0.0} + m0 * Complex{t, 0.0};
    return finish(rho, d);
}

DensityMatrix default_shift_admixture(std::size_t d) {
    require_dim(d, 5, "default_shift_admixture");
    return finish(basis_projector(d, 4, 4), d);
}

DensityMatrix werner_mc(std::size_t m, double c, std::size_t d) {
    require_range(m >= 3, "werner_mc needs m >= 3, got " + std::to_string(m));
    require_range(c >= -1.0 && c <= 1.0, "werner_mc needs -1 <= c <= 1, got " + std::to_string(c));
    require_dim(d, m, "werner_mc");
    const double md = static_cast<double>(m);
    const double norm = md * md * md - md;
    ComplexMatrix rho(d * d, d * d);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            rho(i * d + j, i * d + j) += (md - c) / norm;
            rho(i * d + j, j * d + i) += (md * c - 1.0) / norm;
        }
    return finish(rho, d);
}

DensityMatrix rho_eps_c(double eps, double c, std::size_t m, std::size_t d, double ratio) {
    require_range(eps >= 0.0 && eps < 1.0, "rho_eps_c needs 0 <= eps < 1, got " + std::to_string(eps));
    require_range(m >= 3, "rho_eps_c needs m >= 3");
    const double lower = 2.0 / static_cast<double>(m) - 1.0;
    require_range(c >= lower && c < 0.0,
                  "rho_eps_c needs " + std::to_string(lower) + " <= c < 0, got " + std::to_string(c));
    if (d <= m) throw Error(ErrorKind::DimensionTooSmall, "rho_eps_c needs d > m");
    const auto rho = geometric_diagonal_tail(m, d, ratio).matrix() * Complex{eps, 0.0} +
                     werner_mc(m, c, d).matrix() * Complex{1.0 - eps, 0.0};
    return finish(rho, d);
}

DensityMatrix isotropic(double t, std::size_t d) {
    require_range(t >= 0.0 && t <= 1.0, "isotropic needs 0 <= t <= 1, got " + std::to_string(t));
    require_dim(d, 1, "isotropic");
    const double dd = static_cast<double>(d);
    ComplexMatrix rho = ComplexMatrix::identity(d * d) * Complex{(1.0 - t) / (dd * dd), 0.0};
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) rho(i * d + i, j * d + j) += t / dd;
    return finish(rho, d);
}

DensityMatrix mixture(const std::vector<std::pair<double, DensityMatrix>>& components) {
    if (components.empty()) throw Error(ErrorKind::WeightsInvalid, "mixture needs at least one component");
    const auto dims = components.front().second.dims();
    double total = 0.0;
    ComplexMatrix rho(dims.total(), dims.total());
    for (const auto& [w, state] : components) {
        if (!(w >= 0.0)) throw Error(ErrorKind::WeightsInvalid, "mixture weights must be nonnegative");
        if (!(state.dims() == dims)) throw Error(ErrorKind::DimensionMismatch, "mixture components differ in dims");
        total += w;
        rho += state.matrix() * Complex{w, 0.0};
    }
    if (std::abs(total - 1.0) > kWeightTolerance) {
        throw Error(ErrorKind::WeightsInvalid, "mixture weights sum to " + std::to_string(total));
    }
    return DensityMatrix::from_matrix(rho, dims);
}

double rho_alpha_norm_formula(double alpha) {
    return 19.0 / 21.0 + (2.0 / 21.0) * std::sqrt(19.0 - 15.0 * alpha + 3.0 * alpha * alpha);
}

double werner_norm_formula(std::size_t m, double c) {
    const double kink = 1.0 / static_cast<double>(m);
    return c <= kink ? 2.0 * kink - c : c;
}

double shift_mixture_norm_quoted(const std::array<double, 4>& q) {
    const double s = q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3];
    const double c = q[0] * q[1] + q[1] * q[2] + q[2] * q[3] + q[0] * q[3];
    return 0.75 * std::sqrt(s - c) + 0.25 * std::sqrt(s + 3.0 * c) + 3.0 * q[0];
}

double shift_mixture_norm_exact(const std::array<double, 4>& q) {
    const double dc = q[0] + q[1] + q[2] + q[3];
    const double nyquist = std::abs(q[0] - q[1] + q[2] - q[3]);
    const double quarter = std::hypot(q[0] - q[2], q[1] - q[3]);  // appears twice
    return (dc + nyquist + 2.0 * quarter) / 4.0 + 3.0 * q[0];
}

namespace {

struct FamilyInfo {
    Family family;
    std::string_view name;
    std::vector<std::string> params;
};

const std::vector<FamilyInfo>& family_table() {
    static const std::vector<FamilyInfo> table = {
        {Family::Pure, "pure", {"t"}},
        {Family::Mixture, "mixture", {"t"}},
        {Family::RhoAlpha, "rho_alpha", {"alpha"}},
        {Family::SigmaTail, "sigma_tail", {"r"}},
        {Family::RhoTAlpha, "rho_t_alpha", {"t", "alpha", "r"}},
        {Family::Example39Rho, "example39_rho", {"q1", "q2", "q3", "q4"}},
        {Family::Example39RhoT, "example39_rho_t", {"q1", "q2", "q3", "q4", "t"}},
        {Family::WernerMC, "werner_mc", {"m", "c"}},
        {Family::VarrhoTail, "varrho_tail", {"m", "r"}},
        {Family::RhoEpsC, "rho_eps_c", {"eps", "c", "m", "r"}},
        {Family::IsotropicLikeCustom, "isotropic_like_custom", {"t"}},
    };
    return table;
}

const FamilyInfo& info(Family f) {
    for (const auto& entry : family_table())
        if (entry.family == f) return entry;
    throw Error(ErrorKind::ParamOutOfRange, "unknown family");
}

std::array<double, 4> weights_of(const StateSpec& spec) {
    return {spec.param("q1"), spec.param("q2"), spec.param("q3"), spec.param("q4")};
}

}  // namespace

std::string_view family_name(Family f) { return info(f).name; }

std::optional<Family> parse_family(std::string_view name) {
    for (const auto& entry : family_table())
        if (entry.name == name) return entry.family;
    return std::nullopt;
}

std::vector<Family> all_families() {
    std::vector<Family> out;
    for (const auto& entry : family_table()) out.push_back(entry.family);
    return out;
}

std::vector<std::string> family_parameters(Family f) { return info(f).params; }

std::size_t minimal_dimension(Family f, const std::map<std::string, double>& params) {
    auto m_or = [&](std::size_t fallback) {
        const auto it = params.find("m");
        return it == params.end() ? fallback : static_cast<std::size_t>(std::max(0.0, it->second));
    };
    switch (f) {
        case Family::Pure:
        case Family::Mixture:
        case Family::IsotropicLikeCustom: return 2;
        case Family::RhoAlpha: return 3;
        case Family::SigmaTail:
        case Family::RhoTAlpha:
        case Family::Example39Rho: return 4;
        case Family::Example39RhoT: return 5;
        case Family::WernerMC: return m_or(3);
        case Family::VarrhoTail:
        case Family::RhoEpsC: return m_or(3) + 1;
    }
    return 1;
}

std::size_t default_dimension(Family f) { return f == Family::Example39RhoT ? 12 : 8; }

double StateSpec::param(const std::string& name) const {
    const auto it = params.find(name);
    if (it == params.end()) {
        throw Error(ErrorKind::ParamOutOfRange,
                    std::string(family_name(family)) + " needs parameter '" + name + "'");
    }
    return it->second;
}

double StateSpec::param_or(const std::string& name, double fallback) const {
    const auto it = params.find(name);
    return it == params.end() ? fallback : it->second;
}

DensityMatrix build_state(const StateSpec& spec) {
    const auto allowed = family_parameters(spec.family);
    for (const auto& [key, value] : spec.params) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            throw Error(ErrorKind::ParamOutOfRange,
                        std::string(family_name(spec.family)) + " does not take parameter '" + key + "'");
        }
        if (!std::isfinite(value)) throw Error(ErrorKind::ParamOutOfRange, "parameter '" + key + "' is not finite");
    }
    const std::size_t d = spec.truncation_dim;
    require_dim(d, minimal_dimension(spec.family, spec.params), family_name(spec.family).data());
    const double r = spec.tail_ratio();

    switch (spec.family) {
        case Family::Pure: {
            const double t = spec.param_or("t", 0.5);
            require_range(t >= 0.0 && t <= 1.0, "pure needs 0 <= t <= 1");
            ComplexMatrix coeff(d, d);
            coeff(0, 0) = std::sqrt(t);
            coeff(1, 1) = std::sqrt(1.0 - t);
            return pure_from_coefficients({coeff});
        }
        case Family::Mixture: {
            const double t = spec.param_or("t", 0.5);
            require_range(t >= 0.0 && t <= 1.0, "mixture needs 0 <= t <= 1");
            return mixture({{t, finish(basis_projector(d, 0, 0), d)}, {1.0 - t, finish(basis_projector(d, 1, 1), d)}});
        }
        case Family::RhoAlpha: return rho_alpha(spec.param("alpha"), d);
        case Family::SigmaTail: return sigma_tail(d, r);
        case Family::RhoTAlpha: return rho_t_alpha(spec.param("t"), spec.param("alpha"), d, r);
        case Family::Example39Rho: return shift_mixture(weights_of(spec), d);
        case Family::Example39RhoT:
            return shift_mixture_t(weights_of(spec), spec.param("t"), default_shift_admixture(d));
        case Family::WernerMC: return werner_mc(integer_param(spec.param("m"), "m"), spec.param("c"), d);
        case Family::VarrhoTail: return geometric_diagonal_tail(integer_param(spec.param("m"), "m"), d, r);
        case Family::RhoEpsC:
            return rho_eps_c(spec.param("eps"), spec.param("c"), integer_param(spec.param("m"), "m"), d, r);
        case Family::IsotropicLikeCustom: return isotropic(spec.param_or("t", 0.5), d);
    }
    throw Error(ErrorKind::ParamOutOfRange, "unhandled family");
}

}  // namespace sepscope
