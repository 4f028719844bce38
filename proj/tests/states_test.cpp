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

#include <cmath>

#include "sepscope/criteria.hpp"
#include "sepscope/random_states.hpp"
#include "sepscope/realign.hpp"
#include "sepscope/states.hpp"
#include "test_support.hpp"

namespace sepscope {
namespace {

double norm_of(const DensityMatrix& rho) { return trace_norm(realign_row(rho.matrix(), rho.dims()).matrix); }

void expect_valid_state(const DensityMatrix& rho) {
    EXPECT_NEAR(rho.matrix().trace().real(), 1.0, 1e-10);
    EXPECT_LE(hermiticity_defect(rho.matrix()), 1e-12);
    EXPECT_GE(hermitian_eigenvalues(rho.matrix()).back(), -1e-10);
}

std::array<double, 4> reference_scheme(double q1) { return {q1, 0.5 - 1.5 * q1, 0.5 * q1, 0.5}; }

TEST(PureFromCoefficients, ProductBellAndPurity) {
    const auto p = pure_from_coefficients({ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}}});
    EXPECT_EQ(p.matrix()(0, 0), Complex(1.0));
    EXPECT_NEAR(hs_norm(p.matrix()), 1.0, 1e-15);

    const double h = 1.0 / std::sqrt(2.0);
    const auto b = pure_from_coefficients({ComplexMatrix{{h, 0.0}, {0.0, h}}});
    EXPECT_NEAR(b.matrix()(0, 3).real(), 0.5, 1e-15);
    EXPECT_NEAR(b.matrix()(3, 0).real(), 0.5, 1e-15);

    StateSampler s(1);
    EXPECT_NEAR(pure_from_coefficients(s.coefficients({3, 4})).purity(), 1.0, 1e-10);
    EXPECT_THROWS_KIND(ErrorKind::NotNormalized, pure_from_coefficients({ComplexMatrix{{1.0, 1.0}}}));
}

// Reference trace norms computed independently (numpy SVD of the explicit matrices).
TEST(RhoAlpha, FrozenNorms) {
    const std::pair<double, double> reference[] = {
        {2.0, 1.0},
        {2.5, 0.9523809523809523},
        {3.0, 1.0},
        {3.0001, 1.0000142860713752},
        {3.5, 1.0764548226411423},
        {4.0, 1.1567382201013898},
        {5.0, 1.3198951374800645},
    };
    for (const auto& [alpha, expected] : reference) {
        EXPECT_NEAR(norm_of(rho_alpha(alpha, 3)), expected, 1e-12) << alpha;
        EXPECT_NEAR(rho_alpha_norm_formula(alpha), expected, 1e-12) << alpha;
    }
    EXPECT_NEAR(rho_alpha_norm_formula(5.0), 19.0 / 21.0 + 2.0 / 21.0 * std::sqrt(19.0), 1e-15);
}

TEST(RhoAlpha, ValidAndEmbeddingInvariant) {
    for (double alpha : {2.0, 3.3, 5.0}) {
        const auto small = rho_alpha(alpha, 3);
        expect_valid_state(small);
        EXPECT_NEAR(norm_of(rho_alpha(alpha, 6)), norm_of(small), 1e-13);
    }
}

TEST(RhoAlpha, PptOnlyUpToFour) {
    EXPECT_GE(ppt_test(rho_alpha(4.0, 3)).min_eigenvalue, -1e-12);
    EXPECT_NEAR(ppt_test(rho_alpha(5.0, 3)).min_eigenvalue, -0.0334, 1e-4);
}

TEST(RhoAlpha, Errors) {
    EXPECT_THROWS_KIND(ErrorKind::ParamOutOfRange, rho_alpha(1.99, 3));
    EXPECT_THROWS_KIND(ErrorKind::ParamOutOfRange, rho_alpha(5.01, 3));
    EXPECT_THROWS_KIND(ErrorKind::DimensionTooSmall, rho_alpha(3.0, 2));
}

TEST(SigmaTail, SingleTermAndGeometric) {
    const auto one = sigma_tail(4);
    EXPECT_EQ(one.matrix()(15, 15), Complex(1.0));
    EXPECT_NEAR(norm_of(one), 1.0, 1e-15);

    const auto eight = sigma_tail(8, 0.5);
    expect_valid_state(eight);
    EXPECT_NEAR(norm_of(eight), 1.0, 1e-14);
    // p_i proportional to r^(i-3)
    EXPECT_NEAR(eight.matrix()(4 * 8 + 4, 4 * 8 + 4).real() / eight.matrix()(3 * 8 + 3, 3 * 8 + 3).real(), 0.5, 1e-15);
    EXPECT_EQ(ppt_test(eight).verdict, Verdict::Inconclusive);
    EXPECT_THROWS_KIND(ErrorKind::DimensionTooSmall, sigma_tail(3));
    EXPECT_THROWS_KIND(ErrorKind::ParamOutOfRange, sigma_tail(8, 1.0));
}

TEST(RhoTAlpha, ReducesAndSplitsNorm) {
    // t = 1 is rho_alpha itself
    EXPECT_MATRIX_NEAR(rho_t_alpha(1.0, 3.5, 5).matrix(), rho_alpha(3.5, 5).matrix(), 0.0);
    const auto r = rho_t_alpha(0.5, 4.0, 8);
    expect_valid_state(r);
    EXPECT_NEAR(norm_of(r), 0.5 * norm_of(rho_alpha(4.0, 3)) + 0.5, 1e-10);
    EXPECT_EQ(rccn_test(r).verdict, Verdict::Entangled);
    EXPECT_EQ(ppt_test(r).verdict, Verdict::Inconclusive);
    EXPECT_THROWS_KIND(ErrorKind::ParamOutOfRange, rho_t_alpha(0.0, 3.5, 8));
    EXPECT_THROWS_KIND(ErrorKind::ParamOutOfRange, rho_t_alpha(0.5, 3.0, 8));
    EXPECT_THROWS_KIND(ErrorKind::ParamOutOfRange, rho_t_alpha(0.5, 4.5, 8));
}

// Trace norms of the printed-weight scheme (q1, 1/2 - 3q1/2, q1/2, 1/2), from an independent SVD.
TEST(ShiftMixture, FrozenNormsForReferenceScheme) {
    const std::pair<double, double> reference[] = {
        {1.0 / 7.0, 0.9343670592917278},
        {1.0 / 8.0, 0.8800711768802617},
        {1.0 / 100.0, 0.5304056941504209},
    };
    for (const auto& [q1, expected] : reference) {
        const auto q = reference_scheme(q1);
        EXPECT_NEAR(norm_of(shift_mixture(q, 4)), expected, 1e-12);
        EXPECT_NEAR(shift_mixture_norm_exact(q), expected, 1e-12);
    }
}

TEST(ShiftMixture, DetectionOnsetBetweenSeventhAndSixth) {
    const auto swapped = [](double q1) { return std::array<double, 4>{q1, 0.5 * q1, 0.5 - 1.5 * q1, 0.5}; };
    for (double q1 : {1.0 / 100.0, 1.0 / 8.0, 1.0 / 7.0}) {
        EXPECT_LT(norm_of(shift_mixture(reference_scheme(q1), 4)), 1.0) << q1;
        EXPECT_LT(norm_of(shift_mixture(swapped(q1), 4)), 1.0) << q1;
    }
    EXPECT_NEAR(norm_of(shift_mixture(reference_scheme(1.0 / 6.0), 4)), 1.0067615691736824, 1e-12);
    EXPECT_NEAR(norm_of(shift_mixture(swapped(1.0 / 6.0), 4)), 1.004125813066366, 1e-12);
}

TEST(ShiftMixture, QuotedFormulaValuesAndWhereItHolds) {
    EXPECT_NEAR(shift_mixture_norm_quoted(reference_scheme(1.0 / 7.0)), 0.986576564123119, 1e-12);
    EXPECT_NEAR(shift_mixture_norm_quoted(reference_scheme(1.0 / 8.0)), 0.9496005391815772, 1e-12);
    EXPECT_NEAR(shift_mixture_norm_quoted(reference_scheme(1.0 / 100.0)), 0.7264354562257145, 1e-12);
    // With q2 = q3 = q4 the quoted form and the trace norm coincide.
    for (double q1 : {0.1, 0.25, 0.7}) {
        const double rest = (1.0 - q1) / 3.0;
        const std::array<double, 4> q{q1, rest, rest, rest};
        EXPECT_NEAR(shift_mixture_norm_quoted(q), norm_of(shift_mixture(q, 4)), 1e-12);
    }
}

TEST(ShiftMixture, ExactFormMatchesSvdOnRandomWeights) {
    StateSampler s(9);
    std::exponential_distribution<double> gamma1(1.0);
    for (int k = 0; k < 50; ++k) {
        std::array<double, 4> q{};
        double total = 0.0;
        for (auto& x : q) total += (x = gamma1(s.engine()));
        for (auto& x : q) x /= total;
        EXPECT_NEAR(norm_of(shift_mixture(q, 5)), shift_mixture_norm_exact(q), 1e-12);
    }
}

TEST(ShiftMixture, PptCondition) {
    // PPT iff q2 q4 >= q1^2 and q3 >= q1.
    const std::array<double, 4> ppt{0.2, 0.25, 0.3, 0.25};
    EXPECT_EQ(ppt_test(shift_mixture(ppt, 4)).verdict, Verdict::Inconclusive);
    const std::array<double, 4> low_q3{0.2, 0.4, 0.1, 0.3};
    EXPECT_EQ(ppt_test(shift_mixture(low_q3, 4)).verdict, Verdict::Entangled);
    const std::array<double, 4> low_product{0.25, 0.05, 0.4, 0.3};
    EXPECT_EQ(ppt_test(shift_mixture(low_product, 4)).verdict, Verdict::Entangled);
}

TEST(ShiftMixture, Errors) {
    EXPECT_THROWS_KIND(ErrorKind::WeightsInvalid, shift_mixture({0.5, 0.5, 0.5, -0.5}, 4));
    EXPECT_THROWS_KIND(ErrorKind::WeightsInvalid, shift_mixture({0.5, 0.5, 0.5, 0.5}, 4));
    EXPECT_THROWS_KIND(ErrorKind::DimensionTooSmall, shift_mixture({0.25, 0.25, 0.25, 0.25}, 3));
}

TEST(ShiftMixtureT, ZeroTAndNormSplit) {
    const auto q = reference_scheme(1.0 / 8.0);
    const auto rho0 = default_shift_admixture(12);
    EXPECT_MATRIX_NEAR(shift_mixture_t(q, 0.0, rho0).matrix(), shift_mixture(q, 12).matrix(), 0.0);
    const double t = 0.05;
    const auto mixed = shift_mixture_t(q, t, rho0);
    expect_valid_state(mixed);
    EXPECT_NEAR(norm_of(mixed), (1.0 - t) * norm_of(shift_mixture(q, 4)) + t, 1e-10);
    EXPECT_LT(norm_of(mixed), 1.0);
}

TEST(ShiftMixtureT, PptPatternStaysPpt) {
    // q2 < q1 < 1/4 <= q4 with q2 q4 >= q1^2 and q3 >= q1: PPT but entangled by construction.
    const std::array<double, 4> q{0.2, 0.18, 0.3, 0.32};
    const auto rho = shift_mixture_t(q, 0.02, default_shift_admixture(8));
    EXPECT_EQ(ppt_test(rho).verdict, Verdict::Inconclusive);
}

TEST(ShiftMixtureT, RejectsOverlappingAdmixture) {
    const auto bad = DensityMatrix::from_matrix(ComplexMatrix::identity(36) * Complex{1.0 / 36.0, 0.0}, {6, 6});
    EXPECT_THROWS_KIND(ErrorKind::SupportOverlap, shift_mixture_t(reference_scheme(0.1), 0.1, bad));
    EXPECT_THROWS_KIND(ErrorKind::ParamOutOfRange, shift_mixture_t(reference_scheme(0.1), 1.5, default_shift_admixture(6)));
}

TEST(WernerMC, FrozenValuesAndPiecewiseFormula) {
    EXPECT_NEAR(norm_of(werner_mc(3, 1.0, 3)), 1.0, 1e-13);
    EXPECT_NEAR(norm_of(werner_mc(3, -1.0, 3)), 5.0 / 3.0, 1e-13);
    EXPECT_NEAR(norm_of(werner_mc(3, -0.2, 3)), 2.0 / 3.0 + 0.2, 1e-13);
    for (std::size_t m : {3u, 4u, 5u})
        for (double c : {-1.0, -0.5, 0.0, 0.2, 0.6, 1.0})
            EXPECT_NEAR(norm_of(werner_mc(m, c, m + 1)), werner_norm_formula(m, c), 1e-12) << m << " " << c;
}

TEST(WernerMC, PptExactlyForNonnegativeC) {
    EXPECT_EQ(ppt_test(werner_mc(3, 1.0, 3)).verdict, Verdict::Inconclusive);
    EXPECT_EQ(ppt_test(werner_mc(3, 0.0, 3)).verdict, Verdict::Inconclusive);
    EXPECT_NEAR(ppt_test(werner_mc(3, -0.5, 3)).min_eigenvalue, -1.0 / 6.0, 1e-13);
    const auto miss = werner_mc(3, -0.2, 3);
    EXPECT_EQ(ppt_test(miss).verdict, Verdict::Entangled);
    EXPECT_EQ(rccn_test(miss).verdict, Verdict::Inconclusive);
}

TEST(WernerMC, Errors) {
    EXPECT_THROWS_KIND(ErrorKind::ParamOutOfRange, werner_mc(2, 0.0, 3));
    EXPECT_THROWS_KIND(ErrorKind::ParamOutOfRange, werner_mc(3, 1.5, 3));
    EXPECT_THROWS_KIND(ErrorKind::DimensionTooSmall, werner_mc(4, 0.0, 3));
}

TEST(RhoEpsC, ReducesSplitsAndClassifies) {
    EXPECT_MATRIX_NEAR(rho_eps_c(0.0, -0.3, 3, 6).matrix(), werner_mc(3, -0.3, 6).matrix(), 0.0);
    const auto r = rho_eps_c(0.5, -0.3, 3, 8);
    expect_valid_state(r);
    EXPECT_NEAR(norm_of(r), 0.5 + 0.5 * norm_of(werner_mc(3, -0.3, 3)), 1e-10);
    EXPECT_EQ(ppt_test(r).verdict, Verdict::Entangled);
    EXPECT_EQ(rccn_test(r).verdict, Verdict::Inconclusive);
}

TEST(RhoEpsC, Errors) {
    EXPECT_THROWS_KIND(ErrorKind::ParamOutOfRange, rho_eps_c(1.0, -0.3, 3, 8));
    EXPECT_THROWS_KIND(ErrorKind::ParamOutOfRange, rho_eps_c(0.5, 0.0, 3, 8));
    EXPECT_THROWS_KIND(ErrorKind::ParamOutOfRange, rho_eps_c(0.5, -0.5, 3, 8));
    EXPECT_THROWS_KIND(ErrorKind::DimensionTooSmall, rho_eps_c(0.5, -0.3, 3, 3));
}

TEST(Isotropic, EndpointsAndNorm) {
    expect_valid_state(isotropic(0.3, 3));
    // Maximally entangled endpoint realigns to the d x d identity scaled by 1/d.
    EXPECT_NEAR(norm_of(isotropic(1.0, 3)), 3.0, 1e-12);
    EXPECT_NEAR(norm_of(isotropic(0.0, 3)), 1.0 / 3.0, 1e-12);
    EXPECT_THROWS_KIND(ErrorKind::ParamOutOfRange, isotropic(-0.1, 3));
}

TEST(Mixture, IdentityMapAndSeparableDiagonal) {
    const auto rho = rho_alpha(2.5, 3);
    EXPECT_MATRIX_NEAR(mixture({{1.0, rho}}).matrix(), rho.matrix(), 0.0);

    StateSampler s(10);
    const auto a = DensityMatrix::from_matrix(kron(ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}}, ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}}), {2, 2});
    const auto b = DensityMatrix::from_matrix(kron(ComplexMatrix{{0.0, 0.0}, {0.0, 1.0}}, ComplexMatrix{{0.0, 0.0}, {0.0, 1.0}}), {2, 2});
    EXPECT_EQ(rccn_test(mixture({{0.5, a}, {0.5, b}})).verdict, Verdict::Inconclusive);

    std::vector<std::pair<double, DensityMatrix>> parts;
    for (int k = 0; k < 10; ++k) parts.emplace_back(0.1, s.product_pure({3, 3}));
    EXPECT_LE(rccn_test(mixture(parts)).norm, 1.0 + 1e-12);
}

TEST(Mixture, Errors) {
    const auto a = rho_alpha(2.5, 3);
    EXPECT_THROWS_KIND(ErrorKind::WeightsInvalid, mixture({}));
    EXPECT_THROWS_KIND(ErrorKind::WeightsInvalid, mixture({{0.6, a}, {0.6, a}}));
    EXPECT_THROWS_KIND(ErrorKind::WeightsInvalid, mixture({{1.2, a}, {-0.2, a}}));
    EXPECT_THROWS_KIND(ErrorKind::DimensionMismatch, mixture({{0.5, a}, {0.5, rho_alpha(2.5, 4)}}));
}

TEST(Families, NamesRoundTripAndParameters) {
    for (Family f : all_families()) EXPECT_EQ(parse_family(family_name(f)), f);
    EXPECT_FALSE(parse_family("werner").has_value());
    EXPECT_EQ(family_parameters(Family::RhoAlpha), std::vector<std::string>{"alpha"});
    EXPECT_EQ(default_dimension(Family::Example39RhoT), 12u);
    EXPECT_EQ(default_dimension(Family::RhoAlpha), 8u);
}

TEST(BuildState, EveryFamilyBuildsAtItsDefaultDimension) {
    const std::map<Family, std::map<std::string, double>> params = {
        {Family::Pure, {{"t", 0.3}}},
        {Family::Mixture, {{"t", 0.3}}},
        {Family::RhoAlpha, {{"alpha", 3.5}}},
        {Family::SigmaTail, {}},
        {Family::RhoTAlpha, {{"t", 0.5}, {"alpha", 4.0}}},
        {Family::Example39Rho, {{"q1", 0.25}, {"q2", 0.25}, {"q3", 0.25}, {"q4", 0.25}}},
        {Family::Example39RhoT, {{"q1", 0.25}, {"q2", 0.25}, {"q3", 0.25}, {"q4", 0.25}, {"t", 0.05}}},
        {Family::WernerMC, {{"m", 3}, {"c", -0.2}}},
        {Family::VarrhoTail, {{"m", 3}}},
        {Family::RhoEpsC, {{"m", 3}, {"c", -0.2}, {"eps", 0.3}}},
        {Family::IsotropicLikeCustom, {{"t", 0.5}}},
    };
    for (Family f : all_families()) {
        const StateSpec spec{f, params.at(f), default_dimension(f)};
        const auto rho = build_state(spec);
        EXPECT_EQ(rho.dims().dA, default_dimension(f)) << family_name(f);
        expect_valid_state(rho);
    }
}

TEST(BuildState, ConventionsAndRejections) {
    const auto pure = build_state({Family::Pure, {{"t", 0.8}}, 2});
    EXPECT_NEAR(rccn_test(pure).norm, std::pow(std::sqrt(0.8) + std::sqrt(0.2), 2), 1e-12);
    const auto rho = build_state({Family::RhoAlpha, {{"alpha", 4.0}}, 8});
    EXPECT_NEAR(rccn_test(rho).norm, 1.1567382201013898, 1e-12);

    EXPECT_THROWS_KIND(ErrorKind::ParamOutOfRange, build_state({Family::RhoAlpha, {}, 8}));
    EXPECT_THROWS_KIND(ErrorKind::ParamOutOfRange, build_state({Family::RhoAlpha, {{"alpha", 3.0}, {"c", 1.0}}, 8}));
    EXPECT_THROWS_KIND(ErrorKind::ParamOutOfRange, build_state({Family::RhoAlpha, {{"alpha", NAN}}, 8}));
    EXPECT_THROWS_KIND(ErrorKind::ParamOutOfRange, build_state({Family::WernerMC, {{"m", 3.5}, {"c", 0.0}}, 8}));
    EXPECT_THROWS_KIND(ErrorKind::DimensionTooSmall, build_state({Family::RhoAlpha, {{"alpha", 3.0}}, 2}));
}

TEST(DensityMatrixValidation, NamesTheFailedInvariant) {
    auto message_of = [](const ComplexMatrix& m, BipartiteDims d) -> std::string {
        try {
            DensityMatrix::from_matrix(m, d);
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::ValidationError);
            return e.what();
        }
        return "";
    };
    EXPECT_NE(message_of(ComplexMatrix::identity(4) * Complex{0.9 / 4.0, 0.0}, {2, 2}).find("trace"), std::string::npos);
    EXPECT_NE(message_of(ComplexMatrix{{0.5, 0.3}, {0.0, 0.5}}, {2, 1}).find("hermiticity"), std::string::npos);
    EXPECT_NE(message_of(ComplexMatrix{{1.5, 0.0}, {0.0, -0.5}}, {2, 1}).find("positivity"), std::string::npos);
    EXPECT_THROWS_KIND(ErrorKind::DimensionMismatch, DensityMatrix::from_matrix(ComplexMatrix::identity(4), {2, 3}));
}

TEST(DensityMatrixEmbedding, ZeroPaddingKeepsSpectra) {
    StateSampler s(11);
    const auto rho = s.density({2, 3});
    const auto big = rho.embedded({4, 5});
    EXPECT_EQ(big.dims(), (BipartiteDims{4, 5}));
    EXPECT_NEAR(norm_of(big), norm_of(rho), 1e-13);
    EXPECT_NEAR(ppt_test(big).min_eigenvalue, std::min(0.0, ppt_test(rho).min_eigenvalue), 1e-13);
}

}  // namespace
}  // namespace sepscope
