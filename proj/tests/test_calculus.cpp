#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

#include "hirota/calculus.hpp"
#include "hirota/errors.hpp"
#include "hirota/trace_solution.hpp"
#include "support/fixtures.hpp"

namespace hirota {
namespace {

using testing::canonical_medium;
using testing::canonical_set;

const cplx I{0.0, 1.0};

// The canonical field is sech(2x - 8t) e^{4it}. Derivatives of f = sech(u):
// f' = -s tau, f'' = s (2 tau^2 - 1), f''' = s tau (5 - 6 tau^2).
DerivativeBundle canonical_bundle(double x, double t) {
    const double u = 2 * x - 8 * t;
    const double s = 1.0 / std::cosh(u), tau = std::tanh(u);
    const double f = s, f1 = -s * tau, f2 = s * (2 * tau * tau - 1), f3 = s * tau * (5 - 6 * tau * tau);
    const cplx c = std::exp(4.0 * I * t);
    return {f * c, 2 * f1 * c, 4 * f2 * c, 8 * f3 * c, (-8 * f1 + 4.0 * I * f) * c};
}

double max_component_error(const DerivativeBundle& a, const DerivativeBundle& b, std::size_t i) {
    return std::abs(a.component(i) - b.component(i));
}

// ---------------------------------------------------------------- Stencil

TEST(Stencil, CentralWeights) {
    const Stencil d1 = Stencil::central(1, 4);
    const std::array<double, 5> w1{1.0 / 12, -2.0 / 3, 0.0, 2.0 / 3, -1.0 / 12};
    ASSERT_EQ(d1.weights().size(), 5u);
    for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(d1.weights()[i], w1[i], 1e-15);

    const Stencil d2 = Stencil::central(2, 4);
    const std::array<double, 5> w2{-1.0 / 12, 4.0 / 3, -5.0 / 2, 4.0 / 3, -1.0 / 12};
    for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(d2.weights()[i], w2[i], 1e-15);

    const Stencil d3 = Stencil::central(3, 4);
    const std::array<double, 7> w3{1.0 / 8, -1.0, 13.0 / 8, 0.0, -13.0 / 8, 1.0, -1.0 / 8};
    ASSERT_EQ(d3.weights().size(), 7u);
    EXPECT_EQ(d3.offsets().front(), -3);
    for (std::size_t i = 0; i < 7; ++i) EXPECT_NEAR(d3.weights()[i], w3[i], 1e-15);
    EXPECT_EQ(d3.order(), 4);
    EXPECT_EQ(d3.derivative(), 3);
}

TEST(Stencil, OneSidedSecondOrder) {
    const Stencil s(1, 2, {0, 1, 2});
    EXPECT_NEAR(s.weights()[0], -1.5, 1e-15);
    EXPECT_NEAR(s.weights()[1], 2.0, 1e-15);
    EXPECT_NEAR(s.weights()[2], -0.5, 1e-15);
}

TEST(Stencil, RejectsUnreachableAccuracy) {
    EXPECT_THROW(Stencil(3, 4, {-1, 0, 1}), std::invalid_argument);
    EXPECT_THROW(Stencil(1, 4, {-1, 0, 1}), std::invalid_argument);
    EXPECT_THROW(Stencil(1, 2, {0, 0, 1}), std::invalid_argument);
    EXPECT_THROW(Stencil(1, 0, {0, 1}), std::invalid_argument);
    EXPECT_THROW(Stencil::central(1, 3), std::invalid_argument);
}

TEST(Stencil, ApplyDifferentiatesPolynomials) {
    const Stencil s = Stencil::central(2, 4);
    const double h = 0.1;
    std::vector<cplx> samples;
    for (int o : s.offsets()) {
        const double x = 1.0 + o * h;
        samples.emplace_back(x * x * x, -x * x);
    }
    const cplx d2 = s.apply(samples, h);
    EXPECT_NEAR(d2.real(), 6.0, 1e-12);
    EXPECT_NEAR(d2.imag(), -2.0, 1e-12);
    EXPECT_THROW(s.apply(std::span<const cplx>(samples).first(3), h), std::invalid_argument);
}

TEST(ObservedOrder, Log2OfRatio) {
    EXPECT_DOUBLE_EQ(observed_order(16.0, 1.0), 4.0);
    EXPECT_DOUBLE_EQ(observed_order(1.0, 0.5), 1.0);
}

// ---------------------------------------------------------------- analytic

TEST(AnalyticDerivatives, EmptySetIsZero) {
    const DerivativeBundle b = analytic_derivatives({}, canonical_medium(), {0.3, 0.1});
    for (std::size_t i = 0; i < DerivativeBundle::kComponents; ++i) EXPECT_EQ(b.component(i), cplx(0, 0));
}

TEST(AnalyticDerivatives, CanonicalPeak) {
    const DerivativeBundle b = analytic_derivatives(canonical_set(), canonical_medium(), {0, 0});
    EXPECT_NEAR(std::abs(b.psi - 1.0), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(b.psi_x), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(b.psi_xx + 4.0), 0.0, 1e-13);
    EXPECT_NEAR(std::abs(b.psi_xxx), 0.0, 1e-13);
    EXPECT_NEAR(std::abs(b.psi_t - 4.0 * I), 0.0, 1e-13);
}

TEST(AnalyticDerivatives, CanonicalMatchesSechDerivatives) {
    for (double t : {-0.5, 0.0, 0.25}) {
        for (int i = 0; i <= 60; ++i) {
            const double x = 8 * t - 3.0 + 0.1 * i;
            const DerivativeBundle got = analytic_derivatives(canonical_set(), canonical_medium(), {x, t});
            const DerivativeBundle want = canonical_bundle(x, t);
            for (std::size_t k = 0; k < DerivativeBundle::kComponents; ++k)
                EXPECT_LE(max_component_error(got, want, k), 1e-12) << "x=" << x << " t=" << t << " k=" << k;
        }
    }
}

TEST(AnalyticDerivatives, ComponentAccessor) {
    const DerivativeBundle b{1.0, 2.0, 3.0, 4.0, 5.0};
    for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(b.component(i), cplx(double(i + 1), 0));
    EXPECT_THROW(b.component(5), std::out_of_range);
    const auto d = abs_difference(b, DerivativeBundle{});
    EXPECT_EQ(d, (std::vector<double>{1, 2, 3, 4, 5}));
}

// ---------------------------------------------------------------- FD oracle

TEST(FdDerivatives, EmptySetIsZero) {
    const DerivativeBundle b = fd_derivatives({}, canonical_medium(), {0.3, 0.1});
    for (std::size_t i = 0; i < DerivativeBundle::kComponents; ++i) EXPECT_EQ(b.component(i), cplx(0, 0));
}

TEST(FdDerivatives, CanonicalSecondDerivativeAtPeak) {
    const DerivativeBundle b = fd_derivatives(canonical_set(), canonical_medium(), {0, 0}, 1e-3, 1e-3);
    EXPECT_NEAR(b.psi_xx.real(), -4.0, 1e-6);
    EXPECT_NEAR(b.psi_xx.imag(), 0.0, 1e-6);
}

TEST(FdDerivatives, RejectsNonPositiveSteps) {
    EXPECT_THROW(fd_derivatives(canonical_set(), canonical_medium(), {0, 0}, 0.0, 1e-3), std::invalid_argument);
    EXPECT_THROW(fd_derivatives(canonical_set(), canonical_medium(), {0, 0}, 1e-3, -1.0), std::invalid_argument);
}

TEST(FdDerivatives, RichardsonRatioForPsiX) {
    const SpaceTimePoint pt{0.3, 0.0};
    const DerivativeBundle exact = analytic_derivatives(canonical_set(), canonical_medium(), pt);
    const double e1 = std::abs(fd_derivatives(canonical_set(), canonical_medium(), pt, 1e-2, 1e-2).psi_x - exact.psi_x);
    const double e2 = std::abs(fd_derivatives(canonical_set(), canonical_medium(), pt, 5e-3, 5e-3).psi_x - exact.psi_x);
    EXPECT_GE(e1 / e2, 12.0);
    EXPECT_LE(e1 / e2, 20.0);
}

double max_error(const SolitonSet& set, const Medium& m, const std::vector<SpaceTimePoint>& pts,
                 double h, std::size_t k) {
    double worst = 0.0;
    for (const auto& pt : pts) {
        const DerivativeBundle a = analytic_derivatives(set, m, pt);
        const DerivativeBundle f = fd_derivatives(set, m, pt, h, h);
        worst = std::max(worst, max_component_error(a, f, k));
    }
    return worst;
}

TEST(FdDerivatives, FourthOrderAgreementOnRandomConfigs) {
    std::mt19937_64 rng(53);
    for (std::size_t n = 1; n <= 3; ++n) {
        const Medium m = testing::random_medium(rng);
        const SolitonSet set = testing::random_set(rng, n);
        std::vector<SpaceTimePoint> pts;
        for (double x : {-2.0, -1.0, 0.0, 1.0, 2.0})
            for (double t : {-0.5, 0.0, 0.5}) pts.push_back({x, t});
        for (std::size_t k = 1; k < DerivativeBundle::kComponents; ++k) {
            const double coarse = max_error(set, m, pts, 1e-2, k);
            const double fine = max_error(set, m, pts, 5e-3, k);
            EXPECT_GE(observed_order(coarse, fine), 3.5) << "N=" << n << " component " << k;
        }
    }
}

// A steep profile keeps truncation error above roundoff through two halvings.
TEST(FdDerivatives, FourthOrderOverThreeStepsOnSteepProfile) {
    const Medium m(1.0, 0.1, 8.0);
    const SolitonSet set{{cplx{3.0, 0.5}, cplx{1.0, 0.0}}};
    std::vector<SpaceTimePoint> pts;
    for (double x : {-0.6, -0.3, 0.0, 0.3}) pts.push_back({x, 0.0});
    for (std::size_t k = 1; k < DerivativeBundle::kComponents; ++k) {
        const double e1 = max_error(set, m, pts, 1e-2, k);
        const double e2 = max_error(set, m, pts, 5e-3, k);
        const double e3 = max_error(set, m, pts, 2.5e-3, k);
        EXPECT_GE(observed_order(e1, e2), 3.5) << "component " << k;
        EXPECT_GE(observed_order(e2, e3), 3.5) << "component " << k;
    }
}

// ---------------------------------------------------------------- properties

// At vanishing coupling the field is linear in the soliton list.
TEST(AnalyticDerivatives, LinearityAtTinyCoupling) {
    std::mt19937_64 rng(59);
    const Medium m(0.8, 0.4, 1e-20);
    const SolitonSet all = testing::random_set(rng, 3);
    const SolitonSet a{all[0]};
    const SolitonSet b{all[1], all[2]};
    for (double x : {-1.0, 0.0, 0.7}) {
        const SpaceTimePoint pt{x, 0.2};
        const DerivativeBundle da = analytic_derivatives(a, m, pt);
        const DerivativeBundle db = analytic_derivatives(b, m, pt);
        const DerivativeBundle dall = analytic_derivatives(all, m, pt);
        for (std::size_t k = 0; k < DerivativeBundle::kComponents; ++k) {
            const cplx sum = da.component(k) + db.component(k);
            EXPECT_LE(std::abs(dall.component(k) - sum), 1e-12 * std::max(1.0, std::abs(sum)));
        }
    }
}

// A third-order one-sided difference of the analytic psi_x reproduces psi_xx.
TEST(AnalyticDerivatives, MixedConsistency) {
    std::mt19937_64 rng(61);
    const Stencil fwd(1, 3, {0, 1, 2, 3});
    const double h = 1e-4;
    for (std::size_t n = 1; n <= 3; ++n) {
        const Medium m = testing::random_medium(rng);
        const SolitonSet set = testing::random_set(rng, n);
        for (double x : {-1.5, 0.0, 1.0}) {
            std::vector<cplx> samples;
            for (int o : fwd.offsets()) samples.push_back(analytic_derivatives(set, m, {x + o * h, 0.1}).psi_x);
            const cplx want = analytic_derivatives(set, m, {x, 0.1}).psi_xx;
            EXPECT_LE(std::abs(fwd.apply(samples, h) - want), 1e-6) << "N=" << n << " x=" << x;
        }
    }
}

TEST(AnalyticDerivatives, PropagatesDegeneratePoint) {
    Tolerances strict;
    strict.max_condition = 1.0;
    EXPECT_THROW(analytic_derivatives(canonical_set(), canonical_medium(), {0, 0}, strict), DegeneratePoint);
}

}  // namespace
}  // namespace hirota
