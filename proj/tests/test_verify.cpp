#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "hirota/calculus.hpp"
#include "hirota/dispersion.hpp"
#include "hirota/errors.hpp"
#include "hirota/grid.hpp"
#include "hirota/trace_solution.hpp"
#include "hirota/verify.hpp"
#include "support/fixtures.hpp"

namespace hirota {
namespace {

using testing::canonical_medium;
using testing::canonical_set;

const cplx I{0.0, 1.0};
const GridSpec kSmallGrid{-10.0, 10.0, 101, -5.0, 5.0, 51};

// ---------------------------------------------------------------- EquationKind

TEST(EquationKind, NamesRoundTrip) {
    for (EquationKind k : {EquationKind::hirota, EquationKind::nls, EquationKind::mkdv})
        EXPECT_EQ(parse_equation_kind(to_string(k)), k);
    EXPECT_THROW(parse_equation_kind("kdv"), std::invalid_argument);
}

TEST(EquationKind, Compatibility) {
    EXPECT_NO_THROW(check_compatible(EquationKind::hirota, canonical_medium()));
    EXPECT_THROW(check_compatible(EquationKind::nls, canonical_medium()), EquationMismatch);
    EXPECT_THROW(check_compatible(EquationKind::mkdv, canonical_medium()), EquationMismatch);
    EXPECT_NO_THROW(check_compatible(EquationKind::nls, Medium(1.0, 0.0, 2.0)));
    EXPECT_NO_THROW(check_compatible(EquationKind::mkdv, Medium(0.0, 1.0, 2.0)));
}

// ---------------------------------------------------------------- residual_at

TEST(ResidualAt, EmptySetIsZero) {
    EXPECT_EQ(residual_at(EquationKind::hirota, {}, canonical_medium(), {1, 1}), cplx(0, 0));
}

TEST(ResidualAt, CanonicalHirota) {
    for (int i = 0; i <= 40; ++i) {
        const SpaceTimePoint pt{-5.0 + 0.25 * i, 0.1 * (i % 7) - 0.3};
        const double psi = std::abs(eval_psi_closed(canonical_set(), canonical_medium(), pt));
        EXPECT_LE(std::abs(residual_at(EquationKind::hirota, canonical_set(), canonical_medium(), pt)),
                  1e-8 * std::max(1.0, psi));
    }
}

TEST(ResidualAt, MkdvLimitWithRealParameters) {
    const Medium m(0.0, 1.0, 8.0);
    const SolitonSet set{{cplx{0.9, 0.0}, cplx{1.3, 0.0}}};
    for (double x : {-3.0, -1.0, 0.0, 0.5, 2.0}) {
        const SpaceTimePoint pt{x, 0.2};
        const cplx psi = eval_psi_closed(set, m, pt);
        EXPECT_LE(std::abs(psi.imag()), 1e-10 * std::abs(psi));
        EXPECT_LE(std::abs(residual_at(EquationKind::mkdv, set, m, pt)), 1e-8);
    }
}

TEST(ResidualAt, MismatchThrows) {
    EXPECT_THROW(residual_at(EquationKind::nls, canonical_set(), canonical_medium(), {0, 0}), EquationMismatch);
    EXPECT_THROW(residual_at(EquationKind::mkdv, canonical_set(), Medium(1.0, 0.0, 8.0), {0, 0}),
                 EquationMismatch);
}

// The residual must notice when the field does not solve the equation: the
// canonical field checked against a medium with a different lambda.
TEST(ResidualAt, DetectsWrongNonlinearCoefficient) {
    const DerivativeBundle b = analytic_derivatives(canonical_set(), canonical_medium(), {0.2, 0.0});
    const Medium other(1.0, 1.0, 6.0);
    const double a2 = std::norm(b.psi);
    const cplx r = I * b.psi_t + 3.0 * I * other.alpha() * a2 * b.psi_x + other.rho() * b.psi_xx +
                   I * other.sigma() * b.psi_xxx + other.delta() * a2 * b.psi;
    EXPECT_GT(std::abs(r), 0.1);
}

// ---------------------------------------------------------------- residual_report

TEST(ResidualReport, EmptySet) {
    const ResidualReport r = residual_report(EquationKind::hirota, {}, canonical_medium(), kSmallGrid);
    EXPECT_EQ(r.max_abs, 0.0);
    EXPECT_EQ(r.rms, 0.0);
    EXPECT_EQ(r.normalizer, 1.0);
    EXPECT_EQ(r.n_points, kSmallGrid.size());
    EXPECT_EQ(r.worst_point, (SpaceTimePoint{-10.0, -5.0}));
}

TEST(ResidualReport, RandomTwoSolitonConfig) {
    std::mt19937_64 rng(71);
    const Medium m = testing::random_medium(rng);
    const SolitonSet set = testing::random_set(rng, 2);
    const GridSpec grid{-10.0, 10.0, 201, -5.0, 5.0, 101};
    const ResidualReport r = residual_report(EquationKind::hirota, set, m, grid);
    EXPECT_LE(r.relative(), 1e-8);
    EXPECT_GE(r.max_abs, r.rms);
    EXPECT_GE(r.rms, 0.0);
    EXPECT_EQ(r.n_points + r.n_degenerate, grid.size());
    EXPECT_EQ(r.normalizer, std::max(1.0, r.max_psi));
}

// With a condition limit of 1 the cores become degenerate while the tails,
// where the system is close to the identity, still evaluate.
TEST(ResidualReport, DegeneratePointsAreCounted) {
    Tolerances strict;
    strict.max_condition = 1.0;
    const ResidualReport r =
        residual_report(EquationKind::hirota, canonical_set(), canonical_medium(), kSmallGrid, strict);
    EXPECT_GT(r.n_degenerate, 0u);
    EXPECT_GT(r.n_points, 0u);
    EXPECT_EQ(r.n_points + r.n_degenerate, kSmallGrid.size());
    const GridSpec core{0.0, 0.0, 1, 0.0, 0.0, 1};
    EXPECT_THROW(residual_report(EquationKind::hirota, canonical_set(), canonical_medium(), core, strict),
                 EmptyReport);
}

TEST(ResidualReport, MismatchThrows) {
    EXPECT_THROW(residual_report(EquationKind::nls, canonical_set(), canonical_medium(), kSmallGrid),
                 EquationMismatch);
}

// ---------------------------------------------------------------- additivity

TEST(Additivity, ScaledMediaAreSolved) {
    std::mt19937_64 rng(73);
    const SolitonSet complex_set = testing::random_set(rng, 2);
    const SolitonSet real_set = testing::random_real_set(rng, 2);
    const struct {
        double a, b;
        const SolitonSet* set;
    } cases[] = {{1, 0, &complex_set}, {0, 1, &real_set}, {2, 3, &complex_set}, {0.5, 5, &complex_set}};
    for (const auto& c : cases) {
        const ResidualReport r = additivity_instance(*c.set, 8.0, 1.0, 0.2, c.a, c.b, kSmallGrid);
        EXPECT_LE(r.relative(), 1e-8) << "a=" << c.a << " b=" << c.b;
        EXPECT_EQ(r.n_degenerate, 0u);
    }
}

TEST(Additivity, RejectsDegenerateWeights) {
    EXPECT_THROW(additivity_instance(canonical_set(), 8.0, 1.0, 1.0, 0.0, 0.0, kSmallGrid), std::invalid_argument);
    EXPECT_THROW(additivity_instance(canonical_set(), 8.0, 1.0, 1.0, -1.0, 1.0, kSmallGrid), std::invalid_argument);
}

// ---------------------------------------------------------------- pi_ratio

TEST(PiRatio, ZeroNumerator) {
    const cplx ks[] = {1.0, 1.0, 1.0};
    EXPECT_EQ(pi_ratio(0.0, ks, DispersionPoly::hirota(1.0, 1.0)), cplx(0, 0));
}

TEST(PiRatio, LinearSymbolIsResonant) {
    const cplx ks[] = {cplx{0.3, 0.2}, cplx{1.1, -0.4}, 0.7};
    EXPECT_THROW(pi_ratio(1.0, ks, DispersionPoly({0.0, 1.0})), Resonance);
}

TEST(PiRatio, HirotaExample) {
    // L(6) - 3 L(2) = (216 - 36i) - 3 (8 - 4i) = 192 - 24i
    const cplx ks[] = {1.0, 1.0, 1.0};
    const cplx got = pi_ratio(1.0, ks, DispersionPoly::hirota(1.0, 1.0));
    EXPECT_NEAR(std::abs(got - 1.0 / cplx(192, -24)), 0.0, 1e-17);
}

TEST(PiRatio, ConjugatedSlotUsesConjugateSymbol) {
    // L(6) - L(2) - conj(L)(2) - L(2) = (216 - 36i) - 2 (8 - 4i) - (8 + 4i) = 192 - 32i
    const MomentumSlot slots[] = {{1.0, false}, {1.0, true}, {1.0, false}};
    const cplx got = pi_ratio(1.0, slots, DispersionPoly::hirota(1.0, 1.0));
    EXPECT_NEAR(std::abs(got - 1.0 / cplx(192, -32)), 0.0, 1e-17);
}

// With C' = i lambda rho0 and slots (P1, conj P2, P3), the NLS ratio reduces
// by hand to -(lambda/8) / ((P1 + conj P2)(conj P2 + P3)), and so does the
// mKdV ratio with C'' = -3 lambda sigma0 (P1 + P3).
TEST(PiRatio, FirstOrderCouplingClosedForm) {
    std::mt19937_64 rng(79);
    const double lambda = 3.0, rho0 = 0.7, sigma0 = 1.9;
    for (int i = 0; i < 50; ++i) {
        const cplx p1 = testing::random_soliton(rng).p, p2 = testing::random_soliton(rng).p,
                   p3 = testing::random_soliton(rng).p;
        const cplx q = std::conj(p2);
        const MomentumSlot slots[] = {{p1, false}, {q, true}, {p3, false}};
        const cplx want = -(lambda / 8.0) / ((p1 + q) * (q + p3));
        const cplx nls = pi_ratio(I * lambda * rho0, slots, DispersionPoly({0.0, 0.0, -I * rho0}));
        const cplx mkdv = pi_ratio(-3.0 * lambda * sigma0 * (p1 + p3), slots, DispersionPoly({0.0, 0.0, 0.0, sigma0}));
        EXPECT_LE(std::abs(nls - want), 1e-13 * std::abs(want));
        EXPECT_LE(std::abs(mkdv - want), 1e-13 * std::abs(want));
    }
}

// ---------------------------------------------------------------- scaling check

TEST(ScalingInvariance, AllWeightPairs) {
    std::mt19937_64 rng(83);
    const SolitonSet set = testing::random_set(rng, 3);
    for (auto [a, b] : {std::pair{1.0, 0.0}, {0.0, 1.0}, {2.0, 3.0}, {0.5, 5.0}}) {
        const ScalingCheckResult r = scaling_invariance_detail(set, 8.0, 1.0, 1.0, a, b);
        EXPECT_TRUE(r.agree) << "a=" << a << " b=" << b << " dev=" << r.max_rel_deviation;
        EXPECT_EQ(r.tuples_checked, 100 + 27);
        EXPECT_TRUE(scaling_invariance_check(set, 8.0, 1.0, 1.0, a, b));
    }
}

TEST(ScalingInvariance, DeterministicForSeed) {
    const auto a = scaling_invariance_detail(canonical_set(), 8.0, 1.0, 1.0, 2.0, 3.0);
    const auto b = scaling_invariance_detail(canonical_set(), 8.0, 1.0, 1.0, 2.0, 3.0);
    EXPECT_EQ(a.max_rel_deviation, b.max_rel_deviation);
}

TEST(ScalingInvariance, RejectsBadArguments) {
    EXPECT_THROW(scaling_invariance_check(canonical_set(), 8.0, 1.0, 1.0, 0.0, 0.0), std::invalid_argument);
    EXPECT_THROW(scaling_invariance_check(canonical_set(), 8.0, 0.0, 1.0, 1.0, 1.0), std::invalid_argument);
}

// ---------------------------------------------------------------- collision

SolitonSet collision_pair() {
    return SolitonSet{{cplx{0.8, 0.0}, cplx{0.9, 0.3}}, {cplx{1.3, 0.2}, cplx{1.2, -0.5}}};
}

const GridSpec kCollisionWindow{-180.0, 180.0, 36001, 0.0, 0.0, 1};

TEST(GroupVelocity, Canonical) {
    EXPECT_DOUBLE_EQ(group_velocity(testing::canonical_soliton(), canonical_medium()), 4.0);
}

TEST(Collision, PeaksPreserved) {
    const Medium m(1.0, 1.0, 8.0);
    const CollisionMetrics c = collision_metrics(collision_pair(), m, 20.0, kCollisionWindow);
    ASSERT_EQ(c.peaks_before.size(), 2u);
    ASSERT_EQ(c.peaks_after.size(), 2u);
    EXPECT_LE(c.max_relative_mismatch(), 1e-4);
    // Peak height of an isolated envelope is sqrt(8 / lambda) Re p.
    EXPECT_NEAR(c.peaks_before[0], 0.8, 1e-4);
    EXPECT_NEAR(c.peaks_before[1], 1.3, 1e-4);
    EXPECT_LT(c.positions_before[1], c.positions_before[0]);
    EXPECT_GT(c.positions_after[1], c.positions_after[0]);
}

TEST(Collision, SwapInvariance) {
    const Medium m(1.0, 1.0, 8.0);
    const SolitonSet a = collision_pair();
    const SolitonSet b{a[1], a[0]};
    const CollisionMetrics ca = collision_metrics(a, m, 20.0, kCollisionWindow);
    const CollisionMetrics cb = collision_metrics(b, m, 20.0, kCollisionWindow);
    EXPECT_NEAR(ca.peaks_before[0], cb.peaks_before[1], 1e-12);
    EXPECT_NEAR(ca.peaks_after[1], cb.peaks_after[0], 1e-12);
    EXPECT_NEAR(ca.max_relative_mismatch(), cb.max_relative_mismatch(), 1e-12);
}

TEST(Collision, EqualVelocitiesAreUnseparated) {
    // v = 4 rho b + 4 sigma (a^2 - 3 b^2) equals 4 for both p = 1 and p = 1 + i/3.
    const Medium m(1.0, 1.0, 8.0);
    const SolitonSet set{{cplx{1.0, 0.0}, 1.0}, {cplx{1.0, 1.0 / 3.0}, 1.0}};
    EXPECT_NEAR(group_velocity(set[0], m), group_velocity(set[1], m), 1e-14);
    EXPECT_THROW(collision_metrics(set, m, 20.0, kCollisionWindow), UnseparatedEnvelopes);
}

TEST(Collision, RejectsWrongSizeAndTime) {
    const Medium m(1.0, 1.0, 8.0);
    EXPECT_THROW(collision_metrics(canonical_set(), m, 20.0, kCollisionWindow), std::invalid_argument);
    EXPECT_THROW(collision_metrics(collision_pair(), m, 0.0, kCollisionWindow), std::invalid_argument);
}

}  // namespace
}  // namespace hirota
