#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hirota/dispersion.hpp"
#include "hirota/grid.hpp"
#include "hirota/medium.hpp"
#include "hirota/soliton.hpp"

namespace hirota {

enum class EquationKind { hirota, nls, mkdv };

std::string_view to_string(EquationKind kind);
/// Throws std::invalid_argument for unknown names.
EquationKind parse_equation_kind(std::string_view name);

/// Throws EquationMismatch if kind is nls and sigma != 0, or mkdv and rho != 0.
void check_compatible(EquationKind kind, const Medium& medium);

/// Left-hand side of the selected equation at pt, from analytic derivatives.
///   hirota: i psi_t + 3 i alpha |psi|^2 psi_x + rho psi_xx + i sigma psi_xxx + delta |psi|^2 psi
///   nls:    i psi_t + rho psi_xx + delta |psi|^2 psi
///   mkdv:   psi_t + 3 alpha |psi|^2 psi_x + sigma psi_xxx
cplx residual_at(EquationKind kind, const SolitonSet& set, const Medium& medium,
                 const SpaceTimePoint& pt, const Tolerances& tol = {});

struct ResidualReport {
    double max_abs = 0.0;
    double rms = 0.0;
    /// max(1, max |psi|) over the evaluated points.
    double normalizer = 1.0;
    double max_psi = 0.0;
    std::size_t n_points = 0;
    std::size_t n_degenerate = 0;
    SpaceTimePoint worst_point{};

    double relative() const noexcept { return max_abs / normalizer; }
};

/// Residual statistics over the grid. Degenerate points are skipped and
/// counted; throws EmptyReport if every point is degenerate. The worst point
/// breaks ties by lowest x, then lowest t.
ResidualReport residual_report(EquationKind kind, const SolitonSet& set, const Medium& medium,
                               const GridSpec& grid, const Tolerances& tol = {});

/// Hirota residual of the trace solution in Medium(a rho0, b sigma0, lambda):
/// a numerical witness that the combination of the NLS and mKdV members of
/// the family is again solved by the same trace form.
ResidualReport additivity_instance(const SolitonSet& set, double lambda, double rho0,
                                   double sigma0, double a, double b, const GridSpec& grid,
                                   const Tolerances& tol = {});

inline constexpr double kResonanceTolerance = 1e-12;

/// C / [L_p(2 sum p_j) - sum_j L_p(2 p_j)]. Throws Resonance when the
/// denominator magnitude is below 1e-12.
cplx pi_ratio(cplx c_n, std::span<const cplx> momenta, const DispersionPoly& lp);

/// One momentum slot of a pi-ratio denominator. A conjugated slot holds
/// conj(P) and contributes conj(L)_p(2 conj P) instead of L_p(2 P).
struct MomentumSlot {
    cplx k;
    bool conjugated = false;
};

/// Alternating variant: C / [L_p(2 sum k_j) - sum_j L^(j)_p(2 k_j)], with
/// L^(j) = conj(L) on conjugated slots.
cplx pi_ratio(cplx c_n, std::span<const MomentumSlot> slots, const DispersionPoly& lp);

struct ScalingCheckOptions {
    int trials = 100;
    std::uint64_t seed = 42;
    double rel_tolerance = 1e-12;
    int max_redraws = 10;
};

struct ScalingCheckResult {
    bool agree = true;
    int tuples_checked = 0;
    double max_rel_deviation = 0.0;
};

/// First-order coupling check for the NLS part L'_p = -i rho0 z^2, the mKdV
/// part L''_p = sigma0 z^3 and L*_p = a L'_p + b L''_p, with
/// C'(1) = i lambda rho0, C''(1) = -3 lambda sigma0 (P1 + P3) and
/// C*(1) = a C' + b C''. Compares pi', pi'', pi* on seeded random momentum
/// triples (P1, conj P2, P3) and on every index triple drawn from `set`.
ScalingCheckResult scaling_invariance_detail(const SolitonSet& set, double lambda, double rho0,
                                             double sigma0, double a, double b,
                                             const ScalingCheckOptions& options = {});

bool scaling_invariance_check(const SolitonSet& set, double lambda, double rho0, double sigma0,
                              double a, double b, const ScalingCheckOptions& options = {});

struct CollisionMetrics {
    std::vector<double> peaks_before;
    std::vector<double> peaks_after;
    std::vector<double> positions_before;
    std::vector<double> positions_after;
    double t_far = 0.0;

    /// max_k |after_k - before_k| / before_k.
    double max_relative_mismatch() const;
};

/// Envelope group velocity Re(Omega) / Re(p).
double group_velocity(const Soliton& s, const Medium& medium);

/// Peak amplitudes of the two envelopes at -t_far and +t_far, located by a
/// grid scan of |psi| over x_window (x axis only) plus three-point parabolic
/// refinement. Entries are in soliton order. Throws UnseparatedEnvelopes when
/// the peaks are not resolved or lie closer than five envelope widths.
CollisionMetrics collision_metrics(const SolitonSet& set, const Medium& medium, double t_far,
                                   const GridSpec& x_window, const Tolerances& tol = {});

}  // namespace hirota
