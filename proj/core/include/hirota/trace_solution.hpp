#pragma once

#include <vector>

#include "hirota/matrix.hpp"
#include "hirota/medium.hpp"
#include "hirota/soliton.hpp"

namespace hirota {

/// phi_k(x, t) = A_k(0) exp(P_k x - Omega_k t).
/// Throws ExponentRange when |Re(P_k x - Omega_k t)| leaves the double
/// exponent range.
cplx phi(const Soliton& s, const Medium& medium, const SpaceTimePoint& pt);

/// B_mn = phi_m phi_n / (P_m + P_n). Symmetric.
ComplexMatrix build_B(const SolitonSet& set, const Medium& medium, const SpaceTimePoint& pt,
                      const Tolerances& tol = {});

/// D_mn = phi_m conj(phi_n) / (P_m + conj(P_n)).
ComplexMatrix build_D(const SolitonSet& set, const Medium& medium, const SpaceTimePoint& pt,
                      const Tolerances& tol = {});

/// dB/dx, entries phi_m phi_n.
ComplexMatrix build_Bx(const SolitonSet& set, const Medium& medium, const SpaceTimePoint& pt);

/// N-envelope-soliton field psi = Tr[B_x (I + (lambda/8) D conj(D))^-1].
///
/// Evaluated by a dense LU solve of the equivalent balanced 2N x 2N system
/// (see resolvent.hpp in the sources), which is valid wherever the
/// resolvent exists, including the soliton cores where the Neumann series
/// diverges, and never forms exp() of a mode exponent. The empty set gives 0.
///
/// Throws DegeneratePoint when the condition estimate exceeds
/// tol.max_condition.
cplx eval_psi_closed(const SolitonSet& set, const Medium& medium, const SpaceTimePoint& pt,
                     const Tolerances& tol = {});

/// The same trace computed literally: build M = I + (lambda/8) D conj(D),
/// factor it, solve against B_x and take the trace. Overflows once
/// |phi|^4 leaves the double range (reported as ExponentRange), so it serves
/// as a cross-check near the cores rather than as the production path.
cplx eval_psi_direct(const SolitonSet& set, const Medium& medium, const SpaceTimePoint& pt,
                     const Tolerances& tol = {});

/// Partial sum sum_{n=0..max_order} (-lambda/8)^n Tr[B_x (D conj(D))^n],
/// accumulated by repeated right-multiplication.
cplx eval_psi_series(const SolitonSet& set, const Medium& medium, const SpaceTimePoint& pt,
                     int max_order, const Tolerances& tol = {});

/// All partial sums S_0 .. S_max_order of the series above.
std::vector<cplx> series_partial_sums(const SolitonSet& set, const Medium& medium,
                                      const SpaceTimePoint& pt, int max_order,
                                      const Tolerances& tol = {});

struct SpectralEstimate {
    double q = 0.0;
    /// Power iteration did not settle; q is the Frobenius-norm upper bound.
    bool upper_bound = false;
    int iterations = 0;

    /// q at or above 1, with slack for rounding at the convergence boundary.
    bool diverges() const noexcept { return q >= 1.0 - 1e-10; }
};

/// Spectral radius of (lambda/8) D conj(D), the Neumann-series convergence
/// ratio at pt. Power iteration to 1e-8 relative, at most 200 steps.
SpectralEstimate spectral_radius_q(const SolitonSet& set, const Medium& medium,
                                   const SpaceTimePoint& pt, const Tolerances& tol = {});

/// Sech-envelope closed form for a single soliton,
///
///   psi = (A^2 / 2) e^-eta sech(xi + eta) exp((P - conj P) x - (Omega - conj Omega) t),
///   xi  = (P + conj P) x - (Omega + conj Omega) t,
///   eta = ½ ln(lambda |A|^4 / (8 (P + conj P)^2)).
///
/// This is the 1 x 1 trace formula reduced by hand. Throws
/// std::invalid_argument unless Re p > 0 and a0 != 0.
cplx one_soliton_closed(const Soliton& s, const Medium& medium, const SpaceTimePoint& pt);

}  // namespace hirota
