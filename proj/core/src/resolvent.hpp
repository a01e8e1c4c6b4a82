#pragma once

#include <array>
#include <vector>

#include <Eigen/LU>

#include "hirota/matrix.hpp"
#include "hirota/medium.hpp"
#include "hirota/soliton.hpp"

namespace hirota::detail {

// psi = phi^T M^-1 phi with M = I + c D conj(D). With u = Phi M^-1 phi,
// v = sqrt(c) conj(E) conj(C) u, E = diag(phi_m^2), C_mn = 1/(p_m + conj p_n):
//
//     u + sqrt(c) E C v              = e
//     v - sqrt(c) conj(E) conj(C) u  = 0,       psi = sum(u).
//
// Rows m with |e_m| >= 1 are divided by e_m (resp. conj e_m), so every entry
// of the assembled matrix is O(1) and e_m is only needed through exp(-log e_m)
// or exp(log e_m) on the side where it is bounded.
class ResolventSystem {
public:
    ResolventSystem(const SolitonSet& set, const Medium& medium, const SpaceTimePoint& pt,
                    const Tolerances& tol);

    std::size_t size() const noexcept { return n_; }

    // d^kx/dx^kx d^kt/dt^kt of the scaled matrix S K and right-hand side S r,
    // where S is the row scaling frozen at this point. (0, 0) is the system
    // itself.
    ComplexMatrix matrix_derivative(int kx, int kt) const;
    ComplexVector rhs_derivative(int kx, int kt) const;

    ComplexVector solve(const ComplexVector& rhs) const;

    // Sum of the u block.
    cplx trace_of(const ComplexVector& w) const;

    double condition() const noexcept { return condition_; }

private:
    std::size_t n_;
    double coupling_root_;
    std::vector<cplx> p_;
    std::vector<cplx> omega_;
    std::vector<cplx> log_e_;
    std::vector<bool> large_;
    ComplexMatrix cauchy_;
    ComplexMatrix system_;
    Eigen::PartialPivLU<ComplexMatrix> lu_;
    double condition_ = 1.0;
};

}  // namespace hirota::detail
