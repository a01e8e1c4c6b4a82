#pragma once

#include <cstdint>
#include <span>

#include "hirota/calculus.hpp"
#include "hirota/gaussian_rational.hpp"
#include "hirota/medium.hpp"
#include "hirota/soliton.hpp"

namespace hirota {

struct IdentitySides {
    GaussianRational lhs;
    GaussianRational rhs;

    bool holds() const { return lhs == rhs; }
};

/// (k_1 + ... + k_{2n+1})^3 - (k_1^3 + ... + k_{2n+1}^3) against
///
///   3 sum_{l=0}^{n-1} sum_{m=0}^{n-l-1} [ S_pre(l) a_l b_{l,m} + a_l b_{l,m} S_suf(l,m) ]
///
/// with a_l = k_{2l+1} + k_{2l+2}, b_{l,m} = k_{2l+2m+2} + k_{2l+2m+3},
/// S_pre(l) = k_1 + ... + k_{2l+1} and S_suf(l,m) = k_{2l+2m+3} + ... + k_{2n+1}
/// (1-based, contiguous runs). Throws std::invalid_argument unless ks has odd
/// length >= 3.
IdentitySides identity_cubic(std::span<const GaussianRational> ks);

/// (k_1 + ... + k_{2n+1})^2 - (k_1^2 - k_2^2 + ... - k_{2n}^2 + k_{2n+1}^2)
/// against 2 sum_{l,m} a_l b_{l,m}, same index ranges as identity_cubic.
IdentitySides identity_quadratic(std::span<const GaussianRational> ks);

struct IdentityReport {
    int n_max = 0;
    int trials_per_case = 0;  ///< random tuples per (identity, n)
    int trials = 0;           ///< total evaluations, gate cases included
    int failures = 0;
    std::uint64_t seed = 0;
};

/// Gate cases (1, 2, 3) first, then both identities for n = 1..n_max on
/// `trials` seeded random tuples each.
IdentityReport run_identity_suite(int n_max, int trials, std::uint64_t seed);

struct Psi3Pair {
    cplx iterative;  ///< explicit triple sum
    cplx trace;      ///< -(lambda/8) Tr[B_x D conj(D)]
};

/// Third-order series term computed two independent ways.
Psi3Pair psi3_crosscheck(const SolitonSet& set, const Medium& medium, const SpaceTimePoint& pt,
                         const Tolerances& tol = {});

/// psi^(2n+1) from its explicit (2n+1)-fold sum, with exact x- and
/// t-derivatives. Each summand is an exponential in (x, t): d/dx multiplies
/// it by 2(P_1 + conj P_2 + ... + P_{2n+1}), d/dt by
/// -2(Omega_1 + conj Omega_2 + ... + Omega_{2n+1}).
DerivativeBundle series_term(const SolitonSet& set, const Medium& medium,
                             const SpaceTimePoint& pt, int n, const Tolerances& tol = {});

struct RecursionSides {
    cplx lhs;  ///< i psi_t + rho psi_xx + i sigma psi_xxx of psi^(2n+1)
    cplx rhs;  ///< cubic source built from lower-order terms
};

/// Both sides of the order-(2n+1) equation of the perturbation hierarchy,
/// n in {1, 2}:
///
///   rhs = -3 i alpha sum_{l,m} psi^(2l+1) conj(psi^(2m+1)) psi_x^(2n-2l-2m-1)
///         - delta   sum_{l,m} psi^(2l+1) conj(psi^(2m+1)) psi^(2n-2l-2m-1)
RecursionSides recursion_sides(const SolitonSet& set, const Medium& medium,
                               const SpaceTimePoint& pt, int n, const Tolerances& tol = {});

/// lhs - rhs of recursion_sides.
cplx recursion_residual(const SolitonSet& set, const Medium& medium, const SpaceTimePoint& pt,
                        int n, const Tolerances& tol = {});

}  // namespace hirota
