#pragma once

#include <span>
#include <vector>

#include "hirota/medium.hpp"
#include "hirota/soliton.hpp"

namespace hirota {

/// Omega = -2 i rho p^2 + 4 sigma p^3.
cplx dispersion(cplx p, const Medium& medium);

/// Symbol L_p(z) = sum_k alpha_k z^k of a linear operator
/// L_x = sum_k alpha_k d^k/dx^k.
class DispersionPoly {
public:
    DispersionPoly() = default;
    /// coeffs[k] multiplies z^k. Throws std::invalid_argument on non-finite input.
    explicit DispersionPoly(std::vector<cplx> coeffs);

    /// L_p(z) = -i rho z^2 + sigma z^3, the Hirota operator, for which
    /// ½ L_p(2p) reproduces dispersion(p, medium).
    static DispersionPoly hirota(double rho, double sigma);
    static DispersionPoly hirota(const Medium& medium);

    /// Index of the last nonzero coefficient; -1 for the zero polynomial.
    int degree() const noexcept;

    std::span<const cplx> coeffs() const noexcept { return coeffs_; }

    /// Horner evaluation.
    cplx operator()(cplx z) const noexcept;

    /// Polynomial with conjugated coefficients (conj(L)_p).
    DispersionPoly conjugate() const;

    friend DispersionPoly operator+(const DispersionPoly& a, const DispersionPoly& b);
    friend DispersionPoly operator*(double s, const DispersionPoly& a);

private:
    std::vector<cplx> coeffs_;
};

/// Omega = ½ L_p(2p) for the general linear part.
cplx general_dispersion(const DispersionPoly& lp, cplx p);

}  // namespace hirota
