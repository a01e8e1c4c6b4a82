#pragma once

#include <span>
#include <vector>

#include "hirota/medium.hpp"
#include "hirota/soliton.hpp"

namespace hirota {

/// psi and the derivatives that enter the Hirota equation.
struct DerivativeBundle {
    cplx psi{};
    cplx psi_x{};
    cplx psi_xx{};
    cplx psi_xxx{};
    cplx psi_t{};

    static constexpr std::size_t kComponents = 5;
    cplx component(std::size_t i) const;
};

/// Componentwise |a - b|, in DerivativeBundle order.
std::vector<double> abs_difference(const DerivativeBundle& a, const DerivativeBundle& b);

/// Exact derivatives of the trace solution. Every entry of the resolvent
/// system is an exponential in (x, t), so d/dx and d/dt act by
/// multiplication; derivatives of the inverse follow from
/// d(K^-1) = -K^-1 dK K^-1 expanded term by term to third order in x.
DerivativeBundle analytic_derivatives(const SolitonSet& set, const Medium& medium,
                                      const SpaceTimePoint& pt, const Tolerances& tol = {});

/// Finite-difference weights on integer offsets.
class Stencil {
public:
    /// Weights for the `derivative`-th derivative on `offsets`, solved from the
    /// moment conditions and then checked to reproduce the derivatives of all
    /// monomials of degree < derivative + accuracy. Throws std::invalid_argument
    /// if the offsets cannot reach that accuracy.
    Stencil(int derivative, int accuracy, std::vector<int> offsets);

    /// Central stencil with the minimal symmetric offset set.
    static Stencil central(int derivative, int accuracy);

    int derivative() const noexcept { return derivative_; }
    int order() const noexcept { return accuracy_; }
    std::span<const int> offsets() const noexcept { return offsets_; }
    std::span<const double> weights() const noexcept { return weights_; }

    /// sum_i w_i f(offset_i) / h^derivative.
    cplx apply(std::span<const cplx> samples, double h) const;

private:
    int derivative_;
    int accuracy_;
    std::vector<int> offsets_;
    std::vector<double> weights_;
};

inline constexpr double kDefaultStepX = 1e-3;
inline constexpr double kDefaultStepT = 1e-3;

/// Fourth-order central differences of eval_psi_closed: 5-point for psi_x,
/// psi_xx and psi_t, 7-point for psi_xxx. Oracle for analytic_derivatives.
DerivativeBundle fd_derivatives(const SolitonSet& set, const Medium& medium,
                                const SpaceTimePoint& pt, double h_x = kDefaultStepX,
                                double h_t = kDefaultStepT, const Tolerances& tol = {});

/// log2(coarse / fine), the convergence order seen under one step halving.
double observed_order(double coarse_error, double fine_error);

}  // namespace hirota
