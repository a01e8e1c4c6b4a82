#include "hirota/medium.hpp"

#include <cmath>
#include <stdexcept>

namespace hirota {

Medium::Medium(double rho, double sigma, double lambda)
    : rho_(rho), sigma_(sigma), lambda_(lambda), alpha_(lambda * sigma), delta_(lambda * rho) {
    if (!std::isfinite(rho) || !std::isfinite(sigma) || !std::isfinite(lambda))
        throw std::invalid_argument("Medium: coefficients must be finite");
    if (!(lambda > 0.0))
        throw std::invalid_argument("Medium: lambda must be positive");
    if (rho < 0.0 || sigma < 0.0)
        throw std::invalid_argument("Medium: rho and sigma must be non-negative");
    if (rho == 0.0 && sigma == 0.0)
        throw std::invalid_argument("Medium: rho and sigma cannot both vanish");
}

}  // namespace hirota
