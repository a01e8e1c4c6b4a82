#include "hirota/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace hirota {

void GridSpec::validate() const {
    if (!std::isfinite(x_min) || !std::isfinite(x_max) || !std::isfinite(t_min) ||
        !std::isfinite(t_max))
        throw std::invalid_argument("GridSpec: bounds must be finite");
    if (nx < 1 || nt < 1)
        throw std::invalid_argument("GridSpec: each axis needs at least one point");
    if (x_min > x_max || t_min > t_max)
        throw std::invalid_argument("GridSpec: min must not exceed max");
}

double GridSpec::x(std::size_t i) const noexcept {
    if (nx == 1) return x_min;
    return x_min + (x_max - x_min) * static_cast<double>(i) / static_cast<double>(nx - 1);
}

double GridSpec::t(std::size_t j) const noexcept {
    if (nt == 1) return t_min;
    return t_min + (t_max - t_min) * static_cast<double>(j) / static_cast<double>(nt - 1);
}

}  // namespace hirota
