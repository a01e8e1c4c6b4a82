#pragma once

#include <cstddef>

#include "hirota/soliton.hpp"

namespace hirota {

/// Rectangular space-time sampling grid. Single-point axes are allowed.
struct GridSpec {
    double x_min = 0.0;
    double x_max = 0.0;
    std::size_t nx = 1;
    double t_min = 0.0;
    double t_max = 0.0;
    std::size_t nt = 1;

    /// Throws std::invalid_argument on empty axes, reversed bounds or
    /// non-finite bounds.
    void validate() const;

    std::size_t size() const noexcept { return nx * nt; }

    double x(std::size_t i) const noexcept;
    double t(std::size_t j) const noexcept;

    /// Point (x_i, t_j).
    SpaceTimePoint point(std::size_t i, std::size_t j) const noexcept { return {x(i), t(j)}; }

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

}  // namespace hirota
