#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace hirota {

using cplx = std::complex<double>;

/// Fixed numerical thresholds. The defaults are the library-wide values;
/// callers may pass a modified copy to any operation taking one.
struct Tolerances {
    double denominator = 1e-9;   ///< minimum |p_m + p_n| and |p_m + conj(p_n)|
    double max_condition = 1e12; ///< resolvent condition estimate limit
};

/// One envelope soliton: wavenumber P_k and initial amplitude A_k(0).
///
/// This is a plain value. Admissibility (Re p > 0, a0 != 0) is checked when a
/// soliton enters a SolitonSet.
struct Soliton {
    cplx p;
    cplx a0;

    Soliton conj() const { return {std::conj(p), std::conj(a0)}; }

    friend bool operator==(const Soliton&, const Soliton&) = default;
};

struct SpaceTimePoint {
    double x = 0.0;
    double t = 0.0;

    friend bool operator==(const SpaceTimePoint&, const SpaceTimePoint&) = default;
};

/// Throws std::invalid_argument for non-finite coordinates.
void validate(const SpaceTimePoint& pt);

/// Ordered list of admissible solitons.
class SolitonSet {
public:
    SolitonSet() = default;

    /// Throws std::invalid_argument when a soliton has Re p <= 0 or a0 == 0,
    /// and SingularDenominator when two momenta give |p_m + p_n| or
    /// |p_m + conj(p_n)| below tol.denominator.
    explicit SolitonSet(std::vector<Soliton> solitons, const Tolerances& tol = {});
    SolitonSet(std::initializer_list<Soliton> solitons);

    std::size_t size() const noexcept { return solitons_.size(); }
    bool empty() const noexcept { return solitons_.empty(); }

    const Soliton& operator[](std::size_t i) const { return solitons_[i]; }
    std::span<const Soliton> solitons() const noexcept { return solitons_; }

    auto begin() const noexcept { return solitons_.begin(); }
    auto end() const noexcept { return solitons_.end(); }

    friend bool operator==(const SolitonSet&, const SolitonSet&) = default;

private:
    std::vector<Soliton> solitons_;
};

}  // namespace hirota
