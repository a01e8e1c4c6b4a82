#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "hirota/medium.hpp"
#include "hirota/soliton.hpp"

namespace hirota::testing {

/// p = 1, a0 = sqrt(2), rho = sigma = 1, lambda = 8: psi(x, 0) = sech(2x).
inline Medium canonical_medium() { return Medium(1.0, 1.0, 8.0); }
inline Soliton canonical_soliton() { return {cplx{1.0, 0.0}, cplx{std::numbers::sqrt2, 0.0}}; }
inline SolitonSet canonical_set() { return SolitonSet{canonical_soliton()}; }

/// Re p in [0.3, 1.5], Im p in [-1, 1], |a0| in [0.5, 2], uniform phase.
inline Soliton random_soliton(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> re(0.3, 1.5);
    std::uniform_real_distribution<double> im(-1.0, 1.0);
    std::uniform_real_distribution<double> mag(0.5, 2.0);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
    const cplx p{re(rng), im(rng)};
    const double r = mag(rng);
    return {p, std::polar(r, phase(rng))};
}

/// Random admissible set; momenta kept at least `min_gap` apart so the
/// Cauchy matrix stays well conditioned.
inline SolitonSet random_set(std::mt19937_64& rng, std::size_t n, double min_gap = 0.15) {
    std::vector<Soliton> out;
    while (out.size() < n) {
        const Soliton s = random_soliton(rng);
        bool ok = true;
        for (const auto& o : out) ok = ok && std::abs(o.p - s.p) >= min_gap;
        if (ok) out.push_back(s);
    }
    return SolitonSet(std::move(out));
}

/// rho in [0.5, 1.5], sigma in [0.1, 1], lambda in [1, 10].
inline Medium random_medium(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> rho(0.5, 1.5);
    std::uniform_real_distribution<double> sigma(0.1, 1.0);
    std::uniform_real_distribution<double> lambda(1.0, 10.0);
    const double r = rho(rng);
    const double s = sigma(rng);
    return Medium(r, s, lambda(rng));
}

/// Real-parameter set (real p, real a0) for the mKdV limit.
inline SolitonSet random_real_set(std::mt19937_64& rng, std::size_t n, double min_gap = 0.15) {
    std::uniform_real_distribution<double> re(0.3, 1.5);
    std::uniform_real_distribution<double> mag(0.5, 2.0);
    std::vector<Soliton> out;
    while (out.size() < n) {
        const Soliton s{cplx{re(rng), 0.0}, cplx{mag(rng), 0.0}};
        bool ok = true;
        for (const auto& o : out) ok = ok && std::abs(o.p - s.p) >= min_gap;
        if (ok) out.push_back(s);
    }
    return SolitonSet(std::move(out));
}

inline double sech(double x) { return 1.0 / std::cosh(x); }

}  // namespace hirota::testing
