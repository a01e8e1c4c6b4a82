#include <stdexcept>
#include <vector>

#include "hirota/dispersion.hpp"
#include "hirota/errors.hpp"
#include "hirota/identities.hpp"
#include "hirota/trace_solution.hpp"

namespace hirota {

namespace {

struct Mode {
    cplx p;
    cplx omega;
    cplx phi2;  // phi^2
};

std::vector<Mode> modes(const SolitonSet& set, const Medium& medium, const SpaceTimePoint& pt) {
    std::vector<Mode> out;
    out.reserve(set.size());
    for (const auto& s : set) {
        const cplx f = phi(s, medium, pt);
        out.push_back({s.p, dispersion(s.p, medium), f * f});
    }
    return out;
}

cplx checked(cplx den, const Tolerances& tol) {
    if (std::abs(den) < tol.denominator)
        throw SingularDenominator("series term: |p_m + conj(p_n)| below tolerance");
    return den;
}

}  // namespace

Psi3Pair psi3_crosscheck(const SolitonSet& set, const Medium& medium, const SpaceTimePoint& pt,
                         const Tolerances& tol) {
    if (set.empty()) return {};
    const auto ms = modes(set, medium, pt);

    cplx triple{};
    for (const auto& m1 : ms)
        for (const auto& m2 : ms)
            for (const auto& m3 : ms) {
                const cplx p2b = std::conj(m2.p);
                const cplx den = checked(m1.p + p2b, tol) * checked(p2b + m3.p, tol);
                triple += m1.phi2 * std::conj(m2.phi2) * m3.phi2 / den;
            }
    triple *= -medium.coupling();

    const ComplexMatrix d = build_D(set, medium, pt, tol);
    const ComplexMatrix product = build_Bx(set, medium, pt) * d * d.conjugate();
    return {triple, -medium.coupling() * product.trace()};
}

DerivativeBundle series_term(const SolitonSet& set, const Medium& medium,
                             const SpaceTimePoint& pt, int n, const Tolerances& tol) {
    if (n < 0) throw std::invalid_argument("series_term: n must be >= 0");
    DerivativeBundle out;
    if (set.empty()) return out;

    const auto ms = modes(set, medium, pt);
    const std::size_t slots = static_cast<std::size_t>(2 * n + 1);
    const std::size_t count = ms.size();
    std::vector<std::size_t> idx(slots, 0);

    // Odd slots (0-based even) carry phi^2 and P, even slots conj(phi)^2 and conj(P).
    for (;;) {
        cplx value{1.0, 0.0};
        cplx k_sum{};
        cplx omega_sum{};
        cplx prev_k{};
        for (std::size_t j = 0; j < slots; ++j) {
            const Mode& m = ms[idx[j]];
            const bool bar = j % 2 == 1;
            const cplx k = bar ? std::conj(m.p) : m.p;
            value *= bar ? std::conj(m.phi2) : m.phi2;
            if (j > 0) value /= checked(prev_k + k, tol);
            k_sum += k;
            omega_sum += bar ? std::conj(m.omega) : m.omega;
            prev_k = k;
        }
        const cplx rate = 2.0 * k_sum;
        out.psi += value;
        out.psi_x += rate * value;
        out.psi_xx += rate * rate * value;
        out.psi_xxx += rate * rate * rate * value;
        out.psi_t += -2.0 * omega_sum * value;

        std::size_t j = 0;
        while (j < slots && ++idx[j] == count) idx[j++] = 0;
        if (j == slots) break;
    }

    cplx scale{1.0, 0.0};
    for (int i = 0; i < n; ++i) scale *= -medium.coupling();
    out.psi *= scale;
    out.psi_x *= scale;
    out.psi_xx *= scale;
    out.psi_xxx *= scale;
    out.psi_t *= scale;
    return out;
}

RecursionSides recursion_sides(const SolitonSet& set, const Medium& medium,
                               const SpaceTimePoint& pt, int n, const Tolerances& tol) {
    if (n < 1 || n > 2) throw std::invalid_argument("recursion_sides: n must be 1 or 2");
    const cplx i{0.0, 1.0};

    std::vector<DerivativeBundle> terms;
    for (int k = 0; k <= n; ++k) terms.push_back(series_term(set, medium, pt, k, tol));
    const auto& top = terms[static_cast<std::size_t>(n)];

    RecursionSides sides;
    sides.lhs = i * top.psi_t + medium.rho() * top.psi_xx + i * medium.sigma() * top.psi_xxx;
    for (int l = 0; l <= n - 1; ++l) {
        for (int m = 0; m <= n - l - 1; ++m) {
            const auto& a = terms[static_cast<std::size_t>(l)];
            const auto& b = terms[static_cast<std::size_t>(m)];
            const auto& c = terms[static_cast<std::size_t>(n - 1 - l - m)];
            const cplx pair = a.psi * std::conj(b.psi);
            sides.rhs += -3.0 * i * medium.alpha() * pair * c.psi_x - medium.delta() * pair * c.psi;
        }
    }
    return sides;
}

cplx recursion_residual(const SolitonSet& set, const Medium& medium, const SpaceTimePoint& pt,
                        int n, const Tolerances& tol) {
    const auto s = recursion_sides(set, medium, pt, n, tol);
    return s.lhs - s.rhs;
}

}  // namespace hirota
