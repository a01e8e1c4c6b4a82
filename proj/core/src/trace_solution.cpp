#include "hirota/trace_solution.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "hirota/dispersion.hpp"
#include "hirota/errors.hpp"
#include "resolvent.hpp"

namespace hirota {

namespace {

const double kMaxExponent = std::log(std::numeric_limits<double>::max());

template <class Entry>
ComplexMatrix fill(std::size_t n, Entry entry) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(i, j);
    return m;
}

std::vector<cplx> phis(const SolitonSet& set, const Medium& medium, const SpaceTimePoint& pt) {
    std::vector<cplx> out;
    out.reserve(set.size());
    for (const auto& s : set) out.push_back(phi(s, medium, pt));
    return out;
}

void check_denominator(cplx den, const Tolerances& tol, const char* what) {
    if (std::abs(den) < tol.denominator) throw SingularDenominator(what);
}

ComplexMatrix coupled_product(const SolitonSet& set, const Medium& medium,
                              const SpaceTimePoint& pt, const Tolerances& tol) {
    const ComplexMatrix d = build_D(set, medium, pt, tol);
    return medium.coupling() * (d * d.conjugate());
}

}  // namespace

cplx phi(const Soliton& s, const Medium& medium, const SpaceTimePoint& pt) {
    validate(pt);
    const cplx exponent = s.p * pt.x - dispersion(s.p, medium) * pt.t;
    if (std::abs(exponent.real()) > kMaxExponent) {
        std::ostringstream msg;
        msg << "phi: Re(p x - Omega t) = " << exponent.real() << " outside the double range";
        throw ExponentRange(msg.str());
    }
    return s.a0 * std::exp(exponent);
}

ComplexMatrix build_B(const SolitonSet& set, const Medium& medium, const SpaceTimePoint& pt,
                      const Tolerances& tol) {
    const auto f = phis(set, medium, pt);
    return fill(set.size(), [&](std::size_t m, std::size_t n) {
        const cplx den = set[m].p + set[n].p;
        check_denominator(den, tol, "build_B: |p_m + p_n| below tolerance");
        return f[m] * f[n] / den;
    });
}

ComplexMatrix build_D(const SolitonSet& set, const Medium& medium, const SpaceTimePoint& pt,
                      const Tolerances& tol) {
    const auto f = phis(set, medium, pt);
    return fill(set.size(), [&](std::size_t m, std::size_t n) {
        const cplx den = set[m].p + std::conj(set[n].p);
        check_denominator(den, tol, "build_D: |p_m + conj(p_n)| below tolerance");
        return f[m] * std::conj(f[n]) / den;
    });
}

ComplexMatrix build_Bx(const SolitonSet& set, const Medium& medium, const SpaceTimePoint& pt) {
    const auto f = phis(set, medium, pt);
    return fill(set.size(), [&](std::size_t m, std::size_t n) { return f[m] * f[n]; });
}

cplx eval_psi_closed(const SolitonSet& set, const Medium& medium, const SpaceTimePoint& pt,
                     const Tolerances& tol) {
    if (set.empty()) return {};
    const detail::ResolventSystem sys(set, medium, pt, tol);
    return sys.trace_of(sys.solve(sys.rhs_derivative(0, 0)));
}

cplx eval_psi_direct(const SolitonSet& set, const Medium& medium, const SpaceTimePoint& pt,
                     const Tolerances& tol) {
    if (set.empty()) return {};
    const auto n = static_cast<Eigen::Index>(set.size());
    const ComplexMatrix m = ComplexMatrix::Identity(n, n) + coupled_product(set, medium, pt, tol);
    if (!m.allFinite())
        throw ExponentRange("eval_psi_direct: I + (lambda/8) D conj(D) overflows at this point");
    const Eigen::PartialPivLU<ComplexMatrix> lu(m);
    const double rcond = lu.rcond();
    const double condition = rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
    if (!(condition <= tol.max_condition))
        throw DegeneratePoint("eval_psi_direct: I + (lambda/8) D conj(D) near-singular", condition);
    const ComplexMatrix x = lu.solve(build_Bx(set, medium, pt));
    return x.trace();
}

std::vector<cplx> series_partial_sums(const SolitonSet& set, const Medium& medium,
                                      const SpaceTimePoint& pt, int max_order,
                                      const Tolerances& tol) {
    if (max_order < 0) throw std::invalid_argument("series: max_order must be >= 0");
    std::vector<cplx> sums;
    sums.reserve(static_cast<std::size_t>(max_order) + 1);
    if (set.empty()) {
        sums.assign(static_cast<std::size_t>(max_order) + 1, cplx{});
        return sums;
    }
    const ComplexMatrix d = build_D(set, medium, pt, tol);
    const ComplexMatrix g = d * d.conjugate();
    ComplexMatrix w = build_Bx(set, medium, pt);
    cplx sum{};
    double coef = 1.0;
    for (int n = 0; n <= max_order; ++n) {
        sum += coef * w.trace();
        sums.push_back(sum);
        if (n == max_order) break;
        w = w * g;
        coef *= -medium.coupling();
    }
    return sums;
}

cplx eval_psi_series(const SolitonSet& set, const Medium& medium, const SpaceTimePoint& pt,
                     int max_order, const Tolerances& tol) {
    return series_partial_sums(set, medium, pt, max_order, tol).back();
}

SpectralEstimate spectral_radius_q(const SolitonSet& set, const Medium& medium,
                                   const SpaceTimePoint& pt, const Tolerances& tol) {
    constexpr int kMaxIterations = 200;
    constexpr double kRelTol = 1e-8;

    SpectralEstimate est;
    if (set.empty()) return est;
    const ComplexMatrix a = coupled_product(set, medium, pt, tol);
    const auto n = a.rows();

    ComplexVector v(n);
    for (Eigen::Index k = 0; k < n; ++k) v(k) = cplx{1.0 + 0.1 * static_cast<double>(k), 0.0};
    v.normalize();

    double prev = -1.0;
    for (int it = 1; it <= kMaxIterations; ++it) {
        ComplexVector w = a * v;
        const double norm = w.norm();
        est.iterations = it;
        if (norm == 0.0) {
            est.q = 0.0;
            return est;
        }
        v = w / norm;
        if (prev >= 0.0 && std::abs(norm - prev) <= kRelTol * norm) {
            est.q = norm;
            return est;
        }
        prev = norm;
    }
    est.q = a.norm();
    est.upper_bound = true;
    return est;
}

cplx one_soliton_closed(const Soliton& s, const Medium& medium, const SpaceTimePoint& pt) {
    if (!(s.p.real() > 0.0)) throw std::invalid_argument("one_soliton_closed: Re(p) must be > 0");
    if (s.a0 == cplx{}) throw std::invalid_argument("one_soliton_closed: a0 must be nonzero");
    validate(pt);

    const cplx om = dispersion(s.p, medium);
    const double two_re_p = 2.0 * s.p.real();
    const double xi = two_re_p * pt.x - 2.0 * om.real() * pt.t;
    const double a2 = std::norm(s.a0);
    const double eta = 0.5 * std::log(medium.lambda() * a2 * a2 / (8.0 * two_re_p * two_re_p));
    const double carrier = 2.0 * s.p.imag() * pt.x - 2.0 * om.imag() * pt.t;
    const cplx phase = std::polar(1.0, carrier);
    return 0.5 * s.a0 * s.a0 * std::exp(-eta) / std::cosh(xi + eta) * phase;
}

}  // namespace hirota
