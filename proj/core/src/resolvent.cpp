#include "resolvent.hpp"

#include <cmath>
#include <sstream>

#include "hirota/dispersion.hpp"
#include "hirota/errors.hpp"

namespace hirota::detail {

namespace {

cplx ipow(cplx z, int k) {
    cplx r{1.0, 0.0};
    for (int i = 0; i < k; ++i) r *= z;
    return r;
}

}  // namespace

ResolventSystem::ResolventSystem(const SolitonSet& set, const Medium& medium,
                                 const SpaceTimePoint& pt, const Tolerances& tol)
    : n_(set.size()), coupling_root_(std::sqrt(medium.coupling())) {
    validate(pt);
    p_.reserve(n_);
    omega_.reserve(n_);
    log_e_.reserve(n_);
    large_.reserve(n_);
    for (const auto& s : set) {
        const cplx om = dispersion(s.p, medium);
        const cplx le = 2.0 * (std::log(s.a0) + s.p * pt.x - om * pt.t);
        p_.push_back(s.p);
        omega_.push_back(om);
        log_e_.push_back(le);
        large_.push_back(le.real() >= 0.0);
    }

    cauchy_.resize(n_, n_);
    for (std::size_t m = 0; m < n_; ++m) {
        for (std::size_t k = 0; k < n_; ++k) {
            const cplx den = p_[m] + std::conj(p_[k]);
            if (std::abs(den) < tol.denominator)
                throw SingularDenominator("resolvent: |p_m + conj(p_n)| below tolerance");
            cauchy_(m, k) = 1.0 / den;
        }
    }

    const std::size_t n = n_;
    const double sc = coupling_root_;
    system_ = ComplexMatrix::Zero(2 * n, 2 * n);
    for (std::size_t m = 0; m < n; ++m) {
        if (large_[m]) {
            system_(m, m) = std::exp(-log_e_[m]);
            system_(n + m, n + m) = std::exp(-std::conj(log_e_[m]));
            for (std::size_t k = 0; k < n; ++k) {
                system_(m, n + k) = sc * cauchy_(m, k);
                system_(n + m, k) = -sc * std::conj(cauchy_(m, k));
            }
        } else {
            const cplx e = std::exp(log_e_[m]);
            system_(m, m) = 1.0;
            system_(n + m, n + m) = 1.0;
            for (std::size_t k = 0; k < n; ++k) {
                system_(m, n + k) = sc * e * cauchy_(m, k);
                system_(n + m, k) = -sc * std::conj(e) * std::conj(cauchy_(m, k));
            }
        }
    }

    if (n == 0) return;
    lu_.compute(system_);
    const double rcond = lu_.rcond();
    condition_ = rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
    if (!(condition_ <= tol.max_condition)) {
        std::ostringstream msg;
        msg << "resolvent system near-singular at (x=" << pt.x << ", t=" << pt.t
            << "), condition estimate " << condition_;
        throw DegeneratePoint(msg.str(), condition_);
    }
}

ComplexMatrix ResolventSystem::matrix_derivative(int kx, int kt) const {
    if (kx == 0 && kt == 0) return system_;
    const std::size_t n = n_;
    const double sc = coupling_root_;
    ComplexMatrix d = ComplexMatrix::Zero(2 * n, 2 * n);
    for (std::size_t m = 0; m < n; ++m) {
        const cplx fac = ipow(2.0 * p_[m], kx) * ipow(-2.0 * omega_[m], kt);
        const cplx fac_bar = std::conj(fac);
        const cplx scale = large_[m] ? cplx{1.0} : std::exp(log_e_[m]);
        for (std::size_t k = 0; k < n; ++k) {
            d(m, n + k) = sc * fac * scale * cauchy_(m, k);
            d(n + m, k) = -sc * fac_bar * std::conj(scale) * std::conj(cauchy_(m, k));
        }
    }
    return d;
}

ComplexVector ResolventSystem::rhs_derivative(int kx, int kt) const {
    ComplexVector r = ComplexVector::Zero(2 * n_);
    for (std::size_t m = 0; m < n_; ++m) {
        const cplx fac = ipow(2.0 * p_[m], kx) * ipow(-2.0 * omega_[m], kt);
        r(m) = large_[m] ? fac : fac * std::exp(log_e_[m]);
    }
    return r;
}

ComplexVector ResolventSystem::solve(const ComplexVector& rhs) const {
    if (n_ == 0) return ComplexVector{};
    return lu_.solve(rhs);
}

cplx ResolventSystem::trace_of(const ComplexVector& w) const {
    cplx acc{};
    for (std::size_t m = 0; m < n_; ++m) acc += w(m);
    return acc;
}

}  // namespace hirota::detail
