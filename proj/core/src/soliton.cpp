#include "hirota/soliton.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hirota/errors.hpp"

namespace hirota {

namespace {

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

void validate(const SpaceTimePoint& pt) {
    if (!std::isfinite(pt.x) || !std::isfinite(pt.t))
        throw std::invalid_argument("SpaceTimePoint: coordinates must be finite");
}

SolitonSet::SolitonSet(std::vector<Soliton> solitons, const Tolerances& tol)
    : solitons_(std::move(solitons)) {
    for (std::size_t k = 0; k < solitons_.size(); ++k) {
        const auto& s = solitons_[k];
        if (!finite(s.p) || !finite(s.a0))
            throw std::invalid_argument("SolitonSet: non-finite soliton parameters");
        if (!(s.p.real() > 0.0)) {
            std::ostringstream msg;
            msg << "SolitonSet: soliton " << k << " has Re(p) = " << s.p.real() << " <= 0";
            throw std::invalid_argument(msg.str());
        }
        if (s.a0 == cplx{})
            throw std::invalid_argument("SolitonSet: zero amplitude a0");
    }
    for (std::size_t m = 0; m < solitons_.size(); ++m) {
        for (std::size_t n = 0; n < solitons_.size(); ++n) {
            const cplx pm = solitons_[m].p;
            const cplx pn = solitons_[n].p;
            if (std::abs(pm + pn) < tol.denominator || std::abs(pm + std::conj(pn)) < tol.denominator)
                throw SingularDenominator("SolitonSet: near-singular momentum pair");
        }
    }
}

SolitonSet::SolitonSet(std::initializer_list<Soliton> solitons)
    : SolitonSet(std::vector<Soliton>(solitons)) {}

}  // namespace hirota
