#include "hirota/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hirota {

cplx dispersion(cplx p, const Medium& medium) {
    const cplx i{0.0, 1.0};
    return -2.0 * i * medium.rho() * p * p + 4.0 * medium.sigma() * p * p * p;
}

DispersionPoly::DispersionPoly(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw std::invalid_argument("DispersionPoly: non-finite coefficient");
}

DispersionPoly DispersionPoly::hirota(double rho, double sigma) {
    return DispersionPoly({0.0, 0.0, cplx{0.0, -rho}, sigma});
}

DispersionPoly DispersionPoly::hirota(const Medium& medium) {
    return hirota(medium.rho(), medium.sigma());
}

int DispersionPoly::degree() const noexcept {
    for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k)
        if (coeffs_[k] != cplx{}) return k;
    return -1;
}

cplx DispersionPoly::operator()(cplx z) const noexcept {
    cplx acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

DispersionPoly DispersionPoly::conjugate() const {
    std::vector<cplx> c(coeffs_.size());
    std::transform(coeffs_.begin(), coeffs_.end(), c.begin(), [](cplx z) { return std::conj(z); });
    return DispersionPoly(std::move(c));
}

DispersionPoly operator+(const DispersionPoly& a, const DispersionPoly& b) {
    std::vector<cplx> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
    return DispersionPoly(std::move(c));
}

DispersionPoly operator*(double s, const DispersionPoly& a) {
    std::vector<cplx> c(a.coeffs_);
    for (auto& z : c) z *= s;
    return DispersionPoly(std::move(c));
}

cplx general_dispersion(const DispersionPoly& lp, cplx p) { return 0.5 * lp(2.0 * p); }

}  // namespace hirota
