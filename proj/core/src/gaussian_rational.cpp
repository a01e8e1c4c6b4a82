#include "hirota/gaussian_rational.hpp"

#include <ostream>
#include <sstream>

namespace hirota {

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::string GaussianRational::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    if (z.im() == 0) return os << z.re();
    return os << '(' << z.re() << (z.im() < 0 ? " - " : " + ") << abs(z.im()) << "i)";
}

GaussianRational square(const GaussianRational& z) { return z * z; }

GaussianRational cube(const GaussianRational& z) { return z * z * z; }

GaussianRational random_gaussian_rational(std::mt19937_64& rng, int bound) {
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(1, 2 * bound);
    auto draw_den = [&] {
        const int d = den(rng) - bound;  // in [1 - bound, bound]
        return d <= 0 ? d - 1 : d;       // skip zero: [-bound, -1] U [1, bound]
    };
    // Boost 1.74 rejects a negative denominator in the two-argument
    // constructor, so the sign goes on the numerator.
    auto fraction = [&] {
        int n = num(rng);
        int d = draw_den();
        if (d < 0) {
            n = -n;
            d = -d;
        }
        return Rational(n, d);
    };
    Rational re = fraction();
    Rational im = fraction();
    return {std::move(re), std::move(im)};
}

}  // namespace hirota
