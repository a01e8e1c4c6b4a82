#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hirota {

using Rational = boost::multiprecision::cpp_rational;

/// Exact complex rational re + i im. Both parts are kept reduced with
/// positive denominators by the underlying rational type.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(std::int64_t re) : re_(re) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    const Rational& re() const noexcept { return re_; }
    const Rational& im() const noexcept { return im_; }

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }

    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

    std::string str() const;

private:
    Rational re_{0};
    Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

GaussianRational square(const GaussianRational& z);
GaussianRational cube(const GaussianRational& z);

/// Random Gaussian rational whose real and imaginary parts are n/d with
/// n in [-bound, bound] and d in [-bound, bound] \ {0}.
GaussianRational random_gaussian_rational(std::mt19937_64& rng, int bound = 9);

}  // namespace hirota
