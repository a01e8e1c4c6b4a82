#pragma once

#include <stdexcept>
#include <string>

namespace hirota {

/// A pairwise denominator P_m + P_n or P_m + conj(P_n) fell below the
/// configured tolerance.
class SingularDenominator : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The resolvent system is numerically singular at the requested point.
class DegeneratePoint : public std::runtime_error {
public:
    DegeneratePoint(const std::string& what, double condition)
        : std::runtime_error(what), condition_(condition) {}

    double condition() const noexcept { return condition_; }

private:
    double condition_;
};

/// exp() of a mode exponent would leave the double range.
class ExponentRange : public std::range_error {
public:
    using std::range_error::range_error;
};

/// Equation kind and medium disagree (e.g. NLS requested with sigma != 0).
class EquationMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Zero denominator in a pi-ratio: the momenta are resonant for L_p.
class Resonance : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class EmptyReport : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Envelopes never separate far enough to read off individual peaks.
class UnseparatedEnvelopes : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace hirota
