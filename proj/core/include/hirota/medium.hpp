#pragma once

namespace hirota {

/// Coefficients of the Hirota equation
///
///   i psi_t + 3 i alpha |psi|^2 psi_x + rho psi_xx + i sigma psi_xxx
///       + delta |psi|^2 psi = 0
///
/// parameterized by (rho, sigma, lambda). The nonlinear coefficients are
/// derived as alpha = lambda * sigma and delta = lambda * rho, so the
/// integrability constraint alpha / sigma = delta / rho = lambda holds by
/// construction and the NLS (sigma = 0) and mKdV (rho = 0) limits are plain
/// values rather than divisions by zero.
class Medium {
public:
    /// Throws std::invalid_argument unless lambda > 0, rho >= 0, sigma >= 0,
    /// all finite, and not both rho and sigma are zero.
    Medium(double rho, double sigma, double lambda);

    double rho() const noexcept { return rho_; }
    double sigma() const noexcept { return sigma_; }
    double lambda() const noexcept { return lambda_; }
    double alpha() const noexcept { return alpha_; }
    double delta() const noexcept { return delta_; }

    /// lambda / 8, the coupling in front of D conj(D).
    double coupling() const noexcept { return lambda_ / 8.0; }

    bool is_nls_limit() const noexcept { return sigma_ == 0.0; }
    bool is_mkdv_limit() const noexcept { return rho_ == 0.0; }

    friend bool operator==(const Medium&, const Medium&) = default;

private:
    double rho_;
    double sigma_;
    double lambda_;
    double alpha_;
    double delta_;
};

}  // namespace hirota
