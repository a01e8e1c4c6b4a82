#include "hirota/calculus.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include <Eigen/LU>

#include "hirota/trace_solution.hpp"
#include "resolvent.hpp"

namespace hirota {

cplx DerivativeBundle::component(std::size_t i) const {
    switch (i) {
        case 0: return psi;
        case 1: return psi_x;
        case 2: return psi_xx;
        case 3: return psi_xxx;
        case 4: return psi_t;
        default: throw std::out_of_range("DerivativeBundle::component");
    }
}

std::vector<double> abs_difference(const DerivativeBundle& a, const DerivativeBundle& b) {
    std::vector<double> out(DerivativeBundle::kComponents);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::abs(a.component(i) - b.component(i));
    return out;
}

DerivativeBundle analytic_derivatives(const SolitonSet& set, const Medium& medium,
                                      const SpaceTimePoint& pt, const Tolerances& tol) {
    if (set.empty()) return {};
    const detail::ResolventSystem sys(set, medium, pt, tol);

    const ComplexMatrix k1 = sys.matrix_derivative(1, 0);
    const ComplexMatrix k2 = sys.matrix_derivative(2, 0);
    const ComplexMatrix k3 = sys.matrix_derivative(3, 0);
    const ComplexMatrix kt = sys.matrix_derivative(0, 1);

    // Leibniz on K w = r, one derivative order at a time.
    const ComplexVector w0 = sys.solve(sys.rhs_derivative(0, 0));
    const ComplexVector w1 = sys.solve(sys.rhs_derivative(1, 0) - k1 * w0);
    const ComplexVector w2 = sys.solve(sys.rhs_derivative(2, 0) - 2.0 * (k1 * w1) - k2 * w0);
    const ComplexVector w3 = sys.solve(sys.rhs_derivative(3, 0) - 3.0 * (k1 * w2) -
                                       3.0 * (k2 * w1) - k3 * w0);
    const ComplexVector wt = sys.solve(sys.rhs_derivative(0, 1) - kt * w0);

    return {sys.trace_of(w0), sys.trace_of(w1), sys.trace_of(w2), sys.trace_of(w3),
            sys.trace_of(wt)};
}

namespace {

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

Stencil::Stencil(int derivative, int accuracy, std::vector<int> offsets)
    : derivative_(derivative), accuracy_(accuracy), offsets_(std::move(offsets)) {
    if (derivative < 0 || accuracy < 1)
        throw std::invalid_argument("Stencil: need derivative >= 0 and accuracy >= 1");
    const auto m = static_cast<Eigen::Index>(offsets_.size());
    if (m <= derivative) throw std::invalid_argument("Stencil: too few offsets");

    using MatrixL = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
    using VectorL = Eigen::Matrix<long double, Eigen::Dynamic, 1>;
    MatrixL vander(m, m);
    VectorL moments = VectorL::Zero(m);
    for (Eigen::Index j = 0; j < m; ++j)
        for (Eigen::Index i = 0; i < m; ++i)
            vander(j, i) = std::pow(static_cast<long double>(offsets_[i]), static_cast<int>(j));
    moments(derivative) = factorial(derivative);

    const Eigen::FullPivLU<MatrixL> lu(vander);
    if (!lu.isInvertible()) throw std::invalid_argument("Stencil: repeated offsets");
    const VectorL w = lu.solve(moments);
    weights_.assign(w.data(), w.data() + m);

    // Monomials z^j, j < derivative + accuracy, must be differentiated exactly.
    for (int j = 0; j < derivative + accuracy; ++j) {
        long double acc = 0.0L;
        long double scale = 0.0L;
        for (Eigen::Index i = 0; i < m; ++i) {
            const long double term = w(i) * std::pow(static_cast<long double>(offsets_[i]), j);
            acc += term;
            scale += std::abs(term);
        }
        const long double expected = j == derivative ? factorial(derivative) : 0.0L;
        if (std::abs(acc - expected) > 1e-12L * std::max<long double>(1.0L, scale))
            throw std::invalid_argument("Stencil: offsets do not reach the requested accuracy");
    }
}

Stencil Stencil::central(int derivative, int accuracy) {
    if (accuracy % 2 != 0) throw std::invalid_argument("Stencil::central: accuracy must be even");
    const int points = 2 * ((derivative + 1) / 2) - 1 + accuracy;
    const int half = points / 2;
    std::vector<int> offsets;
    for (int o = -half; o <= half; ++o) offsets.push_back(o);
    return Stencil(derivative, accuracy, std::move(offsets));
}

cplx Stencil::apply(std::span<const cplx> samples, double h) const {
    if (samples.size() != offsets_.size())
        throw std::invalid_argument("Stencil::apply: sample count mismatch");
    cplx acc{};
    for (std::size_t i = 0; i < samples.size(); ++i) acc += weights_[i] * samples[i];
    return acc / std::pow(h, derivative_);
}

DerivativeBundle fd_derivatives(const SolitonSet& set, const Medium& medium,
                                const SpaceTimePoint& pt, double h_x, double h_t,
                                const Tolerances& tol) {
    if (!(h_x > 0.0) || !(h_t > 0.0))
        throw std::invalid_argument("fd_derivatives: steps must be positive");
    static const Stencil d1 = Stencil::central(1, 4);
    static const Stencil d2 = Stencil::central(2, 4);
    static const Stencil d3 = Stencil::central(3, 4);

    std::map<int, cplx> along_x;
    std::map<int, cplx> along_t;
    auto sample_x = [&](int o) {
        auto [it, fresh] = along_x.try_emplace(o);
        if (fresh) it->second = eval_psi_closed(set, medium, {pt.x + o * h_x, pt.t}, tol);
        return it->second;
    };
    auto sample_t = [&](int o) {
        auto [it, fresh] = along_t.try_emplace(o);
        if (fresh) it->second = eval_psi_closed(set, medium, {pt.x, pt.t + o * h_t}, tol);
        return it->second;
    };
    auto gather = [](const Stencil& s, auto&& sample) {
        std::vector<cplx> v;
        for (int o : s.offsets()) v.push_back(sample(o));
        return v;
    };

    DerivativeBundle out;
    out.psi = sample_x(0);
    out.psi_x = d1.apply(gather(d1, sample_x), h_x);
    out.psi_xx = d2.apply(gather(d2, sample_x), h_x);
    out.psi_xxx = d3.apply(gather(d3, sample_x), h_x);
    out.psi_t = d1.apply(gather(d1, sample_t), h_t);
    return out;
}

double observed_order(double coarse_error, double fine_error) {
    return std::log2(coarse_error / fine_error);
}

}  // namespace hirota
