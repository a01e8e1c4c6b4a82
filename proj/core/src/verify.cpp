#include "hirota/verify.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "hirota/calculus.hpp"
#include "hirota/errors.hpp"

namespace hirota {

std::string_view to_string(EquationKind kind) {
    switch (kind) {
        case EquationKind::hirota: return "hirota";
        case EquationKind::nls: return "nls";
        case EquationKind::mkdv: return "mkdv";
    }
    return "unknown";
}

EquationKind parse_equation_kind(std::string_view name) {
    if (name == "hirota") return EquationKind::hirota;
    if (name == "nls") return EquationKind::nls;
    if (name == "mkdv") return EquationKind::mkdv;
    throw std::invalid_argument("unknown equation '" + std::string(name) + "'");
}

void check_compatible(EquationKind kind, const Medium& medium) {
    if (kind == EquationKind::nls && medium.sigma() != 0.0)
        throw EquationMismatch("nls requires sigma = 0");
    if (kind == EquationKind::mkdv && medium.rho() != 0.0)
        throw EquationMismatch("mkdv requires rho = 0");
}

namespace {

cplx residual_from(EquationKind kind, const Medium& medium, const DerivativeBundle& d) {
    const cplx i{0.0, 1.0};
    const double mod2 = std::norm(d.psi);
    switch (kind) {
        case EquationKind::hirota:
            return i * d.psi_t + 3.0 * i * medium.alpha() * mod2 * d.psi_x +
                   medium.rho() * d.psi_xx + i * medium.sigma() * d.psi_xxx +
                   medium.delta() * mod2 * d.psi;
        case EquationKind::nls:
            return i * d.psi_t + medium.rho() * d.psi_xx + medium.delta() * mod2 * d.psi;
        case EquationKind::mkdv:
            return d.psi_t + 3.0 * medium.alpha() * mod2 * d.psi_x + medium.sigma() * d.psi_xxx;
    }
    throw std::logic_error("residual_from: unhandled equation kind");
}

}  // namespace

cplx residual_at(EquationKind kind, const SolitonSet& set, const Medium& medium,
                 const SpaceTimePoint& pt, const Tolerances& tol) {
    check_compatible(kind, medium);
    return residual_from(kind, medium, analytic_derivatives(set, medium, pt, tol));
}

ResidualReport residual_report(EquationKind kind, const SolitonSet& set, const Medium& medium,
                               const GridSpec& grid, const Tolerances& tol) {
    grid.validate();
    check_compatible(kind, medium);

    ResidualReport report;
    double sum_sq = 0.0;
    bool have_worst = false;
    for (std::size_t j = 0; j < grid.nt; ++j) {
        for (std::size_t i = 0; i < grid.nx; ++i) {
            const SpaceTimePoint pt = grid.point(i, j);
            cplx r;
            cplx psi;
            try {
                const auto d = analytic_derivatives(set, medium, pt, tol);
                psi = d.psi;
                r = residual_from(kind, medium, d);
            } catch (const DegeneratePoint&) {
                ++report.n_degenerate;
                continue;
            }
            const double a = std::abs(r);
            ++report.n_points;
            sum_sq += a * a;
            report.max_psi = std::max(report.max_psi, std::abs(psi));
            const bool better =
                !have_worst || a > report.max_abs ||
                (a == report.max_abs &&
                 (pt.x < report.worst_point.x ||
                  (pt.x == report.worst_point.x && pt.t < report.worst_point.t)));
            if (better) {
                report.max_abs = a;
                report.worst_point = pt;
                have_worst = true;
            }
        }
    }
    if (report.n_points == 0)
        throw EmptyReport("residual_report: every grid point is degenerate");
    report.rms = std::sqrt(sum_sq / static_cast<double>(report.n_points));
    report.normalizer = std::max(1.0, report.max_psi);
    return report;
}

ResidualReport additivity_instance(const SolitonSet& set, double lambda, double rho0,
                                   double sigma0, double a, double b, const GridSpec& grid,
                                   const Tolerances& tol) {
    if (a < 0.0 || b < 0.0 || (a == 0.0 && b == 0.0))
        throw std::invalid_argument("additivity_instance: need a, b >= 0, not both zero");
    const Medium combined(a * rho0, b * sigma0, lambda);
    return residual_report(EquationKind::hirota, set, combined, grid, tol);
}

namespace {

cplx checked_ratio(cplx c_n, cplx den) {
    if (std::abs(den) < kResonanceTolerance)
        throw Resonance("pi_ratio: resonant momenta (denominator vanishes)");
    return c_n / den;
}

}  // namespace

cplx pi_ratio(cplx c_n, std::span<const cplx> momenta, const DispersionPoly& lp) {
    cplx total{};
    cplx separate{};
    for (cplx p : momenta) {
        total += 2.0 * p;
        separate += lp(2.0 * p);
    }
    return checked_ratio(c_n, lp(total) - separate);
}

cplx pi_ratio(cplx c_n, std::span<const MomentumSlot> slots, const DispersionPoly& lp) {
    const DispersionPoly lp_bar = lp.conjugate();
    cplx total{};
    cplx separate{};
    for (const auto& s : slots) {
        total += 2.0 * s.k;
        separate += s.conjugated ? lp_bar(2.0 * s.k) : lp(2.0 * s.k);
    }
    return checked_ratio(c_n, lp(total) - separate);
}

namespace {

struct TripleOutcome {
    bool resonant = false;
    double deviation = 0.0;
};

TripleOutcome compare_triple(cplx p1, cplx p2, cplx p3, double lambda, double rho0,
                             double sigma0, double a, double b) {
    const cplx i{0.0, 1.0};
    const DispersionPoly l_nls = DispersionPoly::hirota(rho0, 0.0);
    const DispersionPoly l_mkdv = DispersionPoly::hirota(0.0, sigma0);
    const DispersionPoly l_star = a * l_nls + b * l_mkdv;

    const MomentumSlot slots[] = {{p1, false}, {std::conj(p2), true}, {p3, false}};
    const cplx c_nls = i * lambda * rho0;
    const cplx c_mkdv = -3.0 * lambda * sigma0 * (p1 + p3);
    const cplx c_star = a * c_nls + b * c_mkdv;

    try {
        const cplx pi_nls = pi_ratio(c_nls, slots, l_nls);
        const cplx pi_mkdv = pi_ratio(c_mkdv, slots, l_mkdv);
        const cplx pi_star = pi_ratio(c_star, slots, l_star);
        const double scale = std::abs(pi_nls);
        TripleOutcome out;
        out.deviation = std::max(std::abs(pi_mkdv - pi_nls), std::abs(pi_star - pi_nls)) / scale;
        return out;
    } catch (const Resonance&) {
        return {true, 0.0};
    }
}

void validate_scaling_args(double lambda, double rho0, double sigma0, double a, double b) {
    if (!(lambda > 0.0) || !(rho0 > 0.0) || !(sigma0 > 0.0))
        throw std::invalid_argument("scaling_invariance_check: need lambda, rho0, sigma0 > 0");
    if (a < 0.0 || b < 0.0 || (a == 0.0 && b == 0.0))
        throw std::invalid_argument("scaling_invariance_check: need a, b >= 0, not both zero");
}

}  // namespace

ScalingCheckResult scaling_invariance_detail(const SolitonSet& set, double lambda, double rho0,
                                             double sigma0, double a, double b,
                                             const ScalingCheckOptions& options) {
    validate_scaling_args(lambda, rho0, sigma0, a, b);
    ScalingCheckResult result;
    auto record = [&](const TripleOutcome& o) {
        ++result.tuples_checked;
        result.max_rel_deviation = std::max(result.max_rel_deviation, o.deviation);
        if (!(o.deviation <= options.rel_tolerance)) result.agree = false;
    };

    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> re(0.3, 1.5);
    std::uniform_real_distribution<double> im(-1.0, 1.0);
    auto draw = [&] { return cplx{re(rng), im(rng)}; };

    for (int trial = 0; trial < options.trials; ++trial) {
        TripleOutcome o{true, 0.0};
        for (int attempt = 0; attempt <= options.max_redraws && o.resonant; ++attempt) {
            const cplx p1 = draw();
            const cplx p2 = draw();
            const cplx p3 = draw();
            o = compare_triple(p1, p2, p3, lambda, rho0, sigma0, a, b);
        }
        if (o.resonant) throw Resonance("scaling_invariance_check: redraw limit reached");
        record(o);
    }

    for (const auto& s1 : set)
        for (const auto& s2 : set)
            for (const auto& s3 : set) {
                const auto o = compare_triple(s1.p, s2.p, s3.p, lambda, rho0, sigma0, a, b);
                if (o.resonant) throw Resonance("scaling_invariance_check: resonant soliton triple");
                record(o);
            }
    return result;
}

bool scaling_invariance_check(const SolitonSet& set, double lambda, double rho0, double sigma0,
                              double a, double b, const ScalingCheckOptions& options) {
    return scaling_invariance_detail(set, lambda, rho0, sigma0, a, b, options).agree;
}

}  // namespace hirota
