#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "hirota/calculus.hpp"
#include "hirota/errors.hpp"
#include "hirota/identities.hpp"
#include "hirota/trace_solution.hpp"

namespace hirota::cli {

using nlohmann::ordered_json;

namespace {

ordered_json point_json(const SpaceTimePoint& pt) { return {{"x", pt.x}, {"t", pt.t}}; }

ordered_json complex_json(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

// FD-vs-analytic convergence order over a coarse subsample of the grid, one
// step halving from h = 1e-2.
ordered_json fd_order_estimate(const RunConfig& config, const GridSpec& grid) {
    constexpr double kCoarse = 1e-2;
    constexpr double kFine = 5e-3;
    constexpr std::size_t kSamplesPerAxis = 5;
    std::vector<double> coarse(4, 0.0), fine(4, 0.0);
    auto pick = [](std::size_t n, std::size_t k) {
        return n == 1 ? 0 : k * (n - 1) / (kSamplesPerAxis - 1);
    };
    std::size_t used = 0;
    for (std::size_t a = 0; a < kSamplesPerAxis; ++a) {
        for (std::size_t b = 0; b < kSamplesPerAxis; ++b) {
            const SpaceTimePoint pt = grid.point(pick(grid.nx, b), pick(grid.nt, a));
            try {
                const auto exact = analytic_derivatives(config.solitons, config.medium, pt);
                const auto dc = abs_difference(
                    fd_derivatives(config.solitons, config.medium, pt, kCoarse, kCoarse), exact);
                const auto df = abs_difference(
                    fd_derivatives(config.solitons, config.medium, pt, kFine, kFine), exact);
                for (std::size_t c = 0; c < 4; ++c) {
                    coarse[c] = std::max(coarse[c], dc[c + 1]);
                    fine[c] = std::max(fine[c], df[c + 1]);
                }
                ++used;
            } catch (const DegeneratePoint&) {
            }
        }
    }
    const char* names[] = {"psi_x", "psi_xx", "psi_xxx", "psi_t"};
    ordered_json order = ordered_json::object();
    for (std::size_t c = 0; c < 4; ++c) {
        const double o = observed_order(coarse[c], fine[c]);
        order[names[c]] = std::isfinite(o) ? ordered_json(o) : ordered_json(nullptr);
    }
    return {{"steps", {kCoarse, kFine}},
            {"points", used},
            {"max_error_coarse", coarse},
            {"max_error_fine", fine},
            {"order", order}};
}

}  // namespace

FieldFormat parse_field_format(const std::string& name) {
    if (name == "csv") return FieldFormat::csv;
    if (name == "json") return FieldFormat::json;
    throw ConfigError("unknown field format '" + name + "' (expected csv or json)");
}

int write_field(const RunConfig& config, FieldFormat format, std::ostream& out,
                std::ostream& err) {
    const GridSpec& grid = config.require_grid();
    std::size_t degenerate = 0;
    ordered_json records = ordered_json::array();
    if (format == FieldFormat::csv) out << "x,t,re_psi,im_psi,abs_psi\n";
    for (std::size_t j = 0; j < grid.nt; ++j) {
        for (std::size_t i = 0; i < grid.nx; ++i) {
            const SpaceTimePoint pt = grid.point(i, j);
            cplx psi;
            try {
                psi = eval_psi_closed(config.solitons, config.medium, pt);
            } catch (const DegeneratePoint&) {
                ++degenerate;
                continue;
            }
            if (format == FieldFormat::csv) {
                out << format_real(pt.x) << ',' << format_real(pt.t) << ','
                    << format_real(psi.real()) << ',' << format_real(psi.imag()) << ','
                    << format_real(std::abs(psi)) << '\n';
            } else {
                records.push_back({{"x", pt.x},
                                   {"t", pt.t},
                                   {"re_psi", psi.real()},
                                   {"im_psi", psi.imag()},
                                   {"abs_psi", std::abs(psi)}});
            }
        }
    }
    if (format == FieldFormat::json) out << records.dump(1) << '\n';
    if (degenerate > 0) {
        err << "field: " << degenerate << " degenerate point(s) skipped\n";
        return kDegenerate;
    }
    return kOk;
}

int cmd_field(const RunConfig& config, const std::string& out_path, FieldFormat format,
              std::ostream& err) {
    std::ofstream out(out_path);
    if (!out) {
        err << "field: cannot open '" << out_path << "' for writing\n";
        return kConfigError;
    }
    return write_field(config, format, out, err);
}

int cmd_residual(const RunConfig& config, EquationKind equation, bool fd_check,
                 std::ostream& out, std::ostream& err) {
    const GridSpec& grid = config.require_grid();
    try {
        check_compatible(equation, config.medium);
    } catch (const EquationMismatch& e) {
        err << "residual: " << e.what() << '\n';
        return kConfigError;
    }
    ResidualReport report;
    try {
        report = residual_report(equation, config.solitons, config.medium, grid);
    } catch (const EmptyReport& e) {
        err << "residual: " << e.what() << '\n';
        return kDegenerate;
    }
    const bool pass = report.relative() <= config.options.tolerance;
    ordered_json doc = {{"equation", std::string(to_string(equation))},
                        {"max_abs", report.max_abs},
                        {"rms", report.rms},
                        {"normalizer", report.normalizer},
                        {"max_psi", report.max_psi},
                        {"relative", report.relative()},
                        {"n_points", report.n_points},
                        {"n_degenerate", report.n_degenerate},
                        {"worst_point", point_json(report.worst_point)},
                        {"tolerance", config.options.tolerance},
                        {"pass", pass}};
    if (fd_check) doc["fd_check"] = fd_order_estimate(config, grid);
    out << doc.dump(2) << '\n';
    if (report.n_degenerate > 0)
        err << "residual: " << report.n_degenerate << " degenerate point(s) skipped\n";
    return pass ? kOk : kToleranceFailure;
}

int cmd_series(const RunConfig& config, SpaceTimePoint point, int max_order, std::ostream& out,
               std::ostream& err) {
    if (max_order < 0) {
        err << "series: max order must be >= 0\n";
        return kConfigError;
    }
    try {
        const auto& set = config.solitons;
        const cplx closed = eval_psi_closed(set, config.medium, point);
        const auto q = spectral_radius_q(set, config.medium, point);
        const auto sums = series_partial_sums(set, config.medium, point, max_order);
        const double scale = std::max(1.0, std::abs(closed));
        ordered_json orders = ordered_json::array();
        for (std::size_t k = 0; k < sums.size(); ++k) {
            const double e = std::abs(sums[k] - closed);
            orders.push_back({{"order", k},
                              {"partial", complex_json(sums[k])},
                              {"error", e},
                              {"relative_error", e / scale}});
        }
        const ordered_json doc = {{"point", point_json(point)},
                                  {"q", q.q},
                                  {"q_upper_bound", q.upper_bound},
                                  {"diverges", q.diverges()},
                                  {"closed", complex_json(closed)},
                                  {"orders", orders}};
        out << doc.dump(2) << '\n';
        if (q.diverges()) err << "series: q = " << q.q << ", Neumann series diverges here\n";
    } catch (const DegeneratePoint& e) {
        err << "series: " << e.what() << '\n';
        return kDegenerate;
    } catch (const ExponentRange& e) {
        err << "series: " << e.what() << '\n';
        return kDegenerate;
    }
    return kOk;
}

int cmd_identity(int n_max, int trials, std::uint64_t seed, std::ostream& out, std::ostream& err) {
    if (n_max < 1 || trials < 0) {
        err << "identity: need n_max >= 1 and trials >= 0\n";
        return kConfigError;
    }
    const std::vector<GaussianRational> gate{1, 2, 3};
    const auto cubic = identity_cubic(gate);
    const auto quad = identity_quadratic(gate);
    const auto report = run_identity_suite(n_max, trials, seed);
    const ordered_json doc = {
        {"n_max", report.n_max},
        {"trials_per_case", report.trials_per_case},
        {"trials", report.trials},
        {"failures", report.failures},
        {"seed", report.seed},
        {"gate", {{"cubic", {cubic.lhs.str(), cubic.rhs.str()}},
                  {"quadratic", {quad.lhs.str(), quad.rhs.str()}}}}};
    out << doc.dump(2) << '\n';
    return report.failures == 0 ? kOk : kToleranceFailure;
}

int cmd_collide(const RunConfig& config, double t_far, std::ostream& out, std::ostream& err) {
    const GridSpec& grid = config.require_grid();
    const GridSpec window{grid.x_min, grid.x_max, grid.nx, 0.0, 0.0, 1};
    CollisionMetrics m;
    try {
        m = collision_metrics(config.solitons, config.medium, t_far, window);
    } catch (const std::invalid_argument& e) {
        err << "collide: " << e.what() << '\n';
        return kConfigError;
    } catch (const UnseparatedEnvelopes& e) {
        err << "collide: " << e.what() << '\n';
        return kToleranceFailure;
    }
    constexpr double kPeakTolerance = 1e-4;
    const double mismatch = m.max_relative_mismatch();
    const bool pass = mismatch <= kPeakTolerance;
    const ordered_json doc = {{"t_far", m.t_far},
                              {"peaks_before", m.peaks_before},
                              {"peaks_after", m.peaks_after},
                              {"positions_before", m.positions_before},
                              {"positions_after", m.positions_after},
                              {"max_relative_mismatch", mismatch},
                              {"tolerance", kPeakTolerance},
                              {"pass", pass}};
    out << doc.dump(2) << '\n';
    return pass ? kOk : kToleranceFailure;
}

SpaceTimePoint parse_point(const std::string& text) {
    std::istringstream in(text);
    SpaceTimePoint pt;
    char comma = 0;
    if (!(in >> pt.x >> comma >> pt.t) || comma != ',' || !(in >> std::ws).eof())
        throw ConfigError("point: expected X,T but got '" + text + "'");
    return pt;
}

}  // namespace hirota::cli
