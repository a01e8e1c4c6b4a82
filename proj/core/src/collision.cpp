#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hirota/dispersion.hpp"
#include "hirota/errors.hpp"
#include "hirota/trace_solution.hpp"
#include "hirota/verify.hpp"

namespace hirota {

double CollisionMetrics::max_relative_mismatch() const {
    double worst = 0.0;
    for (std::size_t k = 0; k < peaks_before.size() && k < peaks_after.size(); ++k)
        worst = std::max(worst, std::abs(peaks_after[k] - peaks_before[k]) / peaks_before[k]);
    return worst;
}

double group_velocity(const Soliton& s, const Medium& medium) {
    return dispersion(s.p, medium).real() / s.p.real();
}

namespace {

struct Peak {
    double position;
    double amplitude;
};

// Two largest interior local maxima of |psi(., t)|, refined by a parabola
// through the maximum and its neighbours.
std::vector<Peak> two_peaks(const SolitonSet& set, const Medium& medium, double t,
                            const GridSpec& window, const Tolerances& tol) {
    std::vector<double> amp(window.nx);
    for (std::size_t i = 0; i < window.nx; ++i)
        amp[i] = std::abs(eval_psi_closed(set, medium, {window.x(i), t}, tol));

    std::vector<std::size_t> maxima;
    for (std::size_t i = 1; i + 1 < window.nx; ++i)
        if (amp[i] >= amp[i - 1] && amp[i] > amp[i + 1]) maxima.push_back(i);
    if (maxima.size() < 2) {
        std::ostringstream msg;
        msg << "collision_metrics: fewer than two envelope peaks at t = " << t;
        throw UnseparatedEnvelopes(msg.str());
    }
    std::partial_sort(maxima.begin(), maxima.begin() + 2, maxima.end(),
                      [&](std::size_t a, std::size_t b) { return amp[a] > amp[b]; });

    const double h = window.x(1) - window.x(0);
    std::vector<Peak> peaks;
    for (std::size_t k = 0; k < 2; ++k) {
        const std::size_t i = maxima[k];
        const double y0 = amp[i - 1], y1 = amp[i], y2 = amp[i + 1];
        const double curv = y0 - 2.0 * y1 + y2;
        const double shift = curv != 0.0 ? 0.5 * (y0 - y2) / curv : 0.0;
        peaks.push_back({window.x(i) + shift * h, y1 - 0.25 * (y0 - y2) * shift});
    }
    std::sort(peaks.begin(), peaks.end(),
              [](const Peak& a, const Peak& b) { return a.position < b.position; });
    return peaks;
}

// Solitons ordered by their expected position v_k t.
std::vector<std::size_t> order_at(const std::vector<double>& velocity, double t) {
    std::vector<std::size_t> idx(velocity.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return velocity[a] * t < velocity[b] * t; });
    return idx;
}

}  // namespace

CollisionMetrics collision_metrics(const SolitonSet& set, const Medium& medium, double t_far,
                                   const GridSpec& x_window, const Tolerances& tol) {
    if (set.size() != 2) throw std::invalid_argument("collision_metrics: needs exactly two solitons");
    if (!(t_far > 0.0)) throw std::invalid_argument("collision_metrics: t_far must be positive");
    x_window.validate();
    if (x_window.nx < 3) throw std::invalid_argument("collision_metrics: window needs >= 3 points");

    const std::vector<double> velocity{group_velocity(set[0], medium),
                                       group_velocity(set[1], medium)};
    const double width = std::max(0.5 / set[0].p.real(), 0.5 / set[1].p.real());
    const double min_separation = 5.0 * width;
    if (std::abs(velocity[0] - velocity[1]) * t_far <= min_separation)
        throw UnseparatedEnvelopes("collision_metrics: group velocities too close to separate");

    CollisionMetrics out;
    out.t_far = t_far;
    out.peaks_before.resize(2);
    out.peaks_after.resize(2);
    out.positions_before.resize(2);
    out.positions_after.resize(2);

    for (const double t : {-t_far, t_far}) {
        const auto peaks = two_peaks(set, medium, t, x_window, tol);
        if (peaks[1].position - peaks[0].position <= min_separation)
            throw UnseparatedEnvelopes("collision_metrics: peaks closer than five envelope widths");
        const auto order = order_at(velocity, t);
        auto& amps = t < 0.0 ? out.peaks_before : out.peaks_after;
        auto& pos = t < 0.0 ? out.positions_before : out.positions_after;
        for (std::size_t r = 0; r < 2; ++r) {
            amps[order[r]] = peaks[r].amplitude;
            pos[order[r]] = peaks[r].position;
        }
    }
    return out;
}

}  // namespace hirota
