#include "stabledrift/estimators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace stabledrift {

namespace {

struct WindowIndices {
    std::size_t lo = 0;
    std::size_t hi = 0; // inclusive
    std::size_t count = 0;
};

// Grid indices i with t_i in [lo, hi]; a small relative slack keeps points
// that land on a window edge from flickering in and out.
WindowIndices window_indices(const TimeGrid& grid, double lo, double hi) {
    const double dt = grid.dt();
    const double slack = 1e-9 * dt;
    WindowIndices w;
    const double lo_idx = std::ceil((lo - slack) / dt);
    const double hi_idx = std::floor((hi + slack) / dt);
    if (hi_idx < 0.0 || lo_idx > static_cast<double>(grid.n_steps))
        return w;
    w.lo = static_cast<std::size_t>(std::max(0.0, lo_idx));
    w.hi = static_cast<std::size_t>(
        std::min(static_cast<double>(grid.n_steps), hi_idx));
    w.count = (w.hi >= w.lo) ? w.hi - w.lo + 1 : 0;
    return w;
}

void check_window(double lo, double hi, double horizon, double t) {
    // rounding slack so that t = -A phi and t = T - B phi sit exactly on the
    // admissible boundary
    const double slack = 1e-12 * (1.0 + horizon);
    if (lo < -slack || hi > horizon + slack)
        throw std::domain_error("estimator window [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "] at t = " + std::to_string(t) +
                                " leaves [0, " + std::to_string(horizon) + "]");
}

void check_resolution(std::size_t count, std::size_t required) {
    if (count < required)
        throw std::runtime_error(
            "estimator window contains " + std::to_string(count) +
            " grid points; the resolution rule requires " + std::to_string(required));
}

} // namespace

DriftEstimate estimate_drift(const SamplePath& x_path, const Kernel& g, double phi,
                             double t, std::size_t min_window_points) {
    if (!(phi > 0.0))
        throw std::domain_error("estimate_drift: bandwidth must be positive");

    const TimeGrid& grid = x_path.grid;
    DriftEstimate est;
    est.t = t;
    est.bandwidth = phi;
    est.window_lo = t + g.support_a() * phi;
    est.window_hi = t + g.support_b() * phi;
    check_window(est.window_lo, est.window_hi, grid.horizon, t);

    const WindowIndices w = window_indices(grid, est.window_lo, est.window_hi);
    check_resolution(w.count, min_window_points);

    double sum = 0.0;
    const std::size_t last = std::min(w.hi, grid.n_steps - 1);
    for (std::size_t i = w.lo; i <= last; ++i) {
        const double u = (grid.time(i) - t) / phi;
        sum += g(u) * (x_path.values[i + 1] - x_path.values[i]);
    }
    est.value = sum / phi;
    return est;
}

double bandwidth_thm42(double eps, int k, double alpha) {
    if (!(eps > 0.0))
        throw std::domain_error("bandwidth_thm42: eps must be positive");
    if (k < 0)
        throw std::domain_error("bandwidth_thm42: k must be >= 0");
    if (!(alpha > 1.0) || alpha > 2.0)
        throw std::domain_error("bandwidth_thm42: alpha must be in (1, 2]");
    return std::pow(eps, 1.0 / (k + 2.0 - 1.0 / alpha));
}

double rate_exponent_thm42(int k, double alpha) {
    if (k < 0)
        throw std::domain_error("rate_exponent_thm42: k must be >= 0");
    if (!(alpha > 1.0) || alpha > 2.0)
        throw std::domain_error("rate_exponent_thm42: alpha must be in (1, 2]");
    return (k + 1.0) / (k + 2.0 - 1.0 / alpha);
}

YPath build_y_path(const SamplePath& x_path, double x0, double bound_L) {
    if (!(x0 > 0.0))
        throw std::domain_error("build_y_path: x0 must be positive");

    const TimeGrid& grid = x_path.grid;
    const std::size_t n_pts = grid.n_points();

    YPath out;
    out.a_indicator.resize(n_pts);
    std::vector<double> y(n_pts);

    double running_min = x_path.values[0];
    for (std::size_t i = 0; i < n_pts; ++i) {
        running_min = std::min(running_min, x_path.values[i]);
        const double threshold = 0.5 * x0 * std::exp(-bound_L * grid.time(i));
        out.a_indicator[i] = running_min >= threshold;
    }

    y[0] = 0.0;
    for (std::size_t i = 0; i < grid.n_steps; ++i) {
        const double increment =
            out.a_indicator[i]
                ? (x_path.values[i + 1] - x_path.values[i]) / x_path.values[i]
                : 0.0;
        y[i + 1] = y[i] + increment;
    }

    out.y = SamplePath(grid, std::move(y));
    out.a_holds = out.a_indicator.back();
    return out;
}

MultiplierEstimate estimate_multiplier(const SamplePath& y_path, bool a_holds,
                                       const Kernel& g, double phi, double t,
                                       std::size_t min_window_points) {
    if (!(phi > 0.0))
        throw std::domain_error("estimate_multiplier: bandwidth must be positive");

    const TimeGrid& grid = y_path.grid;
    // the kernel argument is (t - s)/phi, so s runs over [t - B phi, t - A phi]
    const double lo = t - g.support_b() * phi;
    const double hi = t - g.support_a() * phi;
    check_window(lo, hi, grid.horizon, t);

    const WindowIndices w = window_indices(grid, lo, hi);
    check_resolution(w.count, min_window_points);

    double sum = 0.0;
    const std::size_t last = std::min(w.hi, grid.n_steps - 1);
    for (std::size_t i = w.lo; i <= last; ++i) {
        const double u = (t - grid.time(i)) / phi;
        sum += g(u) * (y_path.values[i + 1] - y_path.values[i]);
    }

    MultiplierEstimate est;
    est.t = t;
    est.bandwidth = phi;
    est.event_a_holds = a_holds;
    est.value = a_holds ? sum / phi : 0.0;
    return est;
}

double bandwidth_thm61(double eps, double alpha, double rho) {
    if (!(eps > 0.0))
        throw std::domain_error("bandwidth_thm61: eps must be positive");
    if (!(alpha > 1.0) || alpha > 2.0)
        throw std::domain_error("bandwidth_thm61: alpha must be in (1, 2]");
    if (!(rho > alpha - 1.0))
        throw std::domain_error("bandwidth_thm61: rho must exceed alpha - 1");
    return std::pow(eps, alpha / rho);
}

double rate_exponent_thm61(double alpha, double rho) {
    if (!(alpha > 1.0) || alpha > 2.0)
        throw std::domain_error("rate_exponent_thm61: alpha must be in (1, 2]");
    if (!(rho > alpha - 1.0))
        throw std::domain_error("rate_exponent_thm61: rho must exceed alpha - 1");
    return (rho - alpha + 1.0) / rho;
}

} // namespace stabledrift
