#include "stabledrift/sde.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "stabledrift/stable.hpp"

namespace stabledrift {

void SdeConfig::validate() const {
    if (!(alpha > 1.0) || alpha > 2.0)
        throw std::domain_error("SdeConfig: alpha must be in (1, 2]");
    if (beta < -1.0 || beta > 1.0)
        throw std::domain_error("SdeConfig: beta must be in [-1, 1]");
    if (eps < 0.0)
        throw std::domain_error("SdeConfig: eps must be >= 0");
    if (!multiplier.eval)
        throw std::domain_error("SdeConfig: multiplier not set");
    (void)TimeGrid(grid.horizon, grid.n_steps); // re-run grid invariants
}

SdePaths simulate_sde(const SdeConfig& cfg, RngStream& rng) {
    cfg.validate();
    SamplePath z = simulate_levy_path(cfg.alpha, cfg.beta, cfg.grid, rng);

    const double dt = cfg.grid.dt();
    std::vector<double> x(cfg.grid.n_points());
    x[0] = cfg.x0;
    for (std::size_t i = 0; i < cfg.grid.n_steps; ++i) {
        const double drift = cfg.multiplier.eval(cfg.grid.time(i)) * x[i] * dt;
        x[i + 1] = x[i] + drift + cfg.eps * (z.values[i + 1] - z.values[i]);
    }
    return {SamplePath(cfg.grid, std::move(x)), std::move(z)};
}

SamplePath deterministic_solution(const Multiplier& multiplier, double x0,
                                  const TimeGrid& grid) {
    const double dt = grid.dt();
    std::vector<double> x(grid.n_points());
    x[0] = x0;
    double integral = 0.0;
    for (std::size_t i = 0; i < grid.n_steps; ++i) {
        const double t0 = grid.time(i);
        const double t1 = grid.time(i + 1);
        integral += dt / 6.0 *
                    (multiplier.eval(t0) + 4.0 * multiplier.eval(0.5 * (t0 + t1)) +
                     multiplier.eval(t1));
        x[i + 1] = x0 * std::exp(integral);
    }
    return SamplePath(grid, std::move(x));
}

GronwallReport gronwall_check(const SamplePath& x_path, const SamplePath& x_det,
                              const SamplePath& z_path, double bound_L, double eps) {
    if (!(x_path.grid == x_det.grid) || !(x_path.grid == z_path.grid))
        throw std::invalid_argument("gronwall_check: paths must share one grid");

    const std::size_t n = x_path.size();
    GronwallReport report;
    report.deviation.resize(n);
    report.bound.resize(n);
    report.holds = true;
    report.worst_margin = std::numeric_limits<double>::infinity();

    double running_sup = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        running_sup = std::max(running_sup, std::abs(z_path.values[i]));
        const double t = x_path.grid.time(i);
        const double dev = std::abs(x_path.values[i] - x_det.values[i]);
        const double bnd = std::exp(bound_L * t) * eps * running_sup;
        report.deviation[i] = dev;
        report.bound[i] = bnd;

        const double tau = 1e-6 * (1.0 + std::abs(x_path.values[i]));
        const double margin = bnd + tau - dev;
        report.worst_margin = std::min(report.worst_margin, margin);
        if (margin < 0.0)
            report.holds = false;
    }
    return report;
}

} // namespace stabledrift
