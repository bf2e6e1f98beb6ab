#include "stabledrift/stable.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace stabledrift {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2.0;

void check_index(double alpha, double beta) {
    if (!(alpha > 0.0) || alpha > 2.0)
        throw std::domain_error("stable sampler: alpha must be in (0, 2]");
    if (beta < -1.0 || beta > 1.0)
        throw std::domain_error("stable sampler: beta must be in [-1, 1]");
}

} // namespace

double sample_standard_stable(double alpha, double beta, RngStream& rng) {
    check_index(alpha, beta);

    const double v = kPi * (rng.next_uniform() - 0.5); // uniform on (-pi/2, pi/2)
    const double w = rng.next_exponential();

    if (alpha == 1.0) {
        const double a = kHalfPi + beta * v;
        return (a * std::tan(v) -
                beta * std::log((kHalfPi * w * std::cos(v)) / a)) /
               kHalfPi;
    }

    // tan(pi * alpha / 2) vanishes identically at alpha = 2; force it so the
    // Gaussian case does not pick up rounding from tan near pi.
    const double tan_half = (alpha == 2.0) ? 0.0 : std::tan(kHalfPi * alpha);
    const double shift = std::atan(beta * tan_half) / alpha;
    const double scale =
        std::pow(1.0 + beta * beta * tan_half * tan_half, 0.5 / alpha);

    const double s = alpha * (v + shift);
    return scale * std::sin(s) / std::pow(std::cos(v), 1.0 / alpha) *
           std::pow(std::cos(v - s) / w, (1.0 - alpha) / alpha);
}

double sample_stable(const StableParams& params, RngStream& rng) {
    params.validate();
    const double x = sample_standard_stable(params.alpha, params.beta, rng);
    if (params.alpha == 1.0) {
        return params.sigma * x +
               (2.0 / kPi) * params.beta * params.sigma * std::log(params.sigma) +
               params.mu;
    }
    return params.sigma * x + params.mu;
}

std::complex<double> stable_cf(const StableParams& params, double u) {
    params.validate();
    if (u == 0.0)
        return {1.0, 0.0};

    const double au = std::abs(u);
    const double sg = (u > 0.0) ? 1.0 : -1.0;

    if (params.alpha == 1.0) {
        const double mod = params.sigma * au;
        const std::complex<double> expo(
            -mod, -mod * params.beta * (2.0 / kPi) * sg * std::log(au) + params.mu * u);
        return std::exp(expo);
    }

    const double tan_half = (params.alpha == 2.0) ? 0.0 : std::tan(kHalfPi * params.alpha);
    const double mod = std::pow(params.sigma, params.alpha) * std::pow(au, params.alpha);
    const std::complex<double> expo(-mod,
                                    mod * params.beta * sg * tan_half + params.mu * u);
    return std::exp(expo);
}

std::complex<double> empirical_cf(std::span<const double> samples, double u) {
    if (samples.empty())
        throw std::invalid_argument("empirical_cf: empty sample");
    double re = 0.0, im = 0.0;
    for (double x : samples) {
        re += std::cos(u * x);
        im += std::sin(u * x);
    }
    const double n = static_cast<double>(samples.size());
    return {re / n, im / n};
}

SamplePath simulate_levy_path(double alpha, double beta, const TimeGrid& grid,
                              RngStream& rng) {
    check_index(alpha, beta);
    if (!(alpha > 1.0))
        throw std::domain_error(
            "simulate_levy_path: alpha must be in (1, 2] (model or sanity regime)");

    const double step_scale = std::pow(grid.dt(), 1.0 / alpha);
    std::vector<double> z(grid.n_points());
    z[0] = 0.0;
    for (std::size_t i = 0; i < grid.n_steps; ++i)
        z[i + 1] = z[i] + step_scale * sample_standard_stable(alpha, beta, rng);
    return SamplePath(grid, std::move(z));
}

} // namespace stabledrift
