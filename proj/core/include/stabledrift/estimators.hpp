#pragma once

#include <cstddef>
#include <vector>

#include "stabledrift/grid.hpp"
#include "stabledrift/kernel.hpp"

namespace stabledrift {

// Default resolution rule: at least this many grid points must fall inside a
// kernel window before a kernel sum is trusted.
inline constexpr std::size_t kMinWindowPoints = 200;

struct DriftEstimate {
    double t = 0.0;
    double value = 0.0; // estimate of theta(t) x_t
    double bandwidth = 0.0;
    double window_lo = 0.0; // t + A phi
    double window_hi = 0.0; // t + B phi
};

struct MultiplierEstimate {
    double t = 0.0;
    double value = 0.0; // estimate of theta(t); 0 whenever the event fails
    double bandwidth = 0.0;
    bool event_a_holds = false;
};

// Kernel estimator of the drift product theta(t) x_t:
//   (1/phi) sum_i G((t_i - t)/phi) (X_{i+1} - X_i),
// the left-point discretization of (1/phi) int_0^T G((tau - t)/phi) dX_tau.
// Throws if the window [t + A phi, t + B phi] leaves [0, T] or contains fewer
// than min_window_points grid points.
DriftEstimate estimate_drift(const SamplePath& x_path, const Kernel& g, double phi,
                             double t, std::size_t min_window_points = kMinWindowPoints);

// Bandwidth and error-decay exponent for the drift-product estimator:
// phi_eps = eps^{1/(k + 2 - 1/alpha)}, decay exponent (k+1)/(k + 2 - 1/alpha).
double bandwidth_thm42(double eps, int k, double alpha);
double rate_exponent_thm42(int k, double alpha);

// Transformed observation process Y with dY = I(A_t) X_t^{-1} dX_t and the
// event indicators A_t = { min_{s<=t} X_s >= (1/2) x0 e^{-Lt} }.
struct YPath {
    SamplePath y;
    std::vector<bool> a_indicator; // per grid point
    bool a_holds = false;          // indicator at the final grid point
};

YPath build_y_path(const SamplePath& x_path, double x0, double bound_L);

// Kernel estimator of the multiplier itself:
//   I(A) (1/phi) sum_i G((t - t_i)/phi) (Y_{i+1} - Y_i).
MultiplierEstimate estimate_multiplier(const SamplePath& y_path, bool a_holds,
                                       const Kernel& g, double phi, double t,
                                       std::size_t min_window_points = kMinWindowPoints);

// Bandwidth and dominant error exponent for the multiplier estimator over the
// Holder class of order rho: phi_eps = eps^{alpha/rho}, exponent
// (rho - alpha + 1)/rho. Requires rho > alpha - 1.
double bandwidth_thm61(double eps, double alpha, double rho);
double rate_exponent_thm61(double alpha, double rho);

} // namespace stabledrift
