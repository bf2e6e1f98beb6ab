#pragma once

#include "stabledrift/grid.hpp"
#include "stabledrift/multiplier.hpp"
#include "stabledrift/rng.hpp"

namespace stabledrift {

// Configuration of the small-noise model
//   dX_t = theta(t) X_t dt + eps dZ_t,  X_0 = x0,
// with Z a standard alpha-stable Levy path (scale 1, location 0).
struct SdeConfig {
    Multiplier multiplier;
    double x0 = 1.0;
    double eps = 0.1;
    double alpha = 1.5;
    double beta = 0.0;
    TimeGrid grid;

    void validate() const;
};

struct SdePaths {
    SamplePath x; // Euler path of the SDE
    SamplePath z; // driving Levy path, same noise realization
};

// Euler scheme with left-endpoint drift evaluation:
//   X_{i+1} = X_i + theta(t_i) X_i dt + eps (Z_{i+1} - Z_i).
SdePaths simulate_sde(const SdeConfig& cfg, RngStream& rng);

// x_t = x0 exp(int_0^t theta), the noise-free solution, with the integral
// accumulated by per-step Simpson quadrature (midpoint evaluations of theta).
SamplePath deterministic_solution(const Multiplier& multiplier, double x0,
                                  const TimeGrid& grid);

// Pathwise bound |X_t - x_t| <= e^{Lt} eps sup_{s<=t} |Z_s|, checked at every
// grid point with the relative Euler tolerance tau = 1e-6 (1 + |X_t|).
struct GronwallReport {
    std::vector<double> deviation; // |X_t - x_t|
    std::vector<double> bound;     // e^{Lt} eps sup_{s<=t}|Z_s|
    bool holds = false;
    double worst_margin = 0.0; // min over grid of bound + tau - deviation
};

GronwallReport gronwall_check(const SamplePath& x_path, const SamplePath& x_det,
                              const SamplePath& z_path, double bound_L, double eps);

} // namespace stabledrift
