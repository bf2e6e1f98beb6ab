#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "stabledrift/grid.hpp"
#include "stabledrift/kernel.hpp"
#include "stabledrift/multiplier.hpp"
#include "stabledrift/rng.hpp"

namespace stabledrift {

// Limiting distribution of the normalized drift-product estimator error:
//   pos_weight * U_1 - neg_weight * U_2 + shift,
// with U_1, U_2 independent S_alpha(1, beta, 0) and the weights the 1/alpha
// powers of the kernel's positive/negative-part alpha integrals.
struct LimitLawSpec {
    double pos_weight = 0.0;
    double neg_weight = 0.0;
    double shift = 0.0; // the bias constant m
    double alpha = 1.5;
    double beta = 0.0;
};

LimitLawSpec make_limit_law_spec(const Kernel& g, double alpha, double beta,
                                 double shift);

// Bias constant m = J^{(k+1)}(t) / (k+1)! * M_{k+1} with J(s) = theta(s) x_s.
// All x-derivatives reduce to theta-derivatives through x' = theta x, so the
// multiplier must supply derivatives up to order k+1.
double bias_constant_m(const Multiplier& multiplier, double x0, const Kernel& g,
                       int k, double t);

std::vector<double> limit_law_sample(const LimitLawSpec& spec, std::size_t n,
                                     RngStream& rng);

// Two-sample Kolmogorov-Smirnov statistic sup_x |F_a(x) - F_b(x)|.
double ks_two_sample(std::span<const double> a, std::span<const double> b);

// Asymptotic two-sample critical value c(level) sqrt((n_a + n_b)/(n_a n_b)).
double ks_critical_value(std::size_t n_a, std::size_t n_b, double level = 0.01);

struct KsReport {
    double statistic = 0.0;
    double threshold = 0.0;
    bool pass = false;
    std::size_t n_a = 0;
    std::size_t n_b = 0;
};

// Distributional identity check for stable stochastic integrals: compares the
// discretized (1/1) int_0^T G((tau - t)/phi) dZ_tau against the time-changed
// representation phi^{1/alpha} (pos^{1/alpha} U_1 - neg^{1/alpha} U_2), where
// the part integrals run over the kernel support clipped to the window that
// actually intersects [0, T]. The symmetric case beta = 0 uses the single-copy
// representation.
KsReport time_change_check(const Kernel& g, double phi, double t,
                           const TimeGrid& grid, double alpha, double beta,
                           std::size_t n_reps, RngStream& rng);

} // namespace stabledrift
