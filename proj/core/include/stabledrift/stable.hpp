#pragma once

#include <complex>
#include <span>

#include "stabledrift/grid.hpp"
#include "stabledrift/rng.hpp"

namespace stabledrift {

// Parameters (alpha, beta, sigma, mu) of the stable law S_alpha(sigma, beta, mu)
// in the parameterization whose characteristic function is
//
//   E exp(iuZ) = exp{ -sigma^a |u|^a (1 - i beta sgn(u) tan(pi a / 2)) + i mu u },  a != 1,
//                exp{ -sigma |u| (1 + i beta (2/pi) sgn(u) log|u|) + i mu u },      a == 1.
//
// Sampling and the characteristic-function oracle below must agree with this
// convention exactly; the CF tests pin the beta sign.
struct StableParams {
    double alpha = 2.0;
    double beta = 0.0;
    double sigma = 1.0;
    double mu = 0.0;

    void validate() const {
        if (!(alpha > 0.0) || alpha > 2.0)
            throw std::domain_error("StableParams: alpha must be in (0, 2]");
        if (beta < -1.0 || beta > 1.0)
            throw std::domain_error("StableParams: beta must be in [-1, 1]");
        if (!(sigma > 0.0))
            throw std::domain_error("StableParams: sigma must be positive");
    }
};

// One draw from S_alpha(1, beta, 0) via the Chambers-Mallows-Stuck transform.
double sample_standard_stable(double alpha, double beta, RngStream& rng);

// One draw from S_alpha(sigma, beta, mu). For alpha == 1 the scale change picks
// up the (2/pi) beta sigma log(sigma) shift required by the log term in the CF.
double sample_stable(const StableParams& params, RngStream& rng);

// Characteristic function of S_alpha(sigma, beta, mu) at u, both branches.
std::complex<double> stable_cf(const StableParams& params, double u);

// Empirical characteristic function (1/n) sum exp(i u x_j).
std::complex<double> empirical_cf(std::span<const double> samples, double u);

// Path of a standard alpha-stable Levy process on the grid: Z_0 = 0 and
// increments i.i.d. S_alpha(dt^{1/alpha}, beta, 0). Requires 1 < alpha <= 2
// (alpha = 2 is the Gaussian sanity regime).
SamplePath simulate_levy_path(double alpha, double beta, const TimeGrid& grid,
                              RngStream& rng);

} // namespace stabledrift
