#pragma once

#include <functional>
#include <string>

namespace stabledrift {

// Time-varying coefficient theta(.) in the drift, together with its analytic
// derivatives and the known uniform bound L. The built-in factories below
// supply closed-form derivatives; `derivative(t, 0)` is theta(t) itself.
struct Multiplier {
    std::string name;
    double bound = 0.0;           // L with |theta(t)| <= L on the horizon
    int max_derivative_order = 0; // highest analytic derivative available
    std::function<double(double)> eval;
    std::function<double(double, int)> deriv;

    double operator()(double t) const { return eval(t); }

    double derivative(double t, int order) const;
};

// theta(t) = c
Multiplier constant_multiplier(double c);

// theta(t) = a * sin(b t)
Multiplier sine_multiplier(double a, double b);

// theta(t) = a / (1 + t^2); derivatives available to order 3
Multiplier rational_multiplier(double a);

// Dense-sample check of |theta| <= bound on [0, horizon]; returns the observed
// maximum (condition (A1) style validation).
double observed_bound(const Multiplier& m, double horizon, int n_samples = 2048);

} // namespace stabledrift
