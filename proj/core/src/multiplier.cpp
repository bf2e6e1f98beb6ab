#include "stabledrift/multiplier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace stabledrift {

double Multiplier::derivative(double t, int order) const {
    if (order < 0)
        throw std::domain_error("Multiplier: derivative order must be >= 0");
    if (order == 0)
        return eval(t);
    if (order > max_derivative_order)
        throw std::domain_error("Multiplier '" + name +
                                "': derivative of order " + std::to_string(order) +
                                " not available");
    return deriv(t, order);
}

Multiplier constant_multiplier(double c) {
    Multiplier m;
    m.name = "constant";
    m.bound = std::abs(c);
    m.max_derivative_order = 100;
    m.eval = [c](double) { return c; };
    m.deriv = [](double, int) { return 0.0; };
    return m;
}

Multiplier sine_multiplier(double a, double b) {
    Multiplier m;
    m.name = "sin";
    m.bound = std::abs(a);
    m.max_derivative_order = 100;
    m.eval = [a, b](double t) { return a * std::sin(b * t); };
    // d^j/dt^j a sin(bt) = a b^j sin(bt + j pi/2)
    m.deriv = [a, b](double t, int j) {
        return a * std::pow(b, j) * std::sin(b * t + j * std::numbers::pi / 2.0);
    };
    return m;
}

Multiplier rational_multiplier(double a) {
    Multiplier m;
    m.name = "rational";
    m.bound = std::abs(a);
    m.max_derivative_order = 3;
    m.eval = [a](double t) { return a / (1.0 + t * t); };
    m.deriv = [a](double t, int j) {
        const double q = 1.0 + t * t;
        switch (j) {
        case 1:
            return -2.0 * a * t / (q * q);
        case 2:
            return a * (6.0 * t * t - 2.0) / (q * q * q);
        case 3:
            return 24.0 * a * t * (1.0 - t * t) / (q * q * q * q);
        default:
            throw std::domain_error("rational multiplier: derivative order > 3");
        }
    };
    return m;
}

double observed_bound(const Multiplier& m, double horizon, int n_samples) {
    double worst = 0.0;
    for (int i = 0; i <= n_samples; ++i) {
        const double t = horizon * i / n_samples;
        worst = std::max(worst, std::abs(m.eval(t)));
    }
    return worst;
}

} // namespace stabledrift
