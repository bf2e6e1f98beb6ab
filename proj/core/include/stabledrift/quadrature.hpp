#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace stabledrift {

// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Cached rule lookup; thread-safe.
const GaussLegendreRule& gauss_legendre(int n);

template <typename F>
double gl_integrate(F&& f, double a, double b, int n) {
    const GaussLegendreRule& rule = gauss_legendre(n);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return half * sum;
}

// Adaptive bisection with a GL(15)/GL(7) difference as the error estimate.
// The tolerance is absolute; integrands with isolated kinks should be split
// at the kinks by the caller first.
template <typename F>
double adaptive_integrate(F&& f, double a, double b, double abs_tol,
                          int max_depth = 48) {
    if (!(a < b))
        return 0.0;
    const double coarse = gl_integrate(f, a, b, 7);
    const double fine = gl_integrate(f, a, b, 15);
    if (std::abs(fine - coarse) <= abs_tol || max_depth <= 0)
        return fine;
    const double mid = 0.5 * (a + b);
    return adaptive_integrate(f, a, mid, 0.5 * abs_tol, max_depth - 1) +
           adaptive_integrate(f, mid, b, 0.5 * abs_tol, max_depth - 1);
}

} // namespace stabledrift
