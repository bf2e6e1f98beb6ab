#include "stabledrift/quadrature.hpp"

#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace stabledrift {

namespace {

// Newton iteration on the Legendre recurrence; nodes accurate to ~1e-15.
GaussLegendreRule build_rule(int n) {
    if (n < 1)
        throw std::domain_error("gauss_legendre: order must be >= 1");
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);

    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15)
                break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

} // namespace

const GaussLegendreRule& gauss_legendre(int n) {
    static std::mutex mtx;
    static std::map<int, GaussLegendreRule> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, build_rule(n)).first;
    return it->second;
}

} // namespace stabledrift
