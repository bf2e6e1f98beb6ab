#include "stabledrift/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "stabledrift/quadrature.hpp"
#include "stabledrift/stable.hpp"

namespace stabledrift {

namespace {

double binomial(int n, int k) {
    double acc = 1.0;
    for (int i = 1; i <= k; ++i)
        acc = acc * (n - k + i) / i;
    return acc;
}

} // namespace

LimitLawSpec make_limit_law_spec(const Kernel& g, double alpha, double beta,
                                 double shift) {
    const AlphaIntegrals ints = g.alpha_integrals(alpha);
    LimitLawSpec spec;
    spec.pos_weight = std::pow(ints.pos, 1.0 / alpha);
    spec.neg_weight = ints.neg > 0.0 ? std::pow(ints.neg, 1.0 / alpha) : 0.0;
    spec.shift = shift;
    spec.alpha = alpha;
    spec.beta = beta;
    return spec;
}

double bias_constant_m(const Multiplier& multiplier, double x0, const Kernel& g,
                       int k, double t) {
    if (k < 0)
        throw std::domain_error("bias_constant_m: k must be >= 0");
    if (multiplier.max_derivative_order < k + 1)
        throw std::domain_error("bias_constant_m: multiplier '" + multiplier.name +
                                "' lacks derivatives up to order " +
                                std::to_string(k + 1));

    // theta derivatives at t, orders 0..k+1
    std::vector<double> th(static_cast<std::size_t>(k) + 2);
    for (int j = 0; j <= k + 1; ++j)
        th[static_cast<std::size_t>(j)] = multiplier.derivative(t, j);

    // x_t from the closed form, then x^{(j+1)} = sum_i C(j,i) theta^{(i)} x^{(j-i)}
    const double integral = adaptive_integrate(
        [&](double s) { return multiplier.eval(s); }, 0.0, t, 1e-12);
    std::vector<double> xd(static_cast<std::size_t>(k) + 2);
    xd[0] = x0 * std::exp(integral);
    for (int j = 0; j <= k; ++j) {
        double acc = 0.0;
        for (int i = 0; i <= j; ++i)
            acc += binomial(j, i) * th[static_cast<std::size_t>(i)] *
                   xd[static_cast<std::size_t>(j - i)];
        xd[static_cast<std::size_t>(j + 1)] = acc;
    }

    // J = theta x, so J^{(k+1)} = sum_i C(k+1,i) theta^{(i)} x^{(k+1-i)}
    double j_deriv = 0.0;
    for (int i = 0; i <= k + 1; ++i)
        j_deriv += binomial(k + 1, i) * th[static_cast<std::size_t>(i)] *
                   xd[static_cast<std::size_t>(k + 1 - i)];

    double factorial = 1.0;
    for (int i = 2; i <= k + 1; ++i)
        factorial *= i;

    return j_deriv / factorial * g.moment(k + 1);
}

std::vector<double> limit_law_sample(const LimitLawSpec& spec, std::size_t n,
                                     RngStream& rng) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double u1 = sample_standard_stable(spec.alpha, spec.beta, rng);
        const double u2 = sample_standard_stable(spec.alpha, spec.beta, rng);
        out[i] = spec.pos_weight * u1 - spec.neg_weight * u2 + spec.shift;
    }
    return out;
}

double ks_two_sample(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("ks_two_sample: empty sample");

    std::vector<double> sa(a.begin(), a.end());
    std::vector<double> sb(b.begin(), b.end());
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());

    const double na = static_cast<double>(sa.size());
    const double nb = static_cast<double>(sb.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < sa.size() && j < sb.size()) {
        const double x = std::min(sa[i], sb[j]);
        while (i < sa.size() && sa[i] == x)
            ++i;
        while (j < sb.size() && sb[j] == x)
            ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na -
                                 static_cast<double>(j) / nb));
    }
    return d;
}

double ks_critical_value(std::size_t n_a, std::size_t n_b, double level) {
    if (n_a == 0 || n_b == 0)
        throw std::invalid_argument("ks_critical_value: empty sample");
    if (!(level > 0.0) || !(level < 1.0))
        throw std::domain_error("ks_critical_value: level must be in (0, 1)");
    const double c = std::sqrt(-0.5 * std::log(level / 2.0));
    const double na = static_cast<double>(n_a);
    const double nb = static_cast<double>(n_b);
    return c * std::sqrt((na + nb) / (na * nb));
}

KsReport time_change_check(const Kernel& g, double phi, double t,
                           const TimeGrid& grid, double alpha, double beta,
                           std::size_t n_reps, RngStream& rng) {
    if (!(phi > 0.0))
        throw std::domain_error("time_change_check: phi must be positive");
    if (n_reps == 0)
        throw std::invalid_argument("time_change_check: n_reps must be positive");

    // discretized stochastic integral, one draw per replicate
    std::vector<double> integral_samples(n_reps);
    for (std::size_t rep = 0; rep < n_reps; ++rep) {
        const SamplePath z = simulate_levy_path(alpha, beta, grid, rng);
        double sum = 0.0;
        for (std::size_t i = 0; i < grid.n_steps; ++i) {
            const double w = g((grid.time(i) - t) / phi);
            if (w != 0.0)
                sum += w * (z.values[i + 1] - z.values[i]);
        }
        integral_samples[rep] = sum;
    }

    // time-changed representation with the part integrals clipped to the part
    // of the window inside [0, T]
    const double u_lo = (0.0 - t) / phi;
    const double u_hi = (grid.horizon - t) / phi;
    const AlphaIntegrals ints = g.alpha_integrals_clipped(alpha, u_lo, u_hi);
    const double scale = std::pow(phi, 1.0 / alpha);
    const double pos_w = ints.pos > 0.0 ? std::pow(ints.pos, 1.0 / alpha) : 0.0;
    const double neg_w = ints.neg > 0.0 ? std::pow(ints.neg, 1.0 / alpha) : 0.0;
    const double abs_w = ints.abs > 0.0 ? std::pow(ints.abs, 1.0 / alpha) : 0.0;

    std::vector<double> representation_samples(n_reps);
    for (std::size_t rep = 0; rep < n_reps; ++rep) {
        if (beta == 0.0) {
            // symmetric case: a single copy with the |G|^alpha clock
            representation_samples[rep] =
                scale * abs_w * sample_standard_stable(alpha, beta, rng);
        } else {
            const double u1 = sample_standard_stable(alpha, beta, rng);
            const double u2 = sample_standard_stable(alpha, beta, rng);
            representation_samples[rep] = scale * (pos_w * u1 - neg_w * u2);
        }
    }

    KsReport report;
    report.n_a = n_reps;
    report.n_b = n_reps;
    report.statistic = ks_two_sample(integral_samples, representation_samples);
    report.threshold = ks_critical_value(n_reps, n_reps, 0.01);
    report.pass = report.statistic < report.threshold;
    return report;
}

} // namespace stabledrift
