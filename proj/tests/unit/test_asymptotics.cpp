#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "stabledrift/asymptotics.hpp"
#include "stabledrift/quadrature.hpp"
#include "stabledrift/stable.hpp"

using namespace stabledrift;

TEST_CASE("ks_two_sample basics") {
    const std::vector<double> a{1.0, 2.0, 3.0};
    CHECK(ks_two_sample(a, a) == 0.0);

    const std::vector<double> one{0.0}, other{1.0};
    CHECK(ks_two_sample(one, other) == 1.0);

    CHECK_THROWS_AS(ks_two_sample(std::vector<double>{}, a),
                    std::invalid_argument);
}

TEST_CASE("ks_two_sample on matched gaussian samples stays small") {
    std::vector<double> a(10000), b(10000);
    RngStream rng(51, 0);
    // gaussian draws via the alpha = 2 sampler, rescaled to unit variance
    for (double& x : a)
        x = sample_standard_stable(2.0, 0.0, rng) / std::sqrt(2.0);
    for (double& x : b)
        x = sample_standard_stable(2.0, 0.0, rng) / std::sqrt(2.0);
    CHECK(ks_two_sample(a, b) < 0.039);
}

TEST_CASE("ks statistic is invariant under strictly increasing transforms") {
    RngStream rng(52, 0);
    std::vector<double> a(3000), b(3000);
    for (double& x : a)
        x = sample_standard_stable(1.5, 0.0, rng);
    for (double& x : b)
        x = sample_standard_stable(1.5, 0.3, rng);
    const double base = ks_two_sample(a, b);
    for (double& x : a)
        x = std::atan(x);
    for (double& x : b)
        x = std::atan(x);
    CHECK(ks_two_sample(a, b) == base);
}

TEST_CASE("ks critical value closed form") {
    // c(0.01) = 1.6276...; equal samples of 1e4 give ~= 0.0230
    CHECK(ks_critical_value(10000, 10000, 0.01) ==
          doctest::Approx(0.023018).epsilon(1e-4));
    CHECK_THROWS_AS(ks_critical_value(0, 10, 0.01), std::invalid_argument);
    CHECK_THROWS_AS(ks_critical_value(10, 10, 0.0), std::domain_error);
}

TEST_CASE("bias constant m vanishes in the symmetric cases") {
    const Kernel epan = make_kernel(1, KernelFamily::epanechnikov);
    // M_1 = 0 for a symmetric kernel, so k = 0 gives m = 0
    CHECK(bias_constant_m(sine_multiplier(1.0, 1.0), 1.0, epan, 0, 1.0) ==
          doctest::Approx(0.0).epsilon(1e-10));

    // theta = 0 makes J vanish identically
    const Kernel tilted = Kernel::custom(
        [](double u) { return 0.5 + 0.5 * u; }, -1.0, 1.0, 0, "tilted");
    CHECK(bias_constant_m(constant_multiplier(0.0), 1.0, tilted, 0, 0.7) == 0.0);

    // M_{k+1} = M_3 = 0 for the symmetric order-2 kernel
    const Kernel poly2 = make_kernel(2, KernelFamily::polynomial);
    CHECK(bias_constant_m(sine_multiplier(1.0, 1.0), 1.0, poly2, 2, 1.0) ==
          doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("bias constant m: closed form and finite differences agree") {
    // theta = c: J(t) = c e^{ct}, J'(t) = c^2 e^{ct}, m = c^2 e^{ct} M_1
    const double c = 0.8, t = 1.2;
    const Kernel tilted = Kernel::custom(
        [](double u) { return 0.5 + 0.5 * u; }, -1.0, 1.0, 0, "tilted");
    const double mu1 = tilted.moment(1);
    const double expected = c * c * std::exp(c * t) * mu1;
    const double m = bias_constant_m(constant_multiplier(c), 1.0, tilted, 0, t);
    CHECK(m == doctest::Approx(expected).epsilon(1e-10));

    // independent oracle: central finite difference of J(s) = theta(s) x_s
    const Multiplier sine = sine_multiplier(0.7, 1.3);
    auto J = [&](double s) {
        const double integral = adaptive_integrate(
            [&](double v) { return sine.eval(v); }, 0.0, s, 1e-13);
        return sine.eval(s) * std::exp(integral);
    };
    const double h = 1e-5;
    const double fd = (J(t + h) - J(t - h)) / (2.0 * h);
    const double m_sine = bias_constant_m(sine, 1.0, tilted, 0, t);
    CHECK(m_sine == doctest::Approx(fd * mu1).epsilon(1e-6));

    CHECK_THROWS_AS(bias_constant_m(rational_multiplier(1.0), 1.0, tilted, 3, t),
                    std::domain_error);
}

TEST_CASE("limit law samples: one-sided kernels reduce to a scaled stable") {
    const Kernel uni = make_kernel(1, KernelFamily::uniform);
    const LimitLawSpec spec = make_limit_law_spec(uni, 1.5, 0.0, 0.0);
    CHECK(spec.neg_weight == 0.0);
    // (int (1/2)^{1.5})^{1/1.5} = 2^{-1/3}
    CHECK(spec.pos_weight ==
          doctest::Approx(std::pow(2.0, -1.0 / 3.0)).epsilon(1e-9));

    RngStream rng(53, 0);
    const std::vector<double> draws = limit_law_sample(spec, 10000, rng);

    RngStream direct_rng(54, 0);
    std::vector<double> direct(10000);
    for (double& x : direct)
        x = spec.pos_weight * sample_standard_stable(1.5, 0.0, direct_rng);

    CHECK(ks_two_sample(draws, direct) < ks_critical_value(10000, 10000, 0.01));
}

TEST_CASE("limit law samples: symmetric spec has median near the shift") {
    LimitLawSpec spec;
    spec.pos_weight = 0.7;
    spec.neg_weight = 0.7;
    spec.alpha = 1.5;
    spec.beta = 0.0;
    spec.shift = 0.0;
    RngStream rng(55, 0);
    std::vector<double> draws = limit_law_sample(spec, 20000, rng);
    std::nth_element(draws.begin(), draws.begin() + 10000, draws.end());
    CHECK(std::abs(draws[10000]) < 0.05);

    spec.shift = 3.0;
    RngStream rng2(55, 0);
    std::vector<double> shifted = limit_law_sample(spec, 20000, rng2);
    std::nth_element(shifted.begin(), shifted.begin() + 10000, shifted.end());
    CHECK(std::abs(shifted[10000] - 3.0) < 0.05);
}

TEST_CASE("time-change representation matches the discretized integral") {
    const TimeGrid grid(2.0, 2000);
    const Kernel uni = make_kernel(1, KernelFamily::uniform);
    RngStream rng(56, 0);
    const KsReport report = time_change_check(uni, 0.1, 1.0, grid, 1.5, 0.0, 4000, rng);
    CHECK(report.statistic < report.threshold);

    // gaussian sanity case
    RngStream rng2(57, 0);
    const KsReport gauss = time_change_check(uni, 0.1, 1.0, grid, 2.0, 0.0, 4000, rng2);
    CHECK(gauss.pass);
}

TEST_CASE("time-change check with skew uses the two-copy representation") {
    const TimeGrid grid(2.0, 2000);
    const Kernel poly2 = make_kernel(2, KernelFamily::polynomial);
    RngStream rng(58, 0);
    const KsReport report =
        time_change_check(poly2, 0.1, 1.0, grid, 1.5, 0.4, 4000, rng);
    CHECK(report.statistic < report.threshold);
}

TEST_CASE("time-change check degenerates cleanly off the support") {
    const TimeGrid grid(2.0, 2000);
    const Kernel uni = make_kernel(1, KernelFamily::uniform);
    RngStream rng(59, 0);
    // t far outside [0, T] + phi support reach: both samples identically zero
    const KsReport report = time_change_check(uni, 0.1, 10.0, grid, 1.5, 0.0, 500, rng);
    CHECK(report.statistic == 0.0);
    CHECK(report.pass);
}
