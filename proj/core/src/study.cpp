#include "stabledrift/study.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "stabledrift/asymptotics.hpp"
#include "stabledrift/csv.hpp"
#include "stabledrift/estimators.hpp"
#include "stabledrift/parallel.hpp"
#include "stabledrift/quadrature.hpp"
#include "stabledrift/sde.hpp"

namespace stabledrift {

namespace {

// Stream-id layout: replicate rep of eps index e draws from stream
// e * n_reps + rep; reference samples (limit-law draws) live far above.
constexpr std::uint64_t kReferenceStreamBase = 1ull << 62;

std::uint64_t replicate_stream(std::size_t eps_index, std::size_t n_reps,
                               std::size_t rep) {
    return static_cast<std::uint64_t>(eps_index) * n_reps + rep;
}

double drift_truth(const Multiplier& m, double x0, double t) {
    const double integral =
        adaptive_integrate([&](double s) { return m.eval(s); }, 0.0, t, 1e-12);
    return m.eval(t) * x0 * std::exp(integral);
}

double median_of(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1)
        return values[n / 2];
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

double mean_of(const std::vector<double>& values) {
    double acc = 0.0;
    for (double v : values)
        acc += v;
    return acc / static_cast<double>(values.size());
}

std::string flag(bool b) { return b ? "1" : "0"; }

} // namespace

std::string study_kind_name(StudyKind kind) {
    switch (kind) {
    case StudyKind::consistency:
        return "consistency";
    case StudyKind::rate42:
        return "rate42";
    case StudyKind::dist43:
        return "dist43";
    case StudyKind::rate61:
        return "rate61";
    case StudyKind::gronwall:
        return "gronwall";
    }
    return "unknown";
}

double StudyConfig::bandwidth(double eps) const {
    if (bandwidth_override)
        return *bandwidth_override;
    switch (kind) {
    case StudyKind::rate42:
    case StudyKind::dist43:
        return bandwidth_thm42(eps, k, alpha);
    case StudyKind::rate61:
        return bandwidth_thm61(eps, alpha, rho);
    case StudyKind::consistency:
        return std::pow(eps, bandwidth_exponent);
    case StudyKind::gronwall:
        break;
    }
    throw std::logic_error("bandwidth: not defined for this study kind");
}

TimeGrid StudyConfig::build_grid() const {
    if (n_steps_override >= 2)
        return TimeGrid(horizon, n_steps_override);

    double phi_min = std::numeric_limits<double>::infinity();
    for (double eps : eps_list)
        if (eps > 0.0)
            phi_min = std::min(phi_min, bandwidth(eps));
    if (bandwidth_override)
        phi_min = std::min(phi_min, *bandwidth_override);
    if (!std::isfinite(phi_min))
        throw ConfigError("cannot size the grid: no positive bandwidth available");

    const double window =
        (kernel.support_b() - kernel.support_a()) * phi_min;
    const double n = std::ceil(horizon * static_cast<double>(points_per_window) /
                               window);
    return TimeGrid(horizon, std::max<std::size_t>(static_cast<std::size_t>(n), 2));
}

void StudyConfig::validate() const {
    if (!multiplier.eval)
        throw ConfigError("study: multiplier not set");
    if (!(horizon > 0.0))
        throw ConfigError("study: horizon must be positive");
    if (!(alpha > 1.0) || alpha > 2.0)
        throw ConfigError("study: alpha must be in (1, 2]");
    if (beta < -1.0 || beta > 1.0)
        throw ConfigError("study: beta must be in [-1, 1]");
    if (n_reps < 100)
        throw ConfigError("study: n_reps must be >= 100");
    if (eps_list.empty())
        throw ConfigError("study: eps_list is empty");
    for (std::size_t i = 0; i + 1 < eps_list.size(); ++i)
        if (!(eps_list[i + 1] < eps_list[i]))
            throw ConfigError("study: eps_list must be strictly decreasing");
    if (points_per_window < 2)
        throw ConfigError("study: points_per_window must be >= 2");

    const bool degenerate_single =
        kind == StudyKind::consistency && eps_list.size() == 1;
    for (double eps : eps_list) {
        if (eps < 0.0)
            throw ConfigError("study: eps must be >= 0");
        if (eps == 0.0 && !(degenerate_single && bandwidth_override))
            throw ConfigError(
                "study: eps = 0 is only allowed as a single consistency entry "
                "with an explicit bandwidth");
    }

    switch (kind) {
    case StudyKind::rate42:
    case StudyKind::rate61:
        if (eps_list.size() < 4)
            throw ConfigError("study: rate studies cannot fit a slope on fewer "
                              "than 4 eps values");
        if (!(slope_tolerance > 0.0))
            throw ConfigError("study: slope_tolerance must be positive");
        break;
    case StudyKind::consistency:
        if (!bandwidth_override &&
            !(bandwidth_exponent > 0.0 && bandwidth_exponent < 1.0))
            throw ConfigError(
                "consistency study: bandwidth exponent q must satisfy 0 < q < 1 "
                "(phi_eps -> 0 and eps/phi_eps -> 0)");
        if (bandwidth_override && eps_list.size() > 1)
            throw ConfigError(
                "consistency study: a fixed bandwidth defeats phi_eps -> 0; "
                "only the degenerate single-eps study may pin it");
        break;
    case StudyKind::dist43:
        if (!(ks_threshold > 0.0))
            throw ConfigError("dist43 study: ks_threshold must be positive");
        break;
    case StudyKind::gronwall:
        if (eps_list.size() != 1 || !(eps_list[0] > 0.0))
            throw ConfigError("gronwall study: exactly one positive eps required");
        if (n_steps_override < 2)
            throw ConfigError("gronwall study: n_steps must be >= 2");
        break;
    }

    if (kind == StudyKind::rate61 && !(x0 > 0.0))
        throw ConfigError("rate61 study: x0 must be positive");
    if (kind != StudyKind::gronwall && x0 == 0.0)
        throw ConfigError("study: x0 must be nonzero");

    if (kind != StudyKind::gronwall) {
        if (t_eval.empty())
            throw ConfigError("study: t_eval is empty");
        const double slack = 1e-12 * (1.0 + horizon);
        for (double t : t_eval) {
            if (t < 0.0 || t > horizon)
                throw ConfigError("study: t_eval entry outside [0, T]");
            for (double eps : eps_list) {
                if (eps == 0.0 && !bandwidth_override)
                    continue;
                const double phi = bandwidth(eps);
                double lo, hi;
                if (kind == StudyKind::rate61) {
                    lo = t - kernel.support_b() * phi;
                    hi = t - kernel.support_a() * phi;
                } else {
                    lo = t + kernel.support_a() * phi;
                    hi = t + kernel.support_b() * phi;
                }
                if (lo < -slack || hi > horizon + slack)
                    throw ConfigError(
                        "study: kernel window at t = " + std::to_string(t) +
                        ", eps = " + std::to_string(eps) + " leaves [0, T]");
            }
        }
    }
}

Multiplier multiplier_from_config(const ConfigMap& cfg) {
    const std::string type = cfg.get_string("multiplier");
    Multiplier m;
    if (type == "constant") {
        m = constant_multiplier(cfg.get_double("mult_a", 1.0));
    } else if (type == "sin") {
        m = sine_multiplier(cfg.get_double("mult_a", 1.0),
                            cfg.get_double("mult_b", 1.0));
    } else if (type == "rational") {
        m = rational_multiplier(cfg.get_double("mult_a", 1.0));
    } else {
        throw ConfigError("unknown multiplier type: " + type);
    }
    if (cfg.has("mult_bound"))
        m.bound = cfg.get_double("mult_bound");
    return m;
}

Kernel kernel_from_config(const ConfigMap& cfg) {
    const std::string family = cfg.get_string("kernel", "epanechnikov");
    const KernelFamily fam = kernel_family_from_name(family);
    long long dflt = (fam == KernelFamily::polynomial) ? 2 : 1;
    const long long order = cfg.get_int("kernel_order", dflt);
    if (order < 0)
        throw ConfigError("kernel_order must be >= 0");
    return make_kernel(static_cast<int>(order), fam);
}

StudyConfig build_study_config(const ConfigMap& cfg, StudyKind kind) {
    StudyConfig sc;
    sc.kind = kind;
    sc.multiplier = multiplier_from_config(cfg);
    sc.x0 = cfg.get_double("x0", 1.0);
    sc.alpha = cfg.get_double("alpha", 1.5);
    sc.beta = cfg.get_double("beta", 0.0);
    sc.kernel = kernel_from_config(cfg);
    sc.k = static_cast<int>(cfg.get_int("k", 0));
    sc.rho = cfg.get_double("rho", 2.0);
    sc.horizon = cfg.get_double("horizon", 2.0);
    sc.n_reps = static_cast<std::size_t>(
        cfg.get_int("n_reps", kind == StudyKind::dist43 ? 5000 : 1000));
    sc.points_per_window =
        static_cast<std::size_t>(cfg.get_int("points_per_window", 200));
    sc.seed = cfg.get_u64("seed", 0);
    sc.bandwidth_exponent = cfg.get_double("bandwidth_exponent", 0.5);
    if (cfg.has("bandwidth"))
        sc.bandwidth_override = cfg.get_double("bandwidth");
    sc.slope_tolerance = cfg.get_double(
        "slope_tolerance", kind == StudyKind::rate61 ? 0.2 : 0.15);
    sc.ks_threshold = cfg.get_double("ks_threshold", 0.05);

    if (kind == StudyKind::gronwall) {
        sc.eps_list = {cfg.get_double("eps")};
        sc.n_steps_override =
            static_cast<std::size_t>(cfg.get_int("n_steps", 8000));
    } else {
        sc.eps_list = cfg.get_double_list("eps_list");
        sc.n_steps_override =
            static_cast<std::size_t>(cfg.get_int("n_steps", 0));
    }

    if (cfg.has("t_eval")) {
        sc.t_eval = cfg.get_double_list("t_eval");
    } else if (kind == StudyKind::dist43) {
        sc.t_eval = {cfg.get_double("t", 0.5 * sc.horizon)};
    } else if (kind != StudyKind::gronwall) {
        std::vector<double> band{0.2, 0.8};
        if (cfg.has("t_band")) {
            band = cfg.get_double_list("t_band");
            if (band.size() != 2 || !(band[0] < band[1]) || band[0] < 0.0 ||
                band[1] > 1.0)
                throw ConfigError("t_band must be two increasing fractions of T");
        }
        const long long n_t = cfg.get_int("n_t_eval", 9);
        if (n_t < 1)
            throw ConfigError("n_t_eval must be >= 1");
        for (long long i = 0; i < n_t; ++i) {
            const double frac =
                (n_t == 1) ? 0.5 * (band[0] + band[1])
                           : band[0] + (band[1] - band[0]) * i / (n_t - 1.0);
            sc.t_eval.push_back(sc.horizon * frac);
        }
    }

    const double observed = observed_bound(sc.multiplier, sc.horizon);
    if (observed > sc.multiplier.bound * (1.0 + 1e-9))
        std::fprintf(stderr,
                     "warning: multiplier '%s' exceeds its declared bound on "
                     "[0, %g] (observed %.6g > L = %.6g)\n",
                     sc.multiplier.name.c_str(), sc.horizon, observed,
                     sc.multiplier.bound);

    sc.validate();
    return sc;
}

SlopeFit fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("fit_slope: need >= 2 matched points");
    const double n = static_cast<double>(x.size());
    double xbar = 0.0, ybar = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        xbar += x[i];
        ybar += y[i];
    }
    xbar /= n;
    ybar /= n;

    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - xbar) * (x[i] - xbar);
        sxy += (x[i] - xbar) * (y[i] - ybar);
    }
    if (sxx == 0.0)
        throw std::invalid_argument("fit_slope: degenerate abscissae");

    SlopeFit fit;
    fit.slope = sxy / sxx;
    if (x.size() > 2) {
        double rss = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double r = y[i] - ybar - fit.slope * (x[i] - xbar);
            rss += r * r;
        }
        fit.stderr_ = std::sqrt(rss / (n - 2.0) / sxx);
    }
    return fit;
}

namespace {

// Shared per-eps replicate loop for the estimator studies. Returns the
// per-replicate sup-over-t errors (and the A^c indicator for rate61).
struct ReplicateErrors {
    std::vector<double> errors;
    std::vector<char> a_complement;
};

ReplicateErrors run_replicates(const StudyConfig& cfg, const TimeGrid& grid,
                               std::size_t eps_index, double eps, double phi,
                               const std::vector<double>& truth,
                               unsigned threads) {
    ReplicateErrors out;
    out.errors.assign(cfg.n_reps, 0.0);
    out.a_complement.assign(cfg.n_reps, 0);

    const bool multiplier_study = cfg.kind == StudyKind::rate61;

    parallel_for(cfg.n_reps, threads, [&](std::size_t rep) {
        RngStream rng(cfg.seed, replicate_stream(eps_index, cfg.n_reps, rep));
        SdeConfig sde{cfg.multiplier, cfg.x0, eps, cfg.alpha, cfg.beta, grid};
        const SdePaths paths = simulate_sde(sde, rng);

        double err = 0.0;
        if (multiplier_study) {
            const YPath yp = build_y_path(paths.x, cfg.x0, cfg.multiplier.bound);
            out.a_complement[rep] = yp.a_holds ? 0 : 1;
            for (std::size_t ti = 0; ti < cfg.t_eval.size(); ++ti) {
                const MultiplierEstimate est =
                    estimate_multiplier(yp.y, yp.a_holds, cfg.kernel, phi,
                                        cfg.t_eval[ti], cfg.points_per_window);
                err = std::max(err, std::abs(est.value - truth[ti]));
            }
        } else {
            for (std::size_t ti = 0; ti < cfg.t_eval.size(); ++ti) {
                const DriftEstimate est =
                    estimate_drift(paths.x, cfg.kernel, phi, cfg.t_eval[ti],
                                   cfg.points_per_window);
                err = std::max(err, std::abs(est.value - truth[ti]));
            }
        }
        out.errors[rep] = err;
    });

    return out;
}

std::vector<double> truth_values(const StudyConfig& cfg) {
    std::vector<double> truth(cfg.t_eval.size());
    for (std::size_t i = 0; i < cfg.t_eval.size(); ++i) {
        truth[i] = (cfg.kind == StudyKind::rate61)
                       ? cfg.multiplier.eval(cfg.t_eval[i])
                       : drift_truth(cfg.multiplier, cfg.x0, cfg.t_eval[i]);
    }
    return truth;
}

} // namespace

RateStudyResult run_rate_study(const StudyConfig& cfg) {
    cfg.validate();
    if (cfg.kind != StudyKind::rate42 && cfg.kind != StudyKind::rate61)
        throw ConfigError("run_rate_study: study kind must be rate42 or rate61");

    const TimeGrid grid = cfg.build_grid();
    const unsigned threads = worker_count_from_env(cfg.n_threads);
    const std::vector<double> truth = truth_values(cfg);

    RateStudyResult result;
    std::vector<double> log_eps, log_median;
    for (std::size_t e = 0; e < cfg.eps_list.size(); ++e) {
        const double eps = cfg.eps_list[e];
        const double phi = cfg.bandwidth(eps);
        const ReplicateErrors reps =
            run_replicates(cfg, grid, e, eps, phi, truth, threads);

        EpsStats stats;
        stats.eps = eps;
        stats.bandwidth = phi;
        stats.median_abs_error = median_of(reps.errors);
        stats.mean_abs_error = mean_of(reps.errors);
        stats.n_reps = cfg.n_reps;
        double acc = 0.0;
        for (char c : reps.a_complement)
            acc += c;
        stats.a_complement_freq = acc / static_cast<double>(cfg.n_reps);
        result.per_eps.push_back(stats);

        log_eps.push_back(std::log(eps));
        log_median.push_back(std::log(stats.median_abs_error));
    }

    const SlopeFit fit = fit_slope(log_eps, log_median);
    result.slope = fit.slope;
    result.slope_stderr = fit.stderr_;
    result.target_exponent = (cfg.kind == StudyKind::rate61)
                                 ? rate_exponent_thm61(cfg.alpha, cfg.rho)
                                 : rate_exponent_thm42(cfg.k, cfg.alpha);
    result.tolerance = cfg.slope_tolerance;
    result.pass = std::abs(result.slope - result.target_exponent) <= result.tolerance;
    return result;
}

ConsistencyResult run_consistency_study(const StudyConfig& cfg) {
    cfg.validate();
    if (cfg.kind != StudyKind::consistency)
        throw ConfigError("run_consistency_study: study kind must be consistency");

    const TimeGrid grid = cfg.build_grid();
    const unsigned threads = worker_count_from_env(cfg.n_threads);
    const std::vector<double> truth = truth_values(cfg);

    ConsistencyResult result;
    for (std::size_t e = 0; e < cfg.eps_list.size(); ++e) {
        const double eps = cfg.eps_list[e];
        const double phi = cfg.bandwidth(eps);
        const ReplicateErrors reps =
            run_replicates(cfg, grid, e, eps, phi, truth, threads);

        EpsStats stats;
        stats.eps = eps;
        stats.bandwidth = phi;
        stats.median_abs_error = median_of(reps.errors);
        stats.mean_abs_error = mean_of(reps.errors);
        stats.n_reps = cfg.n_reps;
        result.per_eps.push_back(stats);
    }

    result.has_verdict = result.per_eps.size() >= 2;
    if (result.has_verdict) {
        for (std::size_t i = 0; i + 1 < result.per_eps.size(); ++i) {
            const double prev = result.per_eps[i].mean_abs_error;
            const double next = result.per_eps[i + 1].mean_abs_error;
            if (next > prev) {
                ++result.inversions;
                result.max_inversion =
                    std::max(result.max_inversion, (next - prev) / prev);
            }
        }
        result.pass = result.inversions <= 1 && result.max_inversion <= 0.10;
    } else {
        result.pass = true;
    }
    return result;
}

DistCheckResult run_dist_check(const StudyConfig& cfg) {
    cfg.validate();
    if (cfg.kind != StudyKind::dist43)
        throw ConfigError("run_dist_check: study kind must be dist43");

    const TimeGrid grid = cfg.build_grid();
    const unsigned threads = worker_count_from_env(cfg.n_threads);
    const double t0 = cfg.t_eval.front();
    const double truth = drift_truth(cfg.multiplier, cfg.x0, t0);

    DistCheckResult result;
    result.shift_m = bias_constant_m(cfg.multiplier, cfg.x0, cfg.kernel, cfg.k, t0);
    const LimitLawSpec law =
        make_limit_law_spec(cfg.kernel, cfg.alpha, cfg.beta, result.shift_m);
    result.pos_weight = law.pos_weight;
    result.neg_weight = law.neg_weight;

    result.decreasing = true;
    double prev_ks = std::numeric_limits<double>::infinity();
    for (std::size_t e = 0; e < cfg.eps_list.size(); ++e) {
        const double eps = cfg.eps_list[e];
        const double phi = cfg.bandwidth(eps);
        const double norm = std::pow(phi, -(cfg.k + 1.0));

        std::vector<double> normalized(cfg.n_reps);
        parallel_for(cfg.n_reps, threads, [&](std::size_t rep) {
            RngStream rng(cfg.seed, replicate_stream(e, cfg.n_reps, rep));
            SdeConfig sde{cfg.multiplier, cfg.x0, eps, cfg.alpha, cfg.beta, grid};
            const SdePaths paths = simulate_sde(sde, rng);
            const DriftEstimate est = estimate_drift(
                paths.x, cfg.kernel, phi, t0, cfg.points_per_window);
            normalized[rep] = (est.value - truth) * norm;
        });

        RngStream law_rng(cfg.seed, kReferenceStreamBase + e);
        const std::vector<double> reference =
            limit_law_sample(law, cfg.n_reps, law_rng);

        DistCheckRow row;
        row.eps = eps;
        row.bandwidth = phi;
        row.ks_statistic = ks_two_sample(normalized, reference);
        row.pass = row.ks_statistic < cfg.ks_threshold;
        result.rows.push_back(row);

        if (row.ks_statistic >= prev_ks)
            result.decreasing = false;
        prev_ks = row.ks_statistic;
    }

    result.pass = result.decreasing && result.rows.back().pass;
    return result;
}

GronwallStudyResult run_gronwall_study(const StudyConfig& cfg) {
    cfg.validate();
    if (cfg.kind != StudyKind::gronwall)
        throw ConfigError("run_gronwall_study: study kind must be gronwall");

    const TimeGrid grid = cfg.build_grid();
    const unsigned threads = worker_count_from_env(cfg.n_threads);
    const double eps = cfg.eps_list.front();
    const SamplePath x_det = deterministic_solution(cfg.multiplier, cfg.x0, grid);

    GronwallStudyResult result;
    result.worst_margin.assign(cfg.n_reps, 0.0);
    std::vector<char> holds(cfg.n_reps, 0);

    parallel_for(cfg.n_reps, threads, [&](std::size_t rep) {
        RngStream rng(cfg.seed, rep);
        SdeConfig sde{cfg.multiplier, cfg.x0, eps, cfg.alpha, cfg.beta, grid};
        const SdePaths paths = simulate_sde(sde, rng);
        const GronwallReport report = gronwall_check(
            paths.x, x_det, paths.z, cfg.multiplier.bound, eps);
        result.worst_margin[rep] = report.worst_margin;
        holds[rep] = report.holds ? 1 : 0;
    });

    result.holds.assign(cfg.n_reps, false);
    for (std::size_t i = 0; i < cfg.n_reps; ++i) {
        result.holds[i] = holds[i] != 0;
        if (!holds[i])
            ++result.n_failed;
    }
    result.pass = result.n_failed == 0;
    return result;
}

namespace {

void study_comment(CsvBuilder& csv, const StudyConfig& cfg) {
    csv.comment("study=" + study_kind_name(cfg.kind) +
                " multiplier=" + cfg.multiplier.name +
                " kernel=" + cfg.kernel.name() +
                " order=" + std::to_string(cfg.kernel.order()) +
                " alpha=" + format_double(cfg.alpha) +
                " beta=" + format_double(cfg.beta) +
                " seed=" + std::to_string(cfg.seed));
}

} // namespace

std::string rate_study_csv(const StudyConfig& cfg, const RateStudyResult& result) {
    CsvBuilder csv;
    study_comment(csv, cfg);
    csv.header({"row", "eps", "bandwidth", "median_abs_error", "mean_abs_error",
                "a_complement_freq", "n_reps", "slope", "slope_stderr",
                "target_exponent", "tolerance", "pass"});
    for (const EpsStats& s : result.per_eps)
        csv.row({"eps", format_double(s.eps), format_double(s.bandwidth),
                 format_double(s.median_abs_error), format_double(s.mean_abs_error),
                 format_double(s.a_complement_freq), std::to_string(s.n_reps), "",
                 "", "", "", ""});
    csv.row({"summary", "", "", "", "", "", "", format_double(result.slope),
             format_double(result.slope_stderr),
             format_double(result.target_exponent), format_double(result.tolerance),
             flag(result.pass)});
    return csv.str();
}

std::string consistency_csv(const StudyConfig& cfg, const ConsistencyResult& result) {
    CsvBuilder csv;
    study_comment(csv, cfg);
    csv.header({"row", "eps", "bandwidth", "mean_abs_error", "median_abs_error",
                "n_reps", "inversions", "max_inversion", "pass"});
    for (const EpsStats& s : result.per_eps)
        csv.row({"eps", format_double(s.eps), format_double(s.bandwidth),
                 format_double(s.mean_abs_error), format_double(s.median_abs_error),
                 std::to_string(s.n_reps), "", "", ""});
    csv.row({"summary", "", "", "", "", "", std::to_string(result.inversions),
             format_double(result.max_inversion),
             result.has_verdict ? flag(result.pass) : ""});
    return csv.str();
}

std::string dist_check_csv(const StudyConfig& cfg, const DistCheckResult& result) {
    CsvBuilder csv;
    study_comment(csv, cfg);
    csv.comment("shift_m=" + format_double(result.shift_m) +
                " pos_weight=" + format_double(result.pos_weight) +
                " neg_weight=" + format_double(result.neg_weight));
    csv.header({"row", "eps", "bandwidth", "ks_statistic", "threshold",
                "n_reps", "decreasing", "pass"});
    for (const DistCheckRow& r : result.rows)
        csv.row({"eps", format_double(r.eps), format_double(r.bandwidth),
                 format_double(r.ks_statistic), format_double(cfg.ks_threshold),
                 std::to_string(cfg.n_reps), "", flag(r.pass)});
    csv.row({"summary", "", "", "", "", "", flag(result.decreasing),
             flag(result.pass)});
    return csv.str();
}

std::string gronwall_csv(const StudyConfig& cfg, const GronwallStudyResult& result) {
    CsvBuilder csv;
    study_comment(csv, cfg);
    csv.header({"row", "replicate", "worst_margin", "holds", "n_failed", "pass"});
    for (std::size_t i = 0; i < result.worst_margin.size(); ++i)
        csv.row({"rep", std::to_string(i), format_double(result.worst_margin[i]),
                 flag(result.holds[i]), "", ""});
    csv.row({"summary", "", "", "", std::to_string(result.n_failed),
             flag(result.pass)});
    return csv.str();
}

} // namespace stabledrift
