#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stabledrift/config.hpp"
#include "stabledrift/grid.hpp"
#include "stabledrift/kernel.hpp"
#include "stabledrift/multiplier.hpp"

namespace stabledrift {

enum class StudyKind { consistency, rate42, dist43, rate61, gronwall };

std::string study_kind_name(StudyKind kind);

// Monte-Carlo experiment description. Build either in code or from a flat
// config file via build_study_config; validate() pins the hypotheses of the
// asymptotic claim being exercised before anything is simulated.
struct StudyConfig {
    StudyKind kind = StudyKind::rate42;

    Multiplier multiplier;
    double x0 = 1.0;
    double alpha = 1.5;
    double beta = 0.0;

    Kernel kernel = make_kernel(1, KernelFamily::epanechnikov);
    int k = 0;        // smoothness index for the drift-product studies
    double rho = 2.0; // Holder order for the multiplier study

    std::vector<double> eps_list; // strictly decreasing
    std::size_t n_reps = 1000;
    double horizon = 2.0;
    std::vector<double> t_eval;

    double bandwidth_exponent = 0.5;        // consistency: phi = eps^q
    std::optional<double> bandwidth_override; // fixed phi (required if eps = 0)
    std::size_t points_per_window = 200;
    std::size_t n_steps_override = 0; // gronwall / explicit grids

    double slope_tolerance = 0.15; // rate42 default; rate61 default is 0.2
    double ks_threshold = 0.05;    // dist43 final-eps bound

    std::uint64_t seed = 0;
    unsigned n_threads = 0; // 0 = STABLEDRIFT_THREADS or hardware

    void validate() const;

    // Bandwidth for a given eps under this study's rule.
    double bandwidth(double eps) const;

    // Grid satisfying the resolution rule for the smallest bandwidth in play.
    TimeGrid build_grid() const;
};

// Fills kind-dependent defaults and the t_eval band (9 equispaced points of
// [0.2T, 0.8T] unless the config overrides the band or the list).
StudyConfig build_study_config(const ConfigMap& cfg, StudyKind kind);

Multiplier multiplier_from_config(const ConfigMap& cfg);
Kernel kernel_from_config(const ConfigMap& cfg);

struct EpsStats {
    double eps = 0.0;
    double bandwidth = 0.0;
    double median_abs_error = 0.0;
    double mean_abs_error = 0.0;
    double a_complement_freq = 0.0; // multiplier studies only
    std::size_t n_reps = 0;
};

struct RateStudyResult {
    std::vector<EpsStats> per_eps;
    double slope = 0.0;
    double slope_stderr = 0.0;
    double target_exponent = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

// For each eps: n_reps replicates, per-replicate error = sup over t_eval of
// the absolute estimation error, aggregated by median (slope fit) and mean
// (reported). Fits OLS of log(median error) on log(eps).
RateStudyResult run_rate_study(const StudyConfig& cfg);

struct ConsistencyResult {
    std::vector<EpsStats> per_eps;
    std::size_t inversions = 0;
    double max_inversion = 0.0; // relative size of the worst increase
    bool has_verdict = false;   // needs at least two eps entries
    bool pass = false;          // <= 1 inversion of <= 10 %
};

ConsistencyResult run_consistency_study(const StudyConfig& cfg);

struct DistCheckRow {
    double eps = 0.0;
    double bandwidth = 0.0;
    double ks_statistic = 0.0;
    bool pass = false; // ks below the configured threshold
};

struct DistCheckResult {
    std::vector<DistCheckRow> rows;
    double shift_m = 0.0;
    double pos_weight = 0.0;
    double neg_weight = 0.0;
    bool decreasing = false;
    bool pass = false; // decreasing and final ks below threshold
};

DistCheckResult run_dist_check(const StudyConfig& cfg);

struct GronwallStudyResult {
    std::vector<double> worst_margin; // per replicate
    std::vector<bool> holds;
    std::size_t n_failed = 0;
    bool pass = false;
};

GronwallStudyResult run_gronwall_study(const StudyConfig& cfg);

// Least-squares slope of y on x with its standard error.
struct SlopeFit {
    double slope = 0.0;
    double stderr_ = 0.0;
};
SlopeFit fit_slope(const std::vector<double>& x, const std::vector<double>& y);

// CSV renderings (deterministic; used verbatim by the CLI).
std::string rate_study_csv(const StudyConfig& cfg, const RateStudyResult& result);
std::string consistency_csv(const StudyConfig& cfg, const ConsistencyResult& result);
std::string dist_check_csv(const StudyConfig& cfg, const DistCheckResult& result);
std::string gronwall_csv(const StudyConfig& cfg, const GronwallStudyResult& result);

} // namespace stabledrift
