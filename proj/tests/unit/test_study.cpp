#include <doctest.h>

#include <cmath>
#include <string>

#include "stabledrift/csv.hpp"
#include "stabledrift/study.hpp"

using namespace stabledrift;

namespace {

const std::string kRateSmoke = R"(
study = rate42
multiplier = sin
mult_a = 1.0
mult_b = 1.0
x0 = 1.0
alpha = 1.5
beta = 0.0
kernel = epanechnikov
kernel_order = 1
k = 0
horizon = 2.0
eps_list = 0.2, 0.15, 0.1, 0.075
n_reps = 100
points_per_window = 200
seed = 11
)";

StudyConfig smoke_config(StudyKind kind, const std::string& extra = "") {
    return build_study_config(ConfigMap::parse_string(kRateSmoke + extra), kind);
}

} // namespace

TEST_CASE("config parser round trip and errors") {
    const ConfigMap cfg = ConfigMap::parse_string(
        "a = 1.5\n# comment\n  b=  hello  \nlist = 1, 2,3\nn = 42\n");
    CHECK(cfg.get_double("a") == 1.5);
    CHECK(cfg.get_string("b") == "hello");
    CHECK(cfg.get_int("n") == 42);
    const auto list = cfg.get_double_list("list");
    CHECK(list.size() == 3);
    CHECK(list[2] == 3.0);
    CHECK(cfg.get_double("absent", 7.0) == 7.0);

    CHECK_THROWS_WITH_AS(cfg.get_string("missing_thing"),
                         "missing config key: missing_thing", ConfigError);
    CHECK_THROWS_AS(ConfigMap::parse_string("just a line\n"), ConfigError);
    CHECK_THROWS_AS(cfg.get_double("b"), ConfigError);
}

TEST_CASE("study config validation rejects bad setups") {
    // eps list must be strictly decreasing
    CHECK_THROWS_AS(smoke_config(StudyKind::rate42, "eps_list = 0.2, 0.2, 0.1, 0.05\n"),
                    ConfigError);
    // a slope needs at least 4 eps values
    CHECK_THROWS_AS(smoke_config(StudyKind::rate42, "eps_list = 0.1\n"), ConfigError);
    // replicate floor
    CHECK_THROWS_AS(smoke_config(StudyKind::rate42, "n_reps = 50\n"), ConfigError);
    // consistency: q = 1 violates eps/phi_eps -> 0
    CHECK_THROWS_AS(smoke_config(StudyKind::consistency, "bandwidth_exponent = 1.0\n"),
                    ConfigError);
    CHECK_THROWS_AS(smoke_config(StudyKind::consistency, "bandwidth_exponent = 0.0\n"),
                    ConfigError);
    // windows must stay inside [0, T]: q = 0.55 puts phi(0.2) past t = 0.4
    CHECK_THROWS_AS(smoke_config(StudyKind::consistency,
                                 "bandwidth_exponent = 0.55\nt_band = 0.2, 0.8\n"),
                    ConfigError);
    // unknown multiplier
    CHECK_THROWS_AS(smoke_config(StudyKind::rate42, "multiplier = quadratic\n"),
                    ConfigError);
}

TEST_CASE("grid resolution rule sizes the step from the smallest bandwidth") {
    const StudyConfig cfg = smoke_config(StudyKind::rate42);
    const TimeGrid grid = cfg.build_grid();
    const double phi_min = cfg.bandwidth(0.075);
    CHECK(grid.dt() <= phi_min * 2.0 / 200.0 * (1.0 + 1e-12));
    CHECK(grid.horizon == 2.0);
}

TEST_CASE("bandwidth rules per study kind") {
    CHECK(smoke_config(StudyKind::rate42).bandwidth(0.01) ==
          doctest::Approx(std::pow(0.01, 0.75)).epsilon(1e-12));
    CHECK(smoke_config(StudyKind::rate61, "rho = 2.0\n").bandwidth(0.01) ==
          doctest::Approx(std::pow(0.01, 0.75)).epsilon(1e-12));
    CHECK(smoke_config(StudyKind::consistency, "bandwidth_exponent = 0.6\n")
              .bandwidth(0.04) == doctest::Approx(std::pow(0.04, 0.6)).epsilon(1e-12));
}

TEST_CASE("rate study output is reproducible across thread counts") {
    StudyConfig cfg = smoke_config(StudyKind::rate42);
    cfg.n_threads = 1;
    const RateStudyResult serial = run_rate_study(cfg);
    cfg.n_threads = 3;
    const RateStudyResult threaded = run_rate_study(cfg);
    CHECK(rate_study_csv(cfg, serial) == rate_study_csv(cfg, threaded));

    // a different seed changes the numbers
    cfg.seed = 12;
    const RateStudyResult other = run_rate_study(cfg);
    CHECK(rate_study_csv(cfg, other) != rate_study_csv(cfg, serial));
}

TEST_CASE("rate study smoke: slope lands near the target") {
    StudyConfig cfg = smoke_config(StudyKind::rate42);
    cfg.n_threads = 2;
    const RateStudyResult result = run_rate_study(cfg);
    CHECK(result.target_exponent == doctest::Approx(0.75));
    // a 100-replicate smoke run is noisy; just pin a broad window
    CHECK(result.slope > 0.3);
    CHECK(result.slope < 1.2);
    CHECK(result.per_eps.size() == 4);
    for (const EpsStats& s : result.per_eps) {
        CHECK(s.median_abs_error > 0.0);
        CHECK(s.mean_abs_error >= s.median_abs_error * 0.1);
    }
}

TEST_CASE("consistency study: error decreases in eps") {
    StudyConfig cfg = smoke_config(StudyKind::consistency,
                                   "bandwidth_exponent = 0.75\nn_reps = 150\n");
    cfg.n_threads = 2;
    const ConsistencyResult result = run_consistency_study(cfg);
    CHECK(result.has_verdict);
    CHECK(result.pass);
    CHECK(result.per_eps.front().mean_abs_error > result.per_eps.back().mean_abs_error);
}

TEST_CASE("degenerate single-eps consistency study reports without verdict") {
    StudyConfig cfg = smoke_config(
        StudyKind::consistency, "eps_list = 0.0\nbandwidth = 0.1\nn_reps = 100\n");
    cfg.n_threads = 1;
    const ConsistencyResult result = run_consistency_study(cfg);
    CHECK_FALSE(result.has_verdict);
    CHECK(result.per_eps.size() == 1);
    // eps = 0: pure bias, so tiny for the smooth sine multiplier
    CHECK(result.per_eps[0].mean_abs_error < 0.05);
    const std::string csv = consistency_csv(cfg, result);
    CHECK(csv.find("# stabledrift-csv v1") == 0);
}

TEST_CASE("gronwall study holds at small noise") {
    const std::string gronwall_cfg = R"(
multiplier = sin
mult_a = 1.0
mult_b = 1.0
x0 = 1.0
alpha = 1.5
eps = 0.1
horizon = 2.0
n_steps = 4000
n_reps = 100
seed = 3
)";
    StudyConfig cfg = build_study_config(ConfigMap::parse_string(gronwall_cfg),
                                         StudyKind::gronwall);
    cfg.n_threads = 2;
    const GronwallStudyResult result = run_gronwall_study(cfg);
    CHECK(result.pass);
    CHECK(result.n_failed == 0);
    CHECK(result.worst_margin.size() == 100);
}

TEST_CASE("dist check smoke produces finite KS rows") {
    StudyConfig cfg = smoke_config(
        StudyKind::dist43,
        "eps_list = 0.1, 0.05\nn_reps = 400\nt = 1.0\nks_threshold = 0.5\n");
    cfg.n_threads = 2;
    const DistCheckResult result = run_dist_check(cfg);
    CHECK(result.rows.size() == 2);
    CHECK(result.shift_m == doctest::Approx(0.0).epsilon(1e-9));
    for (const DistCheckRow& row : result.rows) {
        CHECK(row.ks_statistic > 0.0);
        CHECK(row.ks_statistic < 0.5);
    }
}

TEST_CASE("dist check at alpha = 2 is a gaussian sanity row") {
    StudyConfig cfg = smoke_config(
        StudyKind::dist43,
        "alpha = 2.0\neps_list = 0.1, 0.05\nn_reps = 1000\nt = 1.0\n"
        "ks_threshold = 0.1\nmult_a = 0.5\n");
    cfg.n_threads = 2;
    const DistCheckResult result = run_dist_check(cfg);
    // both sides are gaussian here; the KS should sit near the MC floor
    for (const DistCheckRow& row : result.rows)
        CHECK(row.ks_statistic < 0.1);
}

TEST_CASE("csv formatting is stable") {
    CHECK(format_double(0.75) == "0.75");
    CHECK(format_double(1e-10) == "1e-10");
    CsvBuilder csv;
    csv.header({"a", "b"});
    csv.row({"1", "2"});
    CHECK(csv.str() == "# stabledrift-csv v1\na,b\n1,2\n");
}
