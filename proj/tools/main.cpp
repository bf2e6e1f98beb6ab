// stabledrift command-line interface.
//
// Subcommands: simulate | estimate | kernel-info | rate-study | consistency |
// dist-check | gronwall. Studies read a flat `key = value` config file and
// write versioned CSV. Exit codes: 0 success, 1 validation/usage error,
// 2 acceptance failure (the result file is still written).

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stabledrift/asymptotics.hpp"
#include "stabledrift/config.hpp"
#include "stabledrift/csv.hpp"
#include "stabledrift/estimators.hpp"
#include "stabledrift/kernel.hpp"
#include "stabledrift/parallel.hpp"
#include "stabledrift/quadrature.hpp"
#include "stabledrift/sde.hpp"
#include "stabledrift/stable.hpp"
#include "stabledrift/study.hpp"

namespace sd = stabledrift;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitAcceptance = 2;

struct CommonArgs {
    std::string config_path;
    std::string out_path;
    std::optional<std::uint64_t> seed;
};

sd::ConfigMap load_config(const CommonArgs& args) {
    return sd::ConfigMap::parse_file(args.config_path);
}

std::uint64_t resolve_seed(const CommonArgs& args, const sd::ConfigMap& cfg) {
    return args.seed ? *args.seed : cfg.get_u64("seed", 0);
}

void write_path_csv(const sd::SamplePath& path, const std::string& out_path) {
    sd::CsvBuilder csv;
    csv.header({"t", "value"});
    for (std::size_t i = 0; i < path.size(); ++i)
        csv.row({sd::format_double(path.grid.time(i)),
                 sd::format_double(path.values[i])});
    csv.write_file(out_path);
}

sd::SdeConfig sde_from_config(const sd::ConfigMap& cfg) {
    sd::SdeConfig sde;
    sde.multiplier = sd::multiplier_from_config(cfg);
    sde.x0 = cfg.get_double("x0", 1.0);
    sde.eps = cfg.get_double("eps");
    sde.alpha = cfg.get_double("alpha", 1.5);
    sde.beta = cfg.get_double("beta", 0.0);
    const long long n_steps = cfg.get_int("n_steps");
    if (n_steps < 2)
        throw sd::ConfigError("n_steps must be >= 2");
    sde.grid = sd::TimeGrid(cfg.get_double("horizon", 2.0),
                            static_cast<std::size_t>(n_steps));
    return sde;
}

int cmd_simulate(const CommonArgs& args, const std::string& z_out) {
    const sd::ConfigMap cfg = load_config(args);
    const sd::SdeConfig sde = sde_from_config(cfg);
    sd::RngStream rng(resolve_seed(args, cfg), 0);
    const sd::SdePaths paths = sd::simulate_sde(sde, rng);
    write_path_csv(paths.x, args.out_path);
    if (!z_out.empty())
        write_path_csv(paths.z, z_out);
    return kExitOk;
}

int cmd_estimate(const CommonArgs& args, const std::string& t_list) {
    const sd::ConfigMap cfg = load_config(args);
    const sd::SdeConfig sde = sde_from_config(cfg);
    const sd::Kernel kernel = sd::kernel_from_config(cfg);
    const std::string which = cfg.get_string("estimator", "drift");
    const std::size_t ppw =
        static_cast<std::size_t>(cfg.get_int("points_per_window", 200));

    std::vector<double> ts;
    if (!t_list.empty()) {
        sd::ConfigMap tmp = sd::ConfigMap::parse_string("t = " + t_list);
        ts = tmp.get_double_list("t");
    } else {
        ts = cfg.get_double_list("t_eval");
    }

    double phi;
    if (cfg.has("bandwidth")) {
        phi = cfg.get_double("bandwidth");
    } else if (which == "multiplier") {
        phi = sd::bandwidth_thm61(sde.eps, sde.alpha, cfg.get_double("rho", 2.0));
    } else {
        phi = sd::bandwidth_thm42(sde.eps, static_cast<int>(cfg.get_int("k", 0)),
                                  sde.alpha);
    }

    sd::RngStream rng(resolve_seed(args, cfg), 0);
    const sd::SdePaths paths = sd::simulate_sde(sde, rng);

    sd::CsvBuilder csv;
    csv.comment("estimator=" + which + " eps=" + sd::format_double(sde.eps));
    csv.header({"t", "estimate", "truth", "abs_error", "bandwidth"});

    if (which == "multiplier") {
        const sd::YPath yp =
            sd::build_y_path(paths.x, sde.x0, sde.multiplier.bound);
        for (double t : ts) {
            const sd::MultiplierEstimate est = sd::estimate_multiplier(
                yp.y, yp.a_holds, kernel, phi, t, ppw);
            const double truth = sde.multiplier.eval(t);
            csv.row({sd::format_double(t), sd::format_double(est.value),
                     sd::format_double(truth),
                     sd::format_double(std::abs(est.value - truth)),
                     sd::format_double(phi)});
        }
    } else if (which == "drift") {
        for (double t : ts) {
            const sd::DriftEstimate est =
                sd::estimate_drift(paths.x, kernel, phi, t, ppw);
            const double integral = sd::adaptive_integrate(
                [&](double s) { return sde.multiplier.eval(s); }, 0.0, t, 1e-12);
            const double truth =
                sde.multiplier.eval(t) * sde.x0 * std::exp(integral);
            csv.row({sd::format_double(t), sd::format_double(est.value),
                     sd::format_double(truth),
                     sd::format_double(std::abs(est.value - truth)),
                     sd::format_double(phi)});
        }
    } else {
        throw sd::ConfigError("estimator must be `drift` or `multiplier`: " + which);
    }

    csv.write_file(args.out_path);
    return kExitOk;
}

int cmd_kernel_info(const std::string& family, int order, double alpha,
                    const std::string& out_path) {
    const sd::Kernel g =
        sd::make_kernel(order, sd::kernel_family_from_name(family));
    const sd::AlphaIntegrals ints = sd::kernel_alpha_integrals(g, alpha);

    sd::CsvBuilder csv;
    std::vector<std::string> header{"family", "order", "A", "B"};
    std::vector<std::string> row{g.name(), std::to_string(g.order()),
                                 sd::format_double(g.support_a()),
                                 sd::format_double(g.support_b())};
    for (int j = 0; j <= g.order() + 1; ++j) {
        header.push_back("M" + std::to_string(j));
        row.push_back(sd::format_double(g.moment(j)));
    }
    header.insert(header.end(), {"alpha", "abs_alpha", "pos_alpha", "neg_alpha"});
    row.insert(row.end(),
               {sd::format_double(alpha), sd::format_double(ints.abs),
                sd::format_double(ints.pos), sd::format_double(ints.neg)});
    csv.header(header);
    csv.row(row);

    if (out_path.empty())
        std::cout << csv.str();
    else
        csv.write_file(out_path);
    return kExitOk;
}

int run_study(const CommonArgs& args, sd::StudyKind kind) {
    const sd::ConfigMap cfg = load_config(args);
    sd::StudyConfig sc = sd::build_study_config(cfg, kind);
    if (args.seed)
        sc.seed = *args.seed;
    sc.n_threads = sd::worker_count_from_env();

    bool pass = false;
    std::string csv;
    switch (kind) {
    case sd::StudyKind::rate42:
    case sd::StudyKind::rate61: {
        const sd::RateStudyResult result = sd::run_rate_study(sc);
        csv = sd::rate_study_csv(sc, result);
        pass = result.pass;
        break;
    }
    case sd::StudyKind::consistency: {
        const sd::ConsistencyResult result = sd::run_consistency_study(sc);
        csv = sd::consistency_csv(sc, result);
        pass = result.pass;
        break;
    }
    case sd::StudyKind::dist43: {
        const sd::DistCheckResult result = sd::run_dist_check(sc);
        csv = sd::dist_check_csv(sc, result);
        pass = result.pass;
        break;
    }
    case sd::StudyKind::gronwall: {
        const sd::GronwallStudyResult result = sd::run_gronwall_study(sc);
        csv = sd::gronwall_csv(sc, result);
        pass = result.pass;
        break;
    }
    }

    // the study CSV already carries the version header; write verbatim
    std::ofstream file(args.out_path, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot open output file: " + args.out_path);
    file << csv;
    file.close();

    return pass ? kExitOk : kExitAcceptance;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"small-noise alpha-stable SDE simulation and kernel drift estimation"};
    app.require_subcommand(1);

    CommonArgs args;
    std::uint64_t seed_value = 0;
    std::string z_out, t_list;
    std::string kernel_family = "epanechnikov";
    int kernel_order = 1;
    double alpha = 1.5;
    std::string kernel_out;

    auto add_common = [&](CLI::App* sub, bool needs_out = true) {
        sub->add_option("--config", args.config_path, "flat key = value config file")
            ->required();
        sub->add_option("--seed", seed_value, "master seed (overrides config)");
        if (needs_out)
            sub->add_option("--out", args.out_path, "output CSV path")->required();
    };

    CLI::App* simulate = app.add_subcommand("simulate", "simulate one SDE path to CSV");
    add_common(simulate);
    simulate->add_option("--z-out", z_out, "also write the driving Levy path");

    CLI::App* estimate =
        app.add_subcommand("estimate", "estimate the drift product or multiplier on one path");
    add_common(estimate);
    estimate->add_option("--t", t_list, "comma list of evaluation times");

    CLI::App* kinfo = app.add_subcommand("kernel-info", "print kernel moments and alpha integrals");
    kinfo->add_option("--kernel", kernel_family, "uniform | epanechnikov | polynomial");
    kinfo->add_option("--order", kernel_order, "vanishing-moment order k");
    kinfo->add_option("--alpha", alpha, "stability index for the alpha integrals");
    kinfo->add_option("--out", kernel_out, "output CSV path (stdout when absent)");

    CLI::App* rate42 = app.add_subcommand("rate-study", "Monte-Carlo convergence-rate study");
    add_common(rate42);
    std::string rate_kind = "rate42";
    rate42->add_option("--kind", rate_kind, "rate42 | rate61 (default from config `study`)");

    CLI::App* consistency = app.add_subcommand("consistency", "mean-error consistency study");
    add_common(consistency);

    CLI::App* dist = app.add_subcommand("dist-check", "limit-law distribution check");
    add_common(dist);

    CLI::App* gronwall = app.add_subcommand("gronwall", "pathwise Gronwall bound study");
    add_common(gronwall);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    for (const CLI::App* sub : app.get_subcommands()) {
        const CLI::Option* opt = sub->get_option_no_throw("--seed");
        if (opt != nullptr && opt->count() > 0)
            args.seed = seed_value;
    }

    try {
        if (simulate->parsed())
            return cmd_simulate(args, z_out);
        if (estimate->parsed())
            return cmd_estimate(args, t_list);
        if (kinfo->parsed())
            return cmd_kernel_info(kernel_family, kernel_order, alpha, kernel_out);
        if (rate42->parsed()) {
            sd::StudyKind kind = sd::StudyKind::rate42;
            const sd::ConfigMap cfg = load_config(args);
            std::string requested = cfg.get_string("study", rate_kind);
            if (rate42->count("--kind"))
                requested = rate_kind;
            if (requested == "rate61")
                kind = sd::StudyKind::rate61;
            else if (requested != "rate42")
                throw sd::ConfigError("rate-study kind must be rate42 or rate61, got: " +
                                      requested);
            return run_study(args, kind);
        }
        if (consistency->parsed())
            return run_study(args, sd::StudyKind::consistency);
        if (dist->parsed())
            return run_study(args, sd::StudyKind::dist43);
        if (gronwall->parsed())
            return run_study(args, sd::StudyKind::gronwall);
    } catch (const sd::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    return kExitUsage;
}
