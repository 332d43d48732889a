// Experiment harness for lagged random walk sampling.
//
//   lrw <subcommand> [flags]
//
// Subcommands: stationary-check, convergence, prevalence, size, motif-total.
// Any flag may also come from a key=value file given with --config; flags on
// the command line win. Exit codes: 0 success, 2 configuration error,
// 3 non-ergodic configuration, 4 failure rate above --failure-threshold.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lrw/campaign.hpp"
#include "lrw/error.hpp"
#include "lrw/graph_io.hpp"

namespace {

constexpr int exit_config = 2;
constexpr int exit_non_ergodic = 3;
constexpr int exit_failures = 4;

struct Defaults {
    std::vector<double> r;
    std::vector<double> w;
    std::vector<std::size_t> length;
    std::size_t replicates;
    std::vector<std::string> init;
};

// Default grids per experiment; any explicit flag replaces them.
Defaults defaults_for(lrw::Experiment e) {
    using lrw::Experiment;
    switch (e) {
        case Experiment::stationary_check: return {{0.1, 1, 6}, {0, 0.5, 1}, {1}, 1, {"stationary"}};
        case Experiment::convergence:
            return {{1, 0.1}, {1}, {16}, 100000, {"stationary", "uniform", "fixed:0"}};
        case Experiment::prevalence: return {{0.1, 6}, {1, 0.01}, {50, 100}, 1000, {"stationary"}};
        case Experiment::size: return {{0.1, 6}, {1, 0.01}, {50, 100}, 10000, {"stationary"}};
        case Experiment::motif_total: return {{0.1, 6}, {1, 0.01}, {50, 100}, 1000, {"stationary"}};
    }
    return {};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lagged random walk sampling experiments"};
    app.set_config("--config", "", "key=value file supplying any flag");
    app.require_subcommand(1, 1);
    app.fallthrough();

    std::vector<std::pair<lrw::Experiment, CLI::App*>> subs;
    for (auto e : {lrw::Experiment::stationary_check, lrw::Experiment::convergence, lrw::Experiment::prevalence,
                   lrw::Experiment::size, lrw::Experiment::motif_total})
        subs.emplace_back(e, app.add_subcommand(std::string(lrw::to_string(e))));
    subs[0].second->description("Solve the pair chain and compare with the closed-form stationary law");
    subs[1].second->description("Monte Carlo and exact E(Y_t) by init mode, r and t");
    subs[2].second->description("Case prevalence by generalised ratio estimation");
    subs[3].second->description("Graph size by CR, GR and GR-CR estimators");
    subs[4].second->description("Motif ratio and total estimation");

    lrw::CaseGraphParams gp;
    std::string graph_path, save_graph, out_path;
    bool generate = false;
    std::vector<double> r_grid, w_grid;
    std::vector<std::size_t> lengths, t_grid;
    std::optional<std::size_t> replicates;
    std::size_t total_replicates = 10000, burn_in = 16, stride = 1;
    std::uint64_t seed = 20240601;
    std::vector<std::string> inits;
    std::string estimator = "all", motif = "triangle", weights = "multiplicity", normalization = "both",
                values = "ones", combine = "all-windows", size_for_norm = "grcr", method = "automatic";
    unsigned threads = 1;
    double failure_threshold = 0.5;

    auto* graph_opt = app.add_option("--graph", graph_path, "Edge-list file to load");
    app.add_flag("--generate", generate, "Generate the two-class study graph (default)")->excludes(graph_opt);
    app.add_option("--nodes", gp.nodes, "Generated graph: node count")->capture_default_str();
    app.add_option("--cases", gp.cases, "Generated graph: number of y = 1 nodes")->capture_default_str();
    app.add_option("--p-cc", gp.p_case_case, "Edge probability case-case")->capture_default_str();
    app.add_option("--p-cn", gp.p_case_noncase, "Edge probability case-noncase")->capture_default_str();
    app.add_option("--p-nn", gp.p_noncase_noncase, "Edge probability noncase-noncase")->capture_default_str();
    app.add_option("--graph-seed", gp.seed, "Generated graph: seed")->capture_default_str();
    app.add_option("--save-graph", save_graph, "Write the graph used to this edge-list file");

    app.add_option("--r", r_grid, "Jump rates");
    app.add_option("--w", w_grid, "Backtracking weights");
    app.add_option("--walk-length", lengths, "Walk lengths T (states per walk n for size)");
    app.add_option("--t", t_grid, "Convergence: time points")->default_str("1 4 8 16");
    app.add_option("--replicates", replicates, "Replicates B per cell");
    app.add_option("--total-replicates", total_replicates, "motif-total: replicates for the total")
        ->capture_default_str();
    app.add_option("--seed", seed, "Master seed")->capture_default_str();
    app.add_option("--init", inits, "stationary | uniform | fixed:<id>");
    app.add_option("--burn-in", burn_in, "Unrecorded steps before X_0 for non-stationary inits")
        ->capture_default_str();
    app.add_option("--stride", stride, "size: extraction stride")->capture_default_str();
    app.add_option("--estimator", estimator, "cr | gr | grcr | all")->capture_default_str();
    app.add_option("--motif", motif, "node | edge | two-star | triangle | four-cycle | three-path")
        ->capture_default_str();
    app.add_option("--motif-values", values, "motif-total: y for the total, product | ones")->capture_default_str();
    app.add_option("--weights", weights, "multiplicity | ppw")->capture_default_str();
    app.add_option("--normalization", normalization, "exact | estimated | both")->capture_default_str();
    app.add_option("--size-estimator", size_for_norm, "R hat feeding estimated normalization: cr | gr | grcr")
        ->capture_default_str();
    app.add_option("--combine", combine, "all-windows | informative")->capture_default_str();
    app.add_option("--solver", method, "stationary-check: automatic | direct | power")->capture_default_str();
    app.add_option("--threads", threads, "Worker threads, 0 = all cores")->capture_default_str();
    app.add_option("--failure-threshold", failure_threshold, "Exit 4 when a cell's failure rate exceeds this")
        ->capture_default_str();
    app.add_option("--out", out_path, "CSV output path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_config;
    }

    try {
        lrw::CampaignConfig cfg;
        for (auto& [e, sub] : subs)
            if (sub->parsed()) cfg.experiment = e;
        const auto d = defaults_for(cfg.experiment);

        if (!graph_path.empty()) cfg.graph_path = graph_path;
        cfg.graph = gp;
        cfg.r_grid = r_grid.empty() ? d.r : r_grid;
        cfg.w_grid = w_grid.empty() ? d.w : w_grid;
        cfg.length_grid = lengths.empty() ? d.length : lengths;
        if (!t_grid.empty()) cfg.t_grid = t_grid;
        if (cfg.experiment == lrw::Experiment::convergence && lengths.empty()) cfg.length_grid = cfg.t_grid;
        cfg.replicates = replicates.value_or(d.replicates);
        cfg.total_replicates = total_replicates;
        cfg.seed = seed;
        cfg.inits.clear();
        for (const auto& s : inits.empty() ? d.init : inits) cfg.inits.push_back(lrw::parse_init_mode(s));
        cfg.burn_in = burn_in;
        cfg.extraction.stride = stride;
        if (estimator == "all")
            cfg.estimators = {lrw::SizeMethod::cr, lrw::SizeMethod::gr, lrw::SizeMethod::grcr};
        else if (estimator == "cr")
            cfg.estimators = {lrw::SizeMethod::cr};
        else if (estimator == "gr")
            cfg.estimators = {lrw::SizeMethod::gr};
        else if (estimator == "grcr")
            cfg.estimators = {lrw::SizeMethod::grcr};
        else
            throw lrw::ConfigError("unknown estimator '" + estimator + "'");
        cfg.normalizing_estimator = size_for_norm == "cr"   ? lrw::SizeMethod::cr
                                    : size_for_norm == "gr" ? lrw::SizeMethod::gr
                                    : size_for_norm == "grcr"
                                        ? lrw::SizeMethod::grcr
                                        : throw lrw::ConfigError("unknown size estimator '" + size_for_norm + "'");
        cfg.motif = lrw::parse_motif_kind(motif);
        cfg.total_values = lrw::parse_motif_value(values);
        cfg.weights = lrw::parse_weight_scheme(weights);
        if (normalization == "both")
            cfg.normalizations = {lrw::Normalization::estimated, lrw::Normalization::exact};
        else
            cfg.normalizations = {lrw::parse_normalization(normalization)};
        cfg.combine = lrw::parse_window_combine(combine);
        cfg.stationary.method = method == "direct"  ? lrw::StationaryMethod::direct
                                : method == "power" ? lrw::StationaryMethod::power
                                : method == "automatic"
                                    ? lrw::StationaryMethod::automatic
                                    : throw lrw::ConfigError("unknown solver '" + method + "'");
        cfg.threads = threads;
        cfg.failure_threshold = failure_threshold;

        if (!save_graph.empty()) lrw::write_edge_list(save_graph, lrw::load_campaign_graph(cfg));

        const auto result = lrw::run_campaign(cfg);
        if (out_path.empty()) {
            std::cout << result.csv;
        } else {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) throw lrw::ConfigError("cannot write " + out_path);
            out << result.csv;
        }
        if (result.max_failure_rate > cfg.failure_threshold) {
            std::cerr << "failure rate " << result.max_failure_rate << " exceeds threshold " << cfg.failure_threshold
                      << '\n';
            return exit_failures;
        }
    } catch (const lrw::NonErgodicError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_non_ergodic;
    } catch (const lrw::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_config;
    } catch (const lrw::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
