#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lrw/graph.hpp"
#include "lrw/kernel.hpp"
#include "lrw/motif.hpp"
#include "lrw/observation.hpp"
#include "lrw/pair_chain.hpp"
#include "lrw/s3p.hpp"
#include "lrw/size.hpp"
#include "lrw/total.hpp"

namespace lrw {

enum class Experiment { stationary_check, convergence, prevalence, size, motif_total };
std::string_view to_string(Experiment e);
Experiment parse_experiment(std::string_view text);

/// Everything a campaign needs. Grids are crossed; each cell runs
/// `replicates` independent walks. Replicate k of a cell draws from the
/// substream derive_seed(seed, {experiment, cell parameters..., k, stream}),
/// so output does not depend on thread count or scheduling.
struct CampaignConfig {
    Experiment experiment = Experiment::stationary_check;

    std::optional<std::filesystem::path> graph_path;  // else generate
    CaseGraphParams graph;

    std::vector<double> r_grid = {1.0, 0.1};
    std::vector<double> w_grid = {1.0};
    /// T for convergence, prevalence and motif-total; n (states per walk)
    /// for size.
    std::vector<std::size_t> length_grid = {100};
    std::vector<std::size_t> t_grid = {1, 4, 8, 16};
    std::vector<InitMode> inits = {InitMode::stationary()};
    std::size_t burn_in = 16;  // applied to non-stationary inits outside convergence

    std::size_t replicates = 1000;
    /// motif-total: replicates for the total campaign (the ratio campaign
    /// uses `replicates`).
    std::size_t total_replicates = 10000;
    std::uint64_t seed = 20240601;

    std::vector<SizeMethod> estimators = {SizeMethod::cr, SizeMethod::gr, SizeMethod::grcr};
    Extraction extraction;

    MotifKind motif = MotifKind::triangle;
    MotifValue total_values = MotifValue::ones;
    WeightScheme weights = WeightScheme::multiplicity;
    std::vector<Normalization> normalizations = {Normalization::estimated, Normalization::exact};
    /// Size estimator whose R hat normalizes totals in estimated mode.
    SizeMethod normalizing_estimator = SizeMethod::grcr;
    WindowCombine combine = WindowCombine::all_windows;

    StationaryOptions stationary;

    unsigned threads = 1;
    /// Per-cell failure rate (no collisions, no observations) above which
    /// the CLI exits with code 4.
    double failure_threshold = 0.5;
};

/// Throws ConfigError for empty grids, B < 1 or out-of-range values and
/// NonErgodicError for r <= 0.
void validate(const CampaignConfig& cfg);

Graph load_campaign_graph(const CampaignConfig& cfg);
/// "file:<path>" or "generated:<seed>".
std::string graph_label(const CampaignConfig& cfg);

/// Plain CSV table; numbers are formatted with 6 significant digits.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::string str() const;
};

std::string format_number(double v);

struct StationaryCheckRow {
    double r = 0, w = 0;
    StationaryMethod method{};
    long iterations = 0;
    double balance_residual = 0;  // max |pi P - pi|
    double marginal_dev = 0;      // max |pi_h - (d_h + r)/(2R + rN)|
    double pair_dev = 0;          // max |pi_(i,h) - (a_ih + r/N)/(2R + rN)|
    double mixed_residual = 0;    // max per-node residual of the mixed equation
};

struct ConvergenceRow {
    InitMode init;
    double r = 0, w = 0;
    std::size_t t = 0;
    std::size_t replicates = 0;
    double mc_mean = 0, mc_se = 0;  // Monte Carlo E(Y_t)
    double exact = 0;               // chain-propagated E(Y_t)
    double equilibrium = 0;         // E(Y_inf)
};

struct PrevalenceRow {
    std::size_t length = 0;
    double r = 0, w = 0;
    std::size_t replicates = 0, failures = 0;
    double mean = 0, sd = 0, se = 0;  // over mu hat
    double mean_traverse = 0;
    double truth = 0;
};

struct SizeRow {
    std::size_t n = 0;
    double r = 0, w = 0;
    SizeMethod estimator{};
    std::size_t replicates = 0, valid = 0, failures = 0, negatives = 0;
    double mean = 0, sd = 0, se = 0;
    double mean_collisions = 0;  // mean of m
    double truth = 0;
};

struct MotifTotalRow {
    std::string quantity;  // "ratio" or "total"
    Normalization normalization{};
    std::size_t length = 0;
    double r = 0, w = 0;
    std::size_t replicates = 0, valid = 0, failures = 0;
    double mean = 0, sd = 0, se = 0;
    double truth = 0;
};

template <typename Row>
struct CampaignResult {
    std::vector<Row> rows;
    CsvTable table;
    double max_failure_rate = 0.0;
};

CampaignResult<StationaryCheckRow> run_stationary_check(const CampaignConfig& cfg, const Graph& g);
CampaignResult<ConvergenceRow> run_convergence(const CampaignConfig& cfg, const Graph& g);
CampaignResult<PrevalenceRow> run_prevalence(const CampaignConfig& cfg, const Graph& g);
CampaignResult<SizeRow> run_size(const CampaignConfig& cfg, const Graph& g);
CampaignResult<MotifTotalRow> run_motif_total(const CampaignConfig& cfg, const Graph& g);

/// Runs cfg.experiment and returns the CSV text plus the worst failure rate.
struct CampaignOutput {
    std::string csv;
    double max_failure_rate = 0.0;
};
CampaignOutput run_campaign(const CampaignConfig& cfg);

}  // namespace lrw
