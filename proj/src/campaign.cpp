#include "lrw/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "lrw/error.hpp"
#include "lrw/graph_io.hpp"
#include "lrw/sample_graph.hpp"
#include "lrw/summary.hpp"
#include "lrw/walk.hpp"

namespace lrw {

std::string_view to_string(Experiment e) {
    switch (e) {
        case Experiment::stationary_check: return "stationary-check";
        case Experiment::convergence: return "convergence";
        case Experiment::prevalence: return "prevalence";
        case Experiment::size: return "size";
        case Experiment::motif_total: return "motif-total";
    }
    return "?";
}

Experiment parse_experiment(std::string_view text) {
    for (auto e : {Experiment::stationary_check, Experiment::convergence, Experiment::prevalence, Experiment::size,
                   Experiment::motif_total})
        if (text == to_string(e)) return e;
    throw ConfigError("unknown experiment '" + std::string(text) + "'");
}

void validate(const CampaignConfig& cfg) {
    if (cfg.r_grid.empty() || cfg.w_grid.empty() || cfg.length_grid.empty())
        throw ConfigError("r, w and walk-length grids must be nonempty");
    if (cfg.replicates < 1 || cfg.total_replicates < 1) throw ConfigError("replicates must be at least 1");
    for (double w : cfg.w_grid)
        if (!(w >= 0.0 && w <= 1.0)) throw ConfigError("w must lie in [0, 1]");
    for (double r : cfg.r_grid) {
        if (std::isnan(r) || r < 0.0) throw ConfigError("r must be >= 0");
        if (r == 0.0) throw NonErgodicError("r = 0 gives a non-ergodic walk; campaigns need r > 0");
    }
    if (cfg.experiment == Experiment::convergence && (cfg.t_grid.empty() || cfg.inits.empty()))
        throw ConfigError("convergence needs a t grid and at least one init mode");
    if (cfg.inits.empty()) throw ConfigError("an init mode is required");
    if (cfg.experiment == Experiment::size)
        for (auto n : cfg.length_grid)
            if (n < 1) throw ConfigError("size campaign needs n >= 1 states per walk");
    if (cfg.experiment == Experiment::motif_total && cfg.normalizations.empty())
        throw ConfigError("motif-total needs at least one normalization");
    if (cfg.extraction.stride == 0) throw ConfigError("extraction stride must be positive");
}

Graph load_campaign_graph(const CampaignConfig& cfg) {
    if (cfg.graph_path) return read_edge_list(*cfg.graph_path);
    return generate_case_graph(cfg.graph);
}

std::string graph_label(const CampaignConfig& cfg) {
    if (cfg.graph_path) return "file:" + cfg.graph_path->string();
    return "generated:" + std::to_string(cfg.graph.seed);
}

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string CsvTable::str() const {
    std::ostringstream out;
    const auto line = [&out](const std::vector<std::string>& cells) {
        for (std::size_t k = 0; k < cells.size(); ++k) out << (k ? "," : "") << cells[k];
        out << '\n';
    };
    line(header);
    for (const auto& row : rows) line(row);
    return out.str();
}

namespace {

/// Runs body(k) for k in [0, count) on up to `threads` workers. Results are
/// written by index, so the outcome is independent of scheduling.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = unsigned(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
    if (threads <= 1) {
        for (std::size_t k = 0; k < count; ++k) body(k);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t k; (k = next.fetch_add(1)) < count;) {
                try {
                    body(k);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                    next = count;
                }
            }
        });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

std::uint64_t bits(double v) { return std::bit_cast<std::uint64_t>(v); }

std::uint64_t init_key(const InitMode& m) { return (std::uint64_t(m.kind) << 32) | m.node; }

WalkConfig walk_config(double r, double w, std::size_t length, const InitMode& init) {
    WalkConfig wc;
    wc.jump_rate = r;
    wc.backtrack_weight = w;
    wc.walk_length = length;
    wc.init = init;
    return wc;
}

std::size_t burn_in_for(const CampaignConfig& cfg, const InitMode& init) {
    return init.kind == InitMode::Kind::stationary ? 0 : cfg.burn_in;
}

/// Summary over the finite entries; NaN marks a failed replicate.
struct Tally {
    ReplicateSummary summary;
    std::size_t valid = 0;
    std::size_t failures = 0;
};

Tally tally(const std::vector<double>& values) {
    Tally t;
    std::vector<double> ok;
    for (double v : values)
        if (std::isnan(v))
            ++t.failures;
        else
            ok.push_back(v);
    t.valid = ok.size();
    if (ok.size() >= 2) {
        t.summary = replicate_summary(ok);
    } else {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        t.summary = {ok.size(), ok.empty() ? nan : ok[0], nan, nan};
    }
    return t;
}

double mean_of(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return v.empty() ? 0.0 : s / double(v.size());
}

std::string str(std::size_t v) { return std::to_string(v); }
std::string str(double v) { return format_number(v); }
std::string str(std::string_view v) { return std::string(v); }

std::vector<std::string> prefix(const CampaignConfig& cfg) {
    return {std::string(to_string(cfg.experiment)), graph_label(cfg), std::to_string(cfg.seed)};
}

const std::vector<std::string> prefix_header = {"experiment", "graph", "seed"};

template <typename... Cells>
std::vector<std::string> row(const CampaignConfig& cfg, const Cells&... cells) {
    auto out = prefix(cfg);
    (out.push_back(str(cells)), ...);
    return out;
}

std::vector<std::string> header(std::initializer_list<const char*> cols) {
    auto out = prefix_header;
    for (auto c : cols) out.emplace_back(c);
    return out;
}

std::string_view to_string(StationaryMethod m) {
    switch (m) {
        case StationaryMethod::automatic: return "automatic";
        case StationaryMethod::direct: return "direct";
        case StationaryMethod::power: return "power";
    }
    return "?";
}

}  // namespace

// ---------------------------------------------------------------------------

CampaignResult<StationaryCheckRow> run_stationary_check(const CampaignConfig& cfg, const Graph& g) {
    validate(cfg);
    CampaignResult<StationaryCheckRow> res;
    res.table.header = header({"r", "w", "method", "iterations", "balance_residual", "marginal_dev", "pair_dev",
                               "mixed_residual"});
    const double n = double(g.node_count());
    for (double r : cfg.r_grid)
        for (double w : cfg.w_grid) {
            const auto wc = walk_config(r, w, 1, InitMode::stationary());
            PairStateChain chain(g, wc);
            const auto pi = stationary_pair(chain, cfg.stationary);
            const double c = 2.0 * double(g.edge_count()) + r * n;
            StationaryCheckRow out{r, w, pi.method, pi.iterations, pi.residual, 0, 0, 0};
            for (NodeId h = 0; h < g.node_count(); ++h) {
                out.marginal_dev =
                    std::max(out.marginal_dev, std::abs(pi.node[h] - (double(g.degree(h)) + r) / c));
                for (NodeId i = 0; i < g.node_count(); ++i) {
                    const double expect = ((g.adjacent(i, h) ? 1.0 : 0.0) + r / n) / c;
                    out.pair_dev = std::max(out.pair_dev, std::abs(pi.pair[chain.index({i, h})] - expect));
                }
            }
            for (double e : mixed_equation_residual(chain, pi))
                out.mixed_residual = std::max(out.mixed_residual, std::abs(e));
            res.table.rows.push_back(row(cfg, r, w, to_string(out.method), std::size_t(out.iterations),
                                         out.balance_residual, out.marginal_dev, out.pair_dev, out.mixed_residual));
            res.rows.push_back(out);
        }
    return res;
}

// ---------------------------------------------------------------------------

CampaignResult<ConvergenceRow> run_convergence(const CampaignConfig& cfg, const Graph& g) {
    validate(cfg);
    CampaignResult<ConvergenceRow> res;
    res.table.header = header({"init", "r", "w", "t", "replicates", "mc_mean", "mc_se", "exact", "equilibrium"});
    const std::size_t n = g.node_count();
    const std::size_t t_max = *std::max_element(cfg.t_grid.begin(), cfg.t_grid.end());
    const auto y = g.values();

    for (const auto& init : cfg.inits) {
        validate(walk_config(1.0, 1.0, 1, init), n);
        for (double r : cfg.r_grid)
            for (double w : cfg.w_grid) {
                const auto wc = walk_config(r, w, t_max, init);
                const std::size_t b = cfg.replicates;
                // samples[k * |t_grid| + j] = y(X_{t_j}) in replicate k
                std::vector<double> samples(b * cfg.t_grid.size());
                parallel_for(b, cfg.threads, [&](std::size_t k) {
                    auto rng = make_rng(cfg.seed, {1, init_key(init), bits(r), bits(w), t_max, k});
                    const auto tr = run_walk(g, wc, rng);
                    for (std::size_t j = 0; j < cfg.t_grid.size(); ++j)
                        samples[k * cfg.t_grid.size() + j] = y[tr.states[cfg.t_grid[j]]];
                });

                PairStateChain chain(g, wc);
                std::vector<double> p0(n, 0.0);
                if (init.kind == InitMode::Kind::fixed)
                    p0[init.node] = 1.0;
                else if (init.kind == InitMode::Kind::uniform)
                    std::fill(p0.begin(), p0.end(), 1.0 / double(n));
                else
                    p0 = stationary_node(g, wc);
                const auto pi = stationary_node(g, wc);
                double equilibrium = 0.0;
                for (std::size_t i = 0; i < n; ++i) equilibrium += pi[i] * y[i];

                for (std::size_t j = 0; j < cfg.t_grid.size(); ++j) {
                    std::vector<double> col(b);
                    for (std::size_t k = 0; k < b; ++k) col[k] = samples[k * cfg.t_grid.size() + j];
                    const auto s = tally(col).summary;
                    const auto pt = marginal_at_t(chain, p0, cfg.t_grid[j]);
                    double exact = 0.0;
                    for (std::size_t i = 0; i < n; ++i) exact += pt[i] * y[i];
                    ConvergenceRow out{init, r, w, cfg.t_grid[j], b, s.mean, s.se, exact, equilibrium};
                    res.table.rows.push_back(row(cfg, to_string(init), r, w, out.t, b, out.mc_mean, out.mc_se,
                                                 out.exact, out.equilibrium));
                    res.rows.push_back(out);
                }
            }
    }
    return res;
}

// ---------------------------------------------------------------------------

namespace {

// Runs a single-init campaign once per configured init and stacks the rows.
template <typename Row, typename Fn>
CampaignResult<Row> each_init(const CampaignConfig& cfg, Fn&& run_one) {
    CampaignResult<Row> all;
    for (const auto& init : cfg.inits) {
        auto one = cfg;
        one.inits = {init};
        auto part = run_one(one);
        all.table.header = part.table.header;
        all.rows.insert(all.rows.end(), part.rows.begin(), part.rows.end());
        all.table.rows.insert(all.table.rows.end(), part.table.rows.begin(), part.table.rows.end());
        all.max_failure_rate = std::max(all.max_failure_rate, part.max_failure_rate);
    }
    return all;
}

}  // namespace

namespace {

CampaignResult<PrevalenceRow> prevalence_for_init(const CampaignConfig& cfg, const Graph& g) {
    validate(cfg);
    CampaignResult<PrevalenceRow> res;
    res.table.header = header({"init", "T", "r", "w", "replicates", "failures", "mean_mu", "sd_mu", "se_mu",
                               "mean_traverse", "truth"});
    const auto& init = cfg.inits.front();
    double truth = 0.0;
    for (double v : g.values()) truth += v;
    truth /= double(g.node_count());

    TotalOptions num{MotifKind::node, MotifValue::product, WeightScheme::multiplicity, true, cfg.combine};
    TotalOptions den{MotifKind::node, MotifValue::ones, WeightScheme::multiplicity, true, cfg.combine};

    for (auto len : cfg.length_grid)
        for (double r : cfg.r_grid)
            for (double w : cfg.w_grid) {
                const auto wc = walk_config(r, w, len, init);
                validate(wc, g.node_count());
                std::vector<double> mu(cfg.replicates), psi(cfg.replicates);
                parallel_for(cfg.replicates, cfg.threads, [&](std::size_t k) {
                    auto rng = make_rng(cfg.seed, {2, init_key(init), bits(r), bits(w), len, k});
                    const auto tr = run_walk(g, wc, rng, burn_in_for(cfg, init));
                    const SampleGraph sg(g, tr.seed_sample);
                    const S3pModel model(sg, wc, Normalization::unnormalized);
                    psi[k] = tr.traverse;
                    try {
                        mu[k] = estimate_ratio(tr, sg, num, den, model);
                    } catch (const NoObservationError&) {
                        mu[k] = std::numeric_limits<double>::quiet_NaN();
                    }
                });
                const auto t = tally(mu);
                PrevalenceRow out{len, r, w, cfg.replicates, t.failures, t.summary.mean, t.summary.sd,
                                  t.summary.se, mean_of(psi), truth};
                res.max_failure_rate = std::max(res.max_failure_rate, double(t.failures) / double(cfg.replicates));
                res.table.rows.push_back(row(cfg, to_string(init), len, r, w, out.replicates, out.failures, out.mean,
                                             out.sd, out.se, out.mean_traverse, out.truth));
                res.rows.push_back(out);
            }
    return res;
}

}  // namespace

CampaignResult<PrevalenceRow> run_prevalence(const CampaignConfig& cfg, const Graph& g) {
    return each_init<PrevalenceRow>(cfg, [&](const CampaignConfig& one) { return prevalence_for_init(one, g); });
}

// ---------------------------------------------------------------------------

namespace {

/// R hat from two independent walks; NaN when the estimator is undefined.
struct SizeDraw {
    double m = 0.0;
    double cr = 0.0, gr = 0.0, grcr = 0.0;
    bool negative_cr = false;
};

SizeDraw size_draw(const Graph& g, const WalkTrace& x, const WalkTrace& y, double r, const Extraction& ex) {
    std::vector<NodeId> seed(x.seed_sample);
    seed.insert(seed.end(), y.seed_sample.begin(), y.seed_sample.end());
    const SampleGraph sg(g, seed);
    SizeDraw d;
    const auto stat = count_collisions(x, y, sg, r, ex);
    const WalkTrace both[] = {x, y};
    const double dbar = weighted_mean_degree(both, sg, r, ex);
    d.m = stat.m;
    d.gr = estimate_size_gr(dbar, g.node_count()).edges;
    if (stat.m > 0.0) {
        const auto cr = estimate_size_cr(stat, r, g.node_count());
        d.cr = cr.edges;
        d.negative_cr = cr.negative;
        d.grcr = estimate_size_grcr(stat, dbar, r).edges;
    } else {
        d.cr = d.grcr = std::numeric_limits<double>::quiet_NaN();
    }
    return d;
}

double pick(const SizeDraw& d, SizeMethod m) {
    switch (m) {
        case SizeMethod::cr: return d.cr;
        case SizeMethod::gr: return d.gr;
        case SizeMethod::grcr: return d.grcr;
    }
    return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

namespace {

CampaignResult<SizeRow> size_for_init(const CampaignConfig& cfg, const Graph& g) {
    validate(cfg);
    CampaignResult<SizeRow> res;
    res.table.header = header({"init", "n", "r", "w", "estimator", "replicates", "valid", "failures", "negatives",
                               "mean", "sd", "se", "mean_m", "truth"});
    const auto& init = cfg.inits.front();
    const double truth = double(g.edge_count());
    for (auto n : cfg.length_grid)
        for (double r : cfg.r_grid)
            for (double w : cfg.w_grid) {
                const auto wc = walk_config(r, w, n - 1, init);
                validate(wc, g.node_count());
                std::vector<SizeDraw> draws(cfg.replicates);
                parallel_for(cfg.replicates, cfg.threads, [&](std::size_t k) {
                    auto rx = make_rng(cfg.seed, {3, init_key(init), bits(r), bits(w), n, k, 0});
                    auto ry = make_rng(cfg.seed, {3, init_key(init), bits(r), bits(w), n, k, 1});
                    const auto x = run_walk(g, wc, rx, burn_in_for(cfg, init));
                    const auto y = run_walk(g, wc, ry, burn_in_for(cfg, init));
                    draws[k] = size_draw(g, x, y, r, cfg.extraction);
                });
                std::vector<double> ms(cfg.replicates);
                for (std::size_t k = 0; k < draws.size(); ++k) ms[k] = draws[k].m;
                for (auto method : cfg.estimators) {
                    std::vector<double> vals(cfg.replicates);
                    std::size_t negatives = 0;
                    for (std::size_t k = 0; k < draws.size(); ++k) {
                        vals[k] = pick(draws[k], method);
                        if (method == SizeMethod::cr && draws[k].negative_cr) ++negatives;
                    }
                    const auto t = tally(vals);
                    SizeRow out{n, r, w, method, cfg.replicates, t.valid, t.failures, negatives,
                                t.summary.mean, t.summary.sd, t.summary.se, mean_of(ms), truth};
                    res.max_failure_rate =
                        std::max(res.max_failure_rate, double(t.failures) / double(cfg.replicates));
                    res.table.rows.push_back(row(cfg, to_string(init), n, r, w, to_string(method), out.replicates,
                                                 out.valid, out.failures, out.negatives, out.mean, out.sd, out.se,
                                                 out.mean_collisions, out.truth));
                    res.rows.push_back(out);
                }
            }
    return res;
}

}  // namespace

CampaignResult<SizeRow> run_size(const CampaignConfig& cfg, const Graph& g) {
    return each_init<SizeRow>(cfg, [&](const CampaignConfig& one) { return size_for_init(one, g); });
}

// ---------------------------------------------------------------------------

namespace {

CampaignResult<MotifTotalRow> motif_total_for_init(const CampaignConfig& cfg, const Graph& g) {
    validate(cfg);
    CampaignResult<MotifTotalRow> res;
    res.table.header = header({"quantity", "motif", "weights", "normalization", "combine", "init", "T", "r", "w",
                               "replicates", "valid", "failures", "mean", "sd", "se", "truth"});
    const auto& init = cfg.inits.front();
    const auto product = enumerate_motifs(g, cfg.motif, MotifValue::product);
    const auto ones = enumerate_motifs(g, cfg.motif, MotifValue::ones);
    const auto totals = enumerate_motifs(g, cfg.motif, cfg.total_values);
    const double theta_ones = graph_total(ones);
    const double ratio_truth = theta_ones > 0 ? graph_total(product) / theta_ones : std::numeric_limits<double>::quiet_NaN();
    const double total_truth = graph_total(totals);
    const double nan = std::numeric_limits<double>::quiet_NaN();

    const TotalOptions num{cfg.motif, MotifValue::product, cfg.weights, true, cfg.combine};
    const TotalOptions den{cfg.motif, MotifValue::ones, cfg.weights, true, cfg.combine};
    const TotalOptions tot{cfg.motif, cfg.total_values, cfg.weights, true, cfg.combine};

    const auto emit = [&](const char* quantity, Normalization norm, std::size_t len, double r, double w,
                          std::size_t b, const std::vector<double>& vals, double truth) {
        const auto t = tally(vals);
        MotifTotalRow out{quantity, norm, len, r, w, b, t.valid, t.failures, t.summary.mean, t.summary.sd,
                          t.summary.se, truth};
        res.max_failure_rate = std::max(res.max_failure_rate, double(t.failures) / double(b));
        res.table.rows.push_back(row(cfg, quantity, to_string(cfg.motif), to_string(cfg.weights), to_string(norm),
                                     to_string(cfg.combine), to_string(init), len, r, w, b, out.valid, out.failures,
                                     out.mean, out.sd, out.se, out.truth));
        res.rows.push_back(out);
    };

    for (auto len : cfg.length_grid)
        for (double r : cfg.r_grid)
            for (double w : cfg.w_grid) {
                const auto wc = walk_config(r, w, len, init);
                validate(wc, g.node_count());
                const std::size_t burn = burn_in_for(cfg, init);

                std::vector<double> ratio(cfg.replicates);
                parallel_for(cfg.replicates, cfg.threads, [&](std::size_t k) {
                    auto rng = make_rng(cfg.seed, {4, init_key(init), bits(r), bits(w), len, k});
                    const auto tr = run_walk(g, wc, rng, burn);
                    const SampleGraph sg(g, tr.seed_sample);
                    const S3pModel model(sg, wc, Normalization::unnormalized);
                    try {
                        ratio[k] = estimate_ratio(tr, sg, num, den, model);
                    } catch (const NoObservationError&) {
                        ratio[k] = nan;
                    }
                });
                emit("ratio", Normalization::unnormalized, len, r, w, cfg.replicates, ratio, ratio_truth);

                const std::size_t b = cfg.total_replicates;
                const std::size_t modes = cfg.normalizations.size();
                std::vector<double> total(b * modes);
                parallel_for(b, cfg.threads, [&](std::size_t k) {
                    auto rx = make_rng(cfg.seed, {5, init_key(init), bits(r), bits(w), len, k, 0});
                    auto ry = make_rng(cfg.seed, {5, init_key(init), bits(r), bits(w), len, k, 1});
                    const auto x = run_walk(g, wc, rx, burn);
                    const auto y = run_walk(g, wc, ry, burn);
                    const SampleGraph sg(g, x.seed_sample);
                    for (std::size_t j = 0; j < modes; ++j) {
                        double size = 0.0;
                        const auto norm = cfg.normalizations[j];
                        if (norm == Normalization::exact) size = double(g.edge_count());
                        if (norm == Normalization::estimated) {
                            Extraction all;
                            size = pick(size_draw(g, x, y, r, all), cfg.normalizing_estimator);
                        }
                        double v = nan;
                        if (!std::isnan(size)) {
                            try {
                                const S3pModel model(sg, wc, norm, size);
                                v = estimate_total(x, sg, tot, model).value;
                            } catch (const NoObservationError&) {
                            } catch (const ConfigError&) {
                                // non-positive 2R + rN from a negative R hat
                            }
                        }
                        total[k * modes + j] = v;
                    }
                });
                for (std::size_t j = 0; j < modes; ++j) {
                    std::vector<double> vals(b);
                    for (std::size_t k = 0; k < b; ++k) vals[k] = total[k * modes + j];
                    emit("total", cfg.normalizations[j], len, r, w, b, vals, total_truth);
                }
            }
    return res;
}

}  // namespace

CampaignResult<MotifTotalRow> run_motif_total(const CampaignConfig& cfg, const Graph& g) {
    return each_init<MotifTotalRow>(cfg, [&](const CampaignConfig& one) { return motif_total_for_init(one, g); });
}

// ---------------------------------------------------------------------------

CampaignOutput run_campaign(const CampaignConfig& cfg) {
    validate(cfg);
    const Graph g = load_campaign_graph(cfg);
    const auto wrap = [](auto result) { return CampaignOutput{result.table.str(), result.max_failure_rate}; };
    switch (cfg.experiment) {
        case Experiment::stationary_check: return wrap(run_stationary_check(cfg, g));
        case Experiment::convergence: return wrap(run_convergence(cfg, g));
        case Experiment::prevalence: return wrap(run_prevalence(cfg, g));
        case Experiment::size: return wrap(run_size(cfg, g));
        case Experiment::motif_total: return wrap(run_motif_total(cfg, g));
    }
    throw ConfigError("unknown experiment");
}

}  // namespace lrw
